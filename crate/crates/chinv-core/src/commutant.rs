//! The endomorphism ring `End(V, f)` of operators commuting with the shift,
//! its unit group `Aut(V, f)`, orbits, hulls, and stability classification.
//!
//! An f-endomorphism is determined by the images of the block generators,
//! subject to `image(u_j) in V[f^{t_j}]`. The ring has GF(2)-dimension
//! `d = sum min(t_i, t_j)`, so brute-force sweeps touch `2^d` elements and
//! are guarded by [`Caps::max_endo_bits`]. The `*_spanning` variants avoid
//! the sweep: stability under every automorphism is equivalent to stability
//! under a fixed spanning set of the GF(2)-span of `Aut(V, f)`, namely the
//! standard basis of `End(V, f)` minus the projections onto blocks with
//! unrepeated exponent. The sweep and spanning routes are cross-checked
//! exhaustively in the tests.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Hypothesis, Result};
use crate::gf2::{Mat2, SpanBuilder, Subspace, Vec2};
use crate::modspace::SpaceSpec;
use crate::Caps;

/// GF(2)-dimension of `End(V, f)`.
pub fn commutant_dim(spec: &SpaceSpec) -> usize {
    let t = spec.exponents();
    t.iter()
        .flat_map(|&ti| t.iter().map(move |&tj| ti.min(tj)))
        .sum()
}

/// An operator commuting with `f`, stored as the images of the block
/// generators: `images[j]` is the image of `u_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FEndo {
    images: Vec<Vec2>,
}

impl FEndo {
    /// Builds an endomorphism from generator images, validating that
    /// `images[j]` lies in `V[f^{t_j}]`.
    pub fn new(spec: &SpaceSpec, images: Vec<Vec2>) -> Result<Self> {
        if images.len() != spec.block_count() {
            return Err(Error::TupleLength {
                expected: spec.block_count(),
                got: images.len(),
            });
        }
        let t = spec.exponents();
        for (j, img) in images.iter().enumerate() {
            if img.len() != spec.dim() {
                return Err(Error::LengthMismatch {
                    expected: spec.dim(),
                    got: img.len(),
                });
            }
            if spec.exponent(img) > t[j] {
                return Err(Error::EndoImage {
                    block: j,
                    exponent: t[j],
                });
            }
        }
        Ok(FEndo { images })
    }

    pub fn identity(spec: &SpaceSpec) -> Self {
        let images = (0..spec.block_count())
            .map(|j| spec.generator(j).expect("in range"))
            .collect();
        FEndo { images }
    }

    pub fn images(&self) -> &[Vec2] {
        &self.images
    }

    /// Applies the endomorphism: linear extension of the generator images.
    pub fn apply(&self, spec: &SpaceSpec, x: &Vec2) -> Vec2 {
        assert_eq!(x.len(), spec.dim(), "length mismatch");
        let mut out = Vec2::zero(spec.dim());
        let mut shifted = Vec2::zero(spec.dim());
        for c in x.iter_ones() {
            let (j, i) = spec.block_of(c);
            spec.apply_f_pow_into(&self.images[j], i, &mut shifted);
            out ^= &shifted;
        }
        out
    }

    /// Image of a whole subspace.
    pub fn apply_subspace(&self, spec: &SpaceSpec, x: &Subspace) -> Subspace {
        let rows: Vec<Vec2> = x.basis().iter().map(|b| self.apply(spec, b)).collect();
        Subspace::from_spanning(spec.dim(), &rows).expect("same ambient")
    }

    /// Whether the endomorphism maps `x` into itself.
    pub fn stabilizes(&self, spec: &SpaceSpec, x: &Subspace) -> bool {
        x.basis()
            .iter()
            .all(|b| x.contains_vector(&self.apply(spec, b)).expect("same ambient"))
    }

    /// Matrix in the standard basis; row `c` is the image of basis vector `c`.
    pub fn matrix(&self, spec: &SpaceSpec) -> Mat2 {
        let n = spec.dim();
        let mut rows = Vec::with_capacity(n);
        for (j, img) in self.images.iter().enumerate() {
            let mut row = img.clone();
            for _ in spec.block_range(j) {
                rows.push(row.clone());
                row = spec.apply_f(&row);
            }
        }
        Mat2::new(rows, n).expect("consistent lengths")
    }

    pub fn is_automorphism(&self, spec: &SpaceSpec) -> bool {
        self.matrix(spec).rank() == spec.dim()
    }

    /// Composition `self . other`: apply `other` first.
    pub fn compose(&self, spec: &SpaceSpec, other: &FEndo) -> FEndo {
        let images = other
            .images
            .iter()
            .map(|img| self.apply(spec, img))
            .collect();
        FEndo { images }
    }

    /// Inverse, if the endomorphism is an automorphism. The inverse of an
    /// automorphism commutes with `f` again, so it is returned as an `FEndo`.
    pub fn inverse(&self, spec: &SpaceSpec) -> Option<FEndo> {
        let n = spec.dim();
        let m = self.matrix(spec);
        let ident = Mat2::identity(n);
        let aug_rows: Vec<Vec2> = (0..n).map(|r| m.row(r).concat(ident.row(r))).collect();
        let aug = Mat2::new(aug_rows, 2 * n).expect("consistent lengths").rref();
        if aug.row_count() < n {
            return None;
        }
        for r in 0..n {
            let left = aug.row(r).extract(0..n);
            if left.lowest_set_bit() != Some(r) || left.count_ones() != 1 {
                return None;
            }
        }
        let images = (0..spec.block_count())
            .map(|j| aug.row(spec.block_range(j).start).extract(n..2 * n))
            .collect();
        Some(FEndo { images })
    }

    /// Reads an endomorphism off its matrix (row `c` = image of basis `c`),
    /// rejecting matrices that do not commute with the shift.
    pub fn from_matrix(spec: &SpaceSpec, m: &Mat2) -> Result<FEndo> {
        let n = spec.dim();
        if m.row_count() != n || m.col_count() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: if m.row_count() != n {
                    m.row_count()
                } else {
                    m.col_count()
                },
            });
        }
        let images: Vec<Vec2> = (0..spec.block_count())
            .map(|j| m.row(spec.block_range(j).start).clone())
            .collect();
        let endo = FEndo::new(spec, images).map_err(|_| Error::NotCommutant)?;
        if endo.matrix(spec) != *m {
            return Err(Error::NotCommutant);
        }
        Ok(endo)
    }
}

/// The shift itself as an element of `End(V, f)`.
pub fn f_endo(spec: &SpaceSpec) -> FEndo {
    let images = (0..spec.block_count())
        .map(|j| spec.apply_f(&spec.generator(j).expect("in range")))
        .collect();
    FEndo { images }
}

/// Whether `f x` stays in `x`.
pub fn f_stable(spec: &SpaceSpec, x: &Subspace) -> bool {
    assert_eq!(x.ambient(), spec.dim(), "ambient mismatch");
    x.basis()
        .iter()
        .all(|b| x.contains_vector(&spec.apply_f(b)).expect("same ambient"))
}

/// Standard basis of `End(V, f)`: for each ordered block pair `(i, j)` the
/// maps `u_j -> f^l u_i` with `max(0, t_i - t_j) <= l < t_i`, all other
/// generators to zero. Ordered lexicographically by `(i, j, l)`; the length
/// is [`commutant_dim`].
pub fn endo_basis(spec: &SpaceSpec) -> Vec<FEndo> {
    let m = spec.block_count();
    let t = spec.exponents();
    let mut out = Vec::with_capacity(commutant_dim(spec));
    for i in 0..m {
        for j in 0..m {
            for l in t[i].saturating_sub(t[j])..t[i] {
                let mut images = vec![Vec2::zero(spec.dim()); m];
                images[j] = spec.basis_vector(i, l).expect("in range");
                out.push(FEndo { images });
            }
        }
    }
    out
}

/// Spanning set of the GF(2)-span of `Aut(V, f)` inside `End(V, f)`: the
/// standard basis minus the projections `u_j -> u_j` onto blocks with
/// unrepeated exponent. A subspace is stable under every automorphism
/// exactly when it is stable under every member of this set.
pub fn aut_span_basis(spec: &SpaceSpec) -> Vec<FEndo> {
    let m = spec.block_count();
    let t = spec.exponents();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for l in t[i].saturating_sub(t[j])..t[i] {
                if i == j && l == 0 && spec.is_unrepeated(i) {
                    continue;
                }
                let mut images = vec![Vec2::zero(spec.dim()); m];
                images[j] = spec.basis_vector(i, l).expect("in range");
                out.push(FEndo { images });
            }
        }
    }
    out
}

/// Reusable sweep state: a cursor over all `2^d` endomorphisms indexed by a
/// `u64`. Block 0 owns the most significant chunk of index bits, so an index
/// range splits into contiguous sub-sweeps. Basis rows of the kernels
/// `V[f^{t_j}]` are in canonical echelon order, making the indexing
/// deterministic.
pub(crate) struct Sweep<'a> {
    spec: &'a SpaceSpec,
    chunk_bases: Vec<Vec<Vec2>>,
    shifts: Vec<u32>,
    bits: usize,
    images: Vec<Vec2>,
    rows: Vec<Vec2>,
    elim: Vec<Vec2>,
    elim_pivots: Vec<(usize, usize)>,
    scratch: Vec2,
}

impl<'a> Sweep<'a> {
    pub fn new(spec: &'a SpaceSpec) -> Self {
        let n = spec.dim();
        let t = spec.exponents();
        let chunk_bases: Vec<Vec<Vec2>> = (0..spec.block_count())
            .map(|j| spec.kernel_power(t[j]).basis().to_vec())
            .collect();
        let mut shifts = vec![0u32; chunk_bases.len()];
        let mut acc = 0u32;
        for j in (0..chunk_bases.len()).rev() {
            shifts[j] = acc;
            acc += chunk_bases[j].len() as u32;
        }
        let bits = acc as usize;
        assert!(bits < 64, "commutant too large to sweep");
        debug_assert_eq!(bits, commutant_dim(spec));
        Sweep {
            spec,
            chunk_bases,
            shifts,
            bits,
            images: vec![Vec2::zero(n); t.len()],
            rows: vec![Vec2::zero(n); n],
            elim: vec![Vec2::zero(n); n],
            elim_pivots: Vec::with_capacity(n),
            scratch: Vec2::zero(n),
        }
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Loads the endomorphism with the given index and rebuilds the full
    /// matrix rows (row `c` = image of basis vector `c`).
    pub fn set_index(&mut self, idx: u64) {
        debug_assert!(idx < 1u64 << self.bits);
        for j in 0..self.chunk_bases.len() {
            let d = self.chunk_bases[j].len();
            let sub = (idx >> self.shifts[j]) & ((1u64 << d) - 1);
            self.images[j].clear();
            for (s, row) in self.chunk_bases[j].iter().enumerate() {
                if sub >> s & 1 == 1 {
                    self.images[j] ^= row;
                }
            }
            let off = self.spec.block_range(j).start;
            self.rows[off].copy_from(&self.images[j]);
            for i in 1..self.spec.exponents()[j] {
                let (head, tail) = self.rows.split_at_mut(off + i);
                self.spec.apply_f_pow_into(&head[off + i - 1], 1, &mut tail[0]);
            }
        }
    }

    pub fn apply_into(&self, x: &Vec2, out: &mut Vec2) {
        out.clear();
        for c in x.iter_ones() {
            *out ^= &self.rows[c];
        }
    }

    /// Whether the current endomorphism maps `x` into itself.
    pub fn stabilizes(&mut self, x: &Subspace) -> bool {
        for b in x.basis() {
            self.scratch.clear();
            for c in b.iter_ones() {
                self.scratch ^= &self.rows[c];
            }
            if !x.reduces_to_zero(&mut self.scratch) {
                return false;
            }
        }
        true
    }

    /// Rank test on the current matrix, allocation-free. Stored pivot rows
    /// are reduced in ascending pivot order, which keeps the membership test
    /// sound for rows in lowest-set-bit pivot form.
    pub fn invertible(&mut self) -> bool {
        let n = self.rows.len();
        self.elim_pivots.clear();
        for r in 0..n {
            let (head, tail) = self.elim.split_at_mut(r);
            let y = &mut tail[0];
            y.copy_from(&self.rows[r]);
            for &(p, slot) in &self.elim_pivots {
                if y.get(p) {
                    *y ^= &head[slot];
                }
            }
            match y.lowest_set_bit() {
                None => return false,
                Some(p) => {
                    let at = self.elim_pivots.partition_point(|&(q, _)| q < p);
                    self.elim_pivots.insert(at, (p, r));
                }
            }
        }
        true
    }

    pub fn to_endo(&self) -> FEndo {
        FEndo {
            images: self.images.clone(),
        }
    }
}

pub(crate) fn check_bits(spec: &SpaceSpec, caps: &Caps) -> Result<usize> {
    let bits = commutant_dim(spec);
    if bits > caps.max_endo_bits {
        return Err(Error::ResourceCap {
            what: "commutant sweep bits",
            needed: bits,
            cap: caps.max_endo_bits,
        });
    }
    Ok(bits)
}

/// Iterator over endomorphisms by sweep index.
pub struct EndoStream<'a> {
    sweep: Sweep<'a>,
    next: u64,
    end: u64,
}

impl Iterator for EndoStream<'_> {
    type Item = FEndo;

    fn next(&mut self) -> Option<FEndo> {
        if self.next == self.end {
            return None;
        }
        self.sweep.set_index(self.next);
        self.next += 1;
        Some(self.sweep.to_endo())
    }
}

/// Streams all `2^d` endomorphisms in index order.
pub fn endo_stream<'a>(spec: &'a SpaceSpec, caps: &Caps) -> Result<EndoStream<'a>> {
    let bits = check_bits(spec, caps)?;
    Ok(EndoStream {
        sweep: Sweep::new(spec),
        next: 0,
        end: 1u64 << bits,
    })
}

/// Streams the endomorphisms with indices in `range`; ranges partition the
/// full sweep, so work can be split across workers.
pub fn endo_stream_range<'a>(
    spec: &'a SpaceSpec,
    range: std::ops::Range<u64>,
    caps: &Caps,
) -> Result<EndoStream<'a>> {
    let bits = check_bits(spec, caps)?;
    assert!(range.end <= 1u64 << bits, "range exceeds sweep size");
    assert!(range.start <= range.end, "backwards range");
    Ok(EndoStream {
        sweep: Sweep::new(spec),
        next: range.start,
        end: range.end,
    })
}

/// Streams the automorphisms, in sweep index order.
pub fn auto_stream<'a>(
    spec: &'a SpaceSpec,
    caps: &Caps,
) -> Result<impl Iterator<Item = FEndo> + 'a> {
    Ok(endo_stream(spec, caps)?.filter(move |e| e.is_automorphism(spec)))
}

/// The orbit of a vector under `Aut(V, f)`, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSet {
    base: Vec2,
    elements: Vec<Vec2>,
}

impl OrbitSet {
    fn from_set(base: Vec2, set: BTreeSet<Vec2>) -> Self {
        debug_assert!(set.contains(&base));
        OrbitSet {
            base,
            elements: set.into_iter().collect(),
        }
    }

    /// The affine set `base + offsets`.
    pub fn from_affine(base: &Vec2, offsets: &Subspace) -> Result<Self> {
        if base.len() != offsets.ambient() {
            return Err(Error::LengthMismatch {
                expected: offsets.ambient(),
                got: base.len(),
            });
        }
        let set: BTreeSet<Vec2> = offsets
            .elements()
            .map(|mut o| {
                o ^= base;
                o
            })
            .collect();
        Ok(OrbitSet::from_set(base.clone(), set))
    }

    pub fn base(&self) -> &Vec2 {
        &self.base
    }

    /// Sorted orbit elements.
    pub fn elements(&self) -> &[Vec2] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: &Vec2) -> bool {
        self.elements.binary_search(v).is_ok()
    }
}

/// Orbit of `x` under `Aut(V, f)` by sweeping the commutant. The rank test
/// runs only for images not already collected, which keeps the sweep fast.
pub fn orbit(spec: &SpaceSpec, x: &Vec2, caps: &Caps) -> Result<OrbitSet> {
    if x.len() != spec.dim() {
        return Err(Error::LengthMismatch {
            expected: spec.dim(),
            got: x.len(),
        });
    }
    let bits = check_bits(spec, caps)?;
    let mut sweep = Sweep::new(spec);
    let mut set = BTreeSet::new();
    set.insert(x.clone());
    let mut y = Vec2::zero(spec.dim());
    for idx in 0..1u64 << bits {
        sweep.set_index(idx);
        sweep.apply_into(x, &mut y);
        if set.contains(&y) {
            continue;
        }
        if sweep.invertible() {
            set.insert(y.clone());
        }
    }
    Ok(OrbitSet::from_set(x.clone(), set))
}

/// Closed form for the orbit of `f^s u_i` when the exponent `t_i` is
/// unrepeated: the affine set
/// `f^s u_i + f^{s+1}<u_i> + sum_{j != i} f^s (<u_j> cap V[f^{t_i}])`.
pub fn basis_orbit_affine(spec: &SpaceSpec, i: usize, s: usize) -> Result<OrbitSet> {
    let base = spec.basis_vector(i, s)?;
    if !spec.is_unrepeated(i) {
        return Err(Hypothesis::NotUnrepeated { index: i }.into());
    }
    let t = spec.exponents();
    let mut rows = Vec::new();
    for l in s + 1..t[i] {
        rows.push(spec.basis_vector(i, l).expect("in range"));
    }
    for j in 0..spec.block_count() {
        if j == i {
            continue;
        }
        for l in t[j].saturating_sub(t[i]) + s..t[j] {
            rows.push(spec.basis_vector(j, l).expect("in range"));
        }
    }
    let offsets = Subspace::from_spanning(spec.dim(), &rows)?;
    OrbitSet::from_affine(&base, &offsets)
}

/// Orbit of the generator `u_i` (unrepeated exponent) in closed form.
pub fn generator_orbit_affine(spec: &SpaceSpec, i: usize) -> Result<OrbitSet> {
    basis_orbit_affine(spec, i, 0)
}

/// Stability summary of a subspace. The flags form a chain:
/// hyperinvariant implies characteristic implies invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub invariant: bool,
    pub characteristic: bool,
    pub hyperinvariant: bool,
}

impl Classification {
    const NONE: Classification = Classification {
        invariant: false,
        characteristic: false,
        hyperinvariant: false,
    };
}

/// Classifies by brute-force sweep over all `2^d` endomorphisms.
pub fn classify(spec: &SpaceSpec, x: &Subspace, caps: &Caps) -> Result<Classification> {
    if x.ambient() != spec.dim() {
        return Err(Error::AmbientMismatch {
            left: x.ambient(),
            right: spec.dim(),
        });
    }
    if !f_stable(spec, x) {
        return Ok(Classification::NONE);
    }
    let bits = check_bits(spec, caps)?;
    let mut sweep = Sweep::new(spec);
    let mut characteristic = true;
    let mut hyperinvariant = true;
    for idx in 0..1u64 << bits {
        sweep.set_index(idx);
        if sweep.stabilizes(x) {
            continue;
        }
        hyperinvariant = false;
        if characteristic && sweep.invertible() {
            characteristic = false;
        }
        if !characteristic {
            break;
        }
    }
    Ok(Classification {
        invariant: true,
        characteristic,
        hyperinvariant,
    })
}

/// Precomputed spanning data for the sweep-free classification and hulls.
pub struct SpanningBasis {
    f: FEndo,
    basis: Vec<FEndo>,
    aut_span: Vec<usize>,
    unrepeated_projections: Vec<usize>,
}

impl SpanningBasis {
    pub fn new(spec: &SpaceSpec) -> Self {
        let m = spec.block_count();
        let t = spec.exponents();
        let basis = endo_basis(spec);
        let mut aut_span = Vec::new();
        let mut unrepeated_projections = Vec::new();
        let mut k = 0;
        for i in 0..m {
            for j in 0..m {
                for l in t[i].saturating_sub(t[j])..t[i] {
                    if i == j && l == 0 && spec.is_unrepeated(i) {
                        unrepeated_projections.push(k);
                    } else {
                        aut_span.push(k);
                    }
                    let _ = l;
                    k += 1;
                }
            }
        }
        debug_assert_eq!(k, basis.len());
        SpanningBasis {
            f: f_endo(spec),
            basis,
            aut_span,
            unrepeated_projections,
        }
    }

    /// Exact classification without a sweep: a subspace is characteristic
    /// iff it is f-stable and stable under the automorphism span, and
    /// hyperinvariant iff additionally stable under the remaining
    /// projections (equivalently, under the whole standard basis).
    pub fn classify(&self, spec: &SpaceSpec, x: &Subspace) -> Classification {
        assert_eq!(x.ambient(), spec.dim(), "ambient mismatch");
        if !f_stable(spec, x) {
            return Classification::NONE;
        }
        let characteristic = self
            .aut_span
            .iter()
            .all(|&k| self.basis[k].stabilizes(spec, x));
        let hyperinvariant = characteristic
            && self
                .unrepeated_projections
                .iter()
                .all(|&k| self.basis[k].stabilizes(spec, x));
        Classification {
            invariant: true,
            characteristic,
            hyperinvariant,
        }
    }

    /// Smallest characteristic subspace containing `x`: closure under `f`
    /// and the automorphism span.
    pub fn characteristic_hull(&self, spec: &SpaceSpec, x: &Subspace) -> Subspace {
        let maps: Vec<&FEndo> = std::iter::once(&self.f)
            .chain(self.aut_span.iter().map(|&k| &self.basis[k]))
            .collect();
        closure(spec, x, &maps)
    }

    /// Smallest hyperinvariant subspace containing `x`: closure under the
    /// standard basis (which spans `f` as well).
    pub fn hyperinvariant_hull(&self, spec: &SpaceSpec, x: &Subspace) -> Subspace {
        let maps: Vec<&FEndo> = self.basis.iter().collect();
        closure(spec, x, &maps)
    }
}

fn closure(spec: &SpaceSpec, x: &Subspace, maps: &[&FEndo]) -> Subspace {
    assert_eq!(x.ambient(), spec.dim(), "ambient mismatch");
    let mut b = SpanBuilder::new(spec.dim());
    let mut work: Vec<Vec2> = Vec::new();
    for row in x.basis() {
        if b.insert(row) {
            work.push(row.clone());
        }
    }
    while let Some(v) = work.pop() {
        for map in maps {
            let y = map.apply(spec, &v);
            if b.insert(&y) {
                work.push(y);
            }
        }
    }
    Subspace::from_builder(b)
}

/// Sweep-free classification; see [`SpanningBasis::classify`].
pub fn classify_spanning(spec: &SpaceSpec, x: &Subspace) -> Classification {
    SpanningBasis::new(spec).classify(spec, x)
}

/// Sweep-free characteristic hull; see [`SpanningBasis::characteristic_hull`].
pub fn characteristic_hull_spanning(spec: &SpaceSpec, x: &Subspace) -> Subspace {
    SpanningBasis::new(spec).characteristic_hull(spec, x)
}

/// Sweep-free hyperinvariant hull; see [`SpanningBasis::hyperinvariant_hull`].
pub fn hyperinvariant_hull_spanning(spec: &SpaceSpec, x: &Subspace) -> Subspace {
    SpanningBasis::new(spec).hyperinvariant_hull(spec, x)
}

/// Smallest characteristic subspace containing `x`, by sweeping all
/// automorphisms and then closing under `f`.
pub fn characteristic_hull(spec: &SpaceSpec, x: &Subspace, caps: &Caps) -> Result<Subspace> {
    if x.ambient() != spec.dim() {
        return Err(Error::AmbientMismatch {
            left: x.ambient(),
            right: spec.dim(),
        });
    }
    let bits = check_bits(spec, caps)?;
    let mut sweep = Sweep::new(spec);
    let mut b = SpanBuilder::new(spec.dim());
    for row in x.basis() {
        b.insert(row);
    }
    let mut y = Vec2::zero(spec.dim());
    for idx in 0..1u64 << bits {
        sweep.set_index(idx);
        let mut grows = false;
        for row in x.basis() {
            sweep.apply_into(row, &mut y);
            if !b.contains(&y) {
                grows = true;
                break;
            }
        }
        if !grows || !sweep.invertible() {
            continue;
        }
        for row in x.basis() {
            sweep.apply_into(row, &mut y);
            b.insert(&y);
        }
    }
    let mut work: Vec<Vec2> = b.rows().to_vec();
    while let Some(v) = work.pop() {
        let fv = spec.apply_f(&v);
        if b.insert(&fv) {
            work.push(fv);
        }
    }
    Ok(Subspace::from_builder(b))
}

/// Smallest hyperinvariant subspace containing `x`, by sweeping the whole
/// commutant (which contains `f`, so no extra closure is needed).
pub fn hyperinvariant_hull(spec: &SpaceSpec, x: &Subspace, caps: &Caps) -> Result<Subspace> {
    if x.ambient() != spec.dim() {
        return Err(Error::AmbientMismatch {
            left: x.ambient(),
            right: spec.dim(),
        });
    }
    let bits = check_bits(spec, caps)?;
    let mut sweep = Sweep::new(spec);
    let mut b = SpanBuilder::new(spec.dim());
    for row in x.basis() {
        b.insert(row);
    }
    let mut y = Vec2::zero(spec.dim());
    for idx in 0..1u64 << bits {
        sweep.set_index(idx);
        for row in x.basis() {
            sweep.apply_into(row, &mut y);
            b.insert(&y);
        }
    }
    let hull = Subspace::from_builder(b);
    debug_assert!(f_stable(spec, &hull));
    Ok(hull)
}

/// The automorphism sending `u_i` to `x` and fixing the other generators.
/// Requires `x` to be a generator of exponent `t_i` that can actually
/// replace `u_i` (automatic when `t_i` is unrepeated).
pub fn exchange_automorphism(spec: &SpaceSpec, i: usize, x: &Vec2) -> Result<FEndo> {
    if i >= spec.block_count() {
        return Err(Error::BlockIndex {
            index: i,
            blocks: spec.block_count(),
        });
    }
    let expected = spec.exponents()[i];
    if spec.is_generator(x) != Some(expected) {
        return Err(Hypothesis::NotGenerator { expected }.into());
    }
    let mut images: Vec<Vec2> = (0..spec.block_count())
        .map(|j| spec.generator(j).expect("in range"))
        .collect();
    images[i] = x.clone();
    let endo = FEndo::new(spec, images)?;
    if !endo.is_automorphism(spec) {
        return Err(Hypothesis::NotGenerator { expected }.into());
    }
    Ok(endo)
}
