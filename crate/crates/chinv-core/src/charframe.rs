//! Intervals `[W(r), W(mu)]` of characteristic subspaces, echelon-matrix
//! classification of their elements, extensions of partial tuples, the
//! Shoda criterion, and constructions of characteristic subspaces that are
//! not hyperinvariant.
//!
//! For an admissible `mu` and an index set `J` of unrepeated blocks subject
//! to strict chain and gap conditions, every subspace between `W(r)` and
//! `W(mu)` (where `r = mu + sum of e_j over J`) is characteristic, and the
//! interval is parametrised by the subspaces of a `k`-dimensional
//! complement `D` with `W(mu) = W(r) ⊕ D`.

use std::collections::BTreeMap;

use crate::commutant::{
    characteristic_hull_spanning, check_bits, classify_spanning, hyperinvariant_hull_spanning,
    FEndo, Sweep,
};
use crate::error::{Error, Hypothesis, Result};
use crate::gf2::{enumerate_subspaces, Mat2, Subspace, Vec2};
use crate::hyperlattice::{w_subspace, RTuple};
use crate::modspace::SpaceSpec;
use crate::Caps;

fn validate_index_set(spec: &SpaceSpec, j_set: &[usize]) -> Result<()> {
    if j_set.is_empty() {
        return Err(Hypothesis::EmptyIndexSet.into());
    }
    let increasing = j_set.windows(2).all(|w| w[0] < w[1]);
    if !increasing || j_set[j_set.len() - 1] >= spec.block_count() {
        return Err(Hypothesis::BadIndexSet.into());
    }
    Ok(())
}

/// Values prescribed on an index set `J = {i_1 < ... < i_k}`, validated
/// against the weak chains `mu_{i_1} <= ... <= mu_{i_k}` and
/// `t_{i_1} - mu_{i_1} <= ... <= t_{i_k} - mu_{i_k}`. Construction paths
/// additionally require [`PartialTuple::validate_strict`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTuple {
    j_set: Vec<usize>,
    values: Vec<usize>,
}

impl PartialTuple {
    pub fn new(spec: &SpaceSpec, j_set: Vec<usize>, values: Vec<usize>) -> Result<Self> {
        validate_index_set(spec, &j_set)?;
        if values.len() != j_set.len() {
            return Err(Error::TupleLength {
                expected: j_set.len(),
                got: values.len(),
            });
        }
        let t = spec.exponents();
        for (s, &j) in j_set.iter().enumerate() {
            if values[s] > t[j] {
                return Err(Hypothesis::ValueRange {
                    index: j,
                    value: values[s],
                    exponent: t[j],
                }
                .into());
            }
        }
        for s in 0..j_set.len().saturating_sub(1) {
            let (p, q) = (j_set[s], j_set[s + 1]);
            let (vp, vq) = (values[s], values[s + 1]);
            if vp > vq {
                return Err(Hypothesis::WeakMuChain { p, q, vp, vq }.into());
            }
            if t[p] - vp > t[q] - vq {
                return Err(Hypothesis::WeakCoexponentChain { p, q }.into());
            }
        }
        Ok(PartialTuple { j_set, values })
    }

    /// Restriction of an admissible tuple to `j_set`; admissibility of `mu`
    /// keeps the restricted chains weakly valid.
    pub fn restriction(spec: &SpaceSpec, mu: &RTuple, j_set: &[usize]) -> Result<Self> {
        validate_index_set(spec, j_set)?;
        let values = j_set.iter().map(|&j| mu[j]).collect();
        Ok(PartialTuple {
            j_set: j_set.to_vec(),
            values,
        })
    }

    pub fn j_set(&self) -> &[usize] {
        &self.j_set
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The strict chains `mu_{i_1} < ... < mu_{i_k}` and
    /// `0 < t_{i_1} - mu_{i_1} < ... < t_{i_k} - mu_{i_k}`.
    pub fn validate_strict(&self, spec: &SpaceSpec) -> Result<()> {
        let t = spec.exponents();
        let first = self.j_set[0];
        if self.values[0] >= t[first] {
            return Err(Hypothesis::ValueRange {
                index: first,
                value: self.values[0],
                exponent: t[first],
            }
            .into());
        }
        for s in 0..self.j_set.len() - 1 {
            let (p, q) = (self.j_set[s], self.j_set[s + 1]);
            let (vp, vq) = (self.values[s], self.values[s + 1]);
            if vp >= vq {
                return Err(Hypothesis::MuChain { p, q, vp, vq }.into());
            }
            if t[p] - vp >= t[q] - vq {
                return Err(Hypothesis::CoexponentChain { p, q }.into());
            }
        }
        Ok(())
    }

    pub fn is_strict(&self, spec: &SpaceSpec) -> bool {
        self.validate_strict(spec).is_ok()
    }
}

/// A validated interval `[W(r), W(mu)]` in which every subspace is
/// characteristic. `D` is spanned by `f^{mu_j} u_j` for `j` in `J` and
/// satisfies `W(mu) = W(r) ⊕ D`.
#[derive(Clone, Debug)]
pub struct IntervalSpec {
    j_set: Vec<usize>,
    mu: RTuple,
    r: RTuple,
    d_basis: Vec<Vec2>,
    d_space: Subspace,
}

impl IntervalSpec {
    pub fn j_set(&self) -> &[usize] {
        &self.j_set
    }

    pub fn mu(&self) -> &RTuple {
        &self.mu
    }

    pub fn r(&self) -> &RTuple {
        &self.r
    }

    pub fn d_space(&self) -> &Subspace {
        &self.d_space
    }

    /// Basis `f^{mu_{i_1}} u_{i_1}, ..., f^{mu_{i_k}} u_{i_k}` of `D`, in
    /// `j_set` order.
    pub fn d_basis(&self) -> &[Vec2] {
        &self.d_basis
    }

    pub fn k(&self) -> usize {
        self.j_set.len()
    }
}

/// Checks the interval hypotheses for `J` and `mu` and assembles the
/// certificate: at least two unrepeated indices with the gap
/// `t_p + 1 < t_q` between neighbours, strict chains on `J`, and
/// `r = mu + sum of e_j` admissible.
pub fn build_interval(spec: &SpaceSpec, j_set: &[usize], mu: &RTuple) -> Result<IntervalSpec> {
    validate_index_set(spec, j_set)?;
    if j_set.len() < 2 {
        return Err(Hypothesis::TooFewIndices.into());
    }
    if mu.len() != spec.block_count() {
        return Err(Error::TupleLength {
            expected: spec.block_count(),
            got: mu.len(),
        });
    }
    let t = spec.exponents();
    for &j in j_set {
        if !spec.is_unrepeated(j) {
            return Err(Hypothesis::NotUnrepeated { index: j }.into());
        }
    }
    for w in j_set.windows(2) {
        let (p, q) = (w[0], w[1]);
        if t[p] + 1 >= t[q] {
            return Err(Hypothesis::Gap {
                p,
                q,
                tp: t[p],
                tq: t[q],
            }
            .into());
        }
    }
    PartialTuple::restriction(spec, mu, j_set)?.validate_strict(spec)?;
    let mut r_values = mu.values().to_vec();
    for &j in j_set {
        r_values[j] += 1;
    }
    let r = RTuple::new(spec, r_values)?;
    let d_basis: Vec<Vec2> = j_set
        .iter()
        .map(|&j| {
            spec.basis_vector(j, mu[j])
                .expect("strict chain keeps mu_j below t_j")
        })
        .collect();
    let d_space =
        Subspace::from_spanning(spec.dim(), &d_basis).expect("basis vectors share the ambient");
    debug_assert_eq!(d_space.dim(), j_set.len());
    debug_assert_eq!(
        w_subspace(spec, mu),
        w_subspace(spec, &r).sum(&d_space).expect("same ambient"),
        "W(mu) must split as W(r) + D"
    );
    Ok(IntervalSpec {
        j_set: j_set.to_vec(),
        mu: mu.clone(),
        r,
        d_basis,
        d_space,
    })
}

/// Streams the interval: one `(Z, X)` pair per subspace `Z` of `D`, with
/// `X = W(r) ⊕ Z`. The pair count is the Galois number `G_k`.
pub fn interval_elements<'a>(
    spec: &SpaceSpec,
    iv: &'a IntervalSpec,
) -> impl Iterator<Item = (Subspace, Subspace)> + 'a {
    let w_r = w_subspace(spec, iv.r());
    enumerate_subspaces(iv.d_space(), None, iv.k())
        .expect("interval dimension k stays within enumeration bounds")
        .map(move |z| {
            let x = w_r.sum(&z).expect("same ambient");
            debug_assert_eq!(x.dim(), w_r.dim() + z.dim());
            (z, x)
        })
}

/// Frame predicates of an interval element, read off the column pattern of
/// its echelon matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EchelonClass {
    /// Every nonzero column of `M` has exactly one entry 1.
    pub hyperinvariant: bool,
    /// Every nonzero column of `M` has at least two entries 1; then
    /// `X_H = W(r)` is the bottom of the interval.
    pub kernel_is_bottom: bool,
    /// Every row of `M` has at least one entry 1; then `X^h = W(mu)` is the
    /// top of the interval.
    pub hull_is_top: bool,
}

fn validate_echelon(iv: &IntervalSpec, m: &Mat2) -> Result<()> {
    let k = iv.k();
    if m.row_count() != k || m.col_count() != k {
        return Err(Hypothesis::EchelonShape {
            expected: k,
            rows: m.row_count(),
            cols: m.col_count(),
        }
        .into());
    }
    if m.col_reduced_echelon() != *m {
        return Err(Hypothesis::NotEchelon.into());
    }
    Ok(())
}

/// Classifies `X(M) = W(r) ⊕ Z(M)` from the pattern of the column-reduced
/// echelon matrix `M` alone.
pub fn classify_echelon(iv: &IntervalSpec, m: &Mat2) -> Result<EchelonClass> {
    validate_echelon(iv, m)?;
    let k = iv.k();
    let mut hyperinvariant = true;
    let mut kernel_is_bottom = true;
    for c in 0..k {
        match m.col_ones(c) {
            0 => {}
            1 => kernel_is_bottom = false,
            _ => hyperinvariant = false,
        }
    }
    let hull_is_top = (0..k).all(|row| m.row(row).count_ones() >= 1);
    Ok(EchelonClass {
        hyperinvariant,
        kernel_is_bottom,
        hull_is_top,
    })
}

/// Embeds the column space of `M` through the `D` basis: returns
/// `(Z(M), X(M))` with `X(M) = W(r) ⊕ Z(M)`.
pub fn echelon_subspace(
    spec: &SpaceSpec,
    iv: &IntervalSpec,
    m: &Mat2,
) -> Result<(Subspace, Subspace)> {
    validate_echelon(iv, m)?;
    let k = iv.k();
    let mut spanning = Vec::new();
    for c in 0..k {
        if m.col_is_zero(c) {
            continue;
        }
        let mut v = spec.zero_vector();
        for s in 0..k {
            if m.get(s, c) {
                v ^= &iv.d_basis()[s];
            }
        }
        spanning.push(v);
    }
    let z = Subspace::from_spanning(spec.dim(), &spanning)?;
    let x = w_subspace(spec, iv.r()).sum(&z)?;
    Ok((z, x))
}

/// Coordinates of `Z ⊆ D` relative to the `D` basis, as the canonical
/// column-reduced echelon `k x k` matrix.
pub fn subspace_echelon(iv: &IntervalSpec, z: &Subspace) -> Result<Mat2> {
    if !iv.d_space().contains_subspace(z)? {
        return Err(Hypothesis::NotContained.into());
    }
    let k = iv.k();
    // the D basis vectors are standard coordinates, so D coordinates of a
    // member are read straight off the matching bit positions
    let positions: Vec<usize> = iv
        .d_basis()
        .iter()
        .map(|b| b.lowest_set_bit().expect("basis vector is nonzero"))
        .collect();
    let mut m = Mat2::zero(k, k);
    for (c, b) in z.basis().iter().enumerate() {
        for (s, &pos) in positions.iter().enumerate() {
            if b.get(pos) {
                m.set(s, c, true);
            }
        }
    }
    Ok(m.col_reduced_echelon())
}

/// The `2^k` hyperinvariant members of the interval: for each `T ⊆ J`,
/// `X_T = W(r) + span{f^{mu_j} u_j : j in T}` equals `W(eta)` for a tuple
/// `eta` identified from `X_T` itself and verified by subspace equality.
pub fn hyperinvariant_members(spec: &SpaceSpec, iv: &IntervalSpec) -> Vec<(Vec<usize>, RTuple)> {
    let w_r = w_subspace(spec, iv.r());
    let t = spec.exponents();
    let k = iv.k();
    let mut members = Vec::with_capacity(1 << k);
    for mask in 0..1u64 << k {
        let mut subset = Vec::new();
        let mut picked = Vec::new();
        for s in 0..k {
            if mask >> s & 1 == 1 {
                subset.push(iv.j_set()[s]);
                picked.push(iv.d_basis()[s].clone());
            }
        }
        let part = Subspace::from_spanning(spec.dim(), &picked).expect("same ambient");
        let x = w_r.sum(&part).expect("same ambient");
        let eta_values: Vec<usize> = (0..spec.block_count())
            .map(|j| {
                let cyclic = spec.cyclic_span(&spec.generator(j).expect("valid block"));
                t[j] - x.intersect(&cyclic).expect("same ambient").dim()
            })
            .collect();
        let eta = RTuple::new(spec, eta_values).expect("member tuple is admissible");
        assert_eq!(w_subspace(spec, &eta), x, "member must equal W(eta)");
        members.push((subset, eta));
    }
    members
}

/// The componentwise-largest admissible extension of `p`: clamp to the
/// first prescribed value ahead of `i_1`, to the coexponent of the previous
/// prescribed block in between, and ride the last coexponent after `i_k`.
pub fn max_extension(spec: &SpaceSpec, p: &PartialTuple) -> RTuple {
    let t = spec.exponents();
    let j_set = p.j_set();
    let vals = p.values();
    let k = j_set.len();
    let mut out = Vec::with_capacity(spec.block_count());
    for j in 0..spec.block_count() {
        let v = if j <= j_set[0] {
            t[j].min(vals[0])
        } else {
            let s = j_set.partition_point(|&i| i < j) - 1;
            if s + 1 < k {
                (t[j] - (t[j_set[s]] - vals[s])).min(vals[s + 1])
            } else {
                t[j] - (t[j_set[k - 1]] - vals[k - 1])
            }
        };
        out.push(v);
    }
    let ext = RTuple::new(spec, out).expect("maximum extension is admissible");
    debug_assert!(j_set.iter().zip(vals).all(|(&j, &v)| ext[j] == v));
    ext
}

/// The componentwise-least admissible extension of `p`. The closed formula
/// is cross-checked against full enumeration in the tests.
pub fn min_extension(spec: &SpaceSpec, p: &PartialTuple) -> RTuple {
    let t = spec.exponents();
    let j_set = p.j_set();
    let vals = p.values();
    let k = j_set.len();
    let mut out = Vec::with_capacity(spec.block_count());
    for j in 0..spec.block_count() {
        let v = if j <= j_set[0] {
            (t[j] + vals[0]).saturating_sub(t[j_set[0]])
        } else {
            let s = j_set.partition_point(|&i| i < j) - 1;
            if s + 1 < k {
                ((t[j] + vals[s + 1]).saturating_sub(t[j_set[s + 1]])).max(vals[s])
            } else {
                vals[k - 1]
            }
        };
        out.push(v);
    }
    let ext = RTuple::new(spec, out).expect("minimum extension is admissible");
    debug_assert!(j_set.iter().zip(vals).all(|(&j, &v)| ext[j] == v));
    ext
}

fn extend_rec(
    t: &[usize],
    j_set: &[usize],
    vals: &[usize],
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let j = cur.len();
    if j == t.len() {
        out.push(cur.clone());
        return;
    }
    let (lo, hi) = if j == 0 {
        (0, t[0])
    } else {
        (cur[j - 1], t[j].min(cur[j - 1] + t[j] - t[j - 1]))
    };
    match j_set.binary_search(&j) {
        Ok(s) => {
            let v = vals[s];
            if v >= lo && v <= hi {
                cur.push(v);
                extend_rec(t, j_set, vals, cur, out);
                cur.pop();
            }
        }
        Err(_) => {
            for v in lo..=hi {
                cur.push(v);
                extend_rec(t, j_set, vals, cur, out);
                cur.pop();
            }
        }
    }
}

/// All admissible tuples extending `p`, in lexicographic order. The result
/// is a sublattice under componentwise min and max.
pub fn enumerate_extensions(spec: &SpaceSpec, p: &PartialTuple) -> Vec<RTuple> {
    let mut raw = Vec::new();
    extend_rec(
        spec.exponents(),
        p.j_set(),
        p.values(),
        &mut Vec::new(),
        &mut raw,
    );
    raw.into_iter()
        .map(|values| RTuple::new(spec, values).expect("bounds keep extensions admissible"))
        .collect()
}

/// The Shoda criterion: the minimal pair of unrepeated exponent values
/// `(R, S)` with `R + 1 < S`, smallest `S` first and then smallest `R`.
/// `Some` exactly when a characteristic subspace that is not hyperinvariant
/// exists.
pub fn shoda(spec: &SpaceSpec) -> Option<(usize, usize)> {
    let exps: Vec<usize> = spec
        .unrepeated_indices()
        .iter()
        .map(|&j| spec.exponents()[j])
        .collect();
    for (b, &s_val) in exps.iter().enumerate() {
        for &r_val in &exps[..b] {
            if r_val + 1 < s_val {
                return Some((r_val, s_val));
            }
        }
    }
    None
}

/// Builds `z = sum of f^{mu_{i_s}} u_{i_s}` over `J` and its characteristic
/// hull `X = W(r) + span{z}`, which is characteristic but not
/// hyperinvariant. `mu` is the maximum extension of `p`, which makes `X`
/// the hull of the single vector `z`.
pub fn construct_char_nonhyp(spec: &SpaceSpec, p: &PartialTuple) -> Result<(Vec2, Subspace)> {
    p.validate_strict(spec)?;
    let mu = max_extension(spec, p);
    let iv = build_interval(spec, p.j_set(), &mu)?;
    let mut z = spec.zero_vector();
    for b in iv.d_basis() {
        z ^= b;
    }
    let z_span = Subspace::from_spanning(spec.dim(), &[z.clone()]).expect("same ambient");
    let x = w_subspace(spec, iv.r()).sum(&z_span).expect("same ambient");
    debug_assert_eq!(x, characteristic_hull_spanning(spec, &z_span));
    debug_assert!({
        let c = classify_spanning(spec, &x);
        c.characteristic && !c.hyperinvariant
    });
    Ok((z, x))
}

/// The witness subspace `<f^sh u_{iR} + f^q u_{iS}>^c` for unrepeated
/// exponents `R = t_{iR}` and `S = t_{iS}` with `R + 1 < S`, subject to
/// `0 <= sh < q` and `0 < R - sh < S - q`. Characteristic and not
/// hyperinvariant.
pub fn shoda_witness(
    spec: &SpaceSpec,
    i_r: usize,
    i_s: usize,
    sh: usize,
    q: usize,
) -> Result<Subspace> {
    let j_set = [i_r, i_s];
    validate_index_set(spec, &j_set)?;
    for &j in &j_set {
        if !spec.is_unrepeated(j) {
            return Err(Hypothesis::NotUnrepeated { index: j }.into());
        }
    }
    let t = spec.exponents();
    let (big_r, big_s) = (t[i_r], t[i_s]);
    if big_r + 1 >= big_s {
        return Err(Hypothesis::Gap {
            p: i_r,
            q: i_s,
            tp: big_r,
            tq: big_s,
        }
        .into());
    }
    if sh >= q {
        return Err(Hypothesis::WitnessPowers { s: sh, q }.into());
    }
    let rs = big_r as i64 - sh as i64;
    let sq = big_s as i64 - q as i64;
    if rs <= 0 || rs >= sq {
        return Err(Hypothesis::WitnessGap { rs, sq }.into());
    }
    let p = PartialTuple::new(spec, j_set.to_vec(), vec![sh, q])?;
    let (_, x) = construct_char_nonhyp(spec, &p)?;
    Ok(x)
}

/// For an interval whose `mu` is the maximum extension of its restriction
/// to `J`: decides whether `X = W(r) ⊕ Z` has hull `X^h = W(mu)`. Exactly
/// in that case `X` is the characteristic hull of any basis of `Z`, which
/// is asserted before returning.
pub fn single_hull_check(spec: &SpaceSpec, iv: &IntervalSpec, z: &Subspace) -> Result<bool> {
    let p = PartialTuple::restriction(spec, iv.mu(), iv.j_set())?;
    if max_extension(spec, &p) != *iv.mu() {
        return Err(Hypothesis::NotMaxExtension.into());
    }
    if !iv.d_space().contains_subspace(z)? {
        return Err(Hypothesis::NotContained.into());
    }
    let x = w_subspace(spec, iv.r()).sum(z)?;
    let is_top = hyperinvariant_hull_spanning(spec, &x) == w_subspace(spec, iv.mu());
    if is_top {
        assert_eq!(
            x,
            characteristic_hull_spanning(spec, z),
            "a hull-is-top element must be the characteristic hull of Z"
        );
    }
    Ok(is_top)
}

/// A representation of a vector over some generator tuple.
#[derive(Clone, Debug)]
pub struct CanonicalRep {
    /// Automorphism carrying the standard tuple to the representing tuple;
    /// the generators of the representation are its images.
    pub witness: FEndo,
    /// Blocks `rho_1 < ... < rho_k` used by the representation.
    pub indices: Vec<usize>,
    /// Powers with `mu_{rho_1} < ... < mu_{rho_k}` and strictly increasing
    /// coexponents `t_{rho_s} - mu_{rho_s}`.
    pub exponents: Vec<usize>,
    /// At least two of the chosen blocks are unrepeated; equivalently the
    /// characteristic hull of the vector is not hyperinvariant.
    pub hull_not_hyperinvariant: bool,
}

/// `k`-element subsets of `0..m` in lexicographic order.
fn index_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..m {
            if m - j < k - cur.len() {
                break;
            }
            cur.push(j);
            rec(m, k, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Power tuples over `rho` with both chains strict, in lexicographic order.
fn chained_powers(t: &[usize], rho: &[usize]) -> Vec<Vec<usize>> {
    fn rec(t: &[usize], rho: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let s = cur.len();
        if s == rho.len() {
            out.push(cur.clone());
            return;
        }
        let lo = if s == 0 { 0 } else { cur[s - 1] + 1 };
        let co_prev = if s == 0 { 0 } else { t[rho[s - 1]] - cur[s - 1] };
        let hi = t[rho[s]].saturating_sub(co_prev);
        for v in lo..hi {
            cur.push(v);
            rec(t, rho, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(t, rho, &mut Vec::with_capacity(rho.len()), &mut out);
    out
}

/// Finds a generator tuple (as an automorphism of the standard one) and
/// strictly chained `(rho, mu)` with `z = sum of f^{mu_s} u'_{rho_s}`.
///
/// One sweep over `End(V,f)` collects the automorphism orbit of `z` with a
/// witness per orbit element; candidate tuples are then tried in
/// `(k, rho, mu)` lexicographic order and matched by orbit lookup. A miss
/// across all candidates is reported as [`Error::NoRepresentation`], never
/// silently.
pub fn canonical_rep(spec: &SpaceSpec, z: &Vec2, caps: &Caps) -> Result<CanonicalRep> {
    if z.is_zero() {
        return Err(Hypothesis::ZeroVector.into());
    }
    if spec.dim() > caps.max_rep_dim {
        return Err(Error::ResourceCap {
            what: "representation search dimension",
            needed: spec.dim(),
            cap: caps.max_rep_dim,
        });
    }
    let bits = check_bits(spec, caps)?;
    let mut sweep = Sweep::new(spec);
    let mut orbit: BTreeMap<Vec2, u64> = BTreeMap::new();
    let mut image = spec.zero_vector();
    for idx in 0..1u64 << bits {
        sweep.set_index(idx);
        sweep.apply_into(z, &mut image);
        if !orbit.contains_key(&image) && sweep.invertible() {
            orbit.insert(image.clone(), idx);
        }
    }
    let t = spec.exponents();
    let m = spec.block_count();
    for k in 1..=m {
        for rho in index_subsets(m, k) {
            for mu in chained_powers(t, &rho) {
                let mut z0 = spec.zero_vector();
                for (s, &j) in rho.iter().enumerate() {
                    z0 ^= &spec.basis_vector(j, mu[s]).expect("power below exponent");
                }
                let Some(&idx) = orbit.get(&z0) else {
                    continue;
                };
                sweep.set_index(idx);
                let witness = sweep
                    .to_endo()
                    .inverse(spec)
                    .expect("orbit witness is invertible");
                debug_assert_eq!(witness.apply(spec, &z0), *z);
                let unrepeated = rho.iter().filter(|&&j| spec.is_unrepeated(j)).count();
                return Ok(CanonicalRep {
                    witness,
                    indices: rho,
                    exponents: mu,
                    hull_not_hyperinvariant: unrepeated >= 2,
                });
            }
        }
    }
    Err(Error::NoRepresentation)
}
