//! Exact linear algebra over GF(2).
//!
//! Vectors are bit-packed; addition is XOR. Subspaces are kept in
//! row-reduced echelon form so that equal subspaces have identical
//! representations and derived `Eq`/`Hash` are set equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitXor, BitXorAssign, Range};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Bit-packed vector over GF(2). Coordinate `i` lives at bit `i % 64` of
/// word `i / 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vec2 {
    len: usize,
    words: Vec<u64>,
}

impl Vec2 {
    pub fn zero(len: usize) -> Self {
        Vec2 {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    /// Parses a bit string such as `"1010"`; coordinate 0 is the first
    /// character.
    pub fn from_bits(s: &str) -> Result<Self> {
        let mut v = Vec2::zero(s.len());
        for (i, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => v.set(i, true),
                _ => {
                    return Err(Error::Parse {
                        pos: i,
                        msg: format!("expected '0' or '1', got {:?}", char::from(c)),
                    })
                }
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Lowest set coordinate, if any. This is the pivot position when the
    /// vector is an echelon row.
    pub fn lowest_set_bit(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * WORD_BITS + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * WORD_BITS + b)
                }
            })
        })
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn copy_from(&mut self, other: &Vec2) {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words.copy_from_slice(&other.words);
    }

    /// Concatenation, used to build the stacked matrices of the Zassenhaus
    /// intersection.
    pub fn concat(&self, other: &Vec2) -> Vec2 {
        let mut out = Vec2::zero(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    pub fn extract(&self, range: Range<usize>) -> Vec2 {
        assert!(range.end <= self.len, "extract range out of bounds");
        let mut out = Vec2::zero(range.len());
        for (k, i) in range.enumerate() {
            if self.get(i) {
                out.set(k, true);
            }
        }
        out
    }
}

impl BitXorAssign<&Vec2> for Vec2 {
    fn bitxor_assign(&mut self, rhs: &Vec2) {
        assert_eq!(self.len, rhs.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl BitXor<&Vec2> for &Vec2 {
    type Output = Vec2;
    fn bitxor(self, rhs: &Vec2) -> Vec2 {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl Ord for Vec2 {
    /// Compares by length, then by packed integer value with coordinate `i`
    /// weighted `2^i`. Any total order works for canonical listings; this
    /// one is cheap on packed words.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Vec2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vec2({self})")
    }
}

/// Dense GF(2) matrix as a list of rows with an explicit column count,
/// so zero-column and zero-row matrices stay well defined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    rows: Vec<Vec2>,
    cols: usize,
}

impl Mat2 {
    pub fn new(rows: Vec<Vec2>, cols: usize) -> Result<Self> {
        for row in &rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
        }
        Ok(Mat2 { rows, cols })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat2 {
            rows: vec![Vec2::zero(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat2::zero(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    /// Parses rows like `["110", "011"]`.
    pub fn from_rows(rows: &[&str], cols: usize) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| Vec2::from_bits(r))
            .collect::<Result<Vec<_>>>()?;
        Mat2::new(rows, cols)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &Vec2 {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[Vec2] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn transpose(&self) -> Mat2 {
        let mut out = Mat2::zero(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                out.rows[c].set(r, true);
            }
        }
        out
    }

    /// Row-reduced echelon form: pivots strictly increase, each pivot column
    /// has a single 1, zero rows are dropped. The result is the canonical
    /// representation of the row space.
    pub fn rref(&self) -> Mat2 {
        let mut b = SpanBuilder::new(self.cols);
        for row in &self.rows {
            b.insert(row);
        }
        Mat2 {
            rows: b.into_rows(),
            cols: self.cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rows.len()
    }

    /// Column-reduced echelon form: the first nonzero entry of each nonzero
    /// column is a leading 1, leading 1s move strictly downward from left to
    /// right, the row of a leading 1 is zero elsewhere, and zero columns come
    /// last. The shape is preserved; the column space is unchanged.
    pub fn col_reduced_echelon(&self) -> Mat2 {
        let reduced = self.transpose().rref().transpose();
        let mut rows = reduced.rows;
        for row in &mut rows {
            let mut padded = Vec2::zero(self.cols);
            for c in row.iter_ones() {
                padded.set(c, true);
            }
            *row = padded;
        }
        Mat2 {
            rows,
            cols: self.cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec2::is_zero)
    }

    pub fn col_is_zero(&self, c: usize) -> bool {
        self.rows.iter().all(|row| !row.get(c))
    }

    pub fn col_ones(&self, c: usize) -> usize {
        self.rows.iter().filter(|row| row.get(c)).count()
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{row}")?;
        }
        write!(f, "]")
    }
}

/// Incremental reduced-basis builder. Rows are kept in row-reduced echelon
/// form (sorted by pivot, pivot columns cleared elsewhere) after every
/// insertion.
#[derive(Clone, Debug)]
pub(crate) struct SpanBuilder {
    width: usize,
    rows: Vec<Vec2>,
}

impl SpanBuilder {
    pub fn new(width: usize) -> Self {
        SpanBuilder {
            width,
            rows: Vec::new(),
        }
    }

    /// Inserts a vector; returns true iff the span grew.
    pub fn insert(&mut self, v: &Vec2) -> bool {
        let v = self.reduce(v);
        if v.is_zero() {
            return false;
        }
        let p = v.lowest_set_bit().expect("nonzero");
        for row in &mut self.rows {
            if row.get(p) {
                *row ^= &v;
            }
        }
        let at = self
            .rows
            .partition_point(|r| r.lowest_set_bit().expect("nonzero row") < p);
        self.rows.insert(at, v);
        true
    }

    /// Residue of `v` after reduction against the current rows; zero iff
    /// `v` is in the span.
    pub fn reduce(&self, v: &Vec2) -> Vec2 {
        assert_eq!(v.len(), self.width, "length mismatch");
        let mut v = v.clone();
        for row in &self.rows {
            let p = row.lowest_set_bit().expect("nonzero row");
            if v.get(p) {
                v ^= row;
            }
        }
        v
    }

    pub fn contains(&self, v: &Vec2) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec2] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec2> {
        self.rows
    }
}

/// A subspace of GF(2)^ambient in canonical form: the basis is the
/// row-reduced echelon form of any spanning set, so two values compare
/// equal exactly when they are the same set of vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec2>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut rows = Vec::with_capacity(ambient);
        for i in 0..ambient {
            let mut v = Vec2::zero(ambient);
            v.set(i, true);
            rows.push(v);
        }
        Subspace { ambient, rows }
    }

    pub fn from_spanning(ambient: usize, spanning: &[Vec2]) -> Result<Self> {
        let mut b = SpanBuilder::new(ambient);
        for v in spanning {
            if v.len() != ambient {
                return Err(Error::LengthMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
            b.insert(v);
        }
        Ok(Subspace {
            ambient,
            rows: b.into_rows(),
        })
    }

    pub fn from_matrix(m: &Mat2) -> Self {
        let reduced = m.rref();
        Subspace {
            ambient: m.col_count(),
            rows: reduced.rows,
        }
    }

    pub(crate) fn from_builder(b: SpanBuilder) -> Self {
        Subspace {
            ambient: b.width,
            rows: b.into_rows(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec2] {
        &self.rows
    }

    pub fn basis_matrix(&self) -> Mat2 {
        Mat2 {
            rows: self.rows.clone(),
            cols: self.ambient,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &Vec2) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::LengthMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut v = v.clone();
        for row in &self.rows {
            let p = row.lowest_set_bit().expect("nonzero row");
            if v.get(p) {
                v ^= row;
            }
        }
        Ok(v.is_zero())
    }

    /// Allocation-free membership test for hot loops: reduces `v` in place
    /// against the basis and reports whether it vanished.
    pub(crate) fn reduces_to_zero(&self, v: &mut Vec2) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        for row in &self.rows {
            let p = row.lowest_set_bit().expect("nonzero row");
            if v.get(p) {
                *v ^= row;
            }
        }
        v.is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for row in &other.rows {
            if !self.contains_vector(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = SpanBuilder::new(self.ambient);
        for row in self.rows.iter().chain(&other.rows) {
            b.insert(row);
        }
        Ok(Subspace::from_builder(b))
    }

    /// Zassenhaus intersection: row-reduce the stack of `[a|a]` for basis
    /// rows of `self` and `[b|0]` for basis rows of `other`; rows whose left
    /// half vanished carry a basis of the intersection in the right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut b = SpanBuilder::new(2 * n);
        for row in &self.rows {
            b.insert(&row.concat(row));
        }
        let zero = Vec2::zero(n);
        for row in &other.rows {
            b.insert(&row.concat(&zero));
        }
        let mut rows = Vec::new();
        for row in b.rows() {
            let left = row.extract(0..n);
            if left.is_zero() {
                rows.push(row.extract(n..2 * n));
            }
        }
        Subspace::from_spanning(n, &rows)
    }

    /// The element selected by `index`: the XOR of the basis rows whose bit
    /// is set in `index`. Indices `0..2^dim` enumerate the whole subspace.
    pub fn element(&self, index: u64) -> Vec2 {
        assert!(self.rows.len() < 64, "subspace too large to index by u64");
        assert!(index < 1u64 << self.rows.len(), "element index out of range");
        let mut v = Vec2::zero(self.ambient);
        for (s, row) in self.rows.iter().enumerate() {
            if index >> s & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    /// Iterates all `2^dim` elements in `element` index order.
    pub fn elements(&self) -> impl Iterator<Item = Vec2> + '_ {
        assert!(self.rows.len() < 64, "subspace too large to enumerate");
        (0..1u64 << self.rows.len()).map(|i| self.element(i))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}; ", self.rows.len(), self.ambient)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{row}")?;
        }
        write!(f, ")")
    }
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 0;
    let mut m = q;
    for cand in 2..=q {
        if cand * cand > q {
            break;
        }
        if m.is_multiple_of(cand) {
            p = cand;
            break;
        }
    }
    if p == 0 {
        return true; // q itself is prime
    }
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Gaussian binomial coefficient: the number of k-dimensional subspaces of
/// an n-dimensional space over GF(q). Exact big-integer arithmetic; the
/// stepwise divisions are exact because every partial product is itself a
/// Gaussian binomial.
pub fn q_binomial(n: u64, k: u64, q: u64) -> Result<BigUint> {
    if !is_prime_power(q) {
        return Err(Error::NotPrimePower { q });
    }
    if k > n {
        return Ok(BigUint::zero());
    }
    let q = BigUint::from(q);
    let mut result = BigUint::one();
    for i in 1..=k {
        let num = q.pow((n - k + i) as u32) - 1u32;
        let den = q.pow(i as u32) - 1u32;
        result = result * num / den;
    }
    Ok(result)
}

/// Total number of subspaces of an n-dimensional space over GF(q).
pub fn galois_number(n: u64, q: u64) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for k in 0..=n {
        total += q_binomial(n, k, q)?;
    }
    Ok(total)
}

/// Streams every subspace of `ambient` (optionally only those of dimension
/// `dim_filter`), each embedded back into the ambient coordinates.
///
/// The order is deterministic: dimension ascending, then pivot-column sets
/// in lexicographic order, then free echelon entries in ascending counter
/// order. Each canonical echelon basis is produced exactly once.
pub fn enumerate_subspaces(
    ambient: &Subspace,
    dim_filter: Option<usize>,
    cap: usize,
) -> Result<SubspaceStream<'_>> {
    let a = ambient.dim();
    if a > cap {
        return Err(Error::ResourceCap {
            what: "subspace enumeration ambient dimension",
            needed: a,
            cap,
        });
    }
    // Free entries for a k-dim echelon basis are at most k(a-k) <= a^2/4.
    if a * a / 4 >= 64 {
        return Err(Error::ResourceCap {
            what: "subspace enumeration free bits",
            needed: a * a / 4,
            cap: 63,
        });
    }
    let dims = match dim_filter {
        Some(k) if k > a => return Ok(SubspaceStream::empty(ambient)),
        Some(k) => (k, k),
        None => (0, a),
    };
    Ok(SubspaceStream::new(ambient, dims.0, dims.1))
}

pub struct SubspaceStream<'a> {
    ambient: &'a Subspace,
    k: usize,
    k_max: usize,
    pivots: Vec<usize>,
    free_positions: Vec<(usize, usize)>,
    counter: u64,
    done: bool,
}

impl<'a> SubspaceStream<'a> {
    fn new(ambient: &'a Subspace, k_min: usize, k_max: usize) -> Self {
        let mut s = SubspaceStream {
            ambient,
            k: k_min,
            k_max,
            pivots: (0..k_min).collect(),
            free_positions: Vec::new(),
            counter: 0,
            done: false,
        };
        s.recompute_free_positions();
        s
    }

    fn empty(ambient: &'a Subspace) -> Self {
        SubspaceStream {
            ambient,
            k: 0,
            k_max: 0,
            pivots: Vec::new(),
            free_positions: Vec::new(),
            counter: 0,
            done: true,
        }
    }

    /// Free coordinates: in row s, every column right of pivot s that is
    /// not itself a pivot column.
    fn recompute_free_positions(&mut self) {
        self.free_positions.clear();
        let a = self.ambient.dim();
        for (s, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..a {
                if !self.pivots.contains(&c) {
                    self.free_positions.push((s, c));
                }
            }
        }
    }

    fn emit(&self) -> Subspace {
        let a = self.ambient.dim();
        let mut coord_rows = Vec::with_capacity(self.k);
        for &p in &self.pivots {
            let mut row = Vec2::zero(a);
            row.set(p, true);
            coord_rows.push(row);
        }
        for (bit, &(s, c)) in self.free_positions.iter().enumerate() {
            if self.counter >> bit & 1 == 1 {
                coord_rows[s].set(c, true);
            }
        }
        // Map from ambient coordinates into the surrounding space.
        let n = self.ambient.ambient();
        let big_rows: Vec<Vec2> = coord_rows
            .iter()
            .map(|row| {
                let mut v = Vec2::zero(n);
                for c in row.iter_ones() {
                    v ^= &self.ambient.basis()[c];
                }
                v
            })
            .collect();
        Subspace::from_spanning(n, &big_rows).expect("rows built in ambient")
    }

    /// Advances the pivot combination in lexicographic order.
    fn next_pivots(&mut self) -> bool {
        let a = self.ambient.dim();
        let k = self.k;
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.pivots[i] < a - (k - i) {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
    }
}

impl Iterator for SubspaceStream<'_> {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        let out = self.emit();
        self.counter += 1;
        if self.counter >> self.free_positions.len() != 0 {
            self.counter = 0;
            if !self.next_pivots() {
                self.k += 1;
                if self.k > self.k_max {
                    self.done = true;
                } else {
                    self.pivots = (0..self.k).collect();
                }
            }
            self.recompute_free_positions();
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vec(s: &str) -> Vec2 {
        Vec2::from_bits(s).unwrap()
    }

    fn space(ambient: usize, rows: &[&str]) -> Subspace {
        let rows: Vec<Vec2> = rows.iter().map(|r| vec(r)).collect();
        Subspace::from_spanning(ambient, &rows).unwrap()
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let m = Mat2::from_rows(&["1100", "0110", "1010"], 4).unwrap();
        let r = m.rref();
        assert_eq!(r.rows(), &[vec("1010"), vec("0110")]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_is_canonical_under_row_ops() {
        let a = Mat2::from_rows(&["1100", "0110"], 4).unwrap();
        let b = Mat2::from_rows(&["1010", "0110", "1100"], 4).unwrap();
        assert_eq!(a.rref().rows(), b.rref().rows());
    }

    #[test]
    fn membership_by_reduction() {
        let s = space(4, &["1100", "0011"]);
        assert!(s.contains_vector(&vec("1111")).unwrap());
        assert!(!s.contains_vector(&vec("1000")).unwrap());
        assert!(s.contains_vector(&vec("0000")).unwrap());
    }

    #[test]
    fn membership_rejects_length_mismatch() {
        let s = space(4, &["1100"]);
        assert!(matches!(
            s.contains_vector(&vec("110")),
            Err(Error::LengthMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn sum_and_intersection_dims() {
        let a = space(4, &["1100", "0110"]);
        let b = space(4, &["0110", "0011"]);
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        assert_eq!(sum.dim(), 3);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains_vector(&vec("0110")).unwrap());
    }

    #[test]
    fn intersection_of_disjoint_lines_is_zero() {
        let a = space(3, &["100"]);
        let b = space(3, &["010"]);
        assert!(a.intersect(&b).unwrap().is_zero());
    }

    #[test]
    fn subspace_equality_is_set_equality() {
        let a = space(3, &["110", "011"]);
        let b = space(3, &["101", "011"]);
        assert_eq!(a, b);
    }

    #[test]
    fn col_reduced_echelon_of_all_ones_column() {
        let m = Mat2::from_rows(&["100", "100", "100"], 3).unwrap();
        assert_eq!(m.col_reduced_echelon(), m);
    }

    #[test]
    fn col_reduced_echelon_of_invertible_is_identity() {
        let m = Mat2::from_rows(&["110", "010", "111"], 3).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.col_reduced_echelon(), Mat2::identity(3));
    }

    #[test]
    fn col_reduced_echelon_moves_zero_columns_last() {
        let m = Mat2::from_rows(&["010", "011", "001"], 3).unwrap();
        let e = m.col_reduced_echelon();
        // Column space is spanned by (1,1,0)^T and (0,1,1)^T in some order.
        assert_eq!(e.col_ones(0) + e.col_ones(1), 4);
        assert!(e.col_is_zero(2));
        // Same column space.
        let col_space = |m: &Mat2| Subspace::from_matrix(&m.transpose());
        assert_eq!(col_space(&m), col_space(&e));
    }

    #[test]
    fn q_binomial_small_values() {
        assert_eq!(q_binomial(4, 2, 2).unwrap(), BigUint::from(35u32));
        assert_eq!(q_binomial(3, 1, 2).unwrap(), BigUint::from(7u32));
        assert_eq!(q_binomial(3, 2, 2).unwrap(), BigUint::from(7u32));
        assert_eq!(q_binomial(5, 0, 3).unwrap(), BigUint::one());
        assert_eq!(q_binomial(2, 3, 2).unwrap(), BigUint::zero());
        assert_eq!(q_binomial(4, 2, 3).unwrap(), BigUint::from(130u32));
    }

    #[test]
    fn q_binomial_rejects_non_prime_powers() {
        assert!(matches!(q_binomial(4, 2, 6), Err(Error::NotPrimePower { q: 6 })));
        assert!(matches!(q_binomial(4, 2, 1), Err(Error::NotPrimePower { q: 1 })));
        assert!(q_binomial(4, 2, 8).is_ok());
        assert!(q_binomial(4, 2, 9).is_ok());
    }

    #[test]
    fn galois_numbers_for_small_dims() {
        let expected: [u32; 6] = [1, 2, 5, 16, 67, 374];
        for (n, &g) in expected.iter().enumerate() {
            assert_eq!(galois_number(n as u64, 2).unwrap(), BigUint::from(g));
        }
    }

    #[test]
    fn enumerate_counts_match_q_binomials() {
        for n in 0..=5usize {
            let full = Subspace::full(n);
            let total = enumerate_subspaces(&full, None, 12).unwrap().count();
            assert_eq!(BigUint::from(total), galois_number(n as u64, 2).unwrap());
            for k in 0..=n {
                let count = enumerate_subspaces(&full, Some(k), 12).unwrap().count();
                assert_eq!(
                    BigUint::from(count),
                    q_binomial(n as u64, k as u64, 2).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn enumerate_yields_distinct_subspaces() {
        let full = Subspace::full(4);
        let all: Vec<Subspace> = enumerate_subspaces(&full, None, 12).unwrap().collect();
        let set: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), set.len());
    }

    #[test]
    fn enumerate_zero_ambient() {
        let z = Subspace::zero(5);
        let all: Vec<Subspace> = enumerate_subspaces(&z, None, 12).unwrap().collect();
        assert_eq!(all, vec![Subspace::zero(5)]);
    }

    #[test]
    fn enumerate_respects_cap() {
        let full = Subspace::full(5);
        assert!(matches!(
            enumerate_subspaces(&full, None, 4),
            Err(Error::ResourceCap { needed: 5, cap: 4, .. })
        ));
    }

    #[test]
    fn enumerate_inside_proper_ambient() {
        // Subspaces of a 2-dim ambient sitting inside GF(2)^4.
        let ambient = space(4, &["1100", "0011"]);
        let all: Vec<Subspace> = enumerate_subspaces(&ambient, None, 12).unwrap().collect();
        assert_eq!(all.len(), 5);
        for s in &all {
            assert!(ambient.contains_subspace(s).unwrap());
        }
    }

    #[test]
    fn element_iteration_covers_subspace() {
        let s = space(4, &["1100", "0011"]);
        let elements: Vec<Vec2> = s.elements().collect();
        assert_eq!(elements.len(), 4);
        for v in &elements {
            assert!(s.contains_vector(v).unwrap());
        }
        let distinct: std::collections::BTreeSet<_> = elements.into_iter().collect();
        assert_eq!(distinct.len(), 4);
    }

    fn arb_subspace(ambient: usize, max_rows: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(
            proptest::collection::vec(any::<bool>(), ambient),
            0..=max_rows,
        )
        .prop_map(move |rows| {
            let rows: Vec<Vec2> = rows
                .into_iter()
                .map(|bits| {
                    let mut v = Vec2::zero(ambient);
                    for (i, b) in bits.into_iter().enumerate() {
                        v.set(i, b);
                    }
                    v
                })
                .collect();
            Subspace::from_spanning(ambient, &rows).unwrap()
        })
    }

    proptest! {
        #[test]
        fn dim_formula(a in arb_subspace(6, 6), b in arb_subspace(6, 6)) {
            let sum = a.sum(&b).unwrap();
            let meet = a.intersect(&b).unwrap();
            prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        }

        #[test]
        fn sum_and_intersect_are_idempotent(a in arb_subspace(6, 6)) {
            prop_assert_eq!(a.sum(&a).unwrap(), a.clone());
            prop_assert_eq!(a.intersect(&a).unwrap(), a);
        }

        #[test]
        fn intersection_contained_in_both(a in arb_subspace(6, 6), b in arb_subspace(6, 6)) {
            let meet = a.intersect(&b).unwrap();
            prop_assert!(a.contains_subspace(&meet).unwrap());
            prop_assert!(b.contains_subspace(&meet).unwrap());
            let sum = a.sum(&b).unwrap();
            prop_assert!(sum.contains_subspace(&a).unwrap());
            prop_assert!(sum.contains_subspace(&b).unwrap());
        }

        #[test]
        fn modular_law(a in arb_subspace(5, 5), b in arb_subspace(5, 5), c in arb_subspace(5, 5)) {
            // a ⊆ c implies a + (b ∩ c) = (a + b) ∩ c.
            let c = c.sum(&a).unwrap();
            let lhs = a.sum(&b.intersect(&c).unwrap()).unwrap();
            let rhs = a.sum(&b).unwrap().intersect(&c).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn col_echelon_is_idempotent_and_preserves_columns(
            rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 4), 4)
        ) {
            let mut m = Mat2::zero(4, 4);
            for (r, bits) in rows.iter().enumerate() {
                for (c, &b) in bits.iter().enumerate() {
                    m.set(r, c, b);
                }
            }
            let e = m.col_reduced_echelon();
            prop_assert_eq!(e.col_reduced_echelon(), e.clone());
            let col_space = |m: &Mat2| Subspace::from_matrix(&m.transpose());
            prop_assert_eq!(col_space(&m), col_space(&e));
        }
    }
}
