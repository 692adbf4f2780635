//! The block space of a nilpotent operator.
//!
//! A Segre characteristic `t = (t_1 <= ... <= t_m)` determines the space
//! `V = <u_1> + ... + <u_m>` of dimension `n = t_1 + ... + t_m` together
//! with the nilpotent shift `f` acting blockwise: `f^i u_j` is a basis
//! vector for `0 <= i < t_j`, and `f^{t_j} u_j = 0`. Block indices are
//! 0-based in this API; the expression grammar (`u1`, `f^2*u3`) is 1-based.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf2::{SpanBuilder, Subspace, Vec2};

/// Height of a vector: the largest `q` with `x` in `f^q V`. The zero vector
/// lies in every image, so its height is a distinct infinite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Height {
    Finite(usize),
    Infinite,
}

/// The space `(V, f)` described by a Segre characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceSpec {
    t: Vec<usize>,
    offsets: Vec<usize>,
    n: usize,
    input_was_sorted: bool,
}

impl SpaceSpec {
    /// Builds the space. The exponent list is sorted nondecreasing if it is
    /// not already; `input_was_sorted` records whether the caller's order
    /// was kept so interfaces can warn.
    pub fn new(t: Vec<usize>) -> Result<Self> {
        if t.is_empty() {
            return Err(Error::EmptySegre);
        }
        if let Some(pos) = t.iter().position(|&e| e == 0) {
            return Err(Error::ZeroExponent { pos });
        }
        let input_was_sorted = t.windows(2).all(|w| w[0] <= w[1]);
        let mut t = t;
        t.sort_unstable();
        let mut offsets = Vec::with_capacity(t.len());
        let mut n = 0;
        for &e in &t {
            offsets.push(n);
            n += e;
        }
        Ok(SpaceSpec {
            t,
            offsets,
            n,
            input_was_sorted,
        })
    }

    pub fn exponents(&self) -> &[usize] {
        &self.t
    }

    /// Dimension of `V`.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Number of cyclic blocks, `m`.
    pub fn block_count(&self) -> usize {
        self.t.len()
    }

    pub fn input_was_sorted(&self) -> bool {
        self.input_was_sorted
    }

    fn check_block(&self, j: usize) -> Result<()> {
        if j >= self.t.len() {
            return Err(Error::BlockIndex {
                index: j,
                blocks: self.t.len(),
            });
        }
        Ok(())
    }

    /// Global coordinate range of block `j`.
    pub fn block_range(&self, j: usize) -> std::ops::Range<usize> {
        self.offsets[j]..self.offsets[j] + self.t[j]
    }

    /// Global coordinate of `f^i u_j`.
    pub fn coordinate(&self, j: usize, i: usize) -> Result<usize> {
        self.check_block(j)?;
        if i >= self.t[j] {
            return Err(Error::PowerRange {
                power: i,
                block: j,
                exponent: self.t[j],
            });
        }
        Ok(self.offsets[j] + i)
    }

    /// Block and power of a global coordinate.
    pub fn block_of(&self, coord: usize) -> (usize, usize) {
        assert!(coord < self.n, "coordinate out of range");
        let j = self.offsets.partition_point(|&o| o <= coord) - 1;
        (j, coord - self.offsets[j])
    }

    /// The basis vector `f^i u_j`.
    pub fn basis_vector(&self, j: usize, i: usize) -> Result<Vec2> {
        let c = self.coordinate(j, i)?;
        let mut v = Vec2::zero(self.n);
        v.set(c, true);
        Ok(v)
    }

    /// The standard generator `u_j`.
    pub fn generator(&self, j: usize) -> Result<Vec2> {
        self.basis_vector(j, 0)
    }

    pub fn zero_vector(&self) -> Vec2 {
        Vec2::zero(self.n)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.n)
    }

    /// Applies `f`: shifts every block one step, dropping the top power.
    pub fn apply_f(&self, x: &Vec2) -> Vec2 {
        let mut out = Vec2::zero(self.n);
        self.apply_f_pow_into(x, 1, &mut out);
        out
    }

    pub fn apply_f_pow(&self, x: &Vec2, k: usize) -> Vec2 {
        let mut out = Vec2::zero(self.n);
        self.apply_f_pow_into(x, k, &mut out);
        out
    }

    /// Writes `f^k x` into `out`, which must already have length `n`.
    pub(crate) fn apply_f_pow_into(&self, x: &Vec2, k: usize, out: &mut Vec2) {
        assert_eq!(x.len(), self.n, "length mismatch");
        out.clear();
        for c in x.iter_ones() {
            let (j, i) = self.block_of(c);
            if i + k < self.t[j] {
                out.flip(self.offsets[j] + i + k);
            }
        }
    }

    /// Exponent `e(x)`: the least `l` with `f^l x = 0`; `e(0) = 0`.
    pub fn exponent(&self, x: &Vec2) -> usize {
        assert_eq!(x.len(), self.n, "length mismatch");
        x.iter_ones()
            .map(|c| {
                let (j, i) = self.block_of(c);
                self.t[j] - i
            })
            .max()
            .unwrap_or(0)
    }

    /// Height `h(x)`: the greatest `q` with `x` in `f^q V`; infinite for 0.
    ///
    /// Since `f^q V` splits blockwise as the span of `f^i u_j` with `i >= q`,
    /// the height is the least power appearing in the support of `x`.
    pub fn height(&self, x: &Vec2) -> Height {
        assert_eq!(x.len(), self.n, "length mismatch");
        x.iter_ones()
            .map(|c| self.block_of(c).1)
            .min()
            .map_or(Height::Infinite, Height::Finite)
    }

    /// Kernel of `f^j`: `V[f^j]`, spanned by the last `min(j, t_k)` basis
    /// vectors of each block. `j` past the largest exponent saturates at `V`.
    pub fn kernel_power(&self, j: usize) -> Subspace {
        let mut rows = Vec::new();
        for (k, &e) in self.t.iter().enumerate() {
            for i in e.saturating_sub(j)..e {
                rows.push(self.basis_vector(k, i).expect("in range"));
            }
        }
        Subspace::from_spanning(self.n, &rows).expect("standard vectors")
    }

    /// Image of `f^j`: `f^j V`, spanned by `f^i u_k` with `i >= j`.
    pub fn image_power(&self, j: usize) -> Subspace {
        let mut rows = Vec::new();
        for (k, &e) in self.t.iter().enumerate() {
            for i in j..e {
                rows.push(self.basis_vector(k, i).expect("in range"));
            }
        }
        Subspace::from_spanning(self.n, &rows).expect("standard vectors")
    }

    /// The f-cyclic span `<x> = span{f^i x : i >= 0}`, of dimension `e(x)`.
    pub fn cyclic_span(&self, x: &Vec2) -> Subspace {
        let mut b = SpanBuilder::new(self.n);
        let mut y = x.clone();
        while !y.is_zero() {
            b.insert(&y);
            y = self.apply_f(&y);
        }
        Subspace::from_builder(b)
    }

    /// Projection onto block `j` along the other blocks.
    pub fn projection(&self, j: usize, x: &Vec2) -> Result<Vec2> {
        self.check_block(j)?;
        assert_eq!(x.len(), self.n, "length mismatch");
        let range = self.block_range(j);
        let mut out = Vec2::zero(self.n);
        for c in x.iter_ones() {
            if range.contains(&c) {
                out.set(c, true);
            }
        }
        Ok(out)
    }

    /// Tests whether `x` extends to a generator tuple of `(V, f)`, i.e.
    /// whether `x` can replace some `u_j` with `t_j = e(x)`. Returns the
    /// exponent on success. The criterion is `e(x) = t` for some block
    /// exponent `t` together with `h(f^r x) = r` for `0 <= r < t`.
    pub fn is_generator(&self, x: &Vec2) -> Option<usize> {
        let e = self.exponent(x);
        if e == 0 || !self.t.contains(&e) {
            return None;
        }
        let mut y = x.clone();
        for r in 0..e {
            if self.height(&y) != Height::Finite(r) {
                return None;
            }
            y = self.apply_f(&y);
        }
        Some(e)
    }

    /// Indices of blocks whose exponent occurs exactly once in `t`.
    pub fn unrepeated_indices(&self) -> Vec<usize> {
        (0..self.t.len())
            .filter(|&j| self.t.iter().filter(|&&e| e == self.t[j]).count() == 1)
            .collect()
    }

    pub fn is_unrepeated(&self, j: usize) -> bool {
        j < self.t.len() && self.t.iter().filter(|&&e| e == self.t[j]).count() == 1
    }

    /// Ulm invariant at `q`: `dim(V[f] ∩ f^q V) - dim(V[f] ∩ f^{q+1} V)`,
    /// computed by subspace arithmetic. It equals the multiplicity of the
    /// exponent `q+1` in `t`, which the tests verify independently.
    pub fn ulm_invariant(&self, q: usize) -> usize {
        let kernel = self.kernel_power(1);
        let a = kernel
            .intersect(&self.image_power(q))
            .expect("same ambient")
            .dim();
        let b = kernel
            .intersect(&self.image_power(q + 1))
            .expect("same ambient")
            .dim();
        a - b
    }

    /// Parses the vector expression grammar: terms `u<j>`, `f*u<j>` or
    /// `f^<i>*u<j>` joined by `+`, whitespace-insensitive; `0` is the zero
    /// vector. Block indices are 1-based and validated; powers must be below
    /// the block exponent. Terms add over GF(2), so `u1 + u1` is zero.
    pub fn parse_vector(&self, input: &str) -> Result<Vec2> {
        Parser {
            spec: self,
            bytes: input.as_bytes(),
            pos: 0,
        }
        .parse()
    }

    /// Canonical rendering in the same grammar, 1-based, block-major:
    /// `u1 + f*u2 + f^2*u3`. The zero vector renders as `0`.
    pub fn format_vector(&self, x: &Vec2) -> String {
        assert_eq!(x.len(), self.n, "length mismatch");
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for c in x.iter_ones() {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let (j, i) = self.block_of(c);
            match i {
                0 => write!(out, "u{}", j + 1).unwrap(),
                1 => write!(out, "f*u{}", j + 1).unwrap(),
                _ => write!(out, "f^{}*u{}", i, j + 1).unwrap(),
            }
        }
        out
    }
}

struct Parser<'a> {
    spec: &'a SpaceSpec,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn parse(mut self) -> Result<Vec2> {
        let mut out = Vec2::zero(self.spec.n);
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return Err(self.err("empty expression"));
        }
        loop {
            self.term(&mut out)?;
            self.skip_ws();
            if self.pos == self.bytes.len() {
                return Ok(out);
            }
            if self.bytes[self.pos] != b'+' {
                return Err(self.err("expected '+'"));
            }
            self.pos += 1;
            self.skip_ws();
        }
    }

    fn term(&mut self, out: &mut Vec2) -> Result<()> {
        match self.bytes.get(self.pos) {
            Some(b'0') => {
                self.pos += 1;
                Ok(())
            }
            Some(b'u') => {
                let block = self.block()?;
                out.flip(self.spec.offsets[block]);
                Ok(())
            }
            Some(b'f') => {
                self.pos += 1;
                let power = if self.bytes.get(self.pos) == Some(&b'^') {
                    self.pos += 1;
                    self.number("power")?
                } else {
                    1
                };
                self.skip_ws();
                if self.bytes.get(self.pos) != Some(&b'*') {
                    return Err(self.err("expected '*' after f power"));
                }
                self.pos += 1;
                self.skip_ws();
                if self.bytes.get(self.pos) != Some(&b'u') {
                    return Err(self.err("expected 'u<j>' after '*'"));
                }
                let block = self.block()?;
                if power >= self.spec.t[block] {
                    return Err(self.err(&format!(
                        "power f^{power} out of range for u{} (exponent {})",
                        block + 1,
                        self.spec.t[block]
                    )));
                }
                out.flip(self.spec.offsets[block] + power);
                Ok(())
            }
            Some(&c) => Err(self.err(&format!(
                "expected term ('0', 'u<j>' or 'f^<i>*u<j>'), got {:?}",
                char::from(c)
            ))),
            None => Err(self.err("expected term")),
        }
    }

    /// Consumes `u<j>` starting at the `u`; returns the 0-based block.
    fn block(&mut self) -> Result<usize> {
        self.pos += 1; // the 'u'
        let start = self.pos;
        let j = self.number("block index")?;
        if j == 0 || j > self.spec.t.len() {
            return Err(Error::Parse {
                pos: start,
                msg: format!(
                    "block index u{} out of range (1..={})",
                    j,
                    self.spec.t.len()
                ),
            });
        }
        Ok(j - 1)
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        let start = self.pos;
        let mut value: usize = 0;
        let mut any = false;
        while let Some(&c) = self.bytes.get(self.pos) {
            if c.is_ascii_digit() {
                any = true;
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add((c - b'0') as usize))
                    .ok_or_else(|| Error::Parse {
                        pos: start,
                        msg: format!("{what} too large"),
                    })?;
                self.pos += 1;
            } else {
                break;
            }
        }
        if !any {
            return Err(Error::Parse {
                pos: self.pos,
                msg: format!("expected {what}"),
            });
        }
        Ok(value)
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(t: &[usize]) -> SpaceSpec {
        SpaceSpec::new(t.to_vec()).unwrap()
    }

    #[test]
    fn build_sorts_and_flags() {
        let s = SpaceSpec::new(vec![3, 1, 6]).unwrap();
        assert_eq!(s.exponents(), &[1, 3, 6]);
        assert!(!s.input_was_sorted());
        assert_eq!(s.dim(), 10);
        assert_eq!(s.block_count(), 3);
        let sorted = SpaceSpec::new(vec![1, 3, 6]).unwrap();
        assert!(sorted.input_was_sorted());
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(SpaceSpec::new(vec![]), Err(Error::EmptySegre)));
        assert!(matches!(
            SpaceSpec::new(vec![2, 0, 3]),
            Err(Error::ZeroExponent { pos: 1 })
        ));
    }

    #[test]
    fn apply_f_shifts_blocks() {
        let s = spec(&[1, 3, 6]);
        let z = s.parse_vector("u1 + f*u2 + f^2*u3").unwrap();
        let fz = s.apply_f(&z);
        assert_eq!(fz, s.parse_vector("f^2*u2 + f^3*u3").unwrap());
        assert_eq!(s.apply_f_pow(&z, 2), s.parse_vector("f^4*u3").unwrap());
        assert!(s.apply_f_pow(&z, 4).is_zero());
    }

    #[test]
    fn exponent_values() {
        let s = spec(&[1, 3, 6]);
        assert_eq!(s.exponent(&s.zero_vector()), 0);
        assert_eq!(s.exponent(&s.generator(0).unwrap()), 1);
        assert_eq!(s.exponent(&s.parse_vector("u1 + f*u2 + f^2*u3").unwrap()), 4);
        assert_eq!(s.exponent(&s.parse_vector("f^5*u3").unwrap()), 1);
    }

    #[test]
    fn height_values() {
        let s = spec(&[1, 3, 6]);
        assert_eq!(s.height(&s.zero_vector()), Height::Infinite);
        assert_eq!(
            s.height(&s.parse_vector("f*u2 + f^4*u3").unwrap()),
            Height::Finite(1)
        );
        assert_eq!(s.height(&s.generator(2).unwrap()), Height::Finite(0));
        assert_eq!(s.height(&s.parse_vector("f^5*u3").unwrap()), Height::Finite(5));
    }

    #[test]
    fn height_agrees_with_membership_scan() {
        // Independent route: h(x) is the largest q with x in f^q V.
        let s = spec(&[1, 3, 6]);
        for x in s.full_space().basis() {
            let mut expect = None;
            for q in 0..=s.dim() {
                if s.image_power(q).contains_vector(x).unwrap() {
                    expect = Some(q);
                }
            }
            assert_eq!(s.height(x), Height::Finite(expect.unwrap()));
        }
        let mixed = s.parse_vector("f*u2 + f^4*u3").unwrap();
        assert!(s.image_power(1).contains_vector(&mixed).unwrap());
        assert!(!s.image_power(2).contains_vector(&mixed).unwrap());
    }

    #[test]
    fn kernel_and_image_dimensions() {
        let s = spec(&[1, 3, 6]);
        assert_eq!(s.kernel_power(0).dim(), 0);
        assert_eq!(s.kernel_power(1).dim(), 3);
        assert_eq!(s.image_power(2).dim(), 5);
        assert_eq!(s.image_power(0).dim(), 10);
        // dim V[f^j] + dim f^j V = n for every j.
        for j in 0..=6 {
            assert_eq!(s.kernel_power(j).dim() + s.image_power(j).dim(), 10);
        }
        // Saturation.
        assert_eq!(s.kernel_power(99), s.full_space());
        assert!(s.image_power(99).is_zero());
    }

    #[test]
    fn kernel_of_f_contents() {
        let s = spec(&[1, 3, 6]);
        let k = s.kernel_power(1);
        for expr in ["u1", "f^2*u2", "f^5*u3"] {
            assert!(k.contains_vector(&s.parse_vector(expr).unwrap()).unwrap());
        }
        assert!(!k.contains_vector(&s.parse_vector("f*u2").unwrap()).unwrap());
    }

    #[test]
    fn cyclic_span_example() {
        let s = spec(&[1, 3, 6]);
        let x = s.parse_vector("u1 + f*u2").unwrap();
        let span = s.cyclic_span(&x);
        assert_eq!(span.dim(), 2);
        assert!(span.contains_vector(&s.parse_vector("f^2*u2").unwrap()).unwrap());
        assert_eq!(span.dim(), s.exponent(&x));
    }

    #[test]
    fn projection_splits_vector() {
        let s = spec(&[1, 3, 6]);
        let z = s.parse_vector("u1 + f*u2 + f^2*u3").unwrap();
        assert_eq!(s.projection(0, &z).unwrap(), s.parse_vector("u1").unwrap());
        assert_eq!(s.projection(1, &z).unwrap(), s.parse_vector("f*u2").unwrap());
        let mut back = s.zero_vector();
        for j in 0..3 {
            back ^= &s.projection(j, &z).unwrap();
        }
        assert_eq!(back, z);
        assert!(matches!(s.projection(3, &z), Err(Error::BlockIndex { .. })));
    }

    proptest! {
        #[test]
        fn projection_commutes_with_f(bits in proptest::collection::vec(any::<bool>(), 10)) {
            let s = spec(&[1, 3, 6]);
            let mut x = s.zero_vector();
            for (i, b) in bits.into_iter().enumerate() {
                x.set(i, b);
            }
            for j in 0..s.block_count() {
                let a = s.apply_f(&s.projection(j, &x).unwrap());
                let b = s.projection(j, &s.apply_f(&x)).unwrap();
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn height_grows_under_f(bits in proptest::collection::vec(any::<bool>(), 10)) {
            let s = spec(&[1, 3, 6]);
            let mut x = s.zero_vector();
            for (i, b) in bits.into_iter().enumerate() {
                x.set(i, b);
            }
            let fx = s.apply_f(&x);
            match (s.height(&x), s.height(&fx)) {
                (Height::Finite(h), Height::Finite(hf)) => prop_assert!(hf > h),
                (_, Height::Infinite) => {}
                (Height::Infinite, Height::Finite(_)) => prop_assert!(false, "f preserves zero"),
            }
        }
    }

    #[test]
    fn generator_detection() {
        let s = spec(&[1, 3, 6]);
        assert_eq!(s.is_generator(&s.parse_vector("u2 + f^3*u3").unwrap()), Some(3));
        assert_eq!(s.is_generator(&s.generator(0).unwrap()), Some(1));
        assert_eq!(s.is_generator(&s.generator(2).unwrap()), Some(6));
        // e = 4 is not a block exponent.
        assert_eq!(s.is_generator(&s.parse_vector("u1 + f*u2 + f^2*u3").unwrap()), None);
        // Height 1: not part of any generator tuple.
        assert_eq!(s.is_generator(&s.parse_vector("f*u2").unwrap()), None);
        assert_eq!(s.is_generator(&s.zero_vector()), None);
        // u2 + f^2*u3 has e = 4, also not a block exponent.
        assert_eq!(s.is_generator(&s.parse_vector("u2 + f^2*u3").unwrap()), None);
    }

    /// Exhaustive cross-check at small sizes: x extends to a generator tuple
    /// with exponent t iff the cyclic span of x admits an f-invariant
    /// complement and e(x) = t is a block exponent.
    #[test]
    fn generator_iff_invariant_complement() {
        for t in [vec![2usize], vec![1, 2], vec![2, 2], vec![1, 3]] {
            let s = spec(&t);
            let n = s.dim();
            let full = s.full_space();
            let invariant_subspaces: Vec<_> =
                crate::gf2::enumerate_subspaces(&full, None, 12)
                    .unwrap()
                    .filter(|c| {
                        c.basis()
                            .iter()
                            .all(|v| c.contains_vector(&s.apply_f(v)).unwrap())
                    })
                    .collect();
            let mut x = Vec2::zero(n);
            for bits in 0..(1u64 << n) {
                for i in 0..n {
                    x.set(i, bits >> i & 1 == 1);
                }
                let span = s.cyclic_span(&x);
                let has_complement = invariant_subspaces.iter().any(|c| {
                    c.dim() + span.dim() == n && c.intersect(&span).unwrap().is_zero()
                });
                let is_gen = s.is_generator(&x).is_some();
                let expected = !x.is_zero()
                    && s.t.contains(&s.exponent(&x))
                    && has_complement;
                assert_eq!(is_gen, expected, "t={t:?} x={x}");
            }
        }
    }

    #[test]
    fn unrepeated_indices_examples() {
        assert_eq!(spec(&[1, 3, 6]).unrepeated_indices(), vec![0, 1, 2]);
        assert_eq!(spec(&[2, 2]).unrepeated_indices(), Vec::<usize>::new());
        assert_eq!(spec(&[1, 1, 4]).unrepeated_indices(), vec![2]);
        assert_eq!(spec(&[1, 2, 2, 5]).unrepeated_indices(), vec![0, 3]);
        assert!(spec(&[1, 1, 4]).is_unrepeated(2));
        assert!(!spec(&[1, 1, 4]).is_unrepeated(0));
    }

    #[test]
    fn ulm_invariants_match_multiplicities() {
        for t in [vec![1usize, 3, 6], vec![2, 2], vec![1, 1, 4], vec![3]] {
            let s = spec(&t);
            let max = *t.iter().max().unwrap();
            for q in 0..=max + 1 {
                let mult = t.iter().filter(|&&e| e == q + 1).count();
                assert_eq!(s.ulm_invariant(q), mult, "t={t:?} q={q}");
            }
        }
    }

    #[test]
    fn ulm_examples() {
        assert_eq!(spec(&[1, 3, 6]).ulm_invariant(5), 1);
        assert_eq!(spec(&[2, 2]).ulm_invariant(1), 2);
    }

    #[test]
    fn parse_golden() {
        let s = spec(&[1, 3, 6]);
        let z = s.parse_vector(" f^2*u3+u1 + f*u2 ").unwrap();
        assert_eq!(s.format_vector(&z), "u1 + f*u2 + f^2*u3");
        assert!(s.parse_vector("0").unwrap().is_zero());
        assert_eq!(
            s.parse_vector("f^1*u2").unwrap(),
            s.parse_vector("f*u2").unwrap()
        );
        // GF(2): repeated terms cancel.
        assert!(s.parse_vector("u1 + u1").unwrap().is_zero());
    }

    #[test]
    fn parse_errors_are_positioned() {
        let s = spec(&[1, 3, 6]);
        match s.parse_vector("u1 + u7") {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 6);
                assert!(msg.contains("u7"), "{msg}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(s.parse_vector(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(s.parse_vector("u1 +"), Err(Error::Parse { .. })));
        assert!(matches!(s.parse_vector("f^9*u2"), Err(Error::Parse { .. })));
        assert!(matches!(s.parse_vector("f u2"), Err(Error::Parse { .. })));
        assert!(matches!(s.parse_vector("u0"), Err(Error::Parse { .. })));
        assert!(matches!(s.parse_vector("x1"), Err(Error::Parse { .. })));
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(bits in proptest::collection::vec(any::<bool>(), 10)) {
            let s = spec(&[1, 3, 6]);
            let mut x = s.zero_vector();
            for (i, b) in bits.into_iter().enumerate() {
                x.set(i, b);
            }
            let rendered = s.format_vector(&x);
            prop_assert_eq!(s.parse_vector(&rendered).unwrap(), x);
        }
    }
}
