//! The lattice of hyperinvariant subspaces and the frame of a
//! characteristic subspace.
//!
//! Hyperinvariant subspaces are parametrized by admissible tuples: `r` with
//! `0 <= r_1 <= ... <= r_m` and `0 <= t_1 - r_1 <= ... <= t_m - r_m`. The
//! subspace `W(r) = f^{r_1}<u_1> + ... + f^{r_m}<u_m>` depends only on the
//! tuple, the map is order-reversing, and meet/join are componentwise
//! min/max. Every characteristic subspace `X` is framed by two lattice
//! members: the largest hyperinvariant subspace inside it and the smallest
//! one containing it.

use std::fmt;

use serde::Serialize;

use crate::commutant::{classify_spanning, Classification};
use crate::error::{Error, Hypothesis, Result};
use crate::gf2::{SpanBuilder, Subspace, Vec2};
use crate::modspace::SpaceSpec;

/// Checks the two admissibility chains. Errors only on a length mismatch.
pub fn is_admissible(spec: &SpaceSpec, r: &[usize]) -> Result<bool> {
    let t = spec.exponents();
    if r.len() != t.len() {
        return Err(Error::TupleLength {
            expected: t.len(),
            got: r.len(),
        });
    }
    let bounded = r.iter().zip(t).all(|(&rj, &tj)| rj <= tj);
    let chain = r.windows(2).all(|w| w[0] <= w[1]);
    let cochain = (1..t.len()).all(|j| t[j - 1] - r[j - 1].min(t[j - 1]) <= t[j] - r[j].min(t[j]));
    Ok(bounded && chain && cochain)
}

/// An admissible tuple: an element of the lattice `L(t)`.
///
/// Validated at construction, so downstream operations take admissibility
/// for granted. The derived ordering is lexicographic (used for canonical
/// listings); the lattice order is [`RTuple::leq`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RTuple {
    values: Vec<usize>,
}

impl RTuple {
    pub fn new(spec: &SpaceSpec, values: Vec<usize>) -> Result<Self> {
        if !is_admissible(spec, &values)? {
            return Err(Hypothesis::Inadmissible { tuple: values }.into());
        }
        Ok(RTuple { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Componentwise lattice order.
    pub fn leq(&self, other: &RTuple) -> bool {
        assert_eq!(self.len(), other.len(), "tuple length mismatch");
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

impl std::ops::Index<usize> for RTuple {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        &self.values[i]
    }
}

impl fmt::Display for RTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The hyperinvariant subspace `W(r) = f^{r_1}<u_1> + ... + f^{r_m}<u_m>`,
/// computed blockwise. Debug builds assert the equivalent presentation
/// `sum_j (f^{r_j}V cap V[f^{t_j - r_j}])`.
pub fn w_subspace(spec: &SpaceSpec, r: &RTuple) -> Subspace {
    assert_eq!(r.len(), spec.block_count(), "tuple length mismatch");
    let t = spec.exponents();
    let mut b = SpanBuilder::new(spec.dim());
    for j in 0..t.len() {
        for l in r[j]..t[j] {
            b.insert(&spec.basis_vector(j, l).expect("in range"));
        }
    }
    let w = Subspace::from_builder(b);
    debug_assert_eq!(w.dim(), (0..t.len()).map(|j| t[j] - r[j]).sum::<usize>());
    debug_assert_eq!(w, {
        let mut acc = Subspace::zero(spec.dim());
        for j in 0..t.len() {
            let piece = spec
                .image_power(r[j])
                .intersect(&spec.kernel_power(t[j] - r[j]))
                .expect("same ambient");
            acc = acc.sum(&piece).expect("same ambient");
        }
        acc
    });
    w
}

/// All admissible tuples, lexicographically sorted.
pub fn enumerate_lattice(spec: &SpaceSpec) -> Vec<RTuple> {
    let t = spec.exponents();
    let mut out = Vec::new();
    let mut current = vec![0usize; t.len()];
    fn rec(t: &[usize], j: usize, current: &mut Vec<usize>, out: &mut Vec<RTuple>) {
        if j == t.len() {
            out.push(RTuple {
                values: current.clone(),
            });
            return;
        }
        let (lo, hi) = if j == 0 {
            (0, t[0])
        } else {
            // r_j >= r_{j-1} and t_j - r_j >= t_{j-1} - r_{j-1}.
            (current[j - 1], current[j - 1] + t[j] - t[j - 1])
        };
        for v in lo..=hi.min(t[j]) {
            current[j] = v;
            rec(t, j + 1, current, out);
        }
    }
    rec(t, 0, &mut current, &mut out);
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

/// Componentwise (min, max). Both results are admissible again, and under
/// `W` they realize sum and intersection: `W(min) = W(a) + W(b)`,
/// `W(max) = W(a) cap W(b)`.
pub fn tuple_meet_join(spec: &SpaceSpec, a: &RTuple, b: &RTuple) -> (RTuple, RTuple) {
    assert_eq!(a.len(), b.len(), "tuple length mismatch");
    let min: Vec<usize> = a.values.iter().zip(&b.values).map(|(&x, &y)| x.min(y)).collect();
    let max: Vec<usize> = a.values.iter().zip(&b.values).map(|(&x, &y)| x.max(y)).collect();
    let meet = RTuple::new(spec, min).expect("min of admissible tuples is admissible");
    let join = RTuple::new(spec, max).expect("max of admissible tuples is admissible");
    (meet, join)
}

/// The lattice anti-automorphism `r -> t - r`; `W(t - r)` is the image of
/// `W(r)` under the duality of the hyperinvariant lattice.
pub fn duality(spec: &SpaceSpec, r: &RTuple) -> RTuple {
    let t = spec.exponents();
    assert_eq!(r.len(), t.len(), "tuple length mismatch");
    let values: Vec<usize> = t.iter().zip(&r.values).map(|(&tj, &rj)| tj - rj).collect();
    RTuple::new(spec, values).expect("dual of admissible tuple is admissible")
}

/// The hyperinvariant frame of a characteristic subspace `X`:
/// `kernel = W(r)` is the largest hyperinvariant subspace inside `X` and
/// `hull = W(mu)` the smallest one containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    /// `X_H = W(r)`, the bottom of the frame.
    pub kernel: Subspace,
    /// `X^h = W(mu)`, the top of the frame.
    pub hull: Subspace,
    pub r: RTuple,
    pub mu: RTuple,
    /// Blocks where the frame is strict: `mu_j = r_j - 1`. Always a subset
    /// of the unrepeated indices.
    pub j_set: Vec<usize>,
}

/// Computes the frame of `X`, rejecting non-characteristic input (the frame
/// identities are only valid for characteristic subspaces).
pub fn frame(spec: &SpaceSpec, x: &Subspace) -> Result<Frame> {
    let class = classify_spanning(spec, x);
    if !class.characteristic {
        return Err(Hypothesis::NotCharacteristic.into());
    }
    Ok(frame_of_classified(spec, x, class))
}

/// Frame computation for a subspace already known to be characteristic.
/// Used by scans that have just classified `x` themselves.
pub(crate) fn frame_of_classified(spec: &SpaceSpec, x: &Subspace, class: Classification) -> Frame {
    debug_assert!(class.characteristic);
    let t = spec.exponents();
    let m = spec.block_count();
    let mut r = Vec::with_capacity(m);
    let mut mu = Vec::with_capacity(m);
    for j in 0..m {
        let cyclic = spec.cyclic_span(&spec.generator(j).expect("in range"));
        let inner = x.intersect(&cyclic).expect("same ambient");
        r.push(t[j] - inner.dim());
        let projected: Vec<Vec2> = x
            .basis()
            .iter()
            .map(|b| spec.projection(j, b).expect("in range"))
            .collect();
        let outer = Subspace::from_spanning(spec.dim(), &projected).expect("same ambient");
        mu.push(t[j] - outer.dim());
        debug_assert!(outer.contains_subspace(&inner).unwrap());
        debug_assert!(mu[j] == r[j] || mu[j] + 1 == r[j]);
    }
    let j_set: Vec<usize> = (0..m).filter(|&j| mu[j] < r[j]).collect();
    debug_assert!(j_set.iter().all(|&j| spec.is_unrepeated(j)));
    let r = RTuple::new(spec, r).expect("frame tuple is admissible");
    let mu = RTuple::new(spec, mu).expect("frame tuple is admissible");
    let kernel = w_subspace(spec, &r);
    let hull = w_subspace(spec, &mu);
    debug_assert!(x.contains_subspace(&kernel).unwrap());
    debug_assert!(hull.contains_subspace(x).unwrap());
    if class.hyperinvariant {
        debug_assert!(j_set.is_empty());
    }
    Frame {
        kernel,
        hull,
        r,
        mu,
        j_set,
    }
}

/// A necessary condition on frames that failed; see [`necessary_conditions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `|J|` must be 0 or at least 2.
    JTooSmall,
    /// `J` must consist of blocks with unrepeated exponent.
    JNotUnrepeated { index: usize },
    /// For `p < q` in `J`: `mu_p < mu_q`.
    MuChain { p: usize, q: usize },
    /// For `q` in `J`: `0 < t_q - mu_q`.
    CoexponentPositivity { index: usize },
    /// For `p < q` in `J`: `t_p - mu_p < t_q - mu_q`.
    CoexponentChain { p: usize, q: usize },
    /// For `p < q` in `J`: `t_p + 1 < t_q`.
    Gap { p: usize, q: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::JTooSmall => write!(f, "|J| >= 2 violated"),
            Violation::JNotUnrepeated { index } => {
                write!(f, "J within unrepeated indices violated at block {index}")
            }
            Violation::MuChain { p, q } => write!(f, "mu[{p}] < mu[{q}] violated"),
            Violation::CoexponentPositivity { index } => {
                write!(f, "0 < t[{index}] - mu[{index}] violated")
            }
            Violation::CoexponentChain { p, q } => {
                write!(f, "t[{p}] - mu[{p}] < t[{q}] - mu[{q}] violated")
            }
            Violation::Gap { p, q } => write!(f, "t[{p}] + 1 < t[{q}] violated"),
        }
    }
}

/// Checks the necessary conditions a frame of a characteristic subspace
/// must satisfy, returning every violated one (empty = all hold).
pub fn necessary_conditions(spec: &SpaceSpec, fr: &Frame) -> Vec<Violation> {
    necessary_conditions_raw(spec, &fr.j_set, fr.mu.values())
}

/// Same checks from raw parts: the strict index set `J` and the tuple `mu`.
pub fn necessary_conditions_raw(spec: &SpaceSpec, j_set: &[usize], mu: &[usize]) -> Vec<Violation> {
    let t = spec.exponents();
    assert_eq!(mu.len(), t.len(), "tuple length mismatch");
    assert!(
        j_set.windows(2).all(|w| w[0] < w[1]) && j_set.iter().all(|&j| j < t.len()),
        "J must be a strictly increasing list of valid block indices"
    );
    let mut out = Vec::new();
    if j_set.len() == 1 {
        out.push(Violation::JTooSmall);
    }
    for &j in j_set {
        if !spec.is_unrepeated(j) {
            out.push(Violation::JNotUnrepeated { index: j });
        }
        if mu[j] >= t[j] {
            out.push(Violation::CoexponentPositivity { index: j });
        }
    }
    for w in j_set.windows(2) {
        let (p, q) = (w[0], w[1]);
        if mu[p] >= mu[q] {
            out.push(Violation::MuChain { p, q });
        }
        if t[p] - mu[p].min(t[p]) >= t[q] - mu[q].min(t[q]) {
            out.push(Violation::CoexponentChain { p, q });
        }
        if t[p] + 1 >= t[q] {
            out.push(Violation::Gap { p, q });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutant::{characteristic_hull_spanning, hyperinvariant_hull_spanning};

    fn spec(t: &[usize]) -> SpaceSpec {
        SpaceSpec::new(t.to_vec()).unwrap()
    }

    fn rt(s: &SpaceSpec, v: &[usize]) -> RTuple {
        RTuple::new(s, v.to_vec()).unwrap()
    }

    fn sp(s: &SpaceSpec, exprs: &[&str]) -> Subspace {
        let rows: Vec<Vec2> = exprs.iter().map(|e| s.parse_vector(e).unwrap()).collect();
        Subspace::from_spanning(s.dim(), &rows).unwrap()
    }

    #[test]
    fn admissibility_goldens() {
        let s = spec(&[1, 3, 6]);
        assert!(is_admissible(&s, &[1, 2, 3]).unwrap());
        assert!(is_admissible(&s, &[0, 0, 0]).unwrap());
        assert!(is_admissible(&s, &[1, 3, 6]).unwrap());
        assert!(!is_admissible(&s, &[2, 1, 0]).unwrap());
        // r nondecreasing but coexponent chain broken: t - r = (0, 1, 3) ok,
        // while (0, 2, 2) gives t - r = (1, 1, 4) ok; break it with (0,3,3):
        // t - r = (1, 0, 3) is not nondecreasing.
        assert!(!is_admissible(&s, &[0, 3, 3]).unwrap());
        assert!(matches!(
            is_admissible(&s, &[1, 2]),
            Err(Error::TupleLength { expected: 3, got: 2 })
        ));
        assert!(matches!(
            RTuple::new(&s, vec![2, 1, 0]),
            Err(Error::Hypothesis(Hypothesis::Inadmissible { .. }))
        ));
    }

    #[test]
    fn w_subspace_goldens() {
        let s = spec(&[1, 3, 6]);
        let w_r = w_subspace(&s, &rt(&s, &[1, 2, 3]));
        assert_eq!(w_r, sp(&s, &["f^2*u2", "f^3*u3", "f^4*u3", "f^5*u3"]));
        assert_eq!(w_r.dim(), 4);
        assert_eq!(w_subspace(&s, &rt(&s, &[0, 0, 0])), s.full_space());
        let w_mu = w_subspace(&s, &rt(&s, &[0, 1, 2]));
        assert_eq!(w_mu.dim(), 7);
        assert!(w_mu.contains_subspace(&w_r).unwrap());
        assert!(w_subspace(&s, &rt(&s, &[1, 3, 6])).is_zero());
    }

    #[test]
    fn w_forms_agree() {
        // The direct blockwise form against the image-kernel form, every
        // admissible tuple of a few shapes.
        for t in [vec![1usize, 3, 6], vec![2, 2], vec![1, 2, 2]] {
            let s = spec(&t);
            for r in enumerate_lattice(&s) {
                let blockwise = w_subspace(&s, &r);
                let mut acc = Subspace::zero(s.dim());
                for j in 0..s.block_count() {
                    let piece = s
                        .image_power(r[j])
                        .intersect(&s.kernel_power(s.exponents()[j] - r[j]))
                        .unwrap();
                    acc = acc.sum(&piece).unwrap();
                }
                assert_eq!(blockwise, acc, "t={t:?} r={r}");
            }
        }
    }

    #[test]
    fn lattice_enumeration() {
        let s1 = spec(&[1]);
        assert_eq!(
            enumerate_lattice(&s1),
            vec![rt(&s1, &[0]), rt(&s1, &[1])]
        );
        let s2 = spec(&[2]);
        assert_eq!(
            enumerate_lattice(&s2),
            vec![rt(&s2, &[0]), rt(&s2, &[1]), rt(&s2, &[2])]
        );
        let s = spec(&[1, 3, 6]);
        let lattice = enumerate_lattice(&s);
        assert_eq!(lattice.len(), 24);
        for r in &lattice {
            assert!(is_admissible(&s, r.values()).unwrap());
        }
        // Lexicographically sorted, no duplicates.
        assert!(lattice.windows(2).all(|w| w[0] < w[1]));
        // W is injective on the lattice.
        let distinct: std::collections::BTreeSet<Subspace> =
            lattice.iter().map(|r| w_subspace(&s, r)).collect();
        assert_eq!(distinct.len(), 24);
    }

    #[test]
    fn meet_join_goldens() {
        let s = spec(&[1, 3, 6]);
        let a = rt(&s, &[1, 2, 3]);
        let b = rt(&s, &[0, 1, 2]);
        assert_eq!(tuple_meet_join(&s, &a, &a), (a.clone(), a.clone()));
        assert_eq!(tuple_meet_join(&s, &a, &b), (b.clone(), a.clone()));
        let c = rt(&s, &[0, 2, 2]);
        let d = rt(&s, &[1, 1, 3]);
        let (meet, join) = tuple_meet_join(&s, &c, &d);
        assert_eq!(meet, rt(&s, &[0, 1, 2]));
        assert_eq!(join, rt(&s, &[1, 2, 3]));
        assert_eq!(
            w_subspace(&s, &meet),
            w_subspace(&s, &c).sum(&w_subspace(&s, &d)).unwrap()
        );
        assert_eq!(
            w_subspace(&s, &join),
            w_subspace(&s, &c).intersect(&w_subspace(&s, &d)).unwrap()
        );
    }

    #[test]
    fn lattice_laws_all_pairs() {
        let s = spec(&[1, 3, 6]);
        let lattice = enumerate_lattice(&s);
        for a in &lattice {
            for b in &lattice {
                let (meet, join) = tuple_meet_join(&s, a, b);
                let (meet2, join2) = tuple_meet_join(&s, b, a);
                assert_eq!(meet, meet2);
                assert_eq!(join, join2);
                assert!(meet.leq(a) && meet.leq(b));
                assert!(a.leq(&join) && b.leq(&join));
                // Order reversal under W.
                assert_eq!(
                    a.leq(b),
                    w_subspace(&s, a)
                        .contains_subspace(&w_subspace(&s, b))
                        .unwrap(),
                    "a={a} b={b}"
                );
                // Subspace identities.
                assert_eq!(
                    w_subspace(&s, &meet),
                    w_subspace(&s, a).sum(&w_subspace(&s, b)).unwrap()
                );
                assert_eq!(
                    w_subspace(&s, &join),
                    w_subspace(&s, a).intersect(&w_subspace(&s, b)).unwrap()
                );
            }
        }
    }

    #[test]
    fn duality_goldens_and_laws() {
        let s = spec(&[1, 3, 6]);
        assert_eq!(duality(&s, &rt(&s, &[0, 0, 0])), rt(&s, &[1, 3, 6]));
        assert_eq!(duality(&s, &rt(&s, &[1, 2, 3])), rt(&s, &[0, 1, 3]));
        let lattice = enumerate_lattice(&s);
        for r in &lattice {
            assert_eq!(duality(&s, &duality(&s, r)), *r);
        }
        // De Morgan under W: dual of a sum is the intersection of duals.
        for a in &lattice {
            for b in &lattice {
                let (meet, join) = tuple_meet_join(&s, a, b);
                let da = w_subspace(&s, &duality(&s, a));
                let db = w_subspace(&s, &duality(&s, b));
                assert_eq!(w_subspace(&s, &duality(&s, &meet)), da.intersect(&db).unwrap());
                assert_eq!(w_subspace(&s, &duality(&s, &join)), da.sum(&db).unwrap());
            }
        }
    }

    #[test]
    fn frame_goldens() {
        let s = spec(&[1, 3, 6]);
        let g = characteristic_hull_spanning(&s, &sp(&s, &["u1 + f*u2 + f^2*u3"]));
        let fr = frame(&s, &g).unwrap();
        assert_eq!(fr.r, rt(&s, &[1, 2, 3]));
        assert_eq!(fr.mu, rt(&s, &[0, 1, 2]));
        assert_eq!(fr.j_set, vec![0, 1, 2]);
        assert_eq!(fr.kernel, w_subspace(&s, &fr.r));
        assert_eq!(fr.hull, w_subspace(&s, &fr.mu));
        assert_eq!(fr.kernel.dim(), 4);
        assert_eq!(fr.hull.dim(), 7);

        let f_space =
            characteristic_hull_spanning(&s, &sp(&s, &["u1 + f*u2", "f*u2 + f^2*u3"]));
        let fr_f = frame(&s, &f_space).unwrap();
        assert_eq!((&fr_f.r, &fr_f.mu, &fr_f.j_set), (&fr.r, &fr.mu, &fr.j_set));

        for r in enumerate_lattice(&s) {
            let w = w_subspace(&s, &r);
            let fw = frame(&s, &w).unwrap();
            assert_eq!(fw.r, r);
            assert_eq!(fw.mu, r);
            assert!(fw.j_set.is_empty());
            assert_eq!(fw.kernel, w);
            assert_eq!(fw.hull, w);
        }
    }

    #[test]
    fn frame_rejects_non_characteristic() {
        let s = spec(&[1, 3, 6]);
        assert!(matches!(
            frame(&s, &sp(&s, &["u3"])),
            Err(Error::Hypothesis(Hypothesis::NotCharacteristic))
        ));
        // f-invariant but not characteristic: a single cyclic line inside
        // the f^5 layer is fine, but <u2> is moved by automorphisms.
        let cyclic_u2 = sp(&s, &["u2", "f*u2", "f^2*u2"]);
        assert!(frame(&s, &cyclic_u2).is_err());
    }

    #[test]
    fn frame_extremality() {
        // kernel is the largest lattice member inside X, hull the smallest
        // containing it, cross-checked against the whole lattice and the
        // hyperinvariant hull.
        let s = spec(&[1, 3, 6]);
        let g = characteristic_hull_spanning(&s, &sp(&s, &["u1 + f*u2 + f^2*u3"]));
        let fr = frame(&s, &g).unwrap();
        assert_eq!(fr.hull, hyperinvariant_hull_spanning(&s, &g));
        for r in enumerate_lattice(&s) {
            let w = w_subspace(&s, &r);
            if g.contains_subspace(&w).unwrap() {
                assert!(fr.kernel.contains_subspace(&w).unwrap());
            }
            if w.contains_subspace(&g).unwrap() {
                assert!(w.contains_subspace(&fr.hull).unwrap());
            }
        }
        // The strict-difference span: hull = kernel + D with
        // D = span{f^{mu_i} u_i : i in J}.
        let d_rows: Vec<Vec2> = fr
            .j_set
            .iter()
            .map(|&i| s.basis_vector(i, fr.mu[i]).unwrap())
            .collect();
        let d = Subspace::from_spanning(s.dim(), &d_rows).unwrap();
        assert_eq!(fr.hull, fr.kernel.sum(&d).unwrap());
        assert_eq!(fr.hull.dim(), fr.kernel.dim() + d.dim());
    }

    #[test]
    fn necessary_conditions_goldens() {
        let s = spec(&[1, 3, 6]);
        let g = characteristic_hull_spanning(&s, &sp(&s, &["u1 + f*u2 + f^2*u3"]));
        assert!(necessary_conditions(&s, &frame(&s, &g).unwrap()).is_empty());

        // Hand-built frame with |J| = 1.
        let mu = rt(&s, &[0, 1, 2]);
        let r = rt(&s, &[1, 1, 2]);
        let bad = Frame {
            kernel: w_subspace(&s, &r),
            hull: w_subspace(&s, &mu),
            r,
            mu,
            j_set: vec![0],
        };
        assert_eq!(necessary_conditions(&s, &bad), vec![Violation::JTooSmall]);
        assert_eq!(bad.j_set.len(), 1);

        // Exponent gap of one: t_p + 1 < t_q must fail.
        let s2 = spec(&[2, 3, 6]);
        let violations = necessary_conditions_raw(&s2, &[0, 1], &[0, 1, 2]);
        assert!(violations.contains(&Violation::Gap { p: 0, q: 1 }));
        // With a unit exponent gap one of the two strict chains must break
        // as well; the gap is never the only violation.
        assert!(violations.len() >= 2);

        // Repeated exponent in J.
        let s3 = spec(&[2, 2, 5]);
        let violations = necessary_conditions_raw(&s3, &[0, 2], &[0, 0, 1]);
        assert!(violations.contains(&Violation::JNotUnrepeated { index: 0 }));

        // Coexponent positivity: mu_q = t_q.
        let s4 = spec(&[1, 3, 6]);
        let violations = necessary_conditions_raw(&s4, &[1, 2], &[0, 1, 6]);
        assert!(violations.contains(&Violation::CoexponentPositivity { index: 2 }));
    }

    #[test]
    fn violation_display() {
        assert_eq!(Violation::JTooSmall.to_string(), "|J| >= 2 violated");
        assert_eq!(
            Violation::Gap { p: 0, q: 1 }.to_string(),
            "t[0] + 1 < t[1] violated"
        );
        assert_eq!(
            Violation::MuChain { p: 1, q: 2 }.to_string(),
            "mu[1] < mu[2] violated"
        );
    }
}
