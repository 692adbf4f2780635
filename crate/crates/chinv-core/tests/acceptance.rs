//! Acceptance gate: ten end-to-end criteria, one printed pass/fail line
//! each (visible under `--nocapture`). Time bounds are asserted where the
//! criterion states one.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use chinv_core::charframe::{
    build_interval, classify_echelon, echelon_subspace, enumerate_extensions, interval_elements,
    max_extension, min_extension, subspace_echelon, IntervalSpec, PartialTuple,
};
use chinv_core::commutant::{auto_stream, characteristic_hull_spanning, classify_spanning, f_stable};
use chinv_core::gf2::{enumerate_subspaces, galois_number, q_binomial, Mat2, Subspace, Vec2};
use chinv_core::hyperlattice::{frame, is_admissible, w_subspace, RTuple};
use chinv_core::modspace::SpaceSpec;
use chinv_core::oracle::{check_duality, check_hyperinvariant_lattice, check_shoda_scan, scan_all};
use chinv_core::Caps;
use num_bigint::BigUint;

fn criterion<F: FnOnce()>(number: usize, name: &str, body: F) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) => println!("ACCEPTANCE {number} {name}: PASS ({elapsed:.2?})"),
        Err(cause) => {
            println!("ACCEPTANCE {number} {name}: FAIL ({elapsed:.2?})");
            resume_unwind(cause);
        }
    }
}

fn spec136() -> SpaceSpec {
    SpaceSpec::new(vec![1, 3, 6]).unwrap()
}

fn rt(spec: &SpaceSpec, values: &[usize]) -> RTuple {
    RTuple::new(spec, values.to_vec()).unwrap()
}

fn span(spec: &SpaceSpec, exprs: &[&str]) -> Subspace {
    let vectors: Vec<Vec2> = exprs.iter().map(|e| spec.parse_vector(e).unwrap()).collect();
    Subspace::from_spanning(spec.dim(), &vectors).unwrap()
}

fn running_example(spec: &SpaceSpec) -> (Subspace, Subspace) {
    let g = characteristic_hull_spanning(spec, &span(spec, &["u1 + f*u2 + f^2*u3"]));
    let f = characteristic_hull_spanning(spec, &span(spec, &["u1 + f*u2", "f*u2 + f^2*u3"]));
    (g, f)
}

fn interval136(spec: &SpaceSpec) -> IntervalSpec {
    build_interval(spec, &[0, 1, 2], &rt(spec, &[0, 1, 2])).unwrap()
}

fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for first in min..=n {
            cur.push(first);
            rec(n - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, &mut Vec::new(), &mut out);
    out
}

#[test]
fn acceptance_01_running_example_frames() {
    criterion(1, "running example frames", || {
        let start = Instant::now();
        let s = spec136();
        let (g, f) = running_example(&s);
        assert_eq!(g.dim(), 5);
        assert_eq!(f.dim(), 6);
        let kernel = w_subspace(&s, &rt(&s, &[1, 2, 3]));
        let hull = w_subspace(&s, &rt(&s, &[0, 1, 2]));
        assert_eq!(kernel.dim(), 4);
        assert_eq!(hull.dim(), 7);
        for x in [&g, &f] {
            let fr = frame(&s, x).unwrap();
            assert_eq!(fr.kernel, kernel);
            assert_eq!(fr.hull, hull);
            assert_eq!(fr.r, rt(&s, &[1, 2, 3]));
            assert_eq!(fr.mu, rt(&s, &[0, 1, 2]));
            assert_eq!(fr.j_set, vec![0, 1, 2]);
        }
        assert!(start.elapsed() < Duration::from_secs(1), "criterion bound is 1 s");
    });
}

#[test]
fn acceptance_02_interval_census() {
    criterion(2, "interval census", || {
        let s = spec136();
        let iv = interval136(&s);
        let elements: Vec<(Subspace, Subspace)> = interval_elements(&s, &iv).collect();
        assert_eq!(elements.len(), 16);
        let hyper = elements
            .iter()
            .filter(|(_, x)| classify_spanning(&s, x).hyperinvariant)
            .count();
        assert_eq!(hyper, 8);
        assert_eq!(elements.len() - hyper, 8);
        let by_binomials: BigUint = (0..=3).map(|j| q_binomial(3, j, 2).unwrap()).sum();
        assert_eq!(by_binomials, BigUint::from(16u32));
    });
}

#[test]
fn acceptance_03_echelon_classification() {
    criterion(3, "echelon classification", || {
        let s = spec136();
        let iv = interval136(&s);
        let (g, f) = running_example(&s);
        let mut full_frame = Vec::new();
        let mut classes = 0;
        for (z, x) in interval_elements(&s, &iv) {
            classes += 1;
            let m = subspace_echelon(&iv, &z).unwrap();
            let c = classify_echelon(&iv, &m).unwrap();
            if c.kernel_is_bottom && c.hull_is_top {
                full_frame.push(x);
            }
        }
        assert_eq!(classes, 16);
        full_frame.sort();
        let mut expected = vec![g.clone(), f.clone()];
        expected.sort();
        assert_eq!(full_frame, expected);
        let m1 = Mat2::from_rows(&["100", "100", "100"], 3).unwrap();
        assert_eq!(echelon_subspace(&s, &iv, &m1).unwrap().1, g);
        let m2 = Mat2::from_rows(&["100", "010", "110"], 3).unwrap();
        assert_eq!(echelon_subspace(&s, &iv, &m2).unwrap().1, f);
    });
}

#[test]
fn acceptance_04_extension_formulas() {
    criterion(4, "extension formulas", || {
        let s = spec136();
        let p = PartialTuple::new(&s, vec![0, 2], vec![0, 2]).unwrap();
        let extensions = enumerate_extensions(&s, &p);
        assert_eq!(
            extensions,
            vec![rt(&s, &[0, 0, 2]), rt(&s, &[0, 1, 2]), rt(&s, &[0, 2, 2])]
        );
        assert_eq!(max_extension(&s, &p), rt(&s, &[0, 2, 2]));
        assert_eq!(min_extension(&s, &p), rt(&s, &[0, 0, 2]));
        let with_admissible_r: Vec<&RTuple> = extensions
            .iter()
            .filter(|mu| {
                let mut r = mu.values().to_vec();
                r[0] += 1;
                r[2] += 1;
                is_admissible(&s, &r).unwrap()
            })
            .collect();
        assert_eq!(
            with_admissible_r,
            vec![&rt(&s, &[0, 1, 2]), &rt(&s, &[0, 2, 2])]
        );
    });
}

#[test]
fn acceptance_05_hyperinvariant_lattice_equivalence() {
    criterion(5, "hyperinvariant lattice equivalence", || {
        let start = Instant::now();
        let caps = Caps {
            max_endo_bits: 26,
            ..Caps::default()
        };
        for n in 1..=6 {
            for t in partitions_of(n) {
                let s = SpaceSpec::new(t.clone()).unwrap();
                let scan = scan_all(&s).unwrap();
                let check = check_hyperinvariant_lattice(&s, &scan, &caps);
                assert!(check.passed, "t = {:?}: {}", t, check.details);
                assert!(
                    !check.details.contains("exceeds the endomorphism cap"),
                    "t = {:?} fell back instead of sweeping: {}",
                    t,
                    check.details
                );
            }
        }
        assert!(start.elapsed() < Duration::from_secs(600), "criterion bound is 10 min");
    });
}

#[test]
fn acceptance_06_shoda_equivalence() {
    criterion(6, "shoda equivalence", || {
        let start = Instant::now();
        for n in 1..=6 {
            for t in partitions_of(n) {
                let s = SpaceSpec::new(t.clone()).unwrap();
                let scan = scan_all(&s).unwrap();
                let check = check_shoda_scan(&s, &scan);
                assert!(check.passed, "t = {:?}: {}", t, check.details);
            }
        }
        assert!(start.elapsed() < Duration::from_secs(600), "criterion bound is 10 min");
    });
}

#[test]
fn acceptance_07_interval_theorem_sweep() {
    criterion(7, "interval theorem sweep", || {
        let start = Instant::now();
        let s = spec136();
        let iv = interval136(&s);
        let elements: Vec<Subspace> = interval_elements(&s, &iv).map(|(_, x)| x).collect();
        assert_eq!(elements.len(), 16);
        for x in &elements {
            assert!(f_stable(&s, x));
        }
        let mut automorphisms = 0u64;
        for alpha in auto_stream(&s, &Caps::default()).unwrap() {
            automorphisms += 1;
            for x in &elements {
                assert!(alpha.stabilizes(&s, x), "automorphism moves an interval element");
            }
        }
        // distinct block exponents: invertible iff all three diagonal
        // coefficients are units, leaving 2^17 of the 2^20 endomorphisms
        assert_eq!(automorphisms, 1 << 17);
        assert!(start.elapsed() < Duration::from_secs(900), "criterion bound is 15 min");
    });
}

#[test]
fn acceptance_08_frame_gap_law() {
    criterion(8, "frame gap law", || {
        let mut checked = 0usize;
        let mut verify = |s: &SpaceSpec, x: &Subspace| {
            let t = s.exponents();
            let fr = frame(s, x).unwrap();
            for j in 0..s.block_count() {
                let expected = fr.r.values()[j] - usize::from(fr.j_set.contains(&j));
                assert_eq!(fr.mu.values()[j], expected, "mu law fails at block {j}");
            }
            assert_ne!(fr.j_set.len(), 1, "singleton J");
            for (a, &p) in fr.j_set.iter().enumerate() {
                for &q in &fr.j_set[a + 1..] {
                    assert!(t[p] + 1 < t[q], "gap law fails at ({p}, {q})");
                }
            }
            checked += 1;
        };
        for n in 1..=6 {
            for t in partitions_of(n) {
                let s = SpaceSpec::new(t).unwrap();
                let scan = scan_all(&s).unwrap();
                for (x, class) in &scan.entries {
                    if class.characteristic {
                        verify(&s, x);
                    }
                }
            }
        }
        let s = spec136();
        let iv = interval136(&s);
        for (_, x) in interval_elements(&s, &iv) {
            verify(&s, &x);
        }
        assert!(checked > 16, "suite should cover the scans and the interval");
    });
}

#[test]
fn acceptance_09_duality_laws() {
    criterion(9, "duality laws", || {
        let start = Instant::now();
        for n in 1..=10 {
            for t in partitions_of(n) {
                let s = SpaceSpec::new(t.clone()).unwrap();
                let check = check_duality(&s);
                assert!(check.passed, "t = {:?}: {}", t, check.details);
            }
        }
        assert!(start.elapsed() < Duration::from_secs(60), "criterion bound is 1 min");
    });
}

#[test]
fn acceptance_10_counting_identity() {
    criterion(10, "counting identity", || {
        let golden: [u64; 6] = [1, 2, 5, 16, 67, 374];
        for (dim, &expected) in golden.iter().enumerate() {
            let counted = enumerate_subspaces(&Subspace::full(dim), None, 12)
                .unwrap()
                .count() as u64;
            assert_eq!(counted, expected, "ambient dimension {dim}");
            assert_eq!(BigUint::from(expected), galois_number(dim as u64, 2).unwrap());
            let by_binomials: BigUint = (0..=dim as u64)
                .map(|k| q_binomial(dim as u64, k, 2).unwrap())
                .sum();
            assert_eq!(BigUint::from(expected), by_binomials);
        }
    });
}
