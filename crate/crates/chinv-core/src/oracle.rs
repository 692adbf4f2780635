//! Independent brute-force cross-checks. Small spaces get a full subspace
//! scan classified against the enumerated commutant; every structured
//! result (lattice, frames, Shoda criterion, intervals, duality) is then
//! compared with what the scan actually found. Larger spaces fall back to
//! endomorphism sweeps over the structured subspaces alone, with the
//! fallback stated in the check details.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::charframe::{build_interval, interval_elements, hyperinvariant_members, shoda,
    shoda_witness, IntervalSpec};
use crate::commutant::{
    characteristic_hull_spanning, check_bits, classify, endo_basis, f_stable, Classification,
    SpanningBasis, Sweep,
};
use crate::error::{Error, Result};
use crate::gf2::{enumerate_subspaces, galois_number, q_binomial, SpanBuilder, Subspace};
use crate::hyperlattice::{
    duality, enumerate_lattice, frame_of_classified, necessary_conditions, tuple_meet_join,
    w_subspace,
};
use crate::modspace::SpaceSpec;
use crate::Caps;

/// Largest ambient dimension the full subspace scan will attempt; the
/// subspace count is the Galois number, 29212 at dimension 7.
pub const SCAN_DIM_LIMIT: usize = 7;

/// Outcome of one cross-check: counts on success, the first counterexample
/// on failure.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn pass(name: &str, details: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: true,
            details,
        }
    }

    fn fail(name: &str, details: String) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: false,
            details,
        }
    }
}

/// Full suite report for one space.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub segre: Vec<usize>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

/// Every subspace of `V` with its classification, computed once and shared
/// by the scan-tier checks.
pub struct Scan {
    pub entries: Vec<(Subspace, Classification)>,
}

/// Classifies every subspace of `V`. Errors when the ambient dimension
/// exceeds [`SCAN_DIM_LIMIT`].
pub fn scan_all(spec: &SpaceSpec) -> Result<Scan> {
    let n = spec.dim();
    if n > SCAN_DIM_LIMIT {
        return Err(Error::ResourceCap {
            what: "oracle subspace scan dimension",
            needed: n,
            cap: SCAN_DIM_LIMIT,
        });
    }
    let basis = SpanningBasis::new(spec);
    let mut entries = Vec::new();
    for x in enumerate_subspaces(&spec.full_space(), None, n)? {
        let class = basis.classify(spec, &x);
        entries.push((x, class));
    }
    Ok(Scan { entries })
}

/// Subspace counts per dimension against the Gaussian binomials and their
/// Galois-number total.
pub fn check_counting(spec: &SpaceSpec, scan: &Scan) -> CheckResult {
    let name = "counting";
    let n = spec.dim();
    let mut per_dim = vec![0u64; n + 1];
    for (x, _) in &scan.entries {
        per_dim[x.dim()] += 1;
    }
    for (d, &count) in per_dim.iter().enumerate() {
        let expected = q_binomial(n as u64, d as u64, 2).expect("valid arguments");
        if BigUint::from(count) != expected {
            return CheckResult::fail(
                name,
                format!("dimension {d}: counted {count}, Gaussian binomial gives {expected}"),
            );
        }
    }
    let total: u64 = per_dim.iter().sum();
    let galois = galois_number(n as u64, 2).expect("valid arguments");
    if BigUint::from(total) != galois {
        return CheckResult::fail(name, format!("total {total} is not the Galois number {galois}"));
    }
    CheckResult::pass(
        name,
        format!("{total} subspaces match the Galois number and all {} Gaussian binomials", n + 1),
    )
}

/// Set equality between the lattice image `{W(r)}` and the subspaces
/// stabilized by every enumerated endomorphism. Non-members are refuted by
/// an explicit standard-basis endomorphism; surviving members are confirmed
/// against all `2^d` combinations where that sweep fits the cap (`0` and
/// `V` are stable under any linear map and sit out the sweep).
pub fn check_hyperinvariant_lattice(spec: &SpaceSpec, scan: &Scan, caps: &Caps) -> CheckResult {
    let name = "hyperinvariant lattice";
    let lattice = enumerate_lattice(spec);
    let w_set: BTreeSet<Subspace> = lattice.iter().map(|r| w_subspace(spec, r)).collect();
    if w_set.len() != lattice.len() {
        return CheckResult::fail(name, "r -> W(r) is not injective".to_string());
    }
    let basis = endo_basis(spec);
    let mut survivors = BTreeSet::new();
    for (x, class) in &scan.entries {
        let stable = basis.iter().all(|e| e.stabilizes(spec, x));
        if stable != class.hyperinvariant {
            return CheckResult::fail(
                name,
                format!(
                    "classifier disagrees with direct stabilization on a dim-{} subspace",
                    x.dim()
                ),
            );
        }
        if stable {
            survivors.insert(x.clone());
        }
    }
    if survivors != w_set {
        return CheckResult::fail(
            name,
            format!(
                "{} survivors of the {} basis endomorphisms differ from the {} lattice subspaces",
                survivors.len(),
                basis.len(),
                w_set.len()
            ),
        );
    }
    let nontrivial: Vec<&Subspace> = survivors
        .iter()
        .filter(|x| x.dim() != 0 && x.dim() != spec.dim())
        .collect();
    if nontrivial.is_empty() {
        return CheckResult::pass(
            name,
            format!(
                "{} subspaces scanned; survivors are 0 and V, stable under every endomorphism",
                scan.entries.len()
            ),
        );
    }
    if check_bits(spec, caps).is_err() {
        return CheckResult::pass(
            name,
            format!(
                "{} subspaces scanned, {} lattice members; full sweep of 2^{} combinations \
                 exceeds the endomorphism cap, membership decided by the {} basis endomorphisms",
                scan.entries.len(),
                w_set.len(),
                basis.len(),
                basis.len()
            ),
        );
    }
    let mut sweep = Sweep::new(spec);
    let bits = sweep.bits();
    for idx in 0..1u64 << bits {
        sweep.set_index(idx);
        for x in &nontrivial {
            if !sweep.stabilizes(x) {
                return CheckResult::fail(
                    name,
                    format!("endomorphism {idx} moves a surviving dim-{} subspace", x.dim()),
                );
            }
        }
    }
    CheckResult::pass(
        name,
        format!(
            "{} subspaces scanned; {} lattice members confirmed under all 2^{bits} endomorphisms",
            scan.entries.len(),
            w_set.len()
        ),
    )
}

/// The Shoda criterion against the scan: a characteristic subspace that is
/// not hyperinvariant exists iff the criterion finds a qualifying pair.
/// When it does, the constructed witness is located in the scan.
pub fn check_shoda_scan(spec: &SpaceSpec, scan: &Scan) -> CheckResult {
    let name = "shoda criterion";
    let found = scan
        .entries
        .iter()
        .filter(|(_, c)| c.characteristic && !c.hyperinvariant)
        .count();
    match shoda(spec) {
        None => {
            if found == 0 {
                CheckResult::pass(
                    name,
                    "no characteristic non-hyperinvariant subspace exists; scan agrees".to_string(),
                )
            } else {
                CheckResult::fail(
                    name,
                    format!("criterion reports none, scan found {found} such subspaces"),
                )
            }
        }
        Some((r_val, s_val)) => {
            if found == 0 {
                return CheckResult::fail(
                    name,
                    format!("criterion found (R, S) = ({r_val}, {s_val}), scan found none"),
                );
            }
            let i_r = spec.exponents().iter().position(|&e| e == r_val).expect("value present");
            let i_s = spec.exponents().iter().position(|&e| e == s_val).expect("value present");
            let x = shoda_witness(spec, i_r, i_s, 0, 1)
                .expect("shoda pair satisfies the witness conditions");
            let witnessed = scan
                .entries
                .iter()
                .any(|(y, c)| c.characteristic && !c.hyperinvariant && *y == x);
            if witnessed {
                CheckResult::pass(
                    name,
                    format!(
                        "(R, S) = ({r_val}, {s_val}); scan found {found} characteristic \
                         non-hyperinvariant subspaces including the constructed witness"
                    ),
                )
            } else {
                CheckResult::fail(
                    name,
                    format!("constructed witness for ({r_val}, {s_val}) is missing from the scan"),
                )
            }
        }
    }
}

/// Frame laws over every characteristic subspace in the scan: the sandwich
/// `W(r) ⊆ X ⊆ W(mu)`; `mu_j = r_j - 1` exactly on `J` and `mu_j = r_j`
/// elsewhere; `J` empty iff hyperinvariant, never a singleton, satisfying
/// every necessary condition; `X^h = X_H ⊕ D(X)`; and the projection of `X`
/// onto a repeated block equal to the cyclic intersection there.
pub fn check_frame_laws(spec: &SpaceSpec, scan: &Scan) -> CheckResult {
    let name = "frame laws";
    let m = spec.block_count();
    let mut checked = 0usize;
    for (x, class) in &scan.entries {
        if !class.characteristic {
            continue;
        }
        checked += 1;
        let fr = frame_of_classified(spec, x, *class);
        if !x.contains_subspace(&fr.kernel).expect("same ambient")
            || !fr.hull.contains_subspace(x).expect("same ambient")
        {
            return CheckResult::fail(name, format!("frame sandwich fails at dim {}", x.dim()));
        }
        for j in 0..m {
            let on_j = fr.j_set.contains(&j);
            if (on_j && fr.mu[j] + 1 != fr.r[j]) || (!on_j && fr.mu[j] != fr.r[j]) {
                return CheckResult::fail(
                    name,
                    format!("mu[{j}] outside {{r[{j}] - 1, r[{j}]}} law at dim {}", x.dim()),
                );
            }
        }
        if class.hyperinvariant != fr.j_set.is_empty() {
            return CheckResult::fail(
                name,
                format!("J(X) emptiness disagrees with hyperinvariance at dim {}", x.dim()),
            );
        }
        if !fr.j_set.is_empty() {
            let violations = necessary_conditions(spec, &fr);
            if let Some(v) = violations.first() {
                return CheckResult::fail(name, format!("necessary condition fails: {v}"));
            }
        }
        let mut b = SpanBuilder::new(spec.dim());
        for row in fr.kernel.basis() {
            b.insert(row);
        }
        let kernel_dim = b.dim();
        for &j in &fr.j_set {
            let v = spec.basis_vector(j, fr.mu[j]).expect("mu below exponent");
            if !b.insert(&v) {
                return CheckResult::fail(
                    name,
                    format!("D(X) is not independent from the kernel at dim {}", x.dim()),
                );
            }
        }
        if b.dim() != kernel_dim + fr.j_set.len() || Subspace::from_builder(b) != fr.hull {
            return CheckResult::fail(
                name,
                format!("hull does not split as kernel plus D(X) at dim {}", x.dim()),
            );
        }
        for j in 0..m {
            if spec.is_unrepeated(j) {
                continue;
            }
            let mut p = SpanBuilder::new(spec.dim());
            for row in x.basis() {
                p.insert(&spec.projection(j, row).expect("valid block"));
            }
            let projected = Subspace::from_builder(p);
            let cyclic = spec.cyclic_span(&spec.generator(j).expect("valid block"));
            let inner = x.intersect(&cyclic).expect("same ambient");
            if projected != inner {
                return CheckResult::fail(
                    name,
                    format!("projection onto repeated block {j} exceeds the cyclic intersection"),
                );
            }
        }
    }
    CheckResult::pass(name, format!("{checked} characteristic subspaces satisfy the frame laws"))
}

fn valid_intervals(spec: &SpaceSpec) -> Vec<IntervalSpec> {
    let m = spec.block_count();
    let lattice = enumerate_lattice(spec);
    let mut out = Vec::new();
    for mask in 0..1u32 << m {
        let j_set: Vec<usize> = (0..m).filter(|&j| mask >> j & 1 == 1).collect();
        if j_set.len() < 2 {
            continue;
        }
        for mu in &lattice {
            if let Ok(iv) = build_interval(spec, &j_set, mu) {
                out.push(iv);
            }
        }
    }
    out
}

/// Every valid interval against the scan: censuses match the Galois
/// numbers, every element is characteristic, and the hyperinvariant
/// members are exactly the elements the scan flags hyperinvariant.
pub fn check_intervals_scan(spec: &SpaceSpec, scan: &Scan) -> CheckResult {
    let name = "interval census";
    let classes: BTreeMap<&Subspace, &Classification> =
        scan.entries.iter().map(|(x, c)| (x, c)).collect();
    let intervals = valid_intervals(spec);
    if intervals.is_empty() {
        return CheckResult::pass(name, "no valid interval exists".to_string());
    }
    let mut elements = 0u64;
    for iv in &intervals {
        let mut count = 0u64;
        let mut hyper = BTreeSet::new();
        for (_, x) in interval_elements(spec, iv) {
            let Some(class) = classes.get(&x) else {
                return CheckResult::fail(name, "interval element missing from the scan".to_string());
            };
            if !class.characteristic {
                return CheckResult::fail(
                    name,
                    format!("non-characteristic element in the interval over J = {:?}", iv.j_set()),
                );
            }
            if class.hyperinvariant {
                hyper.insert(x);
            }
            count += 1;
        }
        if BigUint::from(count) != galois_number(iv.k() as u64, 2).expect("valid arguments") {
            return CheckResult::fail(
                name,
                format!("census {count} is not the Galois number of k = {}", iv.k()),
            );
        }
        let members: BTreeSet<Subspace> = hyperinvariant_members(spec, iv)
            .iter()
            .map(|(_, eta)| w_subspace(spec, eta))
            .collect();
        if members != hyper {
            return CheckResult::fail(
                name,
                format!("hyperinvariant members differ from the scan over J = {:?}", iv.j_set()),
            );
        }
        elements += count;
    }
    CheckResult::pass(
        name,
        format!(
            "{} intervals with {elements} elements, all characteristic, members verified",
            intervals.len()
        ),
    )
}

/// The Shoda criterion against interval existence: a qualifying pair exists
/// iff some valid `(J, mu)` interval does.
pub fn check_shoda_intervals(spec: &SpaceSpec) -> CheckResult {
    let name = "shoda vs intervals";
    let pair = shoda(spec);
    let count = valid_intervals(spec).len();
    match (pair, count) {
        (None, 0) => CheckResult::pass(
            name,
            "no characteristic non-hyperinvariant subspace exists; no interval either".to_string(),
        ),
        (Some((r_val, s_val)), c) if c > 0 => CheckResult::pass(
            name,
            format!("(R, S) = ({r_val}, {s_val}) and {c} valid intervals"),
        ),
        (None, c) => CheckResult::fail(name, format!("criterion reports none but {c} intervals exist")),
        (Some(p), _) => CheckResult::fail(name, format!("criterion reports {p:?} but no interval exists")),
    }
}

/// Confirms every element of every valid interval characteristic by direct
/// stabilization: under every automorphism among the `2^d` enumerated
/// endomorphisms when that fits the cap, otherwise under the automorphism
/// span basis (stated in the details).
pub fn check_interval_sweep(spec: &SpaceSpec, caps: &Caps) -> CheckResult {
    let name = "interval sweep";
    let intervals = valid_intervals(spec);
    if intervals.is_empty() {
        return CheckResult::pass(name, "no valid interval exists".to_string());
    }
    let mut distinct = BTreeSet::new();
    for iv in &intervals {
        for (_, x) in interval_elements(spec, iv) {
            distinct.insert(x);
        }
    }
    for x in &distinct {
        if !f_stable(spec, x) {
            return CheckResult::fail(name, format!("element of dim {} is not f-stable", x.dim()));
        }
    }
    let elements: Vec<&Subspace> = distinct.iter().collect();
    if check_bits(spec, caps).is_err() {
        let basis = SpanningBasis::new(spec);
        for x in &elements {
            if !basis.classify(spec, x).characteristic {
                return CheckResult::fail(
                    name,
                    format!("element of dim {} moved by the automorphism span", x.dim()),
                );
            }
        }
        return CheckResult::pass(
            name,
            format!(
                "{} distinct elements of {} intervals stable under the automorphism span \
                 basis; full sweep exceeds the endomorphism cap",
                elements.len(),
                intervals.len()
            ),
        );
    }
    let mut sweep = Sweep::new(spec);
    let bits = sweep.bits();
    let mut automorphisms = 0u64;
    for idx in 0..1u64 << bits {
        sweep.set_index(idx);
        if !sweep.invertible() {
            continue;
        }
        automorphisms += 1;
        for x in &elements {
            if !sweep.stabilizes(x) {
                return CheckResult::fail(
                    name,
                    format!("automorphism {idx} moves an element of dim {}", x.dim()),
                );
            }
        }
    }
    CheckResult::pass(
        name,
        format!(
            "{} distinct elements of {} intervals stable under all {automorphisms} automorphisms \
             among 2^{bits} endomorphisms",
            elements.len(),
            intervals.len()
        ),
    )
}

/// Builds the witness subspace for the Shoda pair, classifies it against
/// the full endomorphism sweep when that fits the cap (the automorphism
/// span otherwise), and verifies it equals the characteristic hull of its
/// generating vector.
pub fn check_witness(spec: &SpaceSpec, caps: &Caps) -> CheckResult {
    let name = "witness construction";
    let Some((r_val, s_val)) = shoda(spec) else {
        return CheckResult::pass(name, "no qualifying pair; construction inapplicable".to_string());
    };
    let i_r = spec.exponents().iter().position(|&e| e == r_val).expect("value present");
    let i_s = spec.exponents().iter().position(|&e| e == s_val).expect("value present");
    let x = shoda_witness(spec, i_r, i_s, 0, 1).expect("shoda pair satisfies the witness conditions");
    let mut z = spec.basis_vector(i_r, 0).expect("valid block");
    z ^= &spec.basis_vector(i_s, 1).expect("valid block");
    let z_span = Subspace::from_spanning(spec.dim(), &[z]).expect("same ambient");
    if characteristic_hull_spanning(spec, &z_span) != x {
        return CheckResult::fail(name, "witness is not the characteristic hull of its vector".to_string());
    }
    let (class, how) = match classify(spec, &x, caps) {
        Ok(c) => (c, "full endomorphism sweep"),
        Err(_) => (SpanningBasis::new(spec).classify(spec, &x), "automorphism span basis"),
    };
    if class.characteristic && !class.hyperinvariant {
        CheckResult::pass(
            name,
            format!(
                "witness for (R, S) = ({r_val}, {s_val}) of dim {} is characteristic and not \
                 hyperinvariant per the {how}",
                x.dim()
            ),
        )
    } else {
        CheckResult::fail(name, format!("witness misclassified per the {how}: {class:?}"))
    }
}

/// Duality over the whole lattice: involution, order reversal against the
/// subspace order, and the De Morgan laws at both the tuple and the
/// subspace level.
pub fn check_duality(spec: &SpaceSpec) -> CheckResult {
    let name = "duality";
    let lattice = enumerate_lattice(spec);
    let subspaces: Vec<Subspace> = lattice.iter().map(|r| w_subspace(spec, r)).collect();
    for (i, a) in lattice.iter().enumerate() {
        let da = duality(spec, a);
        if duality(spec, &da) != *a {
            return CheckResult::fail(name, format!("involution fails at {a}"));
        }
        for (j, b) in lattice.iter().enumerate() {
            let db = duality(spec, b);
            let order = a.leq(b);
            let reverse = subspaces[i].contains_subspace(&subspaces[j]).expect("same ambient");
            if order != reverse {
                return CheckResult::fail(name, format!("order reversal fails at ({a}, {b})"));
            }
            let (meet, join) = tuple_meet_join(spec, a, b);
            let (dual_meet, dual_join) = tuple_meet_join(spec, &da, &db);
            if duality(spec, &meet) != dual_join || duality(spec, &join) != dual_meet {
                return CheckResult::fail(name, format!("De Morgan laws fail at ({a}, {b})"));
            }
            let sum = subspaces[i].sum(&subspaces[j]).expect("same ambient");
            let inter = subspaces[i].intersect(&subspaces[j]).expect("same ambient");
            if w_subspace(spec, &meet) != sum || w_subspace(spec, &join) != inter {
                return CheckResult::fail(
                    name,
                    format!("meet/join do not track sum/intersection at ({a}, {b})"),
                );
            }
        }
    }
    CheckResult::pass(
        name,
        format!("involution, order reversal and De Morgan laws hold over {} tuples", lattice.len()),
    )
}

/// Runs the whole suite: the scan tier when the space is small enough for
/// an exhaustive subspace scan, the sweep tier and duality always.
pub fn run_oracle(spec: &SpaceSpec, caps: &Caps) -> OracleReport {
    let mut checks = Vec::new();
    if spec.dim() <= SCAN_DIM_LIMIT {
        let scan = scan_all(spec).expect("dimension gated above");
        checks.push(check_counting(spec, &scan));
        checks.push(check_hyperinvariant_lattice(spec, &scan, caps));
        checks.push(check_shoda_scan(spec, &scan));
        checks.push(check_frame_laws(spec, &scan));
        checks.push(check_intervals_scan(spec, &scan));
    }
    checks.push(check_shoda_intervals(spec));
    checks.push(check_interval_sweep(spec, caps));
    checks.push(check_witness(spec, caps));
    checks.push(check_duality(spec));
    let passed = checks.iter().all(|c| c.passed);
    OracleReport {
        segre: spec.exponents().to_vec(),
        checks,
        passed,
    }
}
