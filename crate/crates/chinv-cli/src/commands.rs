//! Report builders for the CLI subcommands.
//!
//! Each builder returns the fully rendered output for the requested
//! format. JSON reports carry a `schema` tag and print with stable field
//! order, so identical requests produce byte-identical bytes.

use serde::Serialize;

use chinv_core::charframe::{
    build_interval, classify_echelon, construct_char_nonhyp, interval_elements, shoda,
    shoda_witness, subspace_echelon, PartialTuple,
};
use chinv_core::commutant::{characteristic_hull_spanning, classify, classify_spanning};
use chinv_core::gf2::{Mat2, Subspace, Vec2};
use chinv_core::hyperlattice::{duality, enumerate_lattice, frame, w_subspace};
use chinv_core::modspace::SpaceSpec;
use chinv_core::oracle::{run_oracle, OracleReport};
use chinv_core::Caps;

use crate::dot;
use crate::{CliError, Format};

pub struct Request {
    pub spec: SpaceSpec,
    pub gens: Vec<String>,
    pub j_set: Option<Vec<usize>>,
    pub mu: Option<Vec<usize>>,
    pub caps: Caps,
    pub confirm_brute: bool,
    pub format: Format,
    pub verbose: bool,
}

impl Request {
    fn segre(&self) -> Vec<usize> {
        self.spec.exponents().to_vec()
    }

    fn spanned_input(&self) -> Result<Subspace, CliError> {
        if self.gens.is_empty() {
            return Err(CliError::Usage(
                "this command needs generator expressions: --gens \"u1+f*u2;f^2*u3\"".to_string(),
            ));
        }
        let vectors = self
            .gens
            .iter()
            .map(|g| self.spec.parse_vector(g))
            .collect::<Result<Vec<Vec2>, _>>()?;
        Ok(Subspace::from_spanning(self.spec.dim(), &vectors)?)
    }

    fn required_j(&self) -> Result<&[usize], CliError> {
        self.j_set
            .as_deref()
            .ok_or_else(|| CliError::Usage("this command needs --J (1-based block indices)".to_string()))
    }

    fn required_mu(&self) -> Result<&[usize], CliError> {
        self.mu
            .as_deref()
            .ok_or_else(|| CliError::Usage("this command needs --mu".to_string()))
    }

    fn no_dot(&self) -> Result<(), CliError> {
        if matches!(self.format, Format::Dot) {
            return Err(CliError::Usage(
                "DOT output is only available for lattice and hasse".to_string(),
            ));
        }
        Ok(())
    }
}

fn to_json(report: &impl Serialize) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

fn one_based(j_set: &[usize]) -> Vec<usize> {
    j_set.iter().map(|&j| j + 1).collect()
}

fn basis_strings(spec: &SpaceSpec, x: &Subspace) -> Vec<String> {
    x.basis().iter().map(|v| spec.format_vector(v)).collect()
}

#[derive(Serialize)]
struct FlagInfo {
    invariant: bool,
    characteristic: bool,
    hyperinvariant: bool,
}

impl FlagInfo {
    fn of(c: chinv_core::commutant::Classification) -> Self {
        FlagInfo {
            invariant: c.invariant,
            characteristic: c.characteristic,
            hyperinvariant: c.hyperinvariant,
        }
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    schema: &'static str,
    segre: Vec<usize>,
    generators: Vec<String>,
    dims: AnalyzeDims,
    flags: FlagInfo,
    r: Vec<usize>,
    mu: Vec<usize>,
    #[serde(rename = "J")]
    j_set: Vec<usize>,
    kernel_basis: Vec<String>,
    hull_basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute_confirmed: Option<bool>,
}

#[derive(Serialize)]
struct AnalyzeDims {
    input: usize,
    characteristic_hull: usize,
    kernel: usize,
    hull: usize,
}

/// Flags of the spanned input, plus the frame of its characteristic hull.
pub fn analyze(req: &Request) -> Result<String, CliError> {
    req.no_dot()?;
    let spec = &req.spec;
    let input = req.spanned_input()?;
    let flags = classify_spanning(spec, &input);
    let brute_confirmed = if req.confirm_brute {
        let brute = classify(spec, &input, &req.caps)?;
        assert_eq!(brute, flags, "spanning and enumerated classification disagree");
        Some(true)
    } else {
        None
    };
    let hull = characteristic_hull_spanning(spec, &input);
    let fr = frame(spec, &hull)?;
    let report = AnalyzeReport {
        schema: "chinv.analyze/1",
        segre: req.segre(),
        generators: input.basis().iter().map(|v| spec.format_vector(v)).collect(),
        dims: AnalyzeDims {
            input: input.dim(),
            characteristic_hull: hull.dim(),
            kernel: fr.kernel.dim(),
            hull: fr.hull.dim(),
        },
        flags: FlagInfo::of(flags),
        r: fr.r.values().to_vec(),
        mu: fr.mu.values().to_vec(),
        j_set: one_based(&fr.j_set),
        kernel_basis: basis_strings(spec, &fr.kernel),
        hull_basis: basis_strings(spec, &fr.hull),
        brute_confirmed,
    };
    Ok(match req.format {
        Format::Json => to_json(&report),
        _ => analyze_text(&report),
    })
}

fn analyze_text(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("segre: {:?}\n", r.segre));
    out.push_str(&format!(
        "input: dim {} spanned by {}\n",
        r.dims.input,
        r.generators.join("; ")
    ));
    out.push_str(&format!(
        "flags: invariant={} characteristic={} hyperinvariant={}\n",
        r.flags.invariant, r.flags.characteristic, r.flags.hyperinvariant
    ));
    out.push_str(&format!(
        "characteristic hull: dim {}\n",
        r.dims.characteristic_hull
    ));
    out.push_str(&format!(
        "frame: r={:?} mu={:?} J={:?}\n",
        r.r, r.mu, r.j_set
    ));
    out.push_str(&format!(
        "kernel (dim {}): {}\n",
        r.dims.kernel,
        r.kernel_basis.join("; ")
    ));
    out.push_str(&format!(
        "hull (dim {}): {}\n",
        r.dims.hull,
        r.hull_basis.join("; ")
    ));
    out
}

#[derive(Serialize)]
struct LatticeReport {
    schema: &'static str,
    segre: Vec<usize>,
    count: usize,
    tuples: Vec<LatticeTuple>,
}

#[derive(Serialize)]
struct LatticeTuple {
    r: Vec<usize>,
    dim: usize,
    dual: Vec<usize>,
}

/// All admissible tuples with subspace dimensions and lattice duals.
pub fn lattice(req: &Request) -> Result<String, CliError> {
    if matches!(req.format, Format::Dot) {
        return Ok(dot::hasse_dot(&req.spec));
    }
    let spec = &req.spec;
    let mut tuples: Vec<LatticeTuple> = enumerate_lattice(spec)
        .iter()
        .map(|r| LatticeTuple {
            r: r.values().to_vec(),
            dim: w_subspace(spec, r).dim(),
            dual: duality(spec, r).values().to_vec(),
        })
        .collect();
    tuples.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.r.cmp(&b.r)));
    let report = LatticeReport {
        schema: "chinv.lattice/1",
        segre: req.segre(),
        count: tuples.len(),
        tuples,
    };
    Ok(match req.format {
        Format::Json => to_json(&report),
        _ => {
            let mut out = format!(
                "segre: {:?}\nhyperinvariant subspaces: {}\n",
                report.segre, report.count
            );
            for t in &report.tuples {
                out.push_str(&format!(
                    "W{:?}  dim {}  dual W{:?}\n",
                    t.r, t.dim, t.dual
                ));
            }
            out
        }
    })
}

/// Hasse diagram of the lattice; always DOT.
pub fn hasse(req: &Request) -> Result<String, CliError> {
    if !matches!(req.format, Format::Dot) {
        return Err(CliError::Usage(
            "hasse emits DOT; use lattice for JSON or text".to_string(),
        ));
    }
    Ok(dot::hasse_dot(&req.spec))
}

#[derive(Serialize)]
struct IntervalReport {
    schema: &'static str,
    segre: Vec<usize>,
    #[serde(rename = "J")]
    j_set: Vec<usize>,
    mu: Vec<usize>,
    r: Vec<usize>,
    dims: IntervalDims,
    counts: IntervalCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<IntervalElement>>,
}

#[derive(Serialize)]
struct IntervalDims {
    kernel: usize,
    hull: usize,
    diagonal: usize,
}

#[derive(Serialize)]
struct IntervalCounts {
    total: usize,
    hyperinvariant: usize,
    non_hyperinvariant: usize,
}

#[derive(Serialize)]
struct IntervalElement {
    echelon: Vec<Vec<u8>>,
    dim: usize,
    hyperinvariant: bool,
    kernel_is_bottom: bool,
    hull_is_top: bool,
}

fn echelon_rows(m: &Mat2, k: usize) -> Vec<Vec<u8>> {
    (0..k)
        .map(|r| (0..k).map(|c| u8::from(m.get(r, c))).collect())
        .collect()
}

/// Census of the interval [W(r), W(mu)]; `--mu` is the full tuple here.
pub fn interval(req: &Request) -> Result<String, CliError> {
    req.no_dot()?;
    let spec = &req.spec;
    let j_set = req.required_j()?;
    let mu = chinv_core::hyperlattice::RTuple::new(spec, req.required_mu()?.to_vec())?;
    let iv = build_interval(spec, j_set, &mu)?;
    let mut counts = IntervalCounts {
        total: 0,
        hyperinvariant: 0,
        non_hyperinvariant: 0,
    };
    let mut elements = Vec::new();
    for (z, x) in interval_elements(spec, &iv) {
        let m = subspace_echelon(&iv, &z)?;
        let class = classify_echelon(&iv, &m)?;
        counts.total += 1;
        if class.hyperinvariant {
            counts.hyperinvariant += 1;
        } else {
            counts.non_hyperinvariant += 1;
        }
        if req.verbose {
            elements.push(IntervalElement {
                echelon: echelon_rows(&m, iv.k()),
                dim: x.dim(),
                hyperinvariant: class.hyperinvariant,
                kernel_is_bottom: class.kernel_is_bottom,
                hull_is_top: class.hull_is_top,
            });
        }
    }
    let report = IntervalReport {
        schema: "chinv.interval/1",
        segre: req.segre(),
        j_set: one_based(iv.j_set()),
        mu: iv.mu().values().to_vec(),
        r: iv.r().values().to_vec(),
        dims: IntervalDims {
            kernel: w_subspace(spec, iv.r()).dim(),
            hull: w_subspace(spec, iv.mu()).dim(),
            diagonal: iv.k(),
        },
        counts,
        elements: req.verbose.then_some(elements),
    };
    Ok(match req.format {
        Format::Json => to_json(&report),
        _ => {
            let mut out = format!(
                "segre: {:?}\ninterval: J={:?} mu={:?} r={:?}\nkernel dim {}, hull dim {}\n\
                 elements: {} total, {} hyperinvariant, {} not\n",
                report.segre,
                report.j_set,
                report.mu,
                report.r,
                report.dims.kernel,
                report.dims.hull,
                report.counts.total,
                report.counts.hyperinvariant,
                report.counts.non_hyperinvariant
            );
            if let Some(els) = &report.elements {
                for e in els {
                    out.push_str(&format!(
                        "  {:?}  dim {}  hyperinvariant={}\n",
                        e.echelon, e.dim, e.hyperinvariant
                    ));
                }
            }
            out
        }
    })
}

#[derive(Serialize)]
struct ConstructReport {
    schema: &'static str,
    segre: Vec<usize>,
    exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shoda_pair: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    subspace: Option<SubspaceInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    flags: Option<FlagInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<Vec<usize>>,
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    j_set: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct SubspaceInfo {
    dim: usize,
    basis: Vec<String>,
}

/// A characteristic, non-hyperinvariant subspace: from an explicit
/// partial tuple (`--J` with one `--mu` value per index), or from the
/// minimal unrepeated pair when no tuple is given.
pub fn construct(req: &Request) -> Result<String, CliError> {
    req.no_dot()?;
    let spec = &req.spec;
    let built: Option<(Option<[usize; 2]>, Vec2, Subspace)> = match (&req.j_set, &req.mu) {
        (Some(j_set), _) => {
            let p = PartialTuple::new(spec, j_set.clone(), req.required_mu()?.to_vec())?;
            let (z, x) = construct_char_nonhyp(spec, &p)?;
            Some((None, z, x))
        }
        (None, _) => match shoda(spec) {
            Some((r_val, s_val)) => {
                let t = spec.exponents();
                let i_r = t.iter().position(|&e| e == r_val).expect("value present");
                let i_s = t.iter().position(|&e| e == s_val).expect("value present");
                let x = shoda_witness(spec, i_r, i_s, 0, 1)?;
                let z = spec.parse_vector(&format!("u{} + f*u{}", i_r + 1, i_s + 1))?;
                Some((Some([i_r + 1, i_s + 1]), z, x))
            }
            None => None,
        },
    };
    let report = match built {
        None => ConstructReport {
            schema: "chinv.construct/1",
            segre: req.segre(),
            exists: false,
            detail: Some("no characteristic non-hyperinvariant subspace exists".to_string()),
            shoda_pair: None,
            witness: None,
            subspace: None,
            flags: None,
            r: None,
            mu: None,
            j_set: None,
        },
        Some((shoda_pair, z, x)) => {
            let fr = frame(spec, &x)?;
            ConstructReport {
                schema: "chinv.construct/1",
                segre: req.segre(),
                exists: true,
                detail: None,
                shoda_pair,
                witness: Some(spec.format_vector(&z)),
                subspace: Some(SubspaceInfo {
                    dim: x.dim(),
                    basis: basis_strings(spec, &x),
                }),
                flags: Some(FlagInfo::of(classify_spanning(spec, &x))),
                r: Some(fr.r.values().to_vec()),
                mu: Some(fr.mu.values().to_vec()),
                j_set: Some(one_based(&fr.j_set)),
            }
        }
    };
    Ok(match req.format {
        Format::Json => to_json(&report),
        _ => construct_text(&report),
    })
}

fn construct_text(r: &ConstructReport) -> String {
    if !r.exists {
        return format!(
            "segre: {:?}\n{}\n",
            r.segre,
            r.detail.as_deref().unwrap_or_default()
        );
    }
    let sub = r.subspace.as_ref().expect("existing construction");
    let mut out = format!("segre: {:?}\n", r.segre);
    if let Some([a, b]) = r.shoda_pair {
        out.push_str(&format!("shoda pair: blocks {a} and {b}\n"));
    }
    out.push_str(&format!(
        "witness: {}\nsubspace (dim {}): {}\n",
        r.witness.as_deref().unwrap_or_default(),
        sub.dim,
        sub.basis.join("; ")
    ));
    out.push_str(&format!(
        "frame: r={:?} mu={:?} J={:?}\n",
        r.r.as_deref().unwrap_or_default(),
        r.mu.as_deref().unwrap_or_default(),
        r.j_set.as_deref().unwrap_or_default()
    ));
    out
}

#[derive(Serialize)]
struct OracleEnvelope {
    schema: &'static str,
    #[serde(flatten)]
    report: OracleReport,
}

/// The brute-force cross-check suite.
pub fn oracle(req: &Request) -> Result<String, CliError> {
    req.no_dot()?;
    let report = run_oracle(&req.spec, &req.caps);
    Ok(match req.format {
        Format::Json => to_json(&OracleEnvelope {
            schema: "chinv.oracle/1",
            report,
        }),
        _ => {
            let mut out = format!("segre: {:?}\n", report.segre);
            for check in &report.checks {
                let mark = if check.passed { "ok " } else { "FAIL" };
                out.push_str(&format!("{mark} {}: {}\n", check.name, check.details));
            }
            out.push_str(if report.passed {
                "all checks passed\n"
            } else {
                "some checks FAILED\n"
            });
            out
        }
    })
}
