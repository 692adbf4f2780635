//! DOT emitter for the Hasse diagram of the hyperinvariant lattice.
//!
//! Nodes are the admissible tuples, edges the covering pairs of the
//! subspace inclusion order. `rankdir=BT` puts the zero subspace at the
//! bottom and V at the top. Output is fully sorted, so equal inputs
//! produce identical bytes.

use std::fmt::Write;

use chinv_core::hyperlattice::{enumerate_lattice, w_subspace, RTuple};
use chinv_core::modspace::SpaceSpec;

fn node_id(r: &RTuple) -> String {
    let parts: Vec<String> = r.values().iter().map(|v| v.to_string()).collect();
    format!("W({})", parts.join(","))
}

/// W is antitone: W(a) is contained in W(b) iff b <= a pointwise.
fn below(a: &RTuple, b: &RTuple) -> bool {
    b.leq(a)
}

pub fn hasse_dot(spec: &SpaceSpec) -> String {
    let mut tuples = enumerate_lattice(spec);
    tuples.sort_by(|a, b| {
        let da = w_subspace(spec, a).dim();
        let db = w_subspace(spec, b).dim();
        da.cmp(&db).then_with(|| a.values().cmp(b.values()))
    });

    let mut out = String::from("// chinv.hasse/1\ndigraph hasse {\n");
    out.push_str("  rankdir = BT;\n  node [shape = box];\n");
    for r in &tuples {
        let dim = w_subspace(spec, r).dim();
        let name = if dim == spec.dim() {
            format!("V = {}", node_id(r))
        } else if dim == 0 {
            format!("0 = {}", node_id(r))
        } else {
            node_id(r)
        };
        writeln!(out, "  \"{}\" [label=\"{} (dim {})\"];", node_id(r), name, dim).unwrap();
    }
    for a in &tuples {
        for b in &tuples {
            if a == b || !below(a, b) {
                continue;
            }
            let covered = tuples
                .iter()
                .any(|c| c != a && c != b && below(a, c) && below(c, b));
            if !covered {
                writeln!(out, "  \"{}\" -> \"{}\";", node_id(a), node_id(b)).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
