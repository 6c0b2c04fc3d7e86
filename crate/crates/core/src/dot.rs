//! DOT output: Hasse diagrams, covers only, drawn bottom to top.

use crate::lattice::FinLattice;
use crate::tensor::TensorAlgebra;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A covers-only digraph over the given labels. Edges run child to parent
/// and the layout grows upward.
pub fn hasse_dot(name: &str, labels: &[String], covers: &[(usize, usize)]) -> String {
    let mut s = String::new();
    s.push_str(&format!("digraph {} {{\n", quote(name)));
    s.push_str("  rankdir=BT;\n");
    s.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    s.push_str("  edge [arrowhead=none];\n");
    for l in labels {
        s.push_str(&format!("  {};\n", quote(l)));
    }
    for &(lo, hi) in covers {
        s.push_str(&format!(
            "  {} -> {};\n",
            quote(&labels[lo]),
            quote(&labels[hi])
        ));
    }
    s.push_str("}\n");
    s
}

pub fn lattice_dot(name: &str, l: &FinLattice) -> String {
    hasse_dot(name, l.labels(), &l.poset().covers())
}

/// Tensor algebra diagram; nodes carry the minimal-cap labels.
pub fn tensor_dot(name: &str, t: &TensorAlgebra) -> String {
    lattice_dot(name, t.lattice())
}
