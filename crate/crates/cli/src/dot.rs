//! Hasse diagrams in DOT, drawn bottom to top.

use std::fmt::Write as _;

use snr_core::{PartialMap, Sign, SnrLattice};

fn fill(sign: Option<Sign>) -> &'static str {
    match sign {
        Some(Sign::P) => "green",
        Some(Sign::N) => "red",
        None => "gray",
    }
}

/// Nodes are coloured by `map` when given: P green, N red, unassigned gray.
pub fn hasse(lattice: &SnrLattice, map: Option<&PartialMap>) -> String {
    let p = lattice.params();
    let mut out = format!(
        "digraph \"S({},{})\" {{\n  rankdir=BT;\n  node [shape=box, style=filled];\n",
        p.n(),
        p.r()
    );
    for x in 0..lattice.len() {
        let color = map.map_or("white", |m| fill(m.get(x)));
        let _ = writeln!(
            out,
            "  n{x} [label=\"{}\", fillcolor={color}];",
            lattice.string(x)
        );
    }
    for (lo, hi) in lattice.poset().cover_edges() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}
