use std::fmt::Write;

use super::decompose::decompose;
use super::word::Shape;

/// Graphviz rendering: one node per word, one edge per `f̃` step, one cluster
/// per connected component.
pub fn to_dot(shape: &Shape) -> String {
    let dec = decompose(shape);
    let mut out = String::new();
    writeln!(out, "digraph \"B({shape})\" {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    for (i, comp) in dec.components.iter().enumerate() {
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        writeln!(out, "    label=\"B_{}\";", comp.highest_weight).unwrap();
        for w in &comp.chain {
            writeln!(out, "    \"{w}\";").unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for comp in &dec.components {
        for pair in comp.chain.windows(2) {
            writeln!(out, "  \"{}\" -> \"{}\";", pair[0], pair[1]).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
