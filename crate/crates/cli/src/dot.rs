//! Graphviz output. Nodes and edges are emitted in canonical order so the
//! text is stable across runs.

use std::fmt::Write;

use partree_core::decomposition::{BlockCutTree, DecompositionTree};
use partree_core::VertexSet;

use crate::report::kind_name;

fn label(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    items.join(",")
}

/// Cutsets are boxes, parts are ellipses labelled with members and kind.
pub fn decomposition_tree(tree: &DecompositionTree) -> String {
    let mut out = String::from("graph BT {\n");
    for (i, c) in tree.cutsets().enumerate() {
        writeln!(
            out,
            "  c{i} [shape=box, label=\"{{{}}}\"];",
            label(c.members())
        )
        .unwrap();
    }
    for (i, p) in tree.parts().iter().enumerate() {
        writeln!(
            out,
            "  p{i} [shape=ellipse, label=\"{{{}}}\\n{}\"];",
            label(p.members()),
            kind_name(p.kind())
        )
        .unwrap();
    }
    for (c, p) in tree.edges() {
        writeln!(out, "  c{c} -- p{p};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn block_cut_tree(bc: &BlockCutTree) -> String {
    let mut out = String::from("graph B {\n");
    for (i, v) in bc.cutpoints.iter().enumerate() {
        writeln!(out, "  c{i} [shape=box, label=\"{v}\"];").unwrap();
    }
    for (i, b) in bc.blocks.iter().enumerate() {
        writeln!(out, "  b{i} [shape=ellipse, label=\"{{{}}}\"];", label(b)).unwrap();
    }
    let mut edges = bc.edges.clone();
    edges.sort_unstable();
    for (c, b) in edges {
        writeln!(out, "  c{c} -- b{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
