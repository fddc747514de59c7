//! Graphviz output.

use std::fmt::Write;

use crate::graph::Graph;

/// An undirected DOT graph. Nodes are named by 1-based vertex id; when
/// `labels` is given each node shows its label.
pub fn to_dot(g: &Graph, labels: Option<&[usize]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match labels {
            Some(l) => writeln!(out, "  {} [label=\"{}\"];", v + 1, l[v]),
            None => writeln!(out, "  {};", v + 1),
        }
        .expect("writing to a String cannot fail");
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {} -- {};", u + 1, v + 1).expect("writing to a String cannot fail");
    }
    out.push_str("}\n");
    out
}
