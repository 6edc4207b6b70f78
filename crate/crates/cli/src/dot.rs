//! Graphviz export.

use std::fmt::Write;

use radiolb::{RadioLabeling, Tree};

/// An undirected DOT graph of `tree`. Weight centers are drawn doubled;
/// with a labeling each vertex also shows its label as `v: f(v)`.
pub fn render(tree: &Tree, labeling: Option<&RadioLabeling>) -> String {
    let view = tree.root_view();
    let mut out = String::from("graph tree {\n  node [shape=circle];\n");
    for v in tree.vertices() {
        let text = match labeling {
            Some(l) => format!("{v}: {}", l.label(v)),
            None => v.to_string(),
        };
        let shape = if view.is_center(v) {
            ", shape=doublecircle"
        } else {
            ""
        };
        writeln!(out, "  {v} [label=\"{text}\"{shape}];").unwrap();
    }
    for &(u, v) in tree.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
