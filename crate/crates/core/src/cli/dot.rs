use std::fmt::Write;

use crate::arquiver::ARQuiver;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz rendering: solid arrows (labelled by multiplicity above one),
/// dashed `X -> τX` edges, boxes for projectives, double outlines for
/// injectives, and an optional highlighted cluster.
pub fn export_dot<F>(arq: &ARQuiver<F>, highlight: &[usize]) -> String {
    let mut s = String::from("digraph AR {\n  rankdir=LR;\n  node [fontname=\"Helvetica\"];\n");
    for (i, v) in arq.vertices.iter().enumerate() {
        if highlight.contains(&i) {
            continue;
        }
        let _ = writeln!(s, "  {}{};", quote(&v.name), node_attrs(v.is_projective, v.is_injective, v.boundary));
    }
    if !highlight.is_empty() {
        s.push_str("  subgraph cluster_highlight {\n    style=filled;\n    color=lightgrey;\n");
        for &i in highlight {
            let v = &arq.vertices[i];
            let _ = writeln!(s, "    {}{};", quote(&v.name), node_attrs(v.is_projective, v.is_injective, v.boundary));
        }
        s.push_str("  }\n");
    }
    let mut arrows = arq.arrows.clone();
    arrows.sort_by_key(|a| (a.source, a.target));
    for a in arrows {
        let _ = write!(s, "  {} -> {}", quote(&arq.vertices[a.source].name), quote(&arq.vertices[a.target].name));
        if a.multiplicity > 1 {
            let _ = write!(s, " [label=\"{}\"]", a.multiplicity);
        }
        s.push_str(";\n");
    }
    for (x, t) in arq.tau.iter().enumerate() {
        if let Some(t) = t {
            let _ = writeln!(
                s,
                "  {} -> {} [style=dashed, constraint=false, arrowhead=open];",
                quote(&arq.vertices[x].name),
                quote(&arq.vertices[*t].name)
            );
        }
    }
    s.push_str("}\n");
    s
}

fn node_attrs(proj: bool, inj: bool, boundary: bool) -> String {
    let mut attrs = vec![];
    if proj {
        attrs.push("shape=box");
    }
    if inj {
        attrs.push("peripheries=2");
    }
    if boundary {
        attrs.push("style=dotted");
    }
    if attrs.is_empty() {
        String::new()
    } else {
        format!(" [{}]", attrs.join(", "))
    }
}
