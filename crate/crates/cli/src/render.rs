//! Output formats for enumerated diagrams.

use floorcount::enumeration::DiagramCount;
use floorcount::FloorDiagram;

pub fn json_line(d: &FloorDiagram) -> String {
    serde_json::to_string(d).expect("diagram JSON is serializable")
}

/// `{"diagram": ..., "markings": n, "mu_complex": n, "mu_real": n}` with
/// exact integers.
pub fn json_line_with_markings(c: &DiagramCount) -> String {
    format!(
        "{{\"diagram\":{},\"markings\":{},\"mu_complex\":{},\"mu_real\":{}}}",
        json_line(&c.diagram),
        c.markings,
        c.complex_multiplicity,
        c.real_multiplicity
    )
}

/// Graphviz digraph drawn bottom to top without arrowheads; weights are
/// shown only when at least 2. Unbounded edges start at point nodes.
pub fn dot(name: &str, d: &FloorDiagram, extra: Option<&DiagramCount>) -> String {
    let mut out = format!("digraph {name} {{\n  rankdir=BT;\n  edge [arrowhead=none];\n");
    if let Some(c) = extra {
        out.push_str(&format!(
            "  label=\"markings {}, mu_complex {}, mu_real {}\";\n",
            c.markings, c.complex_multiplicity, c.real_multiplicity
        ));
    }
    for f in &d.floors {
        out.push_str(&format!("  {} [shape=box];\n", f.id));
    }
    let mut end = 0;
    for f in &d.floors {
        for _ in 0..f.unbounded {
            end += 1;
            out.push_str(&format!("  end{end} [shape=point];\n  end{end} -> {};\n", f.id));
        }
    }
    for e in &d.edges {
        let (s, t) = (&d.floors[e.source].id, &d.floors[e.target].id);
        if e.weight >= 2 {
            out.push_str(&format!("  {s} -> {t} [label=\"{}\"];\n", e.weight));
        } else {
            out.push_str(&format!("  {s} -> {t};\n"));
        }
    }
    out.push_str("}\n");
    out
}
