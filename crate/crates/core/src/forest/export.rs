use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::forest::{NodeId, RamificationForest};
use crate::homology::fmt_scale;

fn node_label(forest: &RamificationForest, id: NodeId) -> String {
    format!("{{{}}}", forest.set_labels(id).join("|"))
}

fn newick_node(forest: &RamificationForest, id: NodeId, out: &mut String) {
    let node = forest.node(id);
    if !node.is_leaf() {
        out.push('(');
        for (i, c) in forest.ordered_children(id).into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            newick_node(forest, c, out);
        }
        out.push(')');
    }
    out.push_str(&node_label(forest, id));
    if let Some(r) = node.ramification {
        let _ = write!(out, ":{}", fmt_scale(r - node.birth));
    }
}

/// One Newick tree per root. Shared nodes are written once per parent.
/// Branch lengths are `ramification - birth` on nodes that ramify.
pub fn export_newick(forest: &RamificationForest) -> String {
    if forest.is_empty() {
        return "[empty forest]\n".to_string();
    }
    let mut out = String::new();
    for &root in forest.roots() {
        newick_node(forest, root, &mut out);
        out.push_str(";\n");
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A `digraph` drawn root-down. Every arena node appears once, so shared
/// children keep all their incoming edges. Edges carry the parent's
/// ramification value.
pub fn export_dot(forest: &RamificationForest) -> String {
    let mut out = String::new();
    if forest.is_empty() {
        out.push_str("// forest is empty\n");
    }
    out.push_str("digraph ramification {\n  rankdir=TB;\n  node [shape=box];\n");
    for (id, node) in forest.nodes().iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{id} [label=\"{}\\nborn {}\"];",
            dot_escape(&node_label(forest, id)),
            fmt_scale(node.birth)
        );
    }
    for (id, node) in forest.nodes().iter().enumerate() {
        let at = node.ramification.map(fmt_scale).unwrap_or_default();
        for c in forest.ordered_children(id) {
            let _ = writeln!(out, "  n{id} -> n{c} [label=\"{at}\"];");
        }
        for &e in &node.free {
            let _ = writeln!(
                out,
                "  f{id}_{e} [shape=plaintext, label=\"{}\"];\n  n{id} -> f{id}_{e} [style=dashed, label=\"{at}\"];",
                dot_escape(&forest.label(e))
            );
        }
    }
    out.push_str("}\n");
    out
}

fn json_node(forest: &RamificationForest, id: NodeId) -> Value {
    let node = forest.node(id);
    json!({
        "set": node.set,
        "labels": node.set.iter().map(|&e| forest.label(e)).collect::<Vec<_>>(),
        "birth": node.birth,
        "ramification": node.ramification,
        "free": node.free,
        "children": forest
            .ordered_children(id)
            .into_iter()
            .map(|c| json_node(forest, c))
            .collect::<Vec<_>>(),
    })
}

/// Nested `{set, labels, birth, ramification, free, children}` objects.
pub fn export_json(forest: &RamificationForest) -> Value {
    json!({
        "description": forest.description(),
        "critical_values": forest.critical_values(),
        "roots": forest.roots().iter().map(|&r| json_node(forest, r)).collect::<Vec<_>>(),
    })
}

struct Layout {
    /// (node, x) per drawn copy, with the x of each child copy.
    placed: Vec<(NodeId, f64, Vec<f64>)>,
    slots: usize,
}

fn place(forest: &RamificationForest, id: NodeId, layout: &mut Layout) -> f64 {
    const SLOT: f64 = 90.0;
    let xs: Vec<f64> = forest
        .ordered_children(id)
        .into_iter()
        .map(|c| place(forest, c, layout))
        .collect();
    let x = match (xs.first(), xs.last()) {
        (Some(a), Some(b)) => (a + b) / 2.0,
        _ => {
            layout.slots += 1;
            (layout.slots as f64 - 0.5) * SLOT
        }
    };
    layout.placed.push((id, x, xs));
    x
}

/// Dendrogram with the scale axis running down the left side.
pub fn export_svg(forest: &RamificationForest) -> String {
    const LEFT: f64 = 70.0;
    const TOP: f64 = 30.0;
    const PLOT_H: f64 = 360.0;
    let mut layout = Layout {
        placed: Vec::new(),
        slots: 0,
    };
    for &r in forest.roots() {
        place(forest, r, &mut layout);
    }
    let width = LEFT + 90.0 * layout.slots.max(1) as f64 + 20.0;
    let height = TOP + PLOT_H + 60.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" font-family=\"monospace\" font-size=\"11\">"
    );
    if forest.is_empty() {
        out.push_str("<!-- forest is empty -->\n</svg>\n");
        return out;
    }
    let cv = forest.critical_values();
    let lo = forest
        .nodes()
        .iter()
        .map(|n| n.birth)
        .fold(f64::INFINITY, f64::min);
    let last = cv.last().copied().unwrap_or(lo);
    let hi = if last > lo { last + (last - lo) * 0.1 } else { lo + 1.0 };
    let y = |s: f64| TOP + (s - lo) / (hi - lo) * PLOT_H;

    let _ = writeln!(
        out,
        "<line x1=\"{LEFT}\" y1=\"{}\" x2=\"{LEFT}\" y2=\"{}\" stroke=\"black\"/>",
        y(lo),
        y(hi)
    );
    for &s in cv.iter().filter(|&&s| s >= lo) {
        let ys = y(s);
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{ys}\" x2=\"{LEFT}\" y2=\"{ys}\" stroke=\"black\"/><text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>",
            LEFT - 5.0,
            LEFT - 8.0,
            ys + 4.0,
            fmt_scale(s),
        );
    }
    let _ = writeln!(
        out,
        "<text x=\"10\" y=\"{}\">scale</text>",
        TOP + PLOT_H + 40.0
    );
    for (id, x, child_xs) in &layout.placed {
        let node = forest.node(*id);
        let x = LEFT + x;
        let end = node.ramification.unwrap_or(hi);
        let _ = writeln!(
            out,
            "<line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"steelblue\" stroke-width=\"2\"/>",
            y(node.birth),
            y(end)
        );
        if let (Some(first), Some(last)) = (child_xs.first(), child_xs.last()) {
            let _ = writeln!(
                out,
                "<line x1=\"{}\" y1=\"{ye}\" x2=\"{}\" y2=\"{ye}\" stroke=\"steelblue\" stroke-width=\"2\"/>",
                LEFT + first,
                LEFT + last,
                ye = y(end)
            );
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\">{}</text>",
                x + 4.0,
                y(node.birth) + 12.0,
                node_label(forest, *id)
            );
        } else {
            let _ = writeln!(
                out,
                "<text x=\"{x}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
                y(end) + 14.0,
                node_label(forest, *id)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
