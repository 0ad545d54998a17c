//! Graphviz export.

use std::fmt::Write as _;

use crate::automaton::Tncw;
use crate::safe;

/// Renders the automaton in DOT. Safe components become clusters, α-edges are
/// dashed and labels of parallel edges are merged.
pub fn to_dot(a: &Tncw) -> String {
    let d = safe::safe_components(a);
    let mut out = String::from("digraph tncw {\n  rankdir=LR;\n  node [shape=circle];\n");
    let _ = writeln!(out, "  init [shape=point];\n  init -> q{};", a.initial());
    for (c, states) in d.components.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{c} {{\n    style=dotted;");
        for q in states {
            let _ = writeln!(out, "    q{q} [label=\"{q}\"];");
        }
        out.push_str("  }\n");
    }
    for q in a.states() {
        for dst in a.states() {
            for alpha in [false, true] {
                let labels: Vec<&str> = a
                    .symbols()
                    .filter(|&s| a.transition_flag(q, s, dst) == Some(alpha))
                    .map(|s| a.alphabet().name(s))
                    .collect();
                if labels.is_empty() {
                    continue;
                }
                let label = labels.join(",").replace('\\', "\\\\").replace('"', "\\\"");
                let style = if alpha { ", style=dashed" } else { "" };
                let _ = writeln!(out, "  q{q} -> q{dst} [label=\"{label}\"{style}];");
            }
        }
    }
    out.push_str("}\n");
    out
}
