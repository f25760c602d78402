use std::fmt::Write;

use super::element::{pairs, CompleteGraphElement, EdgeState};

/// Graphviz rendering: arrows carry their color as label, blank edges are
/// drawn dashed without arrowhead.
pub fn to_dot(g: &CompleteGraphElement, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{name}\" {{");
    for v in 1..=g.k() {
        let _ = writeln!(s, "  {v};");
    }
    for ((p, q), e) in pairs(g.k()).into_iter().zip(g.edges()) {
        match e {
            EdgeState::Blank => {
                let _ = writeln!(s, "  {} -> {} [dir=none, style=dashed];", p + 1, q + 1);
            }
            EdgeState::Arrow(a) => {
                let _ = writeln!(s, "  {} -> {} [label=\"{}\"];", a.src + 1, a.dst + 1, a.color);
            }
        }
    }
    s.push_str("}\n");
    s
}
