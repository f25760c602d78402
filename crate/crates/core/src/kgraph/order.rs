use serde::{Deserialize, Serialize};

use super::element::{pairs, Arrow, CompleteGraphElement};
use crate::error::{Error, Result};

/// Which of the complete graphs operads an element is tested against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Fully colored, no monochrome directed cycle.
    #[serde(rename = "K")]
    K,
    /// Fully colored, no directed cycle at all.
    #[serde(rename = "KB")]
    KBerger,
    /// Blank edges allowed, no monochrome directed cycle.
    #[serde(rename = "Khat")]
    KHat,
}

impl Variant {
    pub fn parse(s: &str) -> Result<Variant> {
        match s {
            "K" => Ok(Variant::K),
            "KB" => Ok(Variant::KBerger),
            "Khat" => Ok(Variant::KHat),
            other => Err(Error::Parse(format!("unknown variant {other:?}, expected K, KB or Khat"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::K => "K",
            Variant::KBerger => "KB",
            Variant::KHat => "Khat",
        }
    }

    pub fn allows_blank(self) -> bool {
        matches!(self, Variant::KHat)
    }
}

/// `g1 ≤ g2` in the poset of partially colored graphs on `k` vertices.
pub fn leq(g1: &CompleteGraphElement, g2: &CompleteGraphElement) -> Result<bool> {
    if g1.k() != g2.k() {
        return Err(Error::Dimension { expected: g1.k(), found: g2.k() });
    }
    Ok(g1.edges().iter().zip(g2.edges()).all(|(a, b)| a.leq(*b)))
}

/// `true` if the arcs contain a directed cycle on `k` vertices.
pub(crate) fn has_directed_cycle(k: usize, arcs: impl Iterator<Item = Arrow>) -> bool {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut indeg = vec![0usize; k];
    for a in arcs {
        out[a.src].push(a.dst);
        indeg[a.dst] += 1;
    }
    // Kahn: a cycle exists iff some vertex is never released
    let mut stack: Vec<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen < k
}

pub fn is_monochrome_acyclic(g: &CompleteGraphElement) -> bool {
    let mut colors: Vec<u32> = g.arrows().map(|a| a.color).collect();
    colors.sort_unstable();
    colors.dedup();
    colors
        .into_iter()
        .all(|c| !has_directed_cycle(g.k(), g.arrows().filter(|a| a.color == c)))
}

pub fn is_acyclic(g: &CompleteGraphElement) -> bool {
    !has_directed_cycle(g.k(), g.arrows())
}

/// Membership in `K_n(k)`, `K^B_n(k)` or `K̂_n(k)`.
pub fn is_member(g: &CompleteGraphElement, variant: Variant, n: u32) -> bool {
    if g.max_color() > n {
        return false;
    }
    if g.has_blank() && !variant.allows_blank() {
        return false;
    }
    match variant {
        Variant::K | Variant::KHat => is_monochrome_acyclic(g),
        Variant::KBerger => is_acyclic(g),
    }
}

/// Finds a directed cycle whose arrows do not all share one color, as a
/// one-based vertex list starting at the smallest vertex on it.
pub fn polychrome_cycle(g: &CompleteGraphElement) -> Option<Vec<usize>> {
    let k = g.k();
    let mut out: Vec<Vec<Arrow>> = vec![Vec::new(); k];
    for a in g.arrows() {
        out[a.src].push(a);
    }
    // simple cycles through `start` using only vertices >= start
    fn dfs(
        start: usize,
        v: usize,
        out: &[Vec<Arrow>],
        path: &mut Vec<usize>,
        colors: &mut Vec<u32>,
        on_path: &mut [bool],
    ) -> Option<Vec<usize>> {
        for a in &out[v] {
            if a.dst == start {
                colors.push(a.color);
                let mixed = colors.iter().any(|&c| c != colors[0]);
                colors.pop();
                if mixed {
                    return Some(path.clone());
                }
            } else if a.dst > start && !on_path[a.dst] {
                on_path[a.dst] = true;
                path.push(a.dst);
                colors.push(a.color);
                if let Some(c) = dfs(start, a.dst, out, path, colors, on_path) {
                    return Some(c);
                }
                colors.pop();
                path.pop();
                on_path[a.dst] = false;
            }
        }
        None
    }
    for start in 0..k {
        let mut on_path = vec![false; k];
        on_path[start] = true;
        let mut path = vec![start];
        if let Some(c) = dfs(start, start, &out, &mut path, &mut Vec::new(), &mut on_path) {
            return Some(c.into_iter().map(|v| v + 1).collect());
        }
    }
    None
}

/// Vertex pairs `(p, q)` with `p < q`, zero-based, whose state is an arrow.
pub fn arrow_pairs(g: &CompleteGraphElement) -> Vec<(usize, usize)> {
    pairs(g.k())
        .into_iter()
        .zip(g.edges())
        .filter(|(_, e)| !e.is_blank())
        .map(|(pq, _)| pq)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(k: usize, arrows: &[(usize, usize, u32)]) -> CompleteGraphElement {
        CompleteGraphElement::from_arrows(k, arrows).unwrap()
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&g(2, &[(1, 2, 1)]), &g(2, &[(1, 2, 1)])).unwrap());
        assert!(leq(&g(2, &[(1, 2, 1)]), &g(2, &[(2, 1, 2)])).unwrap());
        assert!(!leq(&g(2, &[(1, 2, 2)]), &g(2, &[(1, 2, 1)])).unwrap());
        assert!(!leq(&g(2, &[]), &g(2, &[(1, 2, 1)])).unwrap());
        // colored edges may blank out upward
        assert!(leq(&g(2, &[(1, 2, 1)]), &g(2, &[])).unwrap());
        // reversal at the same color is not allowed
        assert!(!leq(&g(2, &[(1, 2, 1)]), &g(2, &[(2, 1, 1)])).unwrap());
    }

    #[test]
    fn leq_dimension_error() {
        let err = leq(&g(2, &[]), &g(3, &[])).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 2, found: 3 });
    }

    #[test]
    fn membership_examples() {
        let mono = g(3, &[(1, 2, 1), (2, 3, 1), (3, 1, 1)]);
        assert!(!is_member(&mono, Variant::K, 1));
        let poly = g(3, &[(1, 2, 1), (2, 3, 2), (3, 1, 3)]);
        assert!(is_member(&poly, Variant::K, 3));
        assert!(!is_member(&poly, Variant::KBerger, 3));
        assert!(!is_member(&poly, Variant::K, 2));
        assert!(is_member(&g(2, &[]), Variant::KHat, 1));
        assert!(!is_member(&g(2, &[]), Variant::K, 1));
    }

    #[test]
    fn finds_polychrome_cycle() {
        let gamma = g(3, &[(2, 1, 2), (3, 2, 2), (1, 3, 1)]);
        assert_eq!(polychrome_cycle(&gamma), Some(vec![1, 3, 2]));
        assert_eq!(polychrome_cycle(&g(3, &[(1, 2, 1), (2, 3, 1), (3, 1, 1)])), None);
        assert_eq!(polychrome_cycle(&g(3, &[(1, 2, 1), (2, 3, 2), (1, 3, 1)])), None);
    }

    #[test]
    fn variant_names_round_trip() {
        for v in [Variant::K, Variant::KBerger, Variant::KHat] {
            assert_eq!(Variant::parse(v.name()).unwrap(), v);
        }
        assert!(Variant::parse("X").is_err());
    }
}
