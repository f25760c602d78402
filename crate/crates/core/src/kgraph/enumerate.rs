//! Exhaustive generation of operad elements by depth-first search over edges.

use rand::seq::SliceRandom;
use rand::Rng;

use super::element::{edge_count, pairs, Arrow, CompleteGraphElement, EdgeState};
use super::order::Variant;
use crate::budget::Budget;
use crate::error::Result;

/// Which directed cycles prune the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CycleRule {
    Monochrome,
    Any,
}

/// Arrow states of the pair `(p, q)` for colors `1..=n`, in canonical order
/// (by color, then `p → q` before `q → p`).
pub(crate) fn arrow_states(p: usize, q: usize, n: u32) -> Vec<EdgeState> {
    let mut out = Vec::with_capacity(2 * n as usize);
    for c in 1..=n {
        out.push(EdgeState::Arrow(Arrow::new(p, q, c)));
        out.push(EdgeState::Arrow(Arrow::new(q, p, c)));
    }
    out
}

/// Enumerates every graph on `k` vertices whose edge `i` takes a state from
/// `allowed[i]` and which has no cycle forbidden by `rule`. The listing is in
/// lexicographic order of edge lists provided each `allowed[i]` is sorted.
pub(crate) fn enumerate_with(
    k: usize,
    allowed: &[Vec<EdgeState>],
    rule: CycleRule,
    budget: &Budget,
) -> Result<Vec<CompleteGraphElement>> {
    assert!(k <= 64, "adjacency is stored in u64 masks");
    assert_eq!(allowed.len(), edge_count(k));
    let max_color = allowed
        .iter()
        .flatten()
        .filter_map(|e| e.color())
        .max()
        .unwrap_or(0) as usize;
    let layers = match rule {
        CycleRule::Monochrome => max_color + 1,
        CycleRule::Any => 1,
    };
    let mut search = Search {
        k,
        allowed,
        rule,
        budget,
        adj: vec![vec![0u64; k]; layers],
        current: Vec::with_capacity(allowed.len()),
        out: Vec::new(),
    };
    search.run()?;
    Ok(search.out)
}

struct Search<'a> {
    k: usize,
    allowed: &'a [Vec<EdgeState>],
    rule: CycleRule,
    budget: &'a Budget,
    /// `adj[layer][v]` = out-neighbours of `v` among placed arrows.
    adj: Vec<Vec<u64>>,
    current: Vec<EdgeState>,
    out: Vec<CompleteGraphElement>,
}

impl Search<'_> {
    fn layer(&self, a: &Arrow) -> usize {
        match self.rule {
            CycleRule::Monochrome => a.color as usize,
            CycleRule::Any => 0,
        }
    }

    fn reaches(&self, layer: usize, from: usize, to: usize) -> bool {
        let adj = &self.adj[layer];
        let mut seen = 1u64 << from;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = adj[v] & !seen;
            if next & (1u64 << to) != 0 {
                return true;
            }
            seen |= next;
            frontier |= next;
        }
        from == to
    }

    fn run(&mut self) -> Result<()> {
        let depth = self.current.len();
        if depth == self.allowed.len() {
            self.budget.check_elements(self.out.len() + 1)?;
            self.out
                .push(CompleteGraphElement::from_parts_unchecked(self.k, self.current.clone()));
            return Ok(());
        }
        for &state in &self.allowed[depth] {
            if let EdgeState::Arrow(a) = state {
                let layer = self.layer(&a);
                // placing src → dst closes a cycle iff dst already reaches src
                if self.reaches(layer, a.dst, a.src) {
                    continue;
                }
                self.adj[layer][a.src] |= 1u64 << a.dst;
                self.current.push(state);
                let r = self.run();
                self.current.pop();
                self.adj[layer][a.src] &= !(1u64 << a.dst);
                r?;
            } else {
                self.current.push(state);
                let r = self.run();
                self.current.pop();
                r?;
            }
        }
        Ok(())
    }
}

/// All members of `variant` with colors `1..=n` on `k` vertices, in canonical order.
pub fn enumerate(variant: Variant, n: u32, k: usize, budget: &Budget) -> Result<Vec<CompleteGraphElement>> {
    let allowed: Vec<Vec<EdgeState>> = pairs(k)
        .into_iter()
        .map(|(p, q)| {
            let mut states = Vec::new();
            if variant.allows_blank() {
                states.push(EdgeState::Blank);
            }
            states.extend(arrow_states(p, q, n));
            states.sort();
            states
        })
        .collect();
    let rule = match variant {
        Variant::KBerger => CycleRule::Any,
        Variant::K | Variant::KHat => CycleRule::Monochrome,
    };
    enumerate_with(k, &allowed, rule, budget)
}

/// A random element of `variant` in arity `k` with colors `≤ n`.
///
/// Colors are uniform on each edge (blank is one more option for `K̂`).
/// Orientations come from one random linear order for `K^B`, and from an
/// independent random linear order per color otherwise, so the result is
/// always a member.
pub fn random_element<R: Rng + ?Sized>(variant: Variant, n: u32, k: usize, rng: &mut R) -> CompleteGraphElement {
    assert!(n >= 1, "colors start at 1");
    let orders: Vec<Vec<usize>> = (0..=n)
        .map(|_| {
            let mut rank: Vec<usize> = (0..k).collect();
            rank.shuffle(rng);
            rank
        })
        .collect();
    let blank = u32::from(variant.allows_blank());
    let edges = pairs(k)
        .into_iter()
        .map(|(p, q)| {
            let c = rng.gen_range(1..=n + blank);
            if c > n {
                return EdgeState::Blank;
            }
            let rank = if variant == Variant::KBerger { &orders[0] } else { &orders[c as usize] };
            if rank[p] < rank[q] {
                EdgeState::Arrow(Arrow::new(p, q, c))
            } else {
                EdgeState::Arrow(Arrow::new(q, p, c))
            }
        })
        .collect();
    CompleteGraphElement::from_parts_unchecked(k, edges)
}
