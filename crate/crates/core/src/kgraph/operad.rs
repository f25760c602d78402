//! Symmetric group action and block composition.

use super::element::{edge_count, pair_index, pairs, Arrow, CompleteGraphElement, EdgeState};
use super::enumerate::enumerate;
use super::order::Variant;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Relabels vertex `p` as `perm(p)`.
pub fn sigma_action(perm: &Permutation, g: &CompleteGraphElement) -> Result<CompleteGraphElement> {
    let k = g.k();
    if perm.len() != k {
        return Err(Error::Dimension { expected: k, found: perm.len() });
    }
    let mut edges = vec![EdgeState::Blank; edge_count(k)];
    for ((p, q), e) in pairs(k).into_iter().zip(g.edges()) {
        let (p2, q2) = (perm.apply(p), perm.apply(q));
        edges[pair_index(k, p2, q2)] = match e {
            EdgeState::Blank => EdgeState::Blank,
            EdgeState::Arrow(a) => EdgeState::Arrow(Arrow::new(perm.apply(a.src), perm.apply(a.dst), a.color)),
        };
    }
    Ok(CompleteGraphElement::from_parts_unchecked(k, edges))
}

/// Substitutes `parts[i]` for vertex `i` of `g`: vertices are split into
/// adjacent blocks, intra-block edges come from the parts and every edge
/// between blocks `i` and `j` copies the edge `{i, j}` of `g`.
pub fn operad_compose(g: &CompleteGraphElement, parts: &[CompleteGraphElement]) -> Result<CompleteGraphElement> {
    if parts.len() != g.k() {
        return Err(Error::SizeMismatch(format!("{} parts for arity {}", parts.len(), g.k())));
    }
    let mut block_of = Vec::new();
    let mut offset = Vec::with_capacity(parts.len());
    for (i, h) in parts.iter().enumerate() {
        offset.push(block_of.len());
        block_of.extend(std::iter::repeat_n(i, h.k()));
    }
    let total = block_of.len();
    let mut edges = Vec::with_capacity(edge_count(total));
    for (u, w) in pairs(total) {
        let (bu, bw) = (block_of[u], block_of[w]);
        let state = if bu == bw {
            let h = &parts[bu];
            let o = offset[bu];
            match h.edge(u - o, w - o) {
                EdgeState::Blank => EdgeState::Blank,
                EdgeState::Arrow(a) => EdgeState::Arrow(Arrow::new(a.src + o, a.dst + o, a.color)),
            }
        } else {
            match g.edge(bu, bw) {
                EdgeState::Blank => EdgeState::Blank,
                EdgeState::Arrow(a) => {
                    if a.src == bu {
                        EdgeState::Arrow(Arrow::new(u, w, a.color))
                    } else {
                        EdgeState::Arrow(Arrow::new(w, u, a.color))
                    }
                }
            }
        };
        edges.push(state);
    }
    Ok(CompleteGraphElement::from_parts_unchecked(total, edges))
}

/// The unique element of arity one.
pub fn unit() -> CompleteGraphElement {
    CompleteGraphElement::blank(1)
}

/// Whether `Σ_k` acts freely on the enumerated poset: no non-identity
/// permutation fixes any element.
pub fn is_sigma_free(variant: Variant, n: u32, k: usize, budget: &Budget) -> Result<bool> {
    let elements = enumerate(variant, n, k, budget)?;
    let perms: Vec<Permutation> = Permutation::all(k).into_iter().filter(|p| !p.is_identity()).collect();
    for g in &elements {
        for p in &perms {
            if sigma_action(p, g)? == *g {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kgraph::order::{is_member, leq};

    fn g(k: usize, arrows: &[(usize, usize, u32)]) -> CompleteGraphElement {
        CompleteGraphElement::from_arrows(k, arrows).unwrap()
    }

    #[test]
    fn action_examples() {
        let h = g(3, &[(1, 2, 1), (2, 3, 2), (1, 3, 1)]);
        assert_eq!(sigma_action(&Permutation::identity(3), &h).unwrap(), h);
        let swap = Permutation::cycle(2, &[1, 2]).unwrap();
        assert_eq!(sigma_action(&swap, &g(2, &[(1, 2, 1)])).unwrap(), g(2, &[(2, 1, 1)]));
        let c = Permutation::cycle(3, &[1, 2, 3]).unwrap();
        assert_eq!(sigma_action(&c, &h).unwrap(), g(3, &[(2, 3, 1), (3, 1, 2), (2, 1, 1)]));
        assert!(sigma_action(&swap, &h).is_err());
    }

    #[test]
    fn compose_examples() {
        let h = g(3, &[(1, 2, 1), (3, 2, 2)]);
        assert_eq!(operad_compose(&unit(), std::slice::from_ref(&h)).unwrap(), h);
        let e = g(2, &[(1, 2, 1)]);
        assert_eq!(operad_compose(&e, &[unit(), unit()]).unwrap(), e);
        let outer = g(2, &[(1, 2, 2)]);
        let got = operad_compose(&outer, &[g(2, &[(1, 2, 1)]), unit()]).unwrap();
        assert_eq!(got, g(3, &[(1, 2, 1), (1, 3, 2), (2, 3, 2)]));
        assert!(operad_compose(&outer, &[unit()]).is_err());
    }

    #[test]
    fn compose_with_nullary_parts() {
        let outer = g(3, &[(1, 2, 1), (3, 2, 2), (1, 3, 1)]);
        let empty = CompleteGraphElement::blank(0);
        let got = operad_compose(&outer, &[unit(), empty, unit()]).unwrap();
        assert_eq!(got, g(2, &[(1, 2, 1)]));
    }

    #[test]
    fn blanks_propagate_between_blocks() {
        let outer = g(2, &[]);
        let got = operad_compose(&outer, &[g(2, &[(2, 1, 1)]), unit()]).unwrap();
        assert_eq!(got, g(3, &[(2, 1, 1)]));
        assert!(is_member(&got, Variant::KHat, 1));
    }

    #[test]
    fn sigma_free_examples() {
        let b = Budget::default();
        assert!(is_sigma_free(Variant::K, 1, 3, &b).unwrap());
        assert!(is_sigma_free(Variant::K, 2, 2, &b).unwrap());
        assert!(is_sigma_free(Variant::K, 3, 3, &b).unwrap());
        // the all-blank graph is fixed by everything
        assert!(!is_sigma_free(Variant::KHat, 1, 2, &b).unwrap());
    }

    #[test]
    fn action_is_an_order_automorphism_on_k2_3() {
        let b = Budget::default();
        let elems = enumerate(Variant::K, 2, 3, &b).unwrap();
        for p in Permutation::all(3) {
            for x in &elems {
                let px = sigma_action(&p, x).unwrap();
                assert!(is_member(&px, Variant::K, 2));
                for y in &elems {
                    let py = sigma_action(&p, y).unwrap();
                    assert_eq!(leq(x, y).unwrap(), leq(&px, &py).unwrap());
                }
            }
        }
    }
}
