//! Complementary graphs `T_k(λ)`, restriction along `λ₂ ≤ λ₁`, and the
//! isomorphism between `K_{n+1}(k)` and the Grothendieck construction.

use super::element::{pairs, Arrow, CompleteGraphElement, EdgeState};
use super::enumerate::{arrow_states, enumerate_with, CycleRule};
use super::order::{is_acyclic, is_member, is_monochrome_acyclic, leq, Variant};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Checks that `lambda` is a base graph: blanks plus arrows of a single color
/// (`1`, or the reserved color `n + 1`) with no directed cycle. Returns it
/// normalized to color 1, i.e. as an element of `K̂_1(k)`.
pub fn base_graph(lambda: &CompleteGraphElement, n: u32) -> Result<CompleteGraphElement> {
    for a in lambda.arrows() {
        if a.color != 1 && a.color != n + 1 {
            return Err(Error::Malformed(format!(
                "base graph arrow {}→{} has color {}, expected 1 or {}",
                a.src + 1,
                a.dst + 1,
                a.color,
                n + 1
            )));
        }
    }
    let normalized = lambda.recolor(|_| 1);
    if !is_acyclic(&normalized) {
        return Err(Error::Malformed(format!("base graph {lambda} has a directed cycle")));
    }
    Ok(normalized)
}

/// The embedding of `K̂_1` into `K̂_{n+1}` recoloring 1 as `n + 1`.
pub fn embed_reserved(lambda: &CompleteGraphElement, n: u32) -> Result<CompleteGraphElement> {
    Ok(base_graph(lambda, n)?.recolor(|_| n + 1))
}

/// `μ ∈ T_k(λ)`: arrows exactly on the blank edges of `λ`, colors `≤ n`,
/// no monochrome cycle.
pub fn in_complement(lambda: &CompleteGraphElement, mu: &CompleteGraphElement, n: u32) -> bool {
    lambda.k() == mu.k()
        && lambda.edges().iter().zip(mu.edges()).all(|(l, m)| l.is_blank() != m.is_blank())
        && mu.max_color() <= n
        && is_monochrome_acyclic(mu)
}

/// The poset `T_k(λ) ⊂ K̂_n(k)` listed in canonical order.
pub fn complementary_graphs(lambda: &CompleteGraphElement, n: u32, budget: &Budget) -> Result<Vec<CompleteGraphElement>> {
    let lambda = base_graph(lambda, n)?;
    let k = lambda.k();
    let allowed: Vec<Vec<EdgeState>> = pairs(k)
        .into_iter()
        .zip(lambda.edges())
        .map(|((p, q), e)| if e.is_blank() { arrow_states(p, q, n) } else { vec![EdgeState::Blank] })
        .collect();
    enumerate_with(k, &allowed, CycleRule::Monochrome, budget)
}

/// `T_k(f)` for `f: λ₁ → λ₂` in `K̂_1(k)^op` (that is, `λ₂ ≤ λ₁`): forgets
/// the orientation and color of `μ` on every edge colored in `λ₂`.
pub fn restrict_along(
    lambda1: &CompleteGraphElement,
    lambda2: &CompleteGraphElement,
    mu: &CompleteGraphElement,
    n: u32,
) -> Result<CompleteGraphElement> {
    let l1 = base_graph(lambda1, n)?;
    let l2 = base_graph(lambda2, n)?;
    if !leq(&l2, &l1)? {
        return Err(Error::Precondition(format!("{lambda2} ≤ {lambda1} fails in K̂_1")));
    }
    if !in_complement(&l1, mu, n) {
        return Err(Error::Precondition(format!("{mu} is not in T_k({lambda1})")));
    }
    Ok(mu.blank_where(|i, _| !l2.edges()[i].is_blank()))
}

/// `φ(λ) = (φ₁(λ), φ₂(λ))` for `λ ∈ K_{n+1}(k)`: `φ₁` keeps the edges colored
/// `n + 1`, recolored 1, and blanks the rest; `φ₂` blanks the edges colored `n + 1`.
pub fn phi(lambda: &CompleteGraphElement, n: u32) -> Result<(CompleteGraphElement, CompleteGraphElement)> {
    if !is_member(lambda, Variant::K, n + 1) {
        return Err(Error::NotMember(format!("{lambda} is not in K_{}({})", n + 1, lambda.k())));
    }
    let top = n + 1;
    let phi1 = lambda.blank_where(|_, e| e.color() != Some(top)).recolor(|_| 1);
    let phi2 = lambda.blank_where(|_, e| e.color() == Some(top));
    Ok((phi1, phi2))
}

/// Inverse of [`phi`]: arrows of `λ₁` get color `n + 1`, the rest come from `λ₂`.
pub fn phi_inverse(lambda1: &CompleteGraphElement, lambda2: &CompleteGraphElement, n: u32) -> Result<CompleteGraphElement> {
    let l1 = base_graph(lambda1, n)?;
    if !in_complement(&l1, lambda2, n) {
        return Err(Error::NotMember(format!("{lambda2} is not in T_k({lambda1})")));
    }
    let edges = l1
        .edges()
        .iter()
        .zip(lambda2.edges())
        .map(|(a, b)| match a {
            EdgeState::Arrow(x) => EdgeState::Arrow(Arrow { color: n + 1, ..*x }),
            EdgeState::Blank => *b,
        })
        .collect();
    CompleteGraphElement::new(l1.k(), edges)
}

/// The Grothendieck order on pairs: `(λ₁, μ₁) ≤ (λ₂, μ₂)` iff `λ₂ ≤ λ₁` in
/// `K̂_1(k)` and `T_k(f)(μ₁) ≤ μ₂` in `K̂_n(k)`.
pub fn grothendieck_leq(
    x: &(CompleteGraphElement, CompleteGraphElement),
    y: &(CompleteGraphElement, CompleteGraphElement),
    n: u32,
) -> Result<bool> {
    if !leq(&y.0, &x.0)? {
        return Ok(false);
    }
    let moved = restrict_along(&x.0, &y.0, &x.1, n)?;
    leq(&moved, &y.1)
}
