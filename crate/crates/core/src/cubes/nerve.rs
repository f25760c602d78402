//! Nerves of the covers `⋃{H(μ) : μ ≤ λ′}` by their convex cells.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::linear::{is_feasible, LinearSystem};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::kgraph::{base_graph, complementary_graphs, in_complement, leq, Arrow, CompleteGraphElement};
use crate::topology::{homology, HomologyResult, SimplicialComplex};

#[derive(Debug, Clone, Serialize)]
pub struct NerveReport {
    pub n: u32,
    pub lambda: CompleteGraphElement,
    pub lambda_prime: CompleteGraphElement,
    /// The cover: all `μ ∈ T_k(λ)` with `μ ≤ λ′`.
    pub cells: Vec<CompleteGraphElement>,
    pub f_vector: Vec<usize>,
    pub homology: HomologyResult,
    pub acyclic: bool,
}

struct Feasibility<'a> {
    k: usize,
    n: usize,
    budget: &'a Budget,
    cache: HashMap<Vec<Arrow>, bool>,
}

impl Feasibility<'_> {
    /// Whether the closed cells carrying all of `arrows` have a common point.
    fn check(&mut self, arrows: &BTreeSet<Arrow>) -> Result<bool> {
        let key: Vec<Arrow> = arrows.iter().copied().collect();
        if let Some(&v) = self.cache.get(&key) {
            return Ok(v);
        }
        let mut sys = LinearSystem::cubes(self.k, self.n);
        for a in &key {
            sys.push_ordering(a.src, a.dst, a.color as usize, false);
        }
        let v = is_feasible(&sys, self.budget)?;
        self.cache.insert(key, v);
        Ok(v)
    }
}

/// Builds the nerve of the cover of `⋃{H(μ) : μ ≤ λ′, μ ∈ T_k(λ)}` and its
/// reduced integer homology.
pub fn cover_nerve(
    lambda: &CompleteGraphElement,
    lambda_prime: &CompleteGraphElement,
    n: u32,
    budget: &Budget,
) -> Result<NerveReport> {
    let base = base_graph(lambda, n)?;
    if !in_complement(&base, lambda_prime, n) {
        return Err(Error::Precondition(format!("{lambda_prime} is not in T_k({lambda})")));
    }
    let mut cells = Vec::new();
    for mu in complementary_graphs(&base, n, budget)? {
        if leq(&mu, lambda_prime)? {
            cells.push(mu);
        }
    }
    budget.check_elements(cells.len())?;
    let arrows: Vec<BTreeSet<Arrow>> = cells.iter().map(|m| m.arrows().collect()).collect();
    let mut feas = Feasibility { k: base.k(), n: n as usize, budget, cache: HashMap::new() };
    let mut simplices = Vec::new();
    let mut stack: Vec<(Vec<usize>, BTreeSet<Arrow>)> = Vec::new();
    for (i, a) in arrows.iter().enumerate() {
        stack.push((vec![i], a.clone()));
    }
    while let Some((simplex, union)) = stack.pop() {
        let last = *simplex.last().expect("nonempty");
        for j in last + 1..cells.len() {
            let mut next = union.clone();
            next.extend(arrows[j].iter().copied());
            if feas.check(&next)? {
                let mut s = simplex.clone();
                s.push(j);
                stack.push((s, next));
            }
        }
        simplices.push(simplex);
        budget.check_simplices(simplices.len())?;
    }
    let complex = SimplicialComplex::from_simplices(cells.len(), simplices, budget)?;
    let h = homology(&complex, true, budget)?;
    let acyclic = !h.empty && h.betti.iter().all(|&b| b == 0) && h.torsion_free();
    Ok(NerveReport {
        n,
        lambda: base,
        lambda_prime: lambda_prime.clone(),
        cells,
        f_vector: complex.f_vector(),
        homology: h,
        acyclic,
    })
}

/// Whether the cover nerve for `(λ, λ′)` has vanishing reduced homology.
pub fn cover_nerve_acyclic(
    lambda: &CompleteGraphElement,
    lambda_prime: &CompleteGraphElement,
    n: u32,
    budget: &Budget,
) -> Result<bool> {
    Ok(cover_nerve(lambda, lambda_prime, n, budget)?.acyclic)
}
