//! The cells `H(μ)` and the point-wise minimal cell.

use serde::Serialize;

use super::cube::{less_i, Configuration, LittleCube};
use super::linear::{cell_system, is_feasible, CellMode};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::kgraph::{
    base_graph, enumerate, is_member, leq, pairs, polychrome_cycle, Arrow, CompleteGraphElement, EdgeState, Variant,
};

fn config_dim(config: &Configuration) -> usize {
    config.dim().unwrap_or(0)
}

/// `config ∈ H(μ)`: every arrow `p →i q` of `μ` has `c_p <_i c_q`.
pub fn in_cell(config: &Configuration, mu: &CompleteGraphElement) -> Result<bool> {
    if config.len() != mu.k() {
        return Err(Error::SizeMismatch(format!("{} cubes for a graph on {} vertices", config.len(), mu.k())));
    }
    let n = config_dim(config);
    for a in mu.arrows() {
        if a.color as usize > n {
            return Err(Error::OutOfRange { index: a.color as usize, bound: n });
        }
        if !less_i(&config.cubes()[a.src], &config.cubes()[a.dst], a.color as usize)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The least `(color, orientation)` relation between cubes `p < q`, colors
/// tried in increasing order and `p → q` before `q → p`.
fn least_relation(c: &[LittleCube], p: usize, q: usize, n: usize) -> Result<Option<Arrow>> {
    for axis in 1..=n {
        let forward = less_i(&c[p], &c[q], axis)?;
        let backward = less_i(&c[q], &c[p], axis)?;
        // both would force hi_p ≤ lo_q < hi_q ≤ lo_p < hi_p
        debug_assert!(!(forward && backward));
        if forward {
            return Ok(Some(Arrow::new(p, q, axis as u32)));
        }
        if backward {
            return Ok(Some(Arrow::new(q, p, axis as u32)));
        }
    }
    Ok(None)
}

/// The minimum of `{μ ∈ T_k(λ) : config ∈ H(μ)}`: on every blank edge of `λ`
/// take the relation of least color that the cubes satisfy.
pub fn minimal_cell(config: &Configuration, lambda: &CompleteGraphElement, n: u32) -> Result<CompleteGraphElement> {
    let lambda = base_graph(lambda, n)?;
    if config.len() != lambda.k() {
        return Err(Error::SizeMismatch(format!("{} cubes for a graph on {} vertices", config.len(), lambda.k())));
    }
    if !config.is_empty() && config_dim(config) != n as usize {
        return Err(Error::Dimension { expected: n as usize, found: config_dim(config) });
    }
    let cubes = config.cubes();
    let mut edges = Vec::with_capacity(lambda.edges().len());
    for ((p, q), e) in pairs(lambda.k()).into_iter().zip(lambda.edges()) {
        if !e.is_blank() {
            edges.push(EdgeState::Blank);
            continue;
        }
        match least_relation(cubes, p, q, n as usize)? {
            Some(a) => edges.push(EdgeState::Arrow(a)),
            None => return Err(Error::NotInDomain { p: p + 1, q: q + 1 }),
        }
    }
    let mu = CompleteGraphElement::new(lambda.k(), edges)?;
    // each <_i is a strict order on cubes, so one color class cannot cycle
    debug_assert!(is_member(&mu, Variant::KHat, n));
    Ok(mu)
}

/// All `μ` among `candidates` with `config ∈ H(μ)`.
pub fn cells_containing<'a>(
    config: &Configuration,
    candidates: &'a [CompleteGraphElement],
) -> Result<Vec<&'a CompleteGraphElement>> {
    let mut out = Vec::new();
    for mu in candidates {
        if in_cell(config, mu)? {
            out.push(mu);
        }
    }
    Ok(out)
}

/// Minimal elements of a finite set under the graph order.
pub fn minimal_elements<'a>(set: &[&'a CompleteGraphElement]) -> Result<Vec<&'a CompleteGraphElement>> {
    let mut out = Vec::new();
    for &x in set {
        let mut minimal = true;
        for &y in set {
            if y != x && leq(y, x)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(x);
        }
    }
    Ok(out)
}

/// Three cubes in `[0,1]^3` that defeat a cellular decomposition over
/// Berger's suboperad `K^B_3(3)`.
pub fn berger_counterexample() -> Configuration {
    let c1 = LittleCube::from_fractions(&[(0, 1, 1, 2), (2, 3, 1, 1), (0, 1, 1, 3)]);
    let c2 = LittleCube::from_fractions(&[(0, 1, 1, 1), (1, 3, 2, 3), (1, 3, 2, 3)]);
    let c3 = LittleCube::from_fractions(&[(1, 2, 1, 1), (0, 1, 1, 3), (2, 3, 1, 1)]);
    Configuration::new(vec![c1.unwrap(), c2.unwrap(), c3.unwrap()]).expect("common dimension")
}

/// What the counterexample configuration does in `K_3(3)` and `K^B_3(3)`.
#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub configuration: Configuration,
    pub pairwise_disjoint: bool,
    /// Minimal elements of `{μ ∈ K^B_3(3) : config ∈ H(μ)}`.
    pub berger_minimal_cells: Vec<CompleteGraphElement>,
    /// Pairs (indices into `berger_minimal_cells`) whose open cells intersect.
    pub overlapping_interiors: Vec<(usize, usize)>,
    /// Minimal elements of `{μ ∈ K_3(3) : config ∈ H(μ)}`.
    pub k_minimal_cells: Vec<CompleteGraphElement>,
    pub gamma: CompleteGraphElement,
    pub gamma_in_k: bool,
    pub gamma_in_berger: bool,
    /// One-based vertices of a directed cycle of `γ` with mixed colors.
    pub gamma_polychrome_cycle: Option<Vec<usize>>,
}

impl CounterexampleReport {
    /// The decomposition over `K^B_3` fails: at least two minimal cells whose
    /// interiors meet, while over `K_3` the minimum is unique and is `γ`.
    pub fn exhibits_violation(&self) -> bool {
        self.pairwise_disjoint
            && self.berger_minimal_cells.len() >= 2
            && !self.overlapping_interiors.is_empty()
            && self.k_minimal_cells.len() == 1
            && self.k_minimal_cells[0] == self.gamma
            && self.gamma_in_k
            && !self.gamma_in_berger
            && self.gamma_polychrome_cycle.is_some()
    }
}

pub fn analyze_counterexample(budget: &Budget) -> Result<CounterexampleReport> {
    let config = berger_counterexample();
    let n = 3;
    let berger = enumerate(Variant::KBerger, n, 3, budget)?;
    let full = enumerate(Variant::K, n, 3, budget)?;
    let berger_min: Vec<CompleteGraphElement> =
        minimal_elements(&cells_containing(&config, &berger)?)?.into_iter().cloned().collect();
    let k_min: Vec<CompleteGraphElement> =
        minimal_elements(&cells_containing(&config, &full)?)?.into_iter().cloned().collect();
    let mut overlapping = Vec::new();
    for i in 0..berger_min.len() {
        for j in i + 1..berger_min.len() {
            let a = cell_system(&berger_min[i], n as usize, CellMode::StrictOrderings)?;
            let b = cell_system(&berger_min[j], n as usize, CellMode::StrictOrderings)?;
            if is_feasible(&a.intersect(&b)?, budget)? {
                overlapping.push((i, j));
            }
        }
    }
    let gamma = minimal_cell(&config, &CompleteGraphElement::blank(3), n)?;
    Ok(CounterexampleReport {
        pairwise_disjoint: config.pairwise_disjoint(),
        berger_minimal_cells: berger_min,
        overlapping_interiors: overlapping,
        k_minimal_cells: k_min,
        gamma_in_k: is_member(&gamma, Variant::K, n),
        gamma_in_berger: is_member(&gamma, Variant::KBerger, n),
        gamma_polychrome_cycle: polychrome_cycle(&gamma),
        gamma,
        configuration: config,
    })
}
