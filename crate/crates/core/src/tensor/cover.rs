use crate::cubes::{disjoint_interiors, less_i, Configuration};
use crate::error::{Error, Result};
use crate::kgraph::{base_graph, pairs, CompleteGraphElement};

/// `config ∈ A(λ)`: cubes joined by a blank edge of `λ` are interior-disjoint.
pub fn in_a(lambda: &CompleteGraphElement, config: &Configuration) -> Result<bool> {
    let lambda = base_graph(lambda, 0)?;
    if lambda.k() != config.len() {
        return Err(Error::SizeMismatch(format!("{} cubes for a graph on {} vertices", config.len(), lambda.k())));
    }
    let cubes = config.cubes();
    for ((p, q), e) in pairs(lambda.k()).into_iter().zip(lambda.edges()) {
        if e.is_blank() && !disjoint_interiors(&cubes[p], &cubes[q])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All relations `c_p <_i c_q` of a configuration, precomputed for fast
/// membership tests against many cells.
#[derive(Debug, Clone)]
pub struct RelationTable {
    k: usize,
    n: usize,
    less: Vec<bool>,
}

impl RelationTable {
    pub fn new(config: &Configuration) -> Result<Self> {
        let k = config.len();
        let n = config.dim().unwrap_or(0);
        let cubes = config.cubes();
        let mut less = vec![false; k * k * n];
        for p in 0..k {
            for q in 0..k {
                if p != q {
                    for axis in 1..=n {
                        less[(p * k + q) * n + axis - 1] = less_i(&cubes[p], &cubes[q], axis)?;
                    }
                }
            }
        }
        Ok(RelationTable { k, n, less })
    }

    pub fn less(&self, p: usize, q: usize, axis: usize) -> bool {
        self.less[(p * self.k + q) * self.n + axis - 1]
    }

    /// `config ∈ H(μ)`; colors above `n` never hold.
    pub fn in_cell(&self, mu: &CompleteGraphElement) -> bool {
        mu.k() == self.k && mu.arrows().all(|a| a.color as usize <= self.n && self.less(a.src, a.dst, a.color as usize))
    }
}

/// The pointwise form of `A(λ) = colim F_k(λ)`: `config ∈ A(λ)` exactly when
/// some cell of `T_k(λ)` contains it. `cells` must list `T_k(λ)`. Returns the
/// agreement of the two sides together with a witness cell.
pub fn cover_check<'a>(
    lambda: &CompleteGraphElement,
    config: &Configuration,
    cells: &'a [CompleteGraphElement],
) -> Result<(bool, Option<&'a CompleteGraphElement>)> {
    let left = in_a(lambda, config)?;
    let table = RelationTable::new(config)?;
    let witness = cells.iter().find(|mu| table.in_cell(mu));
    Ok((left == witness.is_some(), witness))
}
