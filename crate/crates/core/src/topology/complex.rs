use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::poset::FinPoset;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A finite abstract simplicial complex on vertices `0..vertices`.
///
/// Simplices are sorted vertex lists grouped by dimension; every face of a
/// simplex is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    by_dim: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl SimplicialComplex {
    /// Builds from a face-closed list of simplices (any order, each sorted
    /// or not). Duplicates and missing faces are errors.
    pub fn from_simplices(vertices: usize, simplices: Vec<Vec<usize>>, budget: &Budget) -> Result<Self> {
        budget.check_simplices(simplices.len())?;
        let mut c = SimplicialComplex { vertices, by_dim: Vec::new(), index: Vec::new() };
        for mut s in simplices {
            s.sort_unstable();
            if s.is_empty() {
                return Err(Error::Malformed("empty simplex".into()));
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Malformed(format!("repeated vertex in {s:?}")));
            }
            if *s.last().unwrap() >= vertices {
                return Err(Error::OutOfRange { index: *s.last().unwrap(), bound: vertices });
            }
            let d = s.len() - 1;
            while c.by_dim.len() <= d {
                c.by_dim.push(Vec::new());
                c.index.push(HashMap::new());
            }
            if c.index[d].contains_key(&s) {
                return Err(Error::Malformed(format!("duplicate simplex {s:?}")));
            }
            c.index[d].insert(s.clone(), c.by_dim[d].len());
            c.by_dim[d].push(s);
        }
        for d in 1..c.by_dim.len() {
            for s in &c.by_dim[d] {
                for t in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(t);
                    if !c.index[d - 1].contains_key(&face) {
                        return Err(Error::Malformed(format!("face {face:?} of {s:?} is missing")));
                    }
                }
            }
        }
        Ok(c)
    }

    /// The complex generated by the given simplices (all their faces).
    pub fn from_maximal(vertices: usize, generators: &[Vec<usize>], budget: &Budget) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        let mut all = Vec::new();
        for g in generators {
            let mut g = g.clone();
            g.sort_unstable();
            g.dedup();
            let m = g.len();
            if m >= usize::BITS as usize - 1 {
                return Err(Error::Budget { what: "simplex dimension", limit: 62 });
            }
            for mask in 1u64..(1u64 << m) {
                let face: Vec<usize> = (0..m).filter(|&t| mask >> t & 1 == 1).map(|t| g[t]).collect();
                if seen.insert(face.clone()) {
                    all.push(face);
                    budget.check_simplices(all.len())?;
                }
            }
        }
        Self::from_simplices(vertices, all, budget)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.by_dim.len() as isize - 1
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<usize>] {
        self.by_dim.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        self.index.get(simplex.len().checked_sub(1)?)?.get(simplex).copied()
    }

    pub fn simplex_count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// Counts per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson { vertices: self.vertices, simplices: self.by_dim.iter().flatten().cloned().collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: usize,
    pub simplices: Vec<Vec<usize>>,
}

/// The complex of chains `x_0 < x_1 < … < x_d` of the poset.
pub fn order_complex(p: &FinPoset, budget: &Budget) -> Result<SimplicialComplex> {
    let above: Vec<Vec<usize>> = (0..p.len()).map(|i| p.strictly_above(i)).collect();
    let mut out = Vec::new();
    let mut chain = Vec::new();
    fn extend(
        above: &[Vec<usize>],
        chain: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: &Budget,
    ) -> Result<()> {
        out.push(chain.clone());
        budget.check_simplices(out.len())?;
        let last = *chain.last().expect("nonempty chain");
        for &next in &above[last] {
            chain.push(next);
            extend(above, chain, out, budget)?;
            chain.pop();
        }
        Ok(())
    }
    for start in 0..p.len() {
        chain.push(start);
        extend(&above, &mut chain, &mut out, budget)?;
        chain.pop();
    }
    SimplicialComplex::from_simplices(p.len(), out, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_checked() {
        let b = Budget::default();
        assert!(SimplicialComplex::from_simplices(2, vec![vec![0, 1]], &b).is_err());
        assert!(SimplicialComplex::from_simplices(2, vec![vec![0], vec![0]], &b).is_err());
        assert!(SimplicialComplex::from_simplices(1, vec![vec![1]], &b).is_err());
        let ok = SimplicialComplex::from_simplices(2, vec![vec![1, 0], vec![0], vec![1]], &b).unwrap();
        assert_eq!(ok.f_vector(), vec![2, 1]);
        assert_eq!(ok.index_of(&[0, 1]), Some(0));
    }

    #[test]
    fn from_maximal_generates_faces() {
        let c = SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]], &Budget::default()).unwrap();
        assert_eq!(c.f_vector(), vec![3, 3, 1]);
        assert_eq!(c.euler_characteristic(), 1);
    }

    #[test]
    fn antichain_gives_isolated_points() {
        let b = Budget::default();
        let p = FinPoset::from_relation(5, &b, |i, j| i == j).unwrap();
        let c = order_complex(&p, &b).unwrap();
        assert_eq!(c.f_vector(), vec![5]);
    }

    #[test]
    fn chain_gives_a_simplex() {
        let b = Budget::default();
        let p = FinPoset::from_relation(4, &b, |i, j| i <= j).unwrap();
        let c = order_complex(&p, &b).unwrap();
        assert_eq!(c.f_vector(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn simplex_budget() {
        let b = Budget { max_simplices: 10, ..Budget::default() };
        let p = FinPoset::from_relation(4, &Budget::default(), |i, j| i <= j).unwrap();
        assert!(order_complex(&p, &b).unwrap_err().is_budget());
    }
}
