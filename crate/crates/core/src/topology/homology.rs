use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::complex::SimplicialComplex;
use super::snf::{invariant_factors, SparseMatrix};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Integer homology: free rank and torsion coefficients per degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub reduced: bool,
    /// `betti[d]` for `0 ≤ d ≤ dim`.
    pub betti: Vec<usize>,
    /// Torsion coefficients (each > 1) per degree.
    pub torsion: Vec<Vec<u64>>,
    /// Reduced homology of the empty complex lives in degree −1.
    pub empty: bool,
}

impl HomologyResult {
    pub fn torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// `Σ (−1)^d β_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Betti numbers with trailing zeros removed.
    pub fn betti_trimmed(&self) -> Vec<usize> {
        let mut b = self.betti.clone();
        while b.last() == Some(&0) {
            b.pop();
        }
        b
    }
}

/// Boundary map `C_d → C_{d−1}` as a matrix with rows indexed by
/// `(d−1)`-simplices and columns by `d`-simplices.
fn boundary(c: &SimplicialComplex, d: usize) -> SparseMatrix {
    let faces = c.simplices(d - 1).len();
    let cells = c.simplices(d);
    let mut m = SparseMatrix::new(faces, cells.len());
    for (j, s) in cells.iter().enumerate() {
        for t in 0..s.len() {
            let mut face = s.clone();
            face.remove(t);
            let i = c.index_of(&face).expect("face closure");
            m.add(i, j, if t % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Integer homology via Smith normal forms of the boundary matrices; with
/// `reduced`, the augmentation `C_0 → Z` is included.
pub fn homology(c: &SimplicialComplex, reduced: bool, budget: &Budget) -> Result<HomologyResult> {
    budget.check_simplices(c.simplex_count())?;
    let top = c.dimension();
    if top < 0 {
        return Ok(HomologyResult { reduced, betti: Vec::new(), torsion: Vec::new(), empty: true });
    }
    let top = top as usize;
    // factors[d] = invariant factors of ∂_d : C_d → C_{d-1}, d = 0..=top+1
    let mut factors = Vec::with_capacity(top + 2);
    let mut aug = SparseMatrix::new(1, c.simplices(0).len());
    if reduced {
        for j in 0..c.simplices(0).len() {
            aug.add(0, j, 1);
        }
    }
    factors.push(invariant_factors(aug));
    for d in 1..=top {
        factors.push(invariant_factors(boundary(c, d)));
    }
    factors.push(Vec::new());
    let mut betti = Vec::with_capacity(top + 1);
    let mut torsion = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let rank_d = factors[d].len();
        let rank_up = factors[d + 1].len();
        let chains = c.simplices(d).len();
        betti.push(chains - rank_d - rank_up);
        let tors = factors[d + 1]
            .iter()
            .filter(|x| !x.is_one())
            .map(|x| x.to_u64().ok_or(Error::Budget { what: "torsion coefficient size", limit: u64::MAX as usize }))
            .collect::<Result<Vec<u64>>>()?;
        torsion.push(tors);
    }
    let h = HomologyResult { reduced, betti, torsion, empty: false };
    let expected = c.euler_characteristic() - i64::from(reduced);
    debug_assert_eq!(h.euler_characteristic(), expected);
    Ok(h)
}

/// All reduced Betti numbers and torsion vanish (false for the empty complex).
pub fn reduced_acyclic(c: &SimplicialComplex, budget: &Budget) -> Result<bool> {
    let h = homology(c, true, budget)?;
    Ok(!h.empty && h.betti.iter().all(|&b| b == 0) && h.torsion_free())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(m: usize) -> SimplicialComplex {
        let gens: Vec<Vec<usize>> = (0..m).map(|i| vec![i, (i + 1) % m]).collect();
        SimplicialComplex::from_maximal(m, &gens, &Budget::default()).unwrap()
    }

    #[test]
    fn circle() {
        let b = Budget::default();
        let h = homology(&cycle(4), false, &b).unwrap();
        assert_eq!(h.betti, vec![1, 1]);
        assert!(h.torsion_free());
        assert!(!reduced_acyclic(&cycle(4), &b).unwrap());
        assert_eq!(homology(&cycle(4), true, &b).unwrap().betti, vec![0, 1]);
    }

    #[test]
    fn simplex_is_acyclic() {
        let b = Budget::default();
        let c = SimplicialComplex::from_maximal(4, &[vec![0, 1, 2, 3]], &b).unwrap();
        assert!(reduced_acyclic(&c, &b).unwrap());
        assert_eq!(homology(&c, false, &b).unwrap().betti, vec![1, 0, 0, 0]);
    }

    #[test]
    fn sphere_s2_as_tetrahedron_boundary() {
        let b = Budget::default();
        let gens = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        let c = SimplicialComplex::from_maximal(4, &gens, &b).unwrap();
        assert_eq!(homology(&c, false, &b).unwrap().betti, vec![1, 0, 1]);
    }

    #[test]
    fn projective_plane_has_z2_torsion() {
        // 6-vertex triangulation of RP^2
        let b = Budget::default();
        let gens = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 5, 1],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![3, 4, 1],
            vec![4, 5, 2],
            vec![5, 1, 3],
        ];
        let c = SimplicialComplex::from_maximal(6, &gens, &b).unwrap();
        let h = homology(&c, false, &b).unwrap();
        assert_eq!(h.betti, vec![1, 0, 0]);
        assert_eq!(h.torsion, vec![vec![], vec![2], vec![]]);
        assert!(!reduced_acyclic(&c, &b).unwrap());
    }

    #[test]
    fn empty_complex() {
        let b = Budget::default();
        let c = SimplicialComplex::from_simplices(0, vec![], &b).unwrap();
        assert!(homology(&c, true, &b).unwrap().empty);
        assert!(!reduced_acyclic(&c, &b).unwrap());
    }
}
