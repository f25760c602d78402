use serde::{Deserialize, Serialize};

use crate::cubes::{compose_cubes, disjoint_interiors, Configuration};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A point `(π; c_1, …, c_k)` of `Σ_k × C_n(1)^k`. The cubes are multiplied
/// in the order `c_{π(1)} · … · c_{π(k)}`, so cube `i` sits at position
/// `π⁻¹(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawJson")]
pub struct RawRep {
    perm: Permutation,
    cubes: Configuration,
}

#[derive(Deserialize)]
struct RawJson {
    perm: Permutation,
    cubes: Configuration,
}

impl TryFrom<RawJson> for RawRep {
    type Error = Error;

    fn try_from(j: RawJson) -> Result<Self> {
        RawRep::new(j.perm, j.cubes)
    }
}

impl RawRep {
    pub fn new(perm: Permutation, cubes: Configuration) -> Result<Self> {
        if perm.len() != cubes.len() {
            return Err(Error::SizeMismatch(format!("permutation of {} for {} cubes", perm.len(), cubes.len())));
        }
        Ok(RawRep { perm, cubes })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn cubes(&self) -> &Configuration {
        &self.cubes
    }

    pub fn k(&self) -> usize {
        self.cubes.len()
    }

    /// `positions()[i]` is the place of cube `i` in the product.
    pub fn positions(&self) -> Vec<usize> {
        self.perm.inverse().images().to_vec()
    }

    /// `σ · (π; c) = (σπ; c ∘ σ⁻¹)`: cube `i` becomes cube `σ(i)`.
    pub fn act(&self, sigma: &Permutation) -> Result<RawRep> {
        let perm = sigma.compose(&self.perm)?;
        let mut cubes = self.cubes.cubes().to_vec();
        for (i, c) in self.cubes.cubes().iter().enumerate() {
            cubes[sigma.apply(i)] = c.clone();
        }
        RawRep::new(perm, Configuration::new(cubes)?)
    }
}

/// The relation of 4.1 on a fixed cube tuple: every pair ordered differently
/// by the two permutations must have interior-disjoint cubes.
pub fn equivalent(r1: &RawRep, r2: &RawRep) -> Result<bool> {
    if r1.cubes != r2.cubes {
        return Err(Error::Precondition("representatives with different cubes are never related".into()));
    }
    let (p1, p2) = (r1.positions(), r2.positions());
    let cubes = r1.cubes.cubes();
    for i in 0..r1.k() {
        for j in i + 1..r1.k() {
            if (p1[i] < p1[j]) != (p2[i] < p2[j]) && !disjoint_interiors(&cubes[i], &cubes[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Composition of raw representatives: the product word of `outer` with
/// each letter `i` replaced by the word of `parts[i]`, and cubes composed.
pub fn raw_compose(outer: &RawRep, parts: &[RawRep]) -> Result<RawRep> {
    if parts.len() != outer.k() {
        return Err(Error::SizeMismatch(format!("{} parts for arity {}", parts.len(), outer.k())));
    }
    let mut offset = Vec::with_capacity(parts.len());
    let mut cubes = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        offset.push(cubes.len());
        for c in part.cubes.cubes() {
            cubes.push(compose_cubes(&outer.cubes.cubes()[i], c)?);
        }
    }
    let mut word = Vec::with_capacity(cubes.len());
    for &i in outer.perm.images() {
        word.extend(parts[i].perm.images().iter().map(|&v| v + offset[i]));
    }
    RawRep::new(Permutation::from_images(word)?, Configuration::new(cubes)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::LittleCube;

    fn cube(a: (i64, i64, i64, i64)) -> LittleCube {
        LittleCube::from_fractions(&[a, a]).unwrap()
    }

    #[test]
    fn two_cube_cases() {
        let id = Permutation::identity(2);
        let swap = Permutation::cycle(2, &[1, 2]).unwrap();
        let overlap = Configuration::new(vec![cube((0, 1, 1, 2)), cube((1, 4, 3, 4))]).unwrap();
        let apart = Configuration::new(vec![cube((0, 1, 1, 4)), cube((1, 2, 1, 1))]).unwrap();
        let a = RawRep::new(id.clone(), overlap.clone()).unwrap();
        let b = RawRep::new(swap.clone(), overlap).unwrap();
        assert!(equivalent(&a, &a).unwrap());
        assert!(!equivalent(&a, &b).unwrap());
        let a = RawRep::new(id, apart.clone()).unwrap();
        let b = RawRep::new(swap, apart).unwrap();
        assert!(equivalent(&a, &b).unwrap());
    }

    #[test]
    fn positions_follow_inverse() {
        // word c_2 c_3 c_1: cube 1 is last
        let c = Configuration::new(vec![cube((0, 1, 1, 1)); 3]).unwrap();
        let r = RawRep::new(Permutation::from_one_based(&[2, 3, 1]).unwrap(), c).unwrap();
        assert_eq!(r.positions(), vec![2, 0, 1]);
    }

    #[test]
    fn different_cubes_are_incomparable() {
        let a = RawRep::new(Permutation::identity(1), Configuration::new(vec![cube((0, 1, 1, 2))]).unwrap()).unwrap();
        let b = RawRep::new(Permutation::identity(1), Configuration::new(vec![cube((0, 1, 1, 3))]).unwrap()).unwrap();
        assert!(equivalent(&a, &b).is_err());
    }

    #[test]
    fn compose_substitutes_words() {
        let full = Configuration::new(vec![cube((0, 1, 1, 1)); 2]).unwrap();
        let outer = RawRep::new(Permutation::from_one_based(&[2, 1]).unwrap(), full.clone()).unwrap();
        let inner = RawRep::new(Permutation::from_one_based(&[2, 1]).unwrap(), full.clone()).unwrap();
        let single = RawRep::new(Permutation::identity(1), Configuration::new(vec![cube((0, 1, 1, 1))]).unwrap()).unwrap();
        let r = raw_compose(&outer, &[inner, single]).unwrap();
        // word: block 2 (vertex 3), then block 1 reversed (2, 1)
        assert_eq!(r.perm().to_one_based(), vec![3, 2, 1]);
        assert_eq!(r.k(), 3);
    }

    #[test]
    fn json_shape() {
        let r = RawRep::new(Permutation::identity(1), Configuration::new(vec![cube((0, 1, 1, 2))]).unwrap()).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"perm":[1],"cubes":[{"n":2,"lo":["0/1","0/1"],"hi":["1/2","1/2"]}]}"#);
        let back: RawRep = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<RawRep>(r#"{"perm":[1,2],"cubes":[]}"#).is_err());
    }
}
