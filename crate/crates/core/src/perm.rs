//! Permutations of `{0, .., k-1}`, written one-based at the edges (JSON, display).

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation stored as its image list: `p.apply(i) == images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation { images: (0..k).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 0..{k}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from a one-based image list such as `[2, 3, 1]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?} is not one-based")));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// The cycle `(c0 c1 .. cr)` on `k` points, one-based.
    pub fn cycle(k: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        for (pos, &c) in cycle.iter().enumerate() {
            if c == 0 || c > k {
                return Err(Error::OutOfRange { index: c, bound: k });
            }
            let next = cycle[(pos + 1) % cycle.len()];
            images[c - 1] = next - 1;
        }
        Self::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::Dimension { expected: self.len(), found: other.len() });
        }
        Ok(Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Block permutation on `sizes.iter().sum()` points that moves the block of
    /// size `sizes[p]` to block position `self(p)`, keeping the order inside blocks.
    pub fn block(&self, sizes: &[usize]) -> Result<Permutation> {
        if sizes.len() != self.len() {
            return Err(Error::Dimension { expected: self.len(), found: sizes.len() });
        }
        let inv = self.inverse();
        // new offsets: block at position t is the old block inv(t)
        let mut new_offset = vec![0; self.len()];
        let mut acc = 0;
        for t in 0..self.len() {
            let p = inv.apply(t);
            new_offset[p] = acc;
            acc += sizes[p];
        }
        let mut images = Vec::with_capacity(acc);
        for (p, &m) in sizes.iter().enumerate() {
            for a in 0..m {
                images.push(new_offset[p] + a);
            }
        }
        Ok(Permutation { images })
    }

    /// `τ_1 ⊕ … ⊕ τ_k`, acting blockwise.
    pub fn direct_sum(parts: &[Permutation]) -> Permutation {
        let mut images = Vec::new();
        let mut offset = 0;
        for t in parts {
            images.extend(t.images.iter().map(|&i| i + offset));
            offset += t.len();
        }
        Permutation { images }
    }

    /// All permutations of `k` points in lexicographic order of image lists.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn random<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Permutation {
        let mut images: Vec<usize> = (0..k).collect();
        images.shuffle(rng);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_based(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_counts_and_order() {
        assert_eq!(Permutation::all(0).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        let all = Permutation::all(3);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all[0].is_identity());
    }

    #[test]
    fn cycle_and_compose() {
        let c = Permutation::cycle(3, &[1, 2, 3]).unwrap();
        assert_eq!(c.to_one_based(), vec![2, 3, 1]);
        let c2 = c.compose(&c).unwrap();
        assert_eq!(c2, c.inverse());
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
    }

    #[test]
    fn block_permutation_moves_whole_blocks() {
        // swap two blocks of sizes 2 and 1: [a a b] -> [b a a]
        let swap = Permutation::cycle(2, &[1, 2]).unwrap();
        let b = swap.block(&[2, 1]).unwrap();
        assert_eq!(b.images(), &[1, 2, 0]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
    }
}
