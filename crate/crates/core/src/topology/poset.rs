use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};

/// A finite partial order on `0..len`, stored as a dense bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinPoset {
    len: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Vec<String>,
}

impl FinPoset {
    /// Builds the relation `i ≤ j ⟺ rel(i, j)` and checks the poset axioms.
    pub fn from_relation(len: usize, budget: &Budget, rel: impl Fn(usize, usize) -> bool) -> Result<Self> {
        budget.check_elements(len)?;
        let words = len.div_ceil(64).max(1);
        let mut rows = vec![0u64; len * words];
        for i in 0..len {
            for j in 0..len {
                if rel(i, j) {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let p = FinPoset { len, words, rows, labels: (0..len).map(|i| i.to_string()).collect() };
        p.validate()?;
        Ok(p)
    }

    /// Builds from elements and a fallible comparison.
    pub fn from_elements<T>(
        elems: &[T],
        budget: &Budget,
        leq: impl Fn(&T, &T) -> Result<bool>,
    ) -> Result<Self> {
        budget.check_elements(elems.len())?;
        let mut table = vec![false; elems.len() * elems.len()];
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                table[i * elems.len() + j] = leq(x, y)?;
            }
        }
        Self::from_relation(elems.len(), budget, |i, j| table[i * elems.len() + j])
    }

    /// Builds from the full list of related pairs `(i, j)` meaning `i ≤ j`.
    pub fn from_pairs(len: usize, pairs: &[(usize, usize)], budget: &Budget) -> Result<Self> {
        let mut table = vec![false; len * len];
        for &(i, j) in pairs {
            if i >= len || j >= len {
                return Err(Error::OutOfRange { index: i.max(j), bound: len });
            }
            table[i * len + j] = true;
        }
        Self::from_relation(len, budget, |i, j| table[i * len + j])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len {
            return Err(Error::SizeMismatch(format!("{} labels for {} elements", labels.len(), self.len)));
        }
        self.labels = labels;
        Ok(self)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.len {
            if !self.leq(i, i) {
                return Err(Error::NotAPoset(format!("{i} ≤ {i} fails")));
            }
        }
        for i in 0..self.len {
            for j in i + 1..self.len {
                if self.leq(i, j) && self.leq(j, i) {
                    return Err(Error::NotAPoset(format!("{i} and {j} are mutually related")));
                }
            }
        }
        // transitivity: i ≤ j implies up(j) ⊆ up(i)
        for i in 0..self.len {
            for j in 0..self.len {
                if i != j && self.leq(i, j) {
                    let (ri, rj) = (self.row(i), self.row(j));
                    if ri.iter().zip(rj).any(|(a, b)| b & !a != 0) {
                        return Err(Error::NotAPoset(format!("transitivity fails through {i} ≤ {j}")));
                    }
                }
            }
        }
        Ok(())
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Elements strictly above `i`, increasing.
    pub fn strictly_above(&self, i: usize) -> Vec<usize> {
        (0..self.len).filter(|&j| self.lt(i, j)).collect()
    }

    /// Covering pairs `i ⋖ j` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len {
            for j in self.strictly_above(i) {
                if !(0..self.len).any(|m| self.lt(i, m) && self.lt(m, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len).find(|&m| (0..self.len).all(|i| self.leq(i, m)))
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len).find(|&m| (0..self.len).all(|i| self.leq(m, i)))
    }

    /// The same elements with the order reversed.
    pub fn opposite(&self) -> FinPoset {
        let mut rows = vec![0u64; self.rows.len()];
        for i in 0..self.len {
            for j in 0..self.len {
                if self.leq(j, i) {
                    rows[i * self.words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        FinPoset { len: self.len, words: self.words, rows, labels: self.labels.clone() }
    }

    /// All related pairs `(i, j)`, `i ≤ j`, in lexicographic order.
    pub fn relation(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len {
            for j in 0..self.len {
                if self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self
                .labels
                .iter()
                .map(|l| serde_json::from_str(l).unwrap_or_else(|_| serde_json::Value::String(l.clone())))
                .collect(),
            leq: self.relation(),
        }
    }

    /// Imports `{"elements": [...], "leq": [[i, j], ...]}`; elements may be any
    /// JSON value (for instance graph objects) and become the labels.
    pub fn from_json(json: &PosetJson, budget: &Budget) -> Result<FinPoset> {
        let labels = json.elements.iter().map(|v| v.to_string()).collect();
        FinPoset::from_pairs(json.elements.len(), &json.leq, budget)?.with_labels(labels)
    }
}

/// Interchange form of a finite poset (zero-based indices into `elements`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<serde_json::Value>,
    pub leq: Vec<(usize, usize)>,
}

/// `true` iff the poset has a greatest or a least element.
pub fn is_cone(p: &FinPoset) -> bool {
    p.maximum().is_some() || p.minimum().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinPoset {
        FinPoset::from_relation(n, &Budget::default(), |i, j| i <= j).unwrap()
    }

    #[test]
    fn rejects_non_posets() {
        let b = Budget::default();
        assert!(FinPoset::from_relation(2, &b, |_, _| true).is_err());
        assert!(FinPoset::from_relation(2, &b, |i, j| i == j && i == 0).is_err());
        // 0 ≤ 1 ≤ 2 without 0 ≤ 2
        let err = FinPoset::from_pairs(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)], &b).unwrap_err();
        assert!(matches!(err, Error::NotAPoset(_)));
    }

    #[test]
    fn chains_and_covers() {
        let c = chain(4);
        assert_eq!(c.covers(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(c.maximum(), Some(3));
        assert_eq!(c.opposite().maximum(), Some(0));
        assert!(is_cone(&c));
    }

    #[test]
    fn antichain_is_not_a_cone_unless_singleton() {
        let b = Budget::default();
        let anti = FinPoset::from_relation(3, &b, |i, j| i == j).unwrap();
        assert!(!is_cone(&anti));
        let one = FinPoset::from_relation(1, &b, |i, j| i == j).unwrap();
        assert!(is_cone(&one));
    }

    #[test]
    fn wide_posets_span_words() {
        let c = chain(130);
        assert!(c.leq(0, 129) && !c.leq(129, 0));
        assert_eq!(c.strictly_above(127), vec![128, 129]);
    }

    #[test]
    fn json_round_trip() {
        let c = chain(3);
        let json = c.to_json();
        let back = FinPoset::from_json(&json, &Budget::default()).unwrap();
        assert_eq!(back.relation(), c.relation());
    }

    #[test]
    fn budget_applies() {
        let b = Budget { max_elements: 2, ..Budget::default() };
        assert!(FinPoset::from_relation(3, &b, |i, j| i == j).unwrap_err().is_budget());
    }
}
