//! Smith normal form of sparse integer matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix in row-major form.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: usize,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows: vec![BTreeMap::new(); rows], cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn add(&mut self, r: usize, c: usize, v: impl Into<BigInt>) {
        assert!(c < self.cols);
        let v = v.into();
        let entry = self.rows[r].entry(c).or_insert_with(BigInt::zero);
        *entry += v;
        if entry.is_zero() {
            self.rows[r].remove(&c);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.rows[r].get(&c).cloned().unwrap_or_default()
    }
}

struct Elimination {
    rows: Vec<BTreeMap<usize, BigInt>>,
    /// rows holding a nonzero entry in each column
    cols: Vec<BTreeSet<usize>>,
}

impl Elimination {
    fn new(m: SparseMatrix) -> Self {
        let mut cols = vec![BTreeSet::new(); m.cols];
        for (r, row) in m.rows.iter().enumerate() {
            for &c in row.keys() {
                cols[c].insert(r);
            }
        }
        Elimination { rows: m.rows, cols }
    }

    /// `row[target] -= factor · row[source]`
    fn row_sub(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        let src: Vec<(usize, BigInt)> = self.rows[source].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src {
            let entry = self.rows[target].entry(c).or_insert_with(BigInt::zero);
            let was_zero = entry.is_zero();
            *entry -= factor * v;
            if entry.is_zero() {
                self.rows[target].remove(&c);
                self.cols[c].remove(&target);
            } else if was_zero {
                self.cols[c].insert(target);
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for &c in self.rows[a].keys() {
            self.cols[c].remove(&a);
        }
        for &c in self.rows[b].keys() {
            self.cols[c].remove(&b);
        }
        self.rows.swap(a, b);
        for &c in self.rows[a].keys() {
            self.cols[c].insert(a);
        }
        for &c in self.rows[b].keys() {
            self.cols[c].insert(b);
        }
    }

    /// Entry of least absolute value in row `r`, ties broken by sparser column.
    fn pivot_in_row(&self, r: usize) -> (usize, BigInt) {
        let mut best: Option<(usize, &BigInt)> = None;
        for (&c, v) in &self.rows[r] {
            let better = match best {
                None => true,
                Some((bc, bv)) => {
                    let (a, b) = (v.abs(), bv.abs());
                    a < b || (a == b && self.cols[c].len() < self.cols[bc].len())
                }
            };
            if better {
                best = Some((c, v));
            }
        }
        let (c, v) = best.expect("row is nonempty");
        (c, v.clone())
    }

    fn run(mut self) -> Vec<BigInt> {
        let mut diagonal = Vec::new();
        for r in 0..self.rows.len() {
            while !self.rows[r].is_empty() {
                let (c, p) = self.pivot_in_row(r);
                // clear column c below/above with row operations
                let others: Vec<usize> = self.cols[c].iter().copied().filter(|&i| i != r).collect();
                for &i in &others {
                    let a = self.rows[i][&c].clone();
                    let q = &a / &p;
                    self.row_sub(i, r, &q);
                }
                let leftover = self.cols[c]
                    .iter()
                    .copied()
                    .filter(|&i| i != r)
                    .min_by_key(|&i| self.rows[i][&c].abs());
                if let Some(i) = leftover {
                    // a smaller remainder exists elsewhere in the column
                    self.swap_rows(r, i);
                    continue;
                }
                // column c is now zero outside row r: column operations only touch row r
                let mut clean = true;
                let entries: Vec<(usize, BigInt)> =
                    self.rows[r].iter().filter(|(&j, _)| j != c).map(|(&j, v)| (j, v.clone())).collect();
                for (j, a) in entries {
                    let rem = &a % &p;
                    if rem.is_zero() {
                        self.rows[r].remove(&j);
                        self.cols[j].remove(&r);
                    } else {
                        clean = false;
                        self.rows[r].insert(j, rem);
                    }
                }
                if clean {
                    self.rows[r].remove(&c);
                    self.cols[c].remove(&r);
                    diagonal.push(p.abs());
                }
            }
        }
        diagonal
    }
}

/// Nonzero invariant factors `d_1 | d_2 | …` of the matrix (all positive).
pub fn invariant_factors(m: SparseMatrix) -> Vec<BigInt> {
    let mut d = Elimination::new(m).run();
    // diagonal → Smith form via (gcd, lcm) sweeps
    d.sort();
    let first_nonunit = d.iter().position(|x| !x.is_one()).unwrap_or(d.len());
    for i in first_nonunit..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}
