//! Affine systems over the corner coordinates of `k` little `n`-cubes and an
//! exact Fourier–Motzkin feasibility test.

use std::collections::HashMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::kgraph::CompleteGraphElement;
use crate::rational::{one, zero, Rational};

/// `Σ coeffs[i]·x_i ≤ rhs`, or `< rhs` when `strict`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub strict: bool,
}

impl Constraint {
    pub fn holds_at(&self, point: &[Rational]) -> bool {
        let lhs: Rational = self.coeffs.iter().zip(point).map(|(a, x)| a * x).sum();
        if self.strict {
            lhs < self.rhs
        } else {
            lhs <= self.rhs
        }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// For a constant constraint: `0 ≤ rhs` (or `0 < rhs`).
    fn constant_holds(&self) -> bool {
        if self.strict {
            self.rhs.is_positive()
        } else {
            !self.rhs.is_negative()
        }
    }
}

/// Whether the ordering inequalities of a cell are kept closed (`hi_p ≤ lo_q`)
/// or made strict (`hi_p < lo_q`, the interior of the cell).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellMode {
    Closed,
    StrictOrderings,
}

/// Constraints on the `2nk` corner coordinates. Variable `2(p·n + j)` is the
/// lower corner of cube `p` in coordinate `j`, the next one its upper corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    k: usize,
    n: usize,
    constraints: Vec<Constraint>,
}

impl LinearSystem {
    /// The cube conditions `0 ≤ lo < hi ≤ 1` for `k` cubes of dimension `n`.
    pub fn cubes(k: usize, n: usize) -> Self {
        let mut sys = LinearSystem { k, n, constraints: Vec::new() };
        for p in 0..k {
            for j in 0..n {
                let (lo, hi) = (sys.lo(p, j), sys.hi(p, j));
                sys.push(&[(lo, -one())], zero(), false);
                sys.push(&[(lo, one()), (hi, -one())], zero(), true);
                sys.push(&[(hi, one())], one(), false);
            }
        }
        sys
    }

    pub fn num_vars(&self) -> usize {
        2 * self.n * self.k
    }

    pub fn lo(&self, p: usize, j: usize) -> usize {
        2 * (p * self.n + j)
    }

    pub fn hi(&self, p: usize, j: usize) -> usize {
        2 * (p * self.n + j) + 1
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(&mut self, terms: &[(usize, Rational)], rhs: Rational, strict: bool) {
        let mut coeffs = vec![zero(); self.num_vars()];
        for (v, a) in terms {
            coeffs[*v] += a;
        }
        self.constraints.push(Constraint { coeffs, rhs, strict });
    }

    /// Adds `cube p <_axis cube q` (axis one-based): `hi_p ≤ lo_q`, or `<`.
    pub fn push_ordering(&mut self, p: usize, q: usize, axis: usize, strict: bool) {
        let (h, l) = (self.hi(p, axis - 1), self.lo(q, axis - 1));
        self.push(&[(h, one()), (l, -one())], zero(), strict);
    }

    /// Constraints of both systems (same `k` and `n`).
    pub fn intersect(&self, other: &LinearSystem) -> Result<LinearSystem> {
        if (self.k, self.n) != (other.k, other.n) {
            return Err(Error::SizeMismatch(format!(
                "systems over ({}, {}) and ({}, {})",
                self.k, self.n, other.k, other.n
            )));
        }
        let mut out = self.clone();
        out.constraints.extend(other.constraints.iter().cloned());
        Ok(out)
    }

    pub fn holds_at(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars() && self.constraints.iter().all(|c| c.holds_at(point))
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: usize| {
            let (p, j, hi) = (v / 2 / self.n, (v / 2) % self.n, v % 2 == 1);
            format!("{}{}_{}", if hi { "y" } else { "x" }, p + 1, j + 1)
        };
        for c in &self.constraints {
            let mut first = true;
            for (v, a) in c.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({a})·{}", name(v))?;
            }
            if first {
                write!(f, "0")?;
            }
            writeln!(f, " {} {}", if c.strict { "<" } else { "≤" }, c.rhs)?;
        }
        Ok(())
    }
}

/// The system cutting out the cell `H(μ)` inside `C_n(1)^k`.
pub fn cell_system(mu: &CompleteGraphElement, n: usize, mode: CellMode) -> Result<LinearSystem> {
    if mu.max_color() as usize > n {
        return Err(Error::OutOfRange { index: mu.max_color() as usize, bound: n });
    }
    let mut sys = LinearSystem::cubes(mu.k(), n);
    let strict = mode == CellMode::StrictOrderings;
    for a in mu.arrows() {
        sys.push_ordering(a.src, a.dst, a.color as usize, strict);
    }
    Ok(sys)
}

/// Scales by a positive factor so the first nonzero coefficient is ±1.
fn normalize(mut c: Constraint) -> Constraint {
    if let Some(lead) = c.coeffs.iter().find(|a| !a.is_zero()).map(|a| a.abs()) {
        for a in c.coeffs.iter_mut() {
            *a /= &lead;
        }
        c.rhs /= &lead;
    }
    c
}

/// Keeps, for every coefficient vector, only the tightest right-hand side.
fn dedup(constraints: Vec<Constraint>) -> Vec<Constraint> {
    let mut best: HashMap<Vec<Rational>, (Rational, bool)> = HashMap::new();
    let mut order = Vec::new();
    for c in constraints {
        let c = normalize(c);
        match best.get_mut(&c.coeffs) {
            None => {
                order.push(c.coeffs.clone());
                best.insert(c.coeffs, (c.rhs, c.strict));
            }
            Some(entry) => {
                if c.rhs < entry.0 || (c.rhs == entry.0 && c.strict) {
                    *entry = (c.rhs, c.strict);
                }
            }
        }
    }
    order
        .into_iter()
        .map(|coeffs| {
            let (rhs, strict) = best.remove(&coeffs).expect("recorded");
            Constraint { coeffs, rhs, strict }
        })
        .collect()
}

/// Exact feasibility over the rationals by Fourier–Motzkin elimination,
/// tracking strictness: combining two inequalities gives a strict one iff
/// either input is strict.
pub fn is_feasible(sys: &LinearSystem, budget: &Budget) -> Result<bool> {
    let nvars = sys.num_vars();
    let mut cons = dedup(sys.constraints.clone());
    let mut eliminated = vec![false; nvars];
    loop {
        budget.check_constraints(cons.len())?;
        // constant rows are decided now
        let mut rest = Vec::with_capacity(cons.len());
        for c in cons {
            if c.is_constant() {
                if !c.constant_holds() {
                    return Ok(false);
                }
            } else {
                rest.push(c);
            }
        }
        cons = rest;
        if cons.is_empty() {
            return Ok(true);
        }
        // cheapest variable to eliminate
        let mut pick: Option<(usize, usize)> = None;
        for v in (0..nvars).filter(|&v| !eliminated[v]) {
            let pos = cons.iter().filter(|c| c.coeffs[v].is_positive()).count();
            let neg = cons.iter().filter(|c| c.coeffs[v].is_negative()).count();
            if pos + neg == 0 {
                continue;
            }
            let cost = pos * neg;
            if pick.is_none_or(|(_, best)| cost < best) {
                pick = Some((v, cost));
            }
        }
        let Some((v, _)) = pick else {
            return Ok(true);
        };
        eliminated[v] = true;
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for c in cons {
            if c.coeffs[v].is_positive() {
                pos.push(c);
            } else if c.coeffs[v].is_negative() {
                neg.push(c);
            } else {
                keep.push(c);
            }
        }
        budget.check_constraints(keep.len() + pos.len() * neg.len())?;
        for p in &pos {
            for q in &neg {
                // a·p + b·q with a = -q_v > 0, b = p_v > 0 cancels x_v
                let a = -q.coeffs[v].clone();
                let b = p.coeffs[v].clone();
                let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| &a * x + &b * y).collect();
                keep.push(Constraint { coeffs, rhs: &a * &p.rhs + &b * &q.rhs, strict: p.strict || q.strict });
            }
        }
        cons = dedup(keep);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn contradictory_strict_pair() {
        // x < y and y < x on a one-cube system
        let mut sys = LinearSystem { k: 1, n: 1, constraints: Vec::new() };
        sys.push(&[(0, one()), (1, -one())], zero(), true);
        sys.push(&[(1, one()), (0, -one())], zero(), true);
        assert!(!is_feasible(&sys, &Budget::default()).unwrap());
        // x ≤ y and y ≤ x is fine
        let mut sys = LinearSystem { k: 1, n: 1, constraints: Vec::new() };
        sys.push(&[(0, one()), (1, -one())], zero(), false);
        sys.push(&[(1, one()), (0, -one())], zero(), false);
        assert!(is_feasible(&sys, &Budget::default()).unwrap());
    }

    #[test]
    fn single_cube_system_shape() {
        let mu = CompleteGraphElement::blank(1);
        let sys = cell_system(&mu, 1, CellMode::Closed).unwrap();
        assert_eq!(sys.constraints().len(), 3);
        assert_eq!(sys.to_string(), "(-1)·x1_1 ≤ 0\n(1)·x1_1 + (-1)·y1_1 < 0\n(1)·y1_1 ≤ 1\n");
        assert!(is_feasible(&sys, &Budget::default()).unwrap());
    }

    #[test]
    fn ordering_row_is_hi_minus_lo() {
        let mu = CompleteGraphElement::from_arrows(2, &[(1, 2, 1)]).unwrap();
        let sys = cell_system(&mu, 1, CellMode::Closed).unwrap();
        let last = sys.constraints().last().unwrap();
        assert_eq!(last.coeffs, vec![zero(), one(), -one(), zero()]);
        assert!(!last.strict);
        let strict = cell_system(&mu, 1, CellMode::StrictOrderings).unwrap();
        assert!(strict.constraints().last().unwrap().strict);
        assert!(cell_system(&mu, 0, CellMode::Closed).is_err());
    }

    #[test]
    fn boundary_touching_needs_closed_mode() {
        // cube 1 fills [0,1/2] and cube 2 fills [1/2,1] exactly
        let mut sys = LinearSystem::cubes(2, 1);
        sys.push_ordering(0, 1, 1, true);
        sys.push(&[(sys.hi(0, 0), one())], ratio(1, 2), false);
        sys.push(&[(sys.hi(0, 0), -one())], ratio(-1, 2), false);
        sys.push(&[(sys.lo(1, 0), one())], ratio(1, 2), false);
        assert!(!is_feasible(&sys, &Budget::default()).unwrap());
    }

    #[test]
    fn budget_stops_elimination() {
        let mu = CompleteGraphElement::from_arrows(3, &[(1, 2, 1), (2, 3, 1), (1, 3, 1)]).unwrap();
        let sys = cell_system(&mu, 1, CellMode::Closed).unwrap();
        let tiny = Budget { max_constraints: 3, ..Budget::default() };
        assert!(is_feasible(&sys, &tiny).unwrap_err().is_budget());
    }
}
