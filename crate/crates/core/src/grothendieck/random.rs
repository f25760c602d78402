//! Random indexed families whose coherence holds by construction.

use rand::seq::SliceRandom;
use rand::Rng;

use super::family::{IndexedFamily, PosetFunctor, SetDiagram};
use crate::budget::Budget;
use crate::error::Result;
use crate::topology::FinPoset;

/// Size bounds for [`random_family`].
#[derive(Debug, Clone, Copy)]
pub struct FamilyBounds {
    pub base: usize,
    pub fiber: usize,
    pub set: usize,
}

impl Default for FamilyBounds {
    fn default() -> Self {
        FamilyBounds { base: 4, fiber: 4, set: 5 }
    }
}

/// A random partial order on `len` points: random comparabilities along a
/// shuffled linear order, closed under transitivity.
pub fn random_poset<R: Rng + ?Sized>(len: usize, density: f64, rng: &mut R, budget: &Budget) -> Result<FinPoset> {
    let mut order: Vec<usize> = (0..len).collect();
    order.shuffle(rng);
    let mut rel = vec![false; len * len];
    for i in 0..len {
        rel[i * len + i] = true;
    }
    for s in 0..len {
        for t in s + 1..len {
            if rng.gen_bool(density) {
                rel[order[s] * len + order[t]] = true;
            }
        }
    }
    for m in 0..len {
        for i in 0..len {
            if rel[i * len + m] {
                for j in 0..len {
                    if rel[m * len + j] {
                        rel[i * len + j] = true;
                    }
                }
            }
        }
    }
    FinPoset::from_relation(len, budget, |i, j| rel[i * len + j])
}

fn heights(p: &FinPoset) -> Vec<usize> {
    (0..p.len()).map(|i| (0..p.len()).filter(|&j| p.lt(j, i)).count()).collect()
}

fn random_monotone<R: Rng + ?Sized>(q: &FinPoset, rng: &mut R) -> Vec<usize> {
    let rel = q.relation();
    for _ in 0..64 {
        let m: Vec<usize> = (0..q.len()).map(|_| rng.gen_range(0..q.len())).collect();
        if rel.iter().all(|&(a, b)| q.leq(m[a], m[b])) {
            return m;
        }
    }
    (0..q.len()).collect()
}

/// A random family over a random base of at most `bounds.base` objects.
///
/// Every fiber is one poset `Q` and `F(a₁ ≤ a₂) = r^{h(a₂) − h(a₁)}` for a
/// random monotone `r` and the height `h`. The sets form one random chain
/// `S_0 → S_1 → …` of functions; `G_A(B) = S_{deg(A, B)}` with a degree that
/// increases along every morphism, and every structure map is the composite
/// along the chain.
pub fn random_family<R: Rng + ?Sized>(bounds: FamilyBounds, rng: &mut R, budget: &Budget) -> Result<IndexedFamily> {
    let base = random_poset(rng.gen_range(1..=bounds.base), 0.5, rng, budget)?;
    let q = random_poset(rng.gen_range(1..=bounds.fiber), 0.5, rng, budget)?;
    let r = random_monotone(&q, rng);
    let (hb, hq) = (heights(&base), heights(&q));
    let stride = q.len();
    let top = stride * hb.iter().max().copied().unwrap_or(0) + hq.iter().max().copied().unwrap_or(0);
    let sizes: Vec<usize> = (0..=top).map(|_| rng.gen_range(1..=bounds.set)).collect();
    let steps: Vec<Vec<usize>> =
        (0..top).map(|d| (0..sizes[d]).map(|_| rng.gen_range(0..sizes[d + 1])).collect()).collect();
    let along = |from: usize, to: usize| -> Vec<usize> {
        (0..sizes[from]).map(|x| (from..to).fold(x, |y, d| steps[d][y])).collect()
    };
    let power = |e: usize, b: usize| (0..e).fold(b, |y, _| r[y]);
    let deg = |a: usize, b: usize| stride * hb[a] + hq[b];
    let functor = PosetFunctor::new(base.clone(), vec![q.clone(); base.len()], |a1, a2| {
        Ok((0..q.len()).map(|b| power(hb[a2] - hb[a1], b)).collect())
    })?;
    let diagrams = (0..base.len())
        .map(|a| SetDiagram::new(q.clone(), (0..q.len()).map(|b| sizes[deg(a, b)]).collect(), |b1, b2| Ok(along(deg(a, b1), deg(a, b2)))))
        .collect::<Result<Vec<_>>>()?;
    IndexedFamily::new(functor, diagrams, |a1, a2, b| {
        let fb = power(hb[a2] - hb[a1], b);
        Ok(along(deg(a1, b), deg(a2, fb)))
    })
}
