//! Colimits of finite set-valued diagrams and the comparison of iterated
//! with total colimits over a Grothendieck construction.

use serde::Serialize;

use super::family::{integrate, IndexedFamily, SetDiagram};
use crate::budget::Budget;
use crate::error::{Error, Result};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller root so every class is named by its least member.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// `⊔ D(i) / ∼`, with classes numbered by their least element in the order
/// `(object, element)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Colimit {
    /// `(object, element)` naming each class.
    pub representatives: Vec<(usize, usize)>,
    /// `projection[i][x]` is the class of element `x` of `D(i)`.
    pub projection: Vec<Vec<usize>>,
}

impl Colimit {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// The colimit of a finite set-valued diagram.
pub fn colim_sets(d: &SetDiagram) -> Colimit {
    let objects = d.shape().len();
    let mut offset = Vec::with_capacity(objects);
    let mut total = 0;
    for i in 0..objects {
        offset.push(total);
        total += d.size(i);
    }
    let mut uf = UnionFind::new(total);
    for (i, j) in d.shape().covers() {
        for (x, &y) in d.map(i, j).iter().enumerate() {
            uf.union(offset[i] + x, offset[j] + y);
        }
    }
    let mut class_of_root = vec![usize::MAX; total];
    let mut representatives = Vec::new();
    let mut projection = Vec::with_capacity(objects);
    for i in 0..objects {
        let mut row = Vec::with_capacity(d.size(i));
        for x in 0..d.size(i) {
            let r = uf.find(offset[i] + x);
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = representatives.len();
                representatives.push((i, x));
            }
            row.push(class_of_root[r]);
        }
        projection.push(row);
    }
    Colimit { representatives, projection }
}

#[derive(Debug, Clone, Serialize)]
pub struct PropA2Report {
    /// `|colim_A colim_{F(A)} G_A|`.
    pub iterated: usize,
    /// `|colim_{∫F} G∫F|`.
    pub total: usize,
    /// The comparison map is well defined and bijective.
    pub bijective: bool,
}

/// Compares `colim_A (colim_{F(A)} G_A)` with `colim_{∫F} G∫F` through the
/// canonical map sending the class of `(A, B, x)` to the class of the inner
/// class of `(B, x)`.
pub fn verify_prop_a2(fam: &IndexedFamily, budget: &Budget) -> Result<PropA2Report> {
    let f = fam.functor();
    let base = f.base();
    let inner: Vec<Colimit> = (0..base.len()).map(|a| colim_sets(fam.diagram(a))).collect();
    // the outer diagram A ↦ colim G_A, with maps induced by (F(α), η_α)
    let outer = SetDiagram::new(base.clone(), inner.iter().map(Colimit::len).collect(), |a1, a2| {
        let mut m = vec![usize::MAX; inner[a1].len()];
        for b in 0..f.fiber(a1).len() {
            let fb = f.apply(a1, a2, b);
            for (x, &y) in fam.eta(a1, a2, b).iter().enumerate() {
                let (c, target) = (inner[a1].projection[b][x], inner[a2].projection[fb][y]);
                if m[c] != usize::MAX && m[c] != target {
                    return Err(Error::NotFunctorial(format!("induced map {a1} ≤ {a2} is not well defined")));
                }
                m[c] = target;
            }
        }
        Ok(m)
    })?;
    let iterated = colim_sets(&outer);
    let (total_diagram, objects) = integrate(fam, budget)?;
    let total = colim_sets(&total_diagram);
    let mut comparison = vec![usize::MAX; total.len()];
    let mut well_defined = true;
    for (i, &(a, b)) in objects.iter().enumerate() {
        for x in 0..total_diagram.size(i) {
            let image = iterated.projection[a][inner[a].projection[b][x]];
            let c = total.projection[i][x];
            if comparison[c] != usize::MAX && comparison[c] != image {
                well_defined = false;
            }
            comparison[c] = image;
        }
    }
    let mut hit = vec![false; iterated.len()];
    for &c in &comparison {
        if c != usize::MAX {
            hit[c] = true;
        }
    }
    let injective = {
        let mut seen = vec![false; iterated.len()];
        comparison.iter().all(|&c| c != usize::MAX && !std::mem::replace(&mut seen[c], true))
    };
    Ok(PropA2Report {
        iterated: iterated.len(),
        total: total.len(),
        bijective: well_defined && injective && hit.iter().all(|&h| h),
    })
}
