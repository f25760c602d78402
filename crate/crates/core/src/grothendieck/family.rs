//! Poset-valued functors, set-valued diagrams and indexed families on a
//! finite poset regarded as a category.

use std::collections::BTreeMap;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::topology::FinPoset;

/// A functor from a base poset to finite posets: a fiber per object and a
/// monotone map per relation `a₁ ≤ a₂`.
#[derive(Debug, Clone)]
pub struct PosetFunctor {
    base: FinPoset,
    fibers: Vec<FinPoset>,
    maps: BTreeMap<(usize, usize), Vec<usize>>,
}

impl PosetFunctor {
    /// `map(a₁, a₂)` gives `F(a₁ ≤ a₂)` as an image list; it is queried for
    /// every related pair, identities included.
    pub fn new(
        base: FinPoset,
        fibers: Vec<FinPoset>,
        mut map: impl FnMut(usize, usize) -> Result<Vec<usize>>,
    ) -> Result<Self> {
        if fibers.len() != base.len() {
            return Err(Error::SizeMismatch(format!("{} fibers over {} objects", fibers.len(), base.len())));
        }
        let mut maps = BTreeMap::new();
        for (a1, a2) in base.relation() {
            maps.insert((a1, a2), map(a1, a2)?);
        }
        let f = PosetFunctor { base, fibers, maps };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<()> {
        for (&(a1, a2), m) in &self.maps {
            let (src, dst) = (&self.fibers[a1], &self.fibers[a2]);
            if m.len() != src.len() || m.iter().any(|&b| b >= dst.len()) {
                return Err(Error::NotFunctorial(format!("F({a1} ≤ {a2}) has the wrong shape")));
            }
            for (b1, b2) in src.relation() {
                if !dst.leq(m[b1], m[b2]) {
                    return Err(Error::NotFunctorial(format!("F({a1} ≤ {a2}) is not monotone at {b1} ≤ {b2}")));
                }
            }
            if a1 == a2 && m.iter().enumerate().any(|(b, &x)| b != x) {
                return Err(Error::NotFunctorial(format!("F({a1} ≤ {a1}) is not the identity")));
            }
        }
        for (&(a1, a2), m12) in &self.maps {
            for a3 in self.base.strictly_above(a2) {
                let m23 = &self.maps[&(a2, a3)];
                let m13 = &self.maps[&(a1, a3)];
                if (0..m12.len()).any(|b| m23[m12[b]] != m13[b]) {
                    return Err(Error::NotFunctorial(format!("F({a2} ≤ {a3})∘F({a1} ≤ {a2}) ≠ F({a1} ≤ {a3})")));
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &FinPoset {
        &self.base
    }

    pub fn fiber(&self, a: usize) -> &FinPoset {
        &self.fibers[a]
    }

    /// `F(a₁ ≤ a₂)(b)`.
    pub fn apply(&self, a1: usize, a2: usize, b: usize) -> usize {
        self.maps[&(a1, a2)][b]
    }
}

/// A functor from a poset to finite sets: the set at object `i` is
/// `0..sizes[i]`, with a function per relation `i ≤ j`.
#[derive(Debug, Clone)]
pub struct SetDiagram {
    shape: FinPoset,
    sizes: Vec<usize>,
    maps: BTreeMap<(usize, usize), Vec<usize>>,
}

impl SetDiagram {
    pub fn new(
        shape: FinPoset,
        sizes: Vec<usize>,
        mut map: impl FnMut(usize, usize) -> Result<Vec<usize>>,
    ) -> Result<Self> {
        if sizes.len() != shape.len() {
            return Err(Error::SizeMismatch(format!("{} sets over {} objects", sizes.len(), shape.len())));
        }
        let mut maps = BTreeMap::new();
        for (i, j) in shape.relation() {
            maps.insert((i, j), map(i, j)?);
        }
        let d = SetDiagram { shape, sizes, maps };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        for (&(i, j), m) in &self.maps {
            if m.len() != self.sizes[i] || m.iter().any(|&x| x >= self.sizes[j]) {
                return Err(Error::NotFunctorial(format!("map {i} ≤ {j} has the wrong shape")));
            }
            if i == j && m.iter().enumerate().any(|(x, &y)| x != y) {
                return Err(Error::NotFunctorial(format!("map {i} ≤ {i} is not the identity")));
            }
        }
        for (&(i, j), mij) in &self.maps {
            for l in self.shape.strictly_above(j) {
                let (mjl, mil) = (&self.maps[&(j, l)], &self.maps[&(i, l)]);
                if (0..mij.len()).any(|x| mjl[mij[x]] != mil[x]) {
                    return Err(Error::NotFunctorial(format!("maps through {i} ≤ {j} ≤ {l} do not compose")));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &FinPoset {
        &self.shape
    }

    pub fn size(&self, i: usize) -> usize {
        self.sizes[i]
    }

    pub fn total_size(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn map(&self, i: usize, j: usize) -> &[usize] {
        &self.maps[&(i, j)]
    }
}

/// An `F`-indexed family of set-valued functors: a diagram `G_A` on every
/// fiber `F(A)` and, for every `α: A₁ ≤ A₂`, components
/// `η_α(B): G_{A₁}(B) → G_{A₂}(F(α)(B))`.
#[derive(Debug, Clone)]
pub struct IndexedFamily {
    functor: PosetFunctor,
    diagrams: Vec<SetDiagram>,
    eta: BTreeMap<(usize, usize), Vec<Vec<usize>>>,
}

impl IndexedFamily {
    /// `eta(a₁, a₂, b)` returns `η_{a₁ ≤ a₂}(b)` as an image list.
    pub fn new(
        functor: PosetFunctor,
        diagrams: Vec<SetDiagram>,
        mut eta: impl FnMut(usize, usize, usize) -> Result<Vec<usize>>,
    ) -> Result<Self> {
        let base = functor.base().clone();
        if diagrams.len() != base.len() {
            return Err(Error::SizeMismatch(format!("{} diagrams over {} objects", diagrams.len(), base.len())));
        }
        for (a, d) in diagrams.iter().enumerate() {
            if d.shape() != functor.fiber(a) {
                return Err(Error::SizeMismatch(format!("diagram {a} is not indexed by F({a})")));
            }
        }
        let mut components = BTreeMap::new();
        for (a1, a2) in base.relation() {
            let comps = (0..functor.fiber(a1).len()).map(|b| eta(a1, a2, b)).collect::<Result<Vec<_>>>()?;
            components.insert((a1, a2), comps);
        }
        let fam = IndexedFamily { functor, diagrams, eta: components };
        fam.validate()?;
        Ok(fam)
    }

    fn validate(&self) -> Result<()> {
        let f = &self.functor;
        for (&(a1, a2), comps) in &self.eta {
            let (g1, g2) = (&self.diagrams[a1], &self.diagrams[a2]);
            for (b, c) in comps.iter().enumerate() {
                let fb = f.apply(a1, a2, b);
                if c.len() != g1.size(b) || c.iter().any(|&y| y >= g2.size(fb)) {
                    return Err(Error::NotFunctorial(format!("η({a1} ≤ {a2}) at {b} has the wrong shape")));
                }
                if a1 == a2 && c.iter().enumerate().any(|(x, &y)| x != y) {
                    return Err(Error::NotFunctorial(format!("η({a1} ≤ {a1}) is not the identity at {b}")));
                }
            }
            // naturality: G_{A₂}(F(α)β) ∘ η_α(B) = η_α(B') ∘ G_{A₁}(β)
            for (b, b2) in f.fiber(a1).relation() {
                let (fb, fb2) = (f.apply(a1, a2, b), f.apply(a1, a2, b2));
                let lhs = g2.map(fb, fb2);
                let rhs = g1.map(b, b2);
                if (0..g1.size(b)).any(|x| lhs[comps[b][x]] != comps[b2][rhs[x]]) {
                    return Err(Error::NotFunctorial(format!("η({a1} ≤ {a2}) is not natural at {b} ≤ {b2}")));
                }
            }
            // associativity: η_{α₂α₁}(B) = η_{α₂}(F(α₁)B) ∘ η_{α₁}(B)
            for a3 in f.base().strictly_above(a2) {
                let (e23, e13) = (&self.eta[&(a2, a3)], &self.eta[&(a1, a3)]);
                for (b, c) in comps.iter().enumerate() {
                    let fb = f.apply(a1, a2, b);
                    if (0..c.len()).any(|x| e23[fb][c[x]] != e13[b][x]) {
                        return Err(Error::NotFunctorial(format!("η is not associative through {a1} ≤ {a2} ≤ {a3}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn functor(&self) -> &PosetFunctor {
        &self.functor
    }

    pub fn diagram(&self, a: usize) -> &SetDiagram {
        &self.diagrams[a]
    }

    pub fn eta(&self, a1: usize, a2: usize, b: usize) -> &[usize] {
        &self.eta[&(a1, a2)][b]
    }
}

/// The Grothendieck construction of a poset-valued functor: objects `(A, B)`
/// with `B ∈ F(A)`, and `(A₁, B₁) ≤ (A₂, B₂)` iff `A₁ ≤ A₂` and
/// `F(A₁ ≤ A₂)(B₁) ≤ B₂`. Returns the poset and its object list.
pub fn grothendieck(f: &PosetFunctor, budget: &Budget) -> Result<(FinPoset, Vec<(usize, usize)>)> {
    let mut objects = Vec::new();
    for a in 0..f.base().len() {
        for b in 0..f.fiber(a).len() {
            objects.push((a, b));
        }
    }
    budget.check_elements(objects.len())?;
    let p = FinPoset::from_relation(objects.len(), budget, |i, j| {
        let ((a1, b1), (a2, b2)) = (objects[i], objects[j]);
        f.base().leq(a1, a2) && f.fiber(a2).leq(f.apply(a1, a2, b1), b2)
    })?;
    Ok((p, objects))
}

/// The diagram `G∫F` on the Grothendieck construction: `(A, B) ↦ G_A(B)`,
/// and `(α, β)` acts by `G_{A₂}(β) ∘ η_α(B₁)`.
pub fn integrate(fam: &IndexedFamily, budget: &Budget) -> Result<(SetDiagram, Vec<(usize, usize)>)> {
    let (shape, objects) = grothendieck(fam.functor(), budget)?;
    let sizes = objects.iter().map(|&(a, b)| fam.diagram(a).size(b)).collect();
    let f = fam.functor();
    let d = SetDiagram::new(shape, sizes, |i, j| {
        let ((a1, b1), (a2, b2)) = (objects[i], objects[j]);
        let fb = f.apply(a1, a2, b1);
        let g = fam.diagram(a2).map(fb, b2);
        Ok(fam.eta(a1, a2, b1).iter().map(|&x| g[x]).collect())
    })?;
    Ok((d, objects))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    fn chain(n: usize) -> FinPoset {
        FinPoset::from_relation(n, &b(), |i, j| i <= j).unwrap()
    }

    fn antichain(n: usize) -> FinPoset {
        FinPoset::from_relation(n, &b(), |i, j| i == j).unwrap()
    }

    #[test]
    fn singleton_base_gives_the_fiber() {
        let fib = chain(3);
        let f = PosetFunctor::new(chain(1), vec![fib.clone()], |_, _| Ok(vec![0, 1, 2])).unwrap();
        let (p, objects) = grothendieck(&f, &b()).unwrap();
        assert_eq!(p, fib);
        assert_eq!(objects, vec![(0, 0), (0, 1), (0, 2)]);
    }

    #[test]
    fn constant_identity_fiber_is_the_product() {
        let (base, fib) = (chain(2), antichain(2));
        let f = PosetFunctor::new(base, vec![fib.clone(), fib], |_, _| Ok(vec![0, 1])).unwrap();
        let (p, objects) = grothendieck(&f, &b()).unwrap();
        for i in 0..p.len() {
            for j in 0..p.len() {
                let ((a1, b1), (a2, b2)) = (objects[i], objects[j]);
                assert_eq!(p.leq(i, j), a1 <= a2 && b1 == b2);
            }
        }
    }

    #[test]
    fn rejects_bad_functors() {
        // non-monotone
        assert!(PosetFunctor::new(chain(2), vec![chain(2), chain(2)], |a1, a2| Ok(if a1 == a2 {
            vec![0, 1]
        } else {
            vec![1, 0]
        }))
        .is_err());
        // identity not sent to identity
        assert!(PosetFunctor::new(chain(1), vec![antichain(2)], |_, _| Ok(vec![1, 0])).is_err());
        // composition fails: a swap on every strict relation of 0 < 1 < 2
        let swap = |a1: usize, a2: usize| Ok(if a1 == a2 { vec![0, 1] } else { vec![1, 0] });
        assert!(PosetFunctor::new(chain(3), vec![antichain(2); 3], swap).is_err());
    }

    #[test]
    fn diagram_validation() {
        let sizes = [2, 1];
        assert!(SetDiagram::new(chain(2), sizes.to_vec(), |i, j| Ok(if i == j { (0..sizes[i]).collect() } else { vec![0, 0] }))
            .is_ok());
        assert!(SetDiagram::new(chain(2), vec![2, 1], |i, j| Ok(if i == j { vec![0; 2] } else { vec![0, 0] })).is_err());
        assert!(SetDiagram::new(chain(2), vec![1, 1], |_, _| Ok(vec![1])).is_err());
    }

    #[test]
    fn constant_family_integrates_to_constant_diagram() {
        let f = PosetFunctor::new(chain(2), vec![chain(2), chain(2)], |_, _| Ok(vec![0, 1])).unwrap();
        let d = SetDiagram::new(chain(2), vec![1, 1], |_, _| Ok(vec![0])).unwrap();
        let fam = IndexedFamily::new(f, vec![d.clone(), d], |_, _, _| Ok(vec![0])).unwrap();
        let (g, objects) = integrate(&fam, &b()).unwrap();
        assert_eq!(objects.len(), 4);
        assert!((0..4).all(|i| g.size(i) == 1));
    }

    #[test]
    fn rejects_unnatural_eta() {
        let f = PosetFunctor::new(chain(2), vec![chain(1), chain(1)], |_, _| Ok(vec![0])).unwrap();
        let d = SetDiagram::new(chain(1), vec![2], |_, _| Ok(vec![0, 1])).unwrap();
        let fam = IndexedFamily::new(f.clone(), vec![d.clone(), d.clone()], |a1, a2, _| {
            Ok(if a1 == a2 { vec![0, 1] } else { vec![1, 0] })
        });
        assert!(fam.is_ok());
        let bad = IndexedFamily::new(f, vec![d.clone(), d], |_, _, _| Ok(vec![1, 0]));
        assert!(bad.is_err());
    }
}
