//! Families built from complete graphs: `λ ↦ T_k(λ)` over `K̂_1(k)^op`,
//! sampled cell unions over it, and point-level colimit checks.

use std::collections::HashMap;

use serde::Serialize;

use super::colimit::colim_sets;
use super::family::{grothendieck, IndexedFamily, PosetFunctor, SetDiagram};
use crate::budget::Budget;
use crate::cubes::{minimal_cell, Configuration};
use crate::error::{Error, Result};
use crate::kgraph::{complementary_graphs, enumerate, leq, phi, restrict_along, CompleteGraphElement, Variant};
use crate::perm::Permutation;
use crate::tensor::{canonical_form, in_a, RawRep, RelationTable};
use crate::topology::FinPoset;

/// `λ ↦ T_k(λ)` on `K̂_1(k)^op`, with the underlying graphs.
#[derive(Debug, Clone)]
pub struct ComplementFunctor {
    pub n: u32,
    pub functor: PosetFunctor,
    pub lambdas: Vec<CompleteGraphElement>,
    pub fibers: Vec<Vec<CompleteGraphElement>>,
}

fn index_of(list: &[CompleteGraphElement]) -> HashMap<&CompleteGraphElement, usize> {
    list.iter().enumerate().map(|(i, g)| (g, i)).collect()
}

pub fn complement_functor(k: usize, n: u32, budget: &Budget) -> Result<ComplementFunctor> {
    let lambdas = enumerate(Variant::KHat, 1, k, budget)?;
    let base = FinPoset::from_elements(&lambdas, budget, |x, y| leq(y, x))?;
    let fibers = lambdas.iter().map(|l| complementary_graphs(l, n, budget)).collect::<Result<Vec<_>>>()?;
    let posets = fibers.iter().map(|t| FinPoset::from_elements(t, budget, leq)).collect::<Result<Vec<_>>>()?;
    let lookup: Vec<HashMap<&CompleteGraphElement, usize>> = fibers.iter().map(|t| index_of(t)).collect();
    let functor = PosetFunctor::new(base, posets, |a1, a2| {
        fibers[a1]
            .iter()
            .map(|mu| {
                let image = restrict_along(&lambdas[a1], &lambdas[a2], mu, n)?;
                lookup[a2].get(&image).copied().ok_or_else(|| Error::NotMember(format!("{image} ∉ T_k({})", lambdas[a2])))
            })
            .collect()
    })?;
    Ok(ComplementFunctor { n, functor, lambdas, fibers })
}

/// Checks that `φ` maps `K_{n+1}(k)` bijectively and order-isomorphically
/// onto the Grothendieck construction of [`complement_functor`].
pub fn grothendieck_matches_phi(k: usize, n: u32, budget: &Budget) -> Result<bool> {
    let cf = complement_functor(k, n, budget)?;
    let (poset, objects) = grothendieck(&cf.functor, budget)?;
    let lambda_index = index_of(&cf.lambdas);
    let fiber_index: Vec<_> = cf.fibers.iter().map(|t| index_of(t)).collect();
    let object_index: HashMap<(usize, usize), usize> = objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let elements = enumerate(Variant::K, n + 1, k, budget)?;
    if elements.len() != objects.len() {
        return Ok(false);
    }
    let mut image = Vec::with_capacity(elements.len());
    let mut hit = vec![false; objects.len()];
    for g in &elements {
        let (l1, l2) = phi(g, n)?;
        let a = lambda_index[&l1];
        let Some(&b) = fiber_index[a].get(&l2) else { return Ok(false) };
        let i = object_index[&(a, b)];
        if std::mem::replace(&mut hit[i], true) {
            return Ok(false);
        }
        image.push(i);
    }
    for (x, g) in elements.iter().enumerate() {
        for (y, h) in elements.iter().enumerate() {
            if leq(g, h)? != poset.leq(image[x], image[y]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The family over `K̂_1(k)^op ∫ T_k` whose value at `(λ, λ′)` is the set of
/// sample configurations in `⋃{H(μ) : μ ∈ T_k(λ), μ ≤ λ′}`, with inclusions
/// as structure maps.
pub fn sampled_cell_family(k: usize, n: u32, samples: &[Configuration], budget: &Budget) -> Result<IndexedFamily> {
    let cf = complement_functor(k, n, budget)?;
    let tables = samples.iter().map(RelationTable::new).collect::<Result<Vec<_>>>()?;
    // members[a][b]: sorted sample ids in the union below λ′ = fibers[a][b]
    let mut members: Vec<Vec<Vec<usize>>> = Vec::with_capacity(cf.lambdas.len());
    for (a, t) in cf.fibers.iter().enumerate() {
        let fiber = cf.functor.fiber(a);
        let inside: Vec<Vec<bool>> = t.iter().map(|mu| tables.iter().map(|tb| tb.in_cell(mu)).collect()).collect();
        members.push(
            (0..t.len())
                .map(|b| (0..samples.len()).filter(|&s| (0..t.len()).any(|m| fiber.leq(m, b) && inside[m][s])).collect())
                .collect(),
        );
    }
    let inclusion = |from: &[usize], to: &[usize]| -> Result<Vec<usize>> {
        from.iter()
            .map(|s| to.binary_search(s).map_err(|_| Error::NotFunctorial(format!("sample {s} is lost by a structure map"))))
            .collect()
    };
    let diagrams = (0..cf.lambdas.len())
        .map(|a| {
            let sets = &members[a];
            SetDiagram::new(cf.functor.fiber(a).clone(), sets.iter().map(Vec::len).collect(), |b1, b2| {
                inclusion(&sets[b1], &sets[b2])
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let f = cf.functor.clone();
    IndexedFamily::new(cf.functor, diagrams, |a1, a2, b| inclusion(&members[a1][b], &members[a2][f.apply(a1, a2, b)]))
}

/// Outcome of a point-level colimit comparison.
#[derive(Debug, Clone, Default, Serialize)]
pub struct PointCheck {
    pub points: usize,
    pub classes: usize,
    pub mismatches: usize,
}

/// For each sample `c`, the colimit over `K̂_1(k)^op` of `λ ↦ A(λ) ∩ {c}` has
/// exactly as many classes as there are distinct canonical forms of `(π; c)`.
pub fn tensor_colimit_check(k: usize, samples: &[Configuration], budget: &Budget) -> Result<PointCheck> {
    let lambdas = enumerate(Variant::KHat, 1, k, budget)?;
    let shape = FinPoset::from_elements(&lambdas, budget, |x, y| leq(y, x))?;
    let perms = Permutation::all(k);
    let mut out = PointCheck::default();
    for c in samples {
        let present = lambdas.iter().map(|l| in_a(l, c)).collect::<Result<Vec<bool>>>()?;
        let d = SetDiagram::new(shape.clone(), present.iter().map(|&p| usize::from(p)).collect(), |i, _| {
            Ok(if present[i] { vec![0] } else { Vec::new() })
        })?;
        let classes = colim_sets(&d).len();
        let mut forms = Vec::new();
        for p in &perms {
            let f = canonical_form(&RawRep::new(p.clone(), c.clone())?);
            if !forms.contains(&f) {
                forms.push(f);
            }
        }
        out.points += 1;
        out.classes += classes;
        if classes != forms.len() {
            out.mismatches += 1;
        }
    }
    Ok(out)
}

/// For fixed `λ`, the colimit over `T_k(λ)` of the sampled cell unions has
/// one class per sample in `A(λ)`, and the least object of each class is the
/// minimal cell of its sample.
pub fn cover_colimit_check(
    lambda: &CompleteGraphElement,
    n: u32,
    samples: &[Configuration],
    budget: &Budget,
) -> Result<PointCheck> {
    let t = complementary_graphs(lambda, n, budget)?;
    let shape = FinPoset::from_elements(&t, budget, leq)?;
    let tables = samples.iter().map(RelationTable::new).collect::<Result<Vec<_>>>()?;
    let inside: Vec<Vec<bool>> = t.iter().map(|mu| tables.iter().map(|tb| tb.in_cell(mu)).collect()).collect();
    let sets: Vec<Vec<usize>> = (0..t.len())
        .map(|b| (0..samples.len()).filter(|&s| (0..t.len()).any(|m| shape.leq(m, b) && inside[m][s])).collect())
        .collect();
    let d = SetDiagram::new(shape.clone(), sets.iter().map(Vec::len).collect(), |i, j| {
        sets[i]
            .iter()
            .map(|s| sets[j].binary_search(s).map_err(|_| Error::NotFunctorial(format!("sample {s} lost"))))
            .collect()
    })?;
    let colim = colim_sets(&d);
    let mut out = PointCheck { points: samples.len(), classes: colim.len(), mismatches: 0 };
    // sample id of each class, and the objects where it lives
    let mut class_sample = vec![usize::MAX; colim.len()];
    let mut class_objects: Vec<Vec<usize>> = vec![Vec::new(); colim.len()];
    for (i, row) in colim.projection.iter().enumerate() {
        for (x, &c) in row.iter().enumerate() {
            let s = sets[i][x];
            if class_sample[c] != usize::MAX && class_sample[c] != s {
                out.mismatches += 1;
            }
            class_sample[c] = s;
            class_objects[c].push(i);
        }
    }
    let mut seen = vec![0usize; samples.len()];
    for (c, &s) in class_sample.iter().enumerate() {
        seen[s] += 1;
        let least = class_objects[c].iter().copied().find(|&i| class_objects[c].iter().all(|&j| shape.leq(i, j)));
        match (least, minimal_cell(&samples[s], lambda, n)) {
            (Some(i), Ok(m)) if t[i] == m => {}
            _ => out.mismatches += 1,
        }
    }
    for (s, c) in samples.iter().enumerate() {
        let expected = usize::from(in_a(lambda, c)?);
        if seen[s] != expected {
            out.mismatches += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grothendieck::colimit::verify_prop_a2;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn samples(k: usize, n: usize, count: usize, seed: u64) -> Vec<Configuration> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| Configuration::random(k, n, 3, &mut rng)).collect()
    }

    #[test]
    fn grothendieck_of_t2_is_k2_2() {
        let b = Budget::default();
        let cf = complement_functor(2, 1, &b).unwrap();
        let (p, _) = grothendieck(&cf.functor, &b).unwrap();
        assert_eq!(p.len(), 4);
        assert!(grothendieck_matches_phi(2, 1, &b).unwrap());
    }

    #[test]
    fn grothendieck_of_t3_is_k2_3() {
        let b = Budget::default();
        assert!(grothendieck_matches_phi(3, 1, &b).unwrap());
        assert!(grothendieck_matches_phi(3, 2, &b).unwrap());
    }

    #[test]
    fn sampled_families_satisfy_prop_a2() {
        let b = Budget::default();
        for k in 1..=3 {
            let fam = sampled_cell_family(k, 2, &samples(k, 2, 12, k as u64), &b).unwrap();
            let r = verify_prop_a2(&fam, &b).unwrap();
            assert!(r.bijective);
        }
    }

    #[test]
    fn tensor_colimit_counts() {
        let b = Budget::default();
        let r = tensor_colimit_check(3, &samples(3, 2, 40, 7), &b).unwrap();
        assert_eq!(r.mismatches, 0);
        assert!(r.classes > r.points);
    }

    #[test]
    fn cover_colimit_counts() {
        let b = Budget::default();
        for lambda in enumerate(Variant::KHat, 1, 3, &b).unwrap() {
            let r = cover_colimit_check(&lambda, 2, &samples(3, 2, 25, 9), &b).unwrap();
            assert_eq!(r.mismatches, 0, "{lambda}");
        }
    }
}
