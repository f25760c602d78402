//! Indexed families and colimits, order-complex homology, and nerve
//! acyclicity.

use std::collections::HashMap;

use rand::Rng;
use serde_json::json;

use super::{CheckReport, VerifyConfig};
use crate::budget::Budget;
use crate::cubes::{cover_nerve, Configuration};
use crate::error::Result;
use crate::grothendieck::{
    cover_colimit_check, random_family, sampled_cell_family, tensor_colimit_check, verify_prop_a2, FamilyBounds,
};
use crate::kgraph::{complementary_graphs, enumerate, leq, sigma_action, Variant};
use crate::perm::Permutation;
use crate::topology::fixtures::{conf_space_betti, recorded_conf_betti};
use crate::topology::{homology, is_cone, order_complex, reduced_acyclic, FinPoset, HomologyResult, SimplicialComplex};

pub(super) fn prop_a2(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("prop-a2");
    let mut rng = cfg.rng(9);
    r.section("random indexed families".to_string(), |r| {
        for t in 0..cfg.trials {
            let fam = random_family(FamilyBounds::default(), &mut rng, &cfg.budget)?;
            let rep = verify_prop_a2(&fam, &cfg.budget)?;
            r.record(rep.bijective, || json!({"trial": t, "report": rep}));
        }
        Ok(())
    })?;
    Ok(r)
}

fn samples<R: Rng + ?Sized>(k: usize, n: usize, count: usize, rng: &mut R) -> Vec<Configuration> {
    (0..count).map(|_| Configuration::random(k, n, rng.gen_range(2..=5), rng)).collect()
}

pub(super) fn colimits(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("colimits");
    let mut rng = cfg.rng(10);
    let b = &cfg.budget;
    let count = (cfg.trials as usize).clamp(8, 40);
    for k in 1..=cfg.k.min(3) {
        for n in 1..=cfg.n.max(1) {
            let pts = samples(k, n as usize, count, &mut rng);
            r.section(format!("K̂_1({k})^op ∫ T_{k}, n = {n}, {count} sampled configurations"), |r| {
                let fam = sampled_cell_family(k, n, &pts, b)?;
                let rep = verify_prop_a2(&fam, b)?;
                r.record(rep.bijective, || json!({"k": k, "n": n, "report": rep}));
                Ok(())
            })?;
            r.section(format!("colim over T_{k}(λ) of sampled cell unions, n = {n}"), |r| {
                for lambda in enumerate(Variant::KHat, 1, k, b)? {
                    let rep = cover_colimit_check(&lambda, n, &pts, b)?;
                    r.record(rep.mismatches == 0, || json!({"lambda": lambda, "report": rep}));
                }
                Ok(())
            })?;
        }
        let pts = samples(k, cfg.n.max(1) as usize, count, &mut rng);
        r.section(format!("colim over K̂_1({k})^op of A(λ) at sampled points"), |r| {
            let rep = tensor_colimit_check(k, &pts, b)?;
            r.record(rep.mismatches == 0, || json!({"k": k, "report": rep}));
            Ok(())
        })?;
    }
    Ok(r)
}

/// Whether no non-identity permutation of the vertices of `K_n(k)` maps a
/// simplex of its order complex to itself.
fn action_is_free(elements: &[crate::CompleteGraphElement], complex: &SimplicialComplex) -> Result<bool> {
    let index: HashMap<_, usize> = elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let k = elements.first().map_or(0, |g| g.k());
    for s in Permutation::all(k).into_iter().filter(|s| !s.is_identity()) {
        let image = elements.iter().map(|g| Ok(index[&sigma_action(&s, g)?])).collect::<Result<Vec<usize>>>()?;
        for d in 0..=complex.dimension().max(-1) as usize {
            for simplex in complex.simplices(d) {
                let mut moved: Vec<usize> = simplex.iter().map(|&v| image[v]).collect();
                moved.sort_unstable();
                if &moved == simplex {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Order-complex homology of `variant_n(k)`.
pub fn poset_homology(variant: Variant, n: u32, k: usize, budget: &Budget) -> Result<(FinPoset, SimplicialComplex, HomologyResult)> {
    let elements = enumerate(variant, n, k, budget)?;
    let poset = FinPoset::from_elements(&elements, budget, leq)?;
    let complex = order_complex(&poset, budget)?;
    let h = homology(&complex, false, budget)?;
    Ok((poset, complex, h))
}

pub(super) fn homology_check(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("homology");
    let b = &cfg.budget;
    let mut cases: Vec<(u32, usize)> = Vec::new();
    for n in 1..=cfg.n.max(1) {
        for k in 1..=cfg.k.min(3) {
            cases.push((n, k));
        }
    }
    for n in 1..=cfg.n.max(4) {
        if !cases.contains(&(n, 2)) {
            cases.push((n, 2));
        }
    }
    for (n, k) in cases {
        let elements = enumerate(Variant::K, n, k, b)?;
        let (_, complex, h) = poset_homology(Variant::K, n, k, b)?;
        let got: Vec<u64> = h.betti_trimmed().iter().map(|&x| x as u64).collect();
        let expected = recorded_conf_betti(n as usize, k);
        let formula = conf_space_betti(n as usize, k);
        let euler = h.euler_characteristic() == complex.euler_characteristic();
        let free = action_is_free(&elements, &complex)?;
        let ok = expected.as_ref() == Some(&got) && formula == got && h.torsion_free() && euler && (k < 2 || free);
        r.record(ok, || json!({"n": n, "k": k, "betti": got, "expected": expected, "torsion": h.torsion}));
        r.details.push(format!("K_{n}({k}): Betti {got:?}, f-vector {:?}, free Σ_{k} action: {free}", complex.f_vector()));
    }
    for (n, k) in [(1, 2), (2, 2), (1, 3)] {
        let (poset, complex, _) = poset_homology(Variant::KHat, n, k, b)?;
        let ok = is_cone(&poset) && reduced_acyclic(&complex, b)?;
        r.record(ok, || json!({"cone": format!("K̂_{n}({k})")}));
        r.details.push(format!("K̂_{n}({k}) is a cone with acyclic order complex: {ok}"));
    }
    let (poset, _, _) = poset_homology(Variant::K, 2, 2, b)?;
    r.record(!is_cone(&poset), || json!({"cone": "K_2(2) should have no extremum"}));
    Ok(r)
}

/// Nerve acyclicity for every `λ ∈ K̂_1(k)` and every `λ′ ∈ T_k(λ)`.
pub fn acyclicity_sweep(r: &mut CheckReport, n: u32, k: usize, budget: &Budget) -> Result<()> {
    r.section(format!("n = {n}, k = {k}: all (λ, λ′)"), |r| {
        let mut largest = 0;
        for lambda in enumerate(Variant::KHat, 1, k, budget)? {
            for top in complementary_graphs(&lambda, n, budget)? {
                let rep = cover_nerve(&lambda, &top, n, budget)?;
                largest = largest.max(rep.cells.len());
                r.record(rep.acyclic, || json!({"lambda": lambda, "lambda_prime": top, "homology": rep.homology}));
            }
        }
        r.details.push(format!("n = {n}, k = {k}: largest cover has {largest} cells"));
        Ok(())
    })
}

pub(super) fn acyclicity(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("acyclicity");
    for n in 1..=cfg.n.max(1) {
        for k in 1..=cfg.k {
            acyclicity_sweep(&mut r, n, k, &cfg.budget)?;
        }
    }
    Ok(r)
}
