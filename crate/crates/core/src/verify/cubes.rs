//! Properties of the orders `<_i`, compatibility of cells with composition,
//! and the three-cube counterexample.

use rand::Rng;
use serde_json::json;

use super::{CheckReport, VerifyConfig};
use crate::cubes::{analyze_counterexample, compose_cubes, disjoint_interiors, in_cell, less_i, Configuration, LittleCube};
use crate::error::Result;
use crate::kgraph::{operad_compose, pairs, phi, Arrow, CompleteGraphElement, EdgeState};

/// Open intervals `(lo, hi)` meet on every axis.
fn interiors_meet(a: &LittleCube, b: &LittleCube) -> bool {
    (0..a.dim()).all(|j| a.lo()[j] < b.hi()[j] && b.lo()[j] < a.hi()[j])
}

pub(super) fn cube_properties(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("cubes");
    let mut rng = cfg.rng(4);
    for n in 1..=cfg.n.max(1) as usize {
        r.section(format!("n = {n}: c₁ <ᵢ c₂ ⟺ c₃∘c₁ <ᵢ c₃∘c₂"), |r| {
            for _ in 0..cfg.trials {
                let d = rng.gen_range(2..=6);
                let (c1, c2, c3) =
                    (LittleCube::random(n, d, &mut rng), LittleCube::random(n, d, &mut rng), LittleCube::random(n, d, &mut rng));
                let (d1, d2) = (compose_cubes(&c3, &c1)?, compose_cubes(&c3, &c2)?);
                let mut ok = true;
                for i in 1..=n {
                    ok &= less_i(&c1, &c2, i)? == less_i(&d1, &d2, i)?;
                }
                r.record(ok, || json!({"c1": c1, "c2": c2, "c3": c3}));
            }
            Ok(())
        })?;
        r.section(format!("n = {n}: c₁ <ᵢ c₂ ⟹ c₁∘c₃ <ᵢ c₂∘c₄"), |r| {
            for _ in 0..cfg.trials {
                let d = rng.gen_range(2..=6);
                let c: Vec<LittleCube> = (0..4).map(|_| LittleCube::random(n, d, &mut rng)).collect();
                let (d1, d2) = (compose_cubes(&c[0], &c[2])?, compose_cubes(&c[1], &c[3])?);
                let mut ok = true;
                for i in 1..=n {
                    ok &= !less_i(&c[0], &c[1], i)? || less_i(&d1, &d2, i)?;
                }
                r.record(ok, || json!({"cubes": c}));
            }
            Ok(())
        })?;
        r.section(format!("n = {n}: <ᵢ irreflexive and transitive, separation ⟺ disjoint interiors"), |r| {
            for _ in 0..cfg.trials.div_ceil(10) {
                let d = rng.gen_range(2..=6);
                let c: Vec<LittleCube> = (0..3).map(|_| LittleCube::random(n, d, &mut rng)).collect();
                let mut ok = disjoint_interiors(&c[0], &c[1])? != interiors_meet(&c[0], &c[1]);
                for i in 1..=n {
                    ok &= !less_i(&c[0], &c[0], i)?;
                    if less_i(&c[0], &c[1], i)? && less_i(&c[1], &c[2], i)? {
                        ok &= less_i(&c[0], &c[2], i)?;
                    }
                }
                r.record(ok, || json!({"cubes": c}));
            }
            Ok(())
        })?;
    }
    Ok(r)
}

/// A random configuration with a graph `λ ∈ K_{n+1}(k)` such that the
/// configuration lies in `H(φ₂(λ))`: each edge takes a satisfied relation of
/// color `≤ n` or, when none holds or by chance, the reserved color `n + 1`
/// oriented by a random linear order.
fn witnessed<R: Rng + ?Sized>(k: usize, n: usize, rng: &mut R) -> Result<(CompleteGraphElement, Configuration)> {
    let config = Configuration::random(k, n, rng.gen_range(2..=5), rng);
    let rank = crate::perm::Permutation::random(k, rng);
    let cubes = config.cubes();
    let mut edges = Vec::new();
    for (p, q) in pairs(k) {
        let mut options = Vec::new();
        for i in 1..=n {
            if less_i(&cubes[p], &cubes[q], i)? {
                options.push(Arrow::new(p, q, i as u32));
            }
            if less_i(&cubes[q], &cubes[p], i)? {
                options.push(Arrow::new(q, p, i as u32));
            }
        }
        let a = if options.is_empty() || rng.gen_ratio(1, 4) {
            let reserved = n as u32 + 1;
            if rank.apply(p) < rank.apply(q) {
                Arrow::new(p, q, reserved)
            } else {
                Arrow::new(q, p, reserved)
            }
        } else {
            options[rng.gen_range(0..options.len())]
        };
        edges.push(EdgeState::Arrow(a));
    }
    Ok((CompleteGraphElement::new(k, edges)?, config))
}

pub(super) fn compatibility(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("compatibility");
    let mut rng = cfg.rng(5);
    r.section("composites of witnessed cells stay in the composed cell".to_string(), |r| {
        for _ in 0..cfg.trials {
            let n = rng.gen_range(1..=cfg.n.max(1) as usize);
            let k = rng.gen_range(0..=3);
            let (lambda, outer) = witnessed(k, n, &mut rng)?;
            let mut parts = Vec::with_capacity(k);
            let mut cubes = Vec::new();
            for i in 0..k {
                let (li, ci) = witnessed(rng.gen_range(0..=3), n, &mut rng)?;
                for c in ci.cubes() {
                    cubes.push(compose_cubes(&outer.cubes()[i], c)?);
                }
                parts.push((li, ci));
            }
            let graphs: Vec<CompleteGraphElement> = parts.iter().map(|p| p.0.clone()).collect();
            let composed = operad_compose(&lambda, &graphs)?;
            let config = Configuration::new(cubes)?;
            let (_, mu) = phi(&composed, n as u32)?;
            let mut ok = in_cell(&outer, &phi(&lambda, n as u32)?.1)?;
            for (l, c) in &parts {
                ok &= in_cell(c, &phi(l, n as u32)?.1)?;
            }
            ok &= in_cell(&config, &mu)?;
            r.record(ok, || json!({"lambda": lambda, "outer": outer, "parts": parts.iter().map(|p| json!({"graph": p.0, "cubes": p.1})).collect::<Vec<_>>()}));
        }
        Ok(())
    })?;
    Ok(r)
}

pub(super) fn counterexample(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("counterexample");
    let report = analyze_counterexample(&cfg.budget)?;
    r.record(report.exhibits_violation(), || serde_json::to_value(&report).unwrap_or_default());
    r.details.push(format!(
        "{} minimal Berger cells, {} overlapping pairs, γ = {}",
        report.berger_minimal_cells.len(),
        report.overlapping_interiors.len(),
        report.gamma
    ));
    Ok(r)
}
