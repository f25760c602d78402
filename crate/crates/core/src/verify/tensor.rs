//! The relation on raw representatives, the labelled-graph model, and the
//! pointwise cover of `A(λ)` by cells.

use std::collections::HashMap;

use rand::Rng;
use serde_json::json;

use super::{CheckReport, VerifyConfig};
use crate::cubes::{in_cell, Configuration};
use crate::error::Result;
use crate::kgraph::{complementary_graphs, enumerate, CompleteGraphElement, Variant};
use crate::perm::Permutation;
use crate::tensor::{canonical_form, cover_check, equivalent, raw_compose, realize, tensor_compose, LabelledGraph, RawRep};

/// A permutation reached from `p` by a few random adjacent swaps in the
/// product word, so that related pairs are common.
fn nearby<R: Rng + ?Sized>(p: &Permutation, rng: &mut R) -> Permutation {
    let mut word = p.images().to_vec();
    if word.len() >= 2 {
        for _ in 0..rng.gen_range(0..=3) {
            let i = rng.gen_range(0..word.len() - 1);
            word.swap(i, i + 1);
        }
    }
    Permutation::from_images(word).expect("still a bijection")
}

pub(super) fn relation(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("relation");
    let mut rng = cfg.rng(6);
    r.section("reflexive, symmetric, transitive; related ⟺ equal canonical forms".to_string(), |r| {
        for _ in 0..cfg.trials {
            let k = rng.gen_range(1..=5);
            let n = rng.gen_range(1..=cfg.n.max(1) as usize);
            let cubes = Configuration::random(k, n, rng.gen_range(2..=4), &mut rng);
            let p1 = Permutation::random(k, &mut rng);
            let p2 = nearby(&p1, &mut rng);
            let p3 = nearby(&p2, &mut rng);
            let rs: Vec<RawRep> =
                [p1, p2, p3].into_iter().map(|p| RawRep::new(p, cubes.clone())).collect::<Result<_>>()?;
            let e = |a: usize, b: usize| equivalent(&rs[a], &rs[b]);
            let forms: Vec<LabelledGraph> = rs.iter().map(canonical_form).collect();
            let mut ok = e(0, 0)? && e(1, 1)?;
            ok &= e(0, 1)? == e(1, 0)?;
            if e(0, 1)? && e(1, 2)? {
                ok &= e(0, 2)?;
            }
            for (a, b) in [(0, 1), (1, 2), (0, 2)] {
                ok &= e(a, b)? == (forms[a] == forms[b]);
            }
            r.record(ok, || json!({"representatives": rs}));
        }
        Ok(())
    })?;
    Ok(r)
}

pub(super) fn tensor_laws(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("tensor");
    let mut rng = cfg.rng(7);
    let n_max = cfg.n.max(1) as usize;
    r.section("canonical_form ∘ realize".to_string(), |r| {
        for _ in 0..cfg.trials {
            let g = LabelledGraph::random(rng.gen_range(0..=5), rng.gen_range(1..=n_max), 4, &mut rng);
            let reduced = g.reduce();
            let ok = canonical_form(&realize(&g)) == reduced && canonical_form(&realize(&reduced)) == reduced;
            r.record(ok, || json!({"graph": g}));
        }
        Ok(())
    })?;
    r.section("composition: labelled graphs against raw representatives".to_string(), |r| {
        for _ in 0..cfg.trials {
            let n = rng.gen_range(1..=n_max);
            let k = rng.gen_range(0..=3);
            let outer = RawRep::new(Permutation::random(k, &mut rng), Configuration::random(k, n, 4, &mut rng))?;
            let parts = (0..k)
                .map(|_| {
                    let m = rng.gen_range(0..=3);
                    RawRep::new(Permutation::random(m, &mut rng), Configuration::random(m, n, 4, &mut rng))
                })
                .collect::<Result<Vec<_>>>()?;
            let forms: Vec<LabelledGraph> = parts.iter().map(canonical_form).collect();
            let x = canonical_form(&outer);
            let composed = tensor_compose(&x, &forms)?;
            let mut ok = composed == canonical_form(&raw_compose(&outer, &parts)?);
            // equivariance: γ(σ·x; parts permuted) = σ⟨m⟩·γ(x; parts)
            let sigma = Permutation::random(k, &mut rng);
            let inv = sigma.inverse();
            let moved: Vec<LabelledGraph> = (0..k).map(|j| forms[inv.apply(j)].clone()).collect();
            let sizes: Vec<usize> = forms.iter().map(LabelledGraph::k).collect();
            ok &= tensor_compose(&x.act(&sigma)?, &moved)? == composed.act(&sigma.block(&sizes)?)?;
            let taus: Vec<Permutation> = sizes.iter().map(|&m| Permutation::random(m, &mut rng)).collect();
            let acted = forms.iter().zip(&taus).map(|(f, t)| f.act(t)).collect::<Result<Vec<_>>>()?;
            ok &= tensor_compose(&x, &acted)? == composed.act(&Permutation::direct_sum(&taus))?;
            // unit laws
            ok &= tensor_compose(&composed, &vec![LabelledGraph::unit(n); composed.k()])? == composed;
            r.record(ok, || json!({"outer": outer, "parts": parts}));
        }
        Ok(())
    })?;
    r.section("associativity in canonical form".to_string(), |r| {
        for _ in 0..cfg.trials.div_ceil(4) {
            let n = rng.gen_range(1..=n_max);
            let canon = |g: LabelledGraph| canonical_form(&realize(&g));
            let k = rng.gen_range(0..=3);
            let x = canon(LabelledGraph::random(k, n, 4, &mut rng));
            let ys: Vec<LabelledGraph> = (0..k).map(|_| canon(LabelledGraph::random(rng.gen_range(0..=2), n, 4, &mut rng))).collect();
            let m: usize = ys.iter().map(LabelledGraph::k).sum();
            let zs: Vec<LabelledGraph> = (0..m).map(|_| canon(LabelledGraph::random(rng.gen_range(0..=2), n, 4, &mut rng))).collect();
            let lhs = tensor_compose(&tensor_compose(&x, &ys)?, &zs)?;
            let mut inner = Vec::with_capacity(k);
            let mut at = 0;
            for y in &ys {
                inner.push(tensor_compose(y, &zs[at..at + y.k()])?);
                at += y.k();
            }
            let rhs = tensor_compose(&x, &inner)?;
            r.record(lhs == rhs, || json!({"x": x, "ys": ys, "zs": zs}));
        }
        Ok(())
    })?;
    r.section("Σ_k acts freely on canonical forms".to_string(), |r| {
        for _ in 0..cfg.trials.div_ceil(10) {
            let k = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=n_max);
            let mut cubes = Configuration::random(k, n, 3, &mut rng).cubes().to_vec();
            // repeated cubes are allowed and must not create fixed points
            if k >= 2 && rng.gen_bool(0.5) {
                cubes[1] = cubes[0].clone();
            }
            let raw = RawRep::new(Permutation::random(k, &mut rng), Configuration::new(cubes)?)?;
            let g = canonical_form(&raw);
            let mut ok = true;
            for s in Permutation::all(k).iter().filter(|s| !s.is_identity()) {
                ok &= g.act(s)? != g;
                ok &= canonical_form(&raw.act(s)?) == g.act(s)?;
            }
            r.record(ok, || json!({"representative": raw}));
        }
        Ok(())
    })?;
    Ok(r)
}

pub(super) fn cover(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("cover");
    let mut rng = cfg.rng(8);
    let b = &cfg.budget;
    let k_max = cfg.k.clamp(1, 4);
    let lambdas: Vec<Vec<CompleteGraphElement>> =
        (0..=k_max).map(|k| enumerate(Variant::KHat, 1, k, b)).collect::<Result<_>>()?;
    let mut cells: HashMap<(CompleteGraphElement, u32), Vec<CompleteGraphElement>> = HashMap::new();
    r.section(format!("config ∈ A(λ) ⟺ some cell of T_k(λ) contains it, k ≤ {k_max}"), |r| {
        let mut inside = 0u64;
        for _ in 0..cfg.trials {
            let k = rng.gen_range(1..=k_max);
            let n = rng.gen_range(1..=cfg.n.max(1));
            let lambda = lambdas[k][rng.gen_range(0..lambdas[k].len())].clone();
            // small cubes make A(λ) membership common
            let config = Configuration::random(k, n as usize, rng.gen_range(2..=6), &mut rng);
            let key = (lambda.clone(), n);
            if !cells.contains_key(&key) {
                cells.insert(key.clone(), complementary_graphs(&lambda, n, b)?);
            }
            let list = &cells[&key];
            let (agree, witness) = cover_check(&lambda, &config, list)?;
            let witness_ok = match witness {
                Some(mu) => {
                    inside += 1;
                    in_cell(&config, mu)?
                }
                None => true,
            };
            r.record(agree && witness_ok, || json!({"lambda": lambda, "config": config}));
        }
        r.details.push(format!("{inside} sampled configurations lie in A(λ)"));
        Ok(())
    })?;
    Ok(r)
}
