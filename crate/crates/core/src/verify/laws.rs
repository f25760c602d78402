//! Counting fixtures, operad laws and Σ-freeness.

use rand::Rng;
use serde_json::json;

use super::{CheckReport, VerifyConfig};
use crate::budget::Budget;
use crate::error::Result;
use crate::kgraph::{
    enumerate, is_member, is_sigma_free, operad_compose, pairs, random_element, sigma_action, unit, Arrow,
    CompleteGraphElement, EdgeState, Variant,
};
use crate::perm::Permutation;

/// `|variant_n(k)|` by filtering every assignment of edge states, without
/// the pruned search used by [`enumerate`].
pub fn brute_force_count(variant: Variant, n: u32, k: usize) -> u64 {
    let ps = pairs(k);
    let mut states = Vec::new();
    if variant.allows_blank() {
        states.push(None);
    }
    for c in 1..=n {
        states.push(Some((c, false)));
        states.push(Some((c, true)));
    }
    let base = states.len();
    let total = (base as u64).pow(ps.len() as u32);
    let mut count = 0;
    for code in 0..total {
        let mut rest = code;
        let edges = ps
            .iter()
            .map(|&(p, q)| {
                let s = states[(rest % base as u64) as usize];
                rest /= base as u64;
                match s {
                    None => EdgeState::Blank,
                    Some((c, false)) => EdgeState::Arrow(Arrow::new(p, q, c)),
                    Some((c, true)) => EdgeState::Arrow(Arrow::new(q, p, c)),
                }
            })
            .collect();
        let g = CompleteGraphElement::new(k, edges).expect("shape");
        if is_member(&g, variant, n) {
            count += 1;
        }
    }
    count
}

pub(super) fn counting(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("counting");
    let b = &cfg.budget;
    let n_top = cfg.n.max(4);
    let fixture = |r: &mut CheckReport, label: String, variant: Variant, n: u32, k: usize, formula: u64| -> Result<()> {
        let brute = brute_force_count(variant, n, k);
        let listed = enumerate(variant, n, k, b)?.len() as u64;
        r.record(brute == formula && listed == formula, || json!({"case": label, "formula": formula, "brute_force": brute, "enumerated": listed}));
        r.details.push(format!("{label} = {formula}: brute force {brute}, enumerated {listed}"));
        Ok(())
    };
    for k in 1..=5usize {
        fixture(&mut r, format!("|K_1({k})|"), Variant::K, 1, k, (1..=k as u64).product())?;
    }
    for n in 1..=n_top {
        let m = u64::from(n);
        fixture(&mut r, format!("|K_{n}(3)|"), Variant::K, n, 3, 8 * m * m * m - 2 * m)?;
        fixture(&mut r, format!("|K_{n}(2)|"), Variant::K, n, 2, 2 * m)?;
        fixture(&mut r, format!("|K̂_{n}(2)|"), Variant::KHat, n, 2, 2 * m + 1)?;
    }
    Ok(r)
}

/// Visits every tuple in the product of `lists`.
fn for_each_product<'a>(
    lists: &[&'a [CompleteGraphElement]],
    mut f: impl FnMut(&[&'a CompleteGraphElement]) -> Result<()>,
) -> Result<()> {
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(());
    }
    let mut idx = vec![0usize; lists.len()];
    let mut cur: Vec<&CompleteGraphElement> = lists.iter().map(|l| &l[0]).collect();
    loop {
        f(&cur)?;
        let mut i = lists.len();
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                cur[i] = &lists[i][idx[i]];
                break;
            }
            idx[i] = 0;
            cur[i] = &lists[i][0];
        }
    }
}

/// All vectors of positive integers of length `len` with sum at most `max_sum`.
fn positive_vectors(len: usize, max_sum: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=max_sum.saturating_sub(len - 1) {
        for mut rest in positive_vectors(len - 1, max_sum - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn adjacent_transpositions(k: usize) -> Vec<Permutation> {
    (1..k).map(|i| Permutation::cycle(k, &[i, i + 1]).expect("valid")).collect()
}

fn graphs(x: &[&CompleteGraphElement]) -> Vec<CompleteGraphElement> {
    x.iter().map(|&g| g.clone()).collect()
}

/// `γ(σ·g; h_{σ⁻¹(1)}, …) = σ⟨m⟩·γ(g; h)`.
fn sigma_law(sigma: &Permutation, g: &CompleteGraphElement, h: &[CompleteGraphElement], gh: &CompleteGraphElement) -> Result<bool> {
    let inv = sigma.inverse();
    let parts: Vec<CompleteGraphElement> = (0..h.len()).map(|j| h[inv.apply(j)].clone()).collect();
    let sizes: Vec<usize> = h.iter().map(|x| x.k()).collect();
    let lhs = operad_compose(&sigma_action(sigma, g)?, &parts)?;
    Ok(lhs == sigma_action(&sigma.block(&sizes)?, gh)?)
}

/// `γ(g; τ_1·h_1, …) = (τ_1 ⊕ … ⊕ τ_k)·γ(g; h)`.
fn tau_law(taus: &[Permutation], g: &CompleteGraphElement, h: &[CompleteGraphElement], gh: &CompleteGraphElement) -> Result<bool> {
    let parts = h.iter().zip(taus).map(|(x, t)| sigma_action(t, x)).collect::<Result<Vec<_>>>()?;
    Ok(operad_compose(g, &parts)? == sigma_action(&Permutation::direct_sum(taus), gh)?)
}

/// Exhaustive operad laws in `K_n` for every composite of total arity at
/// most `max_arity` built from parts of positive arity. Equivariance is
/// checked for all of `Σ` when the total arity is at most 4, and for the
/// adjacent transpositions (which generate `Σ`) above that.
pub fn operad_laws_exhaustive(n: u32, max_arity: usize, budget: &Budget) -> Result<CheckReport> {
    let mut r = CheckReport::new("operad-laws");
    let pool: Vec<Vec<CompleteGraphElement>> =
        (0..=max_arity).map(|a| enumerate(Variant::K, n, a, budget)).collect::<Result<_>>()?;
    let u = unit();
    r.section(format!("K_{n} unit, arity ≤ {max_arity}"), |r| {
        for list in &pool[1..] {
            for g in list {
                let left = operad_compose(&u, std::slice::from_ref(g))?;
                let right = operad_compose(g, &vec![u.clone(); g.k()])?;
                r.record(&left == g && &right == g, || json!({"law": "unit", "g": g}));
            }
        }
        Ok(())
    })?;
    r.section(format!("K_{n} associativity, arity ≤ {max_arity}"), |r| {
        for k in 1..=max_arity {
            for m in positive_vectors(k, max_arity) {
                let total_m: usize = m.iter().sum();
                let mut outer: Vec<&[CompleteGraphElement]> = vec![&pool[k]];
                outer.extend(m.iter().map(|&a| pool[a].as_slice()));
                for p in positive_vectors(total_m, max_arity) {
                    let inner: Vec<&[CompleteGraphElement]> = p.iter().map(|&a| pool[a].as_slice()).collect();
                    for_each_product(&outer, |gh| {
                        let (g, h) = (gh[0], graphs(&gh[1..]));
                        let composed = operad_compose(g, &h)?;
                        for_each_product(&inner, |l| {
                            let l = graphs(l);
                            let lhs = operad_compose(&composed, &l)?;
                            let mut parts = Vec::with_capacity(k);
                            let mut at = 0;
                            for hi in &h {
                                parts.push(operad_compose(hi, &l[at..at + hi.k()])?);
                                at += hi.k();
                            }
                            let rhs = operad_compose(g, &parts)?;
                            r.record(lhs == rhs, || json!({"law": "associativity", "g": g, "h": h, "l": l}));
                            Ok(())
                        })
                    })?;
                }
            }
        }
        Ok(())
    })?;
    r.section(format!("K_{n} equivariance, arity ≤ {max_arity}"), |r| {
        for k in 1..=max_arity {
            for m in positive_vectors(k, max_arity) {
                let total: usize = m.iter().sum();
                let full = total <= 4;
                let sigmas: Vec<Permutation> = if full { Permutation::all(k) } else { adjacent_transpositions(k) };
                let tau_sets: Vec<Vec<Permutation>> = if full {
                    tuples(&m.iter().map(|&a| Permutation::all(a)).collect::<Vec<_>>())
                } else {
                    let mut out = Vec::new();
                    for (i, &a) in m.iter().enumerate() {
                        for t in adjacent_transpositions(a) {
                            let mut tuple: Vec<Permutation> = m.iter().map(|&b| Permutation::identity(b)).collect();
                            tuple[i] = t;
                            out.push(tuple);
                        }
                    }
                    out
                };
                let mut lists: Vec<&[CompleteGraphElement]> = vec![&pool[k]];
                lists.extend(m.iter().map(|&a| pool[a].as_slice()));
                for_each_product(&lists, |gh| {
                    let (g, h) = (gh[0], graphs(&gh[1..]));
                    let composed = operad_compose(g, &h)?;
                    for s in &sigmas {
                        let ok = sigma_law(s, g, &h, &composed)?;
                        r.record(ok, || json!({"law": "sigma", "sigma": s, "g": g, "h": h}));
                    }
                    for t in &tau_sets {
                        let ok = tau_law(t, g, &h, &composed)?;
                        r.record(ok, || json!({"law": "tau", "tau": t, "g": g, "h": h}));
                    }
                    Ok(())
                })?;
            }
        }
        Ok(())
    })?;
    Ok(r)
}

fn tuples(choices: &[Vec<Permutation>]) -> Vec<Vec<Permutation>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for x in c {
                let mut t = prefix.clone();
                t.push(x.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Randomized operad laws on composites of total arity in
/// `above + 1 ..= above + 4`, for all three variants with `n ≤ 3`, nullary
/// parts allowed. Composites must stay in the variant.
pub fn operad_laws_random<R: Rng + ?Sized>(trials: u64, above: usize, rng: &mut R) -> Result<CheckReport> {
    let mut r = CheckReport::new("operad-laws-random");
    let variants = [Variant::K, Variant::KBerger, Variant::KHat];
    let mut done = 0;
    while done < trials {
        let variant = variants[rng.gen_range(0..3)];
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=4);
        let m: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=3)).collect();
        let total_m: usize = m.iter().sum();
        let p: Vec<usize> = (0..total_m).map(|_| rng.gen_range(0..=3)).collect();
        let total: usize = p.iter().sum();
        if total <= above || total > above + 4 {
            continue;
        }
        done += 1;
        let g = random_element(variant, n, k, rng);
        let h: Vec<CompleteGraphElement> = m.iter().map(|&a| random_element(variant, n, a, rng)).collect();
        let l: Vec<CompleteGraphElement> = p.iter().map(|&a| random_element(variant, n, a, rng)).collect();
        let gh = operad_compose(&g, &h)?;
        let lhs = operad_compose(&gh, &l)?;
        let mut parts = Vec::with_capacity(k);
        let mut at = 0;
        for hi in &h {
            parts.push(operad_compose(hi, &l[at..at + hi.k()])?);
            at += hi.k();
        }
        let rhs = operad_compose(&g, &parts)?;
        let closed = is_member(&gh, variant, n) && is_member(&lhs, variant, n);
        let unit_ok = operad_compose(&lhs, &vec![unit(); lhs.k()])? == lhs && operad_compose(&unit(), std::slice::from_ref(&lhs))? == lhs;
        let sigma = Permutation::random(k, rng);
        let taus: Vec<Permutation> = m.iter().map(|&a| Permutation::random(a, rng)).collect();
        let ok = lhs == rhs && closed && unit_ok && sigma_law(&sigma, &g, &h, &gh)? && tau_law(&taus, &g, &h, &gh)?;
        r.record(ok, || json!({"variant": variant.name(), "n": n, "g": g, "h": h, "l": l, "sigma": sigma, "tau": taus}));
    }
    r.details.push(format!("random composites of arity {}..={}: {}/{}", above + 1, above + 4, r.passed, r.total));
    Ok(r)
}

pub(super) fn operad_laws(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("operad-laws");
    for n in 1..=cfg.n {
        let part = operad_laws_exhaustive(n, cfg.k, &cfg.budget)?;
        absorb(&mut r, part);
    }
    let part = operad_laws_random(cfg.trials, cfg.k, &mut cfg.rng(1))?;
    absorb(&mut r, part);
    Ok(r)
}

pub(super) fn absorb(r: &mut CheckReport, part: CheckReport) {
    r.passed += part.passed;
    r.total += part.total;
    r.details.extend(part.details);
    for f in part.failures {
        if r.failures.len() < super::MAX_FAILURES {
            r.failures.push(f);
        }
    }
}

pub(super) fn sigma_free(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("sigma-free");
    let b = &cfg.budget;
    for n in 1..=cfg.n.max(1) {
        for k in 0..=cfg.k {
            for variant in [Variant::K, Variant::KBerger] {
                let free = is_sigma_free(variant, n, k, b)?;
                r.record(free, || json!({"variant": variant.name(), "n": n, "k": k}));
                r.details.push(format!("{}_{n}({k}) free: {free}", variant.name()));
            }
            // the all-blank graph is fixed by every permutation
            if k >= 2 {
                let free = is_sigma_free(Variant::KHat, n, k, b)?;
                r.record(!free, || json!({"variant": "Khat", "n": n, "k": k, "expected": "not free"}));
            }
        }
    }
    Ok(r)
}
