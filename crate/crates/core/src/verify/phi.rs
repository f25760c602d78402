//! `φ: K_{n+1}(k) → K̂_1(k)^op ∫ T_k` as a bijective order isomorphism.

use std::collections::HashSet;

use rand::Rng;
use serde_json::json;

use super::{CheckReport, VerifyConfig};
use crate::error::Result;
use crate::grothendieck::grothendieck_matches_phi;
use crate::kgraph::packed::PackedOrder;
use crate::kgraph::{
    complementary_graphs, edge_count, enumerate, grothendieck_leq, in_complement, is_member, leq, pairs, phi,
    phi_inverse, Arrow, CompleteGraphElement, EdgeState, Variant,
};

type Pair = (CompleteGraphElement, CompleteGraphElement);

/// Largest `|K_{n+1}(k)|` compared pair by pair with the generic orders.
const GENERIC_LIMIT: usize = 2000;

fn arrow_state(c: u32, backward: bool) -> EdgeState {
    if backward {
        EdgeState::Arrow(Arrow::new(1, 0, c))
    } else {
        EdgeState::Arrow(Arrow::new(0, 1, c))
    }
}

fn k_state(e: EdgeState, p: usize) -> usize {
    let a = e.arrow().expect("K has no blank edges");
    2 * (a.color as usize - 1) + usize::from(a.src != p)
}

/// Per-edge state of `(λ₁, μ)`: 0/1 for an arrow of `λ₁` (forward/backward),
/// `2 + 2(c−1) + o` for an arrow of `μ` of color `c`.
fn pair_state(l: EdgeState, m: EdgeState, p: usize) -> usize {
    match (l.arrow(), m.arrow()) {
        (Some(a), None) => usize::from(a.src != p),
        (None, Some(a)) => 2 + 2 * (a.color as usize - 1) + usize::from(a.src != p),
        _ => unreachable!("exactly one of λ₁, μ colors each edge"),
    }
}

fn decode_pair(s: usize) -> Pair {
    let one = |e: EdgeState| CompleteGraphElement::new(2, vec![e]).expect("two vertices");
    if s < 2 {
        (one(arrow_state(1, s == 1)), one(EdgeState::Blank))
    } else {
        let c = (s - 2) / 2 + 1;
        (one(EdgeState::Blank), one(arrow_state(c as u32, (s - 2) % 2 == 1)))
    }
}

/// Compares the order of `K_{n+1}(k)` with the Grothendieck order on the
/// images under `φ` for every ordered pair, using per-edge relation tables
/// computed from the generic orders on two-vertex graphs; `samples` random
/// pairs are re-checked with the generic orders directly.
pub fn phi_packed<R: Rng + ?Sized>(
    n: u32,
    elements: &[CompleteGraphElement],
    images: &[Pair],
    samples: u64,
    rng: &mut R,
) -> Result<CheckReport> {
    let mut r = CheckReport::new("phi-packed");
    let Some(first) = elements.first() else { return Ok(r) };
    let k = first.k();
    let edges = edge_count(k);
    let ka = 2 * (n as usize + 1);
    let k_order = PackedOrder::new(edges, ka, |s, t| {
        arrow_state(s as u32 / 2 + 1, s % 2 == 1).leq(arrow_state(t as u32 / 2 + 1, t % 2 == 1))
    });
    let ga = 2 + 2 * n as usize;
    let mut table = vec![false; ga * ga];
    for s in 0..ga {
        for t in 0..ga {
            table[s * ga + t] = grothendieck_leq(&decode_pair(s), &decode_pair(t), n)?;
        }
    }
    let g_order = PackedOrder::new(edges, ga, |s, t| table[s * ga + t]);
    let ps = pairs(k);
    let kp: Vec<_> = elements
        .iter()
        .map(|g| k_order.pack(&ps.iter().zip(g.edges()).map(|(&(p, _), &e)| k_state(e, p)).collect::<Vec<_>>()))
        .collect();
    let gp: Vec<_> = images
        .iter()
        .map(|(l, m)| {
            let states: Vec<usize> =
                ps.iter().zip(l.edges().iter().zip(m.edges())).map(|(&(p, _), (&a, &b))| pair_state(a, b, p)).collect();
            g_order.pack(&states)
        })
        .collect();
    for _ in 0..samples {
        let (i, j) = (rng.gen_range(0..elements.len()), rng.gen_range(0..elements.len()));
        let generic_k = leq(&elements[i], &elements[j])?;
        let generic_g = grothendieck_leq(&images[i], &images[j], n)?;
        let ok = generic_k == PackedOrder::leq(&kp[i], &kp[j]) && generic_g == PackedOrder::leq(&gp[i], &gp[j]);
        r.record(ok, || json!({"sample": [elements[i], elements[j]]}));
    }
    let single: Option<Vec<((u128, u128), (u128, u128))>> =
        kp.iter().zip(&gp).map(|(a, b)| Some((a.single_word()?, b.single_word()?))).collect();
    let mut agree = 0u64;
    let mut first_failure = None;
    match single {
        Some(words) => {
            for (i, &((ku, _), (gu, _))) in words.iter().enumerate() {
                for &((_, ko), (_, go)) in &words {
                    if (ku & ko == ko) == (gu & go == go) {
                        agree += 1;
                    } else if first_failure.is_none() {
                        first_failure = Some(i);
                    }
                }
            }
        }
        None => {
            for i in 0..kp.len() {
                for j in 0..kp.len() {
                    if PackedOrder::leq(&kp[i], &kp[j]) == PackedOrder::leq(&gp[i], &gp[j]) {
                        agree += 1;
                    } else if first_failure.is_none() {
                        first_failure = Some(i);
                    }
                }
            }
        }
    }
    let pairs_total = (elements.len() as u64).pow(2);
    r.passed += agree;
    r.total += pairs_total;
    if let Some(i) = first_failure {
        r.failures.push(json!({"order_mismatch_at": elements[i]}));
    }
    Ok(r)
}

pub(super) fn phi_check(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut r = CheckReport::new("phi");
    let b = &cfg.budget;
    let mut rng = cfg.rng(3);
    for m in 1..=cfg.n.max(1) {
        let n = m - 1;
        for k in 1..=cfg.k {
            let elements = enumerate(Variant::K, m, k, b)?;
            let mut images = Vec::with_capacity(elements.len());
            r.section(format!("K_{m}({k}) round trips"), |r| {
                for g in &elements {
                    let (l1, l2) = phi(g, n)?;
                    let ok = is_member(&l1, Variant::KHat, 1)
                        && in_complement(&l1, &l2, n)
                        && phi_inverse(&l1, &l2, n)? == *g;
                    r.record(ok, || json!({"g": g, "phi": [l1, l2]}));
                    images.push((l1, l2));
                }
                Ok(())
            })?;
            r.section(format!("K_{m}({k}) bijection"), |r| {
                let mut target = 0;
                for lambda in enumerate(Variant::KHat, 1, k, b)? {
                    target += complementary_graphs(&lambda, n, b)?.len();
                }
                let distinct = images.iter().collect::<HashSet<_>>().len();
                r.record(target == elements.len() && distinct == elements.len(), || {
                    json!({"elements": elements.len(), "grothendieck_objects": target, "distinct_images": distinct})
                });
                Ok(())
            })?;
            r.section(format!("K_{m}({k}) order pairs"), |r| {
                if elements.len() <= GENERIC_LIMIT {
                    for (g, x) in elements.iter().zip(&images) {
                        for (h, y) in elements.iter().zip(&images) {
                            let ok = leq(g, h)? == grothendieck_leq(x, y, n)?;
                            r.record(ok, || json!({"g": g, "h": h}));
                        }
                    }
                } else {
                    let part = phi_packed(n, &elements, &images, 20_000, &mut rng)?;
                    super::laws::absorb(r, part);
                }
                Ok(())
            })?;
            if k <= 3 && m >= 2 {
                r.section(format!("K_{m}({k}) via the Grothendieck construction of T_{k}"), |r| {
                    let ok = grothendieck_matches_phi(k, n, b)?;
                    r.record(ok, || json!({"n": m, "k": k}));
                    Ok(())
                })?;
            }
        }
    }
    Ok(r)
}
