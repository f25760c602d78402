use operadlab_core::cubes::{cell_system, compose_cubes, in_cell, is_feasible, less_i, minimal_cell, CellMode};
use operadlab_core::kgraph::{
    is_member, is_monochrome_acyclic, leq, operad_compose, pairs, phi, phi_inverse, random_element, sigma_action,
    Arrow, EdgeState, Variant,
};
use operadlab_core::tensor::{canonical_form, equivalent, realize, LabelledGraph, RawRep};
use operadlab_core::{Budget, CompleteGraphElement, Configuration, LittleCube, Permutation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![Just(Variant::K), Just(Variant::KBerger), Just(Variant::KHat)]
}

/// Any coloured tournament, monochrome cycles included.
fn tournament(k: usize, n: u32) -> impl Strategy<Value = CompleteGraphElement> {
    prop::collection::vec((any::<bool>(), 1..=n), pairs(k).len()).prop_map(move |choices| {
        let arrows: Vec<(usize, usize, u32)> = pairs(k)
            .into_iter()
            .zip(choices)
            .map(|((p, q), (forward, c))| if forward { (p + 1, q + 1, c) } else { (q + 1, p + 1, c) })
            .collect();
        CompleteGraphElement::from_arrows(k, &arrows).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn order_is_a_partial_order(v in variant(), n in 1u32..=3, k in 1usize..=4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let [a, b, c] = [0; 3].map(|_| random_element(v, n, k, &mut r));
        prop_assert!(leq(&a, &a).unwrap());
        if leq(&a, &b).unwrap() && leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if leq(&a, &b).unwrap() && leq(&b, &c).unwrap() {
            prop_assert!(leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn edge_order_transitive(states in prop::collection::vec(0usize..9, 3)) {
        let all: Vec<EdgeState> = std::iter::once(EdgeState::Blank)
            .chain((1..=4).flat_map(|c| [Arrow::new(0, 1, c), Arrow::new(1, 0, c)]).map(EdgeState::Arrow))
            .collect();
        let (a, b, c) = (all[states[0]], all[states[1]], all[states[2]]);
        if a.leq(b) && b.leq(c) {
            prop_assert!(a.leq(c));
        }
    }

    #[test]
    fn sigma_acts_by_order_automorphisms(v in variant(), n in 1u32..=3, k in 1usize..=5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_element(v, n, k, &mut r);
        let b = random_element(v, n, k, &mut r);
        let s = Permutation::random(k, &mut r);
        let t = Permutation::random(k, &mut r);
        let sa = sigma_action(&s, &a).unwrap();
        prop_assert!(is_member(&sa, v, n));
        prop_assert_eq!(leq(&a, &b).unwrap(), leq(&sa, &sigma_action(&s, &b).unwrap()).unwrap());
        prop_assert_eq!(sigma_action(&s.inverse(), &sa).unwrap(), a.clone());
        let st = sigma_action(&s, &sigma_action(&t, &a).unwrap()).unwrap();
        prop_assert_eq!(st, sigma_action(&s.compose(&t).unwrap(), &a).unwrap());
    }

    #[test]
    fn composition_is_monotone(n in 1u32..=2, arities in prop::collection::vec(1usize..=2, 1..=3), seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = arities.len();
        let g = random_element(Variant::K, n, k, &mut r);
        let h = random_element(Variant::K, n, k, &mut r);
        let parts: Vec<_> = arities.iter().map(|&a| random_element(Variant::K, n, a, &mut r)).collect();
        let comp = operad_compose(&g, &parts).unwrap();
        prop_assert!(is_member(&comp, Variant::K, n));
        if leq(&g, &h).unwrap() {
            prop_assert!(leq(&comp, &operad_compose(&h, &parts).unwrap()).unwrap());
        }
    }

    #[test]
    fn phi_round_trips(n in 1u32..=3, k in 1usize..=5, seed in any::<u64>()) {
        let lambda = random_element(Variant::K, n + 1, k, &mut rng(seed));
        let (l1, l2) = phi(&lambda, n).unwrap();
        prop_assert_eq!(phi_inverse(&l1, &l2, n).unwrap(), lambda);
    }

    #[test]
    fn cube_order_properties(n in 1usize..=3, seed in any::<u64>()) {
        let mut r = rng(seed);
        let [c1, c2, c3] = [0; 3].map(|_| LittleCube::random(n, 12, &mut r));
        for i in 1..=n {
            prop_assert!(!(less_i(&c1, &c2, i).unwrap() && less_i(&c2, &c1, i).unwrap()));
            if less_i(&c1, &c2, i).unwrap() && less_i(&c2, &c3, i).unwrap() {
                prop_assert!(less_i(&c1, &c3, i).unwrap());
            }
        }
        let inner = compose_cubes(&c1, &c2).unwrap();
        for j in 0..n {
            prop_assert!(c1.lo()[j] <= inner.lo()[j] && inner.hi()[j] <= c1.hi()[j]);
        }
    }

    #[test]
    fn minimal_cells_contain_their_configuration(n in 1usize..=3, k in 1usize..=4, seed in any::<u64>()) {
        let config = Configuration::random(k, n, 8, &mut rng(seed));
        prop_assume!(config.pairwise_disjoint());
        let mu = minimal_cell(&config, &CompleteGraphElement::blank(k), n as u32).unwrap();
        prop_assert!(is_member(&mu, Variant::K, n as u32));
        prop_assert!(in_cell(&config, &mu).unwrap());
        for a in mu.arrows() {
            prop_assert!(less_i(&config.cubes()[a.src], &config.cubes()[a.dst], a.color as usize).unwrap());
        }
    }

    #[test]
    fn canonical_forms_decide_equivalence(k in 1usize..=5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = LabelledGraph::random(k, 2, 6, &mut r);
        let raw = realize(&g);
        prop_assert_eq!(canonical_form(&raw), g.reduce());
        let other = RawRep::new(Permutation::random(k, &mut r), raw.cubes().clone());
        if let Ok(other) = other {
            prop_assert_eq!(equivalent(&raw, &other).unwrap(), canonical_form(&other) == canonical_form(&raw));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_cells_feasible_iff_monochrome_acyclic(g in (1usize..=4, 1u32..=2).prop_flat_map(|(k, n)| tournament(k, n))) {
        let n = g.max_color().max(1) as usize;
        let sys = cell_system(&g, n, CellMode::Closed).unwrap();
        prop_assert_eq!(is_feasible(&sys, &Budget::default()).unwrap(), is_monochrome_acyclic(&g));
    }
}
