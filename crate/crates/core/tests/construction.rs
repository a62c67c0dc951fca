use std::collections::BTreeSet;

use primegraph::arith::is_prime;
use primegraph::classifier::{classify, Family};
use primegraph::constructor::{
    construct, dirichlet_prime, eval_prime_graph, Action, GroupRecipe, Obligation,
};
use primegraph::group::{frobenius_cyclic, ENUMERATION_CAP};
use primegraph::realize::realize;
use primegraph::{Error, Graph, Label};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn module(actor: GroupRecipe, r: u64, d: u32, profile: &[(u64, Action)]) -> GroupRecipe {
    let obligations = profile
        .iter()
        .filter(|(_, a)| *a == Action::Fpf)
        .map(|(s, _)| Obligation::FrobeniusCyclic { prime: *s })
        .collect();
    GroupRecipe::ModuleExt {
        actor: Box::new(actor),
        module_prime: r,
        module_rank: d,
        action_profile: profile.iter().copied().collect(),
        obligations,
    }
}

fn naive_dirichlet(m: u64, avoid: &[u64]) -> u64 {
    (2..).find(|&p| (p - 1) % m == 0 && !avoid.contains(&p) && (2..p).all(|d| p % d != 0)).unwrap()
}

#[test]
fn dirichlet_matches_naive_search() {
    for m in 1..60 {
        for avoid in [vec![], vec![2, 3], vec![naive_dirichlet(m, &[])]] {
            let set: BTreeSet<u64> = avoid.iter().copied().collect();
            assert_eq!(dirichlet_prime(m, &set).unwrap(), naive_dirichlet(m, &avoid), "m = {m}");
        }
    }
}

#[test]
fn frobenius_layer_matches_enumeration() {
    let recipe = module(GroupRecipe::cyclic(5), 11, 1, &[(5, Action::Fpf)]);
    let by_recipe = eval_prime_graph(&recipe).unwrap();
    let by_group = frobenius_cyclic(11, 5).unwrap().prime_graph().unwrap();
    assert_eq!(by_recipe, by_group);

    let f21 = realize(&module(GroupRecipe::cyclic(3), 7, 1, &[(3, Action::Fpf)]), 1000).unwrap();
    let s = f21.stats(1000).unwrap();
    assert_eq!((s.order, s.spectrum), (21, [1, 3, 7].into()));
}

#[test]
fn figure5_recipe_realizes_with_order_840() {
    let recipe = GroupRecipe::product(GroupRecipe::k3("PSL(2,7)"), GroupRecipe::cyclic(5));
    let real = realize(&recipe, ENUMERATION_CAP).unwrap();
    let s = real.stats(ENUMERATION_CAP).unwrap();
    assert_eq!(s.order, 840);
    assert_eq!(real.prime_graph(ENUMERATION_CAP).unwrap(), eval_prime_graph(&recipe).unwrap());
}

#[test]
fn three_layer_path_has_only_the_outer_product() {
    // 2 -> 3 -> 7: C3 acts on Z/7, C2 inverts C3 and permutes two copies.
    let k = module(GroupRecipe::cyclic(2), 3, 1, &[(2, Action::Fpf)]);
    let g = module(k, 7, 2, &[(2, Action::Fixes), (3, Action::Fpf)]);
    g.validate().unwrap();
    let real = realize(&g, ENUMERATION_CAP).unwrap();
    let s = real.stats(ENUMERATION_CAP).unwrap();
    assert_eq!(s.order, 7 * 7 * 3 * 2);
    assert!(s.spectrum.contains(&14));
    assert!(!s.spectrum.contains(&6));
    assert!(!s.spectrum.contains(&21));
    assert_eq!(real.prime_graph(ENUMERATION_CAP).unwrap(), eval_prime_graph(&g).unwrap());
}

#[test]
fn wrong_profile_is_caught_by_realization() {
    // Claiming the 3-part is FPF on an induced module where it is not a
    // cyclic normal subgroup: the 2-part is not a Hall subgroup here.
    let g = module(GroupRecipe::cyclic(3), 7, 1, &[(3, Action::Fixes)]);
    assert!(matches!(realize(&g, 1000), Err(Error::Capability(_))));
}

#[test]
fn recipe_json_round_trip() {
    let gbar = Graph::from_parts(["a", "b", "c", "v", "w"], [("a", "b"), ("a", "c"), ("b", "c"), ("c", "v"), ("v", "w")])
        .unwrap();
    let (recipe, _) = construct(&gbar.complement(), Family::Psl27).unwrap();
    let back = GroupRecipe::from_json(&recipe.to_json()).unwrap();
    assert_eq!(back, recipe);
    assert!(GroupRecipe::from_json(r#"{"type":"Cyclic","p":4}"#).is_err());
}

#[test]
fn psl217_hub_is_recipe_only() {
    let gbar = Graph::from_parts(["a", "b", "c", "v"], [("a", "b"), ("a", "c"), ("b", "c"), ("c", "v")]).unwrap();
    let (recipe, assignment) = construct(&gbar.complement(), Family::Psl217).unwrap();
    let r = assignment.primes[&Label::from("v")];
    assert_eq!((r - 1) % 2448, 0);
    let log = recipe.discharge_obligations().unwrap();
    assert!(log.iter().any(|l| l.contains("16a")));
    assert!(matches!(realize(&recipe, ENUMERATION_CAP), Err(Error::Capability(_))));
}

#[test]
fn rejected_graph_is_a_contract_error() {
    let gbar = primegraph::fixture("groetzsch").unwrap();
    let err = construct(&gbar.complement(), Family::Solvable).unwrap_err();
    assert!(matches!(err, Error::Contract(ref m) if m.contains("not 3-colorable")));
}

#[test]
fn induced_modules_are_realized() {
    // FIXES needs three layers, so total orders are large; only the actor
    // is enumerated.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut realized = 0;
    for _ in 0..4000 {
        let n = rng.gen_range(3..=6);
        let labels: Vec<Label> = (0..n).map(|i| Label::token(&format!("x{i}")).unwrap()).collect();
        let mut gbar = Graph::with_vertices(labels.iter().cloned());
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.4) {
                    gbar.add_edge(labels[i].clone(), labels[j].clone()).unwrap();
                }
            }
        }
        let gamma = gbar.complement();
        if !classify(&gamma, Family::Solvable).accepted() {
            continue;
        }
        let (recipe, _) = construct(&gamma, Family::Solvable).unwrap();
        if !recipe.to_json().contains("FIXES") {
            continue;
        }
        let real = match realize(&recipe, 1_000_000) {
            Ok(real) => real,
            Err(Error::SizeCap { .. }) => continue,
            Err(e) => panic!("{e} on {}", gamma.to_json()),
        };
        assert_eq!(real.prime_graph(1_000_000).unwrap(), eval_prime_graph(&recipe).unwrap());
        realized += 1;
        if realized == 5 {
            break;
        }
    }
    assert_eq!(realized, 5, "only {realized} small recipes with FIXES");
}

fn arb_gbar() -> impl Strategy<Value = Graph> {
    (1usize..=7).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let labels: Vec<Label> = (0..n).map(|i| Label::token(&format!("v{i}")).unwrap()).collect();
            let mut g = Graph::with_vertices(labels.iter().cloned());
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] || (i <= 1 && j == 2) {
                        g.add_edge(labels[i].clone(), labels[j].clone()).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn module_primes_avoid_actor(r: &GroupRecipe) -> bool {
    match r {
        GroupRecipe::Cyclic { .. } | GroupRecipe::K3Atom { .. } => true,
        GroupRecipe::Product { left, right } => module_primes_avoid_actor(left) && module_primes_avoid_actor(right),
        GroupRecipe::ModuleExt { actor, module_prime, .. } => {
            !actor.primes().unwrap().contains(module_prime) && module_primes_avoid_actor(actor)
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn construction_invariants(gbar in arb_gbar(), fi in 0usize..9) {
        let family = Family::ALL[fi];
        let gamma = gbar.complement();
        prop_assume!(classify(&gamma, family).accepted());
        let (recipe, assignment) = construct(&gamma, family).unwrap();
        prop_assert_eq!(eval_prime_graph(&recipe).unwrap(), assignment.apply(&gamma).unwrap());
        prop_assert!(assignment.check().is_ok());
        let ps: Vec<u64> = assignment.primes.values().copied().collect();
        prop_assert!(ps.iter().all(|&p| is_prime(p)));
        prop_assert_eq!(ps.iter().collect::<BTreeSet<_>>().len(), ps.len());
        let triple: BTreeSet<u64> = family.triple().into_iter().flatten().collect();
        let triangle: BTreeSet<Label> = classify(&gamma, family)
            .certificate
            .and_then(|c| c.triangle)
            .map(|t| t.primes.keys().cloned().collect())
            .unwrap_or_default();
        for (v, p) in &assignment.primes {
            if !triangle.contains(v) {
                prop_assert!(!triple.contains(p), "{v} got {p}");
            }
        }
        prop_assert!(module_primes_avoid_actor(&recipe));
        prop_assert!(recipe.discharge_obligations().is_ok());
    }
}
