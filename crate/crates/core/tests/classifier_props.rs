use std::collections::BTreeMap;

use primegraph::classifier::{
    classify, necessary_edge_removal_check, Condition, Decision, Family, Verdict, Witness,
};
use primegraph::graph::{chromatic_number_oracle, k_color};
use primegraph::{Graph, Label};
use proptest::prelude::*;

fn tokens(n: usize) -> Vec<Label> {
    (0..n).map(|i| Label::token(&format!("v{i}")).unwrap()).collect()
}

/// Every labeled graph on v0..v{n-1}.
fn catalog(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(|n| {
        let labels = tokens(n);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        (0u32..1 << pairs.len()).map(move |mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &(i, j))| (labels[i].clone(), labels[j].clone()));
            Graph::from_parts(labels.iter().cloned(), edges).unwrap()
        })
    })
}

fn decisions(gamma: &Graph) -> BTreeMap<Family, Decision> {
    Family::ALL.into_iter().map(|f| (f, classify(gamma, f).decision)).collect()
}

#[test]
fn family_equalities_on_small_catalog() {
    let triangle_free = [Family::Solvable, Family::U33, Family::U42, Family::Psl33, Family::Multi];
    let mut n = 0;
    for gamma in catalog(6) {
        let d = decisions(&gamma);
        let first = d[&triangle_free[0]];
        assert!(triangle_free.iter().all(|f| d[f] == first), "{}", gamma.to_json());
        assert_eq!(d[&Family::A6], d[&Family::Psl28], "{}", gamma.to_json());
        assert_eq!(d[&Family::Psl27], d[&Family::Psl217], "{}", gamma.to_json());
        n += 1;
    }
    assert_eq!(n, 1 + 1 + 2 + 8 + 64 + 1024 + 32768);
}

#[test]
fn every_verdict_rechecks_on_five_vertices() {
    for gamma in catalog(5) {
        for f in Family::ALL {
            let v = classify(&gamma, f);
            v.check(&gamma).unwrap_or_else(|e| panic!("{f} on {}: {e}", gamma.to_json()));
        }
    }
}

#[test]
fn foreign_triangle_is_rejected_everywhere() {
    let gbar = Graph::from_parts([2u64, 3, 11], [(2u64, 3u64), (2, 11), (3, 11)]).unwrap();
    let gamma = gbar.complement();
    for f in Family::ALL {
        let v = classify(&gamma, f);
        assert!(!v.accepted(), "{f}");
        v.check(&gamma).unwrap();
    }
}

#[test]
fn complete_prime_graph_is_accepted_everywhere() {
    let gamma = Graph::with_vertices(tokens(5)).complement();
    assert_eq!(gamma.edge_count(), 10);
    for f in Family::ALL {
        assert!(classify(&gamma, f).accepted(), "{f}");
    }
}

#[test]
fn disjoint_second_triangle_fails_edge_removal() {
    let gbar = Graph::from_parts(
        [2u64, 3, 7, 5, 11, 13],
        [(2u64, 7u64), (2, 3), (3, 7), (5, 11), (5, 13), (11, 13)],
    )
    .unwrap();
    let v = necessary_edge_removal_check(&gbar.complement(), Family::Psl27).unwrap().unwrap();
    assert!(matches!(v.witness, Some(Witness::Triangle { .. })));
    v.check(&gbar.complement()).unwrap();
    // Both triangles through 2-7 vanish with the edge.
    let twin = Graph::from_parts([2u64, 3, 7, 5], [(2u64, 7u64), (2, 3), (3, 7), (2, 5), (5, 7)]).unwrap();
    assert!(necessary_edge_removal_check(&twin.complement(), Family::Psl27).unwrap().unwrap().accepted());
    let a6 = Graph::from_parts([2u64, 3, 5], [(2u64, 3u64), (3, 5), (2, 5)]).unwrap();
    assert!(necessary_edge_removal_check(&a6.complement(), Family::A6).unwrap().unwrap().accepted());
    assert!(necessary_edge_removal_check(&Graph::with_vertices(tokens(2)), Family::A6).is_err());
}

fn arb_gbar(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let labels = tokens(n);
            let mut g = Graph::with_vertices(labels.iter().cloned());
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        g.add_edge(labels[i].clone(), labels[j].clone()).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// Complement with a triangle on v0, v1, v2 that only v2 may leave.
fn arb_hub_gbar(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_gbar(max_n).prop_map(|mut g| {
        let labels: Vec<Label> = g.vertices().cloned().collect();
        if labels.len() >= 3 {
            for v in &labels[3..] {
                g.remove_edge(&labels[0], v);
                g.remove_edge(&labels[1], v);
            }
            g.add_edge(labels[0].clone(), labels[1].clone()).unwrap();
            g.add_edge(labels[0].clone(), labels[2].clone()).unwrap();
            g.add_edge(labels[1].clone(), labels[2].clone()).unwrap();
        }
        g
    })
}

/// Prime labels matching an accepted hub-family certificate.
fn to_primes(gamma: &Graph, v: &Verdict) -> Graph {
    let mut map = BTreeMap::new();
    if let Some(t) = v.certificate.as_ref().and_then(|c| c.triangle.as_ref()) {
        for (l, p) in &t.primes {
            map.insert(l.clone(), Label::Prime(*p));
        }
    }
    let mut fresh = [11u64, 13, 19, 23, 29, 31, 37, 41, 43].into_iter();
    for l in gamma.vertices() {
        if !map.contains_key(l) {
            map.insert(l.clone(), Label::Prime(fresh.next().unwrap()));
        }
    }
    gamma.relabel(&map).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn verdicts_recheck(gbar in arb_hub_gbar(9)) {
        let gamma = gbar.complement();
        for f in Family::ALL {
            let v = classify(&gamma, f);
            prop_assert!(v.check(&gamma).is_ok(), "{f}: {:?}", v.check(&gamma));
        }
    }

    #[test]
    fn psl27_implies_edge_removal(gbar in arb_hub_gbar(9)) {
        let gamma = gbar.complement();
        let v = classify(&gamma, Family::Psl27);
        if v.accepted() {
            let labeled = to_primes(&gamma, &v);
            prop_assert!(classify(&labeled, Family::Psl27).accepted());
            let e = necessary_edge_removal_check(&labeled, Family::Psl27).unwrap().unwrap();
            prop_assert!(e.accepted());
            prop_assert!(e.check(&labeled).is_ok());
        }
    }

    #[test]
    fn multi_rejection_survives_added_edges(
        gbar in arb_gbar(8),
        extra in proptest::collection::vec((0usize..8, 0usize..8), 1..6),
    ) {
        let gamma = gbar.complement();
        if !classify(&gamma, Family::Multi).accepted() {
            let labels: Vec<Label> = gbar.vertices().cloned().collect();
            let mut bigger = gbar.clone();
            for (i, j) in extra {
                let (i, j) = (i % labels.len(), j % labels.len());
                if i != j {
                    bigger.add_edge(labels[i].clone(), labels[j].clone()).unwrap();
                }
            }
            prop_assert!(!classify(&bigger.complement(), Family::Multi).accepted());
        }
    }

    #[test]
    fn three_coloring_matches_oracle(gbar in arb_gbar(8)) {
        let col = k_color(&gbar, 3);
        prop_assert_eq!(col.is_some(), chromatic_number_oracle(&gbar).unwrap() <= 3);
        if let Some(c) = col {
            prop_assert!(c.is_proper(&gbar));
        }
    }

    #[test]
    fn hub_families_agree_and_certify_ido(gbar in arb_hub_gbar(8)) {
        let gamma = gbar.complement();
        let a = classify(&gamma, Family::Psl27);
        let b = classify(&gamma, Family::Psl217);
        prop_assert_eq!(a.decision, b.decision);
        if let Some(cert) = a.certificate {
            if let Some(t) = cert.triangle {
                prop_assert_eq!(cert.coloring.color(&t.c), Some(1));
                for h in &t.hub_neighbors {
                    prop_assert_eq!(cert.coloring.color(h), Some(2));
                }
            }
        }
        prop_assert_eq!(Family::Psl27.condition(), Condition::Hub);
    }
}
