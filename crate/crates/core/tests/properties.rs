mod common;

use common::{arb_graph, multipartite, Mat};
use kfree_core::enumeration::{EnumConstraints, Enumerator};
use kfree_core::graph::{complete_multipartite, PartSizes};
use kfree_core::properties::{
    decide, find_hamiltonian_cycle, find_hamiltonian_path, has_property, is_hamiltonian_cycle, is_hamiltonian_path,
    multipartite_shortcuts, Decision,
};
use kfree_core::{Graph, PropertyKind};
use proptest::prelude::*;

use PropertyKind::*;

fn oracle(m: &Mat, p: PropertyKind) -> bool {
    match p {
        Traceable => m.traceable(),
        Hamiltonian => m.hamiltonian(),
        HamiltonianConnected => m.hamiltonian_connected(),
        KPathHamiltonian(k) => m.k_path_hamiltonian(k),
        KHamiltonian(k) => m.k_hamiltonian(k),
        ChordedPancyclic => m.chorded_pancyclic(),
    }
}

fn properties_for(n: usize) -> Vec<PropertyKind> {
    let mut ps = vec![Traceable];
    if n >= 2 {
        ps.push(HamiltonianConnected);
        ps.extend((0..=2.min(n - 2)).map(KPathHamiltonian));
    }
    if n >= 3 {
        ps.push(Hamiltonian);
        ps.extend((0..=2.min(n - 3)).map(KHamiltonian));
    }
    if n >= 4 {
        ps.push(ChordedPancyclic);
    }
    ps
}

fn differential(n: usize) {
    for g in Enumerator::new(EnumConstraints::all(n)).unwrap().collect() {
        let m = Mat::of(&g);
        for p in properties_for(n) {
            assert_eq!(
                has_property(&g, p).unwrap(),
                oracle(&m, p),
                "{p} on {}",
                kfree_core::graph6::encode(&g)
            );
        }
    }
}

#[test]
fn deciders_agree_with_brute_force_up_to_six_vertices() {
    for n in 1..=6 {
        differential(n);
    }
}

#[test]
fn deciders_agree_with_brute_force_on_seven_vertices() {
    differential(7);
}

#[test]
fn witnesses_are_valid() {
    for g in Enumerator::new(EnumConstraints::all(7)).unwrap().collect() {
        for p in [Traceable, Hamiltonian] {
            match decide(&g, p).unwrap() {
                Decision::Holds(w) => {
                    let ok = if p == Traceable {
                        is_hamiltonian_path(&g, &w.vertices)
                    } else {
                        is_hamiltonian_cycle(&g, &w.vertices)
                    };
                    assert!(ok, "{p} witness {:?}", w.vertices);
                }
                Decision::Fails(_) => assert!(!has_property(&g, p).unwrap()),
            }
        }
        if let Some(w) = find_hamiltonian_cycle(&g) {
            assert!(is_hamiltonian_cycle(&g, &w.vertices));
        }
        if let Some(w) = find_hamiltonian_path(&g) {
            assert!(is_hamiltonian_path(&g, &w.vertices));
        }
    }
}

/// Part-size lists with at most `max_parts` parts and total at most `max_n`.
fn part_lists(max_n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cap: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if parts == 0 {
            return;
        }
        for s in (1..=cap.min(left)).rev() {
            cur.push(s);
            go(left - s, s, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_n, max_n, max_parts, &mut Vec::new(), &mut out);
    out
}

#[test]
fn multipartite_shortcuts_agree_with_search() {
    for sizes in part_lists(12, 6) {
        let parts = PartSizes::new(sizes.clone()).unwrap();
        let g = complete_multipartite(&parts).unwrap();
        let s = multipartite_shortcuts(&parts);
        assert_eq!(s.hamiltonian, has_property(&g, Hamiltonian).unwrap(), "{sizes:?}");
        assert_eq!(s.traceable, has_property(&g, Traceable).unwrap(), "{sizes:?}");
        if g.order() <= 7 {
            let m = multipartite(&sizes);
            assert_eq!(s.hamiltonian, m.hamiltonian(), "{sizes:?}");
            assert_eq!(s.traceable, m.traceable(), "{sizes:?}");
        }
    }
}

#[test]
fn small_order_conventions() {
    let k1 = Graph::complete(1).unwrap();
    let k2 = Graph::complete(2).unwrap();
    assert!(has_property(&k1, Traceable).unwrap());
    assert!(has_property(&k2, Traceable).unwrap());
    assert!(!has_property(&k2, Hamiltonian).unwrap());
    assert!(has_property(&k2, HamiltonianConnected).unwrap());
    assert!(has_property(&Graph::complete(4).unwrap(), ChordedPancyclic).unwrap());
    assert!(has_property(&k1, KHamiltonian(0)).is_err());
    assert!(has_property(&Graph::complete(3).unwrap(), ChordedPancyclic).is_err());
    assert!(has_property(&Graph::complete(5).unwrap(), KPathHamiltonian(4)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zero_offsets_mean_hamiltonian(g in arb_graph(10)) {
        prop_assume!(g.order() >= 3);
        let ham = has_property(&g, Hamiltonian).unwrap();
        prop_assert_eq!(has_property(&g, KHamiltonian(0)).unwrap(), ham);
        prop_assert_eq!(has_property(&g, KPathHamiltonian(0)).unwrap(), ham);
    }

    #[test]
    fn larger_k_is_stronger(g in arb_graph(9)) {
        let n = g.order();
        prop_assume!(n >= 4);
        for k in 1..=(n - 3).min(3) {
            if has_property(&g, KHamiltonian(k)).unwrap() {
                prop_assert!(has_property(&g, KHamiltonian(k - 1)).unwrap());
            }
        }
        for k in 1..=(n - 2).min(3) {
            if has_property(&g, KPathHamiltonian(k)).unwrap() {
                prop_assert!(has_property(&g, KPathHamiltonian(k - 1)).unwrap());
            }
        }
    }

    #[test]
    fn property_chain(g in arb_graph(10)) {
        prop_assume!(g.order() >= 3);
        let hc = has_property(&g, HamiltonianConnected).unwrap();
        let ham = has_property(&g, Hamiltonian).unwrap();
        let tr = has_property(&g, Traceable).unwrap();
        prop_assert!(!hc || ham);
        prop_assert!(!ham || tr);
    }

    #[test]
    fn adding_an_edge_preserves_monotone_properties(g in arb_graph(10), u in 0usize..10, v in 0usize..10) {
        let n = g.order();
        prop_assume!(u < n && v < n && u != v);
        let h = g.with_edge(u, v).unwrap();
        for p in [Traceable, Hamiltonian, HamiltonianConnected, KHamiltonian(1)] {
            if n >= 4 && has_property(&g, p).unwrap() {
                prop_assert!(has_property(&h, p).unwrap(), "{} lost", p);
            }
        }
    }

    #[test]
    fn properties_are_isomorphism_invariant((g, perm) in common::arb_graph_and_perm(9)) {
        let h = g.relabel(&perm).unwrap();
        for p in properties_for(g.order()) {
            prop_assert_eq!(has_property(&g, p).unwrap(), has_property(&h, p).unwrap());
        }
    }
}
