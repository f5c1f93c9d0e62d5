mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{arb_graph, arb_graph_and_perm, Mat};
use kfree_core::canon::isomorphic;
use kfree_core::{canonical_form, canonical_labeling, graph6, Graph};
use proptest::prelude::*;

/// Group every labelled graph on `n` vertices by oracle key and by canonical form;
/// the two partitions must coincide.
fn partitions_agree(n: usize) -> usize {
    let mut by_key: BTreeMap<Vec<bool>, BTreeSet<String>> = BTreeMap::new();
    for code in 0..1u64 << (n * (n - 1) / 2) {
        let m = Mat::from_code(n, code);
        by_key
            .entry(m.key())
            .or_default()
            .insert(canonical_form(&m.to_graph()).graph6().to_owned());
    }
    let forms: BTreeSet<&String> = by_key.values().flatten().collect();
    assert!(
        by_key.values().all(|f| f.len() == 1),
        "n={n}: one class split into several forms"
    );
    assert_eq!(forms.len(), by_key.len(), "n={n}: two classes share a form");
    by_key.len()
}

#[test]
fn forms_match_brute_force_classes() {
    let counts: Vec<usize> = (1..=5).map(partitions_agree).collect();
    assert_eq!(counts, [1, 2, 4, 11, 34]);
}

#[test]
fn forms_match_brute_force_classes_on_six_vertices() {
    assert_eq!(partitions_agree(6), 156);
}

#[test]
fn canonical_graph_is_a_relabelling() {
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap();
    let lab = canonical_labeling(&g);
    let mut order = lab.order.clone();
    order.sort_unstable();
    assert_eq!(order, (0..6).collect::<Vec<_>>());
    assert_eq!(graph6::encode(&lab.canonical_graph(&g)), canonical_form(&g).graph6());
}

#[test]
fn empty_and_tiny_graphs() {
    for n in 0..=3 {
        let g = Graph::empty(n).unwrap();
        assert_eq!(canonical_form(&g).to_graph(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn form_is_invariant_under_relabelling((g, p) in arb_graph_and_perm(14)) {
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(isomorphic(&g, &h));
    }

    #[test]
    fn form_decodes_to_an_isomorphic_graph(g in arb_graph(12)) {
        let f = canonical_form(&g);
        let back = f.to_graph();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.degree_sequence(), g.degree_sequence());
        prop_assert_eq!(canonical_form(&back), f);
    }

    #[test]
    fn orbits_match_brute_force_automorphisms(g in arb_graph(6)) {
        let lab = canonical_labeling(&g);
        let auts = Mat::of(&g).automorphisms();
        for u in 0..g.order() {
            for v in 0..g.order() {
                let joined = auts.iter().any(|p| p[u] == v);
                prop_assert_eq!(lab.same_orbit(u, v), joined, "vertices {} {}", u, v);
            }
        }
    }

    #[test]
    fn generators_are_automorphisms(g in arb_graph(10)) {
        for gen in canonical_labeling(&g).generators {
            prop_assert_eq!(g.relabel(&gen).unwrap(), g.clone());
        }
    }

    #[test]
    fn different_degree_sequences_give_different_forms(a in arb_graph(8), b in arb_graph(8)) {
        if a.order() != b.order() || a.degree_sequence() != b.degree_sequence() {
            prop_assert_ne!(canonical_form(&a), canonical_form(&b));
        }
    }
}
