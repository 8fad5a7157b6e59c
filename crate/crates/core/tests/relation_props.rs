mod common;

use aeclab_core::constructions::graphs_up_to_order;
use aeclab_core::graph::clique_number;
use aeclab_core::relations::{
    rel_component, rel_forbcon_clique, rel_forbcon_edge, rel_noadd, rel_type_bounded,
};
use aeclab_core::{Graph, SubmodelRelation, VertexSet};
use common::*;
use proptest::prelude::*;

fn variants(g: &Graph) -> Vec<SubmodelRelation> {
    let f = g.clone();
    vec![
        SubmodelRelation::Component { strict_attach: false },
        SubmodelRelation::Component { strict_attach: true },
        SubmodelRelation::InducedSub,
        SubmodelRelation::ForbBounded { forbidden: f.clone(), threshold: 1 },
        SubmodelRelation::ForbBounded { forbidden: f.clone(), threshold: 3 },
        SubmodelRelation::CountPreserving { forbidden: f.clone() },
        SubmodelRelation::NoAdd { forbidden: f.clone(), size: 1 },
        SubmodelRelation::NoAdd { forbidden: f.clone(), size: 2 },
        SubmodelRelation::TypeBounded { forbidden: f.clone(), size: 2 },
        SubmodelRelation::ForbConClique { forbidden: f.clone() },
        SubmodelRelation::ForbConComponent { forbidden: f },
    ]
}

/// `m ⪯ host[n]`, with `m ⊆ n` given in host coordinates.
fn rel_in(rel: &SubmodelRelation, host: &Graph, m: VertexSet, n: VertexSet) -> bool {
    let (sub, back) = host.induced_subgraph(n).unwrap();
    let inner: VertexSet = back
        .iter()
        .enumerate()
        .filter(|(_, v)| m.contains(**v))
        .map(|(i, _)| i)
        .collect();
    rel.holds(inner, &sub).unwrap()
}

#[test]
fn reflexive_on_class_members() {
    let hosts = graphs_up_to_order(5).unwrap();
    for g in graphs_up_to_order(3).unwrap().iter().filter(|g| g.order() > 0) {
        for rel in variants(g) {
            let class = rel.natural_class();
            for m in hosts.iter().filter(|m| class.member(m)) {
                assert!(rel.holds(m.vertices(), m).unwrap(), "{:?} on {:?}", rel, m);
            }
        }
    }
}

#[test]
fn noadd_agrees_with_type_bounded() {
    let small = graphs_up_to_order(5).unwrap();
    let mut compared = 0u64;
    for n in &small {
        for m in n.vertices().subsets() {
            for g in &small {
                for size in 0..=3 {
                    assert_eq!(
                        rel_noadd(m, n, g, size),
                        rel_type_bounded(m, n, g, size),
                        "m={:?} n={:?} g={:?} size={}",
                        m,
                        n,
                        g,
                        size
                    );
                    compared += 1;
                }
            }
        }
    }
    assert_eq!(compared, 1307 * 53 * 4);
}

#[test]
fn clique_relation_reduces_to_edges() {
    let small = graphs_up_to_order(5).unwrap();
    let forbidden: Vec<&Graph> = small.iter().filter(|g| clique_number(g) >= 2).collect();
    for n in &small {
        for m in n.vertices().subsets() {
            // Direct definition: no edge leaves m.
            let direct = n.edges().iter().all(|&(u, v)| m.contains(u) == m.contains(v));
            assert_eq!(rel_forbcon_edge(m, n), direct);
            for g in &forbidden {
                assert_eq!(rel_forbcon_clique(m, n, g), direct);
            }
        }
    }
}

#[test]
fn forbcon_relations_transitive_and_strongly_coherent() {
    let hosts = graphs_up_to_order(5).unwrap();
    for g in graphs_up_to_order(4).unwrap().iter().filter(|g| g.order() > 0) {
        for rel in [
            SubmodelRelation::ForbConClique { forbidden: g.clone() },
            SubmodelRelation::ForbConComponent { forbidden: g.clone() },
        ] {
            let class = rel.natural_class();
            for host in hosts.iter().filter(|h| class.member(h)) {
                let full = host.vertices();
                for m1 in full.subsets() {
                    if !class.member(&induced(host, m1)) {
                        continue;
                    }
                    for m0 in m1.subsets() {
                        if !class.member(&induced(host, m0)) {
                            continue;
                        }
                        let r01 = rel_in(&rel, host, m0, m1);
                        let r12 = rel_in(&rel, host, m1, full);
                        let r02 = rel_in(&rel, host, m0, full);
                        assert!(!(r01 && r12) || r02, "transitivity {:?} {:?}", rel, host);
                        assert!(!r02 || r01, "strong coherence {:?} {:?}", rel, host);
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn component_relation_is_relabeling_invariant((n, perm) in arb_graph_and_perm(0, 7), bits in any::<u64>(), strict in any::<bool>()) {
        let m = VertexSet::from_bits(bits & n.vertices().bits());
        let relabeled = n.relabel(&perm).unwrap();
        prop_assert_eq!(
            rel_component(m, &n, strict),
            rel_component(map_set(m, &perm), &relabeled, strict)
        );
    }

    #[test]
    fn every_relation_is_relabeling_invariant((n, perm) in arb_graph_and_perm(0, 6), g in arb_graph(3), bits in any::<u64>()) {
        let m = VertexSet::from_bits(bits & n.vertices().bits());
        let relabeled = n.relabel(&perm).unwrap();
        for rel in variants(&g) {
            prop_assert_eq!(
                rel.holds(m, &n).unwrap(),
                rel.holds(map_set(m, &perm), &relabeled).unwrap(),
                "{:?}", rel
            );
        }
    }
}
