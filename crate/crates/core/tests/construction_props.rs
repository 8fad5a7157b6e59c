mod common;

use std::collections::BTreeSet;

use aeclab_core::constructions::{
    enumerate_graphs_upto, gen_edgeless, gen_example_n, independence_number, random_graph,
};
use aeclab_core::ClassSpec;
use common::*;
use proptest::prelude::*;

fn brute_independence(g: &aeclab_core::Graph) -> usize {
    g.vertices()
        .subsets()
        .filter(|&s| s.iter().all(|u| s.iter().all(|v| !g.has_edge(u, v))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

#[test]
fn example_graph_independence() {
    for n in 1..=3 {
        for mu in n..=12 {
            let g = gen_example_n(mu, n).unwrap();
            let expected = n + n.min(mu - n);
            assert_eq!(brute_independence(&g), expected, "mu={} n={}", mu, n);
            assert_eq!(independence_number(&g), expected, "mu={} n={}", mu, n);
        }
    }
}

#[test]
fn large_subsets_of_example_graph_contain_an_edge() {
    for n in 1..=3 {
        for mu in 2 * n + 1..=12 {
            let g = gen_example_n(mu, n).unwrap();
            for s in g.vertices().subsets_of_size(2 * n + 1) {
                assert!(s.iter().any(|u| s.iter().any(|v| g.has_edge(u, v))), "{:?}", s);
            }
            let class = ClassSpec::Forb { family: vec![gen_edgeless(2 * n + 1).unwrap()] };
            assert!(class.member(&g));
        }
    }
}

#[test]
fn isomorphism_class_counts() {
    let counts: Vec<usize> = (0..=6).map(|m| enumerate_graphs_upto(m).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    // Orbits of labeled graphs under relabeling, by the brute-force key.
    for (m, &count) in counts.iter().enumerate().take(6) {
        let orbits: BTreeSet<(usize, u64)> = labeled_graphs(m).map(|g| brute_canonical(&g)).collect();
        assert_eq!(orbits.len(), count);
        let reps: BTreeSet<(usize, u64)> =
            enumerate_graphs_upto(m).unwrap().iter().map(brute_canonical).collect();
        assert_eq!(reps, orbits);
    }
}

#[test]
fn enumeration_bound_is_enforced() {
    assert!(enumerate_graphs_upto(8).is_err());
}

proptest! {
    #[test]
    fn random_graph_is_reproducible(m in 0usize..12, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let a = random_graph(m, p, seed).unwrap();
        prop_assert_eq!(&a, &random_graph(m, p, seed).unwrap());
        prop_assert_eq!(a.order(), m);
    }
}
