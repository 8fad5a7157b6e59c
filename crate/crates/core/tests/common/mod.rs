//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! search code under test: adjacency is read edge by edge and every map is
//! enumerated.

#![allow(dead_code)]

use aeclab_core::{Graph, VertexSet};
use proptest::prelude::*;

pub fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// The graph on `m` vertices whose edge `i` (in [`pairs`] order) is present
/// iff bit `i` of `bits` is set.
pub fn from_bits(m: usize, bits: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(m)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(m, &edges).unwrap()
}

/// Every labeled graph on `m` vertices.
pub fn labeled_graphs(m: usize) -> impl Iterator<Item = Graph> {
    let n = pairs(m).len();
    (0..1u64 << n).map(move |b| from_bits(m, b))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Edge bit string of `g` relabeled by `perm`.
pub fn bits_under(g: &Graph, perm: &[usize]) -> u64 {
    let mut bits = 0u64;
    let index = |a: usize, b: usize| {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        v * (v - 1) / 2 + u
    };
    for (u, v) in g.edges() {
        bits |= 1 << index(perm[u], perm[v]);
    }
    bits
}

/// Smallest edge bit string over all relabelings.
pub fn brute_canonical(g: &Graph) -> (usize, u64) {
    let best = permutations(g.order())
        .iter()
        .map(|p| bits_under(g, p))
        .min()
        .unwrap_or(0);
    (g.order(), best)
}

/// Number of injective maps `h -> g` preserving adjacency and non-adjacency.
pub fn brute_embedding_count(h: &Graph, g: &Graph) -> usize {
    fn go(h: &Graph, g: &Graph, map: &mut Vec<usize>) -> usize {
        let u = map.len();
        if u == h.order() {
            return 1;
        }
        let mut total = 0;
        for c in 0..g.order() {
            if map.contains(&c) {
                continue;
            }
            map.push(c);
            if (0..u).all(|w| h.has_edge(u, w) == g.has_edge(c, map[w])) {
                total += go(h, g, map);
            }
            map.pop();
        }
        total
    }
    if h.order() > g.order() {
        return 0;
    }
    go(h, g, &mut Vec::new())
}

pub fn brute_embeds(h: &Graph, g: &Graph) -> bool {
    brute_embedding_count(h, g) > 0
}

pub fn induced(g: &Graph, s: VertexSet) -> Graph {
    g.induced_subgraph(s).unwrap().0
}

pub fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|m| {
        let n = pairs(m).len();
        (Just(m), 0..=(if n == 0 { 0 } else { (1u64 << n) - 1 }))
            .prop_map(|(m, bits)| from_bits(m, bits))
    })
}

/// A graph with at least `min` vertices together with a permutation of them.
pub fn arb_graph_and_perm(min: usize, max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (min..=max_order).prop_flat_map(|m| {
        let n = pairs(m).len();
        let perm = Just((0..m).collect::<Vec<usize>>()).prop_shuffle();
        (0..=(if n == 0 { 0 } else { (1u64 << n) - 1 }), perm)
            .prop_map(move |(bits, p)| (from_bits(m, bits), p))
    })
}

/// Image of `s` under `perm`.
pub fn map_set(s: VertexSet, perm: &[usize]) -> VertexSet {
    s.iter().map(|v| perm[v]).collect()
}
