//! Named graphs, exhaustive and random corpora, and scenarios.

mod scenario;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_key, clique_number, Graph};

pub use scenario::{build_scenario, Scenario, ScenarioBody, ScenarioParams, SCENARIO_NAMES};

/// Largest order accepted by [`enumerate_graphs_upto`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Seed of the default random corpus.
pub const DEFAULT_SEED: u64 = 0x5EED_AEC0;

pub fn gen_edgeless(m: usize) -> Result<Graph> {
    Graph::edgeless(m)
}

pub fn gen_complete(m: usize) -> Result<Graph> {
    let mut g = Graph::edgeless(m)?;
    for u in 0..m {
        for v in u + 1..m {
            g.set_edge(u, v, true);
        }
    }
    Ok(g)
}

pub fn gen_path(m: usize) -> Result<Graph> {
    let mut g = Graph::edgeless(m)?;
    for v in 1..m {
        g.set_edge(v - 1, v, true);
    }
    Ok(g)
}

pub fn gen_cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::param(format!("a cycle needs at least 3 vertices, got {}", m)));
    }
    let mut g = gen_path(m)?;
    g.set_edge(0, m - 1, true);
    Ok(g)
}

/// Vertices `0..mu`; `α, β` adjacent iff both are at least `n` and they
/// differ by at least `n`. Vertices below `n` are isolated.
pub fn gen_example_n(mu: usize, n: usize) -> Result<Graph> {
    if n == 0 || mu < n {
        return Err(Error::param(format!(
            "example graph needs mu >= n >= 1, got mu = {}, n = {}",
            mu, n
        )));
    }
    let mut g = Graph::edgeless(mu)?;
    for a in n..mu {
        for b in a + n..mu {
            g.set_edge(a, b, true);
        }
    }
    Ok(g)
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// One canonical representative per isomorphism class of graphs with
/// exactly `m` vertices, sorted by canonical key.
///
/// Classes of order `m` are grown from those of order `m - 1` by adding a
/// vertex with every possible neighbourhood and deduplicating on the
/// canonical key.
pub fn enumerate_graphs_upto(m: usize) -> Result<Vec<Graph>> {
    if m > MAX_ENUMERATION_ORDER {
        return Err(Error::param(format!(
            "exhaustive enumeration is limited to {} vertices, got {}",
            MAX_ENUMERATION_ORDER, m
        )));
    }
    let mut level = alloc::vec![Graph::empty()];
    for order in 1..=m {
        let mut next = BTreeMap::new();
        for g in &level {
            for nbhd in 0u64..1 << (order - 1) {
                let mut h = g.clone();
                let v = h.add_vertex()?;
                for u in 0..v {
                    if nbhd >> u & 1 == 1 {
                        h.set_edge(u, v, true);
                    }
                }
                next.entry(canonical_key(&h)).or_insert_with(|| canonical_form(&h));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Every isomorphism class of order `0..=m`, by increasing order.
pub fn graphs_up_to_order(m: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 0..=m {
        out.extend(enumerate_graphs_upto(k)?);
    }
    Ok(out)
}

/// `G(m, p)`: each pair `(u, v)`, `u < v`, taken in lexicographic order, is
/// an edge when the next ChaCha8 draw is below `p`.
pub fn random_graph(m: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_from(&mut rng, m, p)
}

pub fn random_graph_from<R: Rng>(rng: &mut R, m: usize, p: f64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("edge probability {} outside [0, 1]", p)));
    }
    let mut g = Graph::edgeless(m)?;
    for u in 0..m {
        for v in u + 1..m {
            if rng.gen::<f64>() < p {
                g.set_edge(u, v, true);
            }
        }
    }
    Ok(g)
}

/// The default random corpus: 50 graphs for every order 3..=6 and every
/// `p` in {0.2, 0.5, 0.8}, drawn from one stream seeded with `seed`.
pub fn random_corpus(seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(600);
    for m in 3..=6 {
        for p in [0.2, 0.5, 0.8] {
            for _ in 0..50 {
                out.push(random_graph_from(&mut rng, m, p).expect("order and p in range"));
            }
        }
    }
    out
}
