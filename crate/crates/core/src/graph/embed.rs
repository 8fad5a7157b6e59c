//! Induced embeddings by backtracking.
//!
//! Host vertices are assigned in increasing order and candidate images are
//! tried in increasing order, so embeddings are produced in lexicographic
//! order of their maps. Candidates are pruned by degree and co-degree inside
//! the allowed target set and by exact adjacency to the already-placed
//! images.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{Embedding, Graph, VertexSet};

struct Matcher<'a> {
    host: &'a Graph,
    target: &'a Graph,
    allowed: u64,
    map: Vec<usize>,
    used: u64,
    target_deg: Vec<u32>,
    target_codeg: Vec<u32>,
}

impl<'a> Matcher<'a> {
    fn extend<F>(&mut self, u: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let k = self.host.order();
        if u == k {
            return visit(&self.map);
        }
        let need_deg = self.host.degree(u) as u32;
        let need_codeg = (k - 1) as u32 - need_deg;
        let mut want = 0u64;
        for w in self.host.neighbors(u).iter().filter(|&w| w < u) {
            want |= 1 << self.map[w];
        }
        let mut cands = self.allowed & !self.used;
        while cands != 0 {
            let c = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            if self.target_deg[c] < need_deg || self.target_codeg[c] < need_codeg {
                continue;
            }
            if self.target.row(c) & self.used != want {
                continue;
            }
            self.map[u] = c;
            self.used |= 1 << c;
            let flow = self.extend(u + 1, visit);
            self.used &= !(1 << c);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Visits every induced embedding of `host` into `target` whose image lies
/// in `allowed`, in lexicographic order of the map. Returns `true` when the
/// visitor stopped the search early.
pub fn for_each_embedding<F>(host: &Graph, target: &Graph, allowed: VertexSet, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let allowed = allowed.intersection(target.vertices()).bits();
    let k = host.order();
    if k > allowed.count_ones() as usize {
        return false;
    }
    let room = allowed.count_ones().saturating_sub(1);
    let target_deg: Vec<u32> = (0..target.order())
        .map(|c| (target.row(c) & allowed).count_ones())
        .collect();
    let target_codeg: Vec<u32> = target_deg.iter().map(|&d| room.saturating_sub(d)).collect();
    let mut m = Matcher {
        host,
        target,
        allowed,
        map: vec![0; k],
        used: 0,
        target_deg,
        target_codeg,
    };
    m.extend(0, &mut visit).is_break()
}

/// All induced embeddings of `h` into `g`, or the first `cap` of them.
pub fn enumerate_induced_embeddings(h: &Graph, g: &Graph, cap: Option<usize>) -> Vec<Embedding> {
    let mut out = Vec::new();
    if cap == Some(0) {
        return out;
    }
    for_each_embedding(h, g, g.vertices(), |map| {
        out.push(Embedding::new(map.to_vec()));
        if Some(out.len()) == cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

pub fn embeds(h: &Graph, g: &Graph) -> bool {
    embeds_within(h, g, g.vertices())
}

/// Whether `h` induced-embeds into the subgraph of `g` induced on `allowed`.
pub fn embeds_within(h: &Graph, g: &Graph, allowed: VertexSet) -> bool {
    for_each_embedding(h, g, allowed, |_| ControlFlow::Break(()))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && embeds(g, h)
}

/// Largest `k` such that some `k`-vertex induced subgraph of `g`
/// induced-embeds into `m`.
pub fn common_count(g: &Graph, m: &Graph) -> usize {
    common_count_within(g, m, m.vertices())
}

pub(crate) fn common_count_within(g: &Graph, m: &Graph, allowed: VertexSet) -> usize {
    let top = g.order().min(allowed.len());
    for k in (1..=top).rev() {
        for s in g.vertices().subsets_of_size(k) {
            let (sub, _) = g.induced_unchecked(s);
            if embeds_within(&sub, m, allowed) {
                return k;
            }
        }
    }
    0
}
