//! Finite simple undirected graphs on dense vertex identifiers `0..order`.
//!
//! Adjacency is stored as one 64-bit row per vertex, so a graph has at most
//! [`MAX_ORDER`] vertices. Every search in this crate works on graphs far
//! below that size.

mod canon;
mod cliques;
mod embed;
mod vertex_set;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use cliques::{clique_number, enumerate_cliques};
pub use embed::{
    common_count, embeds, embeds_within, enumerate_induced_embeddings, for_each_embedding,
    is_isomorphic,
};
pub use vertex_set::{Combinations, VertexSet};

pub(crate) use embed::common_count_within;

pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The graph with no vertices.
    pub fn empty() -> Self {
        Graph {
            order: 0,
            adj: Vec::new(),
        }
    }

    pub fn edgeless(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        Ok(Graph {
            order,
            adj: vec![0; order],
        })
    }

    /// Builds a graph from an edge list. Pairs are unordered; a pair listed
    /// twice (in either orientation) is rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.set_edge(u, v, true);
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v && u < self.order && v < self.order);
        if present {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        } else {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    /// Appends an isolated vertex and returns its identifier.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.order == MAX_ORDER {
            return Err(Error::OrderTooLarge(MAX_ORDER + 1));
        }
        self.adj.push(0);
        self.order += 1;
        Ok(self.order - 1)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            let vertex = s.difference(self.vertices()).min().unwrap_or(0);
            Err(Error::VertexOutOfRange {
                vertex,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in VertexSet::from_bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn components(&self) -> Partition {
        Partition(self.components_within(self.vertices()))
    }

    /// Connected components of the subgraph induced on `mask`, ordered by
    /// smallest member.
    pub fn components_within(&self, mask: VertexSet) -> Vec<VertexSet> {
        let mask = mask.intersection(self.vertices()).bits();
        let mut remaining = mask;
        let mut blocks = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut block = 1u64 << start;
            let mut frontier = block;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & mask & !block;
                block |= fresh;
                frontier |= fresh;
            }
            remaining &= !block;
            blocks.push(VertexSet::from_bits(block));
        }
        blocks
    }

    /// The component of `v` inside the subgraph induced on `mask`.
    pub fn component_of_within(&self, v: usize, mask: VertexSet) -> VertexSet {
        let mask = mask.bits();
        let mut block = 1u64 << v;
        let mut frontier = block;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[u] & mask & !block;
            block |= fresh;
            frontier |= fresh;
        }
        VertexSet::from_bits(block)
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(self.vertices()).len() <= 1
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter()
            .all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Induced subgraph on `s`, renumbered in increasing vertex order.
    /// The returned vector maps each new vertex to its original identifier.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        Ok(self.induced_unchecked(s))
    }

    pub(crate) fn induced_unchecked(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let back: Vec<usize> = s.iter().collect();
        let mut g = Graph {
            order: back.len(),
            adj: vec![0; back.len()],
        };
        for (i, &u) in back.iter().enumerate() {
            for (j, &v) in back.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        (g, back)
    }

    /// Relabels vertex `v` as `map[v]`; `map` must be a permutation.
    pub fn relabel(&self, map: &[usize]) -> Result<Graph> {
        if map.len() != self.order {
            return Err(Error::param("relabeling length differs from graph order"));
        }
        let mut seen = 0u64;
        for &t in map {
            self.check_vertex(t)?;
            if seen >> t & 1 == 1 {
                return Err(Error::param("relabeling is not a permutation"));
            }
            seen |= 1 << t;
        }
        let mut g = Graph::edgeless(self.order)?;
        for (u, v) in self.edges() {
            g.set_edge(map[u], map[v], true);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        Graph {
            order: self.order,
            adj: (0..self.order)
                .map(|v| !self.adj[v] & full & !(1 << v))
                .collect(),
        }
    }

    /// Canonical text serialization:
    /// `graph <name> { vertices: <n>; edges: (u,v), ...; }`.
    pub fn to_text(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = write!(s, "graph {} {{ vertices: {}; edges:", name, self.order);
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            let _ = write!(s, "{}({},{})", sep, u, v);
        }
        s.push_str("; }");
        s
    }
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("order", &self.order)?;
        let edges: Vec<[usize; 2]> = self.edges().into_iter().map(|(u, v)| [u, v]).collect();
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

/// Connected-component partition, blocks ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition(Vec<VertexSet>);

impl Partition {
    pub fn blocks(&self) -> &[VertexSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn block_of(&self, v: usize) -> Option<VertexSet> {
        self.0.iter().copied().find(|b| b.contains(v))
    }

    pub fn into_blocks(self) -> Vec<VertexSet> {
        self.0
    }
}

pub fn components(g: &Graph) -> Partition {
    g.components()
}

pub fn induced_subgraph(g: &Graph, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
    g.induced_subgraph(s)
}

/// An injective vertex map `host -> target`; entry `i` is the image of
/// host vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Embedding(Vec<usize>);

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding(map)
    }

    pub fn identity(n: usize) -> Self {
        Embedding((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn image(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn image_of(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.0[v]).collect()
    }

    /// `self` after `first`: maps `v` to `self(first(v))`.
    pub fn after(&self, first: &Embedding) -> Embedding {
        Embedding(first.0.iter().map(|&v| self.0[v]).collect())
    }

    /// Checks injectivity and that edges are preserved and reflected.
    pub fn is_induced(&self, host: &Graph, target: &Graph) -> bool {
        if self.0.len() != host.order() || self.0.iter().any(|&t| t >= target.order()) {
            return false;
        }
        if self.image().len() != self.0.len() {
            return false;
        }
        (0..host.order()).all(|u| {
            (u + 1..host.order())
                .all(|v| host.has_edge(u, v) == target.has_edge(self.0[u], self.0[v]))
        })
    }
}

/// An amalgam `graph` with the two embeddings of the amalgamated graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Amalgam {
    pub graph: Graph,
    pub f1: Embedding,
    pub f2: Embedding,
}

/// Disjoint union; the first graph keeps its labels, the second is shifted.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Amalgam> {
    let mut u = Graph::edgeless(g.order() + h.order())?;
    let shift = g.order();
    for (a, b) in g.edges() {
        u.set_edge(a, b, true);
    }
    for (a, b) in h.edges() {
        u.set_edge(a + shift, b + shift, true);
    }
    Ok(Amalgam {
        graph: u,
        f1: Embedding::identity(g.order()),
        f2: Embedding((shift..shift + h.order()).collect()),
    })
}

/// Pushout of `m1` and `m2` over a common induced subgraph.
///
/// `base1[i]` and `base2[i]` name the same vertex of the shared part in `m1`
/// and `m2`. The result keeps `m1`'s labels and appends the remaining
/// vertices of `m2` in increasing order; the two images meet exactly in the
/// shared part and no edge is added between the private parts.
pub fn amalgam_disjoint_over(
    m1: &Graph,
    base1: &[usize],
    m2: &Graph,
    base2: &[usize],
) -> Result<Amalgam> {
    if base1.len() != base2.len() {
        return Err(Error::param("shared vertex lists differ in length"));
    }
    let set1: VertexSet = base1.iter().copied().collect();
    let set2: VertexSet = base2.iter().copied().collect();
    for &v in base1 {
        m1.check_vertex(v)?;
    }
    for &v in base2 {
        m2.check_vertex(v)?;
    }
    if set1.len() != base1.len() || set2.len() != base2.len() {
        return Err(Error::param("shared vertex list repeats a vertex"));
    }
    for i in 0..base1.len() {
        for j in i + 1..base1.len() {
            if m1.has_edge(base1[i], base1[j]) != m2.has_edge(base2[i], base2[j]) {
                return Err(Error::pre(
                    "shared part does not induce the same subgraph in both graphs",
                ));
            }
        }
    }
    let rest2: Vec<usize> = m2.vertices().difference(set2).iter().collect();
    let mut graph = Graph::edgeless(m1.order() + rest2.len())?;
    for (a, b) in m1.edges() {
        graph.set_edge(a, b, true);
    }
    let mut f2 = vec![0usize; m2.order()];
    for (i, &v) in base2.iter().enumerate() {
        f2[v] = base1[i];
    }
    for (k, &v) in rest2.iter().enumerate() {
        f2[v] = m1.order() + k;
    }
    for (a, b) in m2.edges() {
        graph.set_edge(f2[a], f2[b], true);
    }
    Ok(Amalgam {
        graph,
        f1: Embedding::identity(m1.order()),
        f2: Embedding(f2),
    })
}
