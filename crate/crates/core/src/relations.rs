//! Strong-submodel relations `M ⪯ N`.
//!
//! Every predicate takes the smaller structure as a vertex set `m` of the
//! larger graph `n`; `M` is the subgraph of `n` induced on `m`.
//!
//! Infinite parameters are finite here: thresholds and "over κ elements"
//! sizes are plain naturals, and types over a parameter set are
//! quantifier-free (the adjacency pattern of a vertex to the set).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use serde::Serialize;

use crate::class::ClassSpec;
use crate::error::{Error, Result};
use crate::graph::{
    clique_number, common_count, common_count_within, embeds, enumerate_cliques,
    enumerate_induced_embeddings, for_each_embedding, Embedding, Graph, VertexSet,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmodelRelation {
    /// Same-connected-component relation. With `strict_attach` every vertex
    /// of `N \ M` must also share a component with some vertex of `M`.
    Component { strict_attach: bool },
    /// Plain induced substructure.
    InducedSub,
    /// No embedding of a `threshold`-vertex piece of `forbidden` into `M`
    /// extends by a vertex of `N \ M`.
    ForbBounded { forbidden: Graph, threshold: usize },
    /// `forbidden` has as many elements in `M` as in `N`.
    CountPreserving { forbidden: Graph },
    /// `N` adds no element of `forbidden` over `size` elements of `M`.
    NoAdd { forbidden: Graph, size: usize },
    /// No vertex of `N \ M` realizes, over a `size`-subset of `M`, a type
    /// realized in `forbidden`.
    TypeBounded { forbidden: Graph, size: usize },
    /// Cliques embeddable in `forbidden` that meet `M` stay inside `M`.
    ForbConClique { forbidden: Graph },
    /// Components of `M` embeddable in `forbidden` are components of `N`.
    ForbConComponent { forbidden: Graph },
}

impl SubmodelRelation {
    pub fn holds(&self, m: VertexSet, n: &Graph) -> Result<bool> {
        rel_holds(self, m, n)
    }

    pub fn forbidden(&self) -> Option<&Graph> {
        match self {
            SubmodelRelation::Component { .. } | SubmodelRelation::InducedSub => None,
            SubmodelRelation::ForbBounded { forbidden, .. }
            | SubmodelRelation::CountPreserving { forbidden }
            | SubmodelRelation::NoAdd { forbidden, .. }
            | SubmodelRelation::TypeBounded { forbidden, .. }
            | SubmodelRelation::ForbConClique { forbidden }
            | SubmodelRelation::ForbConComponent { forbidden } => Some(forbidden),
        }
    }

    /// The class the relation is defined on: all graphs, `Forb({G})` or
    /// `Forb-con(G)`.
    pub fn natural_class(&self) -> ClassSpec {
        match self {
            SubmodelRelation::Component { .. } | SubmodelRelation::InducedSub => ClassSpec::all(),
            SubmodelRelation::ForbBounded { forbidden, .. }
            | SubmodelRelation::CountPreserving { forbidden }
            | SubmodelRelation::NoAdd { forbidden, .. }
            | SubmodelRelation::TypeBounded { forbidden, .. } => ClassSpec::Forb {
                family: alloc::vec![forbidden.clone()],
            },
            SubmodelRelation::ForbConClique { forbidden }
            | SubmodelRelation::ForbConComponent { forbidden } => ClassSpec::ForbCon {
                forbidden: forbidden.clone(),
            },
        }
    }

    /// The relation literal of the description language, naming the forbidden
    /// graph `graph_name`.
    pub fn literal(&self, graph_name: &str) -> String {
        match self {
            SubmodelRelation::Component { strict_attach: false } => "component".into(),
            SubmodelRelation::Component { strict_attach: true } => "component_strict".into(),
            SubmodelRelation::InducedSub => "induced".into(),
            SubmodelRelation::ForbBounded { threshold, .. } => {
                format!("forb_bounded({}, {})", graph_name, threshold)
            }
            SubmodelRelation::CountPreserving { .. } => format!("count({})", graph_name),
            SubmodelRelation::NoAdd { size, .. } => format!("noadd({}, {})", graph_name, size),
            SubmodelRelation::TypeBounded { size, .. } => format!("typeb({}, {})", graph_name, size),
            SubmodelRelation::ForbConClique { .. } => format!("fc_clique({})", graph_name),
            SubmodelRelation::ForbConComponent { .. } => format!("fc_comp({})", graph_name),
        }
    }

    /// The same relation with the component variant switched to the strict
    /// reading.
    pub fn with_strict_attach(self, strict: bool) -> Self {
        match self {
            SubmodelRelation::Component { .. } => SubmodelRelation::Component {
                strict_attach: strict,
            },
            other => other,
        }
    }
}

pub fn rel_holds(rel: &SubmodelRelation, m: VertexSet, n: &Graph) -> Result<bool> {
    n.check_set(m)?;
    Ok(match rel {
        SubmodelRelation::Component { strict_attach } => rel_component(m, n, *strict_attach),
        SubmodelRelation::InducedSub => true,
        SubmodelRelation::ForbBounded {
            forbidden,
            threshold,
        } => rel_forb_bounded(m, n, forbidden, *threshold),
        SubmodelRelation::CountPreserving { forbidden } => rel_count(m, n, forbidden),
        SubmodelRelation::NoAdd { forbidden, size } => rel_noadd(m, n, forbidden, *size),
        SubmodelRelation::TypeBounded { forbidden, size } => {
            rel_type_bounded(m, n, forbidden, *size)
        }
        SubmodelRelation::ForbConClique { forbidden } => rel_forbcon_clique(m, n, forbidden),
        SubmodelRelation::ForbConComponent { forbidden } => {
            rel_forbcon_component(m, n, forbidden)
        }
    })
}

/// No-merging reading: for every `x ∈ N \ M`, the vertices of `M` in
/// `x`'s component of `N` lie in one component of `M`. Components of `N`
/// disjoint from `M` are allowed unless `strict_attach` is set.
pub fn rel_component(m: VertexSet, n: &Graph, strict_attach: bool) -> bool {
    let m_blocks = n.components_within(m);
    n.components().blocks().iter().all(|&c| {
        if c.is_subset(m) {
            return true;
        }
        let touched = c.intersection(m);
        if touched.is_empty() {
            return !strict_attach;
        }
        m_blocks.iter().any(|b| touched.is_subset(*b))
    })
}

/// For every induced piece `H` of `g` with at least `threshold` vertices
/// and every embedding of `H` into `M`, no vertex of `N \ M` extends the
/// embedding to a larger piece of `g`.
///
/// A strict extension restricts to a one-vertex extension, and an embedding
/// of a larger `H` restricts to one of exactly `threshold` vertices, so only
/// pieces of size `threshold` plus one new vertex are examined.
pub fn rel_forb_bounded(m: VertexSet, n: &Graph, g: &Graph, threshold: usize) -> bool {
    if threshold >= g.order() {
        return true;
    }
    let outside = n.vertices().difference(m);
    if outside.is_empty() {
        return true;
    }
    for piece in g.vertices().subsets_of_size(threshold) {
        let (h, back) = g.induced_unchecked(piece);
        let rest = g.vertices().difference(piece);
        let extended = for_each_embedding(&h, n, m, |map| {
            let found = rest.iter().any(|v| {
                outside.iter().any(|y| {
                    back.iter()
                        .zip(map)
                        .all(|(&s, &img)| g.has_edge(v, s) == n.has_edge(y, img))
                })
            });
            if found {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if extended {
            return false;
        }
    }
    true
}

/// The number of elements of `g` in `M` equals that in `N`.
pub fn rel_count(m: VertexSet, n: &Graph, g: &Graph) -> bool {
    common_count_within(g, n, m) == common_count(g, n)
}

/// `N` adds an element of `forbidden` over `a`: the subgraph of `N`
/// induced on `a ∪ {x}` (listed in increasing order, see [`AddWitness::domain`])
/// embeds into `forbidden` via `embedding`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AddWitness {
    pub a: VertexSet,
    pub x: usize,
    pub embedding: Embedding,
}

impl AddWitness {
    pub fn domain(&self) -> Vec<usize> {
        self.a.with(self.x).to_vec()
    }
}

/// The first `(A, x)`, `A` in lexicographic order and then `x`, with
/// `A ⊆ m`, `|A| = size`, `x ∈ n \ m` and `N[A ∪ {x}]` embeddable in `g`.
pub fn adds_element(m: VertexSet, n: &Graph, g: &Graph, size: usize) -> Option<AddWitness> {
    let outside = n.vertices().difference(m);
    if outside.is_empty() {
        return None;
    }
    for a in m.subsets_of_size(size) {
        for x in outside.iter() {
            let (sub, _) = n.induced_unchecked(a.with(x));
            if let Some(e) = enumerate_induced_embeddings(&sub, g, Some(1)).pop() {
                return Some(AddWitness { a, x, embedding: e });
            }
        }
    }
    None
}

pub fn rel_noadd(m: VertexSet, n: &Graph, g: &Graph, size: usize) -> bool {
    adds_element(m, n, g, size).is_none()
}

/// Quantifier-free type of a vertex over a parameter set: its adjacency to
/// each member of `base`, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QfType {
    pub base: VertexSet,
    pub pattern: Vec<bool>,
}

pub fn qf_type_of(x: usize, a: VertexSet, n: &Graph) -> Result<QfType> {
    n.check_vertex(x)?;
    n.check_set(a)?;
    if a.contains(x) {
        return Err(Error::param(format!("vertex {} lies in the parameter set", x)));
    }
    Ok(QfType {
        base: a,
        pattern: a.iter().map(|v| n.has_edge(x, v)).collect(),
    })
}

/// Whether `pattern` over a copy of `base` is realized in `g`: some induced
/// copy of `base` in `g` has an outside vertex with exactly that adjacency.
pub fn type_realized(base: &Graph, pattern: &[bool], g: &Graph) -> bool {
    for_each_embedding(base, g, g.vertices(), |map| {
        let image: VertexSet = map.iter().copied().collect();
        let hit = g.vertices().difference(image).iter().any(|z| {
            map.iter()
                .zip(pattern)
                .all(|(&img, &bit)| g.has_edge(z, img) == bit)
        });
        if hit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// For every `A ⊆ m` of the given size and every `x ∈ n \ m`, the type of
/// `x` over `A` is not realized in `g`.
pub fn rel_type_bounded(m: VertexSet, n: &Graph, g: &Graph, size: usize) -> bool {
    let outside = n.vertices().difference(m);
    if outside.is_empty() {
        return true;
    }
    for a in m.subsets_of_size(size) {
        let (base, _) = n.induced_unchecked(a);
        for x in outside.iter() {
            let tp = qf_type_of(x, a, n).expect("x lies outside m");
            if type_realized(&base, &tp.pattern, g) {
                return false;
            }
        }
    }
    true
}

/// Every clique of `N` small enough to embed in `g` that meets `M` lies
/// inside `M`.
pub fn rel_forbcon_clique(m: VertexSet, n: &Graph, g: &Graph) -> bool {
    let omega = clique_number(g);
    enumerate_cliques(n, omega)
        .into_iter()
        .all(|c| !c.intersects(m) || c.is_subset(m))
}

/// No edge of `N` joins `M` to `N \ M`. Agrees with
/// [`rel_forbcon_clique`] whenever `g` has an edge.
pub fn rel_forbcon_edge(m: VertexSet, n: &Graph) -> bool {
    m.iter().all(|v| n.neighbors(v).is_subset(m))
}

/// Every component of `M` that embeds in `g` is a component of `N`.
pub fn rel_forbcon_component(m: VertexSet, n: &Graph, g: &Graph) -> bool {
    n.components_within(m).into_iter().all(|c| {
        let closed = c.iter().all(|v| n.neighbors(v).is_subset(c));
        closed || !embeds(&n.induced_unchecked(c).0, g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_complete, gen_edgeless, gen_example_n, gen_path};
    use crate::graph::disjoint_union;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn component_examples() {
        let edge = gen_path(2).unwrap();
        assert!(rel_component(set(&[0]), &edge, false));
        let p3 = gen_path(3).unwrap();
        assert!(!rel_component(set(&[0, 2]), &p3, false));
        assert!(rel_component(p3.vertices(), &p3, false));
        // A fresh component is allowed only under the no-merging reading.
        let e2 = gen_edgeless(2).unwrap();
        assert!(rel_component(set(&[0]), &e2, false));
        assert!(!rel_component(set(&[0]), &e2, true));
        assert!(rel_component(VertexSet::EMPTY, &e2, false));
    }

    #[test]
    fn forb_bounded_examples() {
        let e4 = gen_edgeless(4).unwrap();
        let e3 = gen_edgeless(3).unwrap();
        assert!(rel_forb_bounded(set(&[0, 1]), &e3, &e4, 5));
        assert!(!rel_forb_bounded(set(&[0, 1]), &e3, &e4, 2));
        assert!(rel_forb_bounded(e3.vertices(), &e3, &e4, 2));
    }

    #[test]
    fn count_examples() {
        let e5 = gen_edgeless(5).unwrap();
        let e3 = gen_edgeless(3).unwrap();
        assert!(rel_count(e3.vertices(), &e3, &e5));
        assert!(!rel_count(set(&[0, 1]), &e3, &e5));
        let k3 = gen_complete(3).unwrap();
        let n = disjoint_union(&k3, &gen_complete(1).unwrap()).unwrap().graph;
        assert!(rel_count(set(&[0, 1, 2]), &n, &k3));
    }

    #[test]
    fn adds_element_examples() {
        let n = gen_example_n(8, 2).unwrap();
        let m = n.vertices().without(7);
        let w = adds_element(m, &n, &gen_edgeless(5).unwrap(), 2).expect("witness");
        assert_eq!((w.a, w.x), (set(&[0, 1]), 7));
        assert_eq!(w.domain(), [0, 1, 7]);
        assert!(!rel_noadd(m, &n, &gen_edgeless(3).unwrap(), 2));
        assert!(adds_element(n.vertices(), &n, &gen_edgeless(5).unwrap(), 2).is_none());
        assert!(adds_element(set(&[0]), &n, &gen_edgeless(5).unwrap(), 2).is_none());
        assert!(rel_noadd(set(&[0]), &n, &gen_edgeless(5).unwrap(), 2));
    }

    #[test]
    fn qf_types() {
        let p3 = gen_path(3).unwrap();
        assert_eq!(qf_type_of(1, set(&[0, 2]), &p3).unwrap().pattern, [true, true]);
        assert_eq!(qf_type_of(0, set(&[2]), &p3).unwrap().pattern, [false]);
        let n = gen_example_n(8, 2).unwrap();
        assert_eq!(qf_type_of(5, set(&[0, 1]), &n).unwrap().pattern, [false, false]);
        assert!(qf_type_of(0, set(&[0]), &p3).is_err());
    }

    #[test]
    fn type_bounded_examples() {
        let n = gen_example_n(8, 2).unwrap();
        let g = gen_edgeless(5).unwrap();
        let m = n.vertices().without(7);
        assert!(!rel_type_bounded(m, &n, &g, 2));
        assert!(rel_type_bounded(n.vertices(), &n, &g, 2));
        assert!(rel_type_bounded(set(&[0]), &n, &g, 2));
    }

    #[test]
    fn forbcon_examples() {
        let edge = gen_path(2).unwrap();
        assert!(!rel_forbcon_clique(set(&[0]), &edge, &gen_complete(3).unwrap()));
        assert!(rel_forbcon_clique(set(&[0]), &edge, &gen_edgeless(3).unwrap()));
        assert!(rel_forbcon_clique(edge.vertices(), &edge, &gen_complete(3).unwrap()));

        assert!(!rel_forbcon_component(set(&[0]), &edge, &gen_complete(5).unwrap()));
        let p3 = gen_path(3).unwrap();
        let n = disjoint_union(&p3, &gen_complete(1).unwrap()).unwrap().graph;
        assert!(rel_forbcon_component(set(&[0, 1, 2]), &n, &gen_complete(1).unwrap()));
        assert!(rel_forbcon_component(n.vertices(), &n, &gen_complete(5).unwrap()));
    }

    #[test]
    fn out_of_range_is_an_error() {
        let p3 = gen_path(3).unwrap();
        assert!(rel_holds(&SubmodelRelation::InducedSub, set(&[5]), &p3).is_err());
    }
}
