//! Bounded search for amalgams.
//!
//! Candidates are laid out as `m1` (labels kept), then the vertices of `m2`
//! that were not identified with `m1` (increasing order), then extra
//! vertices. They are visited in canonical order: identifications by number
//! of identified pairs and then lexicographically, then the number of extra
//! vertices, then the undecided pairs (sorted by larger and then smaller
//! endpoint) as a bit string with non-edges first.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::partial::{forced_nonmember, forced_violation, PartialGraph};
use super::{map_text, Certificate, CertificateKind, Exhaustion, Witness, DEFAULT_EXTRA};
use crate::class::ClassSpec;
use crate::error::{Error, Result};
use crate::graph::{Embedding, Graph, VertexSet};
use crate::relations::{rel_holds, SubmodelRelation};

#[derive(Clone, Debug, PartialEq)]
pub struct AmalgamProblem {
    pub class: ClassSpec,
    pub rel: SubmodelRelation,
    pub m0: Graph,
    pub m1: Graph,
    pub m2: Graph,
    /// Embedding of `m0` into `m1`.
    pub e1: Embedding,
    /// Embedding of `m0` into `m2`.
    pub e2: Embedding,
    /// Largest amalgam order considered.
    pub bound: usize,
    /// Extra-vertex budget, also capped by `bound`.
    pub extra: usize,
    /// Only amalgams whose two images meet exactly in `m0`.
    pub disjoint: bool,
}

impl AmalgamProblem {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        class: ClassSpec,
        rel: SubmodelRelation,
        m0: Graph,
        m1: Graph,
        m2: Graph,
        e1: Embedding,
        e2: Embedding,
        bound: usize,
    ) -> Self {
        AmalgamProblem {
            class,
            rel,
            m0,
            m1,
            m2,
            e1,
            e2,
            bound,
            extra: DEFAULT_EXTRA,
            disjoint: false,
        }
    }

    /// Checks shapes, then (unless `joint`) the amalgam preconditions.
    fn validate(&self, joint: bool) -> Result<()> {
        self.class.validate()?;
        if !self.e1.is_induced(&self.m0, &self.m1) || !self.e2.is_induced(&self.m0, &self.m2) {
            return Err(Error::pre("base maps must be induced embeddings of m0"));
        }
        if self.bound < self.m1.order().max(self.m2.order()) {
            return Err(Error::param(format!(
                "bound {} is below the order of m1 or m2",
                self.bound
            )));
        }
        if self.bound > 64 {
            return Err(Error::OrderTooLarge(self.bound));
        }
        for (name, g) in [("m1", &self.m1), ("m2", &self.m2)] {
            if !self.class.member(g) {
                return Err(Error::pre(format!("{} is not in the class", name)));
            }
        }
        if joint {
            return Ok(());
        }
        if !self.class.member(&self.m0) {
            return Err(Error::pre("m0 is not in the class"));
        }
        if !rel_holds(&self.rel, self.e1.image(), &self.m1)? {
            return Err(Error::pre("m0 is not a strong submodel of m1"));
        }
        if !rel_holds(&self.rel, self.e2.image(), &self.m2)? {
            return Err(Error::pre("m0 is not a strong submodel of m2"));
        }
        Ok(())
    }

    fn rest1(&self) -> Vec<usize> {
        self.m1.vertices().difference(self.e1.image()).iter().collect()
    }

    fn rest2(&self) -> Vec<usize> {
        self.m2.vertices().difference(self.e2.image()).iter().collect()
    }
}

/// Which private vertices of `m2` are glued to private vertices of `m1`.
#[derive(Clone, Debug)]
struct Identification {
    assign: Vec<Option<usize>>,
    /// Map of `m2` into the candidate.
    f2: Vec<usize>,
    core: usize,
}

fn identifications(p: &AmalgamProblem) -> Vec<Identification> {
    let rest1 = p.rest1();
    let rest2 = p.rest2();
    // Landing spot in m1 of each m2 vertex decided so far.
    let mut land: Vec<Option<usize>> = vec![None; p.m2.order()];
    for (i, &v) in p.e2.as_slice().iter().enumerate() {
        land[v] = Some(p.e1.apply(i));
    }
    let mut out = Vec::new();
    let mut assign = Vec::with_capacity(rest2.len());
    collect(p, &rest1, &rest2, &mut land, &mut assign, 0u64, &mut out);
    out.sort_by(|a, b| {
        let count = |x: &Vec<Option<usize>>| x.iter().filter(|s| s.is_some()).count();
        count(a).cmp(&count(b)).then_with(|| a.cmp(b))
    });
    out.into_iter()
        .map(|assign| {
            let mut f2 = vec![0usize; p.m2.order()];
            for (i, &v) in p.e2.as_slice().iter().enumerate() {
                f2[v] = p.e1.apply(i);
            }
            let mut next = p.m1.order();
            for (k, &v) in rest2.iter().enumerate() {
                f2[v] = match assign[k] {
                    Some(w) => w,
                    None => {
                        next += 1;
                        next - 1
                    }
                };
            }
            Identification {
                assign,
                f2,
                core: next,
            }
        })
        .collect()
}

fn collect(
    p: &AmalgamProblem,
    rest1: &[usize],
    rest2: &[usize],
    land: &mut Vec<Option<usize>>,
    assign: &mut Vec<Option<usize>>,
    used: u64,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    let k = assign.len();
    if k == rest2.len() {
        out.push(assign.clone());
        return;
    }
    let v = rest2[k];
    assign.push(None);
    collect(p, rest1, rest2, land, assign, used, out);
    assign.pop();
    if p.disjoint {
        return;
    }
    for &w in rest1 {
        if used >> w & 1 == 1 {
            continue;
        }
        let consistent = (0..p.m2.order()).all(|u| match land[u] {
            Some(x) => p.m1.has_edge(x, w) == p.m2.has_edge(u, v),
            None => true,
        });
        if !consistent {
            continue;
        }
        land[v] = Some(w);
        assign.push(Some(w));
        collect(p, rest1, rest2, land, assign, used | 1 << w, out);
        assign.pop();
        land[v] = None;
    }
}

/// Pairs fixed by `m1` and `m2` for one identification, on `order` vertices.
fn seeded(p: &AmalgamProblem, id: &Identification, order: usize) -> PartialGraph {
    let mut pg = PartialGraph::new(order);
    for u in 0..p.m1.order() {
        for v in u + 1..p.m1.order() {
            pg.decide(u, v, p.m1.has_edge(u, v));
        }
    }
    for u in 0..p.m2.order() {
        for v in u + 1..p.m2.order() {
            pg.decide(id.f2[u], id.f2[v], p.m2.has_edge(u, v));
        }
    }
    pg
}

fn extras_range(p: &AmalgamProblem, core: usize) -> core::ops::RangeInclusive<usize> {
    0..=p.extra.min(p.bound - core)
}

/// Number of candidates in the whole bounded space, counted from the
/// problem alone: for every consistent identification within the bound and
/// every extra count, two to the number of pairs fixed by neither `m1` nor
/// `m2`.
pub fn recount_space(p: &AmalgamProblem) -> u128 {
    let base = p.m0.order();
    let mut total = 0u128;
    for id in identifications(p) {
        if id.core > p.bound {
            continue;
        }
        let glued = id.assign.iter().filter(|a| a.is_some()).count();
        let shared = base + glued;
        let pairs = |n: usize| n * n.saturating_sub(1) / 2;
        let fixed = pairs(p.m1.order()) + pairs(p.m2.order()) - pairs(shared);
        for t in extras_range(p, id.core) {
            total += 1u128 << (pairs(id.core + t) - fixed);
        }
    }
    total
}

struct Dfs<'a> {
    p: &'a AmalgamProblem,
    img1: VertexSet,
    img2: VertexSet,
    pairs: Vec<(usize, usize)>,
    explored: u128,
    pruned: u128,
    nodes: u64,
}

impl Dfs<'_> {
    fn dead(&self, pg: &PartialGraph) -> bool {
        forced_nonmember(&self.p.class, pg)
            || forced_violation(&self.p.rel, pg, self.img1)
            || forced_violation(&self.p.rel, pg, self.img2)
    }

    fn leaf_ok(&self, g: &Graph) -> bool {
        self.p.class.member(g)
            && rel_holds(&self.p.rel, self.img1, g).unwrap_or(false)
            && rel_holds(&self.p.rel, self.img2, g).unwrap_or(false)
    }

    /// Decides `pairs[i..]`; returns the first accepted completion.
    fn go(&mut self, pg: &mut PartialGraph, i: usize) -> Option<Graph> {
        self.nodes += 1;
        let group_done = i == 0 || i == self.pairs.len() || self.pairs[i].1 != self.pairs[i - 1].1;
        if group_done && self.dead(pg) {
            self.pruned += 1u128 << (self.pairs.len() - i);
            return None;
        }
        if i == self.pairs.len() {
            self.explored += 1;
            let g = pg.definite();
            return if self.leaf_ok(&g) { Some(g) } else { None };
        }
        let (u, v) = self.pairs[i];
        for bit in [false, true] {
            pg.decide(u, v, bit);
            if let Some(g) = self.go(pg, i + 1) {
                return Some(g);
            }
        }
        pg.forget(u, v);
        None
    }
}

/// Validated search; see [`search_amalgam`].
pub fn search_amalgam(p: &AmalgamProblem) -> Result<Certificate> {
    p.validate(false)?;
    Ok(run(p, "amalgamate"))
}

pub(crate) fn search_joint(p: &AmalgamProblem, command: &str) -> Result<Certificate> {
    p.validate(true)?;
    Ok(run(p, command))
}

fn run(p: &AmalgamProblem, command: &str) -> Certificate {
    let mut dfs = Dfs {
        p,
        img1: p.m1.vertices(),
        img2: VertexSet::EMPTY,
        pairs: Vec::new(),
        explored: 0,
        pruned: 0,
        nodes: 0,
    };
    let mut found = None;
    'outer: for id in identifications(p) {
        if id.core > p.bound {
            continue;
        }
        for t in extras_range(p, id.core) {
            let order = id.core + t;
            let mut pg = seeded(p, &id, order);
            dfs.img2 = id.f2.iter().copied().collect();
            dfs.pairs = (0..order)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .filter(|&(u, v)| !pg.is_known(u, v))
                .collect();
            if let Some(g) = dfs.go(&mut pg, 0) {
                found = Some((g, Embedding::new(id.f2.clone())));
                break 'outer;
            }
        }
    }
    let mut c = match found {
        Some((graph, f2)) => {
            let mut c = Certificate::new(command, CertificateKind::Witness);
            c.witness = Some(Witness::Amalgam {
                graph,
                f1: Embedding::identity(p.m1.order()),
                f2,
            });
            c.replay = "check the amalgam is in the class, both maps are induced embeddings \
                        agreeing on m0, and both images are strong submodels"
                .into();
            c
        }
        None => {
            let mut c = Certificate::new(command, CertificateKind::BoundedRefutation);
            c.exhaustion = Some(Exhaustion {
                bound: p.bound,
                explored: dfs.explored,
                pruned: dfs.pruned,
            });
            c.replay = "recount the candidate space from the inputs and rerun the search; \
                        explored plus pruned must equal the recount"
                .into();
            c
        }
    };
    c.stats.nodes = dfs.nodes;
    c.add_class(&p.class);
    c.add_relation(&p.rel);
    c.add_graph("m0", &p.m0);
    c.add_graph("m1", &p.m1);
    c.add_graph("m2", &p.m2);
    c.inputs.insert("e1".into(), map_text(&p.e1));
    c.inputs.insert("e2".into(), map_text(&p.e2));
    c.inputs.insert("bound".into(), p.bound.to_string());
    c.inputs.insert("extra".into(), p.extra.to_string());
    c.inputs.insert("disjoint".into(), p.disjoint.to_string());
    c
}

/// Re-checks a certificate produced for `p`: a witness by direct evaluation,
/// a refutation by recounting the space and rerunning the search.
pub fn verify_amalgam_certificate(p: &AmalgamProblem, cert: &Certificate) -> bool {
    match (&cert.witness, &cert.exhaustion) {
        (Some(Witness::Amalgam { graph, f1, f2 }), _) => {
            let fixes_base = (0..p.m0.order()).all(|i| f1.apply(p.e1.apply(i)) == f2.apply(p.e2.apply(i)));
            let meet_ok = !p.disjoint
                || f1.image().intersection(f2.image()) == f1.image_of(p.e1.image());
            graph.order() <= p.bound
                && f1.is_induced(&p.m1, graph)
                && f2.is_induced(&p.m2, graph)
                && fixes_base
                && meet_ok
                && p.class.member(graph)
                && rel_holds(&p.rel, f1.image(), graph).unwrap_or(false)
                && rel_holds(&p.rel, f2.image(), graph).unwrap_or(false)
        }
        (None, Some(ex)) => {
            let rerun = run(p, &cert.command);
            ex.bound == p.bound
                && ex.explored + ex.pruned == recount_space(p)
                && rerun.exhaustion.as_ref() == Some(ex)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_complete, gen_cycle, gen_edgeless, gen_path};
    use crate::graph::{amalgam_disjoint_over, disjoint_union};

    fn star(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn k1() -> Graph {
        gen_complete(1).unwrap()
    }

    #[test]
    fn trivial_amalgam_is_base() {
        let m0 = gen_path(3).unwrap();
        let p = AmalgamProblem::new(
            ClassSpec::all(),
            SubmodelRelation::InducedSub,
            m0.clone(),
            m0.clone(),
            m0.clone(),
            Embedding::identity(3),
            Embedding::identity(3),
            3,
        );
        let c = search_amalgam(&p).unwrap();
        assert_eq!(c.kind, CertificateKind::Witness);
        match &c.witness {
            Some(Witness::Amalgam { graph, .. }) => assert_eq!(graph, &m0),
            other => panic!("{:?}", other),
        }
        assert!(verify_amalgam_certificate(&p, &c));
    }

    #[test]
    fn component_amalgam_is_pushout() {
        let m0 = k1();
        let m1 = gen_path(3).unwrap();
        let m2 = gen_cycle(4).unwrap();
        let p = AmalgamProblem::new(
            ClassSpec::all(),
            SubmodelRelation::Component {
                strict_attach: false,
            },
            m0,
            m1.clone(),
            m2.clone(),
            Embedding::new(vec![1]),
            Embedding::new(vec![0]),
            12,
        );
        let c = search_amalgam(&p).unwrap();
        let push = amalgam_disjoint_over(&m1, &[1], &m2, &[0]).unwrap();
        assert_eq!(
            c.witness,
            Some(Witness::Amalgam {
                graph: push.graph,
                f1: push.f1,
                f2: push.f2
            })
        );
        assert!(verify_amalgam_certificate(&p, &c));
    }

    #[test]
    fn compmax_triangle_path_refutes() {
        let p = AmalgamProblem::new(
            ClassSpec::CompMax { n: 3 },
            SubmodelRelation::InducedSub,
            k1(),
            gen_complete(3).unwrap(),
            star(3),
            Embedding::new(vec![0]),
            Embedding::new(vec![0]),
            7,
        );
        let c = search_amalgam(&p).unwrap();
        assert_eq!(c.kind, CertificateKind::BoundedRefutation);
        let ex = c.exhaustion.unwrap();
        assert_eq!(ex.explored + ex.pruned, recount_space(&p));
        assert!(verify_amalgam_certificate(&p, &c));
    }

    #[test]
    fn empty_inputs() {
        let p = AmalgamProblem::new(
            ClassSpec::Forb {
                family: vec![gen_complete(1).unwrap(), gen_edgeless(2).unwrap()],
            },
            SubmodelRelation::InducedSub,
            Graph::empty(),
            Graph::empty(),
            Graph::empty(),
            Embedding::identity(0),
            Embedding::identity(0),
            2,
        );
        // Empty graphs are members, so the empty amalgam is a witness.
        assert_eq!(search_amalgam(&p).unwrap().kind, CertificateKind::Witness);
        let mut q = p.clone();
        q.class = ClassSpec::NotAllEmbed {
            family: vec![Graph::empty()],
        };
        // The empty graph embeds everywhere: the class is empty, m1 fails.
        assert!(search_amalgam(&q).is_err());
    }

    #[test]
    fn space_count_by_hand() {
        // m0 = K1, m1 = m2 = K2: identifications none or the private
        // vertices glued (edge agrees). Bound 3, extra 2.
        let k2 = gen_complete(2).unwrap();
        let mut p = AmalgamProblem::new(
            ClassSpec::all(),
            SubmodelRelation::InducedSub,
            k1(),
            k2.clone(),
            k2,
            Embedding::new(vec![0]),
            Embedding::new(vec![0]),
            3,
        );
        p.extra = 2;
        // none: core 3, t = 0, one free pair (1,2): 2
        // glued: core 2, t in 0..=1: 1 + 2^2 = 5
        assert_eq!(recount_space(&p), 7);
    }

    #[test]
    fn preconditions_are_input_errors() {
        let p = AmalgamProblem::new(
            ClassSpec::CompMax { n: 2 },
            SubmodelRelation::InducedSub,
            k1(),
            gen_complete(3).unwrap(),
            k1(),
            Embedding::new(vec![0]),
            Embedding::new(vec![0]),
            5,
        );
        assert!(search_amalgam(&p).is_err());
        let q = AmalgamProblem::new(
            ClassSpec::all(),
            SubmodelRelation::InducedSub,
            gen_complete(2).unwrap(),
            gen_edgeless(2).unwrap(),
            gen_complete(2).unwrap(),
            Embedding::identity(2),
            Embedding::identity(2),
            5,
        );
        assert!(search_amalgam(&q).is_err());
    }

    #[test]
    fn disjoint_flag_forbids_gluing() {
        let m = disjoint_union(&k1(), &k1()).unwrap().graph;
        let mut p = AmalgamProblem::new(
            ClassSpec::CompMax { n: 1 },
            SubmodelRelation::InducedSub,
            k1(),
            m.clone(),
            m,
            Embedding::new(vec![0]),
            Embedding::new(vec![0]),
            2,
        );
        // Gluing the two private vertices gives a 2-vertex witness.
        assert_eq!(search_amalgam(&p).unwrap().kind, CertificateKind::Witness);
        p.disjoint = true;
        assert_eq!(search_amalgam(&p).unwrap().kind, CertificateKind::BoundedRefutation);
    }
}
