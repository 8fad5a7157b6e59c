//! The homogeneity remark and the joinability conditions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use serde::Serialize;

use super::{Certificate, CertificateKind, Witness};
use crate::error::{Error, Result};
use crate::graph::{canonical_key, disjoint_union, embeds, Graph, VertexSet};

pub const NO_VERTICES_NOTE: &str = "the stated conclusion reads \"complete or has no vertices\"; \
the tested conclusion is \"complete or edgeless\", since edgeless graphs with vertices satisfy \
the hypothesis";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RemarkOutcome {
    /// Over every `n`-set, all outside vertices have the same adjacency
    /// pattern.
    pub hypothesis: bool,
    pub complete: bool,
    pub edgeless: bool,
}

impl RemarkOutcome {
    pub fn evaluate(g: &Graph, n: usize) -> Result<Self> {
        if n == 0 || n + 2 > g.order() {
            return Err(Error::param(format!(
                "need 1 <= n <= |g| - 2, got n = {} for |g| = {}",
                n,
                g.order()
            )));
        }
        let hypothesis = g.vertices().subsets_of_size(n).all(|a| {
            let mut outside = g.vertices().difference(a).iter();
            let first = outside.next().map(|x| g.neighbors(x).intersection(a));
            outside.all(|y| Some(g.neighbors(y).intersection(a)) == first)
        });
        Ok(RemarkOutcome {
            hypothesis,
            complete: g.is_complete(),
            edgeless: g.edge_count() == 0,
        })
    }

    pub fn holds(&self) -> bool {
        !self.hypothesis || self.complete || self.edgeless
    }

    /// Hypothesis true for a graph with vertices that is edgeless but not
    /// complete: where the literal wording and the tested one part.
    pub fn wording_gap(&self) -> bool {
        self.hypothesis && self.edgeless && !self.complete
    }
}

pub fn check_remark_homogeneous(g: &Graph, n: usize) -> Result<Certificate> {
    let out = RemarkOutcome::evaluate(g, n)?;
    let kind = if out.holds() {
        CertificateKind::Pass
    } else {
        CertificateKind::Witness
    };
    let mut c = Certificate::new("remark-homogeneous", kind).note(NO_VERTICES_NOTE);
    c.notes.push(format!(
        "hypothesis: {}, complete: {}, edgeless: {}",
        out.hypothesis, out.complete, out.edgeless
    ));
    if !out.hypothesis {
        c.notes.push("hypothesis fails; the implication holds vacuously".into());
    }
    if out.wording_gap() {
        c.notes.push("edgeless graph with vertices satisfies the hypothesis".into());
    }
    if !out.holds() {
        c.witness = Some(Witness::Homogeneity {
            graph: g.clone(),
            size: n,
        });
    }
    c.add_graph("g", g);
    c.inputs.insert("n".into(), n.to_string());
    c.stats.nodes = 1;
    c.replay = "compare adjacency patterns of outside vertices over every n-set".into();
    Ok(c)
}

/// Every graph of `graphs` with every admissible `n`.
pub fn remark_suite(graphs: &[Graph]) -> Certificate {
    let (mut instances, mut hyp, mut gaps) = (0u64, 0u64, 0u64);
    let mut counterexample = None;
    for g in graphs {
        for n in 1..=g.order().saturating_sub(2) {
            let out = RemarkOutcome::evaluate(g, n).expect("n in range");
            instances += 1;
            hyp += out.hypothesis as u64;
            gaps += out.wording_gap() as u64;
            if !out.holds() && counterexample.is_none() {
                counterexample = Some(Witness::Homogeneity {
                    graph: g.clone(),
                    size: n,
                });
            }
        }
    }
    let kind = if counterexample.is_none() {
        CertificateKind::Pass
    } else {
        CertificateKind::Witness
    };
    let mut c = Certificate::new("remark-homogeneous", kind).note(NO_VERTICES_NOTE);
    c.notes.push(format!(
        "{} graphs, {} instances, {} satisfy the hypothesis, {} are edgeless graphs with vertices",
        graphs.len(),
        instances,
        hyp,
        gaps
    ));
    c.witness = counterexample;
    c.stats.nodes = instances;
    c.replay = "re-evaluate the hypothesis and conclusion for each instance".into();
    c
}

/// A cross-edge pattern for one pair of pieces. `cross` holds
/// `(i, j)`: the `i`-th vertex of `left` joined to the `j`-th of `right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinWitness {
    pub left: VertexSet,
    pub right: VertexSet,
    pub found: bool,
    pub cross: Vec<(usize, usize)>,
}

/// Induced subgraphs of `g` with `1..=n` vertices, one per isomorphism
/// class, each given by its first vertex set in canonical order.
fn pieces(g: &Graph, n: usize) -> Vec<VertexSet> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 1..=n.min(g.order()) {
        for s in g.vertices().subsets_of_size(k) {
            if seen.insert(canonical_key(&g.induced_unchecked(s).0)) {
                out.push(s);
            }
        }
    }
    out
}

fn join_pair(g: &Graph, left: VertexSet, right: VertexSet) -> JoinWitness {
    let g1 = g.induced_unchecked(left).0;
    let g2 = g.induced_unchecked(right).0;
    let (k1, k2) = (g1.order(), g2.order());
    let base = disjoint_union(&g1, &g2).expect("small").graph;
    let v1 = VertexSet::full(k1);
    let v2 = VertexSet::full(k1 + k2).difference(v1);
    for mask in 0u64..1 << (k1 * k2) {
        let mut g3 = base.clone();
        let mut cross = Vec::new();
        for i in 0..k1 {
            for j in 0..k2 {
                if mask >> (i * k2 + j) & 1 == 1 {
                    g3.set_edge(i, k1 + j, true);
                    cross.push((i, j));
                }
            }
        }
        let blocked = |part: VertexSet, other: VertexSet| {
            other
                .iter()
                .all(|v| !embeds(&g3.induced_unchecked(part.with(v)).0, g))
        };
        if blocked(v2, v1) && blocked(v1, v2) {
            return JoinWitness {
                left,
                right,
                found: true,
                cross,
            };
        }
    }
    JoinWitness {
        left,
        right,
        found: false,
        cross: Vec::new(),
    }
}

/// For every pair of pieces of `g` with at most `n` vertices, looks for
/// cross edges such that no vertex of either part completes the other part
/// to a graph embeddable in `g`.
pub fn check_joinability(g: &Graph, n: usize) -> Result<Certificate> {
    if n == 0 {
        return Err(Error::param("joinability needs n >= 1"));
    }
    let ps = pieces(g, n);
    let mut pairs = Vec::new();
    for (i, &a) in ps.iter().enumerate() {
        for &b in &ps[i..] {
            pairs.push(join_pair(g, a, b));
        }
    }
    let failing = pairs.iter().filter(|p| !p.found).count();
    let kind = if failing == 0 {
        CertificateKind::Pass
    } else {
        CertificateKind::Witness
    };
    let mut c = Certificate::new("joinability", kind);
    c.notes.push(format!(
        "{} piece classes, {} pairs, {} without a joining pattern",
        ps.len(),
        pairs.len(),
        failing
    ));
    c.stats.nodes = pairs.len() as u64;
    pairs.sort_by_key(|p| p.found);
    c.witness = Some(Witness::Joinability { pairs });
    c.add_graph("g", g);
    c.inputs.insert("n".into(), n.to_string());
    c.replay = "rebuild each joined graph and test the one-vertex extensions against g".into();
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_complete, gen_edgeless, gen_path};

    #[test]
    fn remark_examples() {
        let k4 = RemarkOutcome::evaluate(&gen_complete(4).unwrap(), 1).unwrap();
        assert!(k4.hypothesis && k4.complete);
        let e4 = RemarkOutcome::evaluate(&gen_edgeless(4).unwrap(), 1).unwrap();
        assert!(e4.hypothesis && e4.wording_gap());
        let p3 = RemarkOutcome::evaluate(&gen_path(3).unwrap(), 1).unwrap();
        assert!(!p3.hypothesis && p3.holds());
        let c = check_remark_homogeneous(&gen_edgeless(4).unwrap(), 1).unwrap();
        assert_eq!(c.kind, CertificateKind::Pass);
        assert!(c.notes.iter().any(|n| n.contains("has no vertices")));
        assert!(check_remark_homogeneous(&gen_path(3).unwrap(), 2).is_err());
        assert!(check_remark_homogeneous(&gen_path(3).unwrap(), 0).is_err());
    }

    #[test]
    fn joinability_examples() {
        for n in 1..=3 {
            let c = check_joinability(&gen_edgeless(2 * n + 1).unwrap(), n).unwrap();
            assert_eq!(c.kind, CertificateKind::Pass, "n = {}", n);
        }
        let k2 = check_joinability(&gen_complete(2).unwrap(), 1).unwrap();
        assert_eq!(k2.kind, CertificateKind::Pass);
        assert!(check_joinability(&gen_complete(2).unwrap(), 0).is_err());
    }

    #[test]
    fn joinability_can_fail() {
        // P3 holds both an edge and a non-edge, so any two vertices embed.
        let p3 = gen_path(3).unwrap();
        let c = check_joinability(&p3, 1).unwrap();
        assert_eq!(c.kind, CertificateKind::Witness);
    }
}
