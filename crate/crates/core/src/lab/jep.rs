//! Joint embeddings: fixed constructions or a bounded search.

use alloc::string::ToString;

use serde::Serialize;

use super::amalgam::{search_joint, AmalgamProblem};
use super::{Certificate, CertificateKind, Exhaustion, Witness, DEFAULT_EXTRA};
use crate::class::ClassSpec;
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Embedding, Graph};
use crate::relations::{rel_holds, SubmodelRelation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JepStrategy {
    /// Disjoint union.
    Disjoint,
    /// Disjoint union plus every edge between the two parts.
    Join,
    /// Bounded amalgam search over the empty graph.
    Search { bound: usize },
}

impl JepStrategy {
    fn name(self) -> &'static str {
        match self {
            JepStrategy::Disjoint => "disjoint",
            JepStrategy::Join => "join",
            JepStrategy::Search { .. } => "search",
        }
    }
}

pub fn jep_check(
    class: &ClassSpec,
    rel: &SubmodelRelation,
    m: &Graph,
    n: &Graph,
    strategy: JepStrategy,
) -> Result<Certificate> {
    class.validate()?;
    if !class.member(m) || !class.member(n) {
        return Err(Error::pre("both graphs must be in the class"));
    }
    let mut cert = match strategy {
        JepStrategy::Search { bound } => {
            let mut p = AmalgamProblem::new(
                class.clone(),
                rel.clone(),
                Graph::empty(),
                m.clone(),
                n.clone(),
                Embedding::identity(0),
                Embedding::identity(0),
                bound,
            );
            p.extra = DEFAULT_EXTRA;
            let mut c = search_joint(&p, "jep")?;
            for key in ["m0", "e1", "e2", "disjoint"] {
                c.inputs.remove(key);
            }
            c
        }
        JepStrategy::Disjoint | JepStrategy::Join => {
            let mut am = disjoint_union(m, n)?;
            if strategy == JepStrategy::Join {
                for u in 0..m.order() {
                    for v in 0..n.order() {
                        am.graph.set_edge(u, m.order() + v, true);
                    }
                }
            }
            let ok = class.member(&am.graph)
                && rel_holds(rel, am.f1.image(), &am.graph)?
                && rel_holds(rel, am.f2.image(), &am.graph)?;
            if ok {
                let mut c = Certificate::new("jep", CertificateKind::Witness);
                c.witness = Some(Witness::Amalgam {
                    graph: am.graph,
                    f1: am.f1,
                    f2: am.f2,
                });
                c.replay = "check the joint graph is in the class and both images are \
                            strong submodels"
                    .into();
                c
            } else {
                let mut c = Certificate::new("jep", CertificateKind::BoundedRefutation)
                    .note("only the construction of this strategy was examined; the joint \
                           embedding property itself is not refuted");
                c.exhaustion = Some(Exhaustion {
                    bound: am.graph.order(),
                    explored: 1,
                    pruned: 0,
                });
                c.replay = "rebuild the construction and re-evaluate".into();
                c
            }
        }
    };
    cert.stats.nodes = cert.stats.nodes.max(1);
    cert.inputs.insert("strategy".into(), strategy.name().to_string());
    cert.add_class(class);
    cert.add_relation(rel);
    cert.add_graph("m", m);
    cert.add_graph("n", n);
    cert.inputs.remove("m1");
    cert.inputs.remove("m2");
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_complete, gen_edgeless, gen_path};
    use alloc::vec;

    #[test]
    fn forbcon_disjoint_union() {
        let g = gen_complete(3).unwrap();
        let class = ClassSpec::ForbCon { forbidden: g.clone() };
        let rel = SubmodelRelation::ForbConClique { forbidden: g };
        let c = jep_check(&class, &rel, &gen_path(3).unwrap(), &gen_complete(2).unwrap(), JepStrategy::Disjoint).unwrap();
        assert_eq!(c.kind, CertificateKind::Witness);
    }

    #[test]
    fn noadd_join() {
        let g = gen_edgeless(7).unwrap();
        let class = ClassSpec::Forb { family: vec![g.clone()] };
        let rel = SubmodelRelation::NoAdd { forbidden: g, size: 2 };
        let e3 = gen_edgeless(3).unwrap();
        let c = jep_check(&class, &rel, &e3, &e3, JepStrategy::Join).unwrap();
        assert_eq!(c.kind, CertificateKind::Witness);
        // The disjoint union adds independent vertices over any pair.
        let d = jep_check(&class, &rel, &e3, &e3, JepStrategy::Disjoint).unwrap();
        assert_eq!(d.kind, CertificateKind::BoundedRefutation);
        let s = jep_check(&class, &rel, &e3, &e3, JepStrategy::Search { bound: 6 }).unwrap();
        assert_eq!(s.kind, CertificateKind::Witness);
    }

    #[test]
    fn empty_graphs() {
        let e = Graph::empty();
        let c = jep_check(&ClassSpec::all(), &SubmodelRelation::InducedSub, &e, &e, JepStrategy::Disjoint).unwrap();
        match c.witness {
            Some(Witness::Amalgam { graph, .. }) => assert!(graph.is_empty()),
            other => panic!("{:?}", other),
        }
    }
}
