//! Named scenarios: deterministic bundles of graphs, class, relation and the
//! certificate kind they are expected to produce.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{gen_complete, gen_cycle, gen_edgeless, gen_example_n, gen_path};
use crate::class::ClassSpec;
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Embedding, Graph, VertexSet};
use crate::lab::{AmalgamProblem, CertificateKind, DEFAULT_EXTRA};
use crate::relations::SubmodelRelation;

pub const SCENARIO_NAMES: [&str; 7] = [
    "compmax",
    "compcond",
    "notallembed",
    "notboth",
    "lst-growth",
    "limit-smoothness",
    "count-chain",
];

/// Optional overrides; unset fields take the scenario defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScenarioParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub mu: Option<usize>,
    pub kappa: Option<usize>,
    pub m: Option<usize>,
    pub bound: Option<usize>,
    pub extra: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScenarioBody {
    Amalgam(AmalgamProblem),
    /// Minimal strong submodels of `host` over `base`.
    Closure {
        host: Graph,
        base: VertexSet,
        rel: SubmodelRelation,
        class: ClassSpec,
    },
    LimitStandIn { forbidden: Graph, kappa: usize },
    /// Every `CountPreserving` pair inside `host` is an equality.
    CountChain { forbidden: Graph, host: Graph },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub name: String,
    /// Resolved parameters, defaults included.
    pub params: BTreeMap<String, usize>,
    pub body: ScenarioBody,
    pub expected: CertificateKind,
}

impl Scenario {
    /// Every graph of the bundle with a file stem, in a fixed order.
    pub fn graphs(&self) -> Vec<(String, Graph)> {
        let mut out = Vec::new();
        let mut push = |name: &str, g: &Graph| out.push((name.to_string(), g.clone()));
        match &self.body {
            ScenarioBody::Amalgam(p) => {
                push("m0", &p.m0);
                push("m1", &p.m1);
                push("m2", &p.m2);
                for (i, g) in p.class.graphs().into_iter().enumerate() {
                    push(&format!("class{}", i), g);
                }
                if let Some(g) = p.rel.forbidden() {
                    push("forbidden", g);
                }
            }
            ScenarioBody::Closure { host, rel, .. } => {
                push("host", host);
                if let Some(g) = rel.forbidden() {
                    push("forbidden", g);
                }
            }
            ScenarioBody::LimitStandIn { forbidden, .. } => push("forbidden", forbidden),
            ScenarioBody::CountChain { forbidden, host } => {
                push("host", host);
                push("forbidden", forbidden);
            }
        }
        out
    }
}

fn get(value: Option<usize>, default: usize, name: &str, min: usize) -> Result<usize> {
    let v = value.unwrap_or(default);
    if v < min {
        return Err(Error::param(format!("{} must be at least {}, got {}", name, min, v)));
    }
    Ok(v)
}

fn amalgam(
    class: ClassSpec,
    rel: SubmodelRelation,
    parts: (Graph, Graph, Graph),
    maps: (Vec<usize>, Vec<usize>),
    bound: usize,
    extra: usize,
) -> ScenarioBody {
    let mut p = AmalgamProblem::new(
        class,
        rel,
        parts.0,
        parts.1,
        parts.2,
        Embedding::new(maps.0),
        Embedding::new(maps.1),
        bound,
    );
    p.extra = extra;
    ScenarioBody::Amalgam(p)
}

pub fn build_scenario(name: &str, params: &ScenarioParams) -> Result<Scenario> {
    let mut resolved = BTreeMap::new();
    let mut keep = |key: &str, v: usize| {
        resolved.insert(key.to_string(), v);
        v
    };
    let extra = keep("extra", get(params.extra, DEFAULT_EXTRA, "extra", 0)?);
    let (body, expected) = match name {
        "compmax" => {
            // a = 0 in both; the triangle and the path b'-a-c' share only a.
            let n = keep("n", get(params.n, 3, "n", 3)?);
            let bound = keep("bound", get(params.bound, 2 * n + 1, "bound", n)?);
            let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
            let star = Graph::from_edges(n, &edges)?;
            (
                amalgam(
                    ClassSpec::CompMax { n },
                    SubmodelRelation::InducedSub,
                    (gen_complete(1)?, gen_complete(n)?, star),
                    (vec![0], vec![0]),
                    bound,
                    extra,
                ),
                CertificateKind::CompleteRefutation,
            )
        }
        "compcond" => {
            let k = keep("k", get(params.k, 2, "k", 2)?);
            let n = keep("n", get(params.n, 2, "n", 1)?);
            let bound = keep("bound", get(params.bound, 9, "bound", n + 1)?);
            (
                amalgam(
                    ClassSpec::CompCond { k, n },
                    SubmodelRelation::Component {
                        strict_attach: false,
                    },
                    (gen_complete(1)?, gen_path(n + 1)?, gen_edgeless(k)?),
                    (vec![0], vec![0]),
                    bound,
                    extra,
                ),
                CertificateKind::BoundedRefutation,
            )
        }
        "notallembed" => {
            let bound = keep("bound", get(params.bound, 15, "bound", 10)?);
            let k3 = gen_complete(3)?;
            let c5 = gen_cycle(5)?;
            let c7 = gen_cycle(7)?;
            let m1 = disjoint_union(&k3, &c5)?.graph;
            let m2 = disjoint_union(&k3, &c7)?.graph;
            (
                amalgam(
                    ClassSpec::NotAllEmbed {
                        family: vec![k3.clone(), c5, c7],
                    },
                    SubmodelRelation::InducedSub,
                    (k3, m1, m2),
                    (vec![0, 1, 2], vec![0, 1, 2]),
                    bound,
                    extra,
                ),
                CertificateKind::BoundedRefutation,
            )
        }
        "notboth" => {
            let bound = keep("bound", get(params.bound, 8, "bound", 2)?);
            (
                amalgam(
                    ClassSpec::NotBothTypes {
                        base: gen_complete(1)?,
                        p: vec![true],
                        q: vec![false],
                    },
                    SubmodelRelation::InducedSub,
                    (gen_complete(1)?, gen_complete(2)?, gen_edgeless(2)?),
                    (vec![0], vec![0]),
                    bound,
                    extra,
                ),
                CertificateKind::BoundedRefutation,
            )
        }
        "lst-growth" => {
            let n = keep("n", get(params.n, 2, "n", 1)?);
            let mu = keep("mu", get(params.mu, 8, "mu", n)?);
            // Edgeless 2n+1 exceeds every independent set of the host by one.
            let g = gen_edgeless(2 * n + 1)?;
            (
                ScenarioBody::Closure {
                    host: gen_example_n(mu, n)?,
                    base: VertexSet::full(n),
                    rel: SubmodelRelation::NoAdd {
                        forbidden: g.clone(),
                        size: n,
                    },
                    class: ClassSpec::Forb { family: vec![g] },
                },
                CertificateKind::Witness,
            )
        }
        "limit-smoothness" => {
            let kappa = keep("kappa", get(params.kappa, 3, "kappa", 1)?);
            (
                ScenarioBody::LimitStandIn {
                    forbidden: gen_edgeless(kappa + 2)?,
                    kappa,
                },
                CertificateKind::Witness,
            )
        }
        "count-chain" => {
            let m = keep("m", get(params.m, 4, "m", 1)?);
            (
                ScenarioBody::CountChain {
                    forbidden: gen_edgeless(m + 1)?,
                    host: gen_edgeless(m)?,
                },
                CertificateKind::Pass,
            )
        }
        other => return Err(Error::UnknownScenario(other.to_string())),
    };
    if !matches!(body, ScenarioBody::Amalgam(_)) {
        resolved.remove("extra");
    }
    Ok(Scenario {
        name: name.to_string(),
        params: resolved,
        body,
        expected,
    })
}
