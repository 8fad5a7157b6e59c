//! Axiom checks, amalgam and joint-embedding searches, and the certificates
//! they emit.

mod amalgam;
mod axioms;
mod jep;
mod lst;
mod partial;
mod remarks;
mod scenarios;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::Serialize;

use crate::class::ClassSpec;
use crate::graph::{Embedding, Graph, VertexSet};
use crate::relations::{AddWitness, SubmodelRelation};

pub use amalgam::{recount_space, search_amalgam, verify_amalgam_certificate, AmalgamProblem};
pub use axioms::{
    axiom_suite, axiom_suite_for_host, check_chain_union, check_coherence, check_smoothness,
    check_transitivity, suite_certificate, ChainWitness, CheckTally, CoherenceMode, SuiteTally,
    MAX_SUITE_ORDER,
};
pub use jep::{jep_check, JepStrategy};
pub use lst::{
    limit_standin_smoothness, minimal_certificate, minimal_strong_submodels, MinimalSubmodels,
};
pub use remarks::{
    check_joinability, check_remark_homogeneous, remark_suite, JoinWitness, RemarkOutcome,
    NO_VERTICES_NOTE,
};
pub use scenarios::{certify_ap_failure, run_scenario};

/// Default extra-vertex budget of the amalgam search.
pub const DEFAULT_EXTRA: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Witness,
    BoundedRefutation,
    CompleteRefutation,
    Pass,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::Witness => "witness",
            CertificateKind::BoundedRefutation => "bounded-refutation",
            CertificateKind::CompleteRefutation => "complete-refutation",
            CertificateKind::Pass => "pass",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            CertificateKind::Witness,
            CertificateKind::BoundedRefutation,
            CertificateKind::CompleteRefutation,
            CertificateKind::Pass,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
    }
}

impl core::fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What an exhaustive search covered. `explored` counts complete candidates
/// evaluated, `pruned` counts candidates discarded in bulk by a sound
/// three-valued test; together they cover the whole space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Exhaustion {
    pub bound: usize,
    pub explored: u128,
    pub pruned: u128,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Left empty by the core so reports stay reproducible.
    pub elapsed_ms: Option<u64>,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// Sets `m0 ⊆ m1 ⊆ m2` of `host` breaking a triple axiom.
    Triple {
        check: String,
        host: Graph,
        m0: VertexSet,
        m1: VertexSet,
        m2: VertexSet,
    },
    Chain {
        check: String,
        host: Graph,
        chain: Vec<VertexSet>,
        target: Option<VertexSet>,
    },
    Amalgam {
        graph: Graph,
        f1: Embedding,
        f2: Embedding,
    },
    /// `N` is `M` plus vertices; the proper parts of `M` relate to `N` and
    /// `M` does not.
    LimitStandIn {
        m: Graph,
        n: Graph,
        proper_subsets: usize,
        addition: AddWitness,
    },
    MinimalSets {
        host: Graph,
        base: VertexSet,
        sets: Vec<VertexSet>,
    },
    Homogeneity {
        graph: Graph,
        size: usize,
    },
    Joinability {
        pairs: Vec<JoinWitness>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub kind: CertificateKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustion: Option<Exhaustion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completeness_argument: Option<String>,
    pub notes: Vec<String>,
    pub replay: String,
    pub stats: Stats,
    pub seed: Option<u64>,
}

impl Certificate {
    pub fn new(command: &str, kind: CertificateKind) -> Self {
        Certificate {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            kind,
            witness: None,
            exhaustion: None,
            completeness_argument: None,
            notes: Vec::new(),
            replay: String::new(),
            stats: Stats::default(),
            seed: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<String>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    pub(crate) fn add_graph(&mut self, key: &str, g: &Graph) {
        self.inputs.insert(key.to_string(), g.to_text(key));
    }

    pub(crate) fn add_class(&mut self, class: &ClassSpec) {
        let names: Vec<String> = (0..class.graphs().len()).map(|i| format!("C{}", i)).collect();
        self.inputs.insert("class".into(), class.literal(&names));
        for (name, g) in names.iter().zip(class.graphs()) {
            self.inputs.insert(format!("class.{}", name), g.to_text(name));
        }
    }

    pub(crate) fn add_relation(&mut self, rel: &SubmodelRelation) {
        self.inputs.insert("relation".into(), rel.literal("R0"));
        if let Some(g) = rel.forbidden() {
            self.inputs.insert("relation.R0".into(), g.to_text("R0"));
        }
    }
}

/// The note attached to every chain-axiom certificate.
pub const FINITE_CHAIN_NOTE: &str = "finite chains contain their union, so the chain axioms are \
checked on finite filtrations only; limit failures are represented by the limit stand-in";

pub(crate) fn set_text(s: VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub(crate) fn map_text(e: &Embedding) -> String {
    let items: Vec<String> = e.as_slice().iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}
