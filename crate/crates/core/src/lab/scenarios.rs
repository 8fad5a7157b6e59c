//! Running named scenarios.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::amalgam::search_amalgam;
use super::lst::{limit_standin_smoothness, minimal_certificate};
use super::{Certificate, CertificateKind};
use crate::class::ClassSpec;
use crate::constructions::{build_scenario, Scenario, ScenarioBody, ScenarioParams};
use crate::error::Result;
use crate::graph::Graph;
use crate::relations::{rel_count, SubmodelRelation};

/// Builds and runs a named amalgamation scenario.
pub fn certify_ap_failure(name: &str, params: &ScenarioParams) -> Result<Certificate> {
    run_scenario(&build_scenario(name, params)?)
}

pub fn run_scenario(s: &Scenario) -> Result<Certificate> {
    let mut c = match &s.body {
        ScenarioBody::Amalgam(p) => {
            let mut c = search_amalgam(p)?;
            c.command = "scenario".into();
            let union_order = p.m1.order() + p.m2.order() - p.m0.order();
            if s.name == "compmax"
                && c.kind == CertificateKind::BoundedRefutation
                && p.bound >= union_order
            {
                c.kind = CertificateKind::CompleteRefutation;
                c.completeness_argument = Some(format!(
                    "the class (components of at most {n} vertices) is closed under induced \
                     subgraphs and the induced relation always holds, so any amalgam restricts \
                     to one on the union of the two images; that union has no extra vertices \
                     and at most {u} <= bound = {b} vertices, and every identification with \
                     every edge pattern of that size was covered",
                    n = p.m1.order(),
                    u = union_order,
                    b = p.bound
                ));
            }
            if s.name == "compcond" {
                let mut probe = p.clone();
                probe.rel = SubmodelRelation::InducedSub;
                let other = search_amalgam(&probe)?;
                c.notes.push(format!(
                    "under the component relation: {}; under the induced relation the same \
                     instance gives: {}",
                    c.kind, other.kind
                ));
            }
            c
        }
        ScenarioBody::Closure {
            host,
            base,
            rel,
            class,
        } => {
            let mut c = minimal_certificate(host, *base, rel, class)?;
            c.command = "scenario".into();
            c
        }
        ScenarioBody::LimitStandIn { forbidden, kappa } => {
            let mut c = limit_standin_smoothness(forbidden, *kappa)?;
            c.command = "scenario".into();
            c
        }
        ScenarioBody::CountChain { forbidden, host } => count_chain(forbidden, host),
    };
    c.inputs.insert("scenario".into(), s.name.clone());
    for (k, v) in &s.params {
        c.inputs.insert(format!("param.{}", k), v.to_string());
    }
    c.inputs
        .insert("expected".into(), s.expected.as_str().to_string());
    let flags: Vec<String> = s.params.iter().map(|(k, v)| format!(" --{} {}", k, v)).collect();
    c.replay = format!("aeclab scenario {}{}; {}", s.name, flags.concat(), c.replay);
    Ok(c)
}

/// Every count-preserving pair `M ⊆ N` inside `host` has `M = N`, so finite
/// chains under this relation are stationary.
fn count_chain(forbidden: &Graph, host: &Graph) -> Certificate {
    let full = host.vertices();
    let (mut pairs, mut related, mut moving) = (0u64, 0u64, 0u64);
    for n in full.subsets() {
        let (sub, back) = host.induced_unchecked(n);
        for m in n.subsets() {
            pairs += 1;
            let inner = back
                .iter()
                .enumerate()
                .filter(|(_, v)| m.contains(**v))
                .map(|(i, _)| i)
                .collect();
            if rel_count(inner, &sub, forbidden) {
                related += 1;
                moving += (m != n) as u64;
            }
        }
    }
    let kind = if moving == 0 {
        CertificateKind::Pass
    } else {
        CertificateKind::Witness
    };
    let rel = SubmodelRelation::CountPreserving {
        forbidden: forbidden.clone(),
    };
    let mut c = Certificate::new("scenario", kind)
        .note(super::FINITE_CHAIN_NOTE)
        .note(format!(
            "{} nested pairs, {} related, {} related with M != N",
            pairs, related, moving
        ))
        .note("finite chains under this relation are stationary; the union-is-everything filtration needs an infinite host");
    c.add_relation(&rel);
    c.add_class(&ClassSpec::Forb {
        family: alloc::vec![forbidden.clone()],
    });
    c.add_graph("host", host);
    c.stats.nodes = pairs;
    c.replay = "evaluate the relation on every nested pair of the host".into();
    c
}
