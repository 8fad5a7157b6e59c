//! Finite analogues of the AEC axioms: single-instance checks and an
//! exhaustive suite over all nested sets of a host.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use super::{set_text, Certificate, CertificateKind, Witness, FINITE_CHAIN_NOTE};
use crate::class::ClassSpec;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::relations::{rel_holds, SubmodelRelation};

/// Largest host the suite tabulates (two set indices per table entry).
pub const MAX_SUITE_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoherenceMode {
    Standard,
    Strong,
}

/// Nested vertex sets of a host; the target defaults to the whole host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainWitness {
    pub chain: Vec<VertexSet>,
    pub target: Option<VertexSet>,
}

impl ChainWitness {
    pub fn new(chain: Vec<VertexSet>, target: Option<VertexSet>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::pre("a chain needs at least one member"));
        }
        for w in chain.windows(2) {
            if !(w[0].is_subset(w[1]) && w[0] != w[1]) {
                return Err(Error::pre("chain members must be strictly increasing"));
            }
        }
        Ok(ChainWitness { chain, target })
    }

    pub fn union(&self) -> VertexSet {
        *self.chain.last().expect("nonempty chain")
    }
}

/// `rel(M, N)` for `M = host[m]`, `N = host[n]`, `m ⊆ n`.
fn related(rel: &SubmodelRelation, host: &Graph, m: VertexSet, n: VertexSet) -> bool {
    let (sub, back) = host.induced_unchecked(n);
    let inner: VertexSet = back
        .iter()
        .enumerate()
        .filter(|(_, v)| m.contains(**v))
        .map(|(i, _)| i)
        .collect();
    rel_holds(rel, inner, &sub).expect("set inside the induced subgraph")
}

fn triple_pre(host: &Graph, m0: VertexSet, m1: VertexSet, m2: VertexSet) -> Result<()> {
    host.check_set(m2)?;
    if !m0.is_subset(m1) || !m1.is_subset(m2) {
        return Err(Error::pre("triple must satisfy m0 ⊆ m1 ⊆ m2"));
    }
    Ok(())
}

fn triple_certificate(
    command: &str,
    rel: &SubmodelRelation,
    host: &Graph,
    sets: [VertexSet; 3],
    holds: bool,
    vacuous: bool,
) -> Certificate {
    let kind = if holds {
        CertificateKind::Pass
    } else {
        CertificateKind::Witness
    };
    let mut c = Certificate::new(command, kind);
    c.add_relation(rel);
    c.add_graph("host", host);
    for (key, s) in ["m0", "m1", "m2"].iter().zip(sets) {
        c.inputs.insert(key.to_string(), set_text(s));
    }
    if vacuous {
        c.notes.push("premise fails; the implication holds vacuously".into());
    }
    if !holds {
        c.witness = Some(Witness::Triple {
            check: command.into(),
            host: host.clone(),
            m0: sets[0],
            m1: sets[1],
            m2: sets[2],
        });
    }
    c.replay = format!("re-evaluate the relation on the pairs of ({}) in the host", command);
    c
}

pub fn check_transitivity(
    rel: &SubmodelRelation,
    host: &Graph,
    m0: VertexSet,
    m1: VertexSet,
    m2: VertexSet,
) -> Result<Certificate> {
    triple_pre(host, m0, m1, m2)?;
    let premise = related(rel, host, m0, m1) && related(rel, host, m1, m2);
    let holds = !premise || related(rel, host, m0, m2);
    Ok(triple_certificate("transitivity", rel, host, [m0, m1, m2], holds, !premise))
}

pub fn check_coherence(
    rel: &SubmodelRelation,
    host: &Graph,
    m0: VertexSet,
    m1: VertexSet,
    m2: VertexSet,
    mode: CoherenceMode,
) -> Result<Certificate> {
    triple_pre(host, m0, m1, m2)?;
    let premise = related(rel, host, m0, m2)
        && (mode == CoherenceMode::Strong || related(rel, host, m1, m2));
    let holds = !premise || related(rel, host, m0, m1);
    let command = match mode {
        CoherenceMode::Standard => "coherence",
        CoherenceMode::Strong => "strong_coherence",
    };
    Ok(triple_certificate(command, rel, host, [m0, m1, m2], holds, !premise))
}

fn chain_certificate(
    command: &str,
    rel: &SubmodelRelation,
    host: &Graph,
    chain: &ChainWitness,
    holds: bool,
) -> Certificate {
    let kind = if holds {
        CertificateKind::Pass
    } else {
        CertificateKind::Witness
    };
    let mut c = Certificate::new(command, kind).note(FINITE_CHAIN_NOTE);
    c.add_relation(rel);
    c.add_graph("host", host);
    let items: Vec<String> = chain.chain.iter().map(|&s| set_text(s)).collect();
    c.inputs.insert("chain".into(), items.join(" < "));
    if let Some(t) = chain.target {
        c.inputs.insert("target".into(), set_text(t));
    }
    if !holds {
        c.witness = Some(Witness::Chain {
            check: command.into(),
            host: host.clone(),
            chain: chain.chain.clone(),
            target: chain.target,
        });
    }
    c.replay = format!("re-evaluate the relation along the chain ({})", command);
    c
}

/// Pass iff the union (the last member) is in `class` and the first member
/// relates to it.
pub fn check_chain_union(
    rel: &SubmodelRelation,
    class: &ClassSpec,
    host: &Graph,
    chain: &ChainWitness,
) -> Result<Certificate> {
    host.check_set(chain.union())?;
    for w in chain.chain.windows(2) {
        if !related(rel, host, w[0], w[1]) {
            return Err(Error::pre("every chain step must satisfy the relation"));
        }
    }
    let union = chain.union();
    let holds = class.member(&host.induced_unchecked(union).0)
        && related(rel, host, chain.chain[0], union);
    Ok(chain_certificate("chain_union", rel, host, chain, holds))
}

/// Pass iff the union relates to the target (default: the whole host).
pub fn check_smoothness(
    rel: &SubmodelRelation,
    host: &Graph,
    chain: &ChainWitness,
) -> Result<Certificate> {
    let target = chain.target.unwrap_or_else(|| host.vertices());
    host.check_set(target)?;
    if !chain.union().is_subset(target) {
        return Err(Error::pre("chain must lie inside the target"));
    }
    if chain.chain.iter().any(|&s| !related(rel, host, s, target)) {
        return Err(Error::pre("every chain member must relate to the target"));
    }
    let holds = related(rel, host, chain.union(), target);
    Ok(chain_certificate("smoothness", rel, host, chain, holds))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub instances: u64,
    pub vacuous: u64,
    pub violations: u64,
}

impl CheckTally {
    fn record(&mut self, premise: bool, conclusion: bool) {
        self.instances += 1;
        if !premise {
            self.vacuous += 1;
        } else if !conclusion {
            self.violations += 1;
        }
    }

    fn merge(&mut self, o: &CheckTally) {
        self.instances += o.instances;
        self.vacuous += o.vacuous;
        self.violations += o.violations;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SuiteTally {
    pub hosts: u64,
    pub reflexivity: CheckTally,
    pub transitivity: CheckTally,
    pub coherence: CheckTally,
    pub strong_coherence: CheckTally,
    pub chain_union: CheckTally,
    pub smoothness: CheckTally,
    /// First violation in host order, then enumeration order.
    pub first_violation: Option<Witness>,
}

impl SuiteTally {
    pub fn checks(&self) -> [(&'static str, &CheckTally); 6] {
        [
            ("reflexivity", &self.reflexivity),
            ("transitivity", &self.transitivity),
            ("coherence", &self.coherence),
            ("strong_coherence", &self.strong_coherence),
            ("chain_union", &self.chain_union),
            ("smoothness", &self.smoothness),
        ]
    }

    pub fn violations(&self) -> u64 {
        self.checks().iter().map(|(_, t)| t.violations).sum()
    }

    pub fn instances(&self) -> u64 {
        self.checks().iter().map(|(_, t)| t.instances).sum()
    }

    /// Adds `other`, which must come later in host order.
    pub fn merge(&mut self, other: &SuiteTally) {
        self.hosts += other.hosts;
        self.reflexivity.merge(&other.reflexivity);
        self.transitivity.merge(&other.transitivity);
        self.coherence.merge(&other.coherence);
        self.strong_coherence.merge(&other.strong_coherence);
        self.chain_union.merge(&other.chain_union);
        self.smoothness.merge(&other.smoothness);
        if self.first_violation.is_none() {
            self.first_violation = other.first_violation.clone();
        }
    }
}

/// Membership and relation values over all subsets of one host, computed on
/// demand.
struct Tables<'a> {
    rel: &'a SubmodelRelation,
    class: &'a ClassSpec,
    host: &'a Graph,
    order: usize,
    member: Vec<u8>,
    related: Vec<u8>,
}

impl<'a> Tables<'a> {
    fn new(rel: &'a SubmodelRelation, class: &'a ClassSpec, host: &'a Graph) -> Self {
        let order = host.order();
        Tables {
            rel,
            class,
            host,
            order,
            member: vec![0; 1 << order],
            related: vec![0; 1 << (2 * order)],
        }
    }

    fn member(&mut self, s: VertexSet) -> bool {
        let i = s.bits() as usize;
        if self.member[i] == 0 {
            let v = self.class.member(&self.host.induced_unchecked(s).0);
            self.member[i] = 1 + v as u8;
        }
        self.member[i] == 2
    }

    fn rel(&mut self, m: VertexSet, n: VertexSet) -> bool {
        let i = (m.bits() as usize) << self.order | n.bits() as usize;
        if self.related[i] == 0 {
            let v = related(self.rel, self.host, m, n);
            self.related[i] = 1 + v as u8;
        }
        self.related[i] == 2
    }
}

/// Every check over one host: triples `m0 ⊆ m1 ⊆ V`, chains of length
/// `1..=chain_len` ending at `V` (chain union) and ending anywhere with
/// target `V` (smoothness). Triples and chains count only when all members
/// lie in `class`.
pub fn axiom_suite_for_host(
    rel: &SubmodelRelation,
    class: &ClassSpec,
    host: &Graph,
    chain_len: usize,
) -> Result<SuiteTally> {
    if host.order() > MAX_SUITE_ORDER {
        return Err(Error::param(format!(
            "axiom suite hosts are limited to {} vertices",
            MAX_SUITE_ORDER
        )));
    }
    let mut t = Tables::new(rel, class, host);
    let mut out = SuiteTally {
        hosts: 1,
        ..SuiteTally::default()
    };
    let full = host.vertices();
    let mut note = |out: &mut SuiteTally, w: Witness| {
        if out.first_violation.is_none() {
            out.first_violation = Some(w);
        }
    };
    let triple = |check: &str, m0, m1| Witness::Triple {
        check: check.into(),
        host: host.clone(),
        m0,
        m1,
        m2: full,
    };

    if t.member(full) {
        let ok = t.rel(full, full);
        out.reflexivity.record(true, ok);
        if !ok {
            note(&mut out, triple("reflexivity", full, full));
        }
    }

    for m1 in full.subsets() {
        for m0 in m1.subsets() {
            if !(t.member(m0) && t.member(m1) && t.member(full)) {
                for tally in [
                    &mut out.transitivity,
                    &mut out.coherence,
                    &mut out.strong_coherence,
                ] {
                    tally.record(false, true);
                }
                continue;
            }
            let r01 = t.rel(m0, m1);
            let r12 = t.rel(m1, full);
            let r02 = t.rel(m0, full);
            let checks = [
                ("transitivity", r01 && r12, r02),
                ("coherence", r02 && r12, r01),
                ("strong_coherence", r02, r01),
            ];
            for (name, premise, conclusion) in checks {
                let tally = match name {
                    "transitivity" => &mut out.transitivity,
                    "coherence" => &mut out.coherence,
                    _ => &mut out.strong_coherence,
                };
                tally.record(premise, conclusion);
                if premise && !conclusion {
                    note(&mut out, triple(name, m0, m1));
                }
            }
        }
    }

    if chain_len > 0 {
        let mut chain = Vec::with_capacity(chain_len);
        for start in full.subsets() {
            chain.push(start);
            walk_chains(&mut t, &mut out, &mut chain, chain_len, full, &mut note);
            chain.pop();
        }
    }
    Ok(out)
}

fn walk_chains(
    t: &mut Tables<'_>,
    out: &mut SuiteTally,
    chain: &mut Vec<VertexSet>,
    max_len: usize,
    full: VertexSet,
    note: &mut impl FnMut(&mut SuiteTally, Witness),
) {
    let last = *chain.last().expect("nonempty");
    let all_members = chain.iter().all(|&s| t.member(s));
    let steps = chain.windows(2).all(|w| t.rel(w[0], w[1]));
    let premise_base = all_members && steps;

    if last == full {
        let conclusion = t.member(full) && t.rel(chain[0], full);
        out.chain_union.record(premise_base, conclusion);
        if premise_base && !conclusion {
            note(out, chain_witness("chain_union", t.host, chain, None));
        }
    }
    let premise = premise_base && t.member(full) && chain.iter().all(|&s| t.rel(s, full));
    let conclusion = t.rel(last, full);
    out.smoothness.record(premise, conclusion);
    if premise && !conclusion {
        note(out, chain_witness("smoothness", t.host, chain, Some(full)));
    }

    if chain.len() == max_len || last == full {
        return;
    }
    for next in full.subsets() {
        if last.is_subset(next) && last != next {
            chain.push(next);
            walk_chains(t, out, chain, max_len, full, note);
            chain.pop();
        }
    }
}

fn chain_witness(
    check: &str,
    host: &Graph,
    chain: &[VertexSet],
    target: Option<VertexSet>,
) -> Witness {
    Witness::Chain {
        check: check.into(),
        host: host.clone(),
        chain: chain.to_vec(),
        target,
    }
}

/// The suite over every host, in order.
pub fn axiom_suite(
    rel: &SubmodelRelation,
    class: &ClassSpec,
    hosts: &[Graph],
    chain_len: usize,
) -> Result<SuiteTally> {
    let mut total = SuiteTally::default();
    for h in hosts {
        total.merge(&axiom_suite_for_host(rel, class, h, chain_len)?);
    }
    Ok(total)
}

/// Pass when no check was violated; otherwise a witness for the first
/// violation.
pub fn suite_certificate(command: &str, tally: &SuiteTally) -> Certificate {
    let kind = if tally.violations() == 0 {
        CertificateKind::Pass
    } else {
        CertificateKind::Witness
    };
    let mut c = Certificate::new(command, kind).note(FINITE_CHAIN_NOTE);
    c.notes.push(format!("hosts: {}", tally.hosts));
    for (name, t) in tally.checks() {
        c.notes.push(format!(
            "{}: {} instances, {} vacuous, {} violations",
            name, t.instances, t.vacuous, t.violations
        ));
    }
    c.witness = tally.first_violation.clone();
    c.stats.nodes = tally.instances();
    c
}
