//! Closure growth: minimal strong submodels over a parameter set, and the
//! finite stand-in for a smoothness failure at a limit.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use serde::Serialize;

use super::{set_text, Certificate, CertificateKind, Exhaustion, Witness, FINITE_CHAIN_NOTE};
use crate::class::ClassSpec;
use crate::constructions::gen_edgeless;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::relations::{adds_element, rel_holds, rel_noadd, SubmodelRelation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalSubmodels {
    /// Canonical order: size, then lexicographic.
    pub sets: Vec<VertexSet>,
    /// Candidates evaluated.
    pub explored: u64,
    /// Candidates skipped because they contain a set already found.
    pub skipped: u64,
}

/// All `⊆`-minimal `m` with `a ⊆ m ⊆ V(n)`, `n[m]` in `class` and
/// `m ⪯ n`.
///
/// Candidates are visited by increasing size, so a candidate containing an
/// earlier solution is not minimal and is skipped without evaluation; no
/// monotonicity of the relation is assumed.
pub fn minimal_strong_submodels(
    n: &Graph,
    a: VertexSet,
    rel: &SubmodelRelation,
    class: &ClassSpec,
) -> Result<MinimalSubmodels> {
    n.check_set(a)?;
    if !class.member(n) {
        return Err(Error::pre("host graph is not in the class"));
    }
    let mut out = MinimalSubmodels {
        sets: Vec::new(),
        explored: 0,
        skipped: 0,
    };
    let free = n.vertices().difference(a);
    let mut cands: Vec<VertexSet> = free.subsets().map(|s| s.union(a)).collect();
    cands.sort_by(|x, y| x.canonical_cmp(y));
    for m in cands {
        if out.sets.iter().any(|f| f.is_subset(m)) {
            out.skipped += 1;
            continue;
        }
        out.explored += 1;
        if class.member(&n.induced_unchecked(m).0) && rel_holds(rel, m, n)? {
            out.sets.push(m);
        }
    }
    Ok(out)
}

pub fn minimal_certificate(
    n: &Graph,
    a: VertexSet,
    rel: &SubmodelRelation,
    class: &ClassSpec,
) -> Result<Certificate> {
    let found = minimal_strong_submodels(n, a, rel, class)?;
    let mut c = Certificate::new("minimal-submodels", CertificateKind::Witness)
        .note(format!(
            "{} candidates evaluated, {} skipped as supersets of a solution",
            found.explored, found.skipped
        ))
        .note(format!(
            "largest minimal submodel has {} of {} vertices",
            found.sets.iter().map(|s| s.len()).max().unwrap_or(0),
            n.order()
        ));
    c.add_graph("host", n);
    c.add_class(class);
    c.add_relation(rel);
    c.inputs.insert("base".into(), set_text(a));
    c.witness = Some(Witness::MinimalSets {
        host: n.clone(),
        base: a,
        sets: found.sets,
    });
    c.stats.nodes = found.explored;
    c.replay = "each set must relate to the host and be in the class; each proper \
                superset of the base inside it must fail"
        .into();
    Ok(c)
}

/// `M` = edgeless `kappa`, `N` = `M` plus one isolated vertex, relation
/// `NoAdd{g, kappa}`: every proper subset of `M` relates to `N` while `M`
/// does not.
pub fn limit_standin_smoothness(g: &Graph, kappa: usize) -> Result<Certificate> {
    if kappa == 0 || g.order() < kappa + 1 {
        return Err(Error::param(format!(
            "limit stand-in needs kappa >= 1 and |g| >= kappa + 1, got kappa = {}, |g| = {}",
            kappa,
            g.order()
        )));
    }
    let m = gen_edgeless(kappa)?;
    let n = gen_edgeless(kappa + 1)?;
    let full = m.vertices();
    let mut proper = 0usize;
    let mut all_proper = true;
    for s in full.subsets().filter(|&s| s != full) {
        proper += 1;
        all_proper &= rel_noadd(s, &n, g, kappa);
    }
    let addition = adds_element(full, &n, g, kappa);
    let rel = SubmodelRelation::NoAdd {
        forbidden: g.clone(),
        size: kappa,
    };
    let mut c = match (all_proper, addition) {
        (true, Some(addition)) => {
            let mut c = Certificate::new("limit-smoothness", CertificateKind::Witness);
            c.witness = Some(Witness::LimitStandIn {
                m: m.clone(),
                n: n.clone(),
                proper_subsets: proper,
                addition,
            });
            c
        }
        _ => {
            let mut c = Certificate::new("limit-smoothness", CertificateKind::BoundedRefutation)
                .note("the stand-in configuration does not occur for this graph");
            c.exhaustion = Some(Exhaustion {
                bound: kappa + 1,
                explored: proper as u128 + 1,
                pruned: 0,
            });
            c
        }
    };
    c.notes.push(FINITE_CHAIN_NOTE.into());
    c.notes.push(format!(
        "{} proper subsets of M checked against N; all related: {}",
        proper, all_proper
    ));
    if !rel.natural_class().member(&n) {
        c.notes.push("N itself contains the forbidden graph".into());
    }
    c.add_relation(&rel);
    c.add_graph("m", &m);
    c.add_graph("n", &n);
    c.inputs.insert("kappa".into(), kappa.to_string());
    c.stats.nodes = proper as u64 + 1;
    c.replay = "evaluate the relation on every subset of M inside N".into();
    Ok(c)
}
