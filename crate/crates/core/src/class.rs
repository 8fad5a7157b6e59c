//! Graph classes and their membership predicates.
//!
//! Embeddability is always induced embeddability.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{embeds, for_each_embedding, is_isomorphic, Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    /// No induced subgraph isomorphic to a member of `family`. The empty
    /// family gives the class of all graphs.
    Forb { family: Vec<Graph> },
    /// No connected component isomorphic to `forbidden`.
    ForbCon { forbidden: Graph },
    /// Every component has at most `n` vertices.
    CompMax { n: usize },
    /// With at least `k` components, every component has at most `n`
    /// vertices.
    CompCond { k: usize, n: usize },
    /// Some member of `family` does not embed.
    NotAllEmbed { family: Vec<Graph> },
    /// No induced copy of `base` has two distinct outside vertices realizing
    /// the adjacency patterns `p` and `q` over it.
    NotBothTypes {
        base: Graph,
        p: Vec<bool>,
        q: Vec<bool>,
    },
    /// Boolean combination of `embeds(env[i])` atoms.
    Sentence { expr: Expr, env: Vec<Graph> },
}

/// Sentence over embeddability atoms; `Embeds(i)` refers to the `i`-th
/// graph of the sentence environment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Embeds(usize),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Implies(Box<Expr>, Box<Expr>),
    Iff(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn negation(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn and(a: Expr, b: Expr) -> Expr {
        Expr::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Expr, b: Expr) -> Expr {
        Expr::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Expr, b: Expr) -> Expr {
        Expr::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Expr, b: Expr) -> Expr {
        Expr::Iff(Box::new(a), Box::new(b))
    }

    fn max_atom(&self) -> Option<usize> {
        match self {
            Expr::Embeds(i) => Some(*i),
            Expr::Not(e) => e.max_atom(),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Implies(a, b) | Expr::Iff(a, b) => {
                a.max_atom().max(b.max_atom())
            }
        }
    }

    /// Evaluates with a caller-supplied atom valuation.
    pub fn eval_with(&self, atom: &mut impl FnMut(usize) -> bool) -> bool {
        match self {
            Expr::Embeds(i) => atom(*i),
            Expr::Not(e) => !e.eval_with(atom),
            Expr::And(a, b) => a.eval_with(atom) && b.eval_with(atom),
            Expr::Or(a, b) => a.eval_with(atom) || b.eval_with(atom),
            Expr::Implies(a, b) => !a.eval_with(atom) || b.eval_with(atom),
            Expr::Iff(a, b) => a.eval_with(atom) == b.eval_with(atom),
        }
    }

    /// Kleene three-valued evaluation; `None` is "unknown".
    pub fn eval_kleene(&self, atom: &mut impl FnMut(usize) -> Option<bool>) -> Option<bool> {
        match self {
            Expr::Embeds(i) => atom(*i),
            Expr::Not(e) => e.eval_kleene(atom).map(|v| !v),
            Expr::And(a, b) => match (a.eval_kleene(atom), b.eval_kleene(atom)) {
                (Some(false), _) | (_, Some(false)) => Some(false),
                (Some(true), Some(true)) => Some(true),
                _ => None,
            },
            Expr::Or(a, b) => match (a.eval_kleene(atom), b.eval_kleene(atom)) {
                (Some(true), _) | (_, Some(true)) => Some(true),
                (Some(false), Some(false)) => Some(false),
                _ => None,
            },
            Expr::Implies(a, b) => {
                let na = Expr::Not(a.clone());
                Expr::Or(Box::new(na), b.clone()).eval_kleene(atom)
            }
            Expr::Iff(a, b) => match (a.eval_kleene(atom), b.eval_kleene(atom)) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            },
        }
    }
}

impl ClassSpec {
    /// The class of all graphs.
    pub fn all() -> Self {
        ClassSpec::Forb { family: Vec::new() }
    }

    pub fn is_all(&self) -> bool {
        matches!(self, ClassSpec::Forb { family } if family.is_empty())
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ClassSpec::CompMax { n } if *n == 0 => Err(Error::param("compmax needs n >= 1")),
            ClassSpec::CompCond { k, n } if *k == 0 || *n == 0 => {
                Err(Error::param("compcond needs k, n >= 1"))
            }
            ClassSpec::NotBothTypes { base, p, q } => {
                if p.len() != base.order() || q.len() != base.order() {
                    return Err(Error::param(format!(
                        "type patterns must have one entry per base vertex ({})",
                        base.order()
                    )));
                }
                if p == q {
                    return Err(Error::param("the two type patterns must differ"));
                }
                Ok(())
            }
            ClassSpec::Sentence { expr, env } => match expr.max_atom() {
                Some(i) if i >= env.len() => Err(Error::param(format!(
                    "sentence atom {} has no graph in the environment",
                    i
                ))),
                _ => Ok(()),
            },
            _ => Ok(()),
        }
    }

    pub fn member(&self, m: &Graph) -> bool {
        member(m, self)
    }

    /// Every graph the class mentions, in order of appearance.
    pub fn graphs(&self) -> Vec<&Graph> {
        match self {
            ClassSpec::Forb { family } | ClassSpec::NotAllEmbed { family } => family.iter().collect(),
            ClassSpec::ForbCon { forbidden } => alloc::vec![forbidden],
            ClassSpec::NotBothTypes { base, .. } => alloc::vec![base],
            ClassSpec::Sentence { env, .. } => env.iter().collect(),
            ClassSpec::CompMax { .. } | ClassSpec::CompCond { .. } => Vec::new(),
        }
    }

    /// The class form of the description language; `names[i]` names the `i`-th
    /// entry of [`ClassSpec::graphs`].
    pub fn literal(&self, names: &[String]) -> String {
        let list = |n: usize| names[..n].join(", ");
        match self {
            ClassSpec::Forb { family } => format!("forb({})", list(family.len())),
            ClassSpec::ForbCon { .. } => format!("forbcon({})", names[0]),
            ClassSpec::CompMax { n } => format!("compmax({})", n),
            ClassSpec::CompCond { k, n } => format!("compcond({}, {})", k, n),
            ClassSpec::NotAllEmbed { family } => format!("notallembed({})", list(family.len())),
            ClassSpec::NotBothTypes { p, q, .. } => {
                format!("notboth({}, {}, {})", names[0], pattern(p), pattern(q))
            }
            ClassSpec::Sentence { expr, .. } => format!("sentence({})", expr.render(names)),
        }
    }
}

fn pattern(bits: &[bool]) -> String {
    let inner: Vec<&str> = bits.iter().map(|&b| if b { "1" } else { "0" }).collect();
    format!("[{}]", inner.join(","))
}

impl Expr {
    /// Infix rendering; nested binary operators are always parenthesized.
    pub fn render(&self, names: &[String]) -> String {
        fn operand(e: &Expr, names: &[String]) -> String {
            match e {
                Expr::Embeds(_) | Expr::Not(_) => e.render(names),
                _ => format!("({})", e.render(names)),
            }
        }
        match self {
            Expr::Embeds(i) => format!("embeds({})", names[*i]),
            Expr::Not(e) => format!("!{}", operand(e, names)),
            Expr::And(a, b) => format!("{} & {}", operand(a, names), operand(b, names)),
            Expr::Or(a, b) => format!("{} | {}", operand(a, names), operand(b, names)),
            Expr::Implies(a, b) => format!("{} -> {}", operand(a, names), operand(b, names)),
            Expr::Iff(a, b) => format!("{} <-> {}", operand(a, names), operand(b, names)),
        }
    }
}

pub fn member(m: &Graph, spec: &ClassSpec) -> bool {
    match spec {
        ClassSpec::Forb { family } => family.iter().all(|f| !embeds(f, m)),
        ClassSpec::ForbCon { forbidden } => m.components().blocks().iter().all(|&c| {
            c.len() != forbidden.order() || !is_isomorphic(&m.induced_unchecked(c).0, forbidden)
        }),
        ClassSpec::CompMax { n } => m.components().blocks().iter().all(|c| c.len() <= *n),
        ClassSpec::CompCond { k, n } => {
            let comps = m.components();
            comps.len() < *k || comps.blocks().iter().all(|c| c.len() <= *n)
        }
        ClassSpec::NotAllEmbed { family } => family.iter().any(|f| !embeds(f, m)),
        ClassSpec::NotBothTypes { base, p, q } => !realizes_both(m, base, p, q),
        ClassSpec::Sentence { expr, env } => eval_sentence(m, expr, env),
    }
}

fn realizes_both(m: &Graph, base: &Graph, p: &[bool], q: &[bool]) -> bool {
    for_each_embedding(base, m, m.vertices(), |map| {
        let image: VertexSet = map.iter().copied().collect();
        let mut has_p = false;
        let mut has_q = false;
        for z in m.vertices().difference(image) {
            let pattern = map.iter().map(|&b| m.has_edge(z, b));
            if pattern.clone().eq(p.iter().copied()) {
                has_p = true;
            } else if pattern.eq(q.iter().copied()) {
                has_q = true;
            }
        }
        if has_p && has_q {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
}

pub fn eval_sentence(m: &Graph, expr: &Expr, env: &[Graph]) -> bool {
    expr.eval_with(&mut |i| embeds(&env[i], m))
}
