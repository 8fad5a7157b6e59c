//! Name resolution: turns a parsed file into graphs, classes and relations.
//!
//! Graph references that are not defined in the file fall back to the
//! builtins `K<n>` (complete), `P<n>` (path), `C<n>` (cycle) and `E<n>`
//! (edgeless).

use std::collections::BTreeMap;

use aeclab_core::constructions::{gen_complete, gen_cycle, gen_edgeless, gen_path};
use aeclab_core::{ClassSpec, Expr, Graph, SubmodelRelation, VertexSet};
use serde::Serialize;

use super::ast::*;
use super::lexer::Pos;
use super::printer::print_item;
use super::ParseError;

type RResult<T> = Result<T, ParseError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Graph,
    Class,
    Relation,
}

impl Kind {
    fn word(self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Class => "class",
            Kind::Relation => "relation",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ResolvedCheck {
    Member {
        text: String,
        graph: Graph,
        class: ClassSpec,
        expect: bool,
    },
    Related {
        text: String,
        relation: SubmodelRelation,
        graph: Graph,
        set: VertexSet,
        expect: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub expected: bool,
    pub actual: bool,
}

impl CheckOutcome {
    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

impl ResolvedCheck {
    pub fn evaluate(&self) -> CheckOutcome {
        match self {
            ResolvedCheck::Member {
                text,
                graph,
                class,
                expect,
            } => CheckOutcome {
                check: text.clone(),
                expected: *expect,
                actual: class.member(graph),
            },
            ResolvedCheck::Related {
                text,
                relation,
                graph,
                set,
                expect,
            } => CheckOutcome {
                check: text.clone(),
                expected: *expect,
                actual: relation
                    .holds(*set, graph)
                    .expect("vertex range checked during resolution"),
            },
        }
    }
}

/// Definitions in file order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ResolvedSpec {
    pub graphs: Vec<(String, Graph)>,
    pub classes: Vec<(String, ClassSpec)>,
    pub relations: Vec<(String, SubmodelRelation)>,
    pub checks: Vec<ResolvedCheck>,
}

impl ResolvedSpec {
    /// A defined graph, else a builtin.
    pub fn graph(&self, name: &str) -> Option<Graph> {
        self.graphs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g.clone())
            .or_else(|| builtin_graph(name))
    }

    pub fn class(&self, name: &str) -> Option<&ClassSpec> {
        self.classes.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    pub fn relation(&self, name: &str) -> Option<&SubmodelRelation> {
        self.relations.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    pub fn lookup_graph(&self, id: &Ident) -> RResult<Graph> {
        if self.class(&id.name).is_some() || self.relation(&id.name).is_some() {
            return Err(ParseError::new(id.pos, format!("'{}' is not a graph", id.name)));
        }
        self.graph(&id.name)
            .ok_or_else(|| ParseError::new(id.pos, format!("unknown graph '{}'", id.name)))
    }

    pub fn resolve_class(&self, form: &ClassForm, at: Pos) -> RResult<ClassSpec> {
        let list = |ids: &[Ident]| -> RResult<Vec<Graph>> {
            ids.iter().map(|i| self.lookup_graph(i)).collect()
        };
        let spec = match form {
            ClassForm::Forb(ids) => ClassSpec::Forb { family: list(ids)? },
            ClassForm::ForbCon(g) => ClassSpec::ForbCon {
                forbidden: self.lookup_graph(g)?,
            },
            ClassForm::CompMax(n) => ClassSpec::CompMax { n: *n },
            ClassForm::CompCond(k, n) => ClassSpec::CompCond { k: *k, n: *n },
            ClassForm::NotAllEmbed(ids) => ClassSpec::NotAllEmbed { family: list(ids)? },
            ClassForm::NotBoth(g, p, q) => ClassSpec::NotBothTypes {
                base: self.lookup_graph(g)?,
                p: p.clone(),
                q: q.clone(),
            },
            ClassForm::Sentence(e) => {
                let mut env_names: Vec<String> = Vec::new();
                let mut env = Vec::new();
                let expr = self.sentence(e, &mut env_names, &mut env)?;
                ClassSpec::Sentence { expr, env }
            }
        };
        spec.validate()
            .map_err(|e| ParseError::new(at, e.to_string()))?;
        Ok(spec)
    }

    fn sentence(
        &self,
        e: &SExpr,
        names: &mut Vec<String>,
        env: &mut Vec<Graph>,
    ) -> RResult<Expr> {
        Ok(match e {
            SExpr::Embeds(id) => {
                let i = match names.iter().position(|n| *n == id.name) {
                    Some(i) => i,
                    None => {
                        env.push(self.lookup_graph(id)?);
                        names.push(id.name.clone());
                        names.len() - 1
                    }
                };
                Expr::Embeds(i)
            }
            SExpr::Not(a) => Expr::negation(self.sentence(a, names, env)?),
            SExpr::And(a, b) => Expr::and(self.sentence(a, names, env)?, self.sentence(b, names, env)?),
            SExpr::Or(a, b) => Expr::or(self.sentence(a, names, env)?, self.sentence(b, names, env)?),
            SExpr::Implies(a, b) => {
                Expr::implies(self.sentence(a, names, env)?, self.sentence(b, names, env)?)
            }
            SExpr::Iff(a, b) => Expr::iff(self.sentence(a, names, env)?, self.sentence(b, names, env)?),
        })
    }

    pub fn resolve_relation(&self, form: &RelationForm) -> RResult<SubmodelRelation> {
        Ok(match form {
            RelationForm::Component => SubmodelRelation::Component {
                strict_attach: false,
            },
            RelationForm::ComponentStrict => SubmodelRelation::Component {
                strict_attach: true,
            },
            RelationForm::Induced => SubmodelRelation::InducedSub,
            RelationForm::ForbBounded(g, l) => SubmodelRelation::ForbBounded {
                forbidden: self.lookup_graph(g)?,
                threshold: *l,
            },
            RelationForm::Count(g) => SubmodelRelation::CountPreserving {
                forbidden: self.lookup_graph(g)?,
            },
            RelationForm::NoAdd(g, n) => SubmodelRelation::NoAdd {
                forbidden: self.lookup_graph(g)?,
                size: *n,
            },
            RelationForm::TypeBounded(g, n) => SubmodelRelation::TypeBounded {
                forbidden: self.lookup_graph(g)?,
                size: *n,
            },
            RelationForm::FcClique(g) => SubmodelRelation::ForbConClique {
                forbidden: self.lookup_graph(g)?,
            },
            RelationForm::FcComp(g) => SubmodelRelation::ForbConComponent {
                forbidden: self.lookup_graph(g)?,
            },
        })
    }
}

/// `K<n>`, `P<n>`, `E<n>` for `n >= 0` and `C<n>` for `n >= 3`.
pub fn builtin_graph(name: &str) -> Option<Graph> {
    let mut chars = name.chars();
    let head = chars.next()?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    let n: usize = digits.parse().ok()?;
    match head {
        'K' => gen_complete(n).ok(),
        'P' => gen_path(n).ok(),
        'C' => gen_cycle(n).ok(),
        'E' => gen_edgeless(n).ok(),
        _ => None,
    }
}

fn build_graph(g: &GraphDef) -> RResult<Graph> {
    let mut out = Graph::edgeless(g.vertices).map_err(|e| ParseError::new(g.name.pos, e.to_string()))?;
    for &(u, v, at) in &g.edges {
        out.add_edge(u, v)
            .map_err(|e| ParseError::new(at, e.to_string()))?;
    }
    Ok(out)
}

/// Checks names are unique and every reference resolves, then builds the
/// definitions. Errors carry the position of the offending name.
pub fn resolve(file: &SpecFile) -> RResult<ResolvedSpec> {
    let mut seen: BTreeMap<&str, (Kind, Pos)> = BTreeMap::new();
    for item in &file.items {
        let (id, kind) = match item {
            Item::Graph(g) => (&g.name, Kind::Graph),
            Item::Class(c) => (&c.name, Kind::Class),
            Item::Relation(r) => (&r.name, Kind::Relation),
            Item::Check(_) => continue,
        };
        if let Some((k, first)) = seen.get(id.name.as_str()) {
            return Err(ParseError::new(
                id.pos,
                format!(
                    "duplicate name '{}' (already defined as a {} at {})",
                    id.name,
                    k.word(),
                    first
                ),
            ));
        }
        seen.insert(&id.name, (kind, id.pos));
    }

    let mut out = ResolvedSpec::default();
    for item in &file.items {
        if let Item::Graph(g) = item {
            out.graphs.push((g.name.name.clone(), build_graph(g)?));
        }
    }
    // Classes and relations only refer to graphs, so definition order does
    // not matter.
    for item in &file.items {
        match item {
            Item::Class(c) => {
                let spec = out.resolve_class(&c.form, c.name.pos)?;
                out.classes.push((c.name.name.clone(), spec));
            }
            Item::Relation(r) => {
                let rel = out.resolve_relation(&r.form)?;
                out.relations.push((r.name.name.clone(), rel));
            }
            _ => {}
        }
    }
    for item in &file.items {
        let Item::Check(check) = item else { continue };
        let text = print_item(item);
        let resolved = match check {
            CheckDef::Member {
                graph,
                class,
                expect,
            } => ResolvedCheck::Member {
                text,
                graph: out.lookup_graph(graph)?,
                class: lookup(&out, class, Kind::Class, |s, n| s.class(n).cloned())?,
                expect: *expect,
            },
            CheckDef::Related {
                relation,
                graph,
                set,
                expect,
            } => {
                let rel = lookup(&out, relation, Kind::Relation, |s, n| s.relation(n).cloned())?;
                let g = out.lookup_graph(graph)?;
                let mut vs = VertexSet::EMPTY;
                for &v in set {
                    if v >= g.order() {
                        return Err(ParseError::new(
                            graph.pos,
                            format!("vertex {} out of range for '{}' ({} vertices)", v, graph.name, g.order()),
                        ));
                    }
                    vs = vs.with(v);
                }
                ResolvedCheck::Related {
                    text,
                    relation: rel,
                    graph: g,
                    set: vs,
                    expect: *expect,
                }
            }
        };
        out.checks.push(resolved);
    }
    Ok(out)
}

fn lookup<T>(
    spec: &ResolvedSpec,
    id: &Ident,
    kind: Kind,
    get: impl Fn(&ResolvedSpec, &str) -> Option<T>,
) -> RResult<T> {
    get(spec, &id.name).ok_or_else(|| {
        ParseError::new(id.pos, format!("unknown {} '{}'", kind.word(), id.name))
    })
}
