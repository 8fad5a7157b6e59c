//! Canonical printing: one item per line, single spaces, nested binary
//! operators parenthesized. Parsing the output gives back the same file.

use std::fmt::Write;

use super::ast::*;

pub fn print_spec(f: &SpecFile) -> String {
    let mut out = String::new();
    for item in &f.items {
        out.push_str(&print_item(item));
        out.push('\n');
    }
    out
}

pub fn print_item(item: &Item) -> String {
    match item {
        Item::Graph(g) => {
            let mut s = format!("graph {} {{ vertices: {}; edges:", g.name.name, g.vertices);
            for (i, (u, v, _)) in g.edges.iter().enumerate() {
                let sep = if i == 0 { " " } else { ", " };
                let _ = write!(s, "{}({},{})", sep, u, v);
            }
            s.push_str("; }");
            s
        }
        Item::Class(c) => format!("class {} = {}", c.name.name, print_class(&c.form)),
        Item::Relation(r) => format!("relation {} = {}", r.name.name, print_relation(&r.form)),
        Item::Check(CheckDef::Member {
            graph,
            class,
            expect,
        }) => format!(
            "check {}({}, {})",
            if *expect { "member" } else { "nonmember" },
            graph.name,
            class.name
        ),
        Item::Check(CheckDef::Related {
            relation,
            graph,
            set,
            expect,
        }) => {
            let set: Vec<String> = set.iter().map(|v| v.to_string()).collect();
            format!(
                "check {}({}, {}, [{}])",
                if *expect { "related" } else { "unrelated" },
                relation.name,
                graph.name,
                set.join(", ")
            )
        }
    }
}

fn names(list: &[Ident]) -> String {
    list.iter().map(|i| i.name.as_str()).collect::<Vec<_>>().join(", ")
}

fn bits(b: &[bool]) -> String {
    let inner: Vec<&str> = b.iter().map(|&x| if x { "1" } else { "0" }).collect();
    format!("[{}]", inner.join(","))
}

pub fn print_class(form: &ClassForm) -> String {
    match form {
        ClassForm::Forb(list) => format!("forb({})", names(list)),
        ClassForm::ForbCon(g) => format!("forbcon({})", g.name),
        ClassForm::CompMax(n) => format!("compmax({})", n),
        ClassForm::CompCond(k, n) => format!("compcond({}, {})", k, n),
        ClassForm::NotAllEmbed(list) => format!("notallembed({})", names(list)),
        ClassForm::NotBoth(g, p, q) => format!("notboth({}, {}, {})", g.name, bits(p), bits(q)),
        ClassForm::Sentence(e) => format!("sentence({})", print_expr(e)),
    }
}

pub fn print_relation(form: &RelationForm) -> String {
    match form {
        RelationForm::Component => "component".into(),
        RelationForm::ComponentStrict => "component_strict".into(),
        RelationForm::Induced => "induced".into(),
        RelationForm::ForbBounded(g, l) => format!("forb_bounded({}, {})", g.name, l),
        RelationForm::Count(g) => format!("count({})", g.name),
        RelationForm::NoAdd(g, n) => format!("noadd({}, {})", g.name, n),
        RelationForm::TypeBounded(g, n) => format!("typeb({}, {})", g.name, n),
        RelationForm::FcClique(g) => format!("fc_clique({})", g.name),
        RelationForm::FcComp(g) => format!("fc_comp({})", g.name),
    }
}

pub fn print_expr(e: &SExpr) -> String {
    fn operand(e: &SExpr) -> String {
        match e {
            SExpr::Embeds(_) | SExpr::Not(_) => print_expr(e),
            _ => format!("({})", print_expr(e)),
        }
    }
    match e {
        SExpr::Embeds(g) => format!("embeds({})", g.name),
        SExpr::Not(a) => format!("!{}", operand(a)),
        SExpr::And(a, b) => format!("{} & {}", operand(a), operand(b)),
        SExpr::Or(a, b) => format!("{} | {}", operand(a), operand(b)),
        SExpr::Implies(a, b) => format!("{} -> {}", operand(a), operand(b)),
        SExpr::Iff(a, b) => format!("{} <-> {}", operand(a), operand(b)),
    }
}
