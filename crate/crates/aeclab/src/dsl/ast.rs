use super::lexer::Pos;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

impl Ident {
    pub fn new(name: &str) -> Self {
        Ident {
            name: name.to_string(),
            pos: Pos::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecFile {
    pub items: Vec<Item>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Graph(GraphDef),
    Class(ClassDef),
    Relation(RelationDef),
    Check(CheckDef),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDef {
    pub name: Ident,
    pub vertices: usize,
    /// Each edge with the position of its opening parenthesis.
    pub edges: Vec<(usize, usize, Pos)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDef {
    pub name: Ident,
    pub form: ClassForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassForm {
    Forb(Vec<Ident>),
    ForbCon(Ident),
    CompMax(usize),
    CompCond(usize, usize),
    NotAllEmbed(Vec<Ident>),
    NotBoth(Ident, Vec<bool>, Vec<bool>),
    Sentence(SExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SExpr {
    Embeds(Ident),
    Not(Box<SExpr>),
    And(Box<SExpr>, Box<SExpr>),
    Or(Box<SExpr>, Box<SExpr>),
    Implies(Box<SExpr>, Box<SExpr>),
    Iff(Box<SExpr>, Box<SExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationDef {
    pub name: Ident,
    pub form: RelationForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationForm {
    Component,
    ComponentStrict,
    Induced,
    ForbBounded(Ident, usize),
    Count(Ident),
    NoAdd(Ident, usize),
    TypeBounded(Ident, usize),
    FcClique(Ident),
    FcComp(Ident),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckDef {
    Member { graph: Ident, class: Ident, expect: bool },
    Related {
        relation: Ident,
        graph: Ident,
        set: Vec<usize>,
        expect: bool,
    },
}

impl SpecFile {
    /// The same file with every source position cleared.
    pub fn without_positions(&self) -> SpecFile {
        let mut out = self.clone();
        for item in &mut out.items {
            match item {
                Item::Graph(g) => {
                    g.name.pos = Pos::default();
                    for e in &mut g.edges {
                        e.2 = Pos::default();
                    }
                }
                Item::Class(c) => {
                    c.name.pos = Pos::default();
                    clear_class(&mut c.form);
                }
                Item::Relation(r) => {
                    r.name.pos = Pos::default();
                    match &mut r.form {
                        RelationForm::ForbBounded(g, _)
                        | RelationForm::Count(g)
                        | RelationForm::NoAdd(g, _)
                        | RelationForm::TypeBounded(g, _)
                        | RelationForm::FcClique(g)
                        | RelationForm::FcComp(g) => g.pos = Pos::default(),
                        _ => {}
                    }
                }
                Item::Check(CheckDef::Member { graph, class, .. }) => {
                    graph.pos = Pos::default();
                    class.pos = Pos::default();
                }
                Item::Check(CheckDef::Related {
                    relation, graph, ..
                }) => {
                    relation.pos = Pos::default();
                    graph.pos = Pos::default();
                }
            }
        }
        out
    }
}

fn clear_class(form: &mut ClassForm) {
    match form {
        ClassForm::Forb(list) | ClassForm::NotAllEmbed(list) => {
            for i in list {
                i.pos = Pos::default();
            }
        }
        ClassForm::ForbCon(g) | ClassForm::NotBoth(g, _, _) => g.pos = Pos::default(),
        ClassForm::Sentence(e) => clear_expr(e),
        ClassForm::CompMax(_) | ClassForm::CompCond(_, _) => {}
    }
}

fn clear_expr(e: &mut SExpr) {
    match e {
        SExpr::Embeds(i) => i.pos = Pos::default(),
        SExpr::Not(a) => clear_expr(a),
        SExpr::And(a, b) | SExpr::Or(a, b) | SExpr::Implies(a, b) | SExpr::Iff(a, b) => {
            clear_expr(a);
            clear_expr(b);
        }
    }
}
