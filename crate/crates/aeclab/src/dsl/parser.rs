//! Recursive descent over the token stream.

use super::ast::*;
use super::lexer::{tokenize, Pos, Tok, Token};
use super::ParseError;

type PResult<T> = Result<T, ParseError>;

pub fn parse_spec(src: &str) -> PResult<SpecFile> {
    let mut p = Parser::new(src)?;
    let mut items = Vec::new();
    while p.peek() != &Tok::Eof {
        items.push(p.item()?);
    }
    Ok(SpecFile { items })
}

/// A class form on its own, as given on the command line.
pub fn parse_class_literal(src: &str) -> PResult<ClassForm> {
    let mut p = Parser::new(src)?;
    let form = p.class_form()?;
    p.end()?;
    Ok(form)
}

/// A relation form on its own, as given on the command line.
pub fn parse_relation_literal(src: &str) -> PResult<RelationForm> {
    let mut p = Parser::new(src)?;
    let form = p.relation_form()?;
    p.end()?;
    Ok(form)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> PResult<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::new(self.pos(), msg))
    }

    fn expect(&mut self, want: Tok) -> PResult<Pos> {
        if *self.peek() == want {
            Ok(self.bump().pos)
        } else {
            self.error(format!(
                "expected '{}', found {}",
                want.symbol(),
                self.peek().describe()
            ))
        }
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == want {
            self.bump();
            true
        } else {
            false
        }
    }

    fn end(&mut self) -> PResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.error(format!("unexpected {}", self.peek().describe()))
        }
    }

    fn ident(&mut self) -> PResult<Ident> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let pos = self.bump().pos;
                Ok(Ident { name, pos })
            }
            other => self.error(format!("expected a name, found {}", other.describe())),
        }
    }

    fn keyword(&mut self, word: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == word => {
                self.bump();
                Ok(())
            }
            other => self.error(format!("expected '{}', found {}", word, other.describe())),
        }
    }

    fn int(&mut self) -> PResult<usize> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            other => self.error(format!("expected a number, found {}", other.describe())),
        }
    }

    /// `open item (',' item)* close`, possibly empty. A missing separator is
    /// reported as `expected ','`.
    fn list<T>(
        &mut self,
        open: Tok,
        close: Tok,
        mut item: impl FnMut(&mut Self) -> PResult<T>,
    ) -> PResult<Vec<T>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.eat(&close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(&close) {
                return Ok(out);
            }
            if !self.eat(&Tok::Comma) {
                return self.error("expected ','");
            }
        }
    }

    fn item(&mut self) -> PResult<Item> {
        let word = match self.peek() {
            Tok::Ident(s) => s.clone(),
            other => {
                return self.error(format!(
                    "expected 'graph', 'class', 'relation' or 'check', found {}",
                    other.describe()
                ))
            }
        };
        let item = match word.as_str() {
            "graph" => Item::Graph(self.graph()?),
            "class" => {
                self.bump();
                let name = self.ident()?;
                self.expect(Tok::Eq)?;
                let form = self.class_form()?;
                Item::Class(ClassDef { name, form })
            }
            "relation" => {
                self.bump();
                let name = self.ident()?;
                self.expect(Tok::Eq)?;
                let form = self.relation_form()?;
                Item::Relation(RelationDef { name, form })
            }
            "check" => {
                self.bump();
                Item::Check(self.check()?)
            }
            _ => {
                return self.error(format!(
                    "expected 'graph', 'class', 'relation' or 'check', found '{}'",
                    word
                ))
            }
        };
        if !matches!(item, Item::Graph(_)) {
            self.eat(&Tok::Semi);
        }
        Ok(item)
    }

    fn graph(&mut self) -> PResult<GraphDef> {
        self.keyword("graph")?;
        let name = self.ident()?;
        self.expect(Tok::LBrace)?;
        self.keyword("vertices")?;
        self.expect(Tok::Colon)?;
        let vertices = self.int()?;
        self.expect(Tok::Semi)?;
        let mut edges = Vec::new();
        if matches!(self.peek(), Tok::Ident(s) if s == "edges") {
            self.bump();
            self.expect(Tok::Colon)?;
            if *self.peek() != Tok::Semi {
                loop {
                    let at = self.expect(Tok::LParen)?;
                    let u = self.int()?;
                    self.expect(Tok::Comma)?;
                    let v = self.int()?;
                    self.expect(Tok::RParen)?;
                    edges.push((u, v, at));
                    if *self.peek() == Tok::Semi {
                        break;
                    }
                    if !self.eat(&Tok::Comma) {
                        return self.error("expected ','");
                    }
                }
            }
            self.expect(Tok::Semi)?;
        }
        self.expect(Tok::RBrace)?;
        Ok(GraphDef {
            name,
            vertices,
            edges,
        })
    }

    fn class_form(&mut self) -> PResult<ClassForm> {
        let head = self.ident()?;
        let form = match head.name.as_str() {
            "forb" => ClassForm::Forb(self.list(Tok::LParen, Tok::RParen, Self::ident)?),
            "notallembed" => {
                ClassForm::NotAllEmbed(self.list(Tok::LParen, Tok::RParen, Self::ident)?)
            }
            "forbcon" => {
                self.expect(Tok::LParen)?;
                let g = self.ident()?;
                self.expect(Tok::RParen)?;
                ClassForm::ForbCon(g)
            }
            "compmax" => {
                self.expect(Tok::LParen)?;
                let n = self.int()?;
                self.expect(Tok::RParen)?;
                ClassForm::CompMax(n)
            }
            "compcond" => {
                self.expect(Tok::LParen)?;
                let k = self.int()?;
                self.sep()?;
                let n = self.int()?;
                self.expect(Tok::RParen)?;
                ClassForm::CompCond(k, n)
            }
            "notboth" => {
                self.expect(Tok::LParen)?;
                let g = self.ident()?;
                self.sep()?;
                let p = self.bits()?;
                self.sep()?;
                let q = self.bits()?;
                self.expect(Tok::RParen)?;
                ClassForm::NotBoth(g, p, q)
            }
            "sentence" => {
                self.expect(Tok::LParen)?;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                ClassForm::Sentence(e)
            }
            other => {
                return Err(ParseError::new(
                    head.pos,
                    format!("unknown class form '{}'", other),
                ))
            }
        };
        Ok(form)
    }

    /// An argument separator; a missing one reads as `expected ','`.
    fn sep(&mut self) -> PResult<()> {
        if self.eat(&Tok::Comma) {
            Ok(())
        } else {
            self.error("expected ','")
        }
    }

    fn bits(&mut self) -> PResult<Vec<bool>> {
        self.list(Tok::LBracket, Tok::RBracket, |p| {
            let at = p.pos();
            match p.int()? {
                0 => Ok(false),
                1 => Ok(true),
                n => Err(ParseError::new(at, format!("expected 0 or 1, found '{}'", n))),
            }
        })
    }

    fn relation_form(&mut self) -> PResult<RelationForm> {
        let head = self.ident()?;
        let graph_arg = |p: &mut Self| -> PResult<Ident> {
            p.expect(Tok::LParen)?;
            p.ident()
        };
        let form = match head.name.as_str() {
            "component" => RelationForm::Component,
            "component_strict" => RelationForm::ComponentStrict,
            "induced" => RelationForm::Induced,
            "count" | "fc_clique" | "fc_comp" => {
                let g = graph_arg(self)?;
                self.expect(Tok::RParen)?;
                match head.name.as_str() {
                    "count" => RelationForm::Count(g),
                    "fc_clique" => RelationForm::FcClique(g),
                    _ => RelationForm::FcComp(g),
                }
            }
            "forb_bounded" | "noadd" | "typeb" => {
                let g = graph_arg(self)?;
                self.sep()?;
                let n = self.int()?;
                self.expect(Tok::RParen)?;
                match head.name.as_str() {
                    "forb_bounded" => RelationForm::ForbBounded(g, n),
                    "noadd" => RelationForm::NoAdd(g, n),
                    _ => RelationForm::TypeBounded(g, n),
                }
            }
            other => {
                return Err(ParseError::new(
                    head.pos,
                    format!("unknown relation form '{}'", other),
                ))
            }
        };
        Ok(form)
    }

    fn check(&mut self) -> PResult<CheckDef> {
        let head = self.ident()?;
        let expect = !matches!(head.name.as_str(), "nonmember" | "unrelated");
        match head.name.as_str() {
            "member" | "nonmember" => {
                self.expect(Tok::LParen)?;
                let graph = self.ident()?;
                self.sep()?;
                let class = self.ident()?;
                self.expect(Tok::RParen)?;
                Ok(CheckDef::Member {
                    graph,
                    class,
                    expect,
                })
            }
            "related" | "unrelated" => {
                self.expect(Tok::LParen)?;
                let relation = self.ident()?;
                self.sep()?;
                let graph = self.ident()?;
                self.sep()?;
                let set = self.list(Tok::LBracket, Tok::RBracket, Self::int)?;
                self.expect(Tok::RParen)?;
                Ok(CheckDef::Related {
                    relation,
                    graph,
                    set,
                    expect,
                })
            }
            other => Err(ParseError::new(
                head.pos,
                format!(
                    "unknown check '{}' (expected member, nonmember, related or unrelated)",
                    other
                ),
            )),
        }
    }

    // Precedence, loosest first: `<->`, `->` (right-associative), `|`, `&`, `!`.

    fn expr(&mut self) -> PResult<SExpr> {
        let mut lhs = self.implication()?;
        while self.eat(&Tok::DoubleArrow) {
            let rhs = self.implication()?;
            lhs = SExpr::Iff(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> PResult<SExpr> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(SExpr::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> PResult<SExpr> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            let rhs = self.conjunction()?;
            lhs = SExpr::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> PResult<SExpr> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = SExpr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<SExpr> {
        if self.eat(&Tok::Bang) {
            return Ok(SExpr::Not(Box::new(self.unary()?)));
        }
        if self.eat(&Tok::LParen) {
            let e = self.expr()?;
            self.expect(Tok::RParen)?;
            return Ok(e);
        }
        match self.peek() {
            Tok::Ident(s) if s == "embeds" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let g = self.ident()?;
                self.expect(Tok::RParen)?;
                Ok(SExpr::Embeds(g))
            }
            other => self.error(format!(
                "expected 'embeds', '!' or '(', found {}",
                other.describe()
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn first_class(src: &str) -> ClassForm {
        match &parse_spec(src).unwrap().items[0] {
            Item::Class(c) => c.form.clone(),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn class_forms() {
        assert_eq!(first_class("class K = compmax(3)"), ClassForm::CompMax(3));
        match first_class("class K = sentence( embeds(G1) -> embeds(G2) )") {
            ClassForm::Sentence(SExpr::Implies(a, b)) => {
                assert!(matches!(*a, SExpr::Embeds(ref i) if i.name == "G1"));
                assert!(matches!(*b, SExpr::Embeds(ref i) if i.name == "G2"));
            }
            other => panic!("{:?}", other),
        }
        assert_eq!(
            first_class("class K = notboth(K1, [1], [0]);"),
            ClassForm::NotBoth(Ident { name: "K1".into(), pos: Pos { line: 1, col: 19 } }, vec![true], vec![false])
        );
        assert_eq!(first_class("class K = forb()"), ClassForm::Forb(vec![]));
    }

    #[test]
    fn missing_comma_is_positioned() {
        let e = parse_spec("class K = forb(G1 G2)").unwrap_err();
        assert_eq!(e.to_string(), "line 1, column 19: expected ','");
        let e = parse_spec("graph G { vertices: 3;\n\nedges: (0,1) (1,2); }").unwrap_err();
        assert_eq!(e.to_string(), "line 3, column 14: expected ','");
    }

    #[test]
    fn precedence() {
        let e = match first_class("class K = sentence(!embeds(A) & embeds(B) | embeds(C) -> embeds(D) -> embeds(E) <-> embeds(F))") {
            ClassForm::Sentence(e) => e.clone(),
            _ => unreachable!(),
        };
        let SExpr::Iff(lhs, _) = e else { panic!() };
        let SExpr::Implies(or, rest) = *lhs else { panic!() };
        assert!(matches!(*rest, SExpr::Implies(_, _)));
        let SExpr::Or(and, _) = *or else { panic!() };
        let SExpr::And(not, _) = *and else { panic!() };
        assert!(matches!(*not, SExpr::Not(_)));
    }

    #[test]
    fn graphs_relations_checks() {
        let f = parse_spec(
            "graph E { vertices: 2; edges:; }\n\
             graph P { vertices: 3; edges: (0,1), (1,2); }\n\
             graph Z { vertices: 0; }\n\
             relation R = noadd(E5, 2)\n\
             relation S = component_strict\n\
             check related(R, P, [0, 1])\n\
             check nonmember(P, K);",
        )
        .unwrap();
        assert_eq!(f.items.len(), 7);
        match &f.items[1] {
            Item::Graph(g) => assert_eq!(g.edges.len(), 2),
            other => panic!("{:?}", other),
        }
        assert!(matches!(
            &f.items[6],
            Item::Check(CheckDef::Member { expect: false, .. })
        ));
    }

    #[test]
    fn errors() {
        for (src, want) in [
            ("klass K = forb()", "line 1, column 1: expected 'graph', 'class', 'relation' or 'check', found 'klass'"),
            ("class K = blob(3)", "line 1, column 11: unknown class form 'blob'"),
            ("class K = compmax(x)", "line 1, column 19: expected a number, found 'x'"),
            ("class K = notboth(G, [2], [0])", "line 1, column 23: expected 0 or 1, found '2'"),
            ("class K = sentence(embeds(A) &)", "line 1, column 31: expected 'embeds', '!' or '(', found ')'"),
            ("check member(G K)", "line 1, column 16: expected ','"),
            ("relation R = noadd(G, 2", "line 1, column 24: expected ')', found end of input"),
        ] {
            assert_eq!(parse_spec(src).unwrap_err().to_string(), want, "{}", src);
        }
        assert!(parse_class_literal("compmax(3) x").is_err());
        assert_eq!(parse_relation_literal("fc_clique(G)").unwrap(), RelationForm::FcClique(Ident { name: "G".into(), pos: Pos { line: 1, col: 11 } }));
    }
}
