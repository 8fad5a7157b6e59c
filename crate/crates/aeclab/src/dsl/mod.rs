//! The description language: graphs, classes, relations and checks.
//!
//! ```text
//! # comments run to the end of the line
//! graph P3 { vertices: 3; edges: (0,1), (1,2); }
//! class K = sentence(embeds(P3) -> embeds(K3))
//! relation R = noadd(E5, 2)
//! check member(P3, K)
//! check unrelated(R, P3, [0])
//! ```

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod resolve;

pub use ast::{CheckDef, ClassForm, Item, RelationForm, SExpr, SpecFile};
pub use lexer::Pos;
pub use parser::{parse_class_literal, parse_relation_literal, parse_spec};
pub use printer::print_spec;
pub use resolve::{builtin_graph, resolve, CheckOutcome, ResolvedCheck, ResolvedSpec};

/// A located error in a description file; displays as `line L, column C: message`.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}
