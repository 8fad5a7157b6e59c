//! Graph text files: one or more `graph` items of the description language.

use aeclab_core::Graph;

use crate::dsl::{parse_spec, resolve, CheckDef, Item, ParseError};

/// Every graph of a graph text file, in order. Any other item is an error.
pub fn parse_graphs(src: &str) -> Result<Vec<(String, Graph)>, ParseError> {
    let file = parse_spec(src)?;
    for item in &file.items {
        let at = match item {
            Item::Graph(_) => continue,
            Item::Class(c) => c.name.pos,
            Item::Relation(r) => r.name.pos,
            Item::Check(CheckDef::Member { graph, .. }) => graph.pos,
            Item::Check(CheckDef::Related { relation, .. }) => relation.pos,
        };
        return Err(ParseError::new(at, "graph files hold graph items only"));
    }
    Ok(resolve(&file)?.graphs)
}

/// The canonical one-line form followed by a newline.
pub fn write_graph(name: &str, g: &Graph) -> String {
    let mut s = g.to_text(name);
    s.push('\n');
    s
}
