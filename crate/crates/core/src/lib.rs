//! Finite-graph laboratory for abstract elementary classes.
//!
//! The crate is `no_std` (with `alloc`) and purely computational:
//!
//! * [`graph`]: finite simple graphs, vertex sets, induced embeddings,
//!   components, cliques and canonical forms;
//! * [`relations`]: the strong-submodel relations between a graph and an
//!   induced subgraph of it;
//! * [`class`]: graph-class membership predicates;
//! * [`lab`]: axiom checks, amalgam / joint-embedding searches and the
//!   certificates they emit;
//! * [`constructions`]: named graphs, corpora and scenarios.
//!
//! Parsing, file formats and the command-line front end live in the
//! `aeclab` crate.

#![no_std]

extern crate alloc;

pub mod class;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod lab;
pub mod relations;

pub use class::{ClassSpec, Expr};
pub use error::{Error, Result};
pub use graph::{Embedding, Graph, Partition, VertexSet};
pub use lab::{Certificate, CertificateKind};
pub use relations::{QfType, SubmodelRelation};
