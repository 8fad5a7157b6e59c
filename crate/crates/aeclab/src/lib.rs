//! Description files (`.spec`), graph text files, JSON reports and the `aeclab` command line
//! on top of `aeclab-core`.

pub mod cli;
pub mod dsl;
pub mod report;
pub mod text;
