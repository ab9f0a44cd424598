//! Command-line front end for `drg-core`: the graph file format, builtin
//! graphs, JSON reports and the agreement checks between graphs and arrays.

pub mod catalog;
pub mod cli;
pub mod crosscheck;
pub mod format;
pub mod report;

pub use cli::run;
