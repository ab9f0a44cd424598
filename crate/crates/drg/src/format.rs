//! The line-oriented graph file format.
//!
//! ```text
//! # drg-graph v1
//! name=<string>
//! n=<int>
//! 0: 1 17 89
//! ...
//! ```
//!
//! One adjacency line per vertex, in order, neighbors ascending; every edge
//! appears from both ends. Rendering is the exact inverse of parsing.

use std::fmt::Write as _;
use std::path::Path;

use drg_core::graph::{Graph, GraphError};

pub const HEADER: &str = "# drg-graph v1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line 1: expected header `{HEADER}`")]
    Header,
    #[error("line {line}: expected `{field}=<value>`")]
    Field { line: usize, field: &'static str },
    #[error("line {line}: {msg}")]
    Adjacency { line: usize, msg: String },
    #[error("expected {expected} adjacency lines, found {found}")]
    VertexCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// A graph with the name recorded in its file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

pub fn parse_graph(text: &str) -> Result<NamedGraph, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    match lines.next() {
        Some((_, l)) if l.trim_end() == HEADER => {}
        _ => return Err(FormatError::Header),
    }
    let mut field = |name: &'static str| -> Result<String, FormatError> {
        let (line, l) = lines.next().ok_or(FormatError::Field { line: 0, field: name })?;
        l.strip_prefix(name)
            .and_then(|rest| rest.strip_prefix('='))
            .map(|v| v.trim().to_string())
            .ok_or(FormatError::Field { line, field: name })
    };
    let name = field("name")?;
    let n_text = field("n")?;
    let n: usize = n_text.parse().map_err(|_| FormatError::Field { line: 3, field: "n" })?;
    let mut adj = Vec::with_capacity(n);
    for (line, l) in lines {
        if l.trim().is_empty() {
            continue;
        }
        let (v, rest) = l.split_once(':').ok_or_else(|| FormatError::Adjacency {
            line,
            msg: "missing `:`".into(),
        })?;
        let v: usize = v.trim().parse().map_err(|_| FormatError::Adjacency {
            line,
            msg: format!("bad vertex label `{}`", v.trim()),
        })?;
        if v != adj.len() {
            return Err(FormatError::Adjacency {
                line,
                msg: format!("expected vertex {}, found {v}", adj.len()),
            });
        }
        let neighbors = rest
            .split_whitespace()
            .map(|w| {
                w.parse::<usize>().map_err(|_| FormatError::Adjacency {
                    line,
                    msg: format!("bad neighbor `{w}`"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        adj.push(neighbors);
    }
    if adj.len() != n {
        return Err(FormatError::VertexCount {
            expected: n,
            found: adj.len(),
        });
    }
    Ok(NamedGraph {
        name,
        graph: Graph::new(adj)?,
    })
}

pub fn render_graph(name: &str, g: &Graph) -> String {
    let mut out = format!("{HEADER}\nname={name}\nn={}\n", g.n());
    for v in 0..g.n() {
        let _ = write!(out, "{v}:");
        for w in g.neighbors(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}

pub fn load_graph(path: &Path) -> Result<NamedGraph, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text)
}

pub fn save_graph(path: &Path, name: &str, g: &Graph) -> Result<(), FormatError> {
    std::fs::write(path, render_graph(name, g)).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}
