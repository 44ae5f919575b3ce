//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//! Indices are 0-based. Anything after `#` on a line is ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("header declares {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header line \"n m\"")]
    MissingHeader,
}

fn fields(line: &str) -> Vec<&str> {
    let body = line.split('#').next().unwrap_or("");
    body.split_whitespace().collect()
}

fn parse_pair(line_no: usize, parts: &[&str]) -> Result<(usize, usize), EdgeListError> {
    if parts.len() != 2 {
        return Err(EdgeListError::Syntax {
            line: line_no,
            msg: format!("expected two integers, found {} fields", parts.len()),
        });
    }
    let num = |s: &str| {
        s.parse::<usize>().map_err(|_| EdgeListError::Syntax {
            line: line_no,
            msg: format!("not a non-negative integer: {s:?}"),
        })
    };
    Ok((num(parts[0])?, num(parts[1])?))
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let parts = fields(line);
        if parts.is_empty() {
            continue;
        }
        let pair = parse_pair(line_no, &parts)?;
        match header {
            None => header = Some(pair),
            Some((n, _)) => {
                let (u, v) = pair;
                if u >= n || v >= n {
                    return Err(EdgeListError::Graph {
                        line: line_no,
                        source: GraphError::OutOfRange { u, v, n },
                    });
                }
                if u == v {
                    return Err(EdgeListError::Graph {
                        line: line_no,
                        source: GraphError::SelfLoop(u),
                    });
                }
                edges.push(pair);
                edge_lines.push(line_no);
            }
        }
    }
    let (n, m) = header.ok_or(EdgeListError::MissingHeader)?;
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edge_list(n, &edges).map_err(|e| {
        // only duplicates can remain; point at the second occurrence
        let line = match &e {
            GraphError::Duplicate(a, b) => edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| (u.min(v), u.max(v)) == (*a, *b))
                .nth(1)
                .map(|(i, _)| edge_lines[i])
                .unwrap_or(0),
            _ => 0,
        };
        EdgeListError::Graph { line, source: e }
    })
}

pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
