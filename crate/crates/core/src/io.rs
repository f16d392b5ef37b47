//! Edge-list text format.
//!
//! ```text
//! c optional comment lines
//! p edge <n> <m>
//! e <u> <v>        (m lines, 1 <= u, v <= n, u != v)
//! ```
//!
//! Duplicate `e` lines collapse into one edge but still count towards `m`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected `p edge <n> <m>`")]
    MalformedHeader { line: usize },
    #[error("line {line}: second `p` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: edge line before the `p edge` header")]
    EdgeBeforeHeader { line: usize },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("line {line}: malformed edge line, expected `e <u> <v>`")]
    MalformedEdge { line: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} outside 1..{n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: header declares {declared} edges but {found} edge lines follow")]
    EdgeCountMismatch {
        line: usize,
        declared: usize,
        found: usize,
    },
    #[error("line {line}: unrecognised line `{text}`")]
    UnknownLine { line: usize, text: String },
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match *self {
            ParseError::MissingHeader => None,
            ParseError::MalformedHeader { line }
            | ParseError::DuplicateHeader { line }
            | ParseError::EdgeBeforeHeader { line }
            | ParseError::MalformedEdge { line }
            | ParseError::SelfLoop { line, .. }
            | ParseError::VertexOutOfRange { line, .. }
            | ParseError::EdgeCountMismatch { line, .. }
            | ParseError::UnknownLine { line, .. } => Some(line),
        }
    }
}

/// A parsed graph plus its comment lines (without the leading `c `).
#[derive(Debug, Clone)]
pub struct GraphDocument {
    pub graph: Graph,
    pub comments: Vec<String>,
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_graph_document(text).map(|d| d.graph)
}

pub fn parse_graph_document(text: &str) -> Result<GraphDocument, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph = Graph::new(0);
    let mut comments = Vec::new();
    let mut edge_lines = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("c") => {
                comments.push(trimmed[1..].trim_start().to_string());
            }
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                let fields: Vec<&str> = tokens.collect();
                let parsed = match fields.as_slice() {
                    ["edge", n, m] => n.parse::<usize>().ok().zip(m.parse::<usize>().ok()),
                    _ => None,
                };
                let (n, m) = parsed.ok_or(ParseError::MalformedHeader { line })?;
                header = Some((n, m));
                graph = Graph::new(n);
            }
            Some("e") => {
                let (n, _) = header.ok_or(ParseError::EdgeBeforeHeader { line })?;
                let fields: Vec<&str> = tokens.collect();
                let parsed = match fields.as_slice() {
                    [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
                    _ => None,
                };
                let (u, v) = parsed.ok_or(ParseError::MalformedEdge { line })?;
                for vertex in [u, v] {
                    if vertex == 0 || vertex > n {
                        return Err(ParseError::VertexOutOfRange { line, vertex, n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                graph.add_edge(u - 1, v - 1);
                edge_lines += 1;
            }
            _ => {
                return Err(ParseError::UnknownLine {
                    line,
                    text: trimmed.to_string(),
                })
            }
        }
    }

    let (_, m) = header.ok_or(ParseError::MissingHeader)?;
    if m != edge_lines {
        return Err(ParseError::EdgeCountMismatch {
            line: last_line,
            declared: m,
            found: edge_lines,
        });
    }
    Ok(GraphDocument { graph, comments })
}

/// Canonical text: header, then edges with the smaller endpoint first,
/// sorted lexicographically.
pub fn serialize_graph(g: &Graph) -> String {
    serialize_graph_with_comments::<&str>(g, &[])
}

/// Like [`serialize_graph`], with `c <comment>` lines before the header.
pub fn serialize_graph_with_comments<S: AsRef<str>>(g: &Graph, comments: &[S]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {}", c.as_ref());
    }
    let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
