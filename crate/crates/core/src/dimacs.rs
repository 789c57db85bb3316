//! DIMACS graph format and DOT export.
//!
//! The graph dialect is `p edge N M` followed by `M` lines `e u v` with
//! 1-based endpoints. Lines starting with `c` are comments. The writer emits
//! edges sorted, smaller endpoint first, so output is byte-for-byte stable.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Edge, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `p` header line")]
    MissingHeader,
    #[error("header declares {declared} {what} but {found} were given")]
    CountMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ParseError {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            Some(tok) if !tok.starts_with('c') => Some((i + 1, fields)),
            _ => None,
        }
    })
}

pub(crate) fn parse_number(line: usize, token: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::syntax(line, format!("expected a non-negative integer, found `{token}`")))
}

/// Converts a 1-based endpoint to a 0-based vertex, checking the range.
pub(crate) fn parse_vertex(line: usize, token: &str, n: usize) -> Result<usize, ParseError> {
    let v = parse_number(line, token)?;
    if v == 0 || v > n {
        return Err(ParseError::syntax(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

/// Parsed graph plus any `s u v` lines, which only the polar format uses.
pub(crate) struct RawGraph {
    pub graph: Graph,
    pub polar: Vec<Edge>,
}

pub(crate) fn parse_graph_with_extensions(text: &str, allow_polar: bool) -> Result<RawGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut polar = Vec::new();
    for (line, fields) in content_lines(text) {
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(ParseError::syntax(line, "second `p` header"));
                }
                if fields.len() != 4 || !matches!(fields[1], "edge" | "col") {
                    return Err(ParseError::syntax(line, "expected `p edge N M`"));
                }
                header = Some((parse_number(line, fields[2])?, parse_number(line, fields[3])?));
            }
            "e" | "s" => {
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                if fields.len() != 3 {
                    return Err(ParseError::syntax(line, format!("expected `{} u v`", fields[0])));
                }
                let u = parse_vertex(line, fields[1], n)?;
                let v = parse_vertex(line, fields[2], n)?;
                if fields[0] == "e" {
                    edges.push((u, v));
                } else if allow_polar {
                    polar.push((u, v));
                } else {
                    return Err(ParseError::syntax(line, "polar `s` line in a plain graph file"));
                }
            }
            other => return Err(ParseError::syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            what: "edges",
            declared: m,
            found: edges.len(),
        });
    }
    let graph = Graph::new(n, edges)?;
    Ok(RawGraph { graph, polar })
}

/// Parses a DIMACS graph. Duplicate edges, self-loops and a wrong edge
/// count in the header are errors.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    parse_graph_with_extensions(text, false).map(|raw| raw.graph)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Graphviz rendering. With a coloring, each vertex carries a `color`
/// attribute naming its color class.
pub fn write_dot(g: &Graph, coloring: Option<&Coloring>) -> String {
    const PALETTE: [&str; 8] = ["red", "blue", "green", "orange", "purple", "cyan", "magenta", "brown"];
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match coloring {
            Some(c) => {
                let class = c.color(v);
                let name = PALETTE[(class as usize + PALETTE.len() - 1) % PALETTE.len()];
                writeln!(out, "  {v} [label=\"{v}:{class}\", color={name}];").unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
