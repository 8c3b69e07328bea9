//! Plain-text graph and coloring files.
//!
//! Graph file: `#` comment lines, then a header line `n m`, then exactly `m`
//! lines `u v` with `u < v`. Coloring file: comments, a header `q n`, then
//! one line of `n` color indices. Blank lines are ignored. Serialization is
//! canonical: no comments, single spaces, LF endings, edges sorted.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Coloring, ColoringError, Palette};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of file: {0}")]
    Truncated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Data lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields(line: usize, s: &str) -> Result<Vec<usize>, FormatError> {
    s.split_ascii_whitespace()
        .map(|t| {
            t.parse().map_err(|_| FormatError::Syntax {
                line,
                message: format!("expected a non-negative integer, found {t:?}"),
            })
        })
        .collect()
}

fn expect_pair(line: usize, s: &str, what: &str) -> Result<(usize, usize), FormatError> {
    match parse_fields(line, s)?[..] {
        [a, b] => Ok((a, b)),
        _ => Err(FormatError::Syntax { line, message: format!("expected {what}") }),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or_else(|| FormatError::Truncated("missing header".into()))?;
    let (n, m) = expect_pair(line, header, "header \"n m\"")?;
    let mut edges = Vec::with_capacity(m);
    for (line, s) in lines {
        let (u, v) = expect_pair(line, s, "edge \"u v\"")?;
        if u >= v {
            return Err(FormatError::Syntax { line, message: format!("edge {u} {v} needs u < v") });
        }
        if edges.len() == m {
            return Err(FormatError::Syntax { line, message: format!("more than {m} edges") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::Truncated(format!("expected {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring, FormatError> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or_else(|| FormatError::Truncated("missing header".into()))?;
    let (q, n) = expect_pair(line, header, "header \"q n\"")?;
    let palette = Palette::new(q)?;
    let colors = match lines.next() {
        Some((line, s)) => {
            let colors = parse_fields(line, s)?;
            if colors.len() != n {
                return Err(FormatError::Syntax {
                    line,
                    message: format!("expected {n} colors, found {}", colors.len()),
                });
            }
            colors
        }
        None if n == 0 => Vec::new(),
        None => return Err(FormatError::Truncated("missing color line".into())),
    };
    if let Some((line, _)) = lines.next() {
        return Err(FormatError::Syntax { line, message: "trailing data".into() });
    }
    Ok(Coloring::new(palette, colors)?)
}

pub fn write_coloring(c: &Coloring) -> String {
    let body: Vec<String> = c.colors().iter().map(usize::to_string).collect();
    format!("{} {}\n{}\n", c.q(), c.len(), body.join(" "))
}
