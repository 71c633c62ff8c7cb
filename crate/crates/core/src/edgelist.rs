//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v      (exactly m lines, 0-based ids)
//! ```
//!
//! Serialization is canonical: edges ascending with `u < v`, LF endings.

use std::fmt::Write as _;
use std::io::Read;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("invalid {what} `{tok}`")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Parses an edge list. Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = parse_pair(header_no, header)?;

    let mut g = Graph::new(n);
    let mut last_line = header_no;
    for _ in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(last_line + 1, format!("expected {m} edges")))?;
        let (u, v) = parse_pair(line_no, line)?;
        g.add_edge(u, v)?;
        last_line = line_no;
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no, format!("more than {m} edges")));
    }
    Ok(g)
}

pub fn read_edge_list<R: Read>(mut reader: R) -> Result<Graph> {
    let mut bytes = Vec::new();
    reader
        .read_to_end(&mut bytes)
        .map_err(|e| parse_err(0, e.to_string()))?;
    let text = String::from_utf8(bytes).map_err(|_| parse_err(0, "input is not UTF-8"))?;
    parse_edge_list(&text)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
