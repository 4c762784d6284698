//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! 0-based ids. Duplicate edge lines are accepted and collapsed. Blank lines
//! are ignored.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("expected {what}, missing {name}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("{name} `{tok}` is not a natural number")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(parse_err(
            line_no,
            format!("unexpected trailing field `{extra}`"),
        ));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_no, header, "`n m` header")?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| {
            parse_err(
                header_no,
                format!("header announces {m} edges, found {}", edges.len()),
            )
        })?;
        let (u, v) = parse_pair(line_no, line, "edge `u v`")?;
        for w in [u, v] {
            if w >= n {
                return Err(parse_err(
                    line_no,
                    format!("vertex {w} out of range 0..{n}"),
                ));
            }
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(
            line_no,
            format!("more than the {m} announced edge lines"),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Canonical form: edges as `u v` with `u < v`, sorted lexicographically.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
