//! Plain-text edge list formats.
//!
//! General graphs: a header line `n m` followed by exactly `m` lines `u v`
//! with `0 <= u < v < n`. Bipartite graphs: a header `a b m` followed by `m`
//! lines `u v` with `u < a` and `v < b` (ids are per side). Lines end in LF,
//! the final line included. Serialization sorts edges lexicographically.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

/// Splits into lines, enforcing LF endings and a trailing newline.
fn split_lines(text: &str) -> Result<Vec<&str>> {
    if text.is_empty() {
        return Err(parse_err(1, "empty input"));
    }
    let Some(body) = text.strip_suffix('\n') else {
        let line = text.matches('\n').count() + 1;
        return Err(parse_err(line, "missing trailing newline"));
    };
    let lines: Vec<&str> = body.split('\n').collect();
    if let Some(i) = lines.iter().position(|l| l.contains('\r')) {
        return Err(parse_err(i + 1, "carriage return in line"));
    }
    Ok(lines)
}

fn parse_fields<const K: usize>(line: &str, lineno: usize) -> Result<[usize; K]> {
    let parts: Vec<&str> = line.split(' ').collect();
    if parts.len() != K {
        return Err(parse_err(
            lineno,
            format!("expected {K} space-separated integers, found {:?}", line),
        ));
    }
    let mut out = [0usize; K];
    for (slot, tok) in out.iter_mut().zip(&parts) {
        if tok.is_empty() || !tok.bytes().all(|c| c.is_ascii_digit()) {
            return Err(parse_err(lineno, format!("not a non-negative integer: {tok:?}")));
        }
        *slot = tok
            .parse()
            .map_err(|_| parse_err(lineno, format!("integer out of range: {tok}")))?;
    }
    Ok(out)
}

fn check_edge_count(lines: &[&str], m: usize) -> Result<()> {
    let found = lines.len() - 1;
    if found < m {
        return Err(parse_err(lines.len() + 1, format!("expected {m} edge lines, found {found}")));
    }
    if found > m {
        return Err(parse_err(m + 2, format!("unexpected line after {m} edges")));
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = split_lines(text)?;
    let [n, m] = parse_fields::<2>(lines[0], 1)?;
    let max_m = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > max_m {
        return Err(parse_err(1, format!("{m} edges exceed the {max_m} possible on {n} vertices")));
    }
    check_edge_count(&lines, m)?;
    let mut g = Graph::empty(n);
    for (i, line) in lines.iter().enumerate().skip(1) {
        let lineno = i + 1;
        let [u, v] = parse_fields::<2>(line, lineno)?;
        if u >= n || v >= n {
            return Err(parse_err(lineno, format!("vertex out of range: ({u}, {v}) with n = {n}")));
        }
        if u == v {
            return Err(parse_err(lineno, format!("self-loop at vertex {u}")));
        }
        if u > v {
            return Err(parse_err(lineno, format!("endpoints must satisfy u < v: ({u}, {v})")));
        }
        g.add_edge(u, v).map_err(|e| parse_err(lineno, e.to_string()))?;
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + g.m() * 12);
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph> {
    let lines = split_lines(text)?;
    let [a, b, m] = parse_fields::<3>(lines[0], 1)?;
    if m > a.saturating_mul(b) {
        return Err(parse_err(1, format!("{m} edges exceed a*b = {}", a.saturating_mul(b))));
    }
    check_edge_count(&lines, m)?;
    let mut g = BipartiteGraph::empty(a, b);
    for (i, line) in lines.iter().enumerate().skip(1) {
        let lineno = i + 1;
        let [u, v] = parse_fields::<2>(line, lineno)?;
        if u >= a || v >= b {
            return Err(parse_err(
                lineno,
                format!("vertex out of range: ({u}, {v}) with sides {a} and {b}"),
            ));
        }
        g.add_edge_original(u, v)
            .map_err(|e| parse_err(lineno, e.to_string()))?;
    }
    Ok(g)
}

/// Writes the graph in the orientation it was created with.
pub fn serialize_bipartite(g: &BipartiteGraph) -> String {
    let (first, second) = g.original_sizes();
    let mut out = String::with_capacity(16 + g.m() * 12);
    let _ = writeln!(out, "{first} {second} {}", g.m());
    for (u, v) in g.edges_original() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
