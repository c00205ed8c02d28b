//! The `.khg` text format.
//!
//! ```text
//! khg 1
//! n=6 k=3
//! 1 2 3
//! 1 2 4
//! ```
//!
//! Edge lines hold ascending, space-separated 1-based vertices and appear in
//! strictly increasing lexicographic order. Lines starting with `#` are
//! comments: accepted anywhere, ignored, never written. ASCII, `\n` line ends.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{check_params, Edge, KGraph};

const MAGIC: &str = "khg 1";

pub fn write_khg(f: &KGraph) -> String {
    let mut out = String::with_capacity(16 + f.len() * 3 * f.k());
    out.push_str(MAGIC);
    out.push('\n');
    let _ = writeln!(out, "n={} k={}", f.n(), f.k());
    for e in f.edges() {
        let _ = writeln!(out, "{e}");
    }
    out
}

pub fn read_khg(input: &str) -> Result<KGraph> {
    let err = |line: usize, reason: &str| Error::Parse {
        line,
        reason: reason.to_string(),
    };
    if !input.is_ascii() {
        return Err(err(0, "input is not ASCII"));
    }
    if !input.is_empty() && !input.ends_with('\n') {
        return Err(err(input.lines().count(), "missing final newline"));
    }

    let mut lines = input
        .split_terminator('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.starts_with('#'));

    let (ln, magic) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    if magic != MAGIC {
        return Err(err(ln, "expected header `khg 1`"));
    }
    let (ln, params) = lines.next().ok_or_else(|| err(ln + 1, "missing `n=<n> k=<k>` line"))?;
    let (n, k) = parse_params(params).ok_or_else(|| err(ln, "expected `n=<n> k=<k>`"))?;
    check_params(n, k).map_err(|e| err(ln, &e.to_string()))?;

    let mut edges: Vec<Edge> = Vec::new();
    for (ln, line) in lines {
        let mut vertices = Vec::with_capacity(k);
        for tok in line.split(' ') {
            let v: usize = parse_decimal(tok).ok_or_else(|| err(ln, "malformed vertex"))?;
            if v == 0 || v > n {
                return Err(err(ln, &format!("vertex {v} outside 1..={n}")));
            }
            if vertices.last().is_some_and(|&last| last >= v) {
                return Err(err(ln, "vertices are not strictly ascending"));
            }
            vertices.push(v);
        }
        if vertices.len() != k {
            return Err(err(
                ln,
                &format!("edge has {} vertices, expected {k}", vertices.len()),
            ));
        }
        let e = Edge::from_vertices(&vertices);
        if let Some(&prev) = edges.last() {
            if prev == e {
                return Err(err(ln, "duplicate edge"));
            }
            if prev > e {
                return Err(err(ln, "edges are not in lexicographic order"));
            }
        }
        edges.push(e);
    }
    Ok(KGraph::from_edges_unchecked(n, k, edges))
}

fn parse_params(line: &str) -> Option<(usize, usize)> {
    let (a, b) = line.split_once(' ')?;
    let n = parse_decimal(a.strip_prefix("n=")?)?;
    let k = parse_decimal(b.strip_prefix("k=")?)?;
    Some((n, k))
}

/// Plain decimal without sign or leading zeros.
fn parse_decimal(tok: &str) -> Option<usize> {
    if tok.is_empty()
        || !tok.bytes().all(|b| b.is_ascii_digit())
        || (tok.len() > 1 && tok.starts_with('0'))
    {
        return None;
    }
    tok.parse().ok()
}
