//! DIMACS edge format and cover files.
//!
//! Graph files hold `c` comment lines, one `p edge N M` header and M lines
//! `e u v` with 1-based endpoints. Vertex `i` of a file is [`VertexId`]
//! `i - 1` inside the solver.

use std::fmt::Write as _;

use thiserror::Error;
use vc3::{Graph, VertexId, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

#[derive(Debug)]
pub struct Parsed {
    pub graph: Graph,
    pub num_vertices: u32,
    /// Edge lines that repeated an earlier edge.
    pub duplicate_edges: usize,
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<u32, ParseError> {
    let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        err(
            line,
            format!("{what} {tok:?} is not a non-negative integer"),
        )
    })
}

pub fn parse_dimacs(text: &str) -> Result<Parsed, ParseError> {
    let mut header: Option<(u32, usize, usize)> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut last_line = 0;
    for (no, line) in lines(text) {
        last_line = no;
        let mut toks = line.split(' ').filter(|t| !t.is_empty());
        match toks.next() {
            None => continue,
            Some("c") => continue,
            Some("p") => {
                if let Some((_, _, first)) = header {
                    return Err(err(no, format!("second header, first one on line {first}")));
                }
                if toks.next() != Some("edge") {
                    return Err(err(no, "header must read `p edge N M`"));
                }
                let n = number(toks.next(), no, "vertex count")?;
                let m = number(toks.next(), no, "edge count")?;
                if toks.next().is_some() {
                    return Err(err(no, "trailing tokens after header"));
                }
                header = Some((n, m as usize, no));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(err(no, "edge before header"));
                };
                let u = number(toks.next(), no, "endpoint")?;
                let v = number(toks.next(), no, "endpoint")?;
                if toks.next().is_some() {
                    return Err(err(no, "trailing tokens after edge"));
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(no, format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(no, format!("self-loop at vertex {u}")));
                }
                edges.push((VertexId(u - 1), VertexId(v - 1)));
            }
            Some(tok) => return Err(err(no, format!("unknown line type {tok:?}"))),
        }
    }
    let Some((n, m, header_line)) = header else {
        return Err(err(last_line.max(1), "missing `p edge N M` header"));
    };
    if edges.len() != m {
        return Err(err(
            header_line,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    let mut graph = Graph::from_parts((0..n).map(VertexId), []).expect("no edges yet");
    let mut duplicate_edges = 0;
    for (a, b) in edges {
        if !graph.add_edge(a, b).expect("endpoints validated") {
            duplicate_edges += 1;
        }
    }
    Ok(Parsed {
        graph,
        num_vertices: n,
        duplicate_edges,
    })
}

/// DIMACS text for `g`; `n` is the announced vertex count and must exceed
/// every id in the graph.
pub fn write_dimacs(g: &Graph, n: u32, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p edge {n} {}", g.num_edges()).unwrap();
    for (a, b) in g.edges() {
        debug_assert!(a.0 < n && b.0 < n);
        writeln!(out, "e {} {}", a.0 + 1, b.0 + 1).unwrap();
    }
    out
}

/// Cover file: one 1-based id per line. The JSON written by `minimize` and
/// `solve` is accepted too, in which case its `cover` field is used.
pub fn parse_cover(text: &str, n: u32) -> Result<VertexSet, ParseError> {
    let ids: Vec<(usize, u32)> = if text.trim_start().starts_with('{') {
        let doc: serde_json::Value =
            serde_json::from_str(text).map_err(|e| err(e.line(), format!("bad JSON: {e}")))?;
        let cover = doc
            .get("cover")
            .and_then(|c| c.as_array())
            .ok_or_else(|| err(1, "JSON document has no `cover` array"))?;
        cover
            .iter()
            .map(|x| {
                x.as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .map(|x| (1, x))
                    .ok_or_else(|| err(1, format!("cover entry {x} is not a vertex id")))
            })
            .collect::<Result<_, _>>()?
    } else {
        let mut ids = Vec::new();
        for (no, line) in lines(text) {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            ids.push((no, number(Some(line), no, "vertex id")?));
        }
        ids
    };
    let mut cover = VertexSet::new();
    for (no, x) in ids {
        if x == 0 || x > n {
            return Err(err(no, format!("vertex {x} outside 1..={n}")));
        }
        cover.insert(VertexId(x - 1));
    }
    Ok(cover)
}

/// 1-based labels, ascending.
pub fn labels(set: &VertexSet) -> Vec<u32> {
    set.iter().map(|v| v.0 + 1).collect()
}
