//! Graph text format.
//!
//! ```text
//! # comment
//! n 3
//! e 0 1
//! e 1 2
//! ```
//!
//! The header must precede every edge line. Blank lines and lines starting
//! with `#` are ignored. [`serialize_graph`] writes the header followed by
//! the edges sorted with `u < v`.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::{Graph, GraphError, ParseErrorKind};

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |kind| GraphError::Parse { line: line_no, kind };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let nums: Result<Vec<usize>, _> = tokens.map(str::parse).collect();
        let malformed = || err(ParseErrorKind::Malformed(line.to_string()));
        let nums = nums.map_err(|_| malformed())?;
        match (tag, nums.as_slice()) {
            ("n", &[count]) => {
                if n.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                n = Some(count);
            }
            ("e", &[u, v]) => {
                let count = n.ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                for id in [u, v] {
                    if id >= count {
                        return Err(err(ParseErrorKind::OutOfRange { id, n: count }));
                    }
                }
                if u == v {
                    return Err(err(ParseErrorKind::Loop(u)));
                }
                let e = (u.min(v), u.max(v));
                if !edges.insert(e) {
                    return Err(err(ParseErrorKind::DuplicateEdge(e.0, e.1)));
                }
            }
            _ => return Err(malformed()),
        }
    }
    let n = n.ok_or(GraphError::Parse { line: 0, kind: ParseErrorKind::MissingHeader })?;
    Ok(Graph::from_normalized(n, edges.into_iter().collect()))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
