//! Rotation systems and their text format.
//!
//! ```text
//! n 3
//! e 0 0 1
//! e 1 0 2
//! e 2 1 2
//! r 0: 0+ 1+
//! r 1: 0- 2+
//! r 2: 1- 2-
//! ```
//!
//! `e <id> <u> <v>` declares edge `id` from `u` to `v`; a dart `<id>+` is the
//! end of edge `id` at `u`, `<id>-` the end at `v`. Every vertex with at
//! least one incident edge needs an `r` line. The canonical form lists edges
//! by id and rotations by vertex.

use std::fmt::Write;

use serde::Serialize;

use super::TopologyError;
use crate::graph::{Graph, Vertex};

/// An edge end. Dart `2e` is the `u`-end of edge `e`, dart `2e + 1` the
/// `v`-end. Read as a directed edge, a dart leaves the vertex it sits at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(edge: usize, at_u: bool) -> Self {
        Dart(2 * edge + usize::from(!at_u))
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn is_u_end(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn reverse(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

/// Orientable embedding of a loopless multigraph: a cyclic order of darts at
/// every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationSystem {
    vertices: usize,
    edges: Vec<(Vertex, Vertex)>,
    rotation: Vec<Vec<Dart>>,
}

impl RotationSystem {
    pub fn new(vertices: usize, edges: Vec<(Vertex, Vertex)>, rotation: Vec<Vec<Dart>>) -> Result<Self, TopologyError> {
        if rotation.len() != vertices {
            return Err(TopologyError::InvalidRotation(format!(
                "{} rotations for {vertices} vertices",
                rotation.len()
            )));
        }
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(TopologyError::InvalidRotation(format!("edge {id} has an endpoint out of range")));
            }
            if u == v {
                return Err(TopologyError::InvalidRotation(format!("edge {id} is a loop")));
            }
        }
        let mut seen = vec![false; 2 * edges.len()];
        for (w, rot) in rotation.iter().enumerate() {
            for &d in rot {
                if d.edge() >= edges.len() {
                    return Err(TopologyError::InvalidRotation(format!("dart {} at vertex {w} names no edge", d.0)));
                }
                let (u, v) = edges[d.edge()];
                let tail = if d.is_u_end() { u } else { v };
                if tail != w {
                    return Err(TopologyError::InvalidRotation(format!(
                        "dart {} of edge {} does not sit at vertex {w}",
                        d.0,
                        d.edge()
                    )));
                }
                if std::mem::replace(&mut seen[d.0], true) {
                    return Err(TopologyError::InvalidRotation(format!("dart {} listed twice", d.0)));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(TopologyError::InvalidRotation(format!(
                "dart {} of edge {} missing from its rotation",
                missing,
                missing / 2
            )));
        }
        Ok(RotationSystem { vertices, edges, rotation })
    }

    /// Rotation of a simple graph with every vertex's darts ordered by
    /// increasing neighbour. Edge ids follow `g.edges()`.
    pub fn from_graph(g: &Graph) -> Self {
        let mut rotation = vec![Vec::new(); g.vertex_count()];
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            rotation[u].push((v, Dart::new(id, true)));
            rotation[v].push((u, Dart::new(id, false)));
        }
        let rotation = rotation
            .into_iter()
            .map(|mut r| {
                r.sort_unstable();
                r.into_iter().map(|(_, d)| d).collect()
            })
            .collect();
        RotationSystem { vertices: g.vertex_count(), edges: g.edges().to_vec(), rotation }
    }

    /// Same graph and edge ids as `self`, with new cyclic orders.
    pub fn with_rotation(&self, rotation: Vec<Vec<Dart>>) -> Result<Self, TopologyError> {
        RotationSystem::new(self.vertices, self.edges.clone(), rotation)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn rotation(&self, v: Vertex) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    /// Vertex the dart sits at.
    pub fn tail(&self, d: Dart) -> Vertex {
        let (u, v) = self.edges[d.edge()];
        if d.is_u_end() {
            u
        } else {
            v
        }
    }

    pub fn head(&self, d: Dart) -> Vertex {
        self.tail(d.reverse())
    }

    /// `succ[d]`: the dart following `d` in the rotation at its tail.
    pub fn successor_table(&self) -> Vec<Dart> {
        let mut succ = vec![Dart(0); 2 * self.edges.len()];
        for rot in &self.rotation {
            for (i, &d) in rot.iter().enumerate() {
                succ[d.0] = rot[(i + 1) % rot.len()];
            }
        }
        succ
    }

    /// The simple graph underneath; fails on parallel edges.
    pub fn underlying_graph(&self) -> Result<Graph, TopologyError> {
        Graph::new(self.vertices, self.edges.iter().copied()).map_err(|e| TopologyError::NotSimple(e.to_string()))
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.vertices
    }
}

/// Source line, vertex, and its darts as `(edge id, at u-end)`.
type DartLine = (usize, Vertex, Vec<(usize, bool)>);

pub fn parse_rotation(text: &str) -> Result<RotationSystem, TopologyError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<Option<(Vertex, Vertex)>> = Vec::new();
    let mut dart_lines: Vec<DartLine> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| TopologyError::Parse { line: line_no, message: msg };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let num = |tok: Option<&str>| -> Result<usize, TopologyError> {
            tok.and_then(|t| t.parse().ok()).ok_or_else(|| err(format!("malformed line `{line}`")))
        };
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("n") => {
                if n.is_some() {
                    return Err(err("duplicate header".into()));
                }
                let count = num(tokens.next())?;
                n = Some(count);
            }
            Some("e") => {
                let count = n.ok_or_else(|| err("missing `n <count>` header".into()))?;
                let (id, u, v) = (num(tokens.next())?, num(tokens.next())?, num(tokens.next())?);
                if u >= count || v >= count {
                    return Err(err(format!("edge {id} has an endpoint out of range")));
                }
                if id >= edges.len() {
                    edges.resize(id + 1, None);
                }
                if edges[id].replace((u, v)).is_some() {
                    return Err(err(format!("edge {id} declared twice")));
                }
            }
            Some("r") => {
                let count = n.ok_or_else(|| err("missing `n <count>` header".into()))?;
                let rest = line[1..].trim_start();
                let (vtx, darts) = rest.split_once(':').ok_or_else(|| err(format!("malformed line `{line}`")))?;
                let w: usize = vtx.trim().parse().map_err(|_| err(format!("malformed line `{line}`")))?;
                if w >= count {
                    return Err(err(format!("vertex {w} out of range")));
                }
                let mut parsed = Vec::new();
                for tok in darts.split_whitespace() {
                    let (id, at_u) = if let Some(id) = tok.strip_suffix('+') {
                        (id, true)
                    } else if let Some(id) = tok.strip_suffix('-') {
                        (id, false)
                    } else {
                        return Err(err(format!("malformed dart `{tok}`")));
                    };
                    let id: usize = id.parse().map_err(|_| err(format!("malformed dart `{tok}`")))?;
                    parsed.push((id, at_u));
                }
                if dart_lines.iter().any(|(_, x, _)| *x == w) {
                    return Err(err(format!("rotation of vertex {w} given twice")));
                }
                dart_lines.push((line_no, w, parsed));
            }
            _ => return Err(err(format!("malformed line `{line}`"))),
        }
    }
    let n = n.ok_or(TopologyError::Parse { line: 0, message: "missing `n <count>` header".into() })?;
    let edges: Vec<(Vertex, Vertex)> = edges
        .into_iter()
        .enumerate()
        .map(|(id, e)| e.ok_or(TopologyError::Parse { line: 0, message: format!("edge id {id} never declared") }))
        .collect::<Result<_, _>>()?;
    let mut rotation = vec![Vec::new(); n];
    for (line, w, darts) in dart_lines {
        for (id, at_u) in darts {
            if id >= edges.len() {
                return Err(TopologyError::Parse { line, message: format!("dart names unknown edge {id}") });
            }
            rotation[w].push(Dart::new(id, at_u));
        }
    }
    RotationSystem::new(n, edges, rotation)
}

pub fn serialize_rotation(r: &RotationSystem) -> String {
    let mut out = format!("n {}\n", r.vertex_count());
    for (id, &(u, v)) in r.edges().iter().enumerate() {
        writeln!(out, "e {id} {u} {v}").unwrap();
    }
    for (w, rot) in r.rotations().iter().enumerate() {
        if rot.is_empty() {
            continue;
        }
        write!(out, "r {w}:").unwrap();
        for d in rot {
            write!(out, " {}{}", d.edge(), if d.is_u_end() { '+' } else { '-' }).unwrap();
        }
        out.push('\n');
    }
    out
}
