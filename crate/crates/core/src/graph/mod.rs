//! Simple undirected graphs on vertices `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are stored normalized as
//! `(u, v)` with `u < v` and sorted lexicographically, which is also the
//! canonical serialization order of the text format in [`io`].

mod classify;
mod generate;
pub mod io;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

pub use classify::{
    articulation_points, bipartition, classify_basic, classify_shape, BasicClassification, Bipartition, Shape,
};
pub use generate::{complete, complete_bipartite, cycle, disjoint_union, generate_basic, path, petersen, BasicFamily};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("vertex {vertex} is outside 0..{n}")]
    UnknownVertex { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("vertex id {id} out of range for n = {n}")]
    OutOfRange { id: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(skip)]
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_normalized(n, seen.into_iter().collect()))
    }

    /// `edges` must already be normalized, sorted and free of duplicates.
    pub(crate) fn from_normalized(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex { vertex: v, n: self.n })
        }
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Relabels vertices by `perm` (old id -> new id). `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Graph::from_normalized(self.n, edges)
    }
}

/// Result of deleting a vertex set: the induced subgraph on the remaining
/// vertices, renumbered in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `old_to_new[v]` is `None` for removed vertices.
    pub old_to_new: Vec<Option<Vertex>>,
    pub new_to_old: Vec<Vertex>,
}

/// `G − S`: removes every vertex of `removed` and its incident edges.
pub fn remove_vertices(g: &Graph, removed: &[Vertex]) -> Result<Induced, GraphError> {
    let mut keep = vec![true; g.n];
    for &v in removed {
        g.check_vertex(v)?;
        keep[v] = false;
    }
    Ok(induced_by_mask(g, &keep))
}

/// Induced subgraph on the vertices `v` with `keep[v]`.
pub fn induced_by_mask(g: &Graph, keep: &[bool]) -> Induced {
    let mut old_to_new = vec![None; g.n];
    let mut new_to_old = Vec::new();
    for v in 0..g.n {
        if keep[v] {
            old_to_new[v] = Some(new_to_old.len());
            new_to_old.push(v);
        }
    }
    let edges = g.edges.iter().filter_map(|&(u, v)| Some((old_to_new[u]?, old_to_new[v]?))).collect();
    Induced { graph: Graph::from_normalized(new_to_old.len(), edges), old_to_new, new_to_old }
}
