//! Matchings: maximum cardinality matching (Edmonds' blossom algorithm),
//! exhaustive enumeration of maximal matchings, and basic predicates.

mod blossom;
mod enumerate;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use blossom::{maximum_matching, maximum_matching_size};
pub use enumerate::{enumerate_maximal_matchings, EnumerationSummary};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(Vertex, Vertex),
    #[error("vertex {0} is covered by two edges")]
    SharedVertex(Vertex),
}

/// A set of pairwise vertex-disjoint edges of some host graph. Edges are kept
/// normalized (`u < v`) and sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn new(g: &Graph, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, MatchingError> {
        let mut covered = vec![false; g.vertex_count()];
        let mut out = Vec::new();
        for (u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge(u, v));
            }
            for w in [u, v] {
                if std::mem::replace(&mut covered[w], true) {
                    return Err(MatchingError::SharedVertex(w));
                }
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn empty() -> Self {
        Matching { edges: Vec::new() }
    }

    /// Builds from a mate array (`mate[v] = Some(w)` iff `vw` is matched).
    pub(crate) fn from_mates(mate: &[Option<Vertex>]) -> Self {
        let edges = mate.iter().enumerate().filter_map(|(u, &m)| m.filter(|&v| u < v).map(|v| (u, v))).collect();
        Matching { edges }
    }

    pub(crate) fn from_unsorted(mut edges: Vec<(Vertex, Vertex)>) -> Self {
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    /// `V(M)`, sorted.
    pub fn covered_vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<_> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs
    }

    /// Covered-vertex mask over a host with `n` vertices.
    pub fn coverage_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &(a, b) in &self.edges {
            mask[a] = true;
            mask[b] = true;
        }
        mask
    }
}

/// True iff `m` is a matching of `g` and no edge of `g` has both endpoints
/// uncovered.
pub fn is_maximal(g: &Graph, m: &Matching) -> Result<bool, MatchingError> {
    let checked = Matching::new(g, m.edges().iter().copied())?;
    let covered = checked.coverage_mask(g.vertex_count());
    Ok(g.edges().iter().all(|&(u, v)| covered[u] || covered[v]))
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    let n = g.vertex_count();
    n.is_multiple_of(2) && maximum_matching_size(g) * 2 == n
}
