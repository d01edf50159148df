use serde::Serialize;

use super::{Dart, RotationSystem, TopologyError};
use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EmbeddingStats {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub genus: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceTrace {
    pub stats: EmbeddingStats,
    /// Faces as dart cycles, each starting at its smallest dart, ordered by
    /// that dart.
    pub faces: Vec<Vec<Dart>>,
}

impl FaceTrace {
    /// Vertex sequence of a face (tail of each dart).
    pub fn face_vertices(&self, r: &RotationSystem, face: usize) -> Vec<Vertex> {
        self.faces[face].iter().map(|&d| r.tail(d)).collect()
    }
}

pub fn face_trace(r: &RotationSystem) -> Result<FaceTrace, TopologyError> {
    if !r.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    let (p, q) = (r.vertex_count(), r.edge_count());
    let succ = r.successor_table();
    let mut seen = vec![false; 2 * q];
    let mut faces = Vec::new();
    for start in 0..2 * q {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = Dart(start);
        while !seen[d.0] {
            seen[d.0] = true;
            face.push(d);
            d = succ[d.reverse().0];
        }
        faces.push(face);
    }
    // a lone vertex bounds one face with no darts
    let r_count = if q == 0 { 1 } else { faces.len() };
    let euler = p as i64 - q as i64 + r_count as i64;
    debug_assert!(euler <= 2 && euler % 2 == 0);
    let stats = EmbeddingStats { p, q, r: r_count, genus: ((2 - euler) / 2) as usize };
    Ok(FaceTrace { stats, faces })
}

/// Indices of faces whose boundary passes through both `a` and `b`.
pub fn faces_containing(r: &RotationSystem, trace: &FaceTrace, a: Vertex, b: Vertex) -> Vec<usize> {
    trace
        .faces
        .iter()
        .enumerate()
        .filter(|(_, f)| f.iter().any(|&d| r.tail(d) == a) && f.iter().any(|&d| r.tail(d) == b))
        .map(|(i, _)| i)
        .collect()
}
