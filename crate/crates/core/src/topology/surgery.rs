//! Local rewrites of rotation systems: adding an edge across a face,
//! splicing two embeddings together and replacing edges by subdivided
//! parallel classes.

use serde::Serialize;

use super::{face_trace, faces_containing, Dart, EmbeddingStats, RotationSystem, TopologyError};
use crate::graph::Vertex;

/// Adds edge `(tail(at_a), tail(at_b))` with the new darts placed just before
/// `at_a` and `at_b` in their rotations, so the new edge enters the face
/// corners from which `at_a` and `at_b` leave. The new edge gets the next id.
///
/// Corners on one face split it in two; corners on two faces merge them.
pub fn add_edge_in_face(r: &RotationSystem, at_a: Dart, at_b: Dart) -> Result<RotationSystem, TopologyError> {
    for d in [at_a, at_b] {
        if d.edge() >= r.edge_count() {
            return Err(TopologyError::OutOfRange(format!("dart {} names no edge", d.0)));
        }
    }
    let (a, b) = (r.tail(at_a), r.tail(at_b));
    insert_edge(r, (a, Some(at_a)), (b, Some(at_b)))
}

fn insert_edge(
    r: &RotationSystem,
    (a, anchor_a): (Vertex, Option<Dart>),
    (b, anchor_b): (Vertex, Option<Dart>),
) -> Result<RotationSystem, TopologyError> {
    if a == b {
        return Err(TopologyError::InvalidRotation(format!("edge {a}-{b} would be a loop")));
    }
    let id = r.edge_count();
    let mut edges = r.edges().to_vec();
    edges.push((a, b));
    let mut rotation = r.rotations().to_vec();
    for (w, anchor, new) in [(a, anchor_a, Dart::new(id, true)), (b, anchor_b, Dart::new(id, false))] {
        let rot = &mut rotation[w];
        let pos = match anchor {
            Some(d) => rot.iter().position(|&x| x == d).expect("anchor dart sits at its tail"),
            None => 0,
        };
        rot.insert(pos, new);
    }
    RotationSystem::new(r.vertex_count(), edges, rotation)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JoinOutcome {
    #[serde(skip)]
    pub rotation: RotationSystem,
    pub stats: EmbeddingStats,
    pub genus_left: usize,
    pub genus_right: usize,
    /// Offset added to the vertex labels of the right embedding.
    pub offset: usize,
}

/// First dart of `face` leaving `w`; `None` when the face is the dartless
/// face of an isolated vertex.
fn corner(r: &RotationSystem, face: &[Dart], w: Vertex) -> Option<Option<Dart>> {
    if face.is_empty() {
        return r.rotation(w).is_empty().then_some(None);
    }
    face.iter().find(|&&d| r.tail(d) == w).map(|&d| Some(d))
}

fn shared_face(r: &RotationSystem, a: Vertex, b: Vertex) -> Result<Vec<Dart>, TopologyError> {
    for w in [a, b] {
        if w >= r.vertex_count() {
            return Err(TopologyError::OutOfRange(format!("vertex {w} not in embedding")));
        }
    }
    let trace = face_trace(r)?;
    if r.edge_count() == 0 {
        // single vertex, single dartless face
        return Ok(Vec::new());
    }
    let idx = *faces_containing(r, &trace, a, b).first().ok_or(TopologyError::NoCommonFace(a, b))?;
    Ok(trace.faces[idx].clone())
}

/// Splices `right` into `left`: adds edge `u x` through a face of `left`
/// containing `u, v` and a face of `right` containing `x, y`, merging them,
/// then adds `v y` inside the merged face. Vertices of `right` are shifted by
/// `left.vertex_count()`, edges by `left.edge_count()`.
pub fn embedding_join(
    left: &RotationSystem,
    u: Vertex,
    v: Vertex,
    right: &RotationSystem,
    x: Vertex,
    y: Vertex,
) -> Result<JoinOutcome, TopologyError> {
    let face_l = shared_face(left, u, v)?;
    let face_r = shared_face(right, x, y)?;
    let genus_left = face_trace(left)?.stats.genus;
    let genus_right = face_trace(right)?.stats.genus;

    let (p1, q1) = (left.vertex_count(), left.edge_count());
    let shift = |d: Dart| Dart(d.0 + 2 * q1);
    let mut edges = left.edges().to_vec();
    edges.extend(right.edges().iter().map(|&(a, b)| (a + p1, b + p1)));
    let mut rotation = left.rotations().to_vec();
    rotation.extend(right.rotations().iter().map(|rot| rot.iter().map(|&d| shift(d)).collect()));
    let combined = RotationSystem::new(p1 + right.vertex_count(), edges, rotation)?;

    let corner_u = corner(left, &face_l, u).expect("u lies on its face");
    let corner_x = corner(right, &face_r, x).expect("x lies on its face").map(shift);
    let first = insert_edge(&combined, (u, corner_u), (x + p1, corner_x))?;

    let trace = face_trace(&first)?;
    let new_dart = Dart::new(q1 + right.edge_count(), true);
    let merged = trace.faces.iter().find(|f| f.contains(&new_dart)).expect("new dart lies on a face");
    let (Some(cv), Some(cy)) = (corner(&first, merged, v), corner(&first, merged, y + p1)) else {
        return Err(TopologyError::JoinDefect(v, y + p1));
    };
    let rotation = insert_edge(&first, (v, cv), (y + p1, cy))?;
    let stats = face_trace(&rotation)?.stats;
    Ok(JoinOutcome { rotation, stats, genus_left, genus_right, offset: p1 })
}

/// Replaces every edge `e = st` (`s < t`) by `l` parallel copies
/// `e_1 … e_l`, listed in that order at `s` and reversed at `t`, then
/// subdivides each copy. Edges are ranked by endpoint pair (then id); the
/// copy `i` of the edge of rank `j` is subdivided by vertex `p + j·l + i`,
/// carried by edges `2(j·l + i)` (from `s`) and `2(j·l + i) + 1` (to `t`).
pub fn multiply_subdivide_embedding(r: &RotationSystem, l: usize) -> Result<RotationSystem, TopologyError> {
    if l < 2 {
        return Err(TopologyError::OutOfRange(format!("multiplicity {l}: need l >= 2")));
    }
    let (p, q) = (r.vertex_count(), r.edge_count());
    let mut ranked: Vec<usize> = (0..q).collect();
    ranked.sort_by_key(|&id| {
        let (a, b) = r.edges()[id];
        (a.min(b), a.max(b), id)
    });
    let mut rank = vec![0; q];
    for (j, &id) in ranked.iter().enumerate() {
        rank[id] = j;
    }

    let mut edges = vec![(0, 0); 2 * l * q];
    let mut rotation: Vec<Vec<Dart>> = vec![Vec::new(); p + l * q];
    for (id, &(a, b)) in r.edges().iter().enumerate() {
        let (s, t) = (a.min(b), a.max(b));
        let j = rank[id];
        for i in 0..l {
            let y = p + j * l + i;
            let (e_in, e_out) = (2 * (j * l + i), 2 * (j * l + i) + 1);
            edges[e_in] = (s, y);
            edges[e_out] = (y, t);
            rotation[y] = vec![Dart::new(e_in, false), Dart::new(e_out, true)];
        }
    }
    for (w, rot) in r.rotations().iter().enumerate() {
        for &d in rot {
            let (a, b) = r.edges()[d.edge()];
            let j = rank[d.edge()];
            if w == a.min(b) {
                rotation[w].extend((0..l).map(|i| Dart::new(2 * (j * l + i), true)));
            } else {
                rotation[w].extend((0..l).rev().map(|i| Dart::new(2 * (j * l + i) + 1, false)));
            }
        }
    }
    RotationSystem::new(p + l * q, edges, rotation)
}
