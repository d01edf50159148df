//! Orientable embeddings as rotation systems.
//!
//! Faces are traced with the convention "reverse the dart, then take the
//! rotation successor": the face successor of dart `d` is
//! `succ(reverse(d))`. Genus follows from `p − q + r = 2 − 2g`.

mod faces;
mod formulas;
mod rotation;
mod search;
mod surgery;

use thiserror::Error;

pub use faces::{face_trace, faces_containing, EmbeddingStats, FaceTrace};
pub use formulas::{euler_lower_bound, genus_formula, GenusFamily};
pub use rotation::{parse_rotation, serialize_rotation, Dart, RotationSystem};
pub use search::{min_genus_search, SearchMode, SearchOutcome, EXHAUSTIVE_NODE_LIMIT};
pub use surgery::{add_edge_in_face, embedding_join, multiply_subdivide_embedding, JoinOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("underlying graph is not connected")]
    Disconnected,
    #[error("underlying graph is not simple: {0}")]
    NotSimple(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("ExhaustiveInfeasible: search exceeded {limit} nodes without settling the genus")]
    ExhaustiveInfeasible { limit: u64 },
    #[error("NoCommonFace: vertices {0} and {1} share no face")]
    NoCommonFace(usize, usize),
    #[error("JoinDefect: after adding the first edge, {0} and {1} are not on a common face")]
    JoinDefect(usize, usize),
}
