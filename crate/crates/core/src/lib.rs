//! Matching theory and topological graph theory tools for equimatchable
//! factor-critical graphs on surfaces.

pub mod bounds;
pub mod constructions;
pub mod equimatch;
pub mod graph;
pub mod matching;
pub mod topology;
