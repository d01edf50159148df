use serde::Serialize;

use super::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
}

impl Bipartition {
    /// Sizes as `(larger, smaller)`.
    pub fn sizes(&self) -> (usize, usize) {
        let (a, b) = (self.side_a.len(), self.side_b.len());
        (a.max(b), a.min(b))
    }

    /// The strictly smaller side, if the sides differ in size.
    pub fn smaller_side(&self) -> Option<&[Vertex]> {
        use std::cmp::Ordering::*;
        match self.side_a.len().cmp(&self.side_b.len()) {
            Less => Some(&self.side_a),
            Greater => Some(&self.side_b),
            Equal => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicClassification {
    pub connected: bool,
    /// K_2 counts as 2-connected; K_1 does not.
    pub biconnected: bool,
    pub bipartition: Option<Bipartition>,
    pub min_degree: usize,
}

/// Shape of a graph up to isomorphism, restricted to the two families that
/// matter for random matchability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    /// `K_n`, including `K_0`, `K_1` and `K_2`.
    Complete(usize),
    /// `K_{a,b}` with `a >= b >= 1`, never `K_{1,1}` (reported as `K_2`).
    CompleteBipartite(usize, usize),
    Other,
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(None)?;
        match *self {
            Shape::Complete(n) => {
                map.serialize_entry("kind", "complete")?;
                map.serialize_entry("n", &n)?;
            }
            Shape::CompleteBipartite(a, b) => {
                map.serialize_entry("kind", "complete_bipartite")?;
                map.serialize_entry("a", &a)?;
                map.serialize_entry("b", &b)?;
            }
            Shape::Other => map.serialize_entry("kind", "other")?,
        }
        map.end()
    }
}

impl Shape {
    /// `K_{2n}` (n >= 0) or `K_{n,n}`.
    pub fn is_randomly_matchable_shape(self) -> bool {
        match self {
            Shape::Complete(n) => n % 2 == 0,
            Shape::CompleteBipartite(a, b) => a == b,
            Shape::Other => false,
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shape::Complete(n) => write!(f, "K_{n}"),
            Shape::CompleteBipartite(a, b) => write!(f, "K_{{{a},{b}}}"),
            Shape::Other => f.write_str("other"),
        }
    }
}

pub fn classify_basic(g: &Graph) -> BasicClassification {
    let connected = g.vertex_count() > 0 && g.components().len() == 1;
    let biconnected = connected
        && match g.vertex_count() {
            1 => false,
            2 => true,
            _ => articulation_points(g).is_empty(),
        };
    BasicClassification { connected, biconnected, bipartition: bipartition(g), min_degree: g.min_degree() }
}

/// Two-colouring with every component's smallest vertex on side A, which
/// makes side A the lexicographically least possible side.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let cx = color[x].unwrap();
            for &y in g.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        stack.push(y);
                    }
                    Some(cy) if cy == cx => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (side_a, side_b) = (0..n).partition(|&v| color[v] == Some(false));
    Some(Bipartition { side_a, side_b })
}

/// Cut vertices, sorted. Iterative low-link DFS.
pub fn articulation_points(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if let Some(&w) = g.neighbors(v).get(idx) {
                top.2 += 1;
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

pub fn classify_shape(g: &Graph) -> Shape {
    let n = g.vertex_count();
    let q = g.edge_count();
    if q == n * n.saturating_sub(1) / 2 {
        return Shape::Complete(n);
    }
    if let Some(bp) = bipartition(g) {
        let (a, b) = bp.sizes();
        // a * b edges on a bipartition means every cross pair is present;
        // b >= 1 then also forces connectivity.
        if b >= 1 && q == a * b {
            return Shape::CompleteBipartite(a, b);
        }
    }
    Shape::Other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, Graph};

    #[test]
    fn basic_examples() {
        let c5 = classify_basic(&cycle(5).unwrap());
        assert!(c5.connected && c5.biconnected);
        assert_eq!(c5.bipartition, None);
        assert_eq!(c5.min_degree, 2);

        let k33 = classify_basic(&complete_bipartite(3, 3));
        assert!(k33.connected && k33.biconnected);
        assert_eq!(k33.bipartition, Some(Bipartition { side_a: vec![0, 1, 2], side_b: vec![3, 4, 5] }));
        assert_eq!(k33.min_degree, 3);

        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!classify_basic(&two_edges).connected);
    }

    #[test]
    fn small_connectivity_conventions() {
        let k1 = classify_basic(&complete(1));
        assert!(k1.connected && !k1.biconnected);
        let k2 = classify_basic(&complete(2));
        assert!(k2.connected && k2.biconnected);
        assert!(!classify_basic(&path(3)).biconnected);
    }

    #[test]
    fn articulation_points_of_bowtie() {
        let bowtie = Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(articulation_points(&bowtie), vec![0]);
        assert_eq!(articulation_points(&path(4)), vec![1, 2]);
    }

    #[test]
    fn shape_examples() {
        assert_eq!(classify_shape(&complete(6)), Shape::Complete(6));
        assert_eq!(classify_shape(&cycle(4).unwrap()), Shape::CompleteBipartite(2, 2));
        assert_eq!(classify_shape(&cycle(6).unwrap()), Shape::Other);
        assert_eq!(classify_shape(&complete(0)), Shape::Complete(0));
        assert_eq!(classify_shape(&complete(1)), Shape::Complete(1));
        assert_eq!(classify_shape(&complete_bipartite(1, 1)), Shape::Complete(2));
        assert_eq!(classify_shape(&complete_bipartite(2, 5)), Shape::CompleteBipartite(5, 2));
        // two isolated vertices: bipartite with an empty cross product
        assert_eq!(classify_shape(&Graph::empty(2)), Shape::Other);
    }

    #[test]
    fn generated_complete_bipartite_shapes() {
        for a in 1..=6 {
            for b in 1..=6 {
                let expected =
                    if a == 1 && b == 1 { Shape::Complete(2) } else { Shape::CompleteBipartite(a.max(b), a.min(b)) };
                assert_eq!(classify_shape(&complete_bipartite(a, b)), expected, "K_{a},{b}");
            }
        }
    }
}
