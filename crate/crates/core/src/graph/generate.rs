use super::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
}

pub fn generate_basic(family: BasicFamily) -> Result<Graph, GraphError> {
    match family {
        BasicFamily::Complete(n) => Ok(complete(n)),
        BasicFamily::CompleteBipartite(a, b) => Ok(complete_bipartite(a, b)),
        BasicFamily::Cycle(n) => cycle(n),
    }
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_normalized(n, edges)
}

/// `K_{a,b}` with side A = `0..a` and side B = `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_normalized(a + b, edges)
}

/// `C_n` with edges `{i, i+1 mod n}`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `n` vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_normalized(n, edges)
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen is simple")
}

/// Disjoint union; vertices of `h` are shifted by `g.vertex_count()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.vertex_count();
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(u, v)| (u + off, v + off)));
    Graph::from_normalized(off + h.vertex_count(), edges)
}
