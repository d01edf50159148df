//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the matching or equimatch modules.
#![allow(dead_code)]

use equisurf::graph::Graph;
use proptest::prelude::*;

/// All vertex pairs of `0..n` in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Graph on `n` vertices whose edges are the pairs selected by `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e);
    Graph::new(n, edges).unwrap()
}

/// Adjacency bitsets from a pair mask.
pub fn adjacency(n: usize, mask: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for (i, (u, v)) in pairs(n).into_iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

pub fn mask_connected(adj: &[u32]) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let next = adj.iter().enumerate().filter(|&(v, _)| frontier >> v & 1 == 1).fold(0, |acc, (_, a)| acc | a);
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

/// Two-colouring of a connected graph as the bitset of colour-0 vertices.
pub fn mask_bipartition(adj: &[u32]) -> Option<u32> {
    let n = adj.len();
    let mut colour = vec![u8::MAX; n];
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if adj[x] >> y & 1 == 1 {
                    if colour[y] == u8::MAX {
                        colour[y] = 1 - colour[x];
                        stack.push(y);
                    } else if colour[y] == colour[x] {
                        return None;
                    }
                }
            }
        }
    }
    Some((0..n).filter(|&v| colour[v] == 0).fold(0, |m, v| m | 1 << v))
}

pub fn is_connected(g: &Graph) -> bool {
    let mut adj = vec![0u32; g.vertex_count()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    mask_connected(&adj)
}

/// Every matching of `g`: each edge in turn is either skipped or, when both
/// ends are still free, taken.
pub fn all_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    fn walk(
        edges: &[(usize, usize)],
        i: usize,
        used: u64,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == edges.len() {
            out.push(cur.clone());
            return;
        }
        walk(edges, i + 1, used, cur, out);
        let (u, v) = edges[i];
        if used >> u & 1 == 0 && used >> v & 1 == 0 {
            cur.push((u, v));
            walk(edges, i + 1, used | 1 << u | 1 << v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    walk(g.edges(), 0, 0, &mut Vec::new(), &mut out);
    out
}

pub fn covered(m: &[(usize, usize)]) -> u64 {
    m.iter().fold(0, |acc, &(u, v)| acc | 1 << u | 1 << v)
}

pub fn is_maximal(g: &Graph, m: &[(usize, usize)]) -> bool {
    let c = covered(m);
    g.edges().iter().all(|&(u, v)| c >> u & 1 == 1 || c >> v & 1 == 1)
}

pub fn maximal_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    all_matchings(g).into_iter().filter(|m| is_maximal(g, m)).collect()
}

pub fn nu(g: &Graph) -> usize {
    all_matchings(g).iter().map(Vec::len).max().unwrap_or(0)
}

pub fn equimatchable(g: &Graph) -> bool {
    let sizes: Vec<usize> = maximal_matchings(g).iter().map(Vec::len).collect();
    sizes.iter().min() == sizes.iter().max()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * nu(g) == g.vertex_count()
}

pub fn without_vertex(g: &Graph, v: usize) -> Graph {
    let edges = g
        .edges()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (a - usize::from(a > v), b - usize::from(b > v)));
    Graph::new(g.vertex_count() - 1, edges).unwrap()
}

pub fn factor_critical(g: &Graph) -> bool {
    g.vertex_count() % 2 == 1 && g.vertices().all(|v| has_perfect_matching(&without_vertex(g, v)))
}

/// Matchings isolating `v`: avoiding `v` and covering all its neighbours.
pub fn isolating(g: &Graph, v: usize) -> Vec<Vec<(usize, usize)>> {
    all_matchings(g)
        .into_iter()
        .filter(|m| {
            let c = covered(m);
            c >> v & 1 == 0 && g.neighbors(v).iter().all(|&w| c >> w & 1 == 1)
        })
        .collect()
}

/// Isolating matchings with no isolating proper subset (removing any single
/// edge already breaks isolation, since isolation is monotone).
pub fn minimal_isolating(g: &Graph, v: usize) -> Vec<Vec<(usize, usize)>> {
    let all = isolating(g, v);
    all.iter()
        .filter(|m| {
            (0..m.len()).all(|i| {
                let mut sub = (*m).clone();
                sub.remove(i);
                let c = covered(&sub);
                !g.neighbors(v).iter().all(|&w| c >> w & 1 == 1)
            })
        })
        .cloned()
        .collect()
}

/// Random simple graph on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), m)).prop_map(|(n, bits)| {
            let edges = pairs(n).into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Random connected graph: a random spanning tree plus random extra edges.
pub fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<usize>(), n - 1), proptest::collection::vec(any::<bool>(), m))
            .prop_map(|(n, parents, bits)| {
                let mut edges: Vec<(usize, usize)> =
                    parents.iter().enumerate().map(|(i, &p)| (p % (i + 1), i + 1)).collect();
                edges.extend(pairs(n).into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e));
                edges.sort_unstable();
                edges.dedup();
                Graph::new(n, edges).unwrap()
            })
    })
}
