//! Generators for 2-connected factor-critical equimatchable graphs and their
//! bipartite relatives, with the properties each construction claims.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::Surface;
use crate::equimatch::{bipartite_equimatchable_criterion, is_equimatchable_oracle, is_factor_critical};
use crate::graph::{classify_basic, complete, complete_bipartite, disjoint_union, Graph, GraphError};
use crate::topology::{genus_formula, GenusFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("NoOddCompleteGraphOfThisGenus: no K_(2n+1) has {} genus {genus}", if *.orientable { "orientable" } else { "nonorientable" })]
    NoOddCompleteGraphOfThisGenus { genus: u64, orientable: bool },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("base graph is not 2-connected")]
    NotBiconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    FactorCritical,
    Equimatchable,
    Biconnected,
    Bipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub claimed_genus: Option<Surface>,
    pub claimed_properties: BTreeSet<Property>,
    pub parameters: BTreeMap<String, u64>,
}

fn params<const N: usize>(pairs: [(&str, u64); N]) -> BTreeMap<String, u64> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn complete_genus(n: u64, orientable: bool) -> u64 {
    if n < 3 {
        0
    } else {
        genus_formula(GenusFamily::Complete(n), orientable).expect("n >= 3")
    }
}

fn bipartite_genus(a: u64, b: u64, orientable: bool) -> u64 {
    if a < 2 || b < 2 {
        0
    } else {
        genus_formula(GenusFamily::CompleteBipartite(a, b), orientable).expect("a, b >= 2")
    }
}

/// `K_{2n+1}` with `k` triangles glued at vertex 0, for the largest `n >= 1`
/// whose complete graph has the requested genus. Triangle `i` uses vertices
/// `2n+1+2i` and `2n+2+2i`.
pub fn amalgam_construction(genus: u64, k: u64, orientable: bool) -> Result<ConstructionResult, ConstructionError> {
    let mut chosen = None;
    let mut n = 1;
    loop {
        let gamma = complete_genus(2 * n + 1, orientable);
        if gamma > genus {
            break;
        }
        if gamma == genus {
            chosen = Some(n);
        }
        n += 1;
    }
    let n = chosen.ok_or(ConstructionError::NoOddCompleteGraphOfThisGenus { genus, orientable })?;
    let core = (2 * n + 1) as usize;
    let k = k as usize;
    let mut edges = complete(core).edges().to_vec();
    for i in 0..k {
        let (a, b) = (core + 2 * i, core + 2 * i + 1);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    let graph = Graph::new(core + 2 * k, edges)?;
    let claimed_genus = if orientable {
        Surface::orientable(genus)
    } else if genus == 0 {
        Surface::orientable(0)
    } else {
        Surface::nonorientable(genus).expect("genus >= 1")
    };
    Ok(ConstructionResult {
        graph,
        claimed_genus: Some(claimed_genus),
        claimed_properties: [Property::FactorCritical, Property::Equimatchable].into(),
        parameters: params([("g", genus), ("k", k as u64), ("n", n)]),
    })
}

/// `K_{n,n} ∪ K_{m+1,m}` plus edges `ux`, `vy`. `K_{n,n}` occupies
/// `0..2n` with sides `0..n` and `n..2n`; `K_{m+1,m}` occupies the next
/// `2m+1` vertices, larger side first. `u = 0`, `v = n`, `x = 2n`,
/// `y = 2n+1`.
pub fn union_construction(n: u64, m: u64) -> Result<ConstructionResult, ConstructionError> {
    if n < 1 || m < 1 {
        return Err(ConstructionError::InvalidParameter(format!("n = {n}, m = {m}: need n, m >= 1")));
    }
    let (nn, mm) = (n as usize, m as usize);
    let joined = disjoint_union(&complete_bipartite(nn, nn), &complete_bipartite(mm + 1, mm));
    let mut edges = joined.edges().to_vec();
    edges.extend([(0, 2 * nn), (nn, 2 * nn + 1)]);
    let graph = Graph::new(joined.vertex_count(), edges)?;
    Ok(ConstructionResult {
        graph,
        claimed_genus: None,
        claimed_properties: [Property::FactorCritical, Property::Equimatchable, Property::Biconnected].into(),
        parameters: params([("n", n), ("m", m)]),
    })
}

/// Largest `x` with `genus(x) <= limit`, scanning up from `start`.
fn largest_within(start: u64, limit: u64, genus: impl Fn(u64) -> u64) -> u64 {
    let mut x = start;
    while genus(x + 1) <= limit {
        x += 1;
    }
    x
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Closed forms for the orientable `(n, m)` of [`lower_bound_graph`].
pub fn lower_bound_closed_form(g: u64) -> (u64, u64) {
    if g.is_multiple_of(2) {
        (isqrt(2 * g) + 2, (3 + isqrt(8 * g + 1)) / 2)
    } else {
        (isqrt(2 * g - 2) + 2, (3 + isqrt(8 * g + 9)) / 2)
    }
}

/// Vertex count the construction is guaranteed to reach: `4⌊√(2g)⌋ + 5`
/// orientable, `4⌊√h⌋ + 5` nonorientable.
pub fn lower_bound_order(genus: u64, orientable: bool) -> u64 {
    4 * if orientable { isqrt(2 * genus) } else { isqrt(genus) } + 5
}

/// The union construction with `n` maximal such that `K_{n,n}` embeds with
/// genus `⌊g/2⌋` and `m` maximal such that `K_{m+1,m}` embeds with genus
/// `⌈g/2⌉`. Nonorientable genus 0 is read as the sphere.
pub fn lower_bound_graph(genus: u64, orientable: bool) -> Result<ConstructionResult, ConstructionError> {
    let (half_down, half_up) = (genus / 2, genus.div_ceil(2));
    let n = largest_within(1, half_down, |x| bipartite_genus(x, x, orientable));
    let m = largest_within(1, half_up, |x| bipartite_genus(x + 1, x, orientable));
    if orientable {
        debug_assert_eq!((n, m), lower_bound_closed_form(genus));
    }
    let mut out = union_construction(n, m)?;
    debug_assert!(out.graph.vertex_count() as u64 >= lower_bound_order(genus, orientable));
    out.claimed_genus = Some(if orientable || genus == 0 {
        Surface::orientable(genus)
    } else {
        Surface::nonorientable(genus).expect("genus >= 1")
    });
    out.parameters.insert(if orientable { "g" } else { "h" }.to_string(), genus);
    Ok(out)
}

/// Replaces every edge of a 2-connected `base` by `l` parallel edges and
/// subdivides each once. Base vertices keep their labels; copy `i` of the
/// `j`-th edge (in sorted order) is subdivided by vertex `p + j·l + i`.
pub fn multiply_subdivide(base: &Graph, l: u64) -> Result<ConstructionResult, ConstructionError> {
    if l < 2 {
        return Err(ConstructionError::InvalidParameter(format!("l = {l}: need l >= 2")));
    }
    if !classify_basic(base).biconnected {
        return Err(ConstructionError::NotBiconnected);
    }
    let (p, l) = (base.vertex_count(), l as usize);
    let mut edges = Vec::with_capacity(2 * l * base.edge_count());
    for (j, &(a, b)) in base.edges().iter().enumerate() {
        for i in 0..l {
            let y = p + j * l + i;
            edges.extend([(a, y), (y, b)]);
        }
    }
    let graph = Graph::new(p + l * base.edge_count(), edges)?;
    Ok(ConstructionResult {
        graph,
        claimed_genus: None,
        claimed_properties: [Property::Equimatchable, Property::Bipartite, Property::Biconnected].into(),
        parameters: params([("l", l as u64), ("base_vertices", p as u64), ("base_edges", base.edge_count() as u64)]),
    })
}

/// `K_{k,2}`, planar, bipartite and equimatchable.
pub fn planar_bipartite_family(k: u64) -> Result<ConstructionResult, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::InvalidParameter(format!("k = {k}: need k >= 2")));
    }
    Ok(ConstructionResult {
        graph: complete_bipartite(k as usize, 2),
        claimed_genus: Some(Surface::orientable(0)),
        claimed_properties: [Property::Equimatchable, Property::Bipartite, Property::Biconnected].into(),
        parameters: params([("k", k)]),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Verified,
    Refuted,
    /// Too large for the exhaustive oracle.
    Skipped,
}

/// Checks each claimed property. Equimatchability of bipartite graphs with
/// unequal sides uses the neighbourhood criterion at any size; otherwise the
/// maximal-matching oracle runs only up to `oracle_limit` vertices.
pub fn check_claims(result: &ConstructionResult, oracle_limit: usize) -> BTreeMap<Property, ClaimStatus> {
    let g = &result.graph;
    let basic = classify_basic(g);
    let status = |ok: bool| if ok { ClaimStatus::Verified } else { ClaimStatus::Refuted };
    result
        .claimed_properties
        .iter()
        .map(|&p| {
            let s = match p {
                Property::Bipartite => status(basic.bipartition.is_some()),
                Property::Biconnected => status(basic.biconnected),
                Property::FactorCritical => status(is_factor_critical(g)),
                Property::Equimatchable => {
                    let unequal = basic.bipartition.as_ref().is_some_and(|b| b.smaller_side().is_some());
                    if basic.connected && unequal {
                        status(bipartite_equimatchable_criterion(g).expect("connected bipartite"))
                    } else if g.vertex_count() <= oracle_limit {
                        status(is_equimatchable_oracle(g).equimatchable)
                    } else {
                        ClaimStatus::Skipped
                    }
                }
            };
            (p, s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify_shape, cycle, Shape};

    #[test]
    fn amalgam_examples() {
        let r = amalgam_construction(1, 2, true).unwrap();
        assert_eq!(r.graph.vertex_count(), 11);
        assert_eq!(r.parameters["n"], 3);
        let bowtie = amalgam_construction(0, 1, true).unwrap();
        assert_eq!((bowtie.graph.vertex_count(), bowtie.graph.edge_count()), (5, 6));
        assert_eq!(
            amalgam_construction(2, 1, true).unwrap_err(),
            ConstructionError::NoOddCompleteGraphOfThisGenus { genus: 2, orientable: true }
        );
        // K_5 has nonorientable genus 1, K_7 has 3
        assert_eq!(amalgam_construction(1, 0, false).unwrap().graph.vertex_count(), 5);
        assert_eq!(amalgam_construction(3, 0, false).unwrap().graph.vertex_count(), 7);
        assert!(amalgam_construction(2, 0, false).is_err());
    }

    #[test]
    fn union_smallest_is_c5() {
        let r = union_construction(1, 1).unwrap();
        assert_eq!(r.graph, cycle(5).unwrap().relabel(&[0, 2, 4, 3, 1]));
        assert_eq!(union_construction(2, 2).unwrap().graph.vertex_count(), 9);
        assert!(union_construction(0, 1).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        for (g, (n, m), order) in [(0, (2, 2), 9), (1, (2, 3), 11), (2, (4, 3), 15)] {
            let r = lower_bound_graph(g, true).unwrap();
            assert_eq!((r.parameters["n"], r.parameters["m"]), (n, m));
            assert_eq!(r.graph.vertex_count(), order);
            assert!(order as u64 >= lower_bound_order(g, true));
        }
    }

    #[test]
    fn closed_form_matches_search() {
        for g in 0..400 {
            let n = largest_within(1, g / 2, |x| bipartite_genus(x, x, true));
            let m = largest_within(1, g.div_ceil(2), |x| bipartite_genus(x + 1, x, true));
            assert_eq!((n, m), lower_bound_closed_form(g), "g = {g}");
        }
    }

    #[test]
    fn multiply_subdivide_examples() {
        let r = multiply_subdivide(&complete(4), 2).unwrap();
        assert_eq!((r.graph.vertex_count(), r.graph.edge_count()), (16, 24));
        assert!(check_claims(&r, 0).values().all(|&s| s == ClaimStatus::Verified));
        assert!(multiply_subdivide(&complete(4), 1).is_err());
        assert_eq!(multiply_subdivide(&crate::graph::path(3), 2).unwrap_err(), ConstructionError::NotBiconnected);
    }

    #[test]
    fn kk2_family() {
        assert_eq!(classify_shape(&planar_bipartite_family(2).unwrap().graph), Shape::CompleteBipartite(2, 2));
        let r = planar_bipartite_family(5).unwrap();
        assert!(check_claims(&r, 12).values().all(|&s| s == ClaimStatus::Verified));
        assert!(planar_bipartite_family(1).is_err());
    }
}
