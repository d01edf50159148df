//! Equimatchability, factor-criticality and isolating matchings.
//!
//! A matching `M` isolates `v` when `v` is uncovered and every neighbour of
//! `v` is covered, i.e. `{v}` is a component of `G − V(M)`. The verifiers in
//! this module check that for 2-connected factor-critical equimatchable
//! graphs the remainder `G − (V(M) ∪ {v})` of every minimal isolating
//! matching is a single `K_{2n}` or `K_{n,n}`.

use std::ops::ControlFlow;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{self, classify_basic, classify_shape, induced_by_mask, remove_vertices, Graph, Shape, Vertex};
use crate::matching::{
    enumerate_maximal_matchings, has_perfect_matching, maximum_matching, maximum_matching_size, Matching,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquimatchError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("G - {0} has no perfect matching")]
    NoPerfectMatchingWithout(Vertex),
    #[error("matching does not isolate vertex {0}")]
    NotIsolating(Vertex),
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
}

/// A matching that isolates `vertex`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct IsolatingMatching {
    pub vertex: Vertex,
    pub matching: Matching,
}

impl IsolatingMatching {
    pub fn new(g: &Graph, vertex: Vertex, matching: Matching) -> Result<Self, EquimatchError> {
        g.check_vertex(vertex)?;
        if !isolates(g, vertex, &matching) {
            return Err(EquimatchError::NotIsolating(vertex));
        }
        Ok(IsolatingMatching { vertex, matching })
    }

    pub fn len(&self) -> usize {
        self.matching.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matching.is_empty()
    }
}

pub fn isolates(g: &Graph, v: Vertex, m: &Matching) -> bool {
    let covered = m.coverage_mask(g.vertex_count());
    !covered[v] && g.neighbors(v).iter().all(|&w| covered[w])
}

/// True iff every edge of `m` covers a neighbour of `v`. For an isolating
/// matching this is exactly minimality: the edges are disjoint, so the edge
/// covering a neighbour is the only one covering it.
pub fn is_minimal_isolating(g: &Graph, m: &IsolatingMatching) -> bool {
    let v = m.vertex;
    m.matching.edges().iter().all(|&(a, b)| g.has_edge(v, a) || g.has_edge(v, b))
}

pub fn is_factor_critical(g: &Graph) -> bool {
    g.vertex_count() % 2 == 1
        && g.vertices().all(|v| {
            let rest = remove_vertices(g, &[v]).expect("vertex in range");
            has_perfect_matching(&rest.graph)
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquimatchVerdict {
    pub equimatchable: bool,
    pub nu: usize,
    /// A maximal matching smaller than `nu`, when one exists.
    pub witness: Option<Matching>,
}

/// Decides equimatchability by enumerating maximal matchings, stopping at
/// the first one smaller than the maximum.
pub fn is_equimatchable_oracle(g: &Graph) -> EquimatchVerdict {
    let nu = maximum_matching_size(g);
    let mut witness = None;
    enumerate_maximal_matchings(g, |m| {
        if m.len() < nu {
            witness = Some(m.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    EquimatchVerdict { equimatchable: witness.is_none(), nu, witness }
}

/// Bipartite equimatchability test for connected bipartite graphs: for every
/// vertex `u` of the smaller side, some non-empty `X ⊆ N(u)` must satisfy
/// `|N(X)| <= |X|`.
///
/// When both sides have the same size the criterion does not apply and the
/// graph is decided by [`is_equimatchable_oracle`] instead.
pub fn bipartite_equimatchable_criterion(g: &Graph) -> Result<bool, EquimatchError> {
    let basic = classify_basic(g);
    if !basic.connected {
        return Err(EquimatchError::NotConnected);
    }
    let bp = basic.bipartition.ok_or(EquimatchError::NotBipartite)?;
    match bp.smaller_side() {
        Some(small) => Ok(small.iter().all(|&u| deficient_neighbor_set(g, u).is_some())),
        None => Ok(is_equimatchable_oracle(g).equimatchable),
    }
}

/// First non-empty `X ⊆ N(u)` (in order of increasing size, then
/// lexicographic) with `|N(X)| <= |X|`.
pub fn deficient_neighbor_set(g: &Graph, u: Vertex) -> Option<Vec<Vertex>> {
    let nbrs = g.neighbors(u);
    let k = nbrs.len();
    let mut mark = vec![usize::MAX; g.vertex_count()];
    let mut stamp = 0;
    for size in 1..=k {
        // lexicographic walk over index combinations of this size
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            stamp += 1;
            let mut reach = 0;
            for &i in &idx {
                for &y in g.neighbors(nbrs[i]) {
                    if mark[y] != stamp {
                        mark[y] = stamp;
                        reach += 1;
                    }
                }
            }
            if reach <= size {
                return Some(idx.iter().map(|&i| nbrs[i]).collect());
            }
            let Some(pos) = (0..size).rev().find(|&p| idx[p] < k - size + p) else {
                break;
            };
            idx[pos] += 1;
            for p in pos + 1..size {
                idx[p] = idx[p - 1] + 1;
            }
        }
    }
    None
}

/// Equimatchable with a perfect matching.
pub fn is_randomly_matchable(g: &Graph) -> bool {
    has_perfect_matching(g) && is_equimatchable_oracle(g).equimatchable
}

/// Builds `M_v` from a perfect matching `M'` of `G − v` by keeping exactly
/// the edges of `M'` that touch a neighbour of `v`; `|M_v| <= deg(v)`.
pub fn isolating_from_perfect_matching(g: &Graph, v: Vertex) -> Result<IsolatingMatching, EquimatchError> {
    let rest = remove_vertices(g, &[v])?;
    let pm = maximum_matching(&rest.graph);
    if pm.len() * 2 != rest.graph.vertex_count() {
        return Err(EquimatchError::NoPerfectMatchingWithout(v));
    }
    let kept = pm
        .edges()
        .iter()
        .map(|&(a, b)| (rest.new_to_old[a], rest.new_to_old[b]))
        .filter(|&(a, b)| g.has_edge(v, a) || g.has_edge(v, b))
        .collect();
    let matching = Matching::from_unsorted(kept);
    debug_assert!(isolates(g, v, &matching));
    Ok(IsolatingMatching { vertex: v, matching })
}

/// All minimal matchings isolating `v`, in lexicographic order of their
/// choices (lowest uncovered neighbour first, partners ascending).
pub fn enumerate_minimal_isolating(g: &Graph, v: Vertex) -> Result<Vec<IsolatingMatching>, EquimatchError> {
    g.check_vertex(v)?;
    let mut covered = vec![false; g.vertex_count()];
    covered[v] = true;
    let mut stack = Vec::new();
    let mut out = Vec::new();
    isolating_rec(g, v, &mut covered, &mut stack, &mut out);
    Ok(out)
}

fn isolating_rec(
    g: &Graph,
    v: Vertex,
    covered: &mut [bool],
    stack: &mut Vec<(Vertex, Vertex)>,
    out: &mut Vec<IsolatingMatching>,
) {
    let Some(&w) = g.neighbors(v).iter().find(|&&w| !covered[w]) else {
        out.push(IsolatingMatching { vertex: v, matching: Matching::from_unsorted(stack.clone()) });
        return;
    };
    covered[w] = true;
    for &z in g.neighbors(w) {
        if covered[z] {
            continue;
        }
        covered[z] = true;
        stack.push((w, z));
        isolating_rec(g, v, covered, stack, out);
        stack.pop();
        covered[z] = false;
    }
    covered[w] = false;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemainderComponent {
    pub vertices: Vec<Vertex>,
    pub shape: Shape,
}

/// Structure of `G − (V(M) ∪ {v})` for an isolating matching `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemainderReport {
    pub vertex: Vertex,
    pub matching: Matching,
    pub components: Vec<RemainderComponent>,
    /// Shape of the whole remainder; `K_0` when nothing is left.
    pub remainder_shape: Shape,
    /// At most one component (the empty remainder counts as one `K_0`).
    pub single_component: bool,
    /// Every component is `K_{2n}` or `K_{n,n}`.
    pub components_randomly_matchable: bool,
    /// Single component that is `K_{2n}` or `K_{n,n}`.
    pub conforms: bool,
}

pub fn verify_remainder(g: &Graph, m: &IsolatingMatching) -> Result<RemainderReport, EquimatchError> {
    let v = m.vertex;
    g.check_vertex(v)?;
    if !isolates(g, v, &m.matching) {
        return Err(EquimatchError::NotIsolating(v));
    }
    let mut keep: Vec<bool> = m.matching.coverage_mask(g.vertex_count()).iter().map(|c| !c).collect();
    keep[v] = false;
    let rest = induced_by_mask(g, &keep);
    let components: Vec<RemainderComponent> = rest
        .graph
        .components()
        .into_iter()
        .map(|comp| {
            let mut mask = vec![false; rest.graph.vertex_count()];
            comp.iter().for_each(|&x| mask[x] = true);
            let shape = classify_shape(&induced_by_mask(&rest.graph, &mask).graph);
            let vertices = comp.iter().map(|&x| rest.new_to_old[x]).collect();
            RemainderComponent { vertices, shape }
        })
        .collect();
    let remainder_shape = classify_shape(&rest.graph);
    let single_component = components.len() <= 1;
    let components_randomly_matchable = components.iter().all(|c| c.shape.is_randomly_matchable_shape());
    Ok(RemainderReport {
        vertex: v,
        matching: m.matching.clone(),
        conforms: single_component && remainder_shape.is_randomly_matchable_shape(),
        components,
        remainder_shape,
        single_component,
        components_randomly_matchable,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub biconnected: bool,
    pub factor_critical: bool,
    pub equimatchable: bool,
}

impl Hypotheses {
    pub fn of(g: &Graph) -> Self {
        Hypotheses {
            biconnected: classify_basic(g).biconnected,
            factor_critical: is_factor_critical(g),
            equimatchable: is_equimatchable_oracle(g).equimatchable,
        }
    }

    pub fn all(&self) -> bool {
        self.biconnected && self.factor_critical && self.equimatchable
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub hypotheses: Hypotheses,
    /// Number of `(v, M_v)` pairs examined.
    pub checked: usize,
    /// Reports with `conforms == false`, sorted by vertex then matching.
    pub violations: Vec<RemainderReport>,
    /// For connected factor-critical equimatchable graphs: reports where some
    /// component is not `K_{2n}`/`K_{n,n}`. These are flagged, not counted as
    /// violations of the single-component statement.
    pub component_flags: Vec<RemainderReport>,
}

impl TheoremCheck {
    /// The graph satisfies the hypotheses but some remainder does not conform.
    pub fn contradicts_theorem(&self) -> bool {
        self.hypotheses.all() && !self.violations.is_empty()
    }
}

/// Examines every vertex and every minimal isolating matching of it.
pub fn verify_main_theorem(g: &Graph) -> TheoremCheck {
    let hypotheses = Hypotheses::of(g);
    let check_components = classify_basic(g).connected && hypotheses.factor_critical && hypotheses.equimatchable;
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut component_flags = Vec::new();
    for v in g.vertices() {
        for m in enumerate_minimal_isolating(g, v).expect("vertex in range") {
            checked += 1;
            let report = verify_remainder(g, &m).expect("enumerated matchings isolate v");
            if check_components && !report.components_randomly_matchable {
                component_flags.push(report.clone());
            }
            if !report.conforms {
                violations.push(report);
            }
        }
    }
    violations.sort_by(|a, b| (a.vertex, &a.matching).cmp(&(b.vertex, &b.matching)));
    component_flags.sort_by(|a, b| (a.vertex, &a.matching).cmp(&(b.vertex, &b.matching)));
    TheoremCheck { hypotheses, checked, violations, component_flags }
}
