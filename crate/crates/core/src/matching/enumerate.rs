use std::ops::ControlFlow;

use serde::Serialize;

use super::Matching;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct EnumerationSummary {
    /// Maximal matchings visited (including the one that stopped the run).
    pub count: u64,
    pub min_size: Option<usize>,
    pub max_size: Option<usize>,
    pub stopped_early: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Free,
    Covered,
    /// Decided to stay uncovered; every neighbour must end up covered.
    Excluded,
}

/// Visits every maximal matching of `g` exactly once.
///
/// The search decides vertices in increasing order: the lowest undecided
/// vertex is either matched to one of its undecided neighbours (in
/// increasing order) or left uncovered, which is only allowed when no
/// uncovered neighbour exists and commits all its neighbours to being
/// covered. The visit order is therefore deterministic. Returning
/// `ControlFlow::Break` from `visit` ends the enumeration.
pub fn enumerate_maximal_matchings<F>(g: &Graph, mut visit: F) -> EnumerationSummary
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    let mut search = Search {
        g,
        state: vec![State::Free; g.vertex_count()],
        stack: Vec::new(),
        summary: EnumerationSummary::default(),
    };
    let _ = search.descend(0, &mut visit);
    search.summary
}

struct Search<'a> {
    g: &'a Graph,
    state: Vec<State>,
    stack: Vec<(Vertex, Vertex)>,
    summary: EnumerationSummary,
}

impl Search<'_> {
    fn descend<F>(&mut self, from: Vertex, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Matching) -> ControlFlow<()>,
    {
        let n = self.g.vertex_count();
        let Some(v) = (from..n).find(|&v| self.state[v] == State::Free) else {
            return self.leaf(visit);
        };

        // every vertex below v is decided, so partners are all above v
        for i in 0..self.g.degree(v) {
            let w = self.g.neighbors(v)[i];
            if self.state[w] != State::Free {
                continue;
            }
            self.state[v] = State::Covered;
            self.state[w] = State::Covered;
            self.stack.push((v, w));
            let flow = self.descend(v + 1, visit);
            self.stack.pop();
            self.state[w] = State::Free;
            self.state[v] = State::Free;
            flow?;
        }

        if self.can_exclude(v) {
            self.state[v] = State::Excluded;
            let flow = if self.neighbors_coverable(v) { self.descend(v + 1, visit) } else { ControlFlow::Continue(()) };
            self.state[v] = State::Free;
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Leaving `v` uncovered is consistent only if no neighbour is already
    /// committed to staying uncovered.
    fn can_exclude(&self, v: Vertex) -> bool {
        self.g.neighbors(v).iter().all(|&w| self.state[w] != State::Excluded)
    }

    /// After excluding `v`, each free neighbour still needs a free partner.
    fn neighbors_coverable(&self, v: Vertex) -> bool {
        self.g
            .neighbors(v)
            .iter()
            .all(|&w| self.state[w] != State::Free || self.g.neighbors(w).iter().any(|&z| self.state[z] == State::Free))
    }

    fn leaf<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Matching) -> ControlFlow<()>,
    {
        let m = Matching::from_unsorted(self.stack.clone());
        let size = m.len();
        let s = &mut self.summary;
        s.count += 1;
        s.min_size = Some(s.min_size.map_or(size, |x| x.min(size)));
        s.max_size = Some(s.max_size.map_or(size, |x| x.max(size)));
        let flow = visit(&m);
        if flow.is_break() {
            s.stopped_early = true;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph};
    use crate::matching::is_maximal;

    fn collect(g: &Graph) -> (Vec<Matching>, EnumerationSummary) {
        let mut all = Vec::new();
        let s = enumerate_maximal_matchings(g, |m| {
            all.push(m.clone());
            ControlFlow::Continue(())
        });
        (all, s)
    }

    #[test]
    fn c5_has_five_maximal_matchings() {
        let (all, s) = collect(&cycle(5).unwrap());
        assert_eq!(s.count, 5);
        assert_eq!((s.min_size, s.max_size), (Some(2), Some(2)));
        assert_eq!(all.len(), 5);
    }

    #[test]
    fn c9_has_small_maximal_matching() {
        let (_, s) = collect(&cycle(9).unwrap());
        assert_eq!((s.min_size, s.max_size), (Some(3), Some(4)));
    }

    #[test]
    fn k2_and_edgeless() {
        let (all, s) = collect(&complete(2));
        assert_eq!(s.count, 1);
        assert_eq!(all[0].edges(), &[(0, 1)]);
        let (all, s) = collect(&Graph::empty(3));
        assert_eq!(s.count, 1);
        assert!(all[0].is_empty());
    }

    #[test]
    fn k4_visits_perfect_matchings_in_order() {
        let g = complete(4);
        let (all, s) = collect(&g);
        assert_eq!(s.count, 3);
        assert!(all.iter().all(|m| is_maximal(&g, m).unwrap()));
        let firsts: Vec<_> = all.iter().map(|m| m.edges()[0]).collect();
        assert_eq!(firsts, vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn early_stop() {
        let g = cycle(9).unwrap();
        let mut seen = 0;
        let s = enumerate_maximal_matchings(&g, |m| {
            seen += 1;
            if m.len() < 4 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert!(s.stopped_early);
        assert_eq!(s.count, seen);
        assert_eq!(s.min_size, Some(3));
    }
}
