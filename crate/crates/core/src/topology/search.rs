//! Minimum-genus search over rotation systems of a simple graph.
//!
//! Exhaustive mode is a branch and bound over the cyclic orders at each
//! vertex. Faces whose darts all turn at already-assigned vertices are
//! closed; every other face has at least `girth_floor` darts, which bounds
//! the face count reachable from a partial assignment. The search stops as
//! soon as it meets the Euler lower bound. Mirror images have the same
//! genus, so the first branching vertex only tries one of each mirror pair.
//!
//! Anneal mode runs restarted Metropolis chains with random adjacent
//! transpositions inside one vertex's rotation and a geometric cooling
//! schedule. Everything is driven by a single ChaCha stream seeded from the
//! caller's seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{euler_lower_bound, Dart, RotationSystem, TopologyError};
use crate::graph::{bipartition, Graph};

/// Node budget of the exhaustive search.
pub const EXHAUSTIVE_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Anneal { seed: u64, budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    #[serde(skip)]
    pub rotation: RotationSystem,
    pub genus: u64,
    pub euler_lower_bound: u64,
    /// The returned genus is provably minimum.
    pub certified_optimal: bool,
    /// Search nodes (exhaustive) or moves (anneal) spent.
    pub work: u64,
}

pub fn min_genus_search(g: &Graph, mode: SearchMode) -> Result<SearchOutcome, TopologyError> {
    let base = RotationSystem::from_graph(g);
    if !base.is_connected() {
        return Err(TopologyError::Disconnected);
    }
    let lower = euler_lower_bound(g, true);
    let p = g.vertex_count() as i64;
    let q = g.edge_count() as i64;
    let faces_for = |genus: i64| (2 - 2 * genus - p + q) as usize;
    let genus_of = |faces: usize| ((2 - p + q - faces as i64) / 2) as u64;
    let target = faces_for(lower as i64);
    let girth_floor = if bipartition(g).is_some() { 4 } else { 3 };

    if q <= 1 {
        return Ok(SearchOutcome {
            rotation: base,
            genus: 0,
            euler_lower_bound: lower,
            certified_optimal: true,
            work: 0,
        });
    }

    match mode {
        SearchMode::Exhaustive => {
            let mut bb = BranchAndBound::new(&base, girth_floor, target);
            bb.run()?;
            let (faces, rotation) = bb.best.expect("at least one complete assignment");
            Ok(SearchOutcome {
                rotation: base.with_rotation(rotation)?,
                genus: genus_of(faces),
                euler_lower_bound: lower,
                certified_optimal: true,
                work: bb.nodes,
            })
        }
        SearchMode::Anneal { seed, budget } => {
            let (faces, rotation, work) = anneal(&base, girth_floor, target, seed, budget);
            let genus = genus_of(faces);
            Ok(SearchOutcome {
                rotation: base.with_rotation(rotation)?,
                genus,
                euler_lower_bound: lower,
                certified_optimal: genus == lower,
                work,
            })
        }
    }
}

const UNSET: usize = usize::MAX;

// Annealing schedule, tuned on K_7 and K_8. Energy is the face count plus
// `SHORT_FACE_BONUS` per face of minimum possible length; rewarding short
// faces steers chains towards near-triangulations.
const CHAIN_LEN: u64 = 100_000;
const T_START: f64 = 0.6;
const T_END: f64 = 0.2;
const SHORT_FACE_BONUS: f64 = 0.6;
/// Redraws allowed when the sampled dart already lies on a short face.
const FOCUS_TRIES: usize = 5;

struct BranchAndBound<'a> {
    base: &'a RotationSystem,
    order: Vec<usize>,
    /// Position of the first vertex whose rotation is not forced.
    mirror_level: Option<usize>,
    succ: Vec<usize>,
    girth_floor: usize,
    target: usize,
    total_darts: usize,
    nodes: u64,
    best: Option<(usize, Vec<Vec<Dart>>)>,
    current: Vec<Vec<Dart>>,
}

impl<'a> BranchAndBound<'a> {
    fn new(base: &'a RotationSystem, girth_floor: usize, target: usize) -> Self {
        let n = base.vertex_count();
        // BFS order from vertex 0 keeps assigned vertices clustered so that
        // faces close early
        let mut order = vec![0];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut i = 0;
        while i < order.len() {
            let w = order[i];
            i += 1;
            for &d in base.rotation(w) {
                let x = base.head(d);
                if !seen[x] {
                    seen[x] = true;
                    order.push(x);
                }
            }
        }
        let mirror_level = order.iter().position(|&w| base.rotation(w).len() >= 3);
        BranchAndBound {
            base,
            order,
            mirror_level,
            succ: vec![UNSET; 2 * base.edge_count()],
            girth_floor,
            target,
            total_darts: 2 * base.edge_count(),
            nodes: 0,
            best: None,
            current: vec![Vec::new(); n],
        }
    }

    fn best_faces(&self) -> usize {
        self.best.as_ref().map_or(0, |b| b.0)
    }

    fn done(&self) -> bool {
        self.best_faces() >= self.target
    }

    fn run(&mut self) -> Result<(), TopologyError> {
        self.descend(0, 0, 0)
    }

    /// Closed faces through `w` after assigning it: (count, darts).
    fn closed_through(&self, w: usize) -> (usize, usize) {
        let mut starts: Vec<usize> = Vec::new();
        let mut darts = 0;
        for &d in self.base.rotation(w) {
            // faces entering w arrive on reverse(d)
            let start = d.reverse().0;
            let mut cur = start;
            let mut len = 0usize;
            let mut min = start;
            let closed = loop {
                let nxt = self.succ[cur ^ 1];
                if nxt == UNSET {
                    break false;
                }
                len += 1;
                cur = nxt;
                min = min.min(cur);
                if cur == start {
                    break true;
                }
            };
            if closed && !starts.contains(&min) {
                starts.push(min);
                darts += len;
            }
        }
        (starts.len(), darts)
    }

    fn descend(&mut self, level: usize, closed: usize, closed_darts: usize) -> Result<(), TopologyError> {
        if level == self.order.len() {
            debug_assert_eq!(closed_darts, self.total_darts);
            if closed > self.best_faces() {
                self.best = Some((closed, self.current.clone()));
            }
            return Ok(());
        }
        let w = self.order[level];
        let darts = self.base.rotation(w).to_vec();
        let k = darts.len();
        let mut tail: Vec<Dart> = darts[1.min(k)..].to_vec();
        loop {
            let mirror_ok = Some(level) != self.mirror_level || tail.first() < tail.last();
            if mirror_ok {
                self.nodes += 1;
                if self.nodes > EXHAUSTIVE_NODE_LIMIT {
                    return Err(TopologyError::ExhaustiveInfeasible { limit: EXHAUSTIVE_NODE_LIMIT });
                }
                let mut rot = Vec::with_capacity(k);
                rot.extend(darts.first());
                rot.extend_from_slice(&tail);
                for i in 0..k {
                    self.succ[rot[i].0] = rot[(i + 1) % k].0;
                }
                let (c, cd) = self.closed_through(w);
                let (closed, closed_darts) = (closed + c, closed_darts + cd);
                let bound = closed + (self.total_darts - closed_darts) / self.girth_floor;
                if bound > self.best_faces() {
                    self.current[w] = rot.clone();
                    self.descend(level + 1, closed, closed_darts)?;
                }
                for d in &rot {
                    self.succ[d.0] = UNSET;
                }
                if self.done() {
                    return Ok(());
                }
            }
            if !next_permutation(&mut tail) {
                return Ok(());
            }
        }
    }
}

fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| xs[j] > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

struct Tracer {
    succ: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
    /// Length of the face through each dart, as of the last trace.
    face_len: Vec<usize>,
}

impl Tracer {
    fn new(rotation: &[Vec<Dart>], darts: usize) -> Self {
        let mut t = Tracer { succ: vec![0; darts], stamp: vec![0; darts], epoch: 0, face_len: vec![0; darts] };
        for rot in rotation {
            t.refresh(rot);
        }
        t
    }

    fn refresh(&mut self, rot: &[Dart]) {
        for i in 0..rot.len() {
            self.succ[rot[i].0] = rot[(i + 1) % rot.len()].0;
        }
    }

    /// Face count and number of faces of length `girth`.
    fn faces_and_short(&mut self, girth: usize) -> (usize, usize) {
        self.epoch += 1;
        let mut count = 0;
        let mut short = 0;
        for s in 0..self.succ.len() {
            if self.stamp[s] == self.epoch {
                continue;
            }
            count += 1;
            let mut d = s;
            let mut len = 0usize;
            while self.stamp[d] != self.epoch {
                self.stamp[d] = self.epoch;
                d = self.succ[d ^ 1];
                len += 1;
            }
            if len == girth {
                short += 1;
            }
            let mut d = s;
            for _ in 0..len {
                self.face_len[d] = len;
                d = self.succ[d ^ 1];
            }
        }
        (count, short)
    }
}

fn anneal(base: &RotationSystem, girth: usize, target: usize, seed: u64, budget: u64) -> (usize, Vec<Vec<Dart>>, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let darts = 2 * base.edge_count();
    let movable: Vec<usize> = (0..base.vertex_count()).filter(|&w| base.rotation(w).len() >= 3).collect();

    let mut best_rot: Vec<Vec<Dart>> = base.rotations().to_vec();
    let mut best = Tracer::new(&best_rot, darts).faces_and_short(girth).0;
    if movable.is_empty() || best >= target {
        return (best, best_rot, 0);
    }

    let chain_len = CHAIN_LEN.min(budget.max(1));
    let mut spent = 0u64;
    while spent < budget && best < target {
        let mut rot: Vec<Vec<Dart>> = base.rotations().to_vec();
        for &w in &movable {
            rot[w].shuffle(&mut rng);
        }
        let mut tracer = Tracer::new(&rot, darts);
        let energy = |(f, short): (usize, usize)| f as f64 + SHORT_FACE_BONUS * short as f64;
        let (mut faces, short) = tracer.faces_and_short(girth);
        let mut e = energy((faces, short));
        if faces > best {
            best = faces;
            best_rot = rot.clone();
        }
        let len = chain_len.min(budget - spent);
        let cooling = (T_END / T_START).powf(1.0 / len as f64);
        let mut temp = T_START;
        for _ in 0..len {
            spent += 1;
            let mut d = rng.gen_range(0..darts);
            for _ in 0..FOCUS_TRIES {
                if tracer.face_len[d] > girth && base.rotation(base.tail(Dart(d))).len() >= 3 {
                    break;
                }
                d = rng.gen_range(0..darts);
            }
            let w = base.tail(Dart(d));
            let k = rot[w].len();
            if k < 3 {
                continue;
            }
            let at = rot[w].iter().position(|x| x.0 == d).unwrap();
            let i = if rng.gen() { at } else { (at + k - 1) % k };
            let j = (i + 1) % k;
            rot[w].swap(i, j);
            tracer.refresh(&rot[w]);
            let (next, short) = tracer.faces_and_short(girth);
            let ne = energy((next, short));
            let delta = ne - e;
            if delta >= 0.0 || rng.gen::<f64>() < (delta / temp).exp() {
                faces = next;
                e = ne;
                if faces > best {
                    best = faces;
                    best_rot = rot.clone();
                    if best >= target {
                        break;
                    }
                }
            } else {
                rot[w].swap(i, j);
                tracer.refresh(&rot[w]);
            }
            temp *= cooling;
        }
    }
    (best, best_rot, spent)
}
