use super::TopologyError;
use crate::graph::{bipartition, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusFamily {
    Complete(u64),
    CompleteBipartite(u64, u64),
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Orientable or nonorientable genus of `K_n` (`n >= 3`) or `K_{m,n}`
/// (`m, n >= 2`), including the exception `γ̃(K_7) = 3`.
pub fn genus_formula(family: GenusFamily, orientable: bool) -> Result<u64, TopologyError> {
    match family {
        GenusFamily::Complete(n) if n < 3 => Err(TopologyError::OutOfRange(format!("K_{n}: need n >= 3"))),
        GenusFamily::CompleteBipartite(m, n) if m < 2 || n < 2 => {
            Err(TopologyError::OutOfRange(format!("K_{{{m},{n}}}: need m, n >= 2")))
        }
        GenusFamily::Complete(7) if !orientable => Ok(3),
        GenusFamily::Complete(n) => Ok(ceil_div((n - 3) * n.saturating_sub(4), if orientable { 12 } else { 6 })),
        GenusFamily::CompleteBipartite(m, n) => Ok(ceil_div((m - 2) * (n - 2), if orientable { 4 } else { 2 })),
    }
}

/// Euler-formula lower bound on the orientable genus of a connected simple
/// graph: faces have length at least 3 (at least 4 when bipartite and
/// `bipartite_aware`), so `g >= ⌈(q − 3p + 6)/6⌉`, resp. `⌈(q − 2p + 4)/4⌉`.
/// With fewer than two edges the face-length argument fails (`K_2` has one
/// face of length 2) and the bound is 0.
pub fn euler_lower_bound(g: &Graph, bipartite_aware: bool) -> u64 {
    let p = g.vertex_count() as i64;
    let q = g.edge_count() as i64;
    if q < 2 {
        return 0;
    }
    let (num, den) = if bipartite_aware && bipartition(g).is_some() { (q - 2 * p + 4, 4) } else { (q - 3 * p + 6, 6) };
    if num <= 0 {
        0
    } else {
        (num as u64).div_ceil(den)
    }
}
