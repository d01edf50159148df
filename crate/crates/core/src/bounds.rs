//! Size bounds for 2-connected factor-critical equimatchable graphs
//! embeddable in a fixed surface.
//!
//! For the orientable surface `S_g` the maximum order `m(g)` satisfies
//! `4√(2g) + 1 <= m(g) <= 4√g + 17` for `g <= 2` and
//! `4√(2g) + 1 <= m(g) <= c_g √g + 5` for `g >= 3`; on `N_h` the analogous
//! bounds use `4√h + 1`, `2√(2h) + 17` and `c̃_h`.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("nonorientable genus must be at least 1")]
    ZeroCrosscaps,
    #[error("degree threshold {0} is below 6")]
    DegreeBelowSix(f64),
    #[error("degree threshold is only defined for genus >= 3, got {0}")]
    GenusBelowThree(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Surface {
    pub orientable: bool,
    /// Handles (orientable) or crosscaps (nonorientable).
    pub genus: u64,
}

impl Surface {
    pub fn orientable(g: u64) -> Self {
        Surface { orientable: true, genus: g }
    }

    pub fn nonorientable(h: u64) -> Result<Self, BoundsError> {
        if h == 0 {
            return Err(BoundsError::ZeroCrosscaps);
        }
        Ok(Surface { orientable: false, genus: h })
    }

    pub fn euler_characteristic(&self) -> i64 {
        let k = self.genus as i64;
        if self.orientable {
            2 - 2 * k
        } else {
            2 - k
        }
    }

    /// The `√`-term shared by every bound: `4√g` or `2√(2h)`.
    fn root_term(&self) -> f64 {
        let k = self.genus as f64;
        if self.orientable {
            4.0 * k.sqrt()
        } else {
            2.0 * (2.0 * k).sqrt()
        }
    }
}

impl std::fmt::Display for Surface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.orientable {
            write!(f, "S_{}", self.genus)
        } else {
            write!(f, "N_{}", self.genus)
        }
    }
}

/// Maximum order of a randomly matchable graph embeddable in `s`:
/// `4 + 4√g` or `4 + 2√(2h)`.
pub fn randomly_matchable_size_bound(s: Surface) -> f64 {
    4.0 + s.root_term()
}

/// `6χ(S)/(5 − d)`: a cellularly embedded graph with more vertices than this
/// has minimum degree at most `d`.
pub fn min_degree_threshold(s: Surface, d: f64) -> Result<f64, BoundsError> {
    if d < 6.0 {
        return Err(BoundsError::DegreeBelowSix(d));
    }
    let chi = s.euler_characteristic() as f64;
    // avoid reporting -0.0 on the torus and the Klein bottle
    Ok(6.0 * chi / (5.0 - d) + 0.0)
}

/// Order bound given a vertex of degree at most `d`: `5 + 2d + 4√g` or
/// `5 + 2d + 2√(2h)`.
pub fn size_bound_given_degree(s: Surface, d: f64) -> f64 {
    5.0 + 2.0 * d + s.root_term()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DegreeThreshold {
    pub d_star: f64,
    pub c_star: f64,
}

/// Smallest `d >= 6` with `6χ/(5 − d) <= 5 + 2d + t` (where `t` is the
/// root term), and the constant `c` with `5 + 2d + t = c·√genus + 5`.
///
/// Orientable surfaces use the closed form
/// `d_g = (5 − 4√g + √(112g + 120√g + 129)) / 4`. Nonorientable surfaces are
/// solved by bisection on the same inequality.
pub fn solve_degree_threshold(s: Surface) -> Result<DegreeThreshold, BoundsError> {
    if s.genus < 3 {
        return Err(BoundsError::GenusBelowThree(s.genus));
    }
    let k = s.genus as f64;
    let d_star = if s.orientable {
        let r = k.sqrt();
        (5.0 - 4.0 * r + (112.0 * k + 120.0 * r + 129.0).sqrt()) / 4.0
    } else {
        bisect_threshold(s)
    };
    let c_star = if s.orientable {
        let r = k.sqrt();
        (5.0 + 4.0 * r + (112.0 * k + 120.0 * r + 129.0).sqrt()) / (2.0 * r)
    } else {
        (2.0 * d_star + s.root_term()) / k.sqrt()
    };
    Ok(DegreeThreshold { d_star, c_star })
}

/// Solves `f(d) = (5 − d)(5 + 2d + t) − 6χ = 0` on `[6, ∞)`. For `χ < 0`,
/// `f` is a downward parabola, so the inequality holds from its larger root
/// onwards; when `f(6) <= 0` already, `d = 6` is the answer.
fn bisect_threshold(s: Surface) -> f64 {
    let t = s.root_term();
    let chi = s.euler_characteristic() as f64;
    let f = |d: f64| (5.0 - d) * (5.0 + 2.0 * d + t) - 6.0 * chi;
    let mut lo = 6.0;
    if f(lo) <= 0.0 {
        return lo;
    }
    let mut hi = 12.0;
    while f(hi) > 0.0 {
        hi *= 2.0;
    }
    while hi - lo > 1e-12 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsReport {
    pub surface: Surface,
    pub euler_characteristic: i64,
    /// Largest randomly matchable graph on the surface.
    pub rm_bound: f64,
    /// Degree threshold used for the upper bound (6 for genus <= 2).
    pub d_star: f64,
    /// `c` in `upper = c·√genus + 5`; absent on the sphere.
    pub c_star: Option<f64>,
    /// `6χ/(5 − d_star)`, the order above which `δ <= d_star`.
    pub min_degree_threshold: f64,
    pub lower: f64,
    pub upper: f64,
}

pub fn size_bounds(s: Surface) -> BoundsReport {
    let k = s.genus as f64;
    let lower = if s.orientable { 4.0 * (2.0 * k).sqrt() + 1.0 } else { 4.0 * k.sqrt() + 1.0 };
    let (d_star, c_star, upper) = if s.genus <= 2 {
        let upper = s.root_term() + 17.0;
        let c = (s.genus > 0).then(|| (upper - 5.0) / k.sqrt());
        (6.0, c, upper)
    } else {
        let t = solve_degree_threshold(s).expect("genus >= 3");
        (t.d_star, Some(t.c_star), t.c_star * k.sqrt() + 5.0)
    };
    BoundsReport {
        surface: s,
        euler_characteristic: s.euler_characteristic(),
        rm_bound: randomly_matchable_size_bound(s),
        d_star,
        c_star,
        min_degree_threshold: min_degree_threshold(s, d_star).expect("d_star >= 6"),
        lower,
        upper,
    }
}
