//! Classical turning points, phase-space areas and tunneling probabilities.

use crate::potential::ConfinedPotential;
use crate::quadrature::cubic_integral;
use crate::state::Eigenpair;

/// Classically allowed interval at a given energy, clipped to the box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalRegion {
    pub inner_left: f64,
    pub inner_right: f64,
    /// Whether each end is a wall rather than a true turning point.
    pub left_clipped: bool,
    pub right_clipped: bool,
    pub empty: bool,
    /// Right wall position, kept for the gap measure.
    wall_right: f64,
}

impl ClassicalRegion {
    /// Length of the allowed interval.
    pub fn l_allowed(&self) -> f64 {
        if self.empty {
            0.0
        } else {
            self.inner_right - self.inner_left
        }
    }

    /// Distance from the right turning point to the right wall.
    pub fn l_right_gap(&self) -> f64 {
        if self.empty {
            0.0
        } else {
            self.wall_right - self.inner_right
        }
    }
}

/// Where `V(x) = ε`, clipped to the walls.
pub fn turning_points(pot: &ConfinedPotential, epsilon: f64) -> ClassicalRegion {
    let (b1, b2) = (pot.left(), pot.right());
    let empty = ClassicalRegion {
        inner_left: b1,
        inner_right: b1,
        left_clipped: false,
        right_clipped: false,
        empty: true,
        wall_right: b2,
    };
    if !(epsilon > 0.0) {
        return empty;
    }
    let (raw_left, raw_right) = if pot.k() == 0.0 {
        (f64::NEG_INFINITY, f64::INFINITY)
    } else {
        let reach = (2.0 * epsilon / pot.k()).sqrt();
        (pot.center() - reach, pot.center() + reach)
    };
    let left = raw_left.max(b1);
    let right = raw_right.min(b2);
    if left >= right {
        return empty;
    }
    ClassicalRegion {
        inner_left: left,
        inner_right: right,
        left_clipped: raw_left <= b1,
        right_clipped: raw_right >= b2,
        empty: false,
        wall_right: b2,
    }
}

const AREA_TOL: f64 = 1e-13;
const MAX_DEPTH: usize = 50;

/// `∫ √(ε - V(x)) dx` over the allowed region.
///
/// Each half of the region is integrated by adaptive Simpson; a half that
/// ends at a true turning point is mapped through `x = x_t ± u²`, which
/// turns the square-root edge into a smooth integrand.
pub fn phase_area(pot: &ConfinedPotential, epsilon: f64) -> f64 {
    let region = turning_points(pot, epsilon);
    if region.empty {
        return 0.0;
    }
    let root = |x: f64| (epsilon - pot.harmonic(x)).max(0.0).sqrt();
    let (l, r) = (region.inner_left, region.inner_right);
    let mid = 0.5 * (l + r);
    let left_half = if region.left_clipped {
        adaptive_simpson(&root, l, mid)
    } else {
        let span = (mid - l).sqrt();
        adaptive_simpson(&|u: f64| 2.0 * u * root(l + u * u), 0.0, span)
    };
    let right_half = if region.right_clipped {
        adaptive_simpson(&root, mid, r)
    } else {
        let span = (r - mid).sqrt();
        adaptive_simpson(&|u: f64| 2.0 * u * root(r - u * u), 0.0, span)
    };
    left_half + right_half
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    refine(f, a, b, fa, fm, fb, whole, AREA_TOL, MAX_DEPTH)
}

#[allow(clippy::too_many_arguments)]
fn refine(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: usize) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Probability of finding the particle where `V > ε` inside the box.
///
/// Computed as one minus the probability between the turning points, with
/// the density integrated as a piecewise cubic so that turning points that
/// fall between mesh points are handled to fourth order.
pub fn tunneling_probability(state: &Eigenpair, pot: &ConfinedPotential) -> f64 {
    let region = turning_points(pot, state.energy);
    let grid = &state.grid;
    let rho = state.density();
    let (x0, h) = (grid.x_min(), grid.spacing());
    let total = cubic_integral(&rho, x0, h, grid.x_min(), grid.x_max());
    if region.empty {
        return 1.0;
    }
    let inside = cubic_integral(&rho, x0, h, region.inner_left, region.inner_right);
    ((total - inside) / total).max(0.0)
}

/// Closed phase-space orbit `(x, ±√(2(ε - V)))`, upper branch left to right
/// and lower branch back. Wall-clipped ends close with vertical segments.
/// Abscissae are cosine-spaced so that the turning-point edges are resolved.
pub fn phase_orbit(pot: &ConfinedPotential, epsilon: f64, n_samples: usize) -> Vec<(f64, f64)> {
    let region = turning_points(pot, epsilon);
    if region.empty || n_samples < 2 {
        return Vec::new();
    }
    let (l, r) = (region.inner_left, region.inner_right);
    let momentum = |x: f64| (2.0 * (epsilon - pot.harmonic(x))).max(0.0).sqrt();
    let xs: Vec<f64> = (0..n_samples)
        .map(|i| {
            let theta = std::f64::consts::PI * i as f64 / (n_samples - 1) as f64;
            0.5 * (l + r) - 0.5 * (r - l) * theta.cos()
        })
        .collect();
    let mut orbit: Vec<(f64, f64)> = xs.iter().map(|&x| (x, momentum(x))).collect();
    orbit.extend(xs.iter().rev().map(|&x| (x, -momentum(x))));
    orbit.push(orbit[0]);
    orbit
}

/// Area enclosed by a closed polygon (shoelace formula).
pub fn enclosed_area(orbit: &[(f64, f64)]) -> f64 {
    orbit.windows(2).map(|w| w[0].0 * w[1].1 - w[1].0 * w[0].1).sum::<f64>().abs() / 2.0
}

/// First parameter value at which the probability exceeds `threshold`.
pub fn tunneling_onset(series: &[(f64, f64)], threshold: f64) -> Option<f64> {
    series.iter().find(|(_, t)| *t > threshold).map(|(p, _)| *p)
}
