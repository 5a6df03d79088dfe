//! Box-oscillator eigenfunctions by Taylor continuation.
//!
//! `u(x) = e^{-ωx²/2} ₁F₁(1/4 - ε/2ω; 1/2; ωx²)` (and the odd partner) solves
//! `u'' = (ω²x² - 2ε) u` with `u(0) = 1, u'(0) = 0` (odd: `0, 1`). For high
//! levels the Maclaurin series of `₁F₁` cancels catastrophically (about
//! `(n+1)π/2` nats are lost for level `n`), so the same function is
//! continued outward from the origin in short Taylor steps instead, where
//! every local series converges without cancellation.

use crate::error::{Error, Result};
use crate::state::Parity;
use std::f64::consts::PI;

const MAX_TERMS: usize = 120;

#[derive(Debug, Clone, Copy)]
struct Mode {
    omega2: f64,
    two_e: f64,
}

impl Mode {
    fn new(omega: f64, energy: f64) -> Self {
        Self { omega2: omega * omega, two_e: 2.0 * energy }
    }

    /// Advances `(u, u')` from `c` to `c + t`.
    fn advance(&self, c: f64, u: f64, du: f64, t: f64) -> (f64, f64) {
        let q0 = self.omega2 * c * c - self.two_e;
        let q1 = 2.0 * self.omega2 * c;
        let q2 = self.omega2;
        // a[k-2], a[k-1], a[k]
        let (mut am2, mut am1, mut a0) = (0.0, 0.0, u);
        let mut a1 = du;
        let mut tk = 1.0; // t^k
        let mut val = u + du * t;
        let mut der = du;
        let scale = u.abs() + (du * t).abs();
        let mut quiet = 0;
        for k in 0..MAX_TERMS {
            let kf = k as f64;
            let a2 = (q0 * a0 + q1 * am1 + q2 * am2) / ((kf + 2.0) * (kf + 1.0));
            let t_next = tk * t; // t^(k+1)
            val += a2 * t_next * t;
            der += (kf + 2.0) * a2 * t_next;
            let size = (a2 * t_next * t).abs();
            if size <= 1e-18 * (scale + val.abs()) {
                quiet += 1;
                if quiet >= 3 {
                    break;
                }
            } else {
                quiet = 0;
            }
            am2 = am1;
            am1 = a0;
            a0 = a1;
            a1 = a2;
            tk = t_next;
        }
        (val, der)
    }

    fn max_step(&self, reach: f64) -> f64 {
        let stiff = self.two_e.abs().max(self.omega2 * reach * reach) + 1.0;
        1.0 / stiff.sqrt()
    }
}

fn start(parity: Parity) -> (f64, f64) {
    match parity {
        Parity::Even => (1.0, 0.0),
        Parity::Odd => (0.0, 1.0),
    }
}

/// `u(L)` and the number of zeros of `u` in `(0, L]`.
pub fn shoot(omega: f64, energy: f64, parity: Parity, half_width: f64) -> (f64, usize) {
    let mode = Mode::new(omega, energy);
    let steps = (half_width / mode.max_step(half_width)).ceil().max(1.0) as usize;
    let t = half_width / steps as f64;
    let (mut u, mut du) = start(parity);
    let mut sign = if parity == Parity::Even { 1.0 } else { 0.0 };
    let mut zeros = 0;
    for i in 0..steps {
        let c = i as f64 * t;
        (u, du) = mode.advance(c, u, du, t);
        if u != 0.0 {
            if sign != 0.0 && u.signum() != sign {
                zeros += 1;
            }
            sign = u.signum();
        }
    }
    if u == 0.0 {
        zeros += 1;
    }
    (u, zeros)
}

/// `u` at the non-negative, ascending abscissae `xs`.
pub fn sample(omega: f64, energy: f64, parity: Parity, xs: &[f64]) -> Vec<f64> {
    let reach = xs.last().copied().unwrap_or(0.0);
    let mode = Mode::new(omega, energy);
    let s = mode.max_step(reach);
    let (mut u, mut du) = start(parity);
    let mut at = 0.0;
    let mut out = Vec::with_capacity(xs.len());
    for &x in xs {
        while x - at > s {
            (u, du) = mode.advance(at, u, du, s);
            at += s;
        }
        if x > at {
            (u, du) = mode.advance(at, u, du, x - at);
            at = x;
        }
        out.push(u);
    }
    out
}

/// The lowest `count` levels of one parity.
///
/// Zero counting isolates each level between the previous one and a
/// min-max upper bound; the bracket is then closed by Illinois regula falsi
/// on `u(L)` to a tolerance of `tol` relative to `max(1, ε)`.
pub fn levels(omega: f64, half_width: f64, parity: Parity, count: usize, tol: f64) -> Result<Vec<f64>> {
    let p = if parity == Parity::Even { 0 } else { 1 };
    let mut out = Vec::with_capacity(count);
    let mut previous = 0.0;
    for j in 0..count {
        let global = 2 * j + p;
        // The potential is non-negative and at most ω²L²/2, so the level sits
        // between the bare box level and that plus the well's rim.
        let bare = ((global + 1) as f64 * PI / (2.0 * half_width)).powi(2) / 2.0;
        let fail = || Error::Basis { parity, index: j };
        let mut lo = bare.max(previous);
        let mut hi = bare + 0.5 * omega * omega * half_width * half_width + 1.0;
        let mut nl = shoot(omega, lo, parity, half_width).1;
        let mut nh = shoot(omega, hi, parity, half_width).1;
        if nl > j {
            lo = previous;
            nl = j;
        }
        let mut grow = 0;
        while nh < j + 1 {
            hi = 2.0 * hi + 1.0;
            nh = shoot(omega, hi, parity, half_width).1;
            grow += 1;
            if grow > 60 {
                return Err(fail());
            }
        }
        let mut iters = 0;
        while nl < j || nh > j + 1 {
            let mid = 0.5 * (lo + hi);
            let nm = shoot(omega, mid, parity, half_width).1;
            if nm > j {
                hi = mid;
                nh = nm;
            } else {
                lo = mid;
                nl = nm;
            }
            iters += 1;
            if iters > 200 {
                return Err(fail());
            }
        }
        let mut f_lo = shoot(omega, lo, parity, half_width).0;
        let mut f_hi = shoot(omega, hi, parity, half_width).0;
        if f_lo == 0.0 {
            out.push(lo);
            previous = lo + 10.0 * tol;
            continue;
        }
        if f_lo.signum() == f_hi.signum() {
            return Err(fail());
        }
        let mut side = 0i8;
        let mut root = 0.5 * (lo + hi);
        for _ in 0..200 {
            if hi - lo <= tol * hi.max(1.0) {
                break;
            }
            let mut x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
            if !(x > lo && x < hi) {
                x = 0.5 * (lo + hi);
            }
            let f = shoot(omega, x, parity, half_width).0;
            root = x;
            if f == 0.0 {
                break;
            }
            if f.signum() == f_hi.signum() {
                hi = x;
                f_hi = f;
                if side == 1 {
                    f_lo *= 0.5;
                }
                side = 1;
            } else {
                lo = x;
                f_lo = f;
                if side == -1 {
                    f_hi *= 0.5;
                }
                side = -1;
            }
            root = 0.5 * (lo + hi);
        }
        out.push(root);
        previous = root + 10.0 * tol;
    }
    Ok(out)
}
