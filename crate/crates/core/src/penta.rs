//! Pentadiagonal systems `A x = b` with bands at offsets -2..=2.

use crate::error::{Error, Result};

/// Banded matrix stored by diagonals. Row `i` reads
/// `sub2[i] x[i-2] + sub1[i] x[i-1] + diag[i] x[i] + sup1[i] x[i+1] + sup2[i] x[i+2]`;
/// entries that would fall outside the matrix are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct PentaSystem {
    pub sub2: Vec<f64>,
    pub sub1: Vec<f64>,
    pub diag: Vec<f64>,
    pub sup1: Vec<f64>,
    pub sup2: Vec<f64>,
}

impl PentaSystem {
    pub fn zeros(n: usize) -> Self {
        Self {
            sub2: vec![0.0; n],
            sub1: vec![0.0; n],
            diag: vec![0.0; n],
            sup1: vec![0.0; n],
            sup2: vec![0.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn mul(&self, x: &[f64], out: &mut [f64]) {
        let n = self.len();
        debug_assert!(x.len() == n && out.len() == n);
        for i in 0..n {
            let mut s = self.diag[i] * x[i];
            if i >= 1 {
                s += self.sub1[i] * x[i - 1];
            }
            if i >= 2 {
                s += self.sub2[i] * x[i - 2];
            }
            if i + 1 < n {
                s += self.sup1[i] * x[i + 1];
            }
            if i + 2 < n {
                s += self.sup2[i] * x[i + 2];
            }
            out[i] = s;
        }
    }

    /// LU factorization without pivoting. Every pivot must be positive,
    /// which holds for the symmetric positive definite propagator matrices.
    pub fn factor(&self) -> Result<PentaLu> {
        let n = self.len();
        let mut l1 = vec![0.0; n];
        let mut l2 = vec![0.0; n];
        let mut inv_u0 = vec![0.0; n];
        let mut u1 = vec![0.0; n];
        let mut u2 = vec![0.0; n];
        for i in 0..n {
            let mut l2i = 0.0;
            let mut l1i = 0.0;
            if i >= 2 {
                l2i = self.sub2[i] * inv_u0[i - 2];
            }
            if i >= 1 {
                let corr = if i >= 2 { l2i * u1[i - 2] } else { 0.0 };
                l1i = (self.sub1[i] - corr) * inv_u0[i - 1];
            }
            let mut u0 = self.diag[i];
            if i >= 2 {
                u0 -= l2i * u2[i - 2];
            }
            if i >= 1 {
                u0 -= l1i * u1[i - 1];
            }
            if !(u0 > 0.0) {
                return Err(Error::StepSize { row: i, pivot: u0, dtau: f64::NAN });
            }
            u1[i] = if i + 1 < n {
                self.sup1[i] - if i >= 1 { l1i * u2[i - 1] } else { 0.0 }
            } else {
                0.0
            };
            u2[i] = if i + 2 < n { self.sup2[i] } else { 0.0 };
            l1[i] = l1i;
            l2[i] = l2i;
            inv_u0[i] = 1.0 / u0;
        }
        Ok(PentaLu { l1, l2, inv_u0, u1, u2 })
    }
}

/// Factors of a [`PentaSystem`], reusable across right-hand sides.
#[derive(Debug, Clone, PartialEq)]
pub struct PentaLu {
    l1: Vec<f64>,
    l2: Vec<f64>,
    inv_u0: Vec<f64>,
    u1: Vec<f64>,
    u2: Vec<f64>,
}

impl PentaLu {
    pub fn len(&self) -> usize {
        self.inv_u0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inv_u0.is_empty()
    }

    /// Overwrites `rhs` with the solution.
    pub fn solve_in_place(&self, rhs: &mut [f64]) {
        let n = self.len();
        debug_assert_eq!(rhs.len(), n);
        for i in 1..n {
            let mut y = rhs[i] - self.l1[i] * rhs[i - 1];
            if i >= 2 {
                y -= self.l2[i] * rhs[i - 2];
            }
            rhs[i] = y;
        }
        for i in (0..n).rev() {
            let mut x = rhs[i];
            if i + 1 < n {
                x -= self.u1[i] * rhs[i + 1];
            }
            if i + 2 < n {
                x -= self.u2[i] * rhs[i + 2];
            }
            rhs[i] = x * self.inv_u0[i];
        }
    }
}
