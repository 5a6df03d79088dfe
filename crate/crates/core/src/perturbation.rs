//! First-order perturbation theory about the particle in the box `[-1, 1]`,
//! with the harmonic term `η x²/2` as the perturbation.

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::quadrature::simpson;
use crate::state::{Eigenpair, Provenance};
use std::f64::consts::PI;

/// Integer coefficients of the closed-form first-order measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PtConstants {
    pub a: [u64; 7],
    pub b: [u64; 3],
    pub c: [u64; 3],
}

pub const PT_CONSTANTS: PtConstants = PtConstants {
    a: [5832, 2_985_984, 1024, 68_024_448, 144_190_368, 7_085_880, 21_851_723],
    b: [29837, 4_253_353, 689],
    c: [3293, 1_055_137, 801],
};

/// Default number of same-parity neighbours mixed into a corrected state.
pub const DEFAULT_TERMS: usize = 2;

/// Unperturbed level `n` of the box `[-1, 1]`.
pub fn box_energy(n: usize) -> f64 {
    ((n + 1) as f64 * PI).powi(2) / 8.0
}

/// Unperturbed level plus the first-order shift `η (1/6 - 1/((n+1)²π²))`.
pub fn pt_energy(n: usize, eta: f64) -> f64 {
    let q = ((n + 1) as f64 * PI).powi(2);
    q / 8.0 + eta * (1.0 / 6.0 - 1.0 / q)
}

/// `∫_{-1}^{1} x² cos(cπ(x+1)/2) dx / 2` for integer `c ≥ 0`.
fn cosine_moment(c: usize) -> f64 {
    if c == 0 {
        1.0 / 3.0
    } else if c % 2 == 0 {
        8.0 / ((c * c) as f64 * PI * PI)
    } else {
        0.0
    }
}

/// `⟨m|x²|n⟩` between normalized box states.
pub fn x2_element(m: usize, n: usize) -> f64 {
    let (a, b) = (m + 1, n + 1);
    cosine_moment(a.abs_diff(b)) - cosine_moment(a + b)
}

/// Box state `n` on `[-1, 1]`: `sin((n+1)π(x+1)/2)`.
fn box_state(n: usize, x: f64) -> f64 {
    ((n + 1) as f64 * PI * (x + 1.0) / 2.0).sin()
}

/// The `count` same-parity neighbours of `n`, nearest first (lower index on
/// ties).
pub fn neighbours(n: usize, count: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..=n + 2 * count + 2)
        .filter(|&m| m != n && (m + n) % 2 == 0)
        .collect();
    out.sort_by_key(|&m| (m.abs_diff(n), m));
    out.truncate(count);
    out
}

/// First-order corrected state `n`, mixing in the `num_terms` nearest
/// same-parity box states (opposite-parity couplings vanish), normalized on
/// `grid`.
pub fn pt_wavefunction(n: usize, eta: f64, grid: &Grid, num_terms: usize) -> Result<Eigenpair> {
    if !grid.spans(-1.0, 1.0) {
        return Err(Error::domain("perturbative states live on the box [-1, 1]"));
    }
    if num_terms == 0 {
        return Err(Error::domain("at least one correction term is required"));
    }
    let mixing: Vec<(usize, f64)> = neighbours(n, num_terms)
        .into_iter()
        .map(|m| (m, 0.5 * eta * x2_element(m, n) / (box_energy(n) - box_energy(m))))
        .collect();
    let mut values: Vec<f64> = grid
        .points()
        .iter()
        .map(|&x| box_state(n, x) + mixing.iter().map(|&(m, c)| c * box_state(m, x)).sum::<f64>())
        .collect();
    let last = values.len() - 1;
    values[0] = 0.0;
    values[last] = 0.0;
    let norm = simpson(&values.iter().map(|v| v * v).collect::<Vec<_>>(), grid.spacing()).sqrt();
    values.iter_mut().for_each(|v| *v /= norm);
    Ok(Eigenpair {
        index: n,
        energy: pt_energy(n, eta),
        grid: *grid,
        values,
        provenance: Provenance::Perturbative,
    })
}

/// Closed-form position Fisher information of the corrected states `n ≤ 2`.
pub fn pt_fisher_x(n: usize, eta: f64) -> Result<f64> {
    if n > 2 {
        return Err(Error::UnsupportedState(n));
    }
    let k = PT_CONSTANTS;
    let (a, b, c) = (k.a[n] as f64, k.b[n] as f64, k.c[n] as f64);
    let pi8 = PI.powi(8);
    let e2 = eta * eta;
    Ok(((n + 1) as f64 * PI).powi(2) * (a * pi8 + b * e2) / (a * pi8 + c * e2))
}

/// Closed-form position Onicescu energy of the corrected ground state, with
/// the leading coefficient appearing on both the `π¹⁶` and `π¹²η` terms.
pub fn pt_onicescu_x0(eta: f64) -> f64 {
    let k = PT_CONSTANTS;
    let [a0, _, _, a3, a4, a5, a6] = k.a.map(|v| v as f64);
    let c0 = k.c[0] as f64;
    let p4 = PI.powi(4);
    let p8 = p4 * p4;
    let num = a3 * p8 * p8 + a3 * p8 * p4 * eta + a4 * p8 * eta * eta - a5 * p4 * eta.powi(3) + a6 * eta.powi(4);
    let den = a0 * p8 + c0 * eta * eta;
    0.375 * num / (den * den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{pib_wavefunction, BoxedOscillator};
    use crate::info::{fisher, shannon, DensityProfile};
    use proptest::prelude::*;

    fn unit_grid() -> Grid {
        Grid::new(2001, -1.0, 1.0).unwrap()
    }

    #[test]
    fn energies() {
        assert!((pt_energy(0, 0.0) - PI * PI / 8.0).abs() < 1e-15);
        assert!((pt_energy(0, 0.001) - 1.2337658956).abs() < 1e-10);
    }

    #[test]
    fn diagonal_element_gives_first_order_shift() {
        for n in 0..6 {
            let shift = 0.5 * x2_element(n, n);
            let q = ((n + 1) as f64 * PI).powi(2);
            assert!((shift - (1.0 / 6.0 - 1.0 / q)).abs() < 1e-15);
        }
    }

    #[test]
    fn x2_element_matches_quadrature() {
        let grid = Grid::new(4001, -1.0, 1.0).unwrap();
        let xs = grid.points();
        for (m, n) in [(0, 2), (1, 3), (0, 1), (2, 6), (4, 4)] {
            let f: Vec<f64> = xs.iter().map(|&x| box_state(m, x) * x * x * box_state(n, x)).collect();
            assert!((simpson(&f, grid.spacing()) - x2_element(m, n)).abs() < 1e-12);
        }
    }

    #[test]
    fn neighbour_order() {
        assert_eq!(neighbours(0, 2), vec![2, 4]);
        assert_eq!(neighbours(3, 2), vec![1, 5]);
        assert_eq!(neighbours(2, 3), vec![0, 4, 6]);
    }

    #[test]
    fn zero_coupling_is_box_state() {
        let grid = unit_grid();
        for n in 0..3 {
            let pt = pt_wavefunction(n, 0.0, &grid, DEFAULT_TERMS).unwrap();
            let pib = pib_wavefunction(n, &grid);
            let dev = pt.values.iter().zip(&pib.values).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
            assert!(dev < 1e-12);
        }
    }

    #[test]
    fn weak_coupling_overlaps_exact_state() {
        // η = k x_c⁴ with x_c = 1, so ω = √η.
        let grid = unit_grid();
        let pt = pt_wavefunction(0, 0.001, &grid, DEFAULT_TERMS).unwrap();
        let exact = BoxedOscillator::new(0.001f64.sqrt(), 1.0).unwrap();
        let ex = exact.wavefunction(0, &grid, 1e-13).unwrap();
        assert!(pt.overlap(&ex).abs() > 1.0 - 1e-8);
    }

    #[test]
    fn shannon_of_corrected_ground_state() {
        let pt = pt_wavefunction(0, 0.1, &unit_grid(), DEFAULT_TERMS).unwrap();
        assert!((shannon(&DensityProfile::position(&pt)) - 0.385508).abs() < 1e-5);
    }

    #[test]
    fn closed_form_fisher() {
        assert!((pt_fisher_x(0, 0.001).unwrap() - 9.869604).abs() < 1e-6);
        assert!((pt_fisher_x(2, 0.1).unwrap() - 88.826429).abs() < 1e-6);
        for n in 0..3 {
            let want = ((n + 1) as f64 * PI).powi(2);
            assert!((pt_fisher_x(n, 0.0).unwrap() - want).abs() < 1e-12);
        }
        assert_eq!(pt_fisher_x(3, 0.1), Err(Error::UnsupportedState(3)));
    }

    #[test]
    fn closed_form_fisher_matches_numerics() {
        let grid = Grid::new(8001, -1.0, 1.0).unwrap();
        for n in 0..3 {
            for eta in [0.001, 0.01] {
                let pt = pt_wavefunction(n, eta, &grid, DEFAULT_TERMS).unwrap();
                let numeric = fisher(&DensityProfile::position(&pt));
                let closed = pt_fisher_x(n, eta).unwrap();
                assert!((numeric - closed).abs() < 1e-5, "n={n} η={eta}: {numeric} vs {closed}");
            }
        }
    }

    #[test]
    fn closed_form_onicescu() {
        assert!((pt_onicescu_x0(0.0) - 0.75).abs() < 1e-15);
        assert!((pt_onicescu_x0(0.001) - 0.750008).abs() < 1e-6);
        assert!((pt_onicescu_x0(0.01) - 0.750077).abs() < 1e-5);
        assert!((pt_onicescu_x0(0.1) - 0.750771).abs() < 1e-5);
    }

    #[test]
    fn leading_coefficient_is_twice_square() {
        let k = PT_CONSTANTS;
        assert_eq!(k.a[3], 2 * k.a[0] * k.a[0]);
    }

    proptest! {
        #[test]
        fn energy_is_linear_in_eta(n in 0usize..8, eta in 0.0f64..1.0) {
            let slope = (pt_energy(n, eta) - pt_energy(n, 0.0)) / eta.max(1e-12);
            let q = ((n + 1) as f64 * PI).powi(2);
            prop_assert!(eta < 1e-9 || (slope - (1.0 / 6.0 - 1.0 / q)).abs() < 1e-9);
        }
    }
}
