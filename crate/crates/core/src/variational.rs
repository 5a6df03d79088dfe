//! Rayleigh-Ritz diagonalization of the off-centre well in a basis of
//! centred box-oscillator eigenfunctions, with the basis width optimized.

use crate::eigen::{diagonalize, Matrix, SymmetricEigen};
use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::hamiltonian::second_derivative;
use crate::oscillator;
use crate::potential::ConfinedPotential;
use crate::quadrature::{simpson_weights, weighted_dot};
use crate::state::{Eigenpair, Parity, Provenance};

/// Largest relative asymmetry of the assembled matrix before the grid is
/// considered too coarse.
pub const ASYMMETRY_LIMIT: f64 = 1e-8;
const BASIS_ROOT_TOL: f64 = 1e-13;

/// Basis oscillator frequency for width parameter `alpha`.
pub fn basis_omega(alpha: f64) -> f64 {
    2.0 * std::f64::consts::SQRT_2 * alpha
}

/// Orthonormal basis sampled on a grid over `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct BasisSet {
    pub alpha: f64,
    pub grid: Grid,
    pub functions: Vec<Vec<f64>>,
    pub basis_energies: Vec<f64>,
    pub parities: Vec<Parity>,
}

impl BasisSet {
    pub fn size(&self) -> usize {
        self.functions.len()
    }

    /// Largest deviation of the Simpson Gram matrix from the identity.
    pub fn gram_defect(&self) -> f64 {
        let w = simpson_weights(self.grid.n_points(), self.grid.spacing());
        let mut worst = 0.0f64;
        for i in 0..self.size() {
            for j in 0..=i {
                let g = weighted_dot(&w, &self.functions[i], &self.functions[j]);
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - want).abs());
            }
        }
        worst
    }
}

fn check_unit_box(grid: &Grid) -> Result<()> {
    if grid.spans(-1.0, 1.0) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "basis grid must span [-1, 1], got [{}, {}]",
            grid.x_min(),
            grid.x_max()
        )))
    }
}

/// Builds `size` basis functions: the lowest `⌈size/2⌉` even and `⌊size/2⌋`
/// odd box-oscillator modes at frequency [`basis_omega`], sampled, then
/// Gram-Schmidt orthonormalized under Simpson weights in energy order.
pub fn build_basis(alpha: f64, size: usize, grid: &Grid) -> Result<BasisSet> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::domain(format!("alpha must be positive, got {alpha}")));
    }
    if size < 2 {
        return Err(Error::domain(format!("basis size must be at least 2, got {size}")));
    }
    check_unit_box(grid)?;
    let omega = basis_omega(alpha);
    let even = oscillator::levels(omega, 1.0, Parity::Even, size.div_ceil(2), BASIS_ROOT_TOL)?;
    let odd = oscillator::levels(omega, 1.0, Parity::Odd, size / 2, BASIS_ROOT_TOL)?;
    let mut modes: Vec<(f64, Parity)> = even
        .into_iter()
        .map(|e| (e, Parity::Even))
        .chain(odd.into_iter().map(|e| (e, Parity::Odd)))
        .collect();
    modes.sort_by(|a, b| a.0.total_cmp(&b.0));

    let n = grid.n_points();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| grid.x(i).abs().total_cmp(&grid.x(j).abs()));
    let radii: Vec<f64> = order.iter().map(|&j| grid.x(j).abs().min(1.0)).collect();

    let w = simpson_weights(n, grid.spacing());
    let mut functions: Vec<Vec<f64>> = Vec::with_capacity(size);
    for (index, &(energy, parity)) in modes.iter().enumerate() {
        let profile = oscillator::sample(omega, energy, parity, &radii);
        let mut f = vec![0.0; n];
        for (&j, &u) in order.iter().zip(&profile) {
            let odd_flip = parity == Parity::Odd && grid.x(j) < 0.0;
            f[j] = if odd_flip { -u } else { u };
        }
        f[0] = 0.0;
        f[n - 1] = 0.0;
        for _ in 0..2 {
            for g in &functions {
                let c = weighted_dot(&w, &f, g);
                f.iter_mut().zip(g).for_each(|(a, b)| *a -= c * b);
            }
        }
        let norm = weighted_dot(&w, &f, &f).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Basis { parity, index });
        }
        f.iter_mut().for_each(|v| *v /= norm);
        functions.push(f);
    }
    Ok(BasisSet {
        alpha,
        grid: *grid,
        basis_energies: modes.iter().map(|m| m.0).collect(),
        parities: modes.iter().map(|m| m.1).collect(),
        functions,
    })
}

/// Symmetrized Hamiltonian matrix and the asymmetry it had before.
#[derive(Debug, Clone)]
pub struct AssembledHamiltonian {
    pub matrix: Matrix,
    pub asymmetry: f64,
}

/// `⟨m|H|n⟩` by Simpson quadrature with the kinetic term from the
/// five-point second derivative of each sampled function.
pub fn hamiltonian_matrix(basis: &BasisSet, pot: &ConfinedPotential) -> Result<AssembledHamiltonian> {
    if (pot.left() + 1.0).abs() > 1e-12 || (pot.right() - 1.0).abs() > 1e-12 {
        return Err(Error::domain("variational basis lives on the box [-1, 1]"));
    }
    let grid = &basis.grid;
    let h = grid.spacing();
    let n = grid.n_points();
    let w = simpson_weights(n, h);
    let potential: Vec<f64> = (0..n).map(|j| pot.harmonic(grid.x(j))).collect();
    let applied: Vec<Vec<f64>> = basis
        .functions
        .iter()
        .map(|f| {
            let d2 = second_derivative(f, h);
            f.iter().zip(&d2).zip(&potential).map(|((v, d), p)| -0.5 * d + p * v).collect()
        })
        .collect();
    let size = basis.size();
    let mut matrix = Matrix::zeros(size);
    for i in 0..size {
        for j in 0..size {
            matrix.set(i, j, weighted_dot(&w, &basis.functions[i], &applied[j]));
        }
    }
    let asymmetry = matrix.asymmetry();
    if asymmetry > ASYMMETRY_LIMIT {
        return Err(Error::Discretization { asymmetry, limit: ASYMMETRY_LIMIT });
    }
    matrix.symmetrize();
    Ok(AssembledHamiltonian { matrix, asymmetry })
}

/// Eigen-decomposition of the Hamiltonian in `basis`.
pub fn solve_in_basis(basis: &BasisSet, pot: &ConfinedPotential) -> Result<SymmetricEigen> {
    diagonalize(&hamiltonian_matrix(basis, pot)?.matrix)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariationalConfig {
    pub size: usize,
    pub alpha_range: (f64, f64),
    pub iterations: usize,
}

impl Default for VariationalConfig {
    fn default() -> Self {
        Self { size: 50, alpha_range: (0.05, 2.0), iterations: 40 }
    }
}

impl VariationalConfig {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.alpha_range;
        if !(lo > 0.0 && hi > lo && hi.is_finite()) {
            return Err(Error::domain(format!("alpha range must be a positive interval, got ({lo}, {hi})")));
        }
        if self.size < 2 {
            return Err(Error::domain("basis size must be at least 2"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct AchoSpectrum {
    pub alpha: f64,
    /// All `size` Ritz values, ascending.
    pub energies: Vec<f64>,
    /// Reconstructed grid states for the requested levels.
    pub states: Vec<Eigenpair>,
    /// Every `(alpha, ground energy)` evaluated by the search.
    pub trace: Vec<(f64, f64)>,
}

/// Ground Ritz value at a fixed `alpha`.
pub fn ground_energy(pot: &ConfinedPotential, grid: &Grid, alpha: f64, size: usize) -> Result<f64> {
    let basis = build_basis(alpha, size, grid)?;
    Ok(solve_in_basis(&basis, pot)?.values[0])
}

/// Golden-section search of the ground Ritz value over `alpha`, returning
/// the spectrum at the best width and the lowest `n_states` grid states.
pub fn solve_acho(
    pot: &ConfinedPotential,
    grid: &Grid,
    config: &VariationalConfig,
    n_states: usize,
) -> Result<AchoSpectrum> {
    config.validate()?;
    check_unit_box(grid)?;
    if n_states > config.size {
        return Err(Error::domain(format!(
            "requested {n_states} states from a basis of {}",
            config.size
        )));
    }
    let mut trace = Vec::new();
    let mut best: Option<(f64, BasisSet, SymmetricEigen)> = None;
    let mut eval = |alpha: f64| -> Result<f64> {
        let basis = build_basis(alpha, config.size, grid)?;
        let eig = solve_in_basis(&basis, pot)?;
        let e0 = eig.values[0];
        trace.push((alpha, e0));
        if best.as_ref().map_or(true, |b| e0 < b.2.values[0]) {
            best = Some((alpha, basis, eig));
        }
        Ok(e0)
    };

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = config.alpha_range;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    for _ in 2..config.iterations.max(2) {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d)?;
        }
    }
    let (alpha, basis, eig) = best.expect("at least two evaluations");
    let states = (0..n_states).map(|k| reconstruct(&basis, &eig, k)).collect();
    Ok(AchoSpectrum { alpha, energies: eig.values, states, trace })
}

/// Grid state `k` as the eigenvector-weighted basis sum, signed so that its
/// first lobe from the left wall is positive.
pub fn reconstruct(basis: &BasisSet, eig: &SymmetricEigen, k: usize) -> Eigenpair {
    let n = basis.grid.n_points();
    let mut values = vec![0.0; n];
    for (c, f) in eig.vectors[k].iter().zip(&basis.functions) {
        values.iter_mut().zip(f).for_each(|(v, b)| *v += c * b);
    }
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if let Some(first) = values.iter().find(|v| v.abs() > 1e-3 * peak) {
        if *first < 0.0 {
            values.iter_mut().for_each(|v| *v = -*v);
        }
    }
    Eigenpair {
        index: k,
        energy: eig.values[k],
        grid: basis.grid,
        values,
        provenance: Provenance::Variational,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::BoxedOscillator;

    fn unit_grid() -> Grid {
        Grid::new(2001, -1.0, 1.0).unwrap()
    }

    #[test]
    fn matching_width_gives_unit_oscillator() {
        assert!((basis_omega((0.125f64).sqrt()) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn smallest_basis_has_zero_and_one_nodes() {
        let basis = build_basis((0.125f64).sqrt(), 2, &unit_grid()).unwrap();
        assert_eq!(basis.parities, vec![Parity::Even, Parity::Odd]);
        for (k, f) in basis.functions.iter().enumerate() {
            let pair = Eigenpair {
                index: k,
                energy: basis.basis_energies[k],
                grid: basis.grid,
                values: f.clone(),
                provenance: Provenance::Variational,
            };
            assert_eq!(pair.interior_sign_changes(), k);
        }
    }

    #[test]
    fn basis_energies_are_unit_oscillator_levels() {
        let basis = build_basis((0.125f64).sqrt(), 10, &unit_grid()).unwrap();
        let exact = BoxedOscillator::new(1.0, 1.0).unwrap().eigenvalues(10, 1e-13).unwrap();
        for (a, b) in basis.basis_energies.iter().zip(&exact) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
        assert!(basis.gram_defect() < 1e-9);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(build_basis(0.0, 4, &unit_grid()).is_err());
        assert!(build_basis(0.3, 1, &unit_grid()).is_err());
        let wide = Grid::new(201, -2.0, 2.0).unwrap();
        assert!(build_basis(0.3, 4, &wide).is_err());
    }

    #[test]
    fn eigenbasis_gives_diagonal_matrix() {
        let basis = build_basis((0.125f64).sqrt(), 12, &unit_grid()).unwrap();
        let pot = ConfinedPotential::symmetric(1.0, 1.0).unwrap();
        let hm = hamiltonian_matrix(&basis, &pot).unwrap();
        for i in 0..12 {
            for j in 0..12 {
                if i != j {
                    assert!(hm.matrix.get(i, j).abs() < 1e-7);
                }
            }
            let diag = hm.matrix.get(i, i);
            // Five-point kinetic error grows like k⁶h⁴ with the mode number.
            assert!((diag / basis.basis_energies[i] - 1.0).abs() < 1e-8, "{i}: {diag}");
        }
    }

    #[test]
    fn centred_well_decouples_parities() {
        let basis = build_basis(0.6, 10, &unit_grid()).unwrap();
        let pot = ConfinedPotential::symmetric(1.0, 1.0).unwrap();
        let hm = hamiltonian_matrix(&basis, &pot).unwrap();
        let mut trace = 0.0;
        for i in 0..10 {
            trace += hm.matrix.get(i, i);
            for j in 0..10 {
                if basis.parities[i] != basis.parities[j] {
                    assert!(hm.matrix.get(i, j).abs() < 1e-8);
                }
            }
        }
        let exact: f64 = BoxedOscillator::new(1.0, 1.0).unwrap().eigenvalues(10, 1e-13).unwrap().iter().sum();
        assert!(trace >= exact - 1e-9);
    }

    #[test]
    fn centred_well_reproduces_exact_levels() {
        let pot = ConfinedPotential::symmetric(1.0, 1.0).unwrap();
        let config = VariationalConfig { size: 20, ..Default::default() };
        let spec = solve_acho(&pot, &unit_grid(), &config, 3).unwrap();
        let exact = BoxedOscillator::new(1.0, 1.0).unwrap().eigenvalues(3, 1e-13).unwrap();
        for k in 0..3 {
            assert!((spec.energies[k] - exact[k]).abs() < 1e-9);
            assert_eq!(spec.states[k].provenance, Provenance::Variational);
            assert!((spec.states[k].norm_squared() - 1.0).abs() < 1e-9);
        }
    }
}
