//! Properties of propagated ladders that hold independently of any table.

use cho_core::exact::{BoxedOscillator, ROOT_TOL};
use cho_core::itp::solve_spectrum;
use cho_core::{ConfinedPotential, ScalingMap, SolverConfig};

fn ladder(pot: &ConfinedPotential, points: usize, n_max: usize) -> Vec<cho_core::Eigenpair> {
    let grid = pot.grid(points).unwrap();
    solve_spectrum(pot, &grid, n_max, &SolverConfig::default()).unwrap()
}

#[test]
fn ladder_is_orthonormal_with_counted_nodes() {
    let pot = ConfinedPotential::symmetric(1.0, 1.5).unwrap();
    let states = ladder(&pot, 1001, 4);
    for (i, a) in states.iter().enumerate() {
        assert_eq!(a.interior_sign_changes(), i);
        for (j, b) in states.iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            assert!((a.overlap(b) - want).abs() < 1e-8, "<{i}|{j}> = {}", a.overlap(b));
        }
    }
    assert!(states.windows(2).all(|w| w[0].energy < w[1].energy));
}

#[test]
fn halving_the_spacing_shrinks_the_error_at_least_eightfold() {
    let pot = ConfinedPotential::symmetric(1.0, 2.0).unwrap();
    let exact = BoxedOscillator::new(1.0, 2.0).unwrap().eigenvalues(2, ROOT_TOL).unwrap();
    let coarse = ladder(&pot, 101, 1);
    let fine = ladder(&pot, 201, 1);
    for n in 0..2 {
        let ratio = (coarse[n].energy - exact[n]).abs() / (fine[n].energy - exact[n]).abs();
        assert!(ratio >= 8.0, "n={n}: ratio {ratio}");
    }
}

#[test]
fn mirrored_well_gives_mirrored_states() {
    let pot = ConfinedPotential::new(1.0, 0.4, -1.0, 1.0).unwrap();
    let right = ladder(&pot, 801, 2);
    let left = ladder(&pot.mirrored(), 801, 2);
    for (a, b) in right.iter().zip(&left) {
        assert!((a.energy - b.energy).abs() < 1e-9);
        let flipped: Vec<f64> = b.values.iter().rev().copied().collect();
        let dot: f64 = a.values.iter().zip(&flipped).map(|(u, v)| u * v).sum::<f64>() * a.grid.spacing();
        assert!((dot.abs() - 1.0).abs() < 1e-7, "overlap {dot}");
    }
}

#[test]
fn physical_and_reduced_problems_share_levels() {
    let (k, x_c) = (3.0, 1.3);
    let map = ScalingMap::atomic(k, x_c).unwrap();
    let physical = ladder(&ConfinedPotential::symmetric(k, x_c).unwrap(), 1201, 2);
    let reduced = ladder(&ConfinedPotential::symmetric(map.eta(), 1.0).unwrap(), 1201, 2);
    for (p, r) in physical.iter().zip(&reduced) {
        let e = map.to_physical_energy(r.energy);
        assert!(((p.energy - e) / e).abs() < 1e-9, "{} vs {e}", p.energy);
        let back = map.to_reduced_wavefunction(&p.values);
        let dev = back.iter().zip(&r.values).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        assert!(dev < 1e-6, "wavefunction deviation {dev}");
    }
}
