use crate::error::{Error, Result};

/// Map between the physical oscillator in `[-x_c, x_c]` and the reduced
/// problem in `[-1, 1]` with force constant `η = m k x_c⁴ / ħ²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingMap {
    eta: f64,
    length: f64,
    energy_scale: f64,
}

impl ScalingMap {
    pub fn new(k: f64, x_c: f64, mass: f64, hbar: f64) -> Result<Self> {
        for (name, v) in [("k", k), ("x_c", x_c), ("mass", mass), ("hbar", hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::domain(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self {
            eta: mass * k * x_c.powi(4) / (hbar * hbar),
            length: x_c,
            energy_scale: hbar * hbar / (mass * x_c * x_c),
        })
    }

    /// Atomic units, `m = ħ = 1`.
    pub fn atomic(k: f64, x_c: f64) -> Result<Self> {
        Self::new(k, x_c, 1.0, 1.0)
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn energy_scale(&self) -> f64 {
        self.energy_scale
    }

    pub fn to_physical_energy(&self, reduced: f64) -> f64 {
        reduced * self.energy_scale
    }

    pub fn to_reduced_energy(&self, physical: f64) -> f64 {
        physical / self.energy_scale
    }

    /// `ψ(x) = ψ'(x / x_c) / √x_c`, sample by sample.
    pub fn to_physical_wavefunction(&self, reduced: &[f64]) -> Vec<f64> {
        let s = self.length.sqrt().recip();
        reduced.iter().map(|v| v * s).collect()
    }

    pub fn to_reduced_wavefunction(&self, physical: &[f64]) -> Vec<f64> {
        let s = self.length.sqrt();
        physical.iter().map(|v| v * s).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn eta_is_k_times_xc_to_the_fourth() {
        assert_eq!(ScalingMap::atomic(1.0, 1.0).unwrap().eta(), 1.0);
        assert_eq!(ScalingMap::atomic(1.0, 2.0).unwrap().eta(), 16.0);
        assert!((ScalingMap::atomic(0.001, 1.0).unwrap().eta() - 0.001).abs() < 1e-18);
    }

    #[test]
    fn energy_scale_divides_by_xc_squared() {
        let unit = ScalingMap::atomic(1.0, 1.0).unwrap();
        assert_eq!(unit.to_physical_energy(1.2337), 1.2337);
        let two = ScalingMap::atomic(1.0, 2.0).unwrap();
        assert!((two.to_physical_energy(1.2337) - 0.308425).abs() < 1e-15);
        let e = std::f64::consts::PI.powi(2) / 8.0;
        assert!((two.to_reduced_energy(two.to_physical_energy(e)) - e).abs() < 1e-14 * e);
    }

    #[test]
    fn non_positive_inputs_rejected() {
        assert!(ScalingMap::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(ScalingMap::new(1.0, -1.0, 1.0, 1.0).is_err());
        assert!(ScalingMap::new(1.0, 1.0, 0.0, 1.0).is_err());
        assert!(ScalingMap::new(1.0, 1.0, 1.0, f64::NAN).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(x_c in 0.1f64..10.0, k in 0.01f64..100.0,
                                  e in 0.01f64..1e3, v in -5.0f64..5.0) {
            let map = ScalingMap::atomic(k, x_c).unwrap();
            let back = map.to_reduced_energy(map.to_physical_energy(e));
            prop_assert!((back - e).abs() <= 1e-14 * e);
            let psi = map.to_reduced_wavefunction(&map.to_physical_wavefunction(&[v]));
            prop_assert!((psi[0] - v).abs() <= 1e-14 * v.abs().max(1e-300));
        }
    }
}
