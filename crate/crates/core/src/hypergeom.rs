//! Kummer's confluent hypergeometric function `₁F₁(a; b; z)`.

use crate::error::{Error, Result};

/// Largest `|z|` accepted by [`kummer_1f1`].
pub const MAX_ARGUMENT: f64 = 50.0;

const MAX_TERMS: usize = 10_000;

/// Maclaurin series `Σ (a)_k z^k / ((b)_k k!)` with Neumaier-compensated
/// summation, stopped once three consecutive terms fall below `1e-17` of the
/// running sum.
///
/// Accuracy is relative to the largest term, so for strongly oscillatory
/// parameters (large negative `a` with positive `z`, or negative `z`) the
/// result loses roughly `log10(max term / |sum|)` digits.
pub fn kummer_1f1(a: f64, b: f64, z: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && z.is_finite()) {
        return Err(Error::domain(format!("non-finite 1F1 argument ({a}, {b}, {z})")));
    }
    if b <= 0.0 && b.fract() == 0.0 {
        return Err(Error::domain(format!("1F1 undefined for b = {b}")));
    }
    if z.abs() > MAX_ARGUMENT {
        return Err(Error::domain(format!("|z| = {} exceeds {MAX_ARGUMENT}", z.abs())));
    }
    let mut sum = 1.0f64;
    let mut carry = 0.0f64;
    let mut term = 1.0f64;
    let mut quiet = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * z / ((b + kf) * (kf + 1.0));
        let t = sum + term;
        carry += if sum.abs() >= term.abs() {
            (sum - t) + term
        } else {
            (term - t) + sum
        };
        sum = t;
        if term.abs() <= 1e-17 * (sum + carry).abs() {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    Ok(sum + carry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_argument_is_one() {
        for (a, b) in [(0.3, 0.5), (-7.2, 1.5), (12.0, 3.25)] {
            assert_eq!(kummer_1f1(a, b, 0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn exponential_identity() {
        let v = kummer_1f1(1.0, 1.0, 1.0).unwrap();
        assert!((v - std::f64::consts::E).abs() < 1e-12);
        let v = kummer_1f1(2.5, 2.5, -3.0).unwrap();
        assert!((v - (-3.0f64).exp()).abs() < 1e-13);
    }

    #[test]
    fn terminating_series_is_a_polynomial() {
        // 1F1(-2; 1/2; z) = 1 - 4z + 4z²/3
        let z = 1.7;
        let v = kummer_1f1(-2.0, 0.5, z).unwrap();
        assert!((v - (1.0 - 4.0 * z + 4.0 * z * z / 3.0)).abs() < 1e-13);
    }

    #[test]
    fn half_integer_case_against_rational_sum() {
        // 50 terms of the series for 1F1(-1/2; 1/2; 4) summed in exact
        // rational arithmetic, rounded to f64.
        let v = kummer_1f1(-0.5, 0.5, 4.0).unwrap();
        assert!((v - ORACLE_M_HALF_HALF_4).abs() < 1e-12 * ORACLE_M_HALF_HALF_4.abs());
    }

    /// Rational-arithmetic oracle value, frozen.
    const ORACLE_M_HALF_HALF_4: f64 = -11.212361028884683;

    #[test]
    fn domain_errors() {
        assert!(kummer_1f1(1.0, 0.0, 1.0).is_err());
        assert!(kummer_1f1(1.0, -3.0, 1.0).is_err());
        assert!(kummer_1f1(1.0, 0.5, 50.5).is_err());
        assert!(kummer_1f1(f64::NAN, 0.5, 1.0).is_err());
        assert!(kummer_1f1(1.0, -2.5, 1.0).is_ok());
    }

    proptest! {
        #[test]
        fn kummer_transformation(a in -3.0f64..3.0, b in 0.2f64..4.0, z in -6.0f64..6.0) {
            // 1F1(a; b; z) = e^z 1F1(b - a; b; -z)
            let lhs = kummer_1f1(a, b, z).unwrap();
            let rhs = z.exp() * kummer_1f1(b - a, b, -z).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + lhs.abs().max(z.exp())));
        }

        #[test]
        fn derivative_contiguity(a in -3.0f64..3.0, b in 0.2f64..4.0, z in 0.1f64..5.0) {
            // d/dz 1F1(a; b; z) = (a/b) 1F1(a+1; b+1; z)
            let step = 1e-5;
            let fd = (kummer_1f1(a, b, z + step).unwrap() - kummer_1f1(a, b, z - step).unwrap()) / (2.0 * step);
            let exact = a / b * kummer_1f1(a + 1.0, b + 1.0, z).unwrap();
            prop_assert!((fd - exact).abs() <= 1e-6 * (1.0 + exact.abs()));
        }
    }
}
