//! Independent reference computations in exact rational arithmetic.
//!
//! Both oracles trade speed for certainty: inputs are converted to exact
//! rationals, every intermediate is exact, and the only approximation is the
//! stopping rule (series truncation or bisection width).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("representable value")
}

/// `₁F₁(a; b; z)` by exact summation of the Maclaurin series, stopped once
/// past the largest term and the next term is below `2⁻¹²⁰` of the sum.
pub fn kummer_series(a: f64, b: f64, z: f64) -> f64 {
    assert!(b > 0.0, "oracle requires b > 0");
    let (a, b, z) = (rational(a), rational(b), rational(z));
    let threshold = BigRational::new(BigInt::one(), BigInt::one() << 120);
    let past_peak = z.abs().ceil() + a.abs().ceil() + BigRational::from_integer(2.into());
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut k = BigRational::zero();
    loop {
        term = term * (&a + &k) * &z / ((&b + &k) * (&k + BigRational::one()));
        sum += &term;
        k += BigRational::one();
        if term.is_zero() || (k > past_peak && term.abs() <= &threshold * sum.abs()) {
            break;
        }
    }
    to_f64(&sum)
}

/// Polynomial with exact coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn trim(mut self) -> Self {
        while self.0.len() > 1 && self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn derivative(&self) -> Self {
        let c = self.0.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect::<Vec<_>>();
        Poly(if c.is_empty() { vec![BigRational::zero()] } else { c }).trim()
    }

    fn rem(&self, divisor: &Poly) -> Poly {
        let mut r = self.0.clone();
        let d = divisor.degree();
        let lead = divisor.0[d].clone();
        while r.len() > d && !(r.len() == 1 && r[0].is_zero()) {
            let shift = r.len() - 1 - d;
            let q = r.last().expect("non-empty") / &lead;
            for (i, c) in divisor.0.iter().enumerate() {
                r[shift + i] -= &q * c;
            }
            r.pop();
            if r.is_empty() {
                r.push(BigRational::zero());
            }
        }
        Poly(r).trim()
    }
}

/// `det(λI - A)` by Faddeev–LeVerrier.
fn characteristic_polynomial(a: &[Vec<BigRational>]) -> Poly {
    let n = a.len();
    let matmul = |x: &[Vec<BigRational>], y: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |s, k| s + &x[i][k] * &y[k][j])).collect())
            .collect()
    };
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let am = matmul(a, &m);
        let trace = (0..n).fold(BigRational::zero(), |s, i| s + &am[i][i]);
        coeffs[n - k] = -trace / BigRational::from_integer((k as i64).into());
        m = am;
    }
    Poly(coeffs)
}

fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let len = seq.len();
        let r = seq[len - 2].rem(&seq[len - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(Poly(r.0.into_iter().map(|c| -c).collect()));
    }
    seq
}

fn sign_changes(seq: &[Poly], x: &BigRational) -> usize {
    let signs: Vec<bool> = seq.iter().map(|p| p.eval(x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Eigenvalues of a symmetric matrix (ascending), as the roots of its exact
/// characteristic polynomial isolated by Sturm counts and bisected to
/// `width`. Sturm counts see distinct roots only, so the spectrum must be
/// simple.
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>], width: f64) -> Vec<f64> {
    let a: Vec<Vec<BigRational>> = matrix.iter().map(|r| r.iter().map(|&v| rational(v)).collect()).collect();
    let p = characteristic_polynomial(&a);
    let seq = sturm_sequence(&p);
    assert_eq!(seq.last().map(Poly::degree), Some(0), "oracle requires distinct eigenvalues");
    // Gershgorin radius bounds every eigenvalue.
    let bound = matrix.iter().map(|r| r.iter().map(|v| v.abs()).sum::<f64>()).fold(0.0f64, f64::max) + 1.0;
    let width = rational(width);
    let mut roots = Vec::new();
    let mut stack = vec![(rational(-bound), rational(bound))];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        if count == 0 {
            continue;
        }
        if &hi - &lo <= width {
            let mid = to_f64(&((&lo + &hi) / BigRational::from_integer(2.into())));
            roots.push(mid);
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots.sort_by(f64::total_cmp);
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_closed_forms() {
        for z in [-3.0, -0.5, 0.0, 0.7, 4.0, 20.0] {
            let e = kummer_series(1.3, 1.3, z);
            assert!((e - f64::exp(z)).abs() <= 1e-15 * f64::exp(z), "z={z}");
        }
        let z: f64 = 2.5;
        assert!((kummer_series(1.0, 2.0, z) - z.exp_m1() / z).abs() < 1e-15);
        // Terminating series: a Laguerre polynomial, L_2^{(-1/2)}(z) up to scale.
        let z: f64 = 0.8;
        assert!((kummer_series(-2.0, 0.5, z) - (1.0 - 4.0 * z + 4.0 * z * z / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn characteristic_polynomial_of_small_matrix() {
        let a = vec![vec![rational(2.0), rational(1.0)], vec![rational(1.0), rational(3.0)]];
        let p = characteristic_polynomial(&a);
        assert_eq!(p.0, vec![rational(5.0), rational(-5.0), rational(1.0)]);
    }

    #[test]
    fn eigenvalues_of_known_matrices() {
        let ev = symmetric_eigenvalues(&[vec![2.0, 1.0], vec![1.0, 2.0]], 1e-14);
        assert!((ev[0] - 1.0).abs() < 1e-13 && (ev[1] - 3.0).abs() < 1e-13);
        // Path-graph Laplacian: 2 - 2cos(kπ/(n+1)).
        let n: usize = 6;
        let m: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 2.0 } else if i.abs_diff(j) == 1 { -1.0 } else { 0.0 }).collect())
            .collect();
        let ev = symmetric_eigenvalues(&m, 1e-14);
        for (k, v) in ev.iter().enumerate() {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((v - want).abs() < 1e-12, "k={k}: {v} vs {want}");
        }
    }

    #[test]
    #[should_panic(expected = "distinct eigenvalues")]
    fn repeated_eigenvalues_are_rejected() {
        symmetric_eigenvalues(&[vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, -2.0]], 1e-12);
    }
}
