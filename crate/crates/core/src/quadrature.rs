//! Uniform-mesh quadrature.

/// Composite Simpson weights for `n` equally spaced samples.
///
/// An odd number of intervals is handled by closing the last three with the
/// 3/8 rule.
pub fn simpson_weights(n: usize, h: f64) -> Vec<f64> {
    let mut w = vec![0.0; n];
    match n {
        0 | 1 => return w,
        2 => {
            w[0] = 0.5 * h;
            w[1] = 0.5 * h;
            return w;
        }
        _ => {}
    }
    // Points covered by the plain Simpson part (odd count).
    let m = if n % 2 == 1 { n } else { n - 3 };
    if m >= 3 {
        w[0] += h / 3.0;
        w[m - 1] += h / 3.0;
        for (i, wi) in w.iter_mut().enumerate().take(m - 1).skip(1) {
            *wi += if i % 2 == 1 { 4.0 * h / 3.0 } else { 2.0 * h / 3.0 };
        }
    }
    if m < n {
        let s = m - 1;
        let c = 3.0 * h / 8.0;
        w[s] += c;
        w[s + 1] += 3.0 * c;
        w[s + 2] += 3.0 * c;
        w[s + 3] += c;
    }
    w
}

pub fn simpson(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    if n < 3 {
        return match n {
            2 => 0.5 * h * (values[0] + values[1]),
            _ => 0.0,
        };
    }
    let m = if n % 2 == 1 { n } else { n - 3 };
    let mut total = 0.0;
    if m >= 3 {
        let mut odd = 0.0;
        let mut even = 0.0;
        for i in (1..m - 1).step_by(2) {
            odd += values[i];
        }
        for i in (2..m - 1).step_by(2) {
            even += values[i];
        }
        total = h / 3.0 * (values[0] + values[m - 1] + 4.0 * odd + 2.0 * even);
    }
    if m < n {
        let s = m - 1;
        total += 3.0 * h / 8.0 * (values[s] + 3.0 * values[s + 1] + 3.0 * values[s + 2] + values[s + 3]);
    }
    total
}

/// `∫ f g` by Simpson's rule.
pub fn simpson_dot(f: &[f64], g: &[f64], h: f64) -> f64 {
    debug_assert_eq!(f.len(), g.len());
    let prod: Vec<f64> = f.iter().zip(g).map(|(a, b)| a * b).collect();
    simpson(&prod, h)
}

/// Weighted sum with precomputed weights.
pub fn weighted_dot(weights: &[f64], f: &[f64], g: &[f64]) -> f64 {
    weights.iter().zip(f).zip(g).map(|((w, a), b)| w * a * b).sum()
}

pub fn trapezoid(values: &[f64], h: f64) -> f64 {
    match values.len() {
        0 | 1 => 0.0,
        n => h * (values[1..n - 1].iter().sum::<f64>() + 0.5 * (values[0] + values[n - 1])),
    }
}

/// `∫_a^b` of the piecewise-cubic interpolant of samples `values[j]` at
/// `x0 + j h`, where each interval uses the four nearest samples. Limits are
/// clamped to the sampled range. Needs at least four samples.
pub fn cubic_integral(values: &[f64], x0: f64, h: f64, a: f64, b: f64) -> f64 {
    let n = values.len();
    assert!(n >= 4, "cubic integration needs four samples");
    let end = x0 + (n - 1) as f64 * h;
    let (lo, hi) = (a.clamp(x0, end), b.clamp(x0, end));
    if hi <= lo {
        return 0.0;
    }
    let locate = |x: f64| -> (usize, f64) {
        let t = (x - x0) / h;
        let j = (t.floor().max(0.0) as usize).min(n - 2);
        (j, (t - j as f64).clamp(0.0, 1.0))
    };
    let (ja, ta) = locate(lo);
    let (jb, tb) = locate(hi);
    let mut total = 0.0;
    for j in ja..jb {
        total += interval_integral(values, h, j, 1.0);
    }
    total + interval_integral(values, h, jb, tb) - interval_integral(values, h, ja, ta)
}

/// `∫_{x_j}^{x_j + θh}` of the local cubic through four samples around `j`.
fn interval_integral(values: &[f64], h: f64, j: usize, theta: f64) -> f64 {
    if theta == 0.0 {
        return 0.0;
    }
    let n = values.len();
    let start = j.saturating_sub(1).min(n - 4);
    let nodes: [f64; 4] = std::array::from_fn(|k| (start + k) as f64 - j as f64);
    let cubic = |t: f64| -> f64 {
        (0..4)
            .map(|k| {
                let basis: f64 = (0..4)
                    .filter(|&l| l != k)
                    .map(|l| (t - nodes[l]) / (nodes[k] - nodes[l]))
                    .product();
                values[start + k] * basis
            })
            .sum()
    };
    // Three-point Gauss-Legendre is exact for the cubic.
    let r = (0.6f64).sqrt();
    let half = 0.5 * theta;
    let sum = 5.0 * cubic(half * (1.0 - r)) + 8.0 * cubic(half) + 5.0 * cubic(half * (1.0 + r));
    h * half * sum / 9.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample(n: usize, a: f64, b: f64, f: impl Fn(f64) -> f64) -> (Vec<f64>, f64) {
        let h = (b - a) / (n - 1) as f64;
        ((0..n).map(|j| f(a + j as f64 * h)).collect(), h)
    }

    #[test]
    fn exact_for_cubics_with_either_parity() {
        for n in [3, 4, 5, 8, 11, 12] {
            let (v, h) = sample(n, -1.0, 2.0, |x| 2.0 * x * x * x - x * x + 3.0);
            let exact = 0.5 * (16.0 - 1.0) - (8.0 + 1.0) / 3.0 + 9.0;
            assert!((simpson(&v, h) - exact).abs() < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn weights_match_direct_sum() {
        for n in [2, 3, 4, 7, 10, 101, 2000] {
            let (v, h) = sample(n, 0.0, 3.0, |x| (x * 1.3).sin() + x * x);
            let w = simpson_weights(n, h);
            let s: f64 = w.iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!((s - simpson(&v, h)).abs() < 1e-12);
            let total: f64 = w.iter().sum();
            assert!((total - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn fourth_order_convergence() {
        let f = |x: f64| (2.0 * x).cos();
        let exact = (2.0f64).sin() / 2.0;
        let (v1, h1) = sample(21, 0.0, 1.0, f);
        let (v2, h2) = sample(41, 0.0, 1.0, f);
        let e1 = (simpson(&v1, h1) - exact).abs();
        let e2 = (simpson(&v2, h2) - exact).abs();
        assert!(e1 / e2 > 14.0);
    }

    #[test]
    fn cubic_integral_is_exact_for_cubics() {
        let (v, h) = sample(11, 0.0, 1.0, |x| x * x * x - 2.0 * x + 0.5);
        let antider = |x: f64| x.powi(4) / 4.0 - x * x + 0.5 * x;
        for (a, b) in [(0.0f64, 1.0f64), (0.13, 0.77), (0.05, 0.06), (-1.0, 0.4), (0.9, 3.0)] {
            let want = antider(b.clamp(0.0, 1.0)) - antider(a.clamp(0.0, 1.0));
            assert!((cubic_integral(&v, 0.0, h, a, b) - want).abs() < 1e-13, "({a}, {b})");
        }
        assert_eq!(cubic_integral(&v, 0.0, h, 0.6, 0.2), 0.0);
    }

    #[test]
    fn cubic_integral_converges_at_fourth_order() {
        let f = |x: f64| (3.0 * x).sin();
        let want = ((3.0 * 0.137f64).cos() - (3.0 * 0.861f64).cos()) / 3.0;
        let err = |n: usize| {
            let (v, h) = sample(n, 0.0, 1.0, f);
            (cubic_integral(&v, 0.0, h, 0.137, 0.861) - want).abs()
        };
        assert!(err(41) / err(81) > 14.0);
    }

    #[test]
    fn trapezoid_of_constant() {
        assert!((trapezoid(&[2.0; 11], 0.1) - 2.0).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn linear_in_the_integrand(n in 3usize..200, c in -3.0f64..3.0) {
            let (v, h) = sample(n, 0.0, 1.0, |x| x.exp());
            let scaled: Vec<f64> = v.iter().map(|x| c * x).collect();
            prop_assert!((simpson(&scaled, h) - c * simpson(&v, h)).abs() < 1e-12);
        }
    }
}
