/// Gegenbauer polynomial C_n^α(x) by the three-term recurrence
///
/// n·C_n = 2x(n+α−1)·C_{n−1} − (n+2α−2)·C_{n−2},  C₀ = 1,  C₁ = 2αx.
///
/// The recurrence is stable for x in [−1, 1] and α > 0; arguments outside
/// that range are evaluated anyway but carry no accuracy guarantee.
pub fn gegenbauer(n: u32, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut curr = 2.0 * alpha * x;
    for k in 2..=n {
        let k = f64::from(k);
        let next = (2.0 * x * (k + alpha - 1.0) * curr - (k + 2.0 * alpha - 2.0) * prev) / k;
        prev = curr;
        curr = next;
    }
    curr
}

/// d/dx C_n^α(x) = 2α·C_{n−1}^{α+1}(x).
pub fn gegenbauer_derivative(n: u32, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    2.0 * alpha * gegenbauer(n - 1, alpha + 1.0, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use statrs::function::gamma::ln_gamma;

    #[test]
    fn low_orders() {
        assert_eq!(gegenbauer(0, 2.0, 0.5), 1.0);
        assert_eq!(gegenbauer(0, 7.3, -0.9), 1.0);
        assert_eq!(gegenbauer(1, 2.0, 0.5), 2.0);
        assert_relative_eq!(gegenbauer(2, 2.0, 0.5), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn parity() {
        for n in 0u32..12 {
            for &x in &[0.1, 0.37, 0.8, 1.0] {
                let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
                assert_eq!(gegenbauer(n, 1.7, -x), sign * gegenbauer(n, 1.7, x));
            }
        }
    }

    #[test]
    fn value_at_one_is_pochhammer_over_factorial() {
        // C_n^α(1) = (2α)_n / n!
        for n in 0..15u32 {
            let alpha = 1.3;
            let want: f64 = (0..n)
                .map(|j| (2.0 * alpha + f64::from(j)) / f64::from(j + 1))
                .product();
            assert_relative_eq!(gegenbauer(n, alpha, 1.0), want, max_relative = 1e-13);
        }
    }

    /// d^n/dx^n of (1−x²)^m, expanded with Leibniz on (1−x)^m (1+x)^m.
    fn nth_derivative_of_power(n: u32, m: f64, x: f64) -> f64 {
        let falling = |k: u32| -> f64 { (0..k).map(|j| m - f64::from(j)).product() };
        let binom = |k: u32| -> f64 {
            (0..k)
                .map(|j| f64::from(n - j) / f64::from(j + 1))
                .product()
        };
        (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                binom(k)
                    * sign
                    * falling(k)
                    * (1.0 - x).powf(m - f64::from(k))
                    * falling(n - k)
                    * (1.0 + x).powf(m - f64::from(n - k))
            })
            .sum()
    }

    /// Rodrigues representation of C_n^α.
    fn rodrigues(n: u32, alpha: f64, x: f64) -> f64 {
        let nf = f64::from(n);
        let ln_fact: f64 = (1..=n).map(|j| f64::from(j).ln()).sum();
        let ln_pref = 0.5 * std::f64::consts::PI.ln() + ln_gamma(2.0 * alpha + nf)
            - ln_fact
            - (2.0 * alpha + nf - 1.0) * std::f64::consts::LN_2
            - ln_gamma(alpha)
            - ln_gamma(alpha + nf + 0.5);
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * ln_pref.exp()
            * (1.0 - x * x).powf(0.5 - alpha)
            * nth_derivative_of_power(n, nf + alpha - 0.5, x)
    }

    #[test]
    fn recurrence_matches_rodrigues() {
        for n in 0..=5 {
            for &alpha in &[0.7, 1.0, 1.618, 2.5, 6.0, 12.25] {
                for &x in &[-0.93, -0.5, -0.1, 0.0, 0.2, 0.61, 0.97] {
                    let want = rodrigues(n, alpha, x);
                    let got = gegenbauer(n, alpha, x);
                    let scale = want.abs().max(1e-3 * gegenbauer(n, alpha, 1.0));
                    assert!(
                        (got - want).abs() <= 1e-9 * scale,
                        "n={n} alpha={alpha} x={x}: {got} vs {want}"
                    );
                }
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let h = 1e-6;
        for n in 1..8 {
            for &x in &[-0.7, 0.05, 0.44] {
                let fd = (gegenbauer(n, 1.4, x + h) - gegenbauer(n, 1.4, x - h)) / (2.0 * h);
                assert_relative_eq!(gegenbauer_derivative(n, 1.4, x), fd, max_relative = 1e-7);
            }
        }
    }
}
