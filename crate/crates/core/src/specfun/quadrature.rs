//! Gauss–Legendre quadrature.
//!
//! Nodes are the roots of P_N found by Newton iteration from the Tricomi
//! initial guess; weights are 2 / ((1 − x²) P_N'(x)²). Only the positive half
//! is computed and then mirrored, so nodes and weights are exactly symmetric
//! and odd integrands over symmetric intervals cancel pairwise.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{domain, Error, Result};

pub const DEFAULT_QUADRATURE_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// P_N(x) and P_N'(x).
fn legendre_with_derivative(order: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=order {
        let k = k as f64;
        let next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
        p_prev = p;
        p = next;
    }
    let n = order as f64;
    let dp = n * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

impl QuadratureRule {
    /// Builds the N-point Gauss–Legendre rule on [−1, 1].
    pub fn gauss_legendre(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(domain("order", 0.0, "order >= 1"));
        }
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        if n == 1 {
            weights[0] = 2.0;
            return Ok(Self {
                order,
                nodes,
                weights,
            });
        }
        let nf = n as f64;
        for i in 0..n / 2 {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs().max(1e-3) {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d.is_finite() {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[n - 1 - i] = x;
            nodes[i] = -x;
            weights[n - 1 - i] = w;
            weights[i] = w;
        }
        if n % 2 == 1 {
            let (_, d) = legendre_with_derivative(n, 0.0);
            nodes[n / 2] = 0.0;
            weights[n / 2] = 2.0 / (d * d);
        }
        Ok(Self {
            order,
            nodes,
            weights,
        })
    }

    /// Shared, lazily built rule of the given order.
    pub fn cached(order: usize) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<QuadratureRule>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(rule) = cache.lock().expect("quadrature cache poisoned").get(&order) {
            return Ok(Arc::clone(rule));
        }
        let rule = Arc::new(Self::gauss_legendre(order)?);
        cache
            .lock()
            .expect("quadrature cache poisoned")
            .entry(order)
            .or_insert_with(|| Arc::clone(&rule));
        Ok(rule)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Σ wᵢ f(xᵢ) and Σ wᵢ |f(xᵢ)| over [a, b].
    fn apply<F>(&self, f: &mut F, a: f64, b: f64) -> Result<(f64, f64)>
    where
        F: FnMut(f64) -> f64,
    {
        if !(a < b) {
            return Err(Error::EmptyInterval { a, b });
        }
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut eval = |x: f64| -> Result<f64> {
            let v = f(x);
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFinite { at: x })
            }
        };
        let n = self.order;
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        for i in 0..n / 2 {
            let t = self.nodes[n - 1 - i];
            let w = self.weights[i];
            let lo = eval(mid - half * t)?;
            let hi = eval(mid + half * t)?;
            sum += w * (lo + hi);
            abs_sum += w * (lo.abs() + hi.abs());
        }
        if n % 2 == 1 {
            let v = eval(mid)?;
            sum += self.weights[n / 2] * v;
            abs_sum += self.weights[n / 2] * v.abs();
        }
        Ok((half * sum, half * abs_sum))
    }
}

/// Integrates `f` over [a, b] with a fixed rule.
pub fn integrate<F>(mut f: F, a: f64, b: f64, rule: &QuadratureRule) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    rule.apply(&mut f, a, b).map(|(v, _)| v)
}

/// Order-doubling refinement settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptiveQuadrature {
    pub start_order: usize,
    pub max_order: usize,
    /// Successive estimates must agree to `rel_tol · ∫|f|`.
    pub rel_tol: f64,
}

impl Default for AdaptiveQuadrature {
    fn default() -> Self {
        Self {
            start_order: DEFAULT_QUADRATURE_ORDER,
            max_order: 16_384,
            rel_tol: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    /// |I_{2N} − I_N| of the last doubling step.
    pub error: f64,
    pub order: usize,
}

/// Integrates `f` over [a, b], doubling the rule order until two successive
/// results agree within `rel_tol` relative to ∫|f|.
///
/// Scaling by ∫|f| rather than |∫f| lets integrals that cancel to zero (odd
/// integrands, orthogonal products) converge without an absolute floor.
pub fn integrate_adaptive<F>(mut f: F, a: f64, b: f64, cfg: &AdaptiveQuadrature) -> Result<Estimate>
where
    F: FnMut(f64) -> f64,
{
    if !(cfg.rel_tol > 0.0) {
        return Err(domain("rel_tol", cfg.rel_tol, "rel_tol > 0"));
    }
    let mut order = cfg.start_order.max(1);
    let (mut prev, _) = QuadratureRule::cached(order)?.apply(&mut f, a, b)?;
    loop {
        let next_order = order * 2;
        let (value, scale) = QuadratureRule::cached(next_order)?.apply(&mut f, a, b)?;
        let error = (value - prev).abs();
        let tolerance = cfg.rel_tol * scale;
        if error <= tolerance {
            return Ok(Estimate {
                value,
                error,
                order: next_order,
            });
        }
        if next_order * 2 > cfg.max_order {
            return Err(Error::NoConvergence {
                difference: error,
                tolerance,
                order: next_order,
            });
        }
        prev = value;
        order = next_order;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use statrs::function::gamma::ln_gamma;

    #[test]
    fn rule_structure() {
        for order in [1, 2, 3, 8, 33, 128, 1024] {
            let rule = QuadratureRule::gauss_legendre(order).unwrap();
            let nodes = rule.nodes();
            let weights = rule.weights();
            assert_eq!(nodes.len(), order);
            assert!(nodes.windows(2).all(|w| w[0] < w[1]));
            assert!(nodes.iter().all(|x| x.abs() < 1.0));
            assert!(weights.iter().all(|&w| w > 0.0));
            for i in 0..order {
                assert_eq!(nodes[i], -nodes[order - 1 - i]);
                assert_eq!(weights[i], weights[order - 1 - i]);
            }
            let total: f64 = weights.iter().sum();
            assert!((total - 2.0).abs() < 1e-14, "order {order}: {total}");
        }
    }

    #[test]
    fn exact_for_degree_2n_minus_1() {
        for order in [2usize, 5, 16, 64] {
            let rule = QuadratureRule::gauss_legendre(order).unwrap();
            for deg in 0..2 * order {
                let got = integrate(|x| x.powi(deg as i32), -1.0, 1.0, &rule).unwrap();
                let want = if deg % 2 == 1 {
                    0.0
                } else {
                    2.0 / (deg as f64 + 1.0)
                };
                assert!(
                    (got - want).abs() <= 1e-13 * want.max(1e-2),
                    "order {order} degree {deg}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn textbook_integrals() {
        let rule = QuadratureRule::gauss_legendre(64).unwrap();
        assert_relative_eq!(
            integrate(|x| x * x, -1.0, 1.0, &rule).unwrap(),
            2.0 / 3.0,
            max_relative = 1e-15
        );
        let s = integrate(f64::sin, 0.0, PI, &rule).unwrap();
        assert!((s - 2.0).abs() < 1e-12);
    }

    #[test]
    fn beta_function_identity() {
        // ∫ cos^{2α} u du over [−π/2, π/2] = √π Γ(α+½)/Γ(α+1)
        let alpha = 2.0;
        let rule = QuadratureRule::gauss_legendre(128).unwrap();
        let got = integrate(|u| u.cos().powf(2.0 * alpha), -PI / 2.0, PI / 2.0, &rule).unwrap();
        let want = PI.sqrt() * (ln_gamma(alpha + 0.5) - ln_gamma(alpha + 1.0)).exp();
        assert!((got - want).abs() < 1e-12);
    }

    #[test]
    fn doubling_is_converged_for_smooth_integrands() {
        let f = |x: f64| (3.0 * x).cos() * (-x * x).exp();
        let a = integrate(f, -2.0, 3.0, &QuadratureRule::gauss_legendre(64).unwrap()).unwrap();
        let b = integrate(f, -2.0, 3.0, &QuadratureRule::gauss_legendre(128).unwrap()).unwrap();
        assert!((a - b).abs() <= 1e-12);
    }

    #[test]
    fn adaptive_converges_and_reports_order() {
        let est = integrate_adaptive(
            |u: f64| u.cos().powf(2.5),
            -PI / 2.0,
            PI / 2.0,
            &AdaptiveQuadrature::default(),
        )
        .unwrap();
        let want = PI.sqrt() * (ln_gamma(1.75) - ln_gamma(2.25)).exp();
        assert!((est.value - want).abs() < 1e-12);
        assert!(est.order >= 2 * DEFAULT_QUADRATURE_ORDER);
    }

    #[test]
    fn adaptive_reports_non_convergence() {
        let cfg = AdaptiveQuadrature {
            start_order: 4,
            max_order: 16,
            rel_tol: 1e-15,
        };
        let err = integrate_adaptive(|x: f64| (40.0 * x).sin().abs(), 0.0, 1.0, &cfg).unwrap_err();
        assert!(matches!(err, Error::NoConvergence { .. }));
    }

    #[test]
    fn rejects_bad_intervals_and_values() {
        let rule = QuadratureRule::gauss_legendre(8).unwrap();
        assert!(matches!(
            integrate(|x| x, 1.0, 1.0, &rule),
            Err(Error::EmptyInterval { .. })
        ));
        assert!(matches!(
            integrate(|x| x, 2.0, 1.0, &rule),
            Err(Error::EmptyInterval { .. })
        ));
        assert!(matches!(
            integrate(
                |x| 1.0 / x,
                -1.0,
                1.0,
                &QuadratureRule::gauss_legendre(3).unwrap()
            ),
            Err(Error::NonFinite { .. })
        ));
        assert!(QuadratureRule::gauss_legendre(0).is_err());
    }

    #[test]
    fn odd_integrands_cancel_exactly_on_symmetric_intervals() {
        let rule = QuadratureRule::gauss_legendre(127).unwrap();
        let v = integrate(|x| x.powi(3) * (x * x).exp(), -1.0, 1.0, &rule).unwrap();
        assert_eq!(v, 0.0);
    }
}
