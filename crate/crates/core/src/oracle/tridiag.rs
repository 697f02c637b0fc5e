//! Real symmetric tridiagonal eigenvalues by Sturm-sequence bisection.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    /// `off[i]` couples rows i and i+1; its length must be `diag.len() - 1`.
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(
            off.len() + 1,
            diag.len().max(1),
            "off-diagonal length must be one less than the diagonal"
        );
        Self { diag, off }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    /// Number of eigenvalues strictly below `lambda` (negative pivots of the
    /// LDLᵀ factorization of T − λI).
    pub fn count_below(&self, lambda: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0_f64;
        for i in 0..self.diag.len() {
            let coupling = if i == 0 {
                0.0
            } else {
                self.off[i - 1] * self.off[i - 1]
            };
            q = if q == 0.0 {
                // Exact zero pivot: perturb by a relative epsilon.
                (self.diag[i] - lambda) - coupling / (f64::EPSILON * self.off[i - 1].abs().max(1.0))
            } else {
                (self.diag[i] - lambda) - coupling / q
            };
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `count` smallest eigenvalues in ascending order.
    pub fn lowest_eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        let n = self.dim();
        if count > n {
            return Err(Error::Eigensolver { level: n });
        }
        if let Some(i) = self
            .diag
            .iter()
            .chain(self.off.iter())
            .position(|v| !v.is_finite())
        {
            return Err(Error::Eigensolver {
                level: i.min(count.saturating_sub(1)),
            });
        }
        let (glo, ghi) = self.gershgorin();
        let pad = 1e-12 * glo.abs().max(ghi.abs()).max(1.0);
        let (glo, ghi) = (glo - pad, ghi + pad);
        let mut out: Vec<f64> = Vec::with_capacity(count);
        for k in 0..count {
            // Invariant: count_below(lo) <= k < count_below(hi).
            let mut lo = out.last().copied().unwrap_or(glo);
            let mut hi = ghi;
            let mut converged = false;
            for _ in 0..300 {
                let mid = 0.5 * (lo + hi);
                if hi - lo <= 2.0 * f64::EPSILON * mid.abs().max(f64::MIN_POSITIVE) {
                    converged = true;
                    break;
                }
                if self.count_below(mid) <= k {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            if !converged {
                return Err(Error::Eigensolver { level: k });
            }
            out.push(0.5 * (lo + hi));
        }
        Ok(out)
    }

    /// Unit eigenvector for an (accurately known) eigenvalue by inverse iteration.
    pub fn eigenvector(&self, lambda: f64) -> Result<Vec<f64>> {
        let n = self.dim();
        let scale = lambda.abs().max(1.0);
        let shift = lambda + 1e-10 * scale;
        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        // Break the symmetry of the start vector so odd states are reachable.
        for (i, x) in v.iter_mut().enumerate() {
            *x *= 1.0 + 0.1 * ((i as f64) * 0.618_033_988_75).fract();
        }
        for _ in 0..4 {
            v = self.solve_shifted(shift, &v)?;
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if !(norm > 0.0 && norm.is_finite()) {
                return Err(Error::Eigensolver { level: 0 });
            }
            v.iter_mut().for_each(|x| *x /= norm);
        }
        Ok(v)
    }

    /// Solves (T − σI) x = b with the Thomas algorithm.
    fn solve_shifted(&self, sigma: f64, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim();
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let tiny = f64::EPSILON * self.gershgorin().1.abs().max(1.0);
        let mut denom = self.diag[0] - sigma;
        if denom.abs() < tiny {
            denom = tiny;
        }
        if n > 1 {
            c[0] = self.off[0] / denom;
        }
        d[0] = b[0] / denom;
        for i in 1..n {
            let mut m = (self.diag[i] - sigma) - self.off[i - 1] * c[i - 1];
            if m.abs() < tiny {
                m = tiny;
            }
            if i + 1 < n {
                c[i] = self.off[i] / m;
            }
            d[i] = (b[i] - self.off[i - 1] * d[i - 1]) / m;
        }
        for i in (0..n.saturating_sub(1)).rev() {
            d[i] -= c[i] * d[i + 1];
        }
        Ok(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn two_by_two() {
        let t = SymTridiagonal::new(vec![1.0, 3.0], vec![-1.0]);
        assert_eq!(t.count_below(0.0), 0);
        assert_eq!(t.count_below(1.0), 1);
        assert_eq!(t.count_below(4.0), 2);
        let ev = t.lowest_eigenvalues(2).unwrap();
        assert_relative_eq!(ev[0], 2.0 - 2f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(ev[1], 2.0 + 2f64.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn discrete_laplacian_spectrum() {
        // 2 on the diagonal, −1 off: eigenvalues 2 − 2cos(kπ/(n+1))
        let n = 200;
        let t = SymTridiagonal::new(vec![2.0; n], vec![-1.0; n - 1]);
        let ev = t.lowest_eigenvalues(10).unwrap();
        for (k, v) in ev.iter().enumerate() {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * PI / (n as f64 + 1.0)).cos();
            assert!((v - want).abs() < 1e-13, "k={k}");
        }
    }

    #[test]
    fn degenerate_diagonal() {
        let t = SymTridiagonal::new(vec![1.0, 1.0, 5.0], vec![0.0, 0.0]);
        let ev = t.lowest_eigenvalues(3).unwrap();
        assert_relative_eq!(ev[0], 1.0, max_relative = 1e-14);
        assert_relative_eq!(ev[1], 1.0, max_relative = 1e-14);
        assert_relative_eq!(ev[2], 5.0, max_relative = 1e-14);
    }

    #[test]
    fn eigenvector_residual() {
        let n = 50;
        let diag: Vec<f64> = (0..n).map(|i| (i as f64 - 25.0).powi(2) * 0.01).collect();
        let t = SymTridiagonal::new(diag.clone(), vec![-0.5; n - 1]);
        let ev = t.lowest_eigenvalues(3).unwrap();
        for &lambda in &ev {
            let v = t.eigenvector(lambda).unwrap();
            let mut resid = 0.0_f64;
            for i in 0..n {
                let mut tv = diag[i] * v[i];
                if i > 0 {
                    tv -= 0.5 * v[i - 1];
                }
                if i + 1 < n {
                    tv -= 0.5 * v[i + 1];
                }
                resid = resid.max((tv - lambda * v[i]).abs());
            }
            assert!(resid < 1e-10);
        }
    }

    #[test]
    fn rejects_non_finite_entries() {
        let t = SymTridiagonal::new(vec![1.0, f64::NAN], vec![0.5]);
        assert!(matches!(
            t.lowest_eigenvalues(1),
            Err(Error::Eigensolver { .. })
        ));
        let t = SymTridiagonal::new(vec![1.0, 2.0], vec![0.5]);
        assert!(t.lowest_eigenvalues(3).is_err());
    }
}
