//! Gauss-Legendre quadrature with node caching and adaptive refinement by
//! node doubling.

use crate::error::{Error, Result};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// A Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on the Legendre recurrence; nodes accurate to ~1 ulp.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "Gauss-Legendre rule needs at least 2 nodes");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Legendre P_n(x) and derivative by Bonnet recurrence
                let mut p0 = 1.0;
                let mut p1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = nf * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() <= 1e-15 * x.abs().max(1e-3) {
                    // one more polish step, then stop
                    let mut q0 = 1.0;
                    let mut q1 = x;
                    for k in 2..=n {
                        let kf = k as f64;
                        let q2 = ((2.0 * kf - 1.0) * x * q1 - (kf - 1.0) * q0) / kf;
                        q0 = q1;
                        q1 = q2;
                    }
                    dp = nf * (x * q1 - q0) / (x * x - 1.0);
                    x -= q1 / dp;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped to [a, b].
    pub fn scaled<'a>(&'a self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + 'a {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, w * half))
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        self.scaled(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

static RULE_CACHE: Lazy<Mutex<HashMap<usize, Arc<GaussLegendre>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Shared, lazily built rule of the given order.
pub fn rule(n: usize) -> Arc<GaussLegendre> {
    let mut cache = RULE_CACHE.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| Arc::new(GaussLegendre::new(n)))
        .clone()
}

/// Adaptive refinement policy: integrate with `base_nodes`, double until the
/// relative change drops below `rel_tol`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct QuadConfig {
    pub base_nodes: usize,
    pub rel_tol: f64,
    pub max_doublings: u32,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig { base_nodes: 64, rel_tol: 1e-10, max_doublings: 6 }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if self.base_nodes < 2 {
            return Err(Error::invalid("quadrature node count must be >= 2"));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::invalid("quadrature rel_tol must be positive and finite"));
        }
        Ok(())
    }
}

/// Adaptive Gauss-Legendre for a vector-valued integrand. Convergence is
/// required component-wise: |I_2n - I_n| <= rel_tol * (1 + |I_2n|).
pub fn integrate_multi<const N: usize>(
    cfg: &QuadConfig,
    a: f64,
    b: f64,
    f: impl Fn(f64) -> [f64; N],
) -> Result<[f64; N]> {
    cfg.validate()?;
    if a == b {
        return Ok([0.0; N]);
    }
    let eval = |n: usize| -> [f64; N] {
        let r = rule(n);
        let mut acc = [0.0; N];
        for (x, w) in r.scaled(a, b) {
            let v = f(x);
            for i in 0..N {
                acc[i] += w * v[i];
            }
        }
        acc
    };
    let mut n = cfg.base_nodes;
    let mut prev = eval(n);
    for _ in 0..cfg.max_doublings {
        n *= 2;
        let cur = eval(n);
        let converged = (0..N).all(|i| (cur[i] - prev[i]).abs() <= cfg.rel_tol * (1.0 + cur[i].abs()));
        if converged {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Quadrature(format!(
        "no convergence on [{a}, {b}] after reaching {n} nodes (rel_tol {})",
        cfg.rel_tol
    )))
}

/// Scalar convenience wrapper around [`integrate_multi`].
pub fn integrate(cfg: &QuadConfig, a: f64, b: f64, f: impl Fn(f64) -> f64) -> Result<f64> {
    integrate_multi(cfg, a, b, |x| [f(x)]).map(|v| v[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_order_nodes_match_references() {
        // n = 5 classical values
        let r = GaussLegendre::new(5);
        assert_relative_eq!(r.nodes[0], -0.906179845938664, max_relative = 1e-14);
        assert_relative_eq!(r.nodes[2], 0.0, epsilon = 1e-15);
        assert_relative_eq!(r.weights[2], 0.5688888888888889, max_relative = 1e-14);
    }

    #[test]
    fn integrates_polynomials_exactly() {
        let r = GaussLegendre::new(8);
        // degree 15 polynomial is exact for an 8-point rule
        let val = r.integrate(-1.0, 3.0, |x| x.powi(15) - 2.0 * x.powi(7) + x);
        let exact = (3.0f64.powi(16) - 1.0) / 16.0 - 2.0 * (3.0f64.powi(8) - 1.0) / 8.0
            + (9.0 - 1.0) / 2.0;
        assert_relative_eq!(val, exact, max_relative = 1e-13);
    }

    #[test]
    fn adaptive_handles_smooth_exponential() {
        let cfg = QuadConfig::default();
        let v = integrate(&cfg, 0.0, 10.0, |x| (-0.3 * x).exp()).unwrap();
        assert_relative_eq!(v, (1.0 - (-3.0f64).exp()) / 0.3, max_relative = 1e-12);
    }

    #[test]
    fn adaptive_reports_non_convergence() {
        let cfg = QuadConfig { base_nodes: 2, rel_tol: 1e-15, max_doublings: 1 };
        let res = integrate(&cfg, 0.0, 1.0, |x| (x - 0.312).abs().sqrt());
        assert!(matches!(res, Err(Error::Quadrature(_))));
    }

    #[test]
    fn rejects_degenerate_config() {
        let cfg = QuadConfig { base_nodes: 1, ..QuadConfig::default() };
        assert!(integrate(&cfg, 0.0, 1.0, |x| x).is_err());
    }
}
