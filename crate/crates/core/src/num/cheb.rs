//! Chebyshev interpolation on an interval. Used as a validated fast path for
//! the smooth age/horizon integral kernels, which are entire functions of
//! the short rate and converge spectrally.

/// Chebyshev series on [lo, hi], evaluated by Clenshaw recurrence.
#[derive(Debug, Clone)]
pub struct Chebyshev {
    lo: f64,
    hi: f64,
    coeffs: Vec<f64>,
}

impl Chebyshev {
    /// Fit `n` first-kind Chebyshev coefficients by cosine transform over
    /// the Chebyshev-Gauss points.
    pub fn fit(lo: f64, hi: f64, n: usize, f: impl Fn(f64) -> f64) -> Self {
        let fits = fit_multi::<1>(lo, hi, n, |x| [f(x)]);
        fits.into_iter().next().unwrap()
    }

    pub fn eval(&self, x: f64) -> f64 {
        let t = (2.0 * x - self.lo - self.hi) / (self.hi - self.lo);
        let mut b1 = 0.0;
        let mut b2 = 0.0;
        for &c in self.coeffs.iter().skip(1).rev() {
            let b0 = 2.0 * t * b1 - b2 + c;
            b2 = b1;
            b1 = b0;
        }
        t * b1 - b2 + self.coeffs[0]
    }

    pub fn range(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    /// Largest trailing coefficient magnitude, a cheap truncation-error proxy.
    pub fn tail_magnitude(&self) -> f64 {
        let n = self.coeffs.len();
        self.coeffs[n.saturating_sub(2)..]
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs()))
    }
}

/// Fit `N` functions sharing the same nodes with one sweep of evaluations.
pub fn fit_multi<const N: usize>(
    lo: f64,
    hi: f64,
    n: usize,
    f: impl Fn(f64) -> [f64; N],
) -> [Chebyshev; N] {
    assert!(n >= 2 && hi > lo);
    let nf = n as f64;
    let mut values = vec![[0.0; N]; n];
    for (j, v) in values.iter_mut().enumerate() {
        let theta = std::f64::consts::PI * (j as f64 + 0.5) / nf;
        let t = theta.cos();
        let x = 0.5 * (lo + hi) + 0.5 * (hi - lo) * t;
        *v = f(x);
    }
    std::array::from_fn(|comp| {
        let coeffs: Vec<f64> = (0..n)
            .map(|k| {
                let scale = if k == 0 { 1.0 / nf } else { 2.0 / nf };
                scale
                    * (0..n)
                        .map(|j| {
                            let theta = std::f64::consts::PI * (j as f64 + 0.5) / nf;
                            values[j][comp] * (k as f64 * theta).cos()
                        })
                        .sum::<f64>()
            })
            .collect();
        Chebyshev { lo, hi, coeffs }
    })
}
