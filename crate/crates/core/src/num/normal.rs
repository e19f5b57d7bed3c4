//! Standard normal pdf/cdf. The cdf is evaluated through `erfc` so the tails
//! stay accurate down to the underflow threshold.

use statrs::function::erf::erfc;

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;
const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

#[inline]
pub fn pdf(x: f64) -> f64 {
    if x.is_infinite() {
        return 0.0;
    }
    INV_SQRT_2PI * (-0.5 * x * x).exp()
}

#[inline]
pub fn cdf(x: f64) -> f64 {
    if x == f64::INFINITY {
        return 1.0;
    }
    if x == f64::NEG_INFINITY {
        return 0.0;
    }
    0.5 * erfc(-x * FRAC_1_SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cdf_reference_values() {
        assert_relative_eq!(cdf(0.0), 0.5, max_relative = 1e-15);
        assert_relative_eq!(cdf(1.0), 0.841344746068543, max_relative = 1e-12);
        assert_relative_eq!(cdf(-1.96), 0.024997895148220435, max_relative = 1e-10);
        assert!(cdf(-40.0) >= 0.0 && cdf(-40.0) < 1e-300);
        assert_eq!(cdf(f64::INFINITY), 1.0);
        assert_eq!(cdf(f64::NEG_INFINITY), 0.0);
    }

    #[test]
    fn pdf_symmetry_and_peak() {
        assert_relative_eq!(pdf(0.0), INV_SQRT_2PI, max_relative = 1e-15);
        assert_relative_eq!(pdf(1.3), pdf(-1.3), max_relative = 1e-15);
        assert_eq!(pdf(f64::INFINITY), 0.0);
    }
}
