//! Bracketed scalar root finding: plain bisection and Brent's method, plus a
//! geometric bracket expander for monotone functions.

use crate::error::{Error, Result};

/// Brent's method on a sign-changing bracket. Stops when the bracket width
/// falls below `xtol_abs + xtol_rel*|x|` or `|f| <= ftol`.
pub fn brent(
    mut f: impl FnMut(f64) -> f64,
    mut a: f64,
    mut b: f64,
    xtol_rel: f64,
    xtol_abs: f64,
    ftol: f64,
    max_iter: usize,
) -> Result<f64> {
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::RootFinding(format!(
            "no sign change on bracket [{a}, {b}] (f: {fa}, {fb})"
        )));
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * (xtol_abs + xtol_rel * b.abs());
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 || fb.abs() <= ftol {
            return Ok(b);
        }
        if e.abs() < tol || fa.abs() <= fb.abs() {
            d = m;
            e = m;
        } else {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                // secant
                (2.0 * m * s, 1.0 - s)
            } else {
                // inverse quadratic
                let q0 = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * q0 * (q0 - r) - (b - a) * (r - 1.0)),
                    (q0 - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
    }
    Err(Error::RootFinding(format!(
        "brent did not converge after {max_iter} iterations (x ~ {b}, f ~ {fb})"
    )))
}

/// Plain bisection to relative width `xtol_rel`.
pub fn bisect(
    mut f: impl FnMut(f64) -> f64,
    mut a: f64,
    mut b: f64,
    xtol_rel: f64,
    max_iter: usize,
) -> Result<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::RootFinding(format!(
            "no sign change on bracket [{a}, {b}] (f: {fa}, {fb})"
        )));
    }
    for _ in 0..max_iter {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= xtol_rel * m.abs().max(f64::MIN_POSITIVE) {
            return Ok(m);
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// Expand `[lo, hi]` outward (additively, with doubling step) until `f`
/// changes sign, for monotone `f`. Callers working with positive quantities
/// pass log-transformed coordinates, which makes the expansion geometric.
pub fn expand_bracket(
    mut f: impl FnMut(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    initial_step: f64,
    lo_limit: f64,
    hi_limit: f64,
) -> Result<(f64, f64)> {
    let mut flo = f(lo);
    let mut fhi = f(hi);
    let mut step = initial_step;
    while flo.signum() == fhi.signum() && flo != 0.0 && fhi != 0.0 {
        let lo_ok = lo - step >= lo_limit;
        let hi_ok = hi + step <= hi_limit;
        if !lo_ok && !hi_ok {
            return Err(Error::RootFinding(format!(
                "could not bracket a root within [{lo_limit}, {hi_limit}] \
                 (f({lo}) = {flo}, f({hi}) = {fhi})"
            )));
        }
        // move the endpoint whose value is closer to zero, outward
        if (flo.abs() <= fhi.abs() && lo_ok) || !hi_ok {
            lo -= step;
            flo = f(lo);
        } else {
            hi += step;
            fhi = f(hi);
        }
        step *= 2.0;
    }
    Ok((lo, hi))
}
