//! Gauss hypergeometric series `₂F₁(a, b; c; z)` on `0 <= z <= 0.95`.

use crate::error::{Error, Result};
use crate::specfun::gamma::is_gamma_pole;

/// Largest argument accepted by [`hyp2f1`].
pub const Z_MAX: f64 = 0.95;
const REL_TAIL: f64 = 1e-13;
const MAX_TERMS: usize = 10_000;

/// Sums the hypergeometric series until the estimated relative tail drops
/// below `1e-13`.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if !(0.0..=Z_MAX).contains(&z) {
        return Err(Error::Domain(format!("hyp2f1 argument z = {z} outside [0, {Z_MAX}]")));
    }
    if is_gamma_pole(c) {
        return Err(Error::Pole { arg: c });
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    if z == 0.0 {
        return Ok(1.0);
    }
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let ratio = (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        term *= ratio;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        if !sum.is_finite() {
            return Err(Error::Overflow(format!("hyp2f1({a}, {b}; {c}; {z})")));
        }
        // past |a|+|b|+|c| the term ratios approach z monotonically, so the
        // larger of the next ratio and z bounds every later one
        let next = ((a + kf + 1.0) * (b + kf + 1.0) / ((c + kf + 1.0) * (kf + 2.0)) * z).abs().max(z);
        if next < 1.0 && kf + 1.0 > (a.abs() + b.abs() + c.abs()) {
            let tail = term.abs() * next / (1.0 - next);
            if tail <= REL_TAIL * sum.abs() {
                return Ok(sum);
            }
        }
    }
    Err(Error::NonConvergence { terms: MAX_TERMS })
}

/// `d/dz ₂F₁(a, b; c; z) = (ab/c) ₂F₁(a+1, b+1; c+1; z)`.
pub fn hyp2f1_deriv(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_gamma_pole(c) {
        return Err(Error::Pole { arg: c });
    }
    if a == 0.0 || b == 0.0 {
        return Ok(0.0);
    }
    Ok(a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z)?)
}
