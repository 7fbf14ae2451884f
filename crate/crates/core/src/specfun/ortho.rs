//! Associated Legendre functions and Gegenbauer polynomials.

use crate::error::{Error, Result};

/// Polynomial family selector for [`ortho_poly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrthoFamily {
    AssocLegendre,
    Gegenbauer,
}

/// Dispatches to [`assoc_legendre`] (`p1 = m`, `p2 = l`) or
/// [`gegenbauer`] (`p1 = α`, `p2 = n`).
pub fn ortho_poly(family: OrthoFamily, p1: f64, p2: i64, x: f64) -> Result<f64> {
    match family {
        OrthoFamily::AssocLegendre => {
            if p1.fract() != 0.0 {
                return Err(Error::Domain(format!("non-integer order m = {p1}")));
            }
            assoc_legendre(p2, p1 as i64, x)
        }
        OrthoFamily::Gegenbauer => {
            if p2 < 0 {
                return Err(Error::Domain(format!("negative degree {p2}")));
            }
            gegenbauer(p2 as u32, p1, x)
        }
    }
}

fn check_unit(x: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [-1, 1]")));
    }
    Ok(())
}

/// `P_l^m(x)` including the Condon-Shortley phase `(-1)^m`; negative `m`
/// follows `P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m`.
pub fn assoc_legendre(l: i64, m: i64, x: f64) -> Result<f64> {
    check_unit(x)?;
    if l < 0 || m.abs() > l {
        return Err(Error::Domain(format!("P_{l}^{m} undefined")));
    }
    let ma = m.abs();
    let p = legendre_nonneg(l as u32, ma as u32, x);
    if m >= 0 {
        return Ok(p);
    }
    let mut ratio = 1.0;
    for k in (l - ma + 1)..=(l + ma) {
        ratio /= k as f64;
    }
    let sign = if ma % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * ratio * p)
}

fn legendre_nonneg(l: u32, m: u32, x: f64) -> f64 {
    let s = ((1.0 - x) * (1.0 + x)).sqrt();
    let mut pmm = 1.0;
    for k in 1..=m {
        pmm *= -((2 * k - 1) as f64) * s;
    }
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = x * (2 * m + 1) as f64 * pmm;
    for n in (m + 2)..=l {
        let next = (x * (2 * n - 1) as f64 * cur - (n + m - 1) as f64 * prev) / (n - m) as f64;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(1-x²) dP_l^m/dx = (l+m) P_{l-1}^m - l x P_l^m` for `m >= 0`.
pub fn assoc_legendre_sin2_deriv(l: i64, m: i64, x: f64) -> Result<f64> {
    let p = assoc_legendre(l, m, x)?;
    let pm1 = if l > m.abs() { assoc_legendre(l - 1, m, x)? } else { 0.0 };
    Ok((l + m) as f64 * pm1 - l as f64 * x * p)
}

/// Gegenbauer polynomial `C_n^α(x)` by the three-term recurrence.
pub fn gegenbauer(n: u32, alpha: f64, x: f64) -> Result<f64> {
    if alpha <= -0.5 {
        return Err(Error::Domain(format!("Gegenbauer alpha = {alpha} <= -1/2")));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * alpha * x;
    for k in 2..=n {
        let kf = k as f64;
        let next = (2.0 * x * (kf + alpha - 1.0) * cur - (kf + 2.0 * alpha - 2.0) * prev) / kf;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `d/dx C_n^α(x) = 2α C_{n-1}^{α+1}(x)`.
pub fn gegenbauer_deriv(n: u32, alpha: f64, x: f64) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    Ok(2.0 * alpha * gegenbauer(n - 1, alpha + 1.0, x)?)
}
