//! Spherical Bessel, Neumann and Hankel functions of real argument, and the
//! real evanescent combinations `i^{-l} j_l(ix)`, `i^{l+1} n_l(ix)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::gamma::a_coeff;

const MAX_TERMS: usize = 10_000;

// The odd/even trigonometric sums are used from x = 2l + 4 on. Below that,
// down to x² = 2l + 3 where the power series takes over, j_l comes from a
// downward (Miller) recurrence and n_l from the upward recurrence: the sums
// cancel too strongly near their zeros for l < x < 2l there.
const TRIG_FROM_SLOPE: f64 = 2.0;
const TRIG_FROM_OFFSET: f64 = 4.0;

/// Which member of the family [`radial_basis`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadialKind {
    J,
    N,
    H1,
    H2,
    JEvan,
    NEvan,
}

impl RadialKind {
    pub const ALL: [RadialKind; 6] =
        [RadialKind::J, RadialKind::N, RadialKind::H1, RadialKind::H2, RadialKind::JEvan, RadialKind::NEvan];
}

fn check_arg(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("radial argument x = {x} must be positive and finite")));
    }
    Ok(())
}

fn finite(v: f64, what: &str, l: u32, x: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("{what}_{l}({x})")))
    }
}

/// Odd-power sum `S^o_l(x) = Σ_k (-1)^k a_{2k}/x^{2k+1}`.
pub fn s_odd(l: u32, x: f64) -> f64 {
    let l = l as i64;
    (0..=l / 2)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * a_coeff(2 * k, l) / x.powi((2 * k + 1) as i32)
        })
        .sum()
}

/// Even-power sum `S^e_l(x) = Σ_k (-1)^k a_{2k+1}/x^{2k+2}`.
pub fn s_even(l: u32, x: f64) -> f64 {
    let l = l as i64;
    if l == 0 {
        return 0.0;
    }
    (0..=(l - 1) / 2)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * a_coeff(2 * k + 1, l) / x.powi((2 * k + 2) as i32)
        })
        .sum()
}

/// `S^±_l(x) = Σ_{k=0}^{l} (±i)^{k-l-1} a_k / x^{k+1}`; `sign` is `+1` or `-1`.
pub fn s_pm(l: u32, x: f64, sign: i32) -> Complex64 {
    let unit = Complex64::new(0.0, sign as f64);
    let li = l as i64;
    (0..=li)
        .map(|k| unit.powi((k - li - 1) as i32) * (a_coeff(k, li) / x.powi((k + 1) as i32)))
        .sum()
}

/// `(sin, cos)` of `x - lπ/2`.
fn shifted_sin_cos(l: u32, x: f64) -> (f64, f64) {
    let (s, c) = x.sin_cos();
    match l % 4 {
        0 => (s, c),
        1 => (-c, s),
        2 => (-s, -c),
        _ => (c, -s),
    }
}

fn j_series(l: u32, x: f64) -> f64 {
    let mut lead = 1.0;
    for i in 0..l {
        lead *= x / (2 * i + 3) as f64;
    }
    // lead = x^l / (2l+1)!!
    let y = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS {
        term *= y / ((k + 1) as f64 * (2 * l as usize + 2 * k + 3) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn n_series(l: u32, x: f64) -> f64 {
    // -(2l-1)!!/x^{l+1} Σ_k (-1)^k x^{2k}/(2^k k!) Π_{j=1}^k 1/(2j-2l-1)
    let mut lead = -1.0 / x;
    for i in 1..=l {
        lead *= (2 * i - 1) as f64 / x;
    }
    let y = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..MAX_TERMS {
        term *= y / (k as f64 * (2 * k as i64 - 2 * l as i64 - 1) as f64);
        sum += term;
        if k > l as usize && term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn n_upward(l: u32, x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    let mut prev = -c / x;
    if l == 0 {
        return prev;
    }
    let mut cur = -c / (x * x) - s / x;
    for k in 1..l {
        let next = (2 * k + 1) as f64 / x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn j_miller(l: u32, x: f64) -> f64 {
    let top = (l as f64).max(x).ceil() as usize + 60;
    let mut fk1 = 0.0; // f_{k+1}
    let mut fk = 1e-280; // f_k
    let mut at_l = 0.0;
    let mut f0 = 0.0;
    let mut f1 = 0.0;
    for k in (0..=top).rev() {
        if k == l as usize {
            at_l = fk;
        }
        if k == 1 {
            f1 = fk;
        }
        if k == 0 {
            f0 = fk;
            break;
        }
        let prev = (2 * k + 1) as f64 / x * fk - fk1;
        fk1 = fk;
        fk = prev;
        if fk.abs() > 1e250 {
            fk *= 1e-250;
            fk1 *= 1e-250;
            at_l *= 1e-250;
            f1 *= 1e-250;
        }
    }
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let j1 = s / (x * x) - c / x;
    if j0.abs() >= j1.abs() {
        at_l * (j0 / f0)
    } else {
        at_l * (j1 / f1)
    }
}

/// Spherical Bessel function `j_l(x)`.
pub fn sph_j(l: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    let lf = l as f64;
    let v = if x * x <= 2.0 * lf + 3.0 {
        j_series(l, x)
    } else if x >= TRIG_FROM_SLOPE * lf + TRIG_FROM_OFFSET {
        let (s, c) = shifted_sin_cos(l, x);
        s_odd(l, x) * s + s_even(l, x) * c
    } else {
        j_miller(l, x)
    };
    finite(v, "j", l, x)
}

/// Spherical Neumann function `n_l(x)`.
pub fn sph_n(l: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    let lf = l as f64;
    let v = if x * x <= 2.0 * lf + 3.0 {
        n_series(l, x)
    } else if x < TRIG_FROM_SLOPE * lf + TRIG_FROM_OFFSET {
        n_upward(l, x)
    } else {
        let (s, c) = shifted_sin_cos(l, x);
        -s_odd(l, x) * c + s_even(l, x) * s
    };
    finite(v, "n", l, x)
}

/// Spherical Hankel function of the first kind, `e^{ix} S^+_l(x)`.
pub fn sph_h1(l: u32, x: f64) -> Result<Complex64> {
    check_arg(x)?;
    let v = Complex64::from_polar(1.0, x) * s_pm(l, x, 1);
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::Overflow(format!("h1_{l}({x})")));
    }
    Ok(v)
}

/// Spherical Hankel function of the second kind, the conjugate of `h1` for real `x`.
pub fn sph_h2(l: u32, x: f64) -> Result<Complex64> {
    check_arg(x)?;
    let v = Complex64::from_polar(1.0, -x) * s_pm(l, x, -1);
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::Overflow(format!("h2_{l}({x})")));
    }
    Ok(v)
}

/// `i^{-l} j_l(ix) = x^l Σ_k (x²/2)^k / (k! (2l+2k+1)!!)`, real for real `x`.
pub fn j_evan(l: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    let mut lead = 1.0;
    for i in 0..l {
        lead *= x / (2 * i + 3) as f64;
    }
    let y = 0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut converged = false;
    for k in 0..MAX_TERMS {
        term *= y / ((k + 1) as f64 * (2 * l as usize + 2 * k + 3) as f64);
        sum += term;
        if term <= 1e-17 * sum {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence { terms: MAX_TERMS });
    }
    finite(lead * sum, "j_evan", l, x)
}

/// `i^{l+1} n_l(ix) = -(2l-1)!!/x^{l+1} Σ_k x^{2k}/(2^k k!) Π_{j≤k} 1/(2j-2l-1)`.
pub fn n_evan(l: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    let mut lead = -1.0 / x;
    for i in 1..=l {
        lead *= (2 * i - 1) as f64 / x;
    }
    let y = 0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut converged = false;
    for k in 1..MAX_TERMS {
        term *= y / (k as f64 * (2 * k as i64 - 2 * l as i64 - 1) as f64);
        sum += term;
        if k > l as usize && term.abs() <= 1e-17 * sum.abs() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence { terms: MAX_TERMS });
    }
    finite(lead * sum, "n_evan", l, x)
}

/// Evaluates one member of the radial family at `x > 0`.
pub fn radial_basis(kind: RadialKind, l: u32, x: f64) -> Result<Complex64> {
    Ok(match kind {
        RadialKind::J => Complex64::new(sph_j(l, x)?, 0.0),
        RadialKind::N => Complex64::new(sph_n(l, x)?, 0.0),
        RadialKind::H1 => sph_h1(l, x)?,
        RadialKind::H2 => sph_h2(l, x)?,
        RadialKind::JEvan => Complex64::new(j_evan(l, x)?, 0.0),
        RadialKind::NEvan => Complex64::new(n_evan(l, x)?, 0.0),
    })
}

/// Value and first derivative in `x`, from the contiguous relation
/// `f_l' = (l/x) f_l - f_{l+1}` (with `+` for `j_evan`).
pub fn radial_basis_deriv(kind: RadialKind, l: u32, x: f64) -> Result<(Complex64, Complex64)> {
    let f = radial_basis(kind, l, x)?;
    let next = radial_basis(kind, l + 1, x)?;
    let lead = f * (l as f64 / x);
    let d = match kind {
        RadialKind::JEvan => lead + next,
        _ => lead - next,
    };
    Ok((f, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent references: the finite Hankel sum for n_l and downward
    // ratios normalised by j_0 or j_1 for j_l.
    // Near zeros the error is measured against the envelope.
    // Forward recurrence in exact rational arithmetic from the rounded n_0,
    // n_1; the recurrence is well conditioned upwards, so only the starting
    // rounding survives.
    fn n_exact_upward(lmax: u32, x: f64) -> Vec<f64> {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use num_traits::{FromPrimitive, ToPrimitive};
        let (s, c) = x.sin_cos();
        let xr = BigRational::from_f64(x).unwrap();
        let mut prev = BigRational::from_f64(-c / x).unwrap();
        let mut cur = BigRational::from_f64(-c / (x * x) - s / x).unwrap();
        let mut out = vec![prev.to_f64().unwrap(), cur.to_f64().unwrap()];
        for k in 1..lmax {
            let coef = BigRational::from_integer(BigInt::from(2 * k + 1)) / &xr;
            let next = coef * &cur - &prev;
            prev = std::mem::replace(&mut cur, next);
            out.push(cur.to_f64().unwrap());
        }
        out
    }

    fn j_ratio_miller(l: u32, x: f64) -> f64 {
        // ratios ρ_k = j_{k-1}/j_k from a deep downward start
        let top = (l as f64).max(x) as usize + 150;
        let mut rho = vec![0.0; top + 2];
        let mut next = f64::INFINITY;
        for k in (1..=top).rev() {
            rho[k] = (2 * k + 1) as f64 / x - 1.0 / next;
            next = rho[k];
        }
        let (s, c) = x.sin_cos();
        let j0 = s / x;
        let j1 = s / (x * x) - c / x;
        if j0.abs() >= j1.abs() {
            (1..=l as usize).fold(j0, |acc, k| acc / rho[k])
        } else if l == 0 {
            j0
        } else {
            (2..=l as usize).fold(j1, |acc, k| acc / rho[k])
        }
    }

    #[test]
    fn spec_examples() {
        assert!((sph_j(0, 1.0).unwrap() - 1f64.sin()).abs() < 1e-15);
        let h = sph_h1(0, 2.0).unwrap();
        let expected = Complex64::new(0.0, -1.0) * Complex64::from_polar(1.0, 2.0) / 2.0;
        assert!((h - expected).norm() < 1e-15);
        let v = radial_basis(RadialKind::NEvan, 0, 1.0).unwrap();
        assert_eq!(v.im, 0.0);
        assert!((v.re + 1f64.cosh()).abs() < 1e-15);
    }

    #[test]
    fn low_order_closed_forms() {
        for &x in &[0.3, 1.7, 4.5, 12.0, 37.0] {
            let (s, c) = (x as f64).sin_cos();
            let j1 = s / (x * x) - c / x;
            let j2 = (3.0 / (x * x) - 1.0) * s / x - 3.0 * c / (x * x);
            let n1 = -c / (x * x) - s / x;
            assert!((sph_j(1, x).unwrap() - j1).abs() < 1e-13 * j1.abs().max(1e-3));
            assert!((sph_j(2, x).unwrap() - j2).abs() < 1e-12 * j2.abs().max(1e-3));
            assert!((sph_n(1, x).unwrap() - n1).abs() < 1e-13 * n1.abs().max(1e-3));
            assert!((j_evan(0, x).unwrap() - x.sinh() / x).abs() < 1e-14 * (x.sinh() / x));
            let ne1 = x.sinh() / x - x.cosh() / (x * x);
            assert!((n_evan(1, x).unwrap() - ne1).abs() < 1e-13 * ne1.abs());
        }
    }

    #[test]
    fn j_and_n_against_references() {
        let mut worst_j: f64 = 0.0;
        let mut worst_n: f64 = 0.0;
        for i in 1..=400 {
            let x = 0.125 * i as f64;
            let n_ref = n_exact_upward(30, x);
            for l in 0..=30u32 {
                let j = sph_j(l, x).unwrap();
                let jr = j_ratio_miller(l, x);
                let n = sph_n(l, x).unwrap();
                let nr = n_ref[l as usize];
                // away from zeros the relative error is the meaningful measure;
                // near zeros compare against the envelope scale
                let env = (jr * jr + nr * nr).sqrt();
                let ej = (j - jr).abs() / jr.abs().max(1e-2 * env);
                let en = (n - nr).abs() / nr.abs().max(1e-2 * env);
                worst_j = worst_j.max(ej);
                worst_n = worst_n.max(en);
            }
        }
        assert!(worst_j < 1e-10, "j worst relative error {worst_j:e}");
        assert!(worst_n < 1e-10, "n worst relative error {worst_n:e}");
    }

    #[test]
    fn wronskian_identity() {
        // j_{l+1} n_l - j_l n_{l+1} = 1/x²
        for l in 0..30u32 {
            for &x in &[0.4, 2.0, 9.5, 33.0, 49.0] {
                let w = sph_j(l + 1, x).unwrap() * sph_n(l, x).unwrap()
                    - sph_j(l, x).unwrap() * sph_n(l + 1, x).unwrap();
                assert!((w * x * x - 1.0).abs() < 1e-9, "l={l} x={x} w·x²={}", w * x * x);
            }
        }
    }

    #[test]
    fn hankel_reconstruction_and_envelope() {
        for l in 0..=6u32 {
            for i in 0..=78 {
                let x = 0.5 + 0.25 * i as f64;
                let h = sph_h1(l, x).unwrap();
                let (j, n) = (sph_j(l, x).unwrap(), sph_n(l, x).unwrap());
                let direct = Complex64::new(j, n);
                assert!((h - direct).norm() <= 1e-10 * h.norm(), "l={l} x={x}");
                assert!((h.norm_sqr() / (j * j + n * n) - 1.0).abs() < 1e-10);
                let h2 = sph_h2(l, x).unwrap();
                assert!((h2 - h.conj()).norm() < 1e-14 * h.norm());
            }
        }
    }

    #[test]
    fn evanescent_recurrences() {
        // J_{l+1} = J_{l-1} - (2l+1)/x J_l,  N_{l+1} = (2l+1)/x N_l + N_{l-1}
        for l in 1..20u32 {
            for &x in &[0.2, 1.0, 6.0, 25.0, 50.0] {
                let jm = j_evan(l - 1, x).unwrap();
                let j0 = j_evan(l, x).unwrap();
                let jp = j_evan(l + 1, x).unwrap();
                assert!((jp - (jm - (2 * l + 1) as f64 / x * j0)).abs() <= 1e-9 * jm.abs());
                let nm = n_evan(l - 1, x).unwrap();
                let n0 = n_evan(l, x).unwrap();
                let np = n_evan(l + 1, x).unwrap();
                assert!((np - ((2 * l + 1) as f64 / x * n0 + nm)).abs() <= 1e-12 * np.abs());
            }
        }
    }

    #[test]
    fn derivatives_against_difference_quotients() {
        let h = 1e-5;
        for kind in RadialKind::ALL {
            for l in 0..5u32 {
                for &x in &[0.7, 3.1, 8.0] {
                    let (_, d) = radial_basis_deriv(kind, l, x).unwrap();
                    let fd = (radial_basis(kind, l, x + h).unwrap() - radial_basis(kind, l, x - h).unwrap()) / (2.0 * h);
                    assert!((d - fd).norm() < 1e-7 * d.norm().max(1.0), "{kind:?} l={l} x={x}");
                }
            }
        }
    }

    #[test]
    fn trig_decomposition_identity() {
        for l in 0..=10u32 {
            for &x in &[0.9, 3.3, 7.7, 15.0] {
                let (s, c) = shifted_sin_cos(l, x);
                let via_trig = s_odd(l, x) * s + s_even(l, x) * c;
                let j = sph_j(l, x).unwrap();
                let scale = (j * j + sph_n(l, x).unwrap().powi(2)).sqrt();
                assert!((via_trig - j).abs() <= 1e-10 * scale, "l={l} x={x}");
            }
        }
    }

    #[test]
    fn rejects_nonpositive_argument() {
        assert!(sph_j(0, 0.0).is_err());
        assert!(sph_n(3, -1.0).is_err());
        assert!(matches!(sph_n(30, 1e-20), Err(Error::Overflow(_))));
    }
}
