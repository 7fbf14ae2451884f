//! Normalisation, evaluation and contiguous relations of hyperspherical
//! harmonics.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::index::{MultiIndex, SphericalPoint};
use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma_signed;
use crate::specfun::ortho::{assoc_legendre, assoc_legendre_sin2_deriv, gegenbauer, gegenbauer_deriv};

fn ln_gamma(x: f64) -> f64 {
    log_gamma_signed(x).log_abs
}

fn ln_factorial(n: u32) -> f64 {
    ln_gamma(n as f64 + 1.0)
}

/// `l_k` for `k = 2 … d-1` read from the top-first level list.
fn level(idx: &MultiIndex, k: usize) -> u32 {
    let d = idx.dim();
    idx.levels[d - 1 - k]
}

/// Logarithm of the 2-sphere constant `√((2l+1)/(4π) (l-m)!/(l+m)!)`.
fn ln_norm_s2(l: u32, m: u32) -> f64 {
    0.5 * (((2 * l + 1) as f64 / (4.0 * PI)).ln() + ln_factorial(l - m) - ln_factorial(l + m))
}

/// Logarithm of the relative constant for the polar angle `θ_k`, linking a
/// harmonic of `S^{k-1}` with sub-level `lt` to one of `S^k` with level `l`.
fn ln_norm_level(k: usize, l: u32, lt: u32) -> f64 {
    let kf = k as f64;
    let ltf = lt as f64;
    (ltf + (kf + 1.0) / 2.0 - 2.0) * 2f64.ln()
        + ln_gamma(ltf + (kf - 1.0) / 2.0)
        + 0.5
            * (ln_factorial(l - lt) + ((2 * l) as f64 + kf - 1.0).ln()
                - PI.ln()
                - ln_gamma((l + lt) as f64 + kf - 1.0))
}

/// Normalisation constant of `Y_L` on `S^{d-1}`.
pub fn norm_const(d: usize, idx: &MultiIndex) -> Result<f64> {
    idx.check_dim(d)?;
    let mut ln = ln_norm_s2(level(idx, 2), idx.m.unsigned_abs() as u32);
    for k in 3..d {
        ln += ln_norm_level(k, level(idx, k), level(idx, k - 1));
    }
    Ok(ln.exp())
}

fn check_point(d: usize, p: &SphericalPoint) -> Result<()> {
    if p.dim() != d {
        return Err(Error::DimensionMismatch { expected: d - 2, got: p.thetas.len() });
    }
    Ok(())
}

/// Factor of `θ_k` for `k >= 3`: `sin^{l̃} θ C^{l̃+(k-1)/2}_{l-l̃}(cos θ)`.
fn polar_factor(k: usize, l: u32, lt: u32, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    let alpha = lt as f64 + (k as f64 - 1.0) / 2.0;
    s.powi(lt as i32) * gegenbauer(l - lt, alpha, c).expect("alpha > -1/2")
}

/// Real part of `Y_L` without normalisation or azimuthal phase: the product of
/// all polar factors.
pub(crate) fn polar_product(idx: &MultiIndex, p: &SphericalPoint) -> f64 {
    let d = idx.dim();
    let ma = idx.m.unsigned_abs() as i64;
    let theta2 = p.thetas[d - 3];
    let mut v = assoc_legendre(level(idx, 2) as i64, ma, theta2.cos()).expect("valid index");
    for k in 3..d {
        v *= polar_factor(k, level(idx, k), level(idx, k - 1), p.thetas[d - 1 - k]);
    }
    v
}

/// Per-angle factors of `Y_L`, used by the factorised quadrature. Entry `i`
/// belongs to `thetas[i]`.
pub(crate) fn polar_factor_at(idx: &MultiIndex, level_pos: usize, theta: f64) -> f64 {
    let d = idx.dim();
    let k = d - 1 - level_pos;
    if k == 2 {
        assoc_legendre(level(idx, 2) as i64, idx.m.unsigned_abs() as i64, theta.cos()).expect("valid index")
    } else {
        polar_factor(k, level(idx, k), level(idx, k - 1), theta)
    }
}

/// `Y_L(Ω)`; every factor is real except `e^{imφ}`, and `P_{l_2}^{|m|}` is used
/// for both signs of `m`, so `conj(Y_L) = Y_{L with -m}`.
pub fn eval_harmonic(d: usize, idx: &MultiIndex, p: &SphericalPoint) -> Result<Complex64> {
    let n = norm_const(d, idx)?;
    check_point(d, p)?;
    Ok(Complex64::from_polar(n * polar_product(idx, p), idx.m as f64 * p.phi))
}

/// `(1 - x²) ∂Y_L/∂x` with `x = cos θ_{d-1}`, by differentiating the top polar
/// factor analytically.
pub fn eval_harmonic_sin2_dcos(d: usize, idx: &MultiIndex, p: &SphericalPoint) -> Result<Complex64> {
    let n = norm_const(d, idx)?;
    check_point(d, p)?;
    let x = p.thetas[0].cos();
    let top = if d == 3 {
        assoc_legendre_sin2_deriv(idx.l() as i64, idx.m.abs(), x)?
    } else {
        let (l, lt) = (idx.l(), idx.l_sub());
        let alpha = lt as f64 + (d as f64 - 2.0) / 2.0;
        let s2 = (1.0 - x) * (1.0 + x);
        let s = s2.sqrt();
        let c = gegenbauer(l - lt, alpha, x)?;
        let dc = gegenbauer_deriv(l - lt, alpha, x)?;
        -(lt as f64) * x * s.powi(lt as i32) * c + s.powi(lt as i32) * s2 * dc
    };
    // the remaining factors are those of the index with the top angle removed
    let mut rest = 1.0;
    if d == 3 {
        rest = 1.0;
    } else {
        let ma = idx.m.unsigned_abs() as i64;
        let theta2 = p.thetas[d - 3];
        rest *= assoc_legendre(level(idx, 2) as i64, ma, theta2.cos())?;
        for k in 3..(d - 1) {
            rest *= polar_factor(k, level(idx, k), level(idx, k - 1), p.thetas[d - 1 - k]);
        }
    }
    Ok(Complex64::from_polar(n * top * rest, idx.m as f64 * p.phi))
}

/// Raising and lowering coefficients of the top level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderCoeffs {
    pub chi_minus: f64,
    pub chi_plus: f64,
    pub delta_minus: f64,
    pub delta_plus: f64,
}

/// Coefficients of `cos θ Y_l = χ⁻ Y_{l-1} + χ⁺ Y_{l+1}` and
/// `(1-cos²θ) ∂_{cos θ} Y_l = δ⁻ Y_{l-1} + δ⁺ Y_{l+1}` for the top angle,
/// with `l_sub = l_{d-2}` (or `|m|` when `d = 3`).
pub fn ladder_coeffs(d: usize, l: u32, l_sub: u32) -> Result<LadderCoeffs> {
    if d < 3 || l_sub > l {
        return Err(Error::Domain(format!("ladder coefficients need d >= 3 and l >= l_sub (d={d}, l={l}, l_sub={l_sub})")));
    }
    let (l, lt, d) = (l as f64, l_sub as f64, d as f64);
    let chi_minus = if l == lt {
        0.0
    } else {
        ((l - lt) * (l + lt + d - 3.0) / ((2.0 * l + d - 4.0) * (2.0 * l + d - 2.0))).sqrt()
    };
    let chi_plus = ((l - lt + 1.0) * (l + lt + d - 2.0) / ((2.0 * l + d - 2.0) * (2.0 * l + d))).sqrt();
    Ok(LadderCoeffs {
        chi_minus,
        chi_plus,
        delta_minus: (l + d - 2.0) * chi_minus,
        delta_plus: -l * chi_plus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonics::index::indices_with_top;

    #[test]
    fn spec_normalisations() {
        let y00 = MultiIndex::new(vec![0], 0).unwrap();
        assert!((norm_const(3, &y00).unwrap() - 1.0 / (4.0 * PI).sqrt()).abs() < 1e-15);
        let y10 = MultiIndex::new(vec![1], 0).unwrap();
        assert!((norm_const(3, &y10).unwrap() - (3.0 / (4.0 * PI)).sqrt()).abs() < 1e-15);
        let y000 = MultiIndex::new(vec![0, 0], 0).unwrap();
        assert!((norm_const(4, &y000).unwrap() - 1.0 / (2.0 * PI * PI).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn spec_evaluations() {
        let p = SphericalPoint::new(vec![PI / 3.0], 0.4).unwrap();
        let y00 = eval_harmonic(3, &MultiIndex::new(vec![0], 0).unwrap(), &p).unwrap();
        assert!((y00.re - 1.0 / (4.0 * PI).sqrt()).abs() < 1e-15 && y00.im == 0.0);
        let y10 = eval_harmonic(3, &MultiIndex::new(vec![1], 0).unwrap(), &p).unwrap();
        assert!((y10.re - (3.0 / (4.0 * PI)).sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn textbook_low_order_harmonics() {
        // Y_1^1 with the Condon-Shortley phase: -√(3/8π) sin θ e^{iφ}
        let p = SphericalPoint::new(vec![1.1], 0.7).unwrap();
        let y = eval_harmonic(3, &MultiIndex::new(vec![1], 1).unwrap(), &p).unwrap();
        let expected = Complex64::from_polar(-(3.0 / (8.0 * PI)).sqrt() * 1.1f64.sin(), 0.7);
        assert!((y - expected).norm() < 1e-15);
        // Y_2^0 = √(5/16π)(3cos²θ - 1)
        let y = eval_harmonic(3, &MultiIndex::new(vec![2], 0).unwrap(), &p).unwrap();
        let c = 1.1f64.cos();
        assert!((y.re - (5.0 / (16.0 * PI)).sqrt() * (3.0 * c * c - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn ladder_examples() {
        let c = ladder_coeffs(3, 1, 0).unwrap();
        assert!((c.chi_minus - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        for d in 3..8 {
            for l in 0..6 {
                assert_eq!(ladder_coeffs(d, l, l).unwrap().chi_minus, 0.0);
            }
        }
        let z = ladder_coeffs(4, 0, 0).unwrap();
        assert_eq!(z.chi_minus, 0.0);
        assert_eq!(z.delta_minus, 0.0);
        let z = ladder_coeffs(3, 0, 0).unwrap();
        assert_eq!(z.chi_minus, 0.0);
        assert_eq!(z.delta_minus, 0.0);
    }

    #[test]
    fn ladder_d3_matches_two_sphere_formulas() {
        for l in 0..10u32 {
            for m in 0..=l {
                let c = ladder_coeffs(3, l, m).unwrap();
                let (lf, mf) = (l as f64, m as f64);
                let lower = ((lf * lf - mf * mf) / (4.0 * lf * lf - 1.0)).sqrt();
                let upper = (((lf + 1.0).powi(2) - mf * mf) / ((2.0 * lf + 1.0) * (2.0 * lf + 3.0))).sqrt();
                if l > m {
                    assert!((c.chi_minus - lower).abs() < 1e-15);
                }
                assert!((c.chi_plus - upper).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        let p = SphericalPoint::new(vec![0.4, 2.2, 1.3], 5.1).unwrap();
        for idx in indices_with_top(5, 3) {
            let a = eval_harmonic(5, &idx, &p).unwrap();
            let b = eval_harmonic(5, &idx.conj(), &p).unwrap();
            assert!((a.conj() - b).norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_mismatched_input() {
        let idx = MultiIndex::new(vec![1, 1], 0).unwrap();
        let p = SphericalPoint::new(vec![0.1], 0.0).unwrap();
        assert!(eval_harmonic(4, &idx, &p).is_err());
        assert!(eval_harmonic(3, &idx, &p).is_err());
    }
}
