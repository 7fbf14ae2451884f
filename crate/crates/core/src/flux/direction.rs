//! Radial momentum flux of single-frequency modes and the resulting
//! outgoing/incoming verdict.
//!
//! A mode is `φ = e^{-iωt} Y(Ω) f(r) + c.c.` with a unit-normalised angular
//! factor. Fluxes are per unit time: the infinite time integral is dropped.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ads_modes::{radial_eval_deriv, AdSParams, Channel};
use crate::error::{Error, Result};
use crate::specfun::{double_factorial, radial_basis_deriv, RadialKind};

/// Relative tolerance below which a flux counts as zero.
pub const FLUX_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Outgoing,
    Incoming,
    Standing,
}

/// Flux through the hypercylinder and its sign classification.
/// `verdict` is `Standing` exactly when `|flux_per_time| <= tolerance`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DirectionVerdict {
    pub verdict: Verdict,
    pub flux_per_time: f64,
    pub tolerance: f64,
}

impl DirectionVerdict {
    fn classify(flux_per_time: f64, tolerance: f64) -> Self {
        let verdict = if flux_per_time.abs() <= tolerance {
            Verdict::Standing
        } else if flux_per_time > 0.0 {
            Verdict::Outgoing
        } else {
            Verdict::Incoming
        };
        DirectionVerdict { verdict, flux_per_time, tolerance }
    }
}

/// Background of the hypercylinder.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Spacetime {
    /// Flat 3+1 dimensional spacetime, field of mass `mass`.
    Minkowski { mass: f64 },
    /// Global AdS with `d` spatial dimensions; the radial coordinate is `ρ`.
    AdS(AdSParams),
}

/// Radial function and its radial derivative at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialSample {
    pub radius: f64,
    pub f: Complex64,
    pub df: Complex64,
}

impl RadialSample {
    pub fn new(radius: f64, f: Complex64, df: Complex64) -> Self {
        RadialSample { radius, f, df }
    }

    /// Radial part of `cos(ωt) u(r) + sin(ωt) v(r)`, which equals
    /// `e^{-iωt} (u + i v)/2 + c.c.`.
    pub fn from_quadratures(radius: f64, u: f64, du: f64, v: f64, dv: f64) -> Self {
        RadialSample { radius, f: Complex64::new(u, v) * 0.5, df: Complex64::new(du, dv) * 0.5 }
    }

    pub fn conj(&self) -> Self {
        RadialSample { radius: self.radius, f: self.f.conj(), df: self.df.conj() }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        RadialSample { radius: self.radius, f: self.f * c, df: self.df * c }
    }
}

/// Prefactor `c` in `flux = c · Im(f̄ f')`, i.e. `flux = -i c/2 (f̄f' - f f̄')`.
fn prefactor(spacetime: &Spacetime, omega: f64, radius: f64) -> Result<f64> {
    match spacetime {
        Spacetime::Minkowski { .. } => {
            if !(radius > 0.0) {
                return Err(Error::Domain(format!("radius must be positive, got {radius}")));
            }
            Ok(2.0 * omega * radius * radius)
        }
        Spacetime::AdS(p) => {
            if !(radius > 0.0 && radius < std::f64::consts::FRAC_PI_2) {
                return Err(Error::Domain(format!("ρ = {radius} outside (0, π/2)")));
            }
            Ok(4.0 * omega * p.r.powi(p.d as i32 - 1) * radius.tan().powi(p.d as i32 - 1))
        }
    }
}

/// Flux per unit time of the mode with radial sample `s`.
///
/// Minkowski: `-iω r² (f̄f' - f f̄')`.
/// AdS: `-2iω R^{d-1} tan^{d-1}ρ (f̄f' - f f̄')`. This is twice the value
/// obtained by integrating the radial momentum density directly; the factor
/// is kept so that the flat-limit combination has flux `4ωR^{d-1}/p`.
pub fn wronskian_flux(spacetime: &Spacetime, omega: f64, s: &RadialSample) -> Result<f64> {
    Ok(prefactor(spacetime, omega, s.radius)? * (s.f.conj() * s.df).im)
}

/// Flux and verdict. The flux is treated as zero when it is below
/// `FLUX_TOL` times its natural scale `|c| |f| |f'|`.
pub fn mode_flux(spacetime: &Spacetime, omega: f64, s: &RadialSample) -> Result<DirectionVerdict> {
    let c = prefactor(spacetime, omega, s.radius)?;
    let flux = c * (s.f.conj() * s.df).im;
    Ok(DirectionVerdict::classify(flux, FLUX_TOL * c.abs() * s.f.norm() * s.df.norm()))
}

/// Radial functions with a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RadialMode {
    /// `h1_l(pr)`, Minkowski only, `|ω| > m`.
    Hankel,
    /// `j_l(pr)`, or its real evanescent form when `|ω| < m`.
    Bessel,
    /// `n_l(pr)`, or its real evanescent form when `|ω| < m`.
    Neumann,
    /// Real Jacobi mode of the given channel, AdS only.
    Jacobi(Channel),
    /// `f^a S^a - i f^b S^b` with `f^a = p^l/(2l+d-2)!!`,
    /// `f^b = (2l+d-4)!!/p^{l+1}`, AdS only. Since `S^b` is positive near
    /// the origin while `n_l` is negative, this is the analogue of `j_l + i n_l`.
    FlatLimit { p: f64 },
}

/// `√|ω² - m²|`.
pub fn minkowski_momentum(omega: f64, mass: f64) -> f64 {
    (omega * omega - mass * mass).abs().sqrt()
}

/// Samples a closed-form radial mode at `radius`.
pub fn radial_sample(spacetime: &Spacetime, mode: RadialMode, omega: f64, l: u32, radius: f64) -> Result<RadialSample> {
    match (spacetime, mode) {
        (Spacetime::Minkowski { mass }, RadialMode::Hankel | RadialMode::Bessel | RadialMode::Neumann) => {
            let p = minkowski_momentum(omega, *mass);
            if p == 0.0 {
                return Err(Error::Domain("radial momentum vanishes at |ω| = m".into()));
            }
            let propagating = omega.abs() > *mass;
            let kind = match (mode, propagating) {
                (RadialMode::Hankel, true) => RadialKind::H1,
                (RadialMode::Hankel, false) => {
                    return Err(Error::Domain("Hankel modes need |ω| > m".into()));
                }
                (RadialMode::Bessel, true) => RadialKind::J,
                (RadialMode::Bessel, false) => RadialKind::JEvan,
                (_, true) => RadialKind::N,
                (_, false) => RadialKind::NEvan,
            };
            let (f, df) = radial_basis_deriv(kind, l, p * radius)?;
            Ok(RadialSample::new(radius, f, df * p))
        }
        (Spacetime::AdS(params), RadialMode::Jacobi(ch)) => {
            let (f, df) = radial_eval_deriv(params, omega, l, ch, radius)?;
            Ok(RadialSample::new(radius, f.into(), df.into()))
        }
        (Spacetime::AdS(params), RadialMode::FlatLimit { p }) => {
            if !(p > 0.0 && p.is_finite()) {
                return Err(Error::Domain(format!("flat-limit momentum must be positive, got {p}")));
            }
            let n = 2 * l as i64 + params.d as i64;
            let fa = p.powi(l as i32) / double_factorial(n - 2)?;
            let fb = double_factorial(n - 4)? / p.powi(l as i32 + 1);
            let (a, da) = radial_eval_deriv(params, omega, l, Channel::A, radius)?;
            let (b, db) = radial_eval_deriv(params, omega, l, Channel::B, radius)?;
            Ok(RadialSample::new(radius, Complex64::new(fa * a, -fb * b), Complex64::new(fa * da, -fb * db)))
        }
        _ => Err(Error::Domain(format!("radial mode {mode:?} is not defined on this background"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn hankel_flux_matches_closed_form() {
        let st = Spacetime::Minkowski { mass: 1.0 };
        let p = 3f64.sqrt();
        for r in [3.0, 5.0, 10.0] {
            let s = radial_sample(&st, RadialMode::Hankel, 2.0, 1, r).unwrap();
            let v = mode_flux(&st, 2.0, &s).unwrap();
            assert_eq!(v.verdict, Verdict::Outgoing);
            assert_relative_eq!(v.flux_per_time, 4.0 / p, max_relative = 1e-10);
        }
        let s = radial_sample(&st, RadialMode::Hankel, -2.0, 2, 4.0).unwrap();
        assert_eq!(mode_flux(&st, -2.0, &s).unwrap().verdict, Verdict::Incoming);
    }

    #[test]
    fn real_modes_stand() {
        let st = Spacetime::Minkowski { mass: 1.0 };
        for mode in [RadialMode::Bessel, RadialMode::Neumann] {
            for omega in [2.0, 0.5] {
                let s = radial_sample(&st, mode, omega, 2, 3.0).unwrap();
                let v = mode_flux(&st, omega, &s).unwrap();
                assert_eq!(v.verdict, Verdict::Standing);
                assert_eq!(v.flux_per_time, 0.0);
            }
        }
    }

    #[test]
    fn ads_flat_limit_flux() {
        let params = AdSParams::new(3, 4.2, 1.5).unwrap();
        let st = Spacetime::AdS(params);
        let (omega, p) = (2.5, 0.8);
        for l in 0..4 {
            for rho in [0.2, 0.6, 1.0] {
                let s = radial_sample(&st, RadialMode::FlatLimit { p }, omega, l, rho).unwrap();
                let v = mode_flux(&st, omega, &s).unwrap();
                assert_relative_eq!(v.flux_per_time, 4.0 * omega * 1.5f64.powi(2) / p, max_relative = 1e-8);
            }
        }
    }

    #[test]
    fn wrong_background_is_rejected() {
        let st = Spacetime::Minkowski { mass: 1.0 };
        assert!(radial_sample(&st, RadialMode::Jacobi(Channel::A), 2.0, 0, 1.0).is_err());
        assert!(radial_sample(&st, RadialMode::Hankel, 0.5, 0, 1.0).is_err());
    }
}
