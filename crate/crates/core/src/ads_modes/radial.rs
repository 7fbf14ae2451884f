//! Radial mode functions of the AdS tube and their Wronskian.

use serde::{Deserialize, Serialize};

use super::params::{hypergeo_params, AdSParams};
use crate::error::{Error, Result};
use crate::specfun::hyper::{hyp2f1, hyp2f1_deriv, Z_MAX};

/// Radial channel: `a` is regular at `ρ = 0`, `b` singular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Channel {
    A,
    B,
}

struct Pieces {
    exponent: f64,
    a: f64,
    b: f64,
    c: f64,
}

fn pieces(p: &AdSParams, omega: f64, l: u32, channel: Channel) -> Pieces {
    let h = hypergeo_params(p, omega, l);
    match channel {
        Channel::A => Pieces { exponent: l as f64, a: h.alpha_a, b: h.beta_a, c: h.gamma },
        Channel::B => Pieces { exponent: 2.0 - p.d as f64 - l as f64, a: h.alpha_b, b: h.beta_b, c: 2.0 - h.gamma },
    }
}

fn check_rho(rho: f64) -> Result<f64> {
    let z = rho.sin().powi(2);
    if !(rho > 0.0 && rho < std::f64::consts::FRAC_PI_2 && z <= Z_MAX) {
        return Err(Error::Domain(format!("ρ = {rho} outside (0, ρ_max] with sin²ρ <= {Z_MAX}")));
    }
    Ok(z)
}

/// `(S, S')` at `ρ`, with `S = sin^e ρ cos^Δ ρ ₂F₁(a, b; c; sin²ρ)` and
/// `e = l` (channel `a`) or `2 - d - l` (channel `b`).
pub fn radial_eval_deriv(p: &AdSParams, omega: f64, l: u32, channel: Channel, rho: f64) -> Result<(f64, f64)> {
    let z = check_rho(rho)?;
    let q = pieces(p, omega, l, channel);
    let (s, c) = rho.sin_cos();
    let f = hyp2f1(q.a, q.b, q.c, z)?;
    let df = hyp2f1_deriv(q.a, q.b, q.c, z)?;
    let pre = s.powf(q.exponent) * c.powf(p.delta);
    let value = pre * f;
    let deriv = value * (q.exponent * c / s - p.delta * s / c) + pre * df * 2.0 * s * c;
    Ok((value, deriv))
}

/// Radial function of the given channel, normalised to unit leading
/// coefficient at `ρ → 0`.
pub fn radial_eval(p: &AdSParams, omega: f64, l: u32, channel: Channel, rho: f64) -> Result<f64> {
    radial_eval_deriv(p, omega, l, channel, rho).map(|v| v.0)
}

/// `tan^{d-1}ρ (S^a S^b' - S^b S^a')`; constant in `ρ` and equal to
/// `-(2l + d - 2)`.
pub fn radial_wronskian(p: &AdSParams, omega: f64, l: u32, rho: f64) -> Result<f64> {
    let (a, da) = radial_eval_deriv(p, omega, l, Channel::A, rho)?;
    let (b, db) = radial_eval_deriv(p, omega, l, Channel::B, rho)?;
    Ok(rho.tan().powi(p.d as i32 - 1) * (a * db - b * da))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::hyper::hyp2f1;

    #[test]
    fn leading_behaviour() {
        let p = AdSParams::new(3, 4.2, 1.0).unwrap();
        let rho = 1e-4;
        let a = radial_eval(&p, 0.7, 2, Channel::A, rho).unwrap();
        assert!((a / rho.sin().powi(2) - 1.0).abs() < 1e-7);
        let b = radial_eval(&p, 0.7, 0, Channel::B, rho).unwrap();
        assert!((b * rho.sin() - 1.0).abs() < 1e-7);
    }

    #[test]
    fn massless_conformal_case() {
        let p = AdSParams::new(3, 3.0, 1.0).unwrap();
        for l in 0..3u32 {
            for rho in [0.2, 0.6, 1.0] {
                let v = radial_eval(&p, 0.0, l, Channel::A, rho).unwrap();
                let x = 0.5 * (3.0 + l as f64);
                let expected = rho.sin().powi(l as i32)
                    * rho.cos().powi(3)
                    * hyp2f1(x, x, l as f64 + 1.5, rho.sin().powi(2)).unwrap();
                assert!((v - expected).abs() < 1e-15 * expected.abs() && v > 0.0);
            }
        }
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let p = AdSParams::new(5, 3.7, 1.0).unwrap();
        let h = 1e-6;
        for ch in [Channel::A, Channel::B] {
            let (_, d) = radial_eval_deriv(&p, 1.3, 2, ch, 0.6).unwrap();
            let fd = (radial_eval(&p, 1.3, 2, ch, 0.6 + h).unwrap() - radial_eval(&p, 1.3, 2, ch, 0.6 - h).unwrap())
                / (2.0 * h);
            assert!((d - fd).abs() < 1e-7 * d.abs().max(1.0));
        }
    }

    #[test]
    fn wronskian_example() {
        let p = AdSParams::new(3, 4.2, 1.0).unwrap();
        let w1 = radial_wronskian(&p, 0.7, 1, 0.3).unwrap();
        let w2 = radial_wronskian(&p, 0.7, 1, 0.9).unwrap();
        assert!(((w1 - w2) / w1).abs() < 1e-10);
        assert!((w1 + 3.0).abs() < 1e-9);
    }

    #[test]
    fn domain_and_poles() {
        let p = AdSParams::new(3, 4.2, 1.0).unwrap();
        assert!(radial_eval(&p, 0.0, 0, Channel::A, 0.0).is_err());
        assert!(radial_eval(&p, 0.0, 0, Channel::A, 1.4).is_err());
        // d = 4, l = 0: 2 - γ = 0
        let p4 = AdSParams::new(4, 4.2, 1.0).unwrap();
        assert!(matches!(radial_eval(&p4, 0.3, 0, Channel::B, 0.5), Err(Error::Pole { .. })));
    }
}
