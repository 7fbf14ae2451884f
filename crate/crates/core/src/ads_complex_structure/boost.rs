//! Boost-commutation recurrences for `jab`, the Gamma-function candidates
//! solving them, and the completion of a candidate to full j-factors.

use num_complex::Complex64;
use serde::Serialize;

use super::jfactors::{diagonal_sign, JEntry, JFactors};
use crate::ads_modes::{hypergeo_params, AdSParams};
use crate::error::{Error, Result};
use crate::specfun::gamma::{is_gamma_pole, log_gamma_signed};

/// Factor `F₋` in `jab(ω-1, l+1) = -jab(ω, l) F₋`.
pub fn factor_minus(p: &AdSParams, omega: f64, l: u32) -> f64 {
    let (dl, d, l) = (p.delta, p.d as f64, l as f64);
    (dl + omega - l - d) * (dl - omega + l) / ((2.0 * l + d) * (2.0 * l + d - 2.0))
}

/// Factor `F₊` in `jab(ω+1, l+1) = -jab(ω, l) F₊`.
pub fn factor_plus(p: &AdSParams, omega: f64, l: u32) -> f64 {
    let (dl, d, l) = (p.delta, p.d as f64, l as f64);
    (dl - omega - l - d) * (dl + omega + l) / ((2.0 * l + d) * (2.0 * l + d - 2.0))
}

/// Residuals of the two boost recurrences at `(ω, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoostResiduals {
    /// `|jab(ω-1, l+1) + jab(ω, l) F₋|`
    pub minus: f64,
    /// `|jab(ω+1, l+1) + jab(ω, l) F₊|`
    pub plus: f64,
    /// `minus` divided by the larger of the two terms.
    pub minus_rel: f64,
    /// `plus` divided by the larger of the two terms.
    pub plus_rel: f64,
}

impl BoostResiduals {
    pub fn max_rel(&self) -> f64 {
        self.minus_rel.max(self.plus_rel)
    }
}

fn rel(lhs: Complex64, rhs: Complex64) -> (f64, f64) {
    let abs = (lhs + rhs).norm();
    let scale = lhs.norm().max(rhs.norm());
    (abs, if scale > 0.0 { abs / scale } else { 0.0 })
}

/// Evaluates both recurrences for a given `jab(ω, l)`; errors of `jab`
/// (poles in particular) are passed through.
pub fn boost_recurrence_residual(
    p: &AdSParams,
    jab: &dyn Fn(f64, u32) -> Result<Complex64>,
    omega: f64,
    l: u32,
) -> Result<BoostResiduals> {
    let here = jab(omega, l)?;
    let (minus, minus_rel) = rel(jab(omega - 1.0, l + 1)?, here * factor_minus(p, omega, l));
    let (plus, plus_rel) = rel(jab(omega + 1.0, l + 1)?, here * factor_plus(p, omega, l));
    Ok(BoostResiduals { minus, plus, minus_rel, plus_rel })
}

/// The companion recurrences for `jba`: `jba(ω∓1, l+1) F∓ + jba(ω, l) = 0`.
pub fn boost_recurrence_residual_ba(
    p: &AdSParams,
    jba: &dyn Fn(f64, u32) -> Result<Complex64>,
    omega: f64,
    l: u32,
) -> Result<BoostResiduals> {
    let here = jba(omega, l)?;
    let (minus, minus_rel) = rel(jba(omega - 1.0, l + 1)? * factor_minus(p, omega, l), here);
    let (plus, plus_rel) = rel(jba(omega + 1.0, l + 1)? * factor_plus(p, omega, l), here);
    Ok(BoostResiduals { minus, plus, minus_rel, plus_rel })
}

/// `Π Γ(num) / Π Γ(den)` through signed log-Gamma; any argument at a pole is
/// an error.
fn gamma_ratio(num: &[f64], den: &[f64]) -> Result<f64> {
    let mut log = 0.0;
    let mut sign = 1.0;
    for (&x, s) in num.iter().map(|x| (x, 1.0)).chain(den.iter().map(|x| (x, -1.0))) {
        if is_gamma_pole(x) {
            return Err(Error::Pole { arg: x });
        }
        let g = log_gamma_signed(x);
        log += s * g.log_abs;
        sign *= g.sign as f64;
    }
    if log > 709.0 {
        return Err(Error::Overflow(format!("Gamma ratio of magnitude e^{log:.1}")));
    }
    Ok(sign * log.exp())
}

/// Number of Gamma-function candidates.
pub const CANDIDATES: [u8; 4] = [1, 2, 3, 4];

/// Candidate solution `which ∈ 1..=4` of the boost recurrences.
///
/// With `α, β` the channel parameters and `γ = l + d/2`:
/// 1. `(-1)^l Γ(αa)Γ(βa) / [Γ(αb)Γ(βb)Γ(γ)Γ(γ-1)]`
/// 2. `(-1)^l Γ(1-αb)Γ(1-βb) / [Γ(1-αa)Γ(1-βa)Γ(γ)Γ(γ-1)]`
/// 3. `1 / [Γ(αb)Γ(βb)Γ(1-αa)Γ(1-βa)Γ(γ)Γ(γ-1)]`
/// 4. `Γ(αa)Γ(βa)Γ(1-αb)Γ(1-βb) / [Γ(γ)Γ(γ-1)]`
pub fn candidate_jab(which: u8, p: &AdSParams, omega: f64, l: u32) -> Result<f64> {
    let h = hypergeo_params(p, omega, l);
    let g = [h.gamma, h.gamma - 1.0];
    let parity = if l.is_multiple_of(2) { 1.0 } else { -1.0 };
    let (num, den, sign): (Vec<f64>, Vec<f64>, f64) = match which {
        1 => (vec![h.alpha_a, h.beta_a], vec![h.alpha_b, h.beta_b, g[0], g[1]], parity),
        2 => (
            vec![h.one_minus_alpha_b(), h.one_minus_beta_b()],
            vec![h.one_minus_alpha_a(), h.one_minus_beta_a(), g[0], g[1]],
            parity,
        ),
        3 => (
            vec![],
            vec![h.alpha_b, h.beta_b, h.one_minus_alpha_a(), h.one_minus_beta_a(), g[0], g[1]],
            1.0,
        ),
        4 => (vec![h.alpha_a, h.beta_a, h.one_minus_alpha_b(), h.one_minus_beta_b()], vec![g[0], g[1]], 1.0),
        _ => return Err(Error::Domain(format!("candidate {which} not in 1..=4"))),
    };
    Ok(sign * gamma_ratio(&num, &den)?)
}

/// Completes a real, nonzero `jab` to a nondiagonal entry
/// `(jaa, jab, -(1 + jaa²)/jab, -jaa)`.
pub fn complete_nondiagonal(jab: f64, jaa: f64) -> Result<JEntry> {
    if jab == 0.0 || !jab.is_finite() || !jaa.is_finite() {
        return Err(Error::Domain(format!("nondiagonal completion needs a finite jab ≠ 0 (jab = {jab})")));
    }
    Ok(JEntry::real(jaa, jab, -(1.0 + jaa * jaa) / jab, -jaa))
}

/// Nondiagonal j-factors built from a candidate on a set of `(ω, l)`.
pub fn jfactors_from_candidate(which: u8, p: &AdSParams, points: &[(f64, u32)], jaa: f64) -> Result<JFactors> {
    let mut jf = JFactors::new();
    for &(w, l) in points {
        jf.insert(w, l, complete_nondiagonal(candidate_jab(which, p, w, l)?, jaa)?);
    }
    Ok(jf)
}

/// For the diagonal choice, whether `jaa(ω-1) = -jaa(ω)`, i.e. whether a boost
/// step from `ω` crosses zero frequency. True exactly for `0 < ω < 1`.
/// `ω ∈ {0, 1}` lands on the undefined point and is rejected.
pub fn diagonal_boost_mismatch(omega: f64) -> Result<bool> {
    Ok(diagonal_sign(omega - 1.0)? == -diagonal_sign(omega)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> AdSParams {
        AdSParams::new(3, 4.2, 1.0).unwrap()
    }

    #[test]
    fn candidate_one_example_point() {
        let c = |w, l| candidate_jab(1, &p(), w, l).map(|v| Complex64::new(v, 0.0));
        let r = boost_recurrence_residual(&p(), &c, 0.7, 1).unwrap();
        assert!(r.max_rel() < 1e-12, "{r:?}");
    }

    #[test]
    fn frequency_symmetry() {
        for l in 0..4 {
            for w in [0.3, 1.7, 2.5] {
                assert_eq!(candidate_jab(1, &p(), w, l).unwrap(), candidate_jab(1, &p(), -w, l).unwrap());
            }
        }
    }

    #[test]
    fn constant_jab_fails() {
        let one = |_: f64, _: u32| Ok(Complex64::new(1.0, 0.0));
        let r = boost_recurrence_residual(&p(), &one, 0.7, 1).unwrap();
        assert!((r.plus - (1.0 + factor_plus(&p(), 0.7, 1)).abs()).abs() < 1e-15);
        assert!(r.plus > 1e-3);
    }

    #[test]
    fn completion_examples() {
        assert_eq!(complete_nondiagonal(-1.0, 0.0).unwrap(), JEntry::real(0.0, -1.0, 1.0, -0.0));
        assert_eq!(complete_nondiagonal(-2.0, 0.0).unwrap(), JEntry::real(0.0, -2.0, 0.5, -0.0));
        assert!(complete_nondiagonal(0.0, 0.0).is_err());
    }

    #[test]
    fn poles_are_errors() {
        // αa = ½(Δ - ω + l) = 0 at ω = Δ
        let q = p();
        assert!(matches!(candidate_jab(1, &q, q.delta, 0), Err(Error::Pole { .. })));
        assert!(candidate_jab(5, &q, 0.0, 0).is_err());
    }

    #[test]
    fn diagonal_mismatch() {
        assert!(diagonal_boost_mismatch(0.5).unwrap());
        assert!(!diagonal_boost_mismatch(1.5).unwrap());
        assert!(diagonal_boost_mismatch(1.0 - 1e-12).unwrap());
        assert!(!diagonal_boost_mismatch(-0.5).unwrap());
        assert!(diagonal_boost_mismatch(1.0).is_err());
    }
}
