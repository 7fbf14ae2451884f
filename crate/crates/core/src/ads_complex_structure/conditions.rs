//! The condition system a set of j-factors must satisfy, and the quadratic
//! form `g_ρ` it induces.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::jfactors::{JEntry, JFactors};
use crate::ads_modes::{is_real_solution, AdSParams, ModeVector};
use crate::error::{Error, Result};

/// Default relative tolerance for the conditions.
pub const COND_TOL: f64 = 1e-10;

/// Solution family of the condition system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum JCase {
    Diagonal,
    Nondiagonal,
    Invalid,
}

/// Residuals of one `(ω, l)` entry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntryResiduals {
    /// `|jaa² + jab jba + 1|`
    pub c34a: f64,
    /// `|jbb² + jab jba + 1|`
    pub c34b: f64,
    /// `|jaa conj(jbb) - jba conj(jab) - 1|`
    pub c35: f64,
    /// `|jab (jaa + jbb)|`
    pub c36ab: f64,
    /// `|jba (jaa + jbb)|`
    pub c36ba: f64,
    /// `|Im(jaa conj(jba))|`
    pub c32: f64,
    /// `|Im(jbb conj(jab))|`
    pub c33: f64,
    /// `|Im(jab conj(jba))|`
    pub c32c: f64,
    /// `max |j(-ω) - conj(j(ω))|` over the four components
    pub reality: f64,
    /// Scale the residuals are compared against: `max(1, max|j|²)`.
    pub scale: f64,
}

impl EntryResiduals {
    pub fn named(&self) -> [(&'static str, f64); 9] {
        [
            ("C34a", self.c34a),
            ("C34b", self.c34b),
            ("C35", self.c35),
            ("C36ab", self.c36ab),
            ("C36ba", self.c36ba),
            ("C32", self.c32),
            ("C33", self.c33),
            ("C32c", self.c32c),
            ("reality", self.reality),
        ]
    }
}

/// Residuals of the entry at `(ω, l)`; the reality condition needs the entry
/// at `(-ω, l)` as well.
pub fn entry_residuals(jf: &JFactors, omega: f64, l: u32) -> Result<EntryResiduals> {
    let e = jf.require(omega, l)?;
    let mirror = jf.require(-omega, l)?.conj();
    let one = Complex64::new(1.0, 0.0);
    let prod = e.jab * e.jba;
    let reality = [e.jaa - mirror.jaa, e.jab - mirror.jab, e.jba - mirror.jba, e.jbb - mirror.jbb]
        .iter()
        .fold(0.0f64, |m, z| m.max(z.norm()));
    Ok(EntryResiduals {
        c34a: (e.jaa * e.jaa + prod + one).norm(),
        c34b: (e.jbb * e.jbb + prod + one).norm(),
        c35: (e.jaa * e.jbb.conj() - e.jba * e.jab.conj() - one).norm(),
        c36ab: (e.jab * (e.jaa + e.jbb)).norm(),
        c36ba: (e.jba * (e.jaa + e.jbb)).norm(),
        c32: (e.jaa * e.jba.conj()).im.abs(),
        c33: (e.jbb * e.jab.conj()).im.abs(),
        c32c: (e.jab * e.jba.conj()).im.abs(),
        reality,
        scale: e.max_norm().powi(2).max(1.0),
    })
}

fn entry_case(e: &JEntry, tol: f64) -> JCase {
    let small = |z: Complex64| z.norm() <= tol;
    let imag_unit = |z: Complex64| z.re.abs() <= tol && (z.im.abs() - 1.0).abs() <= tol;
    if small(e.jab) && small(e.jba) && imag_unit(e.jaa) && small(e.jaa - e.jbb) {
        JCase::Diagonal
    } else if [e.jaa, e.jab, e.jba, e.jbb].iter().all(|z| z.im.abs() <= tol)
        && small(e.jaa + e.jbb)
        && !small(e.jab)
    {
        JCase::Nondiagonal
    } else {
        JCase::Invalid
    }
}

/// Outcome of [`check_conditions`] over a grid of `(ω, l)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub reality_ok: bool,
    pub square_ok: bool,
    pub compat_ok: bool,
    pub offdiag_ok: bool,
    pub real_products_ok: bool,
    pub case: JCase,
    /// `jba > 0` and `jab < 0` everywhere, in the nondiagonal case.
    pub positivity_ok: bool,
    /// Largest value of each named residual over the grid.
    pub residuals: Vec<(String, f64)>,
}

impl ConditionReport {
    /// All algebraic conditions hold (positivity is separate).
    pub fn essential_ok(&self) -> bool {
        self.reality_ok && self.square_ok && self.compat_ok && self.offdiag_ok && self.real_products_ok
    }
}

/// [`check_conditions_tol`] with the default tolerance `1e-10`.
pub fn check_conditions(jf: &JFactors, grid: &[(f64, u32)]) -> Result<ConditionReport> {
    check_conditions_tol(jf, grid, COND_TOL)
}

/// Evaluates every condition at each grid point; residuals are compared with
/// `tol · max(1, max|j|²)`.
pub fn check_conditions_tol(jf: &JFactors, grid: &[(f64, u32)], tol: f64) -> Result<ConditionReport> {
    if grid.is_empty() {
        return Err(Error::Domain("empty grid".into()));
    }
    let mut max = [0.0f64; 9];
    let mut ok = [true; 9];
    let mut case: Option<JCase> = None;
    let mut positive = true;
    for &(w, l) in grid {
        let r = entry_residuals(jf, w, l)?;
        for (k, (_, v)) in r.named().iter().enumerate() {
            max[k] = max[k].max(*v);
            ok[k] &= *v <= tol * r.scale;
        }
        let e = jf.require(w, l)?;
        let c = entry_case(e, tol * r.scale.sqrt());
        case = Some(match case {
            None => c,
            Some(prev) if prev == c => c,
            Some(_) => JCase::Invalid,
        });
        positive &= e.jba.re > 0.0 && e.jab.re < 0.0;
    }
    let names = ["C34a", "C34b", "C35", "C36ab", "C36ba", "C32", "C33", "C32c", "reality"];
    let report_ok = |ks: &[usize]| ks.iter().all(|&k| ok[k]);
    let essential = ok.iter().all(|&b| b);
    let mut case = case.expect("grid not empty");
    if !essential {
        case = JCase::Invalid;
    }
    Ok(ConditionReport {
        reality_ok: report_ok(&[8]),
        square_ok: report_ok(&[0, 1]),
        compat_ok: report_ok(&[2]),
        offdiag_ok: report_ok(&[3, 4]),
        real_products_ok: report_ok(&[5, 6, 7]),
        case,
        positivity_ok: case == JCase::Nondiagonal && positive,
        residuals: names.iter().zip(max).map(|(n, v)| (n.to_string(), v)).collect(),
    })
}

/// `π R^{d-1} Σ_ω w Σ_L (2l+d-2) [jba |φ^a|² - jab |φ^b|² - 2 jaa Re(φ^a conj φ^b)]`
/// for a real field. This equals `ω_ρ(φ, Jφ)`; the real part of the sum is
/// returned.
pub fn g_rho(p: &AdSParams, jf: &JFactors, phi: &ModeVector) -> Result<f64> {
    if !is_real_solution(phi) {
        return Err(Error::NotReal);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (w, idx, (a, b)) in phi.entries() {
        idx.check_dim(p.d)?;
        let e = jf.require(w, idx.l())?;
        let weight = phi.node(w).expect("entries lie on the grid").weight;
        let term = e.jba * a.norm_sqr() - e.jab * b.norm_sqr() - e.jaa * (2.0 * (a * b.conj()).re);
        acc += term * (weight * p.l_weight(idx.l()));
    }
    Ok(acc.re * PI * p.r.powi(p.d as i32 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric(e: JEntry) -> JFactors {
        let mut jf = JFactors::new();
        jf.insert(0.5, 1, e);
        jf.insert(-0.5, 1, e.conj());
        jf
    }

    #[test]
    fn hand_examples() {
        let r = check_conditions(&symmetric(JEntry::real(0.0, -2.0, 0.5, 0.0)), &[(0.5, 1), (-0.5, 1)]).unwrap();
        assert!(r.essential_ok() && r.positivity_ok);
        assert_eq!(r.case, JCase::Nondiagonal);

        let r = check_conditions(&symmetric(JEntry::real(0.0, 1.0, 1.0, 0.0)), &[(0.5, 1)]).unwrap();
        assert!(!r.square_ok);
        assert_eq!(r.case, JCase::Invalid);
        assert!((r.residuals[0].1 - 2.0).abs() < 1e-15);

        let diag = JFactors::diagonal(&[(0.5, 1), (-0.5, 1)]).unwrap();
        let r = check_conditions(&diag, &[(0.5, 1), (-0.5, 1)]).unwrap();
        assert!(r.essential_ok() && !r.positivity_ok);
        assert_eq!(r.case, JCase::Diagonal);
    }

    #[test]
    fn missing_mirror_is_an_error() {
        let mut jf = JFactors::new();
        jf.insert(0.5, 1, JEntry::real(0.0, -1.0, 1.0, 0.0));
        assert!(matches!(check_conditions(&jf, &[(0.5, 1)]), Err(Error::Missing(_))));
    }
}
