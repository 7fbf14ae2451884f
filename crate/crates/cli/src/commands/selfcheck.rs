//! A quick invariant suite over every library module.

use std::f64::consts::PI;

use rayon::prelude::*;

use kgtube::ads_complex_structure::{
    boost_recurrence_residual, candidate_jab, check_conditions, jfactors_from_candidate, CANDIDATES,
};
use kgtube::ads_modes::{radial_wronskian, AdSParams};
use kgtube::flux::{mode_flux, radial_sample, RadialMode, Spacetime, Verdict};
use kgtube::geometry::{structure_check, Signature};
use kgtube::harmonics::{indices_up_to, Rotation, RotationBlock, SphereQuadrature, DEFAULT_ORDER};
use kgtube::specfun::{gamma, hyp2f1, sph_h1, sph_j, sph_n};
use kgtube::structures::{classify_subspace, FiniteSymplecticSpace};
use kgtube::nalgebra::DVector;
use kgtube::{Complex64, JFactors, SubspaceKind};

use crate::error::{CliResult, Tally};
use crate::output::{Cell, Table};

type Outcome = kgtube::Result<(bool, String)>;

struct Check {
    module: &'static str,
    name: &'static str,
    run: fn() -> Outcome,
}

fn max_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, f64::max)
}

fn gamma_values() -> Outcome {
    let err = max_of([(gamma(5.0)? - 24.0).abs() / 24.0, (gamma(0.5)? - PI.sqrt()).abs() / PI.sqrt()]);
    let pole = gamma(-2.0).is_err();
    Ok((err < 1e-14 && pole, format!("max rel error {err:.2e}, pole rejected: {pole}")))
}

/// `j_l n_{l-1} - j_{l-1} n_l = 1/x²` and `h1 = j + i n`.
fn bessel_identities() -> Outcome {
    let mut worst: f64 = 0.0;
    for l in 1..8 {
        for x in [0.3, 2.0, 7.5, 30.0] {
            let w = sph_j(l, x)? * sph_n(l - 1, x)? - sph_j(l - 1, x)? * sph_n(l, x)?;
            worst = worst.max((w * x * x - 1.0).abs());
            let h = sph_h1(l, x)?;
            let jn = Complex64::new(sph_j(l, x)?, sph_n(l, x)?);
            worst = worst.max((h - jn).norm() / jn.norm());
        }
    }
    Ok((worst < 1e-10, format!("max rel error {worst:.2e}")))
}

/// `2F1(1,1;2;z) = -ln(1-z)/z`.
fn hypergeometric_closed_form() -> Outcome {
    let err = max_of(
        [0.1, 0.5, 0.9]
            .iter()
            .map(|&z| hyp2f1(1.0, 1.0, 2.0, z).map(|v| (v + (1.0 - z).ln() / z).abs()))
            .collect::<kgtube::Result<Vec<_>>>()?,
    );
    Ok((err < 1e-12, format!("max error {err:.2e}")))
}

fn harmonic_orthonormality() -> Outcome {
    let mut worst: f64 = 0.0;
    for d in [3, 4] {
        let idx = indices_up_to(d, 3);
        let g = SphereQuadrature::new(d, DEFAULT_ORDER)?.harmonic_gram(&idx)?;
        for a in 0..idx.len() {
            for b in 0..idx.len() {
                worst = worst.max((g[(a, b)] - if a == b { 1.0 } else { 0.0 }).norm());
            }
        }
    }
    Ok((worst < 1e-8, format!("max Gram defect {worst:.2e}")))
}

/// The quadrature rotation block is unitary and matches the Euler-angle form.
fn rotation_blocks() -> Outcome {
    let (a1, a2, a3) = (0.4, 1.1, -0.7);
    let mut worst: f64 = 0.0;
    for l in 0..=3 {
        let q = RotationBlock::by_quadrature(3, l, &Rotation::zyz(a1, a2, a3), DEFAULT_ORDER)?;
        let w = RotationBlock::wigner_zyz(l, a1, a2, a3);
        let diff = max_of((&q.matrix - &w.matrix).iter().map(|z| z.norm()));
        worst = worst.max(q.unitarity_defect()).max(diff);
    }
    Ok((worst < 1e-10, format!("max defect {worst:.2e}")))
}

fn killing_algebra() -> Outcome {
    let mut brackets = 0;
    let mut mismatches = 0;
    for (p, q) in [(0, 3), (1, 3), (2, 2)] {
        let r = structure_check(&Signature::new(p, q)?)?;
        brackets += r.brackets_checked;
        mismatches += r.mismatches.len();
    }
    Ok((mismatches == 0, format!("{brackets} brackets, {mismatches} mismatches")))
}

/// Coordinate planes of the standard 4-dimensional space: `{q1, q2}` is
/// Lagrangian, `{q1, p1}` symplectic, `{q1}` isotropic.
fn subspace_kinds() -> Outcome {
    let sp = FiniteSymplecticSpace::standard(2);
    let e = |i: usize| DVector::from_fn(4, |k, _| if k == i { 1.0 } else { 0.0 });
    let kinds = [
        classify_subspace(&sp, &[e(0), e(1)])?.kind,
        classify_subspace(&sp, &[e(0), e(2)])?.kind,
        classify_subspace(&sp, &[e(0)])?.kind,
    ];
    let ok = kinds == [SubspaceKind::Lagrangian, SubspaceKind::Symplectic, SubspaceKind::Isotropic];
    Ok((ok, format!("{kinds:?}")))
}

/// `tan^{d-1}ρ W[S^a, S^b] = -(2l+d-2)`.
fn radial_wronskian_constant() -> Outcome {
    let mut worst: f64 = 0.0;
    for (d, delta) in [(3usize, 4.2), (5, 3.1)] {
        let p = AdSParams::new(d, delta, 1.0)?;
        for l in 0..3u32 {
            for rho in [0.3, 0.8] {
                let w = radial_wronskian(&p, 1.3, l, rho)?;
                let want = -(2.0 * l as f64 + d as f64 - 2.0);
                worst = worst.max((w - want).abs() / want.abs());
            }
        }
    }
    Ok((worst < 1e-10, format!("max rel error {worst:.2e}")))
}

fn candidate_recurrences() -> Outcome {
    let p = AdSParams::new(3, 4.2, 1.0)?;
    let mut worst: f64 = 0.0;
    for c in CANDIDATES {
        let jab = |w: f64, l: u32| candidate_jab(c, &p, w, l).map(|v| Complex64::new(v, 0.0));
        for w in [-1.65, 0.15, 0.95, 2.35] {
            for l in 0..3 {
                worst = worst.max(boost_recurrence_residual(&p, &jab, w, l)?.max_rel());
            }
        }
    }
    Ok((worst < 1e-10, format!("max rel residual {worst:.2e}")))
}

/// The diagonal preset solves the conditions but is never positive; a
/// completed candidate solves them as well.
fn condition_system() -> Outcome {
    let grid: Vec<(f64, u32)> =
        [-1.5, -0.5, 0.5, 1.5].iter().flat_map(|&w| (0..3).map(move |l| (w, l))).collect();
    let diag = check_conditions(&JFactors::diagonal(&grid)?, &grid)?;
    let p = AdSParams::new(3, 4.2, 1.0)?;
    let cand = check_conditions(&jfactors_from_candidate(1, &p, &grid, 0.3)?, &grid)?;
    let ok = diag.essential_ok() && !diag.positivity_ok && cand.essential_ok();
    Ok((ok, format!("diagonal {:?}, candidate {:?}", diag.case, cand.case)))
}

fn flux_directions() -> Outcome {
    let mink = Spacetime::Minkowski { mass: 0.5 };
    let h = mode_flux(&mink, 2.0, &radial_sample(&mink, RadialMode::Hankel, 2.0, 1, 4.0)?)?;
    let j = mode_flux(&mink, 2.0, &radial_sample(&mink, RadialMode::Bessel, 2.0, 1, 4.0)?)?;
    let ads = Spacetime::AdS(AdSParams::new(3, 4.2, 1.5)?);
    let f = mode_flux(&ads, 1.3, &radial_sample(&ads, RadialMode::FlatLimit { p: 0.8 }, 1.3, 2, 0.6)?)?;
    let want = 4.0 * 1.3 * 1.5f64.powi(2) / 0.8;
    let err = (f.flux_per_time - want).abs() / want;
    let ok = h.verdict != Verdict::Standing && j.verdict == Verdict::Standing && err < 1e-10;
    Ok((ok, format!("hankel {:?}, bessel {:?}, flat-limit rel error {err:.2e}", h.verdict, j.verdict)))
}

const CHECKS: [Check; 11] = [
    Check { module: "specfun", name: "gamma", run: gamma_values },
    Check { module: "specfun", name: "bessel_identities", run: bessel_identities },
    Check { module: "specfun", name: "hyp2f1_closed_form", run: hypergeometric_closed_form },
    Check { module: "harmonics", name: "orthonormality", run: harmonic_orthonormality },
    Check { module: "harmonics", name: "rotation_blocks", run: rotation_blocks },
    Check { module: "geometry", name: "killing_algebra", run: killing_algebra },
    Check { module: "structures", name: "subspace_kinds", run: subspace_kinds },
    Check { module: "ads_modes", name: "radial_wronskian", run: radial_wronskian_constant },
    Check { module: "ads_complex_structure", name: "candidate_recurrences", run: candidate_recurrences },
    Check { module: "ads_complex_structure", name: "condition_system", run: condition_system },
    Check { module: "flux", name: "directions", run: flux_directions },
];

pub fn run() -> CliResult<(Table, Tally)> {
    let results: Vec<Outcome> = CHECKS.par_iter().map(|c| (c.run)()).collect();
    let mut table =
        Table::new(vec![("module", "library module"), ("check", "check name"), ("passed", "true if it held"), ("detail", "measured values")]);
    let mut tally = Tally::default();
    let mut passed = 0;
    for (c, r) in CHECKS.iter().zip(results) {
        let (ok, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
        eprintln!("{} {}::{}: {detail}", if ok { "PASS" } else { "FAIL" }, c.module, c.name);
        if ok {
            passed += 1;
        } else {
            tally.invariant.push(format!("{}::{}", c.module, c.name));
        }
        table.push(vec![Cell::from(c.module), Cell::from(c.name), Cell::from(ok), Cell::from(detail)]);
    }
    eprintln!("{passed} passed, {} failed", CHECKS.len() - passed);
    Ok((table, tally))
}
