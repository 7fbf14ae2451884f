//! Harmonic values at chosen points, ladder coefficients, and an
//! orthonormality check at the requested quadrature order.

use std::f64::consts::PI;

use rayon::prelude::*;

use kgtube::harmonics::{eval_harmonic, indices_up_to, ladder_coeffs, SphereQuadrature};
use kgtube::{MultiIndex, SphericalPoint};

use crate::config::SweepConfig;
use crate::error::{CliResult, Failure, Tally};
use crate::output::{Cell, Table};

pub const DEFAULT_TOL: f64 = 1e-8;

const COLUMNS: [(&str, &str); 11] = [
    ("point", "index of the sample point"),
    ("angles", "polar angles top first, then phi, separated by spaces"),
    ("levels", "levels l_{d-1} .. l_2 separated by spaces"),
    ("m", "azimuthal number"),
    ("re", "real part of Y"),
    ("im", "imaginary part of Y"),
    ("chi_minus", "cos(theta) Y_l coefficient of Y_{l-1}"),
    ("chi_plus", "cos(theta) Y_l coefficient of Y_{l+1}"),
    ("delta_minus", "(1-cos^2) d/dcos Y_l coefficient of Y_{l-1}"),
    ("delta_plus", "(1-cos^2) d/dcos Y_l coefficient of Y_{l+1}"),
    ("gram_defect", "max |<Y_L, Y_L'> - delta| over this row's index"),
];

/// Default points: a few generic directions away from the coordinate poles.
fn default_points(d: usize) -> Vec<SphericalPoint> {
    [(0.4, 0.3), (1.3, 2.1), (2.6, 4.9)]
        .iter()
        .map(|&(t, phi)| {
            let thetas = (0..d - 2).map(|k| (t + 0.37 * k as f64).rem_euclid(PI)).collect();
            SphericalPoint::new(thetas, phi).expect("angles lie in range")
        })
        .collect()
}

fn parse_points(spec: &str, d: usize) -> CliResult<Vec<SphericalPoint>> {
    spec.split(';')
        .map(|group| {
            let nums: Vec<f64> = group
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::config(format!("--angles: bad point {group:?}")))?;
            if nums.len() != d - 1 {
                return Err(Failure::config(format!(
                    "--angles: point {group:?} needs {} polar angles and phi",
                    d - 2
                )));
            }
            let (phi, thetas) = nums.split_last().expect("non-empty");
            Ok(SphericalPoint::new(thetas.to_vec(), *phi)?)
        })
        .collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn run(cfg: &SweepConfig) -> CliResult<(Table, Tally)> {
    let d = cfg.d;
    if d < 3 {
        return Err(Failure::config(format!("harmonics need d >= 3, got {d}")));
    }
    let points = match &cfg.angles {
        Some(spec) => parse_points(spec, d)?,
        None => default_points(d),
    };
    let indices: Vec<MultiIndex> = indices_up_to(d, cfg.lmax);
    let quad = SphereQuadrature::new(d, cfg.quadrature_order)?;
    let gram = quad.harmonic_gram(&indices)?;
    let defect: Vec<f64> = (0..indices.len())
        .map(|a| {
            (0..indices.len())
                .map(|b| (gram[(a, b)] - if a == b { 1.0 } else { 0.0 }).norm())
                .fold(0.0, f64::max)
        })
        .collect();

    let tasks: Vec<(usize, usize)> =
        (0..points.len()).flat_map(|p| (0..indices.len()).map(move |i| (p, i))).collect();
    let rows: Vec<Vec<Cell>> = tasks
        .par_iter()
        .map(|&(pi, ii)| {
            let (pt, idx) = (&points[pi], &indices[ii]);
            let y = eval_harmonic(d, idx, pt)?;
            let lc = ladder_coeffs(d, idx.l(), idx.l_sub())?;
            let mut angles = pt.thetas.clone();
            angles.push(pt.phi);
            Ok(vec![
                Cell::Int(pi as i64),
                Cell::from(join(&angles.iter().map(|a| Cell::from(*a).render()).collect::<Vec<_>>())),
                Cell::from(join(&idx.levels)),
                Cell::Int(idx.m),
                Cell::from(y.re),
                Cell::from(y.im),
                Cell::from(lc.chi_minus),
                Cell::from(lc.chi_plus),
                Cell::from(lc.delta_minus),
                Cell::from(lc.delta_plus),
                Cell::from(defect[ii]),
            ])
        })
        .collect::<Result<_, kgtube::Error>>()?;

    let mut table = Table::new(COLUMNS.to_vec());
    rows.into_iter().for_each(|r| table.push(r));
    let tol = cfg.tolerance.unwrap_or(DEFAULT_TOL);
    let mut tally = Tally::default();
    let worst = defect.iter().copied().fold(0.0, f64::max);
    if worst > tol {
        tally.invariant.push(format!(
            "orthonormality defect {worst:.3e} exceeds {tol:.1e} at quadrature order {}",
            cfg.quadrature_order
        ));
    }
    Ok((table, tally))
}
