//! Flux direction of the closed-form radial modes.

use rayon::prelude::*;

use kgtube::ads_modes::{AdSParams, Channel};
use kgtube::flux::{mode_flux, radial_sample, RadialMode, Spacetime, Verdict};

use crate::config::{SpacetimeKind, SweepConfig};
use crate::error::{CliResult, Tally};
use crate::output::{Cell, Table};

/// Relative tolerance of the exact flat-limit flux `4ωR^{d-1}/p`.
pub const DEFAULT_TOL: f64 = 1e-9;

const COLUMNS: [(&str, &str); 9] = [
    ("mode", "radial function"),
    ("omega", "frequency"),
    ("l", "total angular momentum"),
    ("radius", "r in Minkowski space, rho in AdS"),
    ("flux", "energy flux per unit time through the sphere"),
    ("tolerance", "flux magnitude below which the mode counts as standing"),
    ("verdict", "outgoing, incoming or standing"),
    ("expected", "required verdict or flux check: standing, moving, exact or none"),
    ("status", "ok, undefined (mode not defined here) or the numeric error"),
];

fn modes(kind: SpacetimeKind, momentum: f64) -> Vec<(&'static str, RadialMode)> {
    match kind {
        SpacetimeKind::Minkowski => {
            vec![("hankel", RadialMode::Hankel), ("bessel", RadialMode::Bessel), ("neumann", RadialMode::Neumann)]
        }
        SpacetimeKind::AdS => vec![
            ("jacobi_a", RadialMode::Jacobi(Channel::A)),
            ("jacobi_b", RadialMode::Jacobi(Channel::B)),
            ("flat_limit", RadialMode::FlatLimit { p: momentum }),
        ],
    }
}

enum Check {
    Standing,
    Moving,
    Exact(f64),
}

pub fn run(cfg: &SweepConfig) -> CliResult<(Table, Tally)> {
    let (st, radius) = match cfg.spacetime {
        SpacetimeKind::Minkowski => (Spacetime::Minkowski { mass: cfg.mass }, cfg.r),
        SpacetimeKind::AdS => (Spacetime::AdS(AdSParams::new(cfg.d, cfg.delta, cfg.radius)?), cfg.rho),
    };
    let tol = cfg.tolerance.unwrap_or(DEFAULT_TOL);
    let tasks: Vec<(&'static str, RadialMode, f64, u32)> = modes(cfg.spacetime, cfg.momentum)
        .into_iter()
        .flat_map(|(name, m)| cfg.points().into_iter().map(move |(w, l)| (name, m, w, l)))
        .collect();
    let rows: Vec<(Vec<Cell>, Option<String>, Option<String>)> = tasks
        .par_iter()
        .map(|&(name, mode, w, l)| {
            let check = match mode {
                RadialMode::Hankel => Check::Moving,
                RadialMode::FlatLimit { p } if w != 0.0 => {
                    Check::Exact(4.0 * w * cfg.radius.powi(cfg.d as i32 - 1) / p)
                }
                _ => Check::Standing,
            };
            let head = vec![Cell::from(name), Cell::from(w), Cell::from(l), Cell::from(radius)];
            let label = format!("{name} at ω={w}, l={l}");
            let result = radial_sample(&st, mode, w, l, radius).and_then(|s| mode_flux(&st, w, &s));
            match result {
                Ok(v) => {
                    let verdict = serde_json::to_value(v.verdict).expect("verdict serialises");
                    let (expected, failure) = match check {
                        Check::Standing => {
                            ("standing", (v.verdict != Verdict::Standing).then(|| format!("{label} is not standing")))
                        }
                        Check::Moving => ("moving", (v.verdict == Verdict::Standing).then(|| format!("{label} is standing"))),
                        Check::Exact(want) => {
                            let off = (v.flux_per_time - want).abs() > tol * want.abs();
                            ("exact", off.then(|| format!("{label}: flux {} vs {want}", v.flux_per_time)))
                        }
                    };
                    let mut row = head;
                    row.extend([
                        Cell::from(v.flux_per_time),
                        Cell::from(v.tolerance),
                        Cell::from(verdict.as_str().unwrap_or("")),
                        Cell::from(expected),
                        Cell::from("ok"),
                    ]);
                    (row, failure, None)
                }
                Err(e) => {
                    let numeric = e.is_numeric_singularity();
                    let mut row = head;
                    row.extend([
                        Cell::Float(f64::NAN),
                        Cell::Float(f64::NAN),
                        Cell::from(""),
                        Cell::from("none"),
                        Cell::from(if numeric { e.to_string() } else { "undefined".to_string() }),
                    ]);
                    (row, None, numeric.then(|| format!("{label}: {e}")))
                }
            }
        })
        .collect();
    let mut table = Table::new(COLUMNS.to_vec());
    let mut tally = Tally::default();
    for (row, invariant, numeric) in rows {
        table.push(row);
        tally.invariant.extend(invariant);
        tally.numeric.extend(numeric);
    }
    Ok((table, tally))
}
