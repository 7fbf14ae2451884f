//! Values, signs and boost-recurrence residuals of the Gamma candidates.

use kgtube::Complex64;
use rayon::prelude::*;

use kgtube::ads_complex_structure::{boost_recurrence_residual, candidate_jab, complete_nondiagonal};
use kgtube::ads_modes::AdSParams;

use crate::config::SweepConfig;
use crate::error::{CliResult, Tally};
use crate::output::{Cell, Table};

pub const DEFAULT_TOL: f64 = 1e-10;

const COLUMNS: [(&str, &str); 11] = [
    ("candidate", "candidate number 1..4"),
    ("omega", "frequency"),
    ("l", "total angular momentum"),
    ("jab", "candidate value of jab(omega, l)"),
    ("sign_jab", "sign of jab: -1, 0 or 1"),
    ("jba", "completed jba = -(1 + jaa^2)/jab"),
    ("boost_minus", "relative residual of the omega-1, l+1 recurrence"),
    ("boost_plus", "relative residual of the omega+1, l+1 recurrence"),
    ("boost_residual", "larger of boost_minus and boost_plus"),
    ("within_tolerance", "boost_residual <= tolerance"),
    ("status", "ok, or the numeric error hit at this point"),
];

pub fn run(cfg: &SweepConfig) -> CliResult<(Table, Tally)> {
    let p = AdSParams::new(cfg.d, cfg.delta, cfg.radius)?;
    let tol = cfg.tolerance.unwrap_or(DEFAULT_TOL);
    let tasks: Vec<(u8, f64, u32)> =
        cfg.candidates.iter().flat_map(|&c| cfg.points().into_iter().map(move |(w, l)| (c, w, l))).collect();
    let rows: Vec<(Vec<Cell>, Option<String>, Option<String>)> = tasks
        .par_iter()
        .map(|&(c, w, l)| {
            let jab = |w: f64, l: u32| candidate_jab(c, &p, w, l).map(|v| Complex64::new(v, 0.0));
            let outcome = candidate_jab(c, &p, w, l).and_then(|v| {
                let entry = complete_nondiagonal(v, cfg.jaa)?;
                let r = boost_recurrence_residual(&p, &jab, w, l)?;
                Ok((v, entry.jba.re, r))
            });
            let head = vec![Cell::Int(c as i64), Cell::from(w), Cell::from(l)];
            match outcome {
                Ok((v, jba, r)) => {
                    let ok = r.max_rel() <= tol;
                    let mut row = head;
                    row.extend([
                        Cell::from(v),
                        Cell::Int(if v > 0.0 { 1 } else if v < 0.0 { -1 } else { 0 }),
                        Cell::from(jba),
                        Cell::from(r.minus_rel),
                        Cell::from(r.plus_rel),
                        Cell::from(r.max_rel()),
                        Cell::from(ok),
                        Cell::from("ok"),
                    ]);
                    let fail = (!ok).then(|| format!("candidate {c} at ω={w}, l={l}: residual {:.3e}", r.max_rel()));
                    (row, fail, None)
                }
                Err(e) => {
                    let mut row = head;
                    row.extend((0..6).map(|_| Cell::Float(f64::NAN)));
                    row.extend([Cell::from(false), Cell::from(e.to_string())]);
                    let what = format!("candidate {c} at ω={w}, l={l}: {e}");
                    if e.is_numeric_singularity() {
                        (row, None, Some(what))
                    } else {
                        (row, Some(what), None)
                    }
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
