//! Per-point condition reports for a set of j-factors.

use rayon::prelude::*;

use kgtube::ads_complex_structure::{check_conditions_tol, jfactors_from_candidate, COND_TOL};
use kgtube::ads_modes::AdSParams;
use kgtube::JFactors;

use crate::config::{Preset, SweepConfig};
use crate::error::{CliResult, Failure, Tally};
use crate::output::{Cell, Table};

const FLAGS: [(&str, &str); 7] = [
    ("omega", "frequency"),
    ("l", "total angular momentum"),
    ("case", "diagonal, nondiagonal or invalid"),
    ("reality", "j(-omega) = conj j(omega)"),
    ("square", "J^2 = -1 on both channels"),
    ("compatibility", "compatibility with the symplectic form"),
    ("offdiagonal", "off-diagonal part of J^2 vanishes"),
];

const RESIDUALS: [(&str, &str); 9] = [
    ("res_C34a", "|jaa^2 + jab jba + 1|"),
    ("res_C34b", "|jbb^2 + jab jba + 1|"),
    ("res_C35", "|jaa conj(jbb) - jba conj(jab) - 1|"),
    ("res_C36ab", "|jab (jaa + jbb)|"),
    ("res_C36ba", "|jba (jaa + jbb)|"),
    ("res_C32", "|Im(jaa conj(jba))|"),
    ("res_C33", "|Im(jbb conj(jab))|"),
    ("res_C32c", "|Im(jab conj(jba))|"),
    ("res_reality", "max |j(-omega) - conj j(omega)|"),
];

fn columns() -> Vec<(&'static str, &'static str)> {
    let mut c = FLAGS.to_vec();
    c.push(("real_products", "the required products are real"));
    c.push(("positivity", "jba > 0 and jab < 0 (nondiagonal case only)"));
    c.extend(RESIDUALS);
    c
}

fn load(cfg: &SweepConfig) -> CliResult<JFactors> {
    let points = cfg.points();
    if let Some(path) = &cfg.jfactors {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Failure::config(format!("{}: {e}", path.display())))?;
        return Ok(JFactors::from_json(&value)?);
    }
    match cfg.preset {
        Preset::Diagonal => {
            if cfg.omega_grid.contains(&0.0) {
                return Err(Failure::config("the diagonal preset is undefined at omega = 0; choose a grid without it"));
            }
            Ok(JFactors::diagonal(&points)?)
        }
        Preset::Candidate => {
            let p = AdSParams::new(cfg.d, cfg.delta, cfg.radius)?;
            let which = cfg.candidates[0];
            Ok(jfactors_from_candidate(which, &p, &points, cfg.jaa)?)
        }
    }
}

pub fn run(cfg: &SweepConfig) -> CliResult<(Table, Tally)> {
    let jf = load(cfg)?;
    let tol = cfg.tolerance.unwrap_or(COND_TOL);
    let points = cfg.points();
    let reports: Vec<_> = points
        .par_iter()
        .map(|&(w, l)| check_conditions_tol(&jf, &[(w, l)], tol))
        .collect::<Result<_, _>>()?;
    let mut table = Table::new(columns());
    let mut tally = Tally::default();
    for (&(w, l), r) in points.iter().zip(&reports) {
        let case = serde_json::to_value(r.case).expect("case serialises");
        let mut row = vec![
            Cell::from(w),
            Cell::from(l),
            Cell::from(case.as_str().unwrap_or("invalid")),
            Cell::from(r.reality_ok),
            Cell::from(r.square_ok),
            Cell::from(r.compat_ok),
            Cell::from(r.offdiag_ok),
            Cell::from(r.real_products_ok),
            Cell::from(r.positivity_ok),
        ];
        row.extend(r.residuals.iter().map(|(_, v)| Cell::from(*v)));
        table.push(row);
        if !r.essential_ok() {
            tally.invariant.push(format!("conditions fail at ω={w}, l={l}"));
        }
    }
    Ok((table, tally))
}
