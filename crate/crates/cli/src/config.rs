//! Flags, the `key=value` config file, and the resolved [`SweepConfig`].
//! A flag given on the command line wins over the same key in the file.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::PathBuf;
use std::str::FromStr;

use clap::Args;

use crate::error::{CliResult, Failure};

/// Largest number of ω nodes a range may expand to.
const MAX_GRID: usize = 100_000;

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Flat `key=value` file; keys are the long flag names.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Spatial dimension of the AdS tube, or ambient dimension of the sphere.
    #[arg(long)]
    pub d: Option<usize>,
    /// Conformal weight Δ.
    #[arg(long)]
    pub delta: Option<f64>,
    /// AdS radius R.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Frequencies as `start:stop:step` or a single value; mirrored to ±ω.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    #[arg(long)]
    pub lmax: Option<u32>,
    /// Comma-separated subset of 1,2,3,4.
    #[arg(long)]
    pub candidates: Option<String>,
    /// `csv` or `json`.
    #[arg(long)]
    pub format: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub quadrature_order: Option<usize>,
    /// Tolerance of the invariant checks.
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Field mass in Minkowski space.
    #[arg(long)]
    pub mass: Option<f64>,
    /// Minkowski radius at which fluxes are evaluated.
    #[arg(long)]
    pub r: Option<f64>,
    /// AdS radial coordinate at which fluxes are evaluated.
    #[arg(long)]
    pub rho: Option<f64>,
    /// Momentum scale of the AdS flat-limit mode.
    #[arg(long)]
    pub momentum: Option<f64>,
    /// `minkowski` or `ads`.
    #[arg(long)]
    pub spacetime: Option<String>,
    /// Sphere points as `θ…,φ` groups separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub angles: Option<String>,
    /// j-factor preset: `diagonal` or `candidate`.
    #[arg(long)]
    pub preset: Option<String>,
    /// Diagonal entry used to complete a candidate.
    #[arg(long, allow_hyphen_values = true)]
    pub jaa: Option<f64>,
    /// j-factors in JSON, replacing the preset.
    #[arg(long)]
    pub jfactors: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (csv or json)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpacetimeKind {
    Minkowski,
    AdS,
}

impl FromStr for SpacetimeKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "minkowski" => Ok(SpacetimeKind::Minkowski),
            "ads" => Ok(SpacetimeKind::AdS),
            _ => Err(format!("unknown spacetime {s:?} (minkowski or ads)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Diagonal,
    Candidate,
}

impl FromStr for Preset {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "diagonal" => Ok(Preset::Diagonal),
            "candidate" => Ok(Preset::Candidate),
            _ => Err(format!("unknown preset {s:?} (diagonal or candidate)")),
        }
    }
}

/// Fully resolved settings; every field has a default.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub d: usize,
    pub delta: f64,
    pub radius: f64,
    /// Sorted and symmetric under ω → -ω.
    pub omega_grid: Vec<f64>,
    pub lmax: u32,
    pub candidates: Vec<u8>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub quadrature_order: usize,
    pub tolerance: Option<f64>,
    pub mass: f64,
    pub r: f64,
    pub rho: f64,
    pub momentum: f64,
    pub spacetime: SpacetimeKind,
    pub angles: Option<String>,
    pub preset: Preset,
    pub jaa: f64,
    pub jfactors: Option<PathBuf>,
}

/// Reads `key=value` lines; `#` starts a comment, blank lines are skipped.
pub fn parse_config_file(text: &str) -> CliResult<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Failure::config(format!("config line {}: expected key=value", n + 1)))?;
        let key = k.trim().replace('_', "-");
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(Failure::config(format!("config line {}: unknown key {key:?}", n + 1)));
        }
        out.insert(key, v.trim().to_string());
    }
    Ok(out)
}

const KNOWN_KEYS: [&str; 19] = [
    "d",
    "delta",
    "radius",
    "omega",
    "lmax",
    "candidates",
    "format",
    "out",
    "quadrature-order",
    "tolerance",
    "mass",
    "r",
    "rho",
    "momentum",
    "spacetime",
    "angles",
    "preset",
    "jaa",
    "jfactors",
];

/// The flag if given, else the parsed file value, else `None`.
fn pick<T>(flag: Option<T>, file: &BTreeMap<String, String>, key: &str) -> CliResult<Option<T>>
where
    T: FromStr,
    T::Err: Display,
{
    if flag.is_some() {
        return Ok(flag);
    }
    file.get(key)
        .map(|v| v.parse::<T>().map_err(|e| Failure::config(format!("config key {key}: {e}"))))
        .transpose()
}

fn parse_flag<T>(flag: Option<&String>, key: &str) -> CliResult<Option<T>>
where
    T: FromStr,
    T::Err: Display,
{
    flag.map(|v| v.parse::<T>().map_err(|e| Failure::config(format!("--{key}: {e}")))).transpose()
}

/// Expands `start:stop:step` (or a single value) and mirrors it to ±ω.
pub fn parse_omega_grid(spec: &str) -> CliResult<Vec<f64>> {
    let bad = |why: &str| Failure::config(format!("--omega {spec:?}: {why}"));
    let nums: Vec<f64> = spec
        .split(':')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad("expected numbers"))?;
    let mut grid = match nums[..] {
        [w] => vec![w],
        [start, stop, step] => {
            if !(step > 0.0) || !(stop >= start) {
                return Err(bad("need step > 0 and stop >= start"));
            }
            let n = ((stop - start) / step + 1e-9).floor();
            if !n.is_finite() || n >= MAX_GRID as f64 {
                return Err(bad("too many nodes"));
            }
            // snapping keeps 0.1-style steps from drifting off the decimal grid
            (0..=n as usize).map(|k| ((start + k as f64 * step) * 1e12).round() / 1e12).collect()
        }
        _ => return Err(bad("expected start:stop:step")),
    };
    if grid.iter().any(|w| !w.is_finite()) {
        return Err(bad("non-finite value"));
    }
    let mirrored: Vec<f64> = grid.iter().map(|w| if *w == 0.0 { 0.0 } else { -w }).collect();
    grid.extend(mirrored);
    grid.sort_by(f64::total_cmp);
    grid.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    Ok(grid)
}

fn parse_candidates(spec: &str) -> CliResult<Vec<u8>> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let c: u8 = part.trim().parse().map_err(|_| Failure::config(format!("--candidates: bad entry {part:?}")))?;
        if !(1..=4).contains(&c) {
            return Err(Failure::config(format!("--candidates: {c} not in 1..=4")));
        }
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort_unstable();
    Ok(out)
}

impl SweepConfig {
    pub fn resolve(flags: &Flags) -> CliResult<Self> {
        let file = match &flags.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::config(format!("cannot read config {}: {e}", path.display())))?;
                parse_config_file(&text)?
            }
            None => BTreeMap::new(),
        };
        let f = &file;
        let format = pick(parse_flag(flags.format.as_ref(), "format")?, f, "format")?.unwrap_or(Format::Csv);
        let spacetime = pick(parse_flag(flags.spacetime.as_ref(), "spacetime")?, f, "spacetime")?
            .unwrap_or(SpacetimeKind::Minkowski);
        let preset = pick(parse_flag(flags.preset.as_ref(), "preset")?, f, "preset")?.unwrap_or(Preset::Diagonal);
        let omega = pick(flags.omega.clone(), f, "omega")?.unwrap_or_else(|| "-2.5:2.5:1.0".into());
        let candidates = pick(flags.candidates.clone(), f, "candidates")?.unwrap_or_else(|| "1,2,3,4".into());
        let cfg = SweepConfig {
            d: pick(flags.d, f, "d")?.unwrap_or(3),
            delta: pick(flags.delta, f, "delta")?.unwrap_or(4.2),
            radius: pick(flags.radius, f, "radius")?.unwrap_or(1.0),
            omega_grid: parse_omega_grid(&omega)?,
            lmax: pick(flags.lmax, f, "lmax")?.unwrap_or(3),
            candidates: parse_candidates(&candidates)?,
            format,
            out: pick(flags.out.clone(), f, "out")?,
            quadrature_order: pick(flags.quadrature_order, f, "quadrature-order")?
                .unwrap_or(kgtube::harmonics::DEFAULT_ORDER),
            tolerance: pick(flags.tolerance, f, "tolerance")?,
            mass: pick(flags.mass, f, "mass")?.unwrap_or(0.0),
            r: pick(flags.r, f, "r")?.unwrap_or(5.0),
            rho: pick(flags.rho, f, "rho")?.unwrap_or(0.7),
            momentum: pick(flags.momentum, f, "momentum")?.unwrap_or(1.0),
            spacetime,
            angles: pick(flags.angles.clone(), f, "angles")?,
            preset,
            jaa: pick(flags.jaa, f, "jaa")?.unwrap_or(0.0),
            jfactors: pick(flags.jfactors.clone(), f, "jfactors")?,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> CliResult<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Failure::config(format!("--{name} must be positive and finite, got {v}")))
            }
        };
        positive("radius", self.radius)?;
        positive("r", self.r)?;
        positive("momentum", self.momentum)?;
        if !(self.rho > 0.0 && self.rho < std::f64::consts::FRAC_PI_2) {
            return Err(Failure::config(format!("--rho must lie in (0, π/2), got {}", self.rho)));
        }
        if !(self.mass >= 0.0 && self.mass.is_finite()) {
            return Err(Failure::config(format!("--mass must be non-negative, got {}", self.mass)));
        }
        if !self.delta.is_finite() || !self.jaa.is_finite() {
            return Err(Failure::config("--delta and --jaa must be finite"));
        }
        if let Some(t) = self.tolerance {
            positive("tolerance", t)?;
        }
        if self.quadrature_order == 0 {
            return Err(Failure::config("--quadrature-order must be at least 1"));
        }
        Ok(())
    }

    /// `(ω, l)` pairs ordered by ω, then l.
    pub fn points(&self) -> Vec<(f64, u32)> {
        self.omega_grid.iter().flat_map(|&w| (0..=self.lmax).map(move |l| (w, l))).collect()
    }
}
