//! Symplectic potential and symplectic structure of Klein-Gordon solutions on
//! an equal-time slice of flat spacetime, by quadrature on a periodic box.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Uniform periodic grid on a box `[0, L_1) × … × [0, L_n)`, `n ∈ {1, 2, 3}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxGrid {
    pub shape: Vec<usize>,
    pub lengths: Vec<f64>,
}

impl BoxGrid {
    pub fn new(shape: Vec<usize>, lengths: Vec<f64>) -> Result<Self> {
        if shape.is_empty() || shape.len() > 3 || shape.len() != lengths.len() {
            return Err(Error::Domain(format!("box grid needs 1-3 matching dims, got {shape:?} / {lengths:?}")));
        }
        if shape.contains(&0) || lengths.iter().any(|&l| l <= 0.0 || !l.is_finite()) {
            return Err(Error::Domain("box grid needs positive sizes".into()));
        }
        Ok(BoxGrid { shape, lengths })
    }

    pub fn len(&self) -> usize {
        self.shape.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn volume(&self) -> f64 {
        self.lengths.iter().product()
    }

    /// Node coordinates in row-major order.
    pub fn nodes(&self) -> Vec<Vec<f64>> {
        let mut out = Vec::with_capacity(self.len());
        let mut idx = vec![0usize; self.shape.len()];
        for _ in 0..self.len() {
            out.push(idx.iter().enumerate().map(|(k, &i)| i as f64 * self.lengths[k] / self.shape[k] as f64).collect());
            for k in (0..idx.len()).rev() {
                idx[k] += 1;
                if idx[k] < self.shape[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
        out
    }
}

/// Field value and time derivative on the nodes of a [`BoxGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    pub grid: BoxGrid,
    pub values: Vec<Complex64>,
    pub dt_values: Vec<Complex64>,
}

impl SampledField {
    /// Samples `f(x) = (φ(x), ∂_tφ(x))` on the grid.
    pub fn sample(grid: &BoxGrid, f: impl Fn(&[f64]) -> (Complex64, Complex64)) -> Self {
        let (values, dt_values) = grid.nodes().iter().map(|x| f(x)).unzip();
        SampledField { grid: grid.clone(), values, dt_values }
    }
}

/// Overall sign of the metric; `MostlyPlus` is `(-,+,+,+)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MetricSign {
    #[default]
    MostlyPlus,
    MostlyMinus,
}

impl MetricSign {
    /// `g_00`, which for flat space also equals `g^{tt}`.
    fn g00(self) -> f64 {
        match self {
            MetricSign::MostlyPlus => -1.0,
            MetricSign::MostlyMinus => 1.0,
        }
    }
}

fn orientation_sign(orientation: i32) -> Result<f64> {
    match orientation {
        1 => Ok(1.0),
        -1 => Ok(-1.0),
        o => Err(Error::Domain(format!("orientation must be ±1, got {o}"))),
    }
}

/// `θ_η(ζ) = -s · sign(g_00) ∫ √|g| g^{tt} ζ ∂_tη`, trapezoid rule on the
/// periodic box. `s` is the orientation of the slice.
pub fn theta(eta: &SampledField, zeta: &SampledField, orientation: i32, metric: MetricSign) -> Result<Complex64> {
    if eta.grid != zeta.grid || eta.values.len() != zeta.values.len() {
        return Err(Error::GridMismatch);
    }
    let s = orientation_sign(orientation)?;
    let g = metric.g00();
    let cell = eta.grid.volume() / eta.grid.len() as f64;
    let sum: Complex64 = zeta.values.iter().zip(&eta.dt_values).map(|(z, de)| z * de).sum();
    Ok(sum * (-s * g.signum() * g * cell))
}

/// `(θ_η(ζ), ω(η, ζ))` with `ω(η, ζ) = ½(θ_η(ζ) - θ_ζ(η))` on a mostly-plus
/// metric.
pub fn theta_omega_quadrature(eta: &SampledField, zeta: &SampledField, orientation: i32) -> Result<(Complex64, Complex64)> {
    theta_omega_quadrature_with(eta, zeta, orientation, MetricSign::MostlyPlus)
}

/// As [`theta_omega_quadrature`] for either overall metric sign; the result
/// does not depend on it.
pub fn theta_omega_quadrature_with(
    eta: &SampledField,
    zeta: &SampledField,
    orientation: i32,
    metric: MetricSign,
) -> Result<(Complex64, Complex64)> {
    let te = theta(eta, zeta, orientation, metric)?;
    let tz = theta(zeta, eta, orientation, metric)?;
    Ok((te, 0.5 * (te - tz)))
}
