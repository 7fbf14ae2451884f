//! Energy-momentum tensor of a Klein-Gordon field on a diagonal metric.
//!
//! The tensor is the minimal part plus `b` times the improvement part,
//! simplified with the field equation. Both signature conventions are
//! accepted: the sign of `g_00` decides whether the field equation reads
//! `□φ = -m²φ` (time-positive) or `□φ = m²φ` (time-negative).

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Diagonal metric and Christoffel symbols at one spacetime point.
/// Index 0 is the time coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalMetricPoint {
    g_diag: Vec<f64>,
    christoffel: Vec<f64>,
}

impl DiagonalMetricPoint {
    /// Metric with the given diagonal and vanishing Christoffel symbols.
    pub fn new(g_diag: Vec<f64>) -> Result<Self> {
        if g_diag.is_empty() {
            return Err(Error::Domain("metric needs at least one dimension".into()));
        }
        if let Some(g) = g_diag.iter().find(|g| **g == 0.0 || !g.is_finite()) {
            return Err(Error::Domain(format!("diagonal metric entry {g} is not invertible")));
        }
        let n = g_diag.len();
        Ok(DiagonalMetricPoint { g_diag, christoffel: vec![0.0; n * n * n] })
    }

    /// Flat metric in spherical coordinates `(t, r, θ, φ)` at radius `r` and
    /// polar angle `θ`. `time_sign = 1` gives `(+,-,-,-)`, `-1` gives `(-,+,+,+)`.
    pub fn minkowski_spherical(r: f64, theta: f64, time_sign: f64) -> Result<Self> {
        let s = -time_sign.signum();
        let (st, ct) = theta.sin_cos();
        let mut g = DiagonalMetricPoint::new(vec![time_sign.signum(), s, s * r * r, s * r * r * st * st])?;
        g.set_christoffel(1, 2, 2, -r);
        g.set_christoffel(1, 3, 3, -r * st * st);
        g.set_christoffel(2, 1, 2, 1.0 / r);
        g.set_christoffel(2, 3, 3, -st * ct);
        g.set_christoffel(3, 1, 3, 1.0 / r);
        g.set_christoffel(3, 2, 3, ct / st);
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.g_diag.len()
    }

    pub fn g(&self, mu: usize) -> f64 {
        self.g_diag[mu]
    }

    pub fn g_inv(&self, mu: usize) -> f64 {
        1.0 / self.g_diag[mu]
    }

    /// `+1` when the time direction has positive norm.
    pub fn time_sign(&self) -> f64 {
        self.g_diag[0].signum()
    }

    /// `Γ^α_{μν}`.
    pub fn christoffel(&self, alpha: usize, mu: usize, nu: usize) -> f64 {
        let n = self.dim();
        self.christoffel[(alpha * n + mu) * n + nu]
    }

    /// Sets `Γ^α_{μν} = Γ^α_{νμ} = value`.
    pub fn set_christoffel(&mut self, alpha: usize, mu: usize, nu: usize, value: f64) {
        let n = self.dim();
        self.christoffel[(alpha * n + mu) * n + nu] = value;
        self.christoffel[(alpha * n + nu) * n + mu] = value;
    }
}

/// Value, gradient and coordinate Hessian of a real field at a point.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiJet {
    pub value: f64,
    pub grad: DVector<f64>,
    pub hess: DMatrix<f64>,
}

impl PhiJet {
    pub fn new(value: f64, grad: DVector<f64>, hess: DMatrix<f64>) -> Self {
        PhiJet { value, grad, hess }
    }
}

/// `T_{μν}` for improvement coefficient `b`.
///
/// With `s` the sign of `g_00`:
/// `T = (1-b)∂φ∂φ + (b-½) g (g^{αβ}∂_αφ∂_βφ) + s(½-b) g m²φ² - b φ ∇_μ∇_νφ + (b/2) R_{μν} φ²`,
/// where `∇_μ∇_νφ = ∂_μ∂_νφ - Γ^α_{μν}∂_αφ`. The jet must come from an
/// on-shell solution. `ricci = None` means a Ricci-flat background.
pub fn em_tensor(
    b: f64,
    jet: &PhiJet,
    m: f64,
    metric: &DiagonalMetricPoint,
    ricci: Option<&DMatrix<f64>>,
) -> Result<DMatrix<f64>> {
    let n = metric.dim();
    if jet.grad.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: jet.grad.len() });
    }
    if jet.hess.shape() != (n, n) {
        return Err(Error::DimensionMismatch { expected: n, got: jet.hess.nrows() });
    }
    if let Some(r) = ricci {
        if r.shape() != (n, n) {
            return Err(Error::DimensionMismatch { expected: n, got: r.nrows() });
        }
    }
    let phi = jet.value;
    let d = &jet.grad;
    let kinetic: f64 = (0..n).map(|a| metric.g_inv(a) * d[a] * d[a]).sum();
    let mass_term = metric.time_sign() * (0.5 - b) * m * m * phi * phi;
    Ok(DMatrix::from_fn(n, n, |mu, nu| {
        let mut t = (1.0 - b) * d[mu] * d[nu];
        if mu == nu {
            t += metric.g(mu) * ((b - 0.5) * kinetic + mass_term);
        }
        let gamma_d: f64 = (0..n).map(|a| metric.christoffel(a, mu, nu) * d[a]).sum();
        t -= b * phi * (jet.hess[(mu, nu)] - gamma_d);
        if let Some(r) = ricci {
            t += 0.5 * b * r[(mu, nu)] * phi * phi;
        }
        t
    }))
}

/// Momentum density along coordinate `rho` seen by a static observer:
/// `-T_{tρ} √|g^{tt} g^{ρρ}|`.
pub fn radial_momentum_density(t: &DMatrix<f64>, metric: &DiagonalMetricPoint, time: usize, rho: usize) -> f64 {
    -t[(time, rho)] * (metric.g_inv(time) * metric.g_inv(rho)).abs().sqrt()
}
