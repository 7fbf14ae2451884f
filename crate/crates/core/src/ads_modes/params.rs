//! AdS parameters and the hypergeometric parameters of the radial modes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Spatial dimension `d`, mass parameter `Δ` and curvature radius `R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdSParams {
    pub d: usize,
    pub delta: f64,
    pub r: f64,
}

impl AdSParams {
    /// Validates `d >= 3`, `R > 0` and the guard `Δ > (d-1)/2`.
    pub fn new(d: usize, delta: f64, r: f64) -> Result<Self> {
        if d < 3 {
            return Err(Error::Domain(format!("AdS tube needs d >= 3, got {d}")));
        }
        if !(r > 0.0 && r.is_finite()) {
            return Err(Error::Domain(format!("curvature radius must be positive, got {r}")));
        }
        if !(delta.is_finite() && delta > (d as f64 - 1.0) / 2.0) {
            return Err(Error::Domain(format!("Δ = {delta} must exceed (d-1)/2 = {}", (d as f64 - 1.0) / 2.0)));
        }
        Ok(AdSParams { d, delta, r })
    }

    /// `Δ = d/2 + √(d²/4 + m²R²)`, the usual conformal weight of a field of
    /// mass `m`.
    pub fn from_mass(mass: f64, r: f64, d: usize) -> Result<Self> {
        let df = d as f64;
        AdSParams::new(d, df / 2.0 + (df * df / 4.0 + mass * mass * r * r).sqrt(), r)
    }

    /// `(2l + d - 2)`, the weight of angular momentum `l` in `ω_ρ`.
    pub fn l_weight(&self, l: u32) -> f64 {
        (2 * l as usize + self.d - 2) as f64
    }
}

/// Parameters of the two radial channels at fixed `(ω, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HypergeoParams {
    pub alpha_a: f64,
    pub beta_a: f64,
    pub alpha_b: f64,
    pub beta_b: f64,
    /// `γ = l + d/2`; channel `b` uses `2 - γ`.
    pub gamma: f64,
}

impl HypergeoParams {
    pub fn one_minus_alpha_a(&self) -> f64 {
        1.0 - self.alpha_a
    }
    pub fn one_minus_beta_a(&self) -> f64 {
        1.0 - self.beta_a
    }
    pub fn one_minus_alpha_b(&self) -> f64 {
        1.0 - self.alpha_b
    }
    pub fn one_minus_beta_b(&self) -> f64 {
        1.0 - self.beta_b
    }
}

pub fn hypergeo_params(p: &AdSParams, omega: f64, l: u32) -> HypergeoParams {
    let (dl, d, l) = (p.delta, p.d as f64, l as f64);
    HypergeoParams {
        alpha_a: 0.5 * (dl - omega + l),
        beta_a: 0.5 * (dl + omega + l),
        alpha_b: 0.5 * (dl - omega - l - d + 2.0),
        beta_b: 0.5 * (dl + omega - l - d + 2.0),
        gamma: l + d / 2.0,
    }
}
