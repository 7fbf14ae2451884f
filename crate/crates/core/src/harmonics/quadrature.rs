//! Tensor-product quadrature on `S^{d-1}`.
//!
//! `θ_2` uses Gauss-Legendre nodes in `cos θ_2`, where the measure is flat.
//! Each higher angle `θ_k` uses Gauss-Legendre nodes in `θ_k` itself with the
//! weight `sin^{k-1} θ_k` multiplied in; in `cos θ_k` that weight would be
//! `(1-x²)^{(k-2)/2}`, which is not polynomial for odd `k` and would cap the
//! accuracy near `1e-4`. The azimuth uses the trapezoid rule with `2·order`
//! points.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::eval::{norm_const, polar_factor_at};
use super::index::{MultiIndex, SphericalPoint};
use crate::error::{Error, Result};

/// Default number of Gauss-Legendre nodes per polar angle.
pub const DEFAULT_ORDER: usize = 24;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 0 { 1.0 } else { p1 };
            dp = n as f64 * (x * p - p0) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = x;
        nodes[n - 1 - i] = -x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Product rule on `S^{d-1}`.
#[derive(Debug, Clone)]
pub struct SphereQuadrature {
    pub d: usize,
    pub order: usize,
    /// Nodes `(θ, weight)` for `thetas[i]`, i.e. for `θ_{d-1-i}`.
    pub polar: Vec<Vec<(f64, f64)>>,
    /// Azimuthal nodes `(φ, weight)`.
    pub azimuth: Vec<(f64, f64)>,
}

impl SphereQuadrature {
    pub fn new(d: usize, order: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::Domain(format!("sphere quadrature needs d >= 3, got {d}")));
        }
        if order < 4 {
            return Err(Error::Domain(format!("quadrature order {order} below 4")));
        }
        let (x, w) = gauss_legendre(order);
        let mut polar = Vec::with_capacity(d - 2);
        for i in 0..(d - 2) {
            let k = d - 1 - i;
            let rule: Vec<(f64, f64)> = if k == 2 {
                x.iter().zip(&w).map(|(&xi, &wi)| (xi.acos(), wi)).collect()
            } else {
                x.iter()
                    .zip(&w)
                    .map(|(&xi, &wi)| {
                        let t = 0.5 * PI * (xi + 1.0);
                        (t, 0.5 * PI * wi * t.sin().powi(k as i32 - 1))
                    })
                    .collect()
            };
            polar.push(rule);
        }
        let nphi = 2 * order;
        let azimuth = (0..nphi).map(|j| (2.0 * PI * j as f64 / nphi as f64, 2.0 * PI / nphi as f64)).collect();
        Ok(SphereQuadrature { d, order, polar, azimuth })
    }

    /// Number of nodes in the product grid.
    pub fn len(&self) -> usize {
        self.polar.iter().map(Vec::len).product::<usize>() * self.azimuth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Calls `visit(point, weight)` for every node of the product grid.
    pub fn for_each(&self, mut visit: impl FnMut(&SphericalPoint, f64)) {
        let levels = self.polar.len();
        let mut counter = vec![0usize; levels];
        let mut point = SphericalPoint { thetas: vec![0.0; levels], phi: 0.0 };
        loop {
            let mut w = 1.0;
            for (i, &c) in counter.iter().enumerate() {
                let (t, wt) = self.polar[i][c];
                point.thetas[i] = t;
                w *= wt;
            }
            for &(phi, wp) in &self.azimuth {
                point.phi = phi;
                visit(&point, w * wp);
            }
            // odometer increment
            let mut pos = levels;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                counter[pos] += 1;
                if counter[pos] < self.polar[pos].len() {
                    break;
                }
                counter[pos] = 0;
            }
        }
    }

    /// `∫ f conj(g) dΩ`.
    pub fn inner(
        &self,
        f: &dyn Fn(&SphericalPoint) -> Complex64,
        g: &dyn Fn(&SphericalPoint) -> Complex64,
    ) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        self.for_each(|p, w| acc += f(p) * g(p).conj() * w);
        acc
    }

    /// Gram matrix `G_ij = ∫ f_i conj(f_j) dΩ` with every function evaluated
    /// once per node.
    pub fn gram(&self, funcs: &[&dyn Fn(&SphericalPoint) -> Complex64]) -> DMatrix<Complex64> {
        let n = funcs.len();
        let mut g = DMatrix::<Complex64>::zeros(n, n);
        let mut vals = vec![Complex64::new(0.0, 0.0); n];
        self.for_each(|p, w| {
            for (v, f) in vals.iter_mut().zip(funcs) {
                *v = f(p);
            }
            for i in 0..n {
                let wi = vals[i] * w;
                for j in 0..n {
                    g[(i, j)] += wi * vals[j].conj();
                }
            }
        });
        g
    }

    /// Gram matrix of harmonics, summed factor by factor. This is the same
    /// product-rule sum as [`SphereQuadrature::gram`], regrouped using the
    /// product structure of `Y_L`.
    pub fn harmonic_gram(&self, indices: &[MultiIndex]) -> Result<DMatrix<Complex64>> {
        let n = indices.len();
        let mut norms = Vec::with_capacity(n);
        let mut tables: Vec<Vec<Vec<f64>>> = Vec::with_capacity(n);
        for idx in indices {
            norms.push(norm_const(self.d, idx)?);
            let per_level: Vec<Vec<f64>> = self
                .polar
                .iter()
                .enumerate()
                .map(|(i, rule)| rule.iter().map(|&(t, _)| polar_factor_at(idx, i, t)).collect())
                .collect();
            tables.push(per_level);
        }
        let mut g = DMatrix::<Complex64>::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let mut v = Complex64::new(norms[a] * norms[b], 0.0);
                for (i, rule) in self.polar.iter().enumerate() {
                    let s: f64 = rule.iter().enumerate().map(|(j, &(_, w))| w * tables[a][i][j] * tables[b][i][j]).sum();
                    v *= s;
                }
                let dm = (indices[a].m - indices[b].m) as f64;
                let az: Complex64 = self.azimuth.iter().map(|&(phi, w)| Complex64::from_polar(w, dm * phi)).sum();
                v *= az;
                g[(a, b)] = v;
                g[(b, a)] = v.conj();
            }
        }
        Ok(g)
    }
}

/// `∫_{S^{d-1}} f conj(g) dΩ` with the product rule of the given order.
pub fn sphere_inner(
    d: usize,
    f: &dyn Fn(&SphericalPoint) -> Complex64,
    g: &dyn Fn(&SphericalPoint) -> Complex64,
    order: usize,
) -> Result<Complex64> {
    Ok(SphereQuadrature::new(d, order)?.inner(f, g))
}
