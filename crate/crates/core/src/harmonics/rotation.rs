//! Rotations of `R^d` and their matrices on spaces of harmonics with fixed `l`.
//!
//! For a rotation `R` the block `D` is defined by
//! `Y_L(R⁻¹Ω) = Σ_{L'} D_{L'L} Y_{L'}(Ω)`, so `D(R₁R₂) = D(R₁) D(R₂)` and `D` is
//! unitary. It is computed either by quadrature for any `d`, or for `d = 3`
//! from Euler angles and the small-d matrix.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::eval::eval_harmonic;
use super::index::{indices_with_top, MultiIndex, SphericalPoint};
use super::quadrature::SphereQuadrature;
use crate::error::{Error, Result};
use crate::specfun::gamma::factorial;

/// Orthogonal matrix acting on cartesian points by `x' = R x`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rotation {
    pub matrix: DMatrix<f64>,
}

impl Rotation {
    pub fn identity(d: usize) -> Self {
        Rotation { matrix: DMatrix::identity(d, d) }
    }

    /// Rotation in the `(i, j)` plane: `R_ii = R_jj = cos a`, `R_ij = sin a`,
    /// `R_ji = -sin a`.
    pub fn plane(d: usize, i: usize, j: usize, angle: f64) -> Result<Self> {
        if i >= d || j >= d || i == j {
            return Err(Error::Domain(format!("plane ({i}, {j}) invalid in dimension {d}")));
        }
        let (s, c) = angle.sin_cos();
        let mut m = DMatrix::identity(d, d);
        m[(i, i)] = c;
        m[(j, j)] = c;
        m[(i, j)] = s;
        m[(j, i)] = -s;
        Ok(Rotation { matrix: m })
    }

    /// ZYZ Euler rotation of `R³`: `R₃(α₃) R₂(α₂) R₁(α₁)` where `R₁` and `R₃`
    /// turn the `(x₁, x₂)` plane and `R₂` the `(x₃, x₁)` plane.
    pub fn zyz(a1: f64, a2: f64, a3: f64) -> Self {
        let r1 = Rotation::plane(3, 0, 1, a1).unwrap();
        let r2 = Rotation::plane(3, 2, 0, a2).unwrap();
        let r3 = Rotation::plane(3, 0, 1, a3).unwrap();
        r3.compose(&r2).compose(&r1)
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Rotation) -> Rotation {
        Rotation { matrix: &self.matrix * &other.matrix }
    }

    pub fn inverse(&self) -> Rotation {
        Rotation { matrix: self.matrix.transpose() }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let v = &self.matrix * nalgebra::DVector::from_column_slice(x);
        v.iter().copied().collect()
    }

    pub fn apply_point(&self, p: &SphericalPoint) -> SphericalPoint {
        SphericalPoint::from_cartesian(&self.apply(&p.to_cartesian())).expect("rotation preserves the norm")
    }
}

fn fact(n: i64) -> f64 {
    factorial(n as u32)
}

/// Small-d matrix `d^l_{m'm}(β)`; row and column `i` correspond to `m = i - l`.
pub fn wigner_small_d(l: u32, beta: f64) -> DMatrix<f64> {
    let li = l as i64;
    let n = 2 * l as usize + 1;
    let (s, c) = (beta / 2.0).sin_cos();
    DMatrix::from_fn(n, n, |r, col| {
        let mp = r as i64 - li;
        let m = col as i64 - li;
        let pre = (fact(li + mp) * fact(li - mp) * fact(li + m) * fact(li - m)).sqrt();
        let mut acc = 0.0;
        for k in (m - mp).max(0)..=(li + m).min(li - mp) {
            let den = fact(li + m - k) * fact(k) * fact(li - k - mp) * fact(k - m + mp);
            let sign = if (k - m + mp).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            acc += sign * pre / den * c.powi((2 * li - 2 * k + m - mp) as i32) * s.powi((2 * k - m + mp) as i32);
        }
        acc
    })
}

/// `D` restricted to the harmonics of `S^{d-1}` with top level `l`.
#[derive(Debug, Clone)]
pub struct RotationBlock {
    pub d: usize,
    pub l: u32,
    /// Basis order of rows and columns.
    pub indices: Vec<MultiIndex>,
    pub matrix: DMatrix<Complex64>,
}

impl RotationBlock {
    pub fn identity(d: usize, l: u32) -> Self {
        let indices = indices_with_top(d, l);
        let n = indices.len();
        RotationBlock { d, l, indices, matrix: DMatrix::identity(n, n) }
    }

    /// `D_{L'L} = ∫ conj(Y_{L'}(Ω)) Y_L(R⁻¹Ω) dΩ`.
    pub fn by_quadrature(d: usize, l: u32, rot: &Rotation, order: usize) -> Result<Self> {
        if rot.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, got: rot.dim() });
        }
        let quad = SphereQuadrature::new(d, order)?;
        let inv = rot.inverse();
        let indices = indices_with_top(d, l);
        let n = indices.len();
        let mut m = DMatrix::<Complex64>::zeros(n, n);
        let mut here = vec![Complex64::new(0.0, 0.0); n];
        let mut moved = vec![Complex64::new(0.0, 0.0); n];
        let mut err = None;
        quad.for_each(|p, w| {
            let q = inv.apply_point(p);
            for (i, idx) in indices.iter().enumerate() {
                match (eval_harmonic(d, idx, p), eval_harmonic(d, idx, &q)) {
                    (Ok(a), Ok(b)) => {
                        here[i] = a.conj() * w;
                        moved[i] = b;
                    }
                    (Err(e), _) | (_, Err(e)) => err = Some(e),
                }
            }
            for r in 0..n {
                for c in 0..n {
                    m[(r, c)] += here[r] * moved[c];
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        Ok(RotationBlock { d, l, indices, matrix: m })
    }

    /// The block of `Rotation::zyz(a1, a2, a3)` on `S²`, assembled from the
    /// Euler phases and the small-d matrix.
    ///
    /// With `W_{m'm} = e^{-im'a1} d_{m'm}(a2) e^{-ima3}` this is `E W^H E`, where
    /// `E = diag((-1)^m)` on `m < 0` and `1` otherwise. `E` accounts for using
    /// `P^{|m|}` for negative `m`; the adjoint reflects that `D` is built from
    /// `R⁻¹`.
    pub fn wigner_zyz(l: u32, a1: f64, a2: f64, a3: f64) -> Self {
        let li = l as i64;
        let small = wigner_small_d(l, a2);
        let n = small.nrows();
        let e = |m: i64| if m < 0 && m % 2 != 0 { -1.0 } else { 1.0 };
        let matrix = DMatrix::from_fn(n, n, |r, c| {
            let mp = r as i64 - li;
            let m = c as i64 - li;
            // entry (r, c) of W^H is conj(W_{c r})
            let w = Complex64::from_polar(small[(c, r)], -(m as f64) * a1 - (mp as f64) * a3);
            w.conj() * (e(mp) * e(m))
        });
        RotationBlock { d: 3, l, indices: indices_with_top(3, l), matrix }
    }

    /// Product block of `self ∘ other`.
    pub fn compose(&self, other: &RotationBlock) -> Result<RotationBlock> {
        if self.indices != other.indices {
            return Err(Error::DimensionMismatch { expected: self.indices.len(), got: other.indices.len() });
        }
        Ok(RotationBlock { d: self.d, l: self.l, indices: self.indices.clone(), matrix: &self.matrix * &other.matrix })
    }

    /// Deviation of `D D^H` from the identity (max-abs entry).
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.matrix.nrows();
        let p = &self.matrix * self.matrix.adjoint();
        (p - DMatrix::<Complex64>::identity(n, n)).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Coefficients `c'` with `Σ c'_L Y_L(Ω) = Σ c_L Y_L(RΩ)` for the rotation `R`
/// whose block is `block`; this is `c' = D^H c`.
pub fn rotate_coeffs(d: usize, l: u32, block: &RotationBlock, coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if block.d != d || block.l != l {
        return Err(Error::Domain(format!("block is for (d={}, l={}), not (d={d}, l={l})", block.d, block.l)));
    }
    let n = block.indices.len();
    if coeffs.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: coeffs.len() });
    }
    let c = nalgebra::DVector::from_column_slice(coeffs);
    Ok((block.matrix.adjoint() * c).iter().copied().collect())
}
