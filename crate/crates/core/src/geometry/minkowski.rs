//! Poincaré generators of Minkowski spacetime in the spherical frame
//! `(t, r, ξ)` with `x^k = r ξ_k`, `|ξ| = 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which Minkowski generator to evaluate. Spatial labels run over `1..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinkowskiGenerator {
    /// `T_0 = ∂_t`.
    T0,
    /// `T_j = ∂_{x^j}`.
    T(usize),
    /// Rotation `K_{jk}`.
    K(usize, usize),
    /// Boost `K_{0k}`.
    Boost(usize),
}

/// Point `(t, r, ξ)` of Minkowski spacetime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalEvent {
    pub t: f64,
    pub r: f64,
    pub xi: [f64; 3],
}

impl SphericalEvent {
    pub fn new(t: f64, r: f64, xi: [f64; 3]) -> Result<Self> {
        if r <= 0.0 {
            return Err(Error::Domain(format!("radius must be positive, got {r}")));
        }
        let norm = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!("|ξ| = {norm}, expected 1")));
        }
        Ok(SphericalEvent { t, r, xi })
    }

    pub fn from_cartesian(x: [f64; 4]) -> Result<Self> {
        let r = (x[1] * x[1] + x[2] * x[2] + x[3] * x[3]).sqrt();
        if r == 0.0 {
            return Err(Error::Domain("the spherical frame is singular at r = 0".into()));
        }
        Ok(SphericalEvent { t: x[0], r, xi: [x[1] / r, x[2] / r, x[3] / r] })
    }

    /// `(θ, φ)` with `ξ = (sin θ cos φ, sin θ sin φ, cos θ)`.
    pub fn angles(&self) -> (f64, f64) {
        let [x, y, z] = self.xi;
        ((x * x + y * y).sqrt().atan2(z), y.atan2(x))
    }
}

/// Components `V = dt ∂_t + dr ∂_r + dxi_i ∂_{ξ_i}`, with `dxi` tangent to the
/// unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalComponents {
    pub dt: f64,
    pub dr: f64,
    pub dxi: [f64; 3],
}

impl SphericalComponents {
    /// Components on `(∂_θ, ∂_φ)`; undefined on the polar axis.
    pub fn angular(&self, ev: &SphericalEvent) -> Result<(f64, f64)> {
        let [x, y, _] = ev.xi;
        let rho2 = x * x + y * y;
        if rho2 < 1e-24 {
            return Err(Error::Domain("angular frame degenerates on the polar axis".into()));
        }
        let dtheta = -self.dxi[2] / rho2.sqrt();
        let dphi = (x * self.dxi[1] - y * self.dxi[0]) / rho2;
        Ok((dtheta, dphi))
    }
}

/// Projection `∂_{ξ_k} - ξ_k ξ_i ∂_{ξ_i}` onto the sphere.
fn tangent(xi: &[f64; 3], k: usize) -> [f64; 3] {
    let mut v = [0.0; 3];
    for (i, vi) in v.iter_mut().enumerate() {
        *vi = if i == k { 1.0 } else { 0.0 } - xi[k] * xi[i];
    }
    v
}

fn spatial(j: usize) -> Result<usize> {
    if (1..=3).contains(&j) {
        Ok(j - 1)
    } else {
        Err(Error::InvalidIndex(format!("spatial label {j} not in 1..=3")))
    }
}

/// Evaluates a Poincaré generator in the spherical frame:
/// `T_k = ξ_k ∂_r + (1/r) P_k`, `K_{jk} = ξ_j ∂_{ξ_k} - ξ_k ∂_{ξ_j}` and
/// `K_{0k} = -r ξ_k ∂_t - t ξ_k ∂_r - (t/r) P_k`, where `P_k` projects `∂_{ξ_k}`
/// onto the sphere.
pub fn minkowski_killing_spherical(kind: MinkowskiGenerator, ev: &SphericalEvent) -> Result<SphericalComponents> {
    if ev.r <= 0.0 {
        return Err(Error::Domain(format!("radius must be positive, got {}", ev.r)));
    }
    let xi = &ev.xi;
    let zero = SphericalComponents { dt: 0.0, dr: 0.0, dxi: [0.0; 3] };
    Ok(match kind {
        MinkowskiGenerator::T0 => SphericalComponents { dt: 1.0, ..zero },
        MinkowskiGenerator::T(k) => {
            let k = spatial(k)?;
            let p = tangent(xi, k);
            SphericalComponents { dt: 0.0, dr: xi[k], dxi: p.map(|v| v / ev.r) }
        }
        MinkowskiGenerator::K(j, k) => {
            let (j, k) = (spatial(j)?, spatial(k)?);
            let mut dxi = [0.0; 3];
            // ξ_j ∂_{ξ_k} - ξ_k ∂_{ξ_j} is already tangent
            dxi[k] += xi[j];
            dxi[j] -= xi[k];
            SphericalComponents { dxi, ..zero }
        }
        MinkowskiGenerator::Boost(k) => {
            let k = spatial(k)?;
            let p = tangent(xi, k);
            SphericalComponents { dt: -ev.r * xi[k], dr: -ev.t * xi[k], dxi: p.map(|v| -ev.t / ev.r * v) }
        }
    })
}

/// Pushes a cartesian vector `V^μ` at `x` into the spherical frame by the
/// chain rule `dr = ξ·V`, `dξ = (V - ξ(ξ·V))/r`.
pub fn cartesian_to_spherical(x: [f64; 4], v: &[f64]) -> Result<(SphericalEvent, SphericalComponents)> {
    let ev = SphericalEvent::from_cartesian(x)?;
    let vs = [v[1], v[2], v[3]];
    let dr: f64 = ev.xi.iter().zip(&vs).map(|(a, b)| a * b).sum();
    let mut dxi = [0.0; 3];
    for i in 0..3 {
        dxi[i] = (vs[i] - ev.xi[i] * dr) / ev.r;
    }
    Ok((ev, SphericalComponents { dt: v[0], dr, dxi }))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::geometry::killing::{killing_field, translation, Signature};

    #[test]
    fn time_translation() {
        let ev = SphericalEvent::new(1.0, 2.0, [0.0, 0.0, 1.0]).unwrap();
        let c = minkowski_killing_spherical(MinkowskiGenerator::T0, &ev).unwrap();
        assert_eq!(c, SphericalComponents { dt: 1.0, dr: 0.0, dxi: [0.0; 3] });
    }

    #[test]
    fn k12_is_azimuthal() {
        let (th, ph) = (1.1f64, 0.4f64);
        let ev = SphericalEvent::new(0.3, 1.5, [th.sin() * ph.cos(), th.sin() * ph.sin(), th.cos()]).unwrap();
        let c = minkowski_killing_spherical(MinkowskiGenerator::K(1, 2), &ev).unwrap();
        let (dth, dph) = c.angular(&ev).unwrap();
        assert!(dth.abs() < 1e-15 && (dph - 1.0).abs() < 1e-15);
        assert_eq!((c.dt, c.dr), (0.0, 0.0));
    }

    #[test]
    fn k23_angular_form() {
        // ξ_2 ∂_{ξ_3} - ξ_3 ∂_{ξ_2} = -sin φ ∂_θ - cot θ cos φ ∂_φ on the unit sphere
        let (th, ph) = (0.8f64, 2.3f64);
        let ev = SphericalEvent::new(0.0, 1.0, [th.sin() * ph.cos(), th.sin() * ph.sin(), th.cos()]).unwrap();
        let c = minkowski_killing_spherical(MinkowskiGenerator::K(2, 3), &ev).unwrap();
        let (dth, dph) = c.angular(&ev).unwrap();
        assert!((dth + ph.sin()).abs() < 1e-14);
        assert!((dph + ph.cos() / th.tan()).abs() < 1e-14);
    }

    #[test]
    fn matches_cartesian_pushforward() {
        let sig = Signature::minkowski();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (th, ph) = (rng.gen_range(0.1..PI - 0.1), rng.gen_range(0.0..2.0 * PI));
            let r = rng.gen_range(0.2..5.0);
            let t = rng.gen_range(-3.0..3.0);
            let x = [t, r * th.sin() * ph.cos(), r * th.sin() * ph.sin(), r * th.cos()];
            let mut cases = vec![(translation(&sig, 0).unwrap(), MinkowskiGenerator::T0)];
            for k in 1..=3 {
                cases.push((translation(&sig, k).unwrap(), MinkowskiGenerator::T(k)));
                cases.push((killing_field(&sig, 0, k).unwrap(), MinkowskiGenerator::Boost(k)));
                for j in 1..=3 {
                    if j != k {
                        cases.push((killing_field(&sig, j, k).unwrap(), MinkowskiGenerator::K(j, k)));
                    }
                }
            }
            for (field, kind) in cases {
                let (ev, pushed) = cartesian_to_spherical(x, &field.eval(&x)).unwrap();
                let direct = minkowski_killing_spherical(kind, &ev).unwrap();
                assert!((pushed.dt - direct.dt).abs() < 1e-12, "{kind:?}");
                assert!((pushed.dr - direct.dr).abs() < 1e-12, "{kind:?}");
                for i in 0..3 {
                    assert!((pushed.dxi[i] - direct.dxi[i]).abs() < 1e-12, "{kind:?}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SphericalEvent::new(0.0, 0.0, [0.0, 0.0, 1.0]).is_err());
        assert!(SphericalEvent::new(0.0, 1.0, [0.0, 0.5, 0.5]).is_err());
        let ev = SphericalEvent { t: 0.0, r: 0.0, xi: [0.0, 0.0, 1.0] };
        assert!(minkowski_killing_spherical(MinkowskiGenerator::T0, &ev).is_err());
        let ev = SphericalEvent::new(0.0, 1.0, [0.0, 0.0, 1.0]).unwrap();
        assert!(minkowski_killing_spherical(MinkowskiGenerator::T(4), &ev).is_err());
    }
}
