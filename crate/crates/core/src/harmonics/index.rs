//! Angular multi-indices and points on `S^{d-1}`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multi-index `(l_{d-1}, …, l_2; m)` of a hyperspherical harmonic on
/// `S^{d-1}`. `levels` is stored top level first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex {
    pub levels: Vec<u32>,
    pub m: i64,
}

impl MultiIndex {
    /// Builds and validates `l_{d-1} >= … >= l_2 >= |m|`.
    pub fn new(levels: Vec<u32>, m: i64) -> Result<Self> {
        let idx = MultiIndex { levels, m };
        idx.check()?;
        Ok(idx)
    }

    fn check(&self) -> Result<()> {
        if self.levels.is_empty() {
            return Err(Error::InvalidIndex("empty level list".into()));
        }
        if self.levels.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidIndex(format!("levels {:?} not non-increasing", self.levels)));
        }
        if self.m.unsigned_abs() > *self.levels.last().unwrap() as u64 {
            return Err(Error::InvalidIndex(format!("|m| = {} exceeds l_2 in {:?}", self.m.abs(), self.levels)));
        }
        Ok(())
    }

    /// Validates the index for harmonics on `S^{d-1}`.
    pub fn check_dim(&self, d: usize) -> Result<()> {
        self.check()?;
        if d < 3 || self.levels.len() != d - 2 {
            return Err(Error::InvalidIndex(format!(
                "{} levels do not fit dimension d = {d}",
                self.levels.len()
            )));
        }
        Ok(())
    }

    /// Ambient dimension `d` for which the index is shaped.
    pub fn dim(&self) -> usize {
        self.levels.len() + 2
    }

    /// Total angular momentum `l = l_{d-1}`.
    pub fn l(&self) -> u32 {
        self.levels[0]
    }

    /// Second level `l_{d-2}`, or `|m|` when `d = 3`.
    pub fn l_sub(&self) -> u32 {
        self.levels.get(1).copied().unwrap_or(self.m.unsigned_abs() as u32)
    }

    /// The index with `m` negated, labelling the complex conjugate harmonic.
    pub fn conj(&self) -> MultiIndex {
        MultiIndex { levels: self.levels.clone(), m: -self.m }
    }

    /// Same sub-index with top level replaced, if still valid.
    pub fn with_top(&self, l: i64) -> Option<MultiIndex> {
        if l < 0 {
            return None;
        }
        let mut levels = self.levels.clone();
        levels[0] = l as u32;
        MultiIndex::new(levels, self.m).ok()
    }
}

/// All multi-indices on `S^{d-1}` with top level `l`, in ascending order.
pub fn indices_with_top(d: usize, l: u32) -> Vec<MultiIndex> {
    fn rec(depth: usize, bound: u32, acc: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if depth == 0 {
            let l2 = *acc.last().unwrap() as i64;
            for m in -l2..=l2 {
                out.push(MultiIndex { levels: acc.clone(), m });
            }
            return;
        }
        for v in 0..=bound {
            acc.push(v);
            rec(depth - 1, v, acc, out);
            acc.pop();
        }
    }
    assert!(d >= 3, "harmonics need d >= 3");
    let mut out = Vec::new();
    let mut acc = vec![l];
    rec(d - 3, l, &mut acc, &mut out);
    out.sort();
    out
}

/// All multi-indices on `S^{d-1}` with `l <= lmax`.
pub fn indices_up_to(d: usize, lmax: u32) -> Vec<MultiIndex> {
    (0..=lmax).flat_map(|l| indices_with_top(d, l)).collect()
}

/// Point on `S^{d-1}` in hyperspherical angles `(θ_{d-1}, …, θ_2; φ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalPoint {
    /// `θ_{d-1}, …, θ_2`, each in `[0, π]`.
    pub thetas: Vec<f64>,
    /// Azimuth in `[0, 2π)`.
    pub phi: f64,
}

impl SphericalPoint {
    pub fn new(thetas: Vec<f64>, phi: f64) -> Result<Self> {
        if thetas.is_empty() {
            return Err(Error::Domain("need at least one polar angle".into()));
        }
        if thetas.iter().any(|t| !(0.0..=PI).contains(t)) {
            return Err(Error::Domain(format!("polar angles {thetas:?} outside [0, π]")));
        }
        Ok(SphericalPoint { thetas, phi: phi.rem_euclid(2.0 * PI) })
    }

    pub fn dim(&self) -> usize {
        self.thetas.len() + 2
    }

    /// Unit vector `(x_1, …, x_d)` with `x_d = cos θ_{d-1}` and
    /// `(x_1, x_2) ∝ (cos φ, sin φ)`.
    pub fn to_cartesian(&self) -> Vec<f64> {
        let d = self.dim();
        let mut x = vec![0.0; d];
        let mut s = 1.0;
        for (i, t) in self.thetas.iter().enumerate() {
            x[d - 1 - i] = s * t.cos();
            s *= t.sin();
        }
        x[1] = s * self.phi.sin();
        x[0] = s * self.phi.cos();
        x
    }

    /// Inverse of [`SphericalPoint::to_cartesian`]; the input need not be normalised.
    pub fn from_cartesian(x: &[f64]) -> Result<Self> {
        let d = x.len();
        if d < 3 {
            return Err(Error::Domain("need d >= 3".into()));
        }
        let mut thetas = Vec::with_capacity(d - 2);
        // θ_k = atan2(|(x_1..x_k)|, x_{k+1}) for k = d-1 … 2
        let mut partial: Vec<f64> = Vec::with_capacity(d);
        let mut acc = 0.0;
        for v in x {
            acc += v * v;
            partial.push(acc.sqrt());
        }
        if partial[d - 1] == 0.0 {
            return Err(Error::Domain("zero vector has no direction".into()));
        }
        for k in (2..d).rev() {
            thetas.push(partial[k - 1].atan2(x[k]));
        }
        let phi = x[1].atan2(x[0]).rem_euclid(2.0 * PI);
        Ok(SphericalPoint { thetas, phi })
    }
}
