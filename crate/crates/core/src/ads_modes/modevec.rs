//! Mode vectors of the S-expansion, the symplectic structure `ω_ρ` and the
//! action of time translations and rotations.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::params::AdSParams;
use crate::error::{Error, Result};
use crate::harmonics::{MultiIndex, RotationBlock};

/// Frequencies closer than this are identified.
pub const FREQ_TOL: f64 = 1e-12;
/// Tolerance of the reality predicate.
pub const REALITY_TOL: f64 = 1e-12;

/// Totally ordered frequency key.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Omega(pub f64);

impl PartialEq for Omega {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Omega {}
impl PartialOrd for Omega {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Omega {
    fn cmp(&self, other: &Self) -> Ordering {
        // -0.0 and 0.0 are the same frequency
        (self.0 + 0.0).total_cmp(&(other.0 + 0.0))
    }
}

/// Node of the frequency grid with its quadrature weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FreqNode {
    pub omega: f64,
    pub weight: f64,
}

/// Channel pair `(a, b)` of a mode coefficient.
pub type Pair = (Complex64, Complex64);

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// Finite set of S-expansion coefficients `(ω, L) → (a, b)` on a symmetric
/// frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeVector {
    grid: Vec<FreqNode>,
    entries: BTreeMap<(Omega, MultiIndex), Pair>,
}

impl ModeVector {
    /// Empty mode vector; the grid must be symmetric under `ω → -ω` with equal,
    /// positive weights.
    pub fn new(mut grid: Vec<FreqNode>) -> Result<Self> {
        grid.sort_by_key(|n| Omega(n.omega));
        for n in &grid {
            if !(n.weight > 0.0 && n.weight.is_finite() && n.omega.is_finite()) {
                return Err(Error::Domain(format!("grid node {n:?} needs a finite ω and positive weight")));
            }
            match grid.iter().find(|m| (m.omega + n.omega).abs() <= FREQ_TOL) {
                Some(m) if (m.weight - n.weight).abs() <= 1e-12 * n.weight => {}
                _ => return Err(Error::Domain(format!("grid is not symmetric at ω = {}", n.omega))),
            }
        }
        if grid.windows(2).any(|w| (w[1].omega - w[0].omega).abs() <= FREQ_TOL) {
            return Err(Error::Domain("duplicate frequencies in grid".into()));
        }
        Ok(ModeVector { grid, entries: BTreeMap::new() })
    }

    /// Grid `{k·step : |k·step| <= max}` with weight `step` at every node.
    pub fn uniform_grid(step: f64, max: f64) -> Result<Vec<FreqNode>> {
        if !(step > 0.0 && max >= 0.0) {
            return Err(Error::Domain(format!("uniform grid needs step > 0 and max >= 0 (step={step}, max={max})")));
        }
        let n = (max / step + 1e-9).floor() as i64;
        Ok((-n..=n).map(|k| FreqNode { omega: k as f64 * step, weight: step }).collect())
    }

    pub fn grid(&self) -> &[FreqNode] {
        &self.grid
    }

    /// Grid node matching `omega`, if any.
    pub fn node(&self, omega: f64) -> Option<FreqNode> {
        self.grid.iter().copied().find(|n| (n.omega - omega).abs() <= FREQ_TOL)
    }

    fn snap(&self, omega: f64) -> Result<f64> {
        self.node(omega).map(|n| n.omega).ok_or_else(|| Error::Missing(format!("ω = {omega} not on the grid")))
    }

    /// Dimension `d` shared by all indices, if any entry exists.
    pub fn index_dim(&self) -> Option<usize> {
        self.entries.keys().next().map(|(_, l)| l.dim())
    }

    pub fn set(&mut self, omega: f64, idx: MultiIndex, a: Complex64, b: Complex64) -> Result<()> {
        let w = self.snap(omega)?;
        if let Some(d) = self.index_dim() {
            idx.check_dim(d)?;
        }
        self.entries.insert((Omega(w), idx), (a, b));
        Ok(())
    }

    /// Coefficients at `(ω, L)`, zero when absent.
    pub fn get(&self, omega: f64, idx: &MultiIndex) -> Pair {
        match self.node(omega) {
            Some(n) => self.entries.get(&(Omega(n.omega), idx.clone())).copied().unwrap_or((ZERO, ZERO)),
            None => (ZERO, ZERO),
        }
    }

    /// Entries in `(ω, L)` order.
    pub fn entries(&self) -> impl Iterator<Item = (f64, &MultiIndex, Pair)> {
        self.entries.iter().map(|((w, l), v)| (w.0, l, *v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Same grid, entries mapped by `f`.
    pub fn map(&self, mut f: impl FnMut(f64, &MultiIndex, Pair) -> Result<Pair>) -> Result<ModeVector> {
        let mut out = ModeVector { grid: self.grid.clone(), entries: BTreeMap::new() };
        for ((w, l), v) in &self.entries {
            out.entries.insert((*w, l.clone()), f(w.0, l, *v)?);
        }
        Ok(out)
    }

    /// Coefficients of the complex-conjugate field: `(ω, L) ↦ conj` of the
    /// entry at `(-ω, L with -m)`.
    pub fn conjugate(&self) -> ModeVector {
        let mut out = ModeVector { grid: self.grid.clone(), entries: BTreeMap::new() };
        for ((w, l), (a, b)) in &self.entries {
            out.entries.insert((Omega(-w.0 + 0.0), l.conj()), (a.conj(), b.conj()));
        }
        out
    }

    /// `self + c · other` on a common grid.
    pub fn add_scaled(&self, c: Complex64, other: &ModeVector) -> Result<ModeVector> {
        check_grids(self, other)?;
        let mut out = self.clone();
        for ((w, l), (a, b)) in &other.entries {
            let e = out.entries.entry((*w, l.clone())).or_insert((ZERO, ZERO));
            e.0 += c * a;
            e.1 += c * b;
        }
        Ok(out)
    }

    /// `½(φ + conj φ)`, a real field.
    pub fn real_part(&self) -> ModeVector {
        self.add_scaled(Complex64::new(1.0, 0.0), &self.conjugate())
            .expect("same grid")
            .map(|_, _, (a, b)| Ok((a * 0.5, b * 0.5)))
            .expect("infallible")
    }

    /// Largest coefficient modulus.
    pub fn max_norm(&self) -> f64 {
        self.entries.values().fold(0.0, |m, (a, b)| m.max(a.norm()).max(b.norm()))
    }
}

fn check_grids(a: &ModeVector, b: &ModeVector) -> Result<()> {
    if a.grid.len() != b.grid.len()
        || a.grid.iter().zip(&b.grid).any(|(x, y)| (x.omega - y.omega).abs() > FREQ_TOL || x.weight != y.weight)
    {
        return Err(Error::GridMismatch);
    }
    Ok(())
}

/// `ω_ρ(η, ζ) = π R^{d-1} Σ_ω w(ω) Σ_L (2l+d-2)
/// [η^a(ω,L) ζ^b(-ω,L̄) - η^b(ω,L) ζ^a(-ω,L̄)]`, with `L̄` the index with `-m`.
pub fn omega_rho(p: &AdSParams, eta: &ModeVector, zeta: &ModeVector) -> Result<Complex64> {
    check_grids(eta, zeta)?;
    let mut acc = ZERO;
    for ((w, l), (ea, eb)) in &eta.entries {
        l.check_dim(p.d)?;
        let weight = eta.node(w.0).expect("entries lie on the grid").weight;
        let (za, zb) = zeta.get(-w.0, &l.conj());
        acc += (ea * zb - eb * za) * (weight * p.l_weight(l.l()));
    }
    Ok(acc * PI * p.r.powi(p.d as i32 - 1))
}

/// Isometry acting on mode vectors.
#[derive(Debug, Clone)]
pub enum Isometry {
    /// Time translation by `Δt`.
    TimeTranslation(f64),
    /// Rotation given by its blocks for each `l` that occurs.
    Rotation(BTreeMap<u32, RotationBlock>),
}

/// Applies an isometry. A time translation multiplies both channels by
/// `e^{iωΔt}`; a rotation maps `a ↦ D a`, `b ↦ D b` within each `l`, the
/// coefficients of `φ(R⁻¹Ω)`.
pub fn act_isometry(action: &Isometry, phi: &ModeVector) -> Result<ModeVector> {
    match action {
        Isometry::TimeTranslation(dt) => {
            phi.map(|w, _, (a, b)| {
                let ph = Complex64::from_polar(1.0, w * dt);
                Ok((a * ph, b * ph))
            })
        }
        Isometry::Rotation(blocks) => {
            let mut out = ModeVector { grid: phi.grid.clone(), entries: BTreeMap::new() };
            for ((w, l), (a, b)) in &phi.entries {
                let block = blocks.get(&l.l()).ok_or_else(|| Error::Missing(format!("rotation block for l = {}", l.l())))?;
                let col = block
                    .indices
                    .iter()
                    .position(|i| i == l)
                    .ok_or_else(|| Error::Missing(format!("index {l:?} in rotation block")))?;
                for (row, target) in block.indices.iter().enumerate() {
                    let dv = block.matrix[(row, col)];
                    let e = out.entries.entry((*w, target.clone())).or_insert((ZERO, ZERO));
                    e.0 += dv * a;
                    e.1 += dv * b;
                }
            }
            Ok(out)
        }
    }
}

/// True iff `a(-ω, L̄) = conj a(ω, L)` and likewise for `b`, within `1e-12`.
pub fn is_real_solution(phi: &ModeVector) -> bool {
    phi.entries.iter().all(|((w, l), (a, b))| {
        let (pa, pb) = phi.get(-w.0, &l.conj());
        (pa - a.conj()).norm() <= REALITY_TOL && (pb - b.conj()).norm() <= REALITY_TOL
    })
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    omega: f64,
    levels: Vec<u32>,
    m: i64,
    a: [f64; 2],
    b: [f64; 2],
}

#[derive(Serialize, Deserialize)]
struct ModeVectorJson {
    freq_grid: Vec<FreqNode>,
    entries: Vec<EntryJson>,
}

impl ModeVector {
    pub fn to_json(&self) -> serde_json::Value {
        let doc = ModeVectorJson {
            freq_grid: self.grid.clone(),
            entries: self
                .entries
                .iter()
                .map(|((w, l), (a, b))| EntryJson {
                    omega: w.0,
                    levels: l.levels.clone(),
                    m: l.m,
                    a: [a.re, a.im],
                    b: [b.re, b.im],
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("plain data")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: ModeVectorJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Domain(format!("mode vector JSON: {e}")))?;
        let mut mv = ModeVector::new(doc.freq_grid)?;
        for e in doc.entries {
            let idx = MultiIndex::new(e.levels, e.m)?;
            mv.set(e.omega, idx, Complex64::new(e.a[0], e.a[1]), Complex64::new(e.b[0], e.b[1]))?;
        }
        Ok(mv)
    }
}
