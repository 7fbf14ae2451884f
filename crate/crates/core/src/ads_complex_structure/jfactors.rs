//! Per-`(ω, l)` j-factors of a complex structure on the AdS tube and their
//! action on mode vectors.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ads_modes::{ModeVector, Omega, FREQ_TOL};
use crate::error::{Error, Result};

/// The 2×2 matrix `(jaa, jab; jba, jbb)` acting on the channel pair `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JEntry {
    pub jaa: Complex64,
    pub jab: Complex64,
    pub jba: Complex64,
    pub jbb: Complex64,
}

impl JEntry {
    pub fn new(jaa: Complex64, jab: Complex64, jba: Complex64, jbb: Complex64) -> Self {
        JEntry { jaa, jab, jba, jbb }
    }

    /// Entry with real components.
    pub fn real(jaa: f64, jab: f64, jba: f64, jbb: f64) -> Self {
        let c = |x| Complex64::new(x, 0.0);
        JEntry::new(c(jaa), c(jab), c(jba), c(jbb))
    }

    pub fn conj(&self) -> Self {
        JEntry::new(self.jaa.conj(), self.jab.conj(), self.jba.conj(), self.jbb.conj())
    }

    pub fn max_norm(&self) -> f64 {
        [self.jaa, self.jab, self.jba, self.jbb].iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    /// `(jaa a + jab b, jba a + jbb b)`.
    pub fn apply(&self, a: Complex64, b: Complex64) -> (Complex64, Complex64) {
        (self.jaa * a + self.jab * b, self.jba * a + self.jbb * b)
    }
}

/// j-factors on a finite set of `(ω, l)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct JFactors {
    entries: BTreeMap<(Omega, u32), JEntry>,
}

impl JFactors {
    pub fn new() -> Self {
        JFactors::default()
    }

    pub fn insert(&mut self, omega: f64, l: u32, e: JEntry) {
        self.entries.insert((Omega(omega), l), e);
    }

    /// Entry at `(ω, l)` with `ω` matched to within `1e-12`.
    pub fn get(&self, omega: f64, l: u32) -> Option<&JEntry> {
        self.entries
            .range((Omega(omega - FREQ_TOL), l)..=(Omega(omega + FREQ_TOL), l))
            .find(|((_, ll), _)| *ll == l)
            .map(|(_, e)| e)
    }

    pub fn require(&self, omega: f64, l: u32) -> Result<&JEntry> {
        self.get(omega, l).ok_or_else(|| Error::Missing(format!("j-factors at (ω = {omega}, l = {l})")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, u32, &JEntry)> {
        self.entries.iter().map(|((w, l), e)| (w.0, *l, e))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The diagonal choice `jaa = jbb = +i` for `ω > 0` and `-i` for `ω < 0`.
    /// `ω = 0` is rejected.
    pub fn diagonal(points: &[(f64, u32)]) -> Result<Self> {
        let mut jf = JFactors::new();
        for &(w, l) in points {
            let s = diagonal_sign(w)?;
            let i = Complex64::new(0.0, s);
            jf.insert(w, l, JEntry::new(i, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), i));
        }
        Ok(jf)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<EntryJson> = self
            .iter()
            .map(|(w, l, e)| EntryJson {
                omega: w,
                l,
                jaa: [e.jaa.re, e.jaa.im],
                jab: [e.jab.re, e.jab.im],
                jba: [e.jba.re, e.jba.im],
                jbb: [e.jbb.re, e.jbb.im],
            })
            .collect();
        serde_json::to_value(rows).expect("plain data")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let rows: Vec<EntryJson> =
            serde_json::from_value(value.clone()).map_err(|e| Error::Domain(format!("j-factor JSON: {e}")))?;
        let c = |v: [f64; 2]| Complex64::new(v[0], v[1]);
        let mut jf = JFactors::new();
        for r in rows {
            if !r.omega.is_finite() {
                return Err(Error::Domain("non-finite ω in j-factor JSON".into()));
            }
            jf.insert(r.omega, r.l, JEntry::new(c(r.jaa), c(r.jab), c(r.jba), c(r.jbb)));
        }
        Ok(jf)
    }
}

/// `+1` for `ω > 0`, `-1` for `ω < 0`; the diagonal choice is undefined at 0.
pub fn diagonal_sign(omega: f64) -> Result<f64> {
    if omega > 0.0 {
        Ok(1.0)
    } else if omega < 0.0 {
        Ok(-1.0)
    } else {
        Err(Error::Domain("the diagonal complex structure is not defined at ω = 0".into()))
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    omega: f64,
    l: u32,
    jaa: [f64; 2],
    jab: [f64; 2],
    jba: [f64; 2],
    jbb: [f64; 2],
}

/// `(Jφ)^a = jaa φ^a + jab φ^b`, `(Jφ)^b = jba φ^a + jbb φ^b` at every entry.
pub fn apply_j(jf: &JFactors, phi: &ModeVector) -> Result<ModeVector> {
    phi.map(|w, idx, (a, b)| Ok(jf.require(w, idx.l())?.apply(a, b)))
}
