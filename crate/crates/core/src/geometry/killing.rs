//! Killing fields of flat `R^{(p,q)}` and the checks of their Lie algebra.

use serde::{Deserialize, Serialize};

use super::poly::{lie_bracket, Poly, PolyVectorField};
use crate::error::{Error, Result};

/// Largest `p + q` accepted by [`structure_check`].
pub const MAX_STRUCTURE_DIM: usize = 8;

/// Flat metric `η = diag(-1 × p, +1 × q)`; the first `p` directions are
/// timelike.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub eta: Vec<i64>,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::Domain("signature needs at least one direction".into()));
        }
        let eta = (0..p + q).map(|i| if i < p { -1 } else { 1 }).collect();
        Ok(Signature { p, q, eta })
    }

    /// Minkowski signature `(-,+,+,+)`.
    pub fn minkowski() -> Self {
        Signature::new(1, 3).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    /// `η_{AB}`.
    pub fn eta(&self, a: usize, b: usize) -> i64 {
        if a == b {
            self.eta[a]
        } else {
            0
        }
    }

    /// Lowered coordinate `X_A = η_{AA} X^A`.
    pub fn lowered(&self, a: usize) -> Poly {
        Poly::var(self.dim(), a).scale_int(self.eta[a])
    }

    fn check_label(&self, a: usize) -> Result<()> {
        if a >= self.dim() {
            return Err(Error::InvalidIndex(format!("label {a} out of range for dimension {}", self.dim())));
        }
        Ok(())
    }
}

/// Label of a Killing generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    /// `T_A = ∂_A`.
    Translation(usize),
    /// `K_{AB} = X_A ∂_B - X_B ∂_A`.
    Rotation(usize, usize),
}

/// A labelled Killing generator with polynomial components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingField {
    pub label: Generator,
    pub field: PolyVectorField,
}

impl KillingField {
    /// True for the trivially vanishing `K_{AA}`.
    pub fn is_zero(&self) -> bool {
        self.field.is_zero()
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        self.field.eval(x)
    }
}

/// `K_{AB}` with components `(K_{AB})^Q = X_A δ^Q_B - X_B δ^Q_A`. For `A = B`
/// this is the zero field, recognisable through [`KillingField::is_zero`].
pub fn killing_field(sig: &Signature, a: usize, b: usize) -> Result<KillingField> {
    sig.check_label(a)?;
    sig.check_label(b)?;
    let n = sig.dim();
    let mut field = PolyVectorField::zero(n);
    if a != b {
        field.components[b] = sig.lowered(a);
        field.components[a] = -&sig.lowered(b);
    }
    Ok(KillingField { label: Generator::Rotation(a, b), field })
}

/// `T_A = ∂_A`.
pub fn translation(sig: &Signature, a: usize) -> Result<KillingField> {
    sig.check_label(a)?;
    let n = sig.dim();
    let mut field = PolyVectorField::zero(n);
    field.components[a] = Poly::from_int(n, 1);
    Ok(KillingField { label: Generator::Translation(a), field })
}

/// Symmetric matrix `η_{NN} ∂_M V^N + η_{MM} ∂_N V^M`; it vanishes exactly for
/// Killing fields of the flat metric.
pub fn killing_residual(sig: &Signature, v: &PolyVectorField) -> Result<Vec<Vec<Poly>>> {
    let n = sig.dim();
    if v.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.dim() });
    }
    Ok((0..n)
        .map(|m| {
            (0..n)
                .map(|nn| &v.components[nn].deriv(m).scale_int(sig.eta[nn]) + &v.components[m].deriv(nn).scale_int(sig.eta[m]))
                .collect()
        })
        .collect())
}

fn residual_is_zero(r: &[Vec<Poly>]) -> bool {
    r.iter().flatten().all(Poly::is_zero)
}

/// Result of [`structure_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub p: usize,
    pub q: usize,
    /// `T_A` plus independent `K_{AB}`: `(p+q)(p+q+1)/2`.
    pub generators: usize,
    pub brackets_checked: usize,
    pub mismatches: Vec<String>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Expected right-hand side of `[K_{AB}, K_{CD}]`.
fn so_pq_rhs(sig: &Signature, k: &[Vec<PolyVectorField>], a: usize, b: usize, c: usize, d: usize) -> PolyVectorField {
    let n = sig.dim();
    let mut out = PolyVectorField::zero(n);
    let terms = [(-sig.eta(a, c), b, d), (sig.eta(b, c), a, d), (-sig.eta(b, d), a, c), (sig.eta(a, d), b, c)];
    for (coef, x, y) in terms {
        if coef != 0 {
            out = out.add(&k[x][y].scale_int(coef));
        }
    }
    out
}

/// Verifies exactly, for every label combination, the Killing equation, the
/// `so(p,q)` brackets of the `K_{AB}`, `[T_α, K_{μν}] = η_{αμ}T_ν - η_{αν}T_μ`
/// and `[T_α, T_β] = 0`.
pub fn structure_check(sig: &Signature) -> Result<StructureReport> {
    let n = sig.dim();
    if n > MAX_STRUCTURE_DIM {
        return Err(Error::Domain(format!("structure check limited to p+q <= {MAX_STRUCTURE_DIM}, got {n}")));
    }
    let k: Vec<Vec<PolyVectorField>> =
        (0..n).map(|a| (0..n).map(|b| killing_field(sig, a, b).unwrap().field).collect()).collect();
    let t: Vec<PolyVectorField> = (0..n).map(|a| translation(sig, a).unwrap().field).collect();
    let mut mismatches = Vec::new();
    let mut checked = 0;

    for a in 0..n {
        if !residual_is_zero(&killing_residual(sig, &t[a])?) {
            mismatches.push(format!("T_{a} fails the Killing equation"));
        }
        for b in 0..n {
            if !residual_is_zero(&killing_residual(sig, &k[a][b])?) {
                mismatches.push(format!("K_{a}{b} fails the Killing equation"));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    checked += 1;
                    if lie_bracket(&k[a][b], &k[c][d]) != so_pq_rhs(sig, &k, a, b, c, d) {
                        mismatches.push(format!("[K_{a}{b}, K_{c}{d}]"));
                    }
                }
            }
        }
    }
    for al in 0..n {
        for be in 0..n {
            checked += 1;
            if !lie_bracket(&t[al], &t[be]).is_zero() {
                mismatches.push(format!("[T_{al}, T_{be}]"));
            }
        }
        for mu in 0..n {
            for nu in 0..n {
                checked += 1;
                let rhs = t[nu].scale_int(sig.eta(al, mu)).sub(&t[mu].scale_int(sig.eta(al, nu)));
                if lie_bracket(&t[al], &k[mu][nu]) != rhs {
                    mismatches.push(format!("[T_{al}, K_{mu}{nu}]"));
                }
            }
        }
    }
    Ok(StructureReport { p: sig.p, q: sig.q, generators: n * (n + 1) / 2, brackets_checked: checked, mismatches })
}

/// `x + ε V(x)`: the coordinates seen after the infinitesimal transformation
/// `1 + εV` acts on the coordinate functions.
pub fn infinitesimal_action(v: &PolyVectorField, eps: f64, x: &[f64]) -> Vec<f64> {
    let n = v.dim();
    (0..n).map(|q| x[q] + eps * v.apply(&Poly::var(n, q)).eval(x)).collect()
}
