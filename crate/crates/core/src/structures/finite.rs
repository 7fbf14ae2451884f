//! Finite-dimensional symplectic spaces with a compatible complex structure:
//! g-product, inner product, polarisation projectors, symplectic complements
//! and the subspace taxonomy.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default tolerance for structural checks.
pub const STRUCT_TOL: f64 = 1e-10;

/// `(V, ω)` with `ω(u, v) = uᵀ Ω v`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSymplecticSpace {
    pub omega: DMatrix<f64>,
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |a, v| a.max(v.abs()))
}

fn rank(m: &DMatrix<f64>, tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let scale = sv.iter().fold(0.0f64, |a, &b| a.max(b)).max(1.0);
    sv.iter().filter(|&&s| s > tol * scale).count()
}

fn columns(basis: &[DVector<f64>], n: usize) -> DMatrix<f64> {
    if basis.is_empty() {
        DMatrix::zeros(n, 0)
    } else {
        DMatrix::from_columns(basis)
    }
}

impl FiniteSymplecticSpace {
    /// Validates antisymmetry and nondegeneracy of `Ω`.
    pub fn new(omega: DMatrix<f64>) -> Result<Self> {
        let n = omega.nrows();
        if n == 0 || n != omega.ncols() || !n.is_multiple_of(2) {
            return Err(Error::Domain(format!("Ω must be square of even size, got {}×{}", n, omega.ncols())));
        }
        if max_abs(&(&omega + omega.transpose())) > STRUCT_TOL * max_abs(&omega).max(1.0) {
            return Err(Error::Domain("Ω is not antisymmetric".into()));
        }
        if rank(&omega, 1e-12) < n {
            return Err(Error::Domain("Ω is degenerate".into()));
        }
        Ok(FiniteSymplecticSpace { omega })
    }

    /// `Ω = [[0, 1], [-1, 0]]` in blocks of size `n`.
    pub fn standard(n: usize) -> Self {
        let mut m = DMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m[(i, n + i)] = 1.0;
            m[(n + i, i)] = -1.0;
        }
        FiniteSymplecticSpace { omega: m }
    }

    pub fn dim(&self) -> usize {
        self.omega.nrows()
    }

    pub fn omega(&self, u: &DVector<f64>, v: &DVector<f64>) -> f64 {
        u.dot(&(&self.omega * v))
    }

    /// Complex-bilinear extension of `ω`.
    pub fn omega_c(&self, u: &DVector<Complex64>, v: &DVector<Complex64>) -> Complex64 {
        let om = self.omega.map(|x| Complex64::new(x, 0.0));
        u.transpose().dot(&(om * v).transpose())
    }

    /// The space with reversed orientation, `ω → -ω`.
    pub fn reversed(&self) -> Self {
        FiniteSymplecticSpace { omega: -&self.omega }
    }
}

/// A complex structure `J` compatible with a given `ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexStructureMatrix {
    pub j: DMatrix<f64>,
}

impl ComplexStructureMatrix {
    /// Validates `J² = -1` and `Jᵀ Ω J = Ω`.
    pub fn new(sp: &FiniteSymplecticSpace, j: DMatrix<f64>) -> Result<Self> {
        let n = sp.dim();
        if j.nrows() != n || j.ncols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: j.nrows() });
        }
        if max_abs(&(&j * &j + DMatrix::identity(n, n))) > STRUCT_TOL {
            return Err(Error::Domain("J² ≠ -1".into()));
        }
        if max_abs(&(j.transpose() * &sp.omega * &j - &sp.omega)) > STRUCT_TOL {
            return Err(Error::Domain("J does not preserve ω".into()));
        }
        Ok(ComplexStructureMatrix { j })
    }

    /// `J = [[0, -1], [1, 0]]`, compatible with [`FiniteSymplecticSpace::standard`].
    pub fn standard(n: usize) -> Self {
        ComplexStructureMatrix { j: -FiniteSymplecticSpace::standard(n).omega }
    }

    /// The structure for the reversed orientation, `J → -J`.
    pub fn reversed(&self) -> Self {
        ComplexStructureMatrix { j: -&self.j }
    }

    fn jc(&self) -> DMatrix<Complex64> {
        self.j.map(|x| Complex64::new(x, 0.0))
    }
}

/// `(g(u, v), {u, v})` with `g(u, v) = 2ω(u, Jv)` and `{u, v} = g + 2iω`.
pub fn g_inner_from_j(sp: &FiniteSymplecticSpace, j: &ComplexStructureMatrix, u: &DVector<f64>, v: &DVector<f64>) -> (f64, Complex64) {
    let g = 2.0 * sp.omega(u, &(&j.j * v));
    (g, Complex64::new(g, 2.0 * sp.omega(u, v)))
}

/// `{u, v}` extended complex-bilinearly to the complexification.
pub fn inner_c(sp: &FiniteSymplecticSpace, j: &ComplexStructureMatrix, u: &DVector<Complex64>, v: &DVector<Complex64>) -> Complex64 {
    let jv = j.jc() * v;
    2.0 * sp.omega_c(u, &jv) + Complex64::new(0.0, 2.0) * sp.omega_c(u, v)
}

/// Polarisation `P^± v = ½(v ∓ iJv)`; `sign` is `+1` or `-1`.
pub fn polarization_project(j: &ComplexStructureMatrix, sign: i32, v: &DVector<Complex64>) -> Result<DVector<Complex64>> {
    let s = match sign {
        1 => 1.0,
        -1 => -1.0,
        _ => return Err(Error::Domain(format!("polarisation sign must be ±1, got {sign}"))),
    };
    let jv = j.jc() * v;
    Ok((v - jv * Complex64::new(0.0, s)) * Complex64::new(0.5, 0.0))
}

fn check_basis(sp: &FiniteSymplecticSpace, basis: &[DVector<f64>]) -> Result<DMatrix<f64>> {
    let n = sp.dim();
    if let Some(b) = basis.iter().find(|b| b.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: b.len() });
    }
    let b = columns(basis, n);
    if rank(&b, 1e-10) < basis.len() {
        return Err(Error::RankDeficient);
    }
    Ok(b)
}

/// Basis of `S^ω = {x : ω(s, x) = 0 for all s ∈ S}`.
pub fn symplectic_complement(sp: &FiniteSymplecticSpace, basis: &[DVector<f64>]) -> Result<Vec<DVector<f64>>> {
    let n = sp.dim();
    let b = check_basis(sp, basis)?;
    // rows bᵢᵀΩ, padded to a square matrix so that the SVD returns a full V
    let mut a = DMatrix::zeros(n, n);
    let rows = b.transpose() * &sp.omega;
    a.view_mut((0, 0), (rows.nrows(), n)).copy_from(&rows);
    let svd = a.svd(false, true);
    let vt = svd.v_t.expect("requested V");
    let scale = svd.singular_values.iter().fold(0.0f64, |x, &y| x.max(y)).max(1.0);
    Ok((0..n)
        .filter(|&i| svd.singular_values[i] <= 1e-10 * scale)
        .map(|i| vt.row(i).transpose())
        .collect())
}

/// Category of a subspace of a symplectic space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubspaceKind {
    Lagrangian,
    Isotropic,
    Symplectic,
    Coisotropic,
    None,
}

/// Containment facts behind [`SubspaceKind`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SubspaceReport {
    pub isotropic: bool,
    pub coisotropic: bool,
    pub symplectic: bool,
    pub kind: SubspaceKind,
}

/// `span(a) ⊆ span(b)`, both given as column bases.
fn contained(a: &DMatrix<f64>, b: &DMatrix<f64>) -> bool {
    if a.ncols() == 0 {
        return true;
    }
    let mut joint = DMatrix::zeros(a.nrows(), a.ncols() + b.ncols());
    joint.view_mut((0, 0), (a.nrows(), b.ncols())).copy_from(b);
    joint.view_mut((0, b.ncols()), (a.nrows(), a.ncols())).copy_from(a);
    rank(&joint, 1e-9) == rank(b, 1e-9)
}

/// Classifies `S = span(basis)`. Lagrangian takes precedence over isotropic,
/// then symplectic, then coisotropic.
pub fn classify_subspace(sp: &FiniteSymplecticSpace, basis: &[DVector<f64>]) -> Result<SubspaceReport> {
    let n = sp.dim();
    let s = check_basis(sp, basis)?;
    let comp = columns(&symplectic_complement(sp, basis)?, n);
    let isotropic = contained(&s, &comp);
    let coisotropic = contained(&comp, &s);
    // S ∩ S^ω = 0 iff the two spans together have full dimension
    let mut joint = DMatrix::zeros(n, s.ncols() + comp.ncols());
    joint.view_mut((0, 0), (n, s.ncols())).copy_from(&s);
    joint.view_mut((0, s.ncols()), (n, comp.ncols())).copy_from(&comp);
    let symplectic = rank(&joint, 1e-9) == s.ncols() + comp.ncols();
    let kind = if isotropic && coisotropic {
        SubspaceKind::Lagrangian
    } else if isotropic {
        SubspaceKind::Isotropic
    } else if symplectic {
        SubspaceKind::Symplectic
    } else if coisotropic {
        SubspaceKind::Coisotropic
    } else {
        SubspaceKind::None
    };
    Ok(SubspaceReport { isotropic, coisotropic, symplectic, kind })
}

/// `|ω(Ku, v) + ω(u, Kv)|`.
pub fn invariance_residual(sp: &FiniteSymplecticSpace, k: &DMatrix<f64>, u: &DVector<f64>, v: &DVector<f64>) -> f64 {
    (sp.omega(&(k * u), v) + sp.omega(u, &(k * v))).abs()
}

/// Largest [`invariance_residual`] over pairs of standard basis vectors, i.e.
/// the max-entry of `KᵀΩ + ΩK`.
pub fn invariance_defect(sp: &FiniteSymplecticSpace, k: &DMatrix<f64>) -> f64 {
    max_abs(&(k.transpose() * &sp.omega + &sp.omega * k))
}

/// `[A, B] = AB - BA`.
pub fn commutator(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b - b * a
}
