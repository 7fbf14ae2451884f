//! Symplectic and complex structures on solution spaces: quadrature of the
//! symplectic potential on flat slices and a finite-dimensional model of the
//! algebraic identities.

pub mod finite;
pub mod sampled;

pub use finite::{
    classify_subspace, commutator, g_inner_from_j, inner_c, invariance_defect, invariance_residual,
    polarization_project, symplectic_complement, ComplexStructureMatrix, FiniteSymplecticSpace, SubspaceKind,
    SubspaceReport, STRUCT_TOL,
};
pub use sampled::{theta, theta_omega_quadrature, theta_omega_quadrature_with, BoxGrid, MetricSign, SampledField};
