//! Hyperspherical harmonics on `S^{d-1}`, their contiguous relations, sphere
//! quadrature and rotation matrices.

pub mod eval;
pub mod index;
pub mod quadrature;
pub mod rotation;

pub use eval::{eval_harmonic, eval_harmonic_sin2_dcos, ladder_coeffs, norm_const, LadderCoeffs};
pub use index::{indices_up_to, indices_with_top, MultiIndex, SphericalPoint};
pub use quadrature::{gauss_legendre, sphere_inner, SphereQuadrature, DEFAULT_ORDER};
pub use rotation::{rotate_coeffs, wigner_small_d, Rotation, RotationBlock};
