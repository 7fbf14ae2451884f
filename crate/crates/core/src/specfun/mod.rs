//! Scalar special functions: Gamma, factorials, orthogonal polynomials,
//! the Gauss hypergeometric series and the spherical Bessel family.

pub mod bessel;
pub mod gamma;
pub mod hyper;
pub mod ortho;

pub use bessel::{
    j_evan, n_evan, radial_basis, radial_basis_deriv, s_even, s_odd, s_pm, sph_h1, sph_h2, sph_j, sph_n,
    RadialKind,
};
pub use gamma::{a_coeff, double_factorial, factorial, gamma, log_gamma_signed, rgamma, SignedLogGamma};
pub use hyper::{hyp2f1, hyp2f1_deriv};
pub use ortho::{assoc_legendre, gegenbauer, gegenbauer_deriv, ortho_poly, OrthoFamily};
