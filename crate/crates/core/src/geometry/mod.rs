//! Killing vector fields of flat spaces, exact Lie brackets and the
//! Minkowski generators in spherical coordinates.

pub mod killing;
pub mod minkowski;
pub mod poly;

pub use killing::{
    infinitesimal_action, killing_field, killing_residual, structure_check, translation, Generator, KillingField,
    Signature, StructureReport,
};
pub use minkowski::{
    cartesian_to_spherical, minkowski_killing_spherical, MinkowskiGenerator, SphericalComponents, SphericalEvent,
};
pub use poly::{lie_bracket, Poly, PolyVectorField};
