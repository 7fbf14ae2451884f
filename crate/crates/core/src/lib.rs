//! Mode-space numerics for Klein-Gordon fields on Minkowski and anti-de Sitter
//! hypercylinders.

pub mod ads_complex_structure;
pub mod ads_modes;
pub mod error;
pub mod flux;
pub mod geometry;
pub mod harmonics;
pub mod specfun;
pub mod structures;

pub use error::{Error, Result};
pub use ads_complex_structure::{ConditionReport, JEntry, JFactors};
pub use ads_modes::{AdSParams, Channel, ModeVector};
pub use flux::{DirectionVerdict, Spacetime, Verdict};
pub use harmonics::{MultiIndex, SphericalPoint};
pub use nalgebra;
pub use num_complex::Complex64;
pub use structures::{SubspaceKind, SubspaceReport};
