//! Energy-momentum tensor, radial momentum flux and direction classifiers
//! for Klein-Gordon modes.

pub mod direction;
pub mod extrema;
pub mod tensor;

pub use direction::{
    minkowski_momentum, mode_flux, radial_sample, wronskian_flux, DirectionVerdict, RadialMode, RadialSample,
    Spacetime, Verdict, FLUX_TOL,
};
pub use extrema::{
    extrema_relation, local_maxima, radial_relation, time_relation, Interlacing, Maximum, RadialRelation,
    TimeRelation, MIN_SAMPLES_BETWEEN,
};
pub use tensor::{em_tensor, radial_momentum_density, DiagonalMetricPoint, PhiJet};
