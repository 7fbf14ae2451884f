//! Mode space of the AdS tube: radial functions, the radial Wronskian,
//! mode vectors with their symplectic structure, and isometry actions.

pub mod modevec;
pub mod params;
pub mod radial;

pub use modevec::{
    act_isometry, is_real_solution, omega_rho, FreqNode, Isometry, ModeVector, Omega, Pair, FREQ_TOL, REALITY_TOL,
};
pub use params::{hypergeo_params, AdSParams, HypergeoParams};
pub use radial::{radial_eval, radial_eval_deriv, radial_wronskian, Channel};
