//! Complex structures on the AdS tube: j-factors, their condition system,
//! the induced `g_ρ`, boost recurrences and Gamma-function candidates.

pub mod boost;
pub mod conditions;
pub mod jfactors;

pub use boost::{
    boost_recurrence_residual, boost_recurrence_residual_ba, candidate_jab, complete_nondiagonal,
    diagonal_boost_mismatch, factor_minus, factor_plus, jfactors_from_candidate, BoostResiduals, CANDIDATES,
};
pub use conditions::{
    check_conditions, check_conditions_tol, entry_residuals, g_rho, ConditionReport, EntryResiduals, JCase, COND_TOL,
};
pub use jfactors::{apply_j, diagonal_sign, JEntry, JFactors};
