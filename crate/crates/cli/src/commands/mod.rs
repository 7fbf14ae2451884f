//! One module per subcommand; each returns its table and the failures seen.

pub mod candidate_sweep;
pub mod flux_classify;
pub mod harmonics_table;
pub mod jfactor_audit;
pub mod selfcheck;
