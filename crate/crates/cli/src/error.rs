//! Failure categories and their exit codes.

use std::fmt;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// A checked invariant did not hold.
    Invariant,
    /// Malformed flags, config file or output path.
    Config,
    /// A Gamma pole, overflow or non-converging series.
    Numeric,
}

#[derive(Debug)]
pub struct Failure {
    pub kind: Kind,
    pub message: String,
}

impl Failure {
    pub fn config(message: impl Into<String>) -> Self {
        Failure { kind: Kind::Config, message: message.into() }
    }

    pub fn invariant(message: impl Into<String>) -> Self {
        Failure { kind: Kind::Invariant, message: message.into() }
    }

    pub fn numeric(message: impl Into<String>) -> Self {
        Failure { kind: Kind::Numeric, message: message.into() }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self.kind {
            Kind::Invariant => 1,
            Kind::Config => 2,
            Kind::Numeric => 3,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Library errors: singularities are numeric failures, everything else comes
/// from input the user chose.
impl From<kgtube::Error> for Failure {
    fn from(e: kgtube::Error) -> Self {
        let numeric = e.is_numeric_singularity() || matches!(e, kgtube::Error::NonConvergence { .. });
        Failure { kind: if numeric { Kind::Numeric } else { Kind::Config }, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::config(format!("i/o: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::config(format!("csv: {e}"))
    }
}

pub type CliResult<T> = Result<T, Failure>;

/// Outcome of a command whose rows were written: invariant failures take
/// precedence over numeric ones.
#[derive(Debug, Default)]
pub struct Tally {
    pub invariant: Vec<String>,
    pub numeric: Vec<String>,
}

impl Tally {
    pub fn finish(self) -> CliResult<()> {
        if let Some(first) = self.invariant.first() {
            return Err(Failure::invariant(format!("{} invariant failure(s); first: {first}", self.invariant.len())));
        }
        if let Some(first) = self.numeric.first() {
            return Err(Failure::numeric(format!("{} numeric failure(s); first: {first}", self.numeric.len())));
        }
        Ok(())
    }
}
