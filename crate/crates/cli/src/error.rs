use specladder_core::Error;
use thiserror::Error;

/// Failures that stop a command before it produces a verdict.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid --{flag}: {reason}")]
    Validation { flag: String, reason: String },
    #[error("malformed input: {0}")]
    Input(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{0}")]
    Model(Error),
    #[error("oracle failed: {0}")]
    Oracle(Error),
}

/// Command-line spelling of a parameter name used by the core crate.
fn flag_name(field: &str) -> String {
    match field {
        "two_j" => "two-j".into(),
        "alpha_fs" => "alpha".into(),
        "basis_dim" => "basis".into(),
        "r_min" => "q-min".into(),
        "rho_max" => "q-max".into(),
        other => other.replace('_', "-"),
    }
}

impl CliError {
    pub fn invalid(flag: &str, reason: impl Into<String>) -> Self {
        CliError::Validation {
            flag: flag.to_string(),
            reason: reason.into(),
        }
    }

    /// Parameter problems are reported against the flag; anything else the
    /// algebra rejects is a model error.
    pub fn model(err: Error) -> Self {
        match err {
            Error::InvalidParameter { field, reason } => CliError::invalid(&flag_name(field), reason),
            other => CliError::Model(other),
        }
    }

    /// Bad grid parameters are the caller's fault; everything else is an
    /// oracle failure.
    pub fn oracle(err: Error) -> Self {
        match err {
            Error::InvalidParameter { field, reason } => CliError::invalid(&flag_name(field), reason),
            other => CliError::Oracle(other),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Oracle(_) => 3,
            _ => 2,
        }
    }
}
