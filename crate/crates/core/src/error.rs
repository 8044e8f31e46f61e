use alloc::string::String;
use core::fmt;

/// Which algebraic relation a spectrum failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `s_{k+1} - s_k = a_{k+1} + a_k`
    Adjacent,
    /// `s_0 = a_0`
    Ground,
    /// `s_top = -a_top` on a finite ladder.
    Top,
    /// `s_k >= |a_k|`
    Bound,
    /// `(s_k + a_k) / 2` must be a squared modulus.
    NegativeModulus,
    /// Model pipeline disagrees with its closed form.
    ClosedForm,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Condition::Adjacent => "adjacent-level consistency",
            Condition::Ground => "ground-state condition",
            Condition::Top => "top-of-ladder condition",
            Condition::Bound => "bound s >= |a|",
            Condition::NegativeModulus => "nonnegative squared modulus",
            Condition::ClosedForm => "closed-form agreement",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    #[error("{condition} violated at k={k}")]
    ConsistencyViolation { k: usize, condition: Condition },

    #[error("requested dimension {requested} exceeds available {available}")]
    DimensionError { requested: usize, available: usize },

    #[error("both roots b0 = {minus} and b0 = {plus} are nonnegative; choose a sign explicitly")]
    UnresolvedSign { minus: f64, plus: f64 },

    #[error("degenerate ladder: b_{k} + b_{next} vanishes", next = k + 1)]
    DegenerateLadder { k: usize },

    #[error("1 + 4*lambda has no exact rational square root")]
    IrrationalRoot,

    #[error("eigensolver did not converge after {iterations} iterations (eigenvalue {index}, bracket width {width:e})")]
    ConvergenceFailure {
        iterations: usize,
        index: usize,
        width: f64,
    },

    #[error("found {found} bound states, {requested} requested")]
    InsufficientBoundStates { found: usize, requested: usize },

    #[error("no sign change of the level-{level} residual in (0, 1)")]
    RootBracketFailure { level: usize },

    #[error("truncated basis is not converged: enlarging it moved level {level} by {shift:e}")]
    TruncationWarning { level: usize, shift: f64 },

    #[error("unit mismatch: algebraic `{algebraic}` vs numeric `{numeric}`")]
    UnitMismatch {
        algebraic: &'static str,
        numeric: &'static str,
    },

    #[error("level count mismatch: {algebraic} algebraic vs {numeric} numeric")]
    LevelCountMismatch { algebraic: usize, numeric: usize },
}

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }

    pub(crate) fn violation(k: usize, condition: Condition) -> Self {
        Error::ConsistencyViolation { k, condition }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
