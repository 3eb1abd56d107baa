use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("denominators {0} and {1} are not coprime")]
    NotCoprime(String, String),

    #[error("empty prime window for N = {0}")]
    EmptyWindow(u64),

    #[error("prime window too small: need {need} primes, have {have}")]
    WindowTooSmall { need: usize, have: usize },

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("work budget exceeded: need {needed} units, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("N = {0} is too small for ln ln N > 0 (small-N regime)")]
    SmallNRegime(String),

    #[error("malformed number: {0}")]
    Parse(String),

    #[error("unknown constant: {0}")]
    UnknownConstant(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

/// Default work budget, in elementary evaluations, for every guarded routine.
pub const DEFAULT_WORK_BUDGET: u64 = 10_000_000;

pub(crate) fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
