use alloc::string::String;

/// Errors raised by the numeric core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("precision {requested} is below the minimum of {minimum} significant digits")]
    PrecisionTooLow { requested: u32, minimum: u32 },

    #[error("requested {requested} digits but only {available} are available")]
    PrecisionExceeded { requested: u32, available: u32 },

    #[error("precision {precision} is insufficient for row L={l}, M={m}: all rendered digits match the reference")]
    InsufficientPrecision { l: u32, m: u32, precision: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("jet has a pole at its center (zero constant coefficient)")]
    PoleAtCenter,

    #[error("jet order or center mismatch")]
    JetMismatch,

    #[error("unknown integrand `{0}`")]
    UnknownIntegrand(String),

    #[error("integrand `{0}` is not available in exact mode")]
    ExactModeUnsupported(String),

    #[error("closed form is only available for M in {{0, 2, 6}}, got {0}")]
    UnsupportedOrder(u32),

    #[error("subinterval count must be at least 1")]
    NoSubintervals,

    #[error("scan needs at least one L and one M")]
    EmptyScan,

    #[error("cannot parse `{0}` as a number")]
    Parse(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
