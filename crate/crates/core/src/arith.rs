//! Arithmetic modes. The quadrature engine is generic over [`Arithmetic`]:
//! [`Exact`] evaluates on [`Rat`] with no rounding at all, [`Float`] on [`Real`]
//! at a fixed working precision.

use alloc::string::String;
use core::fmt;

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::real::Real;

/// Extra working digits carried beyond the requested output precision.
pub const GUARD_DIGITS: u32 = 15;

#[allow(clippy::wrong_self_convention)]
pub trait Arithmetic {
    type Scalar: Clone + PartialEq + fmt::Debug;

    fn from_rat(&self, q: &Rat) -> Self::Scalar;

    fn from_int(&self, n: i64) -> Self::Scalar {
        self.from_rat(&Rat::from(n))
    }

    fn zero(&self) -> Self::Scalar {
        self.from_int(0)
    }

    fn one(&self) -> Self::Scalar {
        self.from_int(1)
    }

    fn add(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn sub(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn mul(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn div(&self, a: &Self::Scalar, b: &Self::Scalar) -> Result<Self::Scalar>;
    fn neg(&self, a: &Self::Scalar) -> Self::Scalar;
    fn is_zero(&self, a: &Self::Scalar) -> bool;

    /// `e^a`, or `None` when the mode cannot represent the result.
    fn exp(&self, a: &Self::Scalar) -> Option<Self::Scalar>;

    /// True when no operation ever rounds.
    fn is_exact(&self) -> bool;
}

/// Exact rational arithmetic.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Exact;

impl Arithmetic for Exact {
    type Scalar = Rat;

    fn from_rat(&self, q: &Rat) -> Rat {
        q.clone()
    }

    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }

    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }

    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }

    fn div(&self, a: &Rat, b: &Rat) -> Result<Rat> {
        a.checked_div(b)
    }

    fn neg(&self, a: &Rat) -> Rat {
        -a
    }

    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }

    fn exp(&self, a: &Rat) -> Option<Rat> {
        a.is_zero().then(Rat::one)
    }

    fn is_exact(&self) -> bool {
        true
    }
}

/// Decimal floating point at a fixed working precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Float {
    precision: u32,
}

impl Float {
    /// Arithmetic at exactly `precision` significant digits.
    pub fn new(precision: u32) -> Result<Self> {
        Real::zero(precision)?;
        Ok(Float { precision })
    }

    /// Arithmetic for results wanted to `output` digits: adds the guard digits.
    pub fn for_output(output: u32) -> Result<Self> {
        Real::zero(output)?;
        Float::new(output + GUARD_DIGITS)
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }
}

impl Arithmetic for Float {
    type Scalar = Real;

    fn from_rat(&self, q: &Rat) -> Real {
        Real::from_rat(q, self.precision).expect("precision validated in Float::new")
    }

    fn add(&self, a: &Real, b: &Real) -> Real {
        a + b
    }

    fn sub(&self, a: &Real, b: &Real) -> Real {
        a - b
    }

    fn mul(&self, a: &Real, b: &Real) -> Real {
        a * b
    }

    fn div(&self, a: &Real, b: &Real) -> Result<Real> {
        a.checked_div(b)
    }

    fn neg(&self, a: &Real) -> Real {
        -a
    }

    fn is_zero(&self, a: &Real) -> bool {
        a.is_zero()
    }

    fn exp(&self, a: &Real) -> Option<Real> {
        Some(a.exp())
    }

    fn is_exact(&self) -> bool {
        false
    }
}

/// Which arithmetic a computation runs in.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    #[default]
    Float,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

impl core::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(Error::Parse(other.into())),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A result from either mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Exact(Rat),
    Float(Real),
}

impl Value {
    /// Truncated decimal rendering. Exact values have unlimited digits;
    /// float values fail with `PrecisionExceeded` past their precision.
    pub fn render(&self, digits: u32) -> Result<String> {
        match self {
            Value::Exact(q) => Ok(q.render_truncated(digits)),
            Value::Float(r) => r.render(digits),
        }
    }

    /// The value as a [`Real`] at `precision` digits (rounded if exact).
    pub fn to_real(&self, precision: u32) -> Result<Real> {
        match self {
            Value::Exact(q) => Real::from_rat(q, precision),
            Value::Float(r) => r.with_precision(precision),
        }
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Float(_) => None,
        }
    }

    pub fn as_real(&self) -> Option<&Real> {
        match self {
            Value::Exact(_) => None,
            Value::Float(r) => Some(r),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Value::Exact(_) => Mode::Exact,
            Value::Float(_) => Mode::Float,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => q.fmt(f),
            Value::Float(r) => r.fmt(f),
        }
    }
}
