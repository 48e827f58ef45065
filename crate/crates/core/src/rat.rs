//! Exact rational numbers.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::decimal::{self, decimal_len, pow10};
use crate::error::{Error, Result};

/// An exact rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Rat::one().checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rat(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Decimal expansion truncated (never rounded) to `digits` significant
    /// digits. A terminating expansion shorter than `digits` is printed in
    /// full without padding.
    pub fn render_truncated(&self, digits: u32) -> String {
        if self.is_zero() || digits == 0 {
            return "0".to_string();
        }
        let num = self.numer().magnitude();
        let den = self.denom().magnitude();
        let exp = leading_exponent(num, den);
        let shift = digits as i64 - 1 - exp;
        let (scaled_num, scaled_den) = scale(num, den, shift);
        let (q, r) = scaled_num.div_rem(&scaled_den);
        let mut s = decimal::digit_string(&q);
        debug_assert_eq!(s.len() as u32, digits);
        if r.is_zero() {
            let kept = s.trim_end_matches('0').len().max(1);
            s.truncate(kept);
        }
        decimal::layout(self.is_negative(), &s, exp)
    }
}

/// `e` such that `10^e <= num/den < 10^(e+1)`; both arguments nonzero.
pub(crate) fn leading_exponent(num: &BigUint, den: &BigUint) -> i64 {
    let mut e = decimal_len(num) as i64 - decimal_len(den) as i64;
    // The estimate is exact or one too high.
    let (n, d) = scale(num, den, -e);
    if n < d {
        e -= 1;
    }
    e
}

/// Returns `(num * 10^shift, den)` or `(num, den * 10^-shift)`.
pub(crate) fn scale(num: &BigUint, den: &BigUint, shift: i64) -> (BigUint, BigUint) {
    if shift >= 0 {
        (num * pow10(shift as u64), den.clone())
    } else {
        (num.clone(), den * pow10((-shift) as u64))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

/// Accepts `p/q`, integers and plain decimal numerals (`0.25`, `1e-3`).
impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(s.to_string());
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            return Rat::new(p, q);
        }
        let n = decimal::parse_numeral(s).ok_or_else(err)?;
        let sign = if n.negative { Sign::Minus } else { Sign::Plus };
        let mantissa = BigInt::from_biguint(sign, n.mantissa);
        Ok(if n.exponent >= 0 {
            Rat::from_integer(mantissa * BigInt::from(pow10(n.exponent as u64)))
        } else {
            Rat(BigRational::new(mantissa, BigInt::from(pow10((-n.exponent) as u64))))
        })
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_integer(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_integer(n)
    }
}

impl From<BigRational> for Rat {
    fn from(q: BigRational) -> Self {
        Rat(q)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($Trait::$method(&self.0, &rhs.0))
            }
        }
        impl $Trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($Trait::$method(self.0, rhs.0))
            }
        }
        impl $Trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($Trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor like the integer types do; see `checked_div`.
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}
