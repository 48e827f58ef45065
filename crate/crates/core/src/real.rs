//! Arbitrary-precision decimal floating point.
//!
//! A [`Real`] is `mantissa × 10^exponent` with at most `precision` significant
//! decimal digits. Every operation rounds its exact result half-to-even to the
//! larger of its operands' precisions, so each result is within one unit in the
//! last place. The representation is canonical (no trailing zeros in the
//! mantissa), which makes `==` a value comparison.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::decimal::{self, decimal_len, pow10, strip_trailing_zeros};
use crate::error::{Error, Result};
use crate::rat::Rat;

/// Smallest accepted working precision, in significant digits.
pub const MIN_PRECISION: u32 = 10;

#[derive(Clone)]
pub struct Real {
    mantissa: BigInt,
    exponent: i64,
    precision: u32,
}

fn check_precision(precision: u32) -> Result<()> {
    if precision < MIN_PRECISION {
        Err(Error::PrecisionTooLow { requested: precision, minimum: MIN_PRECISION })
    } else {
        Ok(())
    }
}

impl Real {
    /// Rounds `±mag × 10^exp` to `precision` digits and canonicalizes.
    fn round(negative: bool, mag: BigUint, exp: i64, precision: u32) -> Real {
        let mut mag = mag;
        let mut exp = exp;
        let len = decimal_len(&mag);
        if len > precision as u64 {
            let drop = len - precision as u64;
            let unit = pow10(drop);
            let (mut q, r) = mag.div_rem(&unit);
            let twice: BigUint = r << 1;
            if twice > unit || (twice == unit && q.is_odd()) {
                q += 1u32;
            }
            mag = q;
            exp += drop as i64;
        }
        let (mag, exp) = strip_trailing_zeros(mag, exp);
        let sign = if negative { Sign::Minus } else { Sign::Plus };
        Real { mantissa: BigInt::from_biguint(sign, mag), exponent: exp, precision }
    }

    /// Correctly rounded `±num/den × 10^exp`.
    fn from_quotient(negative: bool, num: &BigUint, den: &BigUint, exp: i64, precision: u32) -> Real {
        if num.is_zero() {
            return Real::zero_unchecked(precision);
        }
        // Enough quotient digits that the remainder only acts as a sticky digit.
        let want = precision as i64 + 3;
        let shift = (want + decimal_len(den) as i64 - decimal_len(num) as i64).max(0);
        let scaled = num * pow10(shift as u64);
        let (q, r) = scaled.div_rem(den);
        let (q, e) = if r.is_zero() { (q, exp - shift) } else { (q * 10u32 + 1u32, exp - shift - 1) };
        Real::round(negative, q, e, precision)
    }

    fn zero_unchecked(precision: u32) -> Real {
        Real { mantissa: BigInt::zero(), exponent: 0, precision }
    }

    pub fn zero(precision: u32) -> Result<Real> {
        check_precision(precision)?;
        Ok(Real::zero_unchecked(precision))
    }

    pub fn from_integer(n: impl Into<BigInt>, precision: u32) -> Result<Real> {
        check_precision(precision)?;
        let n = n.into();
        Ok(Real::round(n.is_negative(), n.magnitude().clone(), 0, precision))
    }

    /// `q` correctly rounded to `precision` significant digits.
    pub fn from_rat(q: &Rat, precision: u32) -> Result<Real> {
        check_precision(precision)?;
        Ok(Real::from_quotient(q.is_negative(), q.numer().magnitude(), q.denom().magnitude(), 0, precision))
    }

    /// Parses a decimal numeral and rounds it to `precision` digits.
    pub fn parse(s: &str, precision: u32) -> Result<Real> {
        check_precision(precision)?;
        let n = decimal::parse_numeral(s).ok_or_else(|| Error::Parse(s.to_string()))?;
        Ok(Real::round(n.negative, n.mantissa, n.exponent, precision))
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Re-rounds to a different precision.
    pub fn with_precision(&self, precision: u32) -> Result<Real> {
        check_precision(precision)?;
        Ok(Real::round(self.is_negative(), self.mantissa.magnitude().clone(), self.exponent, precision))
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Real {
        Real { mantissa: self.mantissa.abs(), ..self.clone() }
    }

    /// Exponent of the leading digit: `e` with `10^e <= |self| < 10^(e+1)`.
    pub fn leading_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exponent + decimal_len(self.mantissa.magnitude()) as i64 - 1)
        }
    }

    fn sum(&self, rhs: &Real, negate_rhs: bool) -> Real {
        let precision = self.precision.max(rhs.precision);
        let rhs_mantissa = if negate_rhs { -&rhs.mantissa } else { rhs.mantissa.clone() };
        if rhs.is_zero() {
            return Real::round(self.is_negative(), self.mantissa.magnitude().clone(), self.exponent, precision);
        }
        if self.is_zero() {
            return Real::round(rhs_mantissa.is_negative(), rhs_mantissa.magnitude().clone(), rhs.exponent, precision);
        }
        let top = |m: &BigInt, e: i64| e + decimal_len(m.magnitude()) as i64;
        let cutoff = top(&self.mantissa, self.exponent).max(top(&rhs.mantissa, rhs.exponent)) - precision as i64 - 3;
        // Digits far below the result's last place cannot affect it beyond a
        // hundredth of an ulp; dropping them keeps the alignment shift bounded.
        let clip = |m: BigInt, e: i64| -> (BigInt, i64) {
            if e >= cutoff {
                (m, e)
            } else {
                (m / BigInt::from(pow10((cutoff - e) as u64)), cutoff)
            }
        };
        let (ma, ea) = clip(self.mantissa.clone(), self.exponent);
        let (mb, eb) = clip(rhs_mantissa, rhs.exponent);
        let e = ea.min(eb);
        let align = |m: BigInt, from: i64| m * BigInt::from(pow10((from - e) as u64));
        let total = align(ma, ea) + align(mb, eb);
        Real::round(total.is_negative(), total.magnitude().clone(), e, precision)
    }

    pub fn checked_div(&self, rhs: &Real) -> Result<Real> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let precision = self.precision.max(rhs.precision);
        Ok(Real::from_quotient(
            self.is_negative() != rhs.is_negative(),
            self.mantissa.magnitude(),
            rhs.mantissa.magnitude(),
            self.exponent - rhs.exponent,
            precision,
        ))
    }

    /// `e^self`, within one ulp at `self.precision()`.
    pub fn exp(&self) -> Real {
        let precision = self.precision;
        if self.is_zero() {
            return Real::round(false, BigUint::one(), 0, precision);
        }
        if self.is_negative() {
            let positive = self.abs().exp_positive();
            return Real::round(false, BigUint::one(), 0, precision).checked_div(&positive).expect("exp is never zero");
        }
        self.exp_positive()
    }

    fn exp_positive(&self) -> Real {
        let precision = self.precision;
        // Halve the argument below 2^-8, sum the series, then square back up.
        let magnitude = self.leading_exponent().unwrap_or(0).max(-1) + 1;
        let halvings = 8 + (magnitude as f64 * 3.33) as u32;
        let working = precision + 10 + halvings / 3;
        let x = self.with_precision(working).expect("precision already validated");
        let scale = Real::round(false, BigUint::one() << halvings, 0, working);
        let r = x.checked_div(&scale).expect("nonzero scale");

        let one = Real::round(false, BigUint::one(), 0, working);
        let mut sum = one.clone();
        let mut term = one;
        let mut k: u32 = 1;
        loop {
            let divisor = Real::round(false, BigUint::from(k), 0, working);
            term = (&term * &r).checked_div(&divisor).expect("nonzero divisor");
            match (term.leading_exponent(), sum.leading_exponent()) {
                (Some(t), Some(s)) if t >= s - working as i64 - 2 => sum = &sum + &term,
                _ => break,
            }
            k += 1;
        }
        for _ in 0..halvings {
            sum = &sum * &sum;
        }
        sum.with_precision(precision).expect("precision already validated")
    }

    /// Decimal string truncated (never rounded) to `digits` significant
    /// digits; zero renders as `"0"`.
    pub fn render(&self, digits: u32) -> Result<String> {
        if digits > self.precision {
            return Err(Error::PrecisionExceeded { requested: digits, available: self.precision });
        }
        if self.is_zero() || digits == 0 {
            return Ok("0".to_string());
        }
        let mut s = decimal::digit_string(self.mantissa.magnitude());
        let exp = self.exponent + s.len() as i64 - 1;
        let digits = digits as usize;
        if s.len() > digits {
            s.truncate(digits);
        } else {
            s.extend(core::iter::repeat_n('0', digits - s.len()));
        }
        Ok(decimal::layout(self.is_negative(), &s, exp))
    }

    /// Nearest `f64`; for logging and order estimates only.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let len = decimal_len(self.mantissa.magnitude());
        let kept = decimal::leading_digits(self.mantissa.magnitude(), len, 17);
        let exp = self.exponent + len as i64 - decimal_len(&kept) as i64;
        let sign = if self.is_negative() { "-" } else { "" };
        alloc::format!("{sign}{kept}e{exp}").parse().unwrap_or(f64::NAN)
    }

    /// Exact rational value of this decimal.
    pub fn to_rat(&self) -> Rat {
        if self.exponent >= 0 {
            Rat::from_integer(&self.mantissa * BigInt::from(pow10(self.exponent as u64)))
        } else {
            Rat::new(self.mantissa.clone(), BigInt::from(pow10((-self.exponent) as u64))).expect("nonzero power of ten")
        }
    }

    fn cmp_magnitude(&self, other: &Real) -> Ordering {
        match (self.leading_exponent(), other.leading_exponent()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) if a != b => a.cmp(&b),
            _ => {
                let e = self.exponent.min(other.exponent);
                let lift = |r: &Real| r.mantissa.magnitude() * pow10((r.exponent - e) as u64);
                lift(self).cmp(&lift(other))
            }
        }
    }
}

/// `q` correctly rounded to `precision` significant digits.
pub fn rat_to_real(q: &Rat, precision: u32) -> Result<Real> {
    Real::from_rat(q, precision)
}

/// `r` truncated to `digits` significant digits.
pub fn render_decimal(r: &Real, digits: u32) -> Result<String> {
    r.render(digits)
}

impl PartialEq for Real {
    fn eq(&self, other: &Real) -> bool {
        self.mantissa == other.mantissa && self.exponent == other.exponent
    }
}

impl Eq for Real {}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Real) -> Ordering {
        match (self.is_negative(), other.is_negative()) {
            (false, true) => Ordering::Greater,
            (true, false) => Ordering::Less,
            (false, false) => self.cmp_magnitude(other),
            (true, true) => other.cmp_magnitude(self),
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let s = decimal::digit_string(self.mantissa.magnitude());
        let exp = self.exponent + s.len() as i64 - 1;
        f.write_str(&decimal::layout(self.is_negative(), &s, exp))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({self}, p={})", self.precision)
    }
}

impl Add for &Real {
    type Output = Real;
    fn add(self, rhs: &Real) -> Real {
        self.sum(rhs, false)
    }
}

impl Sub for &Real {
    type Output = Real;
    fn sub(self, rhs: &Real) -> Real {
        self.sum(rhs, true)
    }
}

impl Mul for &Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        let precision = self.precision.max(rhs.precision);
        let product = &self.mantissa * &rhs.mantissa;
        Real::round(product.is_negative(), product.magnitude().clone(), self.exponent + rhs.exponent, precision)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mantissa: -&self.mantissa, ..self.clone() }
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real { mantissa: -self.mantissa, ..self }
    }
}
