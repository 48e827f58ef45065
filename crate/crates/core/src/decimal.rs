//! Decimal-digit plumbing shared by [`Rat`](crate::Rat) and [`Real`](crate::Real):
//! digit counting, powers of ten, numeral parsing and truncated rendering.

use alloc::string::String;
use core::f64::consts::LOG10_2;
use core::fmt::Write;

use num_bigint::BigUint;
use num_traits::Zero;

pub(crate) fn pow10(n: u64) -> BigUint {
    BigUint::from(10u32).pow(n as u32)
}

/// Number of decimal digits in `n`; zero has none.
pub(crate) fn decimal_len(n: &BigUint) -> u64 {
    if n.is_zero() {
        return 0;
    }
    let bits = n.bits();
    let mut len = ((bits - 1) as f64 * LOG10_2) as u64 + 1;
    if *n >= pow10(len) {
        len += 1;
    } else if len > 1 && *n < pow10(len - 1) {
        len -= 1;
    }
    len
}

/// A parsed decimal numeral: `(-1)^negative * mantissa * 10^exponent`.
///
/// `digits` keeps the significant digits exactly as written, so trailing
/// zeros survive (`"1.00"` has three).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numeral {
    pub negative: bool,
    pub mantissa: BigUint,
    pub exponent: i64,
    pub digits: String,
}

impl Numeral {
    /// Exponent of the leading significant digit, i.e. `e` in `d.ddd × 10^e`.
    /// `None` for zero.
    pub fn leading_exponent(&self) -> Option<i64> {
        if self.digits.is_empty() {
            None
        } else {
            Some(self.exponent + self.digits.len() as i64 - 1)
        }
    }
}

/// Parses `[+-]digits[.digits][(e|E)[+-]digits]`.
pub fn parse_numeral(s: &str) -> Option<Numeral> {
    let s = s.trim();
    let (negative, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (body, exp_part) = match body.find(['e', 'E']) {
        Some(pos) => (&body[..pos], Some(&body[pos + 1..])),
        None => (body, None),
    };
    let (int_part, frac_part) = match body.find('.') {
        Some(pos) => (&body[..pos], &body[pos + 1..]),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut exponent: i64 = match exp_part {
        Some(e) => {
            let digits = e.strip_prefix(['+', '-']).unwrap_or(e);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            e.parse().ok()?
        }
        None => 0,
    };
    exponent -= frac_part.len() as i64;

    let mut all = String::with_capacity(int_part.len() + frac_part.len());
    all.push_str(int_part);
    all.push_str(frac_part);
    let digits = all.trim_start_matches('0');
    let mantissa = if digits.is_empty() { BigUint::zero() } else { digits.parse().ok()? };
    Some(Numeral { negative: negative && !mantissa.is_zero(), mantissa, exponent, digits: String::from(digits) })
}

/// Lays out significant digits `d1 d2 d3 …` of the value `d1.d2d3… × 10^exp`.
///
/// Values with magnitude in `[0.001, 10000)` are written positionally,
/// everything else in `d.ddde±x` form.
pub(crate) fn layout(negative: bool, digits: &str, exp: i64) -> String {
    debug_assert!(!digits.is_empty());
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if (-3..=3).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                out.push_str(digits);
                out.extend(core::iter::repeat_n('0', int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(core::iter::repeat_n('0', (-exp - 1) as usize));
            out.push_str(digits);
        }
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        let _ = write!(out, "e{exp}");
    }
    out
}

/// Decimal digits of `n` as a string (empty for zero).
pub(crate) fn digit_string(n: &BigUint) -> String {
    if n.is_zero() {
        String::new()
    } else {
        n.to_str_radix(10)
    }
}

/// Splits off the first `len` digits of `n` (which has exactly `total`
/// digits), returning the leading part.
pub(crate) fn leading_digits(n: &BigUint, total: u64, len: u64) -> BigUint {
    if len >= total {
        n.clone()
    } else {
        n / pow10(total - len)
    }
}

pub(crate) fn strip_trailing_zeros(mut n: BigUint, mut exp: i64) -> (BigUint, i64) {
    if n.is_zero() {
        return (n, 0);
    }
    // Big strides first so exact integers like 10^100 do not take 100 divisions.
    let mut stride = 16u64;
    while stride >= 1 {
        let p = pow10(stride);
        loop {
            let (q, r) = num_integer::Integer::div_rem(&n, &p);
            if !r.is_zero() {
                break;
            }
            n = q;
            exp += stride as i64;
        }
        stride /= 2;
    }
    (n, exp)
}
