//! π as four times the arctangent integral at `x = 1`, digit matching against
//! a reference expansion, and convergence scans over `(L, M)` grids.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::{Exact, Mode, Value, GUARD_DIGITS};
use crate::decimal::parse_numeral;
use crate::error::{Error, Result};
use crate::integrand::Integrand;
use crate::quadrature::{closed_form_arctan, emi_integrate, midpoint, EmiConfig};
use crate::rat::Rat;
use crate::real::Real;

/// π truncated to 125 significant digits.
pub const PI_DIGITS: &str = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679821480865132823066470938";

/// The 50-digit expansion π is compared against in the original digit-count runs.
pub const PUBLISHED_PI_PREFIX: &str = "3.1415926535897932384626433832795028841971693993751";

/// Significant digits used for the absolute-error column.
const ERROR_DIGITS: u32 = 6;

/// A decimal expansion of π used as the digit-matching reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferencePi {
    digits: String,
}

impl Default for ReferencePi {
    fn default() -> Self {
        ReferencePi::standard()
    }
}

impl ReferencePi {
    pub fn standard() -> Self {
        ReferencePi { digits: PI_DIGITS.to_string() }
    }

    /// A custom expansion; must be a plain decimal numeral.
    pub fn from_digits(digits: impl Into<String>) -> Result<Self> {
        let digits = digits.into();
        parse_numeral(&digits).ok_or_else(|| Error::Parse(digits.clone()))?;
        Ok(ReferencePi { digits })
    }

    pub fn as_str(&self) -> &str {
        &self.digits
    }

    /// Number of significant digits carried.
    pub fn len(&self) -> usize {
        parse_numeral(&self.digits).map_or(0, |n| n.digits.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the expansion starts with [`PUBLISHED_PI_PREFIX`].
    pub fn has_published_prefix(&self) -> bool {
        self.digits.starts_with(PUBLISHED_PI_PREFIX)
    }

    pub fn to_real(&self, precision: u32) -> Result<Real> {
        Real::parse(&self.digits, precision)
    }
}

/// Leading significant digits of `value` that coincide with the reference,
/// decimal point excluded; `"3.141592…"` against π counts 7 for `3.141592`.
/// Values of a different magnitude than the reference match nothing.
pub fn matched_digits(value: &str, reference: &ReferencePi) -> Result<usize> {
    let v = parse_numeral(value).ok_or_else(|| Error::Parse(value.to_string()))?;
    let r = parse_numeral(reference.as_str()).ok_or_else(|| Error::Parse(reference.as_str().to_string()))?;
    if v.negative != r.negative || v.leading_exponent() != r.leading_exponent() {
        return Ok(0);
    }
    Ok(v.digits.bytes().zip(r.digits.bytes()).take_while(|(a, b)| a == b).count())
}

/// `L · (⌊M/2⌋ + 1)`, the number of nonzero summands.
pub fn term_count(subintervals: u32, order: u32) -> u64 {
    crate::quadrature::term_count(subintervals, order)
}

/// `4 · value`, i.e. π from an approximation of `arctan(1)`.
pub fn four_times(value: Value) -> Value {
    match value {
        Value::Exact(q) => Value::Exact(&q * &Rat::from(4)),
        Value::Float(r) => {
            let four = Real::from_integer(4, r.precision()).expect("working precision is valid");
            Value::Float(&r * &four)
        }
    }
}

/// π ≈ 4 · EMI(arctan kernel at x = 1, L, M).
pub fn pi_emi(subintervals: u32, order: u32, mode: Mode, precision: u32) -> Result<Value> {
    let config = EmiConfig { subintervals, order, mode, precision };
    let result = emi_integrate(&Integrand::arctan_kernel(Rat::one()), &config)?;
    Ok(four_times(result.value))
}

/// π ≈ 4 · the printed closed form at x = 1 (M ∈ {0, 2, 6}).
pub fn pi_closed_form(subintervals: u32, order: u32, mode: Mode, precision: u32) -> Result<Value> {
    closed_form_arctan(&Rat::one(), subintervals, order, mode, precision).map(four_times)
}

/// `g_{ℓ,m} = d^m/dt^m (1/(1+t²))` at the midpoint of subinterval `ell`, for
/// `m = 0..=order`, exactly.
pub fn g_coefficients(subintervals: u32, ell: u32, order: u32) -> Result<Vec<Rat>> {
    let center = midpoint(subintervals, ell);
    let jet = Integrand::arctan_kernel(Rat::one()).jet(&Exact, &center, order)?;
    Ok((0..=order).map(|m| jet.derivative(&Exact, m).expect("m within order")).collect())
}

/// One `(L, M)` cell of a scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub subintervals: u32,
    pub order: u32,
    /// The value truncated to the scan precision.
    pub value: String,
    pub matched_digits: usize,
    /// `|value - π|` truncated to a few significant digits.
    pub abs_error: String,
    /// `log₂(error(L/2) / error(L))` when the previous row has half this `L`.
    pub est_order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub mode: Mode,
    pub precision: u32,
    /// Sorted by `(M, L)`.
    pub rows: Vec<ScanRow>,
    /// Seconds since the Unix epoch, filled in by callers that have a clock.
    pub timestamp: Option<u64>,
}

impl ConvergenceReport {
    /// Builds a report from evaluated cells in any order.
    pub fn assemble(
        mode: Mode,
        precision: u32,
        mut cells: Vec<((u32, u32), Value)>,
        reference: &ReferencePi,
    ) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::EmptyScan);
        }
        cells.sort_by_key(|&((l, m), _)| (m, l));
        cells.dedup_by_key(|&mut (key, _)| key);

        let working = precision + GUARD_DIGITS;
        let pi = reference.to_real(working)?;
        let ceiling = (precision as usize).min(reference.len());
        let mut rows: Vec<ScanRow> = Vec::with_capacity(cells.len());
        let mut errors: Vec<Real> = Vec::with_capacity(cells.len());
        for ((l, m), value) in cells {
            let rendered = value.render(precision)?;
            let matched = matched_digits(&rendered, reference)?;
            if matched >= ceiling {
                return Err(Error::InsufficientPrecision { l, m, precision });
            }
            let error = (&value.to_real(working)? - &pi).abs();
            let est_order = match (rows.last(), errors.last()) {
                (Some(prev), Some(prev_err)) if prev.order == m && prev.subintervals * 2 == l && !error.is_zero() => {
                    Some(libm::log2(prev_err.checked_div(&error)?.to_f64()))
                }
                _ => None,
            };
            rows.push(ScanRow {
                subintervals: l,
                order: m,
                value: rendered,
                matched_digits: matched,
                abs_error: error.render(ERROR_DIGITS)?,
                est_order,
            });
            errors.push(error);
        }
        Ok(ConvergenceReport { mode, precision, rows, timestamp: None })
    }
}

/// Every `(L, M)` pair evaluated with `evaluate`, assembled into a report.
pub fn convergence_scan_with<F>(
    subintervals: &[u32],
    orders: &[u32],
    mode: Mode,
    precision: u32,
    reference: &ReferencePi,
    mut evaluate: F,
) -> Result<ConvergenceReport>
where
    F: FnMut(u32, u32) -> Result<Value>,
{
    if subintervals.is_empty() || orders.is_empty() {
        return Err(Error::EmptyScan);
    }
    let mut cells = Vec::with_capacity(subintervals.len() * orders.len());
    for &m in orders {
        for &l in subintervals {
            cells.push(((l, m), evaluate(l, m)?));
        }
    }
    ConvergenceReport::assemble(mode, precision, cells, reference)
}

/// Sequential scan of `pi_emi` over the grid.
pub fn convergence_scan(subintervals: &[u32], orders: &[u32], mode: Mode, precision: u32) -> Result<ConvergenceReport> {
    convergence_scan_with(subintervals, orders, mode, precision, &ReferencePi::standard(), |l, m| {
        pi_emi(l, m, mode, precision)
    })
}
