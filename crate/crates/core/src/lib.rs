//! Enhanced midpoint integration: the composite midpoint rule with Taylor
//! corrections of order `M` integrated analytically over every subinterval,
//! evaluated either exactly on rationals or in high-precision decimal
//! floating point. Applied to the arctangent integral it yields families of
//! arctangent identities and fast-converging sums for π.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod arith;
mod decimal;
mod error;
mod integrand;
mod jet;
pub mod pi;
mod quadrature;
mod rat;
mod real;

pub use arith::{Arithmetic, Exact, Float, Mode, Value, GUARD_DIGITS};
pub use decimal::{parse_numeral, Numeral};
pub use error::{Error, Result};
pub use integrand::{Integrand, BUILTIN_NAMES};
pub use jet::Jet;
pub use quadrature::{
    closed_form_arctan, closed_form_arctan_with, emi_integrate, emi_subinterval, emi_weights, midpoint, midpoint_rule,
    midpoint_rule_with, pairwise_sum, term_count, EmiConfig, EmiPlan, QuadResult, DEFAULT_PRECISION,
};
pub use rat::Rat;
pub use real::{rat_to_real, render_decimal, Real, MIN_PRECISION};
