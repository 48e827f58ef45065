//! Enhanced midpoint integration on `[0, 1]`.
//!
//! The interval is split into `L` equal subintervals. About each midpoint
//! `t_ℓ = (ℓ - 1/2)/L` the integrand is expanded to Taylor order `M` and the
//! expansion is integrated term by term over the subinterval:
//!
//! ```text
//! ΔI_ℓ = Σ_{m even, m ≤ M} w_m c_m,   w_m = 2 / ((2L)^(m+1) (m+1))
//! ```
//!
//! where `c_m = f^(m)(t_ℓ)/m!` are the jet coefficients. Odd orders integrate
//! to zero over the symmetric subinterval and are skipped. `M = 0` is the
//! plain composite midpoint rule.

use alloc::vec::Vec;

use crate::arith::{Arithmetic, Exact, Float, Mode, Value};
use crate::error::{Error, Result};
use crate::integrand::Integrand;
use crate::jet::Jet;
use crate::rat::Rat;

pub const DEFAULT_PRECISION: u32 = 60;

/// Parameters of one quadrature run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EmiConfig {
    /// `L`, the number of subintervals.
    pub subintervals: u32,
    /// `M`, the Taylor order at each midpoint.
    pub order: u32,
    pub mode: Mode,
    /// Output digits. Float mode computes with extra guard digits on top;
    /// exact mode only uses it when rendering.
    pub precision: u32,
}

impl EmiConfig {
    pub fn new(subintervals: u32, order: u32) -> Self {
        EmiConfig { subintervals, order, mode: Mode::Float, precision: DEFAULT_PRECISION }
    }

    pub fn exact(subintervals: u32, order: u32) -> Self {
        EmiConfig { mode: Mode::Exact, ..EmiConfig::new(subintervals, order) }
    }

    pub fn float(subintervals: u32, order: u32, precision: u32) -> Self {
        EmiConfig { precision, ..EmiConfig::new(subintervals, order) }
    }

    pub fn term_count(&self) -> u64 {
        term_count(self.subintervals, self.order)
    }

    pub fn validate(&self) -> Result<()> {
        if self.subintervals == 0 {
            return Err(Error::NoSubintervals);
        }
        if self.mode == Mode::Float {
            Float::for_output(self.precision)?;
        }
        Ok(())
    }
}

/// Nonzero summands in the truncated double sum: `L · (⌊M/2⌋ + 1)`.
pub fn term_count(subintervals: u32, order: u32) -> u64 {
    subintervals as u64 * (order as u64 / 2 + 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadResult {
    pub value: Value,
    pub config: EmiConfig,
    pub term_count: u64,
}

/// Midpoint of subinterval `ell` (1-based): `(2ℓ - 1) / (2L)`.
pub fn midpoint(subintervals: u32, ell: u32) -> Rat {
    Rat::new(2 * ell as i64 - 1, 2 * subintervals as i64).expect("subintervals >= 1")
}

/// Exact weights `w_0..w_M` multiplying the jet coefficients.
pub fn emi_weights(subintervals: u32, order: u32) -> Vec<Rat> {
    let two_l = Rat::from(2 * subintervals as i64);
    let mut power = two_l.clone();
    (0..=order)
        .map(|m| {
            let w = if m % 2 == 0 {
                Rat::from(2).checked_div(&(&power * &Rat::from(m as i64 + 1))).expect("nonzero")
            } else {
                Rat::zero()
            };
            power = &power * &two_l;
            w
        })
        .collect()
}

/// Truncated subinterval integral `Σ w_m c_m` for a jet about a midpoint.
pub fn emi_subinterval<A: Arithmetic>(arith: &A, jet: &Jet<A::Scalar>, subintervals: u32) -> A::Scalar {
    let weights: Vec<A::Scalar> = emi_weights(subintervals, jet.order()).iter().map(|w| arith.from_rat(w)).collect();
    weighted_sum(arith, jet.coeffs(), &weights)
}

fn weighted_sum<A: Arithmetic>(arith: &A, coeffs: &[A::Scalar], weights: &[A::Scalar]) -> A::Scalar {
    coeffs.iter().zip(weights).step_by(2).fold(arith.zero(), |acc, (c, w)| arith.add(&acc, &arith.mul(w, c)))
}

/// Balanced-tree sum with a fixed split, so the rounding pattern depends only
/// on the number of terms.
pub fn pairwise_sum<A: Arithmetic>(arith: &A, values: &[A::Scalar]) -> A::Scalar {
    match values {
        [] => arith.zero(),
        [only] => only.clone(),
        _ => {
            let (left, right) = values.split_at(values.len() / 2);
            arith.add(&pairwise_sum(arith, left), &pairwise_sum(arith, right))
        }
    }
}

/// A prepared `(integrand, L, M)` run: weights are converted once and each
/// subinterval can then be evaluated independently.
#[derive(Debug, Clone)]
pub struct EmiPlan<A: Arithmetic> {
    arith: A,
    integrand: Integrand,
    subintervals: u32,
    order: u32,
    weights: Vec<A::Scalar>,
}

impl<A: Arithmetic> EmiPlan<A> {
    pub fn new(arith: A, integrand: Integrand, subintervals: u32, order: u32) -> Result<Self> {
        if subintervals == 0 {
            return Err(Error::NoSubintervals);
        }
        if arith.is_exact() && !integrand.exact_capable() {
            return Err(Error::ExactModeUnsupported(integrand.name()));
        }
        let weights = emi_weights(subintervals, order).iter().map(|w| arith.from_rat(w)).collect();
        Ok(EmiPlan { arith, integrand, subintervals, order, weights })
    }

    pub fn arith(&self) -> &A {
        &self.arith
    }

    pub fn subintervals(&self) -> u32 {
        self.subintervals
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `ΔI_ℓ` for `ell` in `1..=L`.
    pub fn term(&self, ell: u32) -> Result<A::Scalar> {
        let center = self.arith.from_rat(&midpoint(self.subintervals, ell));
        let jet = self.integrand.jet(&self.arith, &center, self.order)?;
        Ok(weighted_sum(&self.arith, jet.coeffs(), &self.weights))
    }

    pub fn terms(&self) -> Result<Vec<A::Scalar>> {
        (1..=self.subintervals).map(|ell| self.term(ell)).collect()
    }

    /// Reduces subinterval terms (in `ℓ` order) to the integral.
    pub fn sum(&self, terms: &[A::Scalar]) -> A::Scalar {
        pairwise_sum(&self.arith, terms)
    }

    pub fn integrate(&self) -> Result<A::Scalar> {
        Ok(self.sum(&self.terms()?))
    }
}

/// Runs `config` against `integrand` sequentially.
pub fn emi_integrate(integrand: &Integrand, config: &EmiConfig) -> Result<QuadResult> {
    config.validate()?;
    let value = match config.mode {
        Mode::Exact => {
            Value::Exact(EmiPlan::new(Exact, integrand.clone(), config.subintervals, config.order)?.integrate()?)
        }
        Mode::Float => {
            let arith = Float::for_output(config.precision)?;
            Value::Float(EmiPlan::new(arith, integrand.clone(), config.subintervals, config.order)?.integrate()?)
        }
    };
    Ok(QuadResult { value, config: *config, term_count: config.term_count() })
}

/// Plain composite midpoint rule `(1/L) Σ f((ℓ - 1/2)/L)`, evaluating the
/// integrand directly rather than through jets.
pub fn midpoint_rule_with<A: Arithmetic>(arith: &A, integrand: &Integrand, subintervals: u32) -> Result<A::Scalar> {
    if subintervals == 0 {
        return Err(Error::NoSubintervals);
    }
    let values = (1..=subintervals)
        .map(|ell| integrand.eval(arith, &arith.from_rat(&midpoint(subintervals, ell))))
        .collect::<Result<Vec<_>>>()?;
    arith.div(&pairwise_sum(arith, &values), &arith.from_int(subintervals as i64))
}

pub fn midpoint_rule(integrand: &Integrand, subintervals: u32, mode: Mode, precision: u32) -> Result<Value> {
    match mode {
        Mode::Exact => {
            if !integrand.exact_capable() {
                return Err(Error::ExactModeUnsupported(integrand.name()));
            }
            midpoint_rule_with(&Exact, integrand, subintervals).map(Value::Exact)
        }
        Mode::Float => midpoint_rule_with(&Float::for_output(precision)?, integrand, subintervals).map(Value::Float),
    }
}

/// Printed closed forms of the arctangent sum for `M ∈ {0, 2, 6}`, evaluated
/// term by term in the grouping they are written in. Written independently
/// of the jet machinery so the two can check each other.
pub fn closed_form_arctan_with<A: Arithmetic>(arith: &A, x: &Rat, subintervals: u32, order: u32) -> Result<A::Scalar> {
    if !matches!(order, 0 | 2 | 6) {
        return Err(Error::UnsupportedOrder(order));
    }
    if subintervals == 0 {
        return Err(Error::NoSubintervals);
    }
    let int = |n: i64| arith.from_int(n);
    let mul = |a: &A::Scalar, b: &A::Scalar| arith.mul(a, b);
    let pow = |a: &A::Scalar, n: u32| (0..n).fold(arith.one(), |acc, _| mul(&acc, a));

    let l = int(subintervals as i64);
    let x = arith.from_rat(x);
    let l2 = mul(&l, &l);
    let x2 = mul(&x, &x);
    let four_l = mul(&int(4), &l);

    let terms = (1..=subintervals)
        .map(|ell| -> Result<A::Scalar> {
            let k = int(2 * ell as i64 - 1);
            let k2 = mul(&k, &k);
            let k2x2 = mul(&k2, &x2);
            // 4L² + (2ℓ-1)²x²
            let d = arith.add(&mul(&int(4), &l2), &k2x2);

            // 4Lx / d
            let mut term = arith.div(&mul(&four_l, &x), &d)?;
            if order >= 2 {
                // 4Lx³(4L² - 3(2ℓ-1)²x²) / (3d³)
                let poly = arith.sub(&mul(&int(4), &l2), &mul(&int(3), &k2x2));
                let num = mul(&mul(&four_l, &pow(&x, 3)), &poly);
                term = arith.sub(&term, &arith.div(&num, &mul(&int(3), &pow(&d, 3)))?);
            }
            if order >= 6 {
                // 4Lx⁵(16L⁴ - 40(2ℓ-1)²L²x² + 5(2ℓ-1)⁴x⁴) / (5d⁵)
                let poly = arith.add(
                    &arith.sub(&mul(&int(16), &pow(&l, 4)), &mul(&int(40), &mul(&k2, &mul(&l2, &x2)))),
                    &mul(&int(5), &mul(&pow(&k, 4), &pow(&x, 4))),
                );
                let num = mul(&mul(&four_l, &pow(&x, 5)), &poly);
                term = arith.add(&term, &arith.div(&num, &mul(&int(5), &pow(&d, 5)))?);

                // 4Lx⁷(64L⁶ - 336(2ℓ-1)²L⁴x² + 140(2ℓ-1)⁴L²x⁴ - 7(2ℓ-1)⁶x⁶) / (7d⁷)
                let poly = arith.sub(
                    &arith.add(
                        &arith.sub(&mul(&int(64), &pow(&l, 6)), &mul(&int(336), &mul(&k2, &mul(&pow(&l, 4), &x2)))),
                        &mul(&int(140), &mul(&pow(&k, 4), &mul(&l2, &pow(&x, 4)))),
                    ),
                    &mul(&int(7), &mul(&pow(&k, 6), &pow(&x, 6))),
                );
                let num = mul(&mul(&four_l, &pow(&x, 7)), &poly);
                term = arith.sub(&term, &arith.div(&num, &mul(&int(7), &pow(&d, 7)))?);
            }
            Ok(term)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(pairwise_sum(arith, &terms))
}

pub fn closed_form_arctan(x: &Rat, subintervals: u32, order: u32, mode: Mode, precision: u32) -> Result<Value> {
    match mode {
        Mode::Exact => closed_form_arctan_with(&Exact, x, subintervals, order).map(Value::Exact),
        Mode::Float => {
            closed_form_arctan_with(&Float::for_output(precision)?, x, subintervals, order).map(Value::Float)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn exact(integrand: &Integrand, l: u32, m: u32) -> Rat {
        emi_integrate(integrand, &EmiConfig::exact(l, m)).unwrap().value.as_rat().unwrap().clone()
    }

    #[test]
    fn weights() {
        assert_eq!(emi_weights(1, 2), vec![q("1"), q("0"), q("1/12")]);
        for l in [1, 3, 10] {
            let w = emi_weights(l, 7);
            for m in [1, 3, 5, 7] {
                assert!(w[m].is_zero());
            }
            assert_eq!(w[0], Rat::new(1, l as i64).unwrap());
        }
        assert_eq!(emi_weights(2, 4)[4], Rat::new(2, 4i64.pow(5) * 5).unwrap());
    }

    #[test]
    fn subinterval_examples() {
        let j = Jet::from_coeffs(q("1/8"), vec![q("3/2")]);
        assert_eq!(emi_subinterval(&Exact, &j, 4), q("3/8"));
        let t2 = Jet::from_coeffs(q("1/2"), vec![q("1/4"), q("1"), q("1")]);
        assert_eq!(emi_subinterval(&Exact, &t2, 1), q("1/3"));
        let f = Integrand::arctan_kernel(Rat::one());
        let j = f.jet(&Exact, &q("1/2"), 0).unwrap();
        assert_eq!(emi_subinterval(&Exact, &j, 1), q("4/5"));
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(exact(&Integrand::Poly(3), 1, 2), q("1/4"));
        assert_eq!(exact(&Integrand::Poly(1), 7, 0), q("1/2"));
        let r = emi_integrate(&Integrand::Poly(2), &EmiConfig::exact(5, 7)).unwrap();
        assert_eq!(r.term_count, 20);
    }

    #[test]
    fn published_midpoint_value() {
        let f = Integrand::arctan_kernel(Rat::one());
        let r = emi_integrate(&f, &EmiConfig::float(1000, 0, 60)).unwrap();
        assert_eq!(r.value.render(11).unwrap(), "0.78539818423");
    }

    #[test]
    fn rejects_bad_configs() {
        assert_eq!(
            emi_integrate(&Integrand::Exp, &EmiConfig::exact(4, 2)),
            Err(Error::ExactModeUnsupported("exp".into()))
        );
        assert_eq!(emi_integrate(&Integrand::Runge, &EmiConfig::exact(0, 2)), Err(Error::NoSubintervals));
        assert!(matches!(
            emi_integrate(&Integrand::Runge, &EmiConfig::float(2, 2, 5)),
            Err(Error::PrecisionTooLow { .. })
        ));
    }

    #[test]
    fn midpoint_rule_is_order_zero() {
        for f in [Integrand::arctan_kernel(q("2/3")), Integrand::Runge, Integrand::Poly(4)] {
            for l in [1, 2, 5, 9] {
                let direct = midpoint_rule(&f, l, Mode::Exact, 60).unwrap();
                assert_eq!(direct.as_rat().unwrap(), &exact(&f, l, 0), "{f} L={l}");
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            closed_form_arctan(&Rat::one(), 2, 0, Mode::Exact, 60).unwrap(),
            Value::Exact(&q("8/17") + &q("8/25"))
        );
        for m in [0, 2, 6] {
            assert_eq!(closed_form_arctan(&Rat::zero(), 7, m, Mode::Exact, 60).unwrap(), Value::Exact(Rat::zero()));
        }
        assert_eq!(closed_form_arctan(&Rat::one(), 2, 4, Mode::Exact, 60), Err(Error::UnsupportedOrder(4)));
    }

    #[test]
    fn closed_form_matches_generic_engine() {
        for x in ["1", "1/2", "1/3", "2"] {
            let f = Integrand::arctan_kernel(q(x));
            for l in [1, 2, 10] {
                for m in [0, 2, 6] {
                    let closed = closed_form_arctan_with(&Exact, &q(x), l, m).unwrap();
                    assert_eq!(closed, exact(&f, l, m), "x={x} L={l} M={m}");
                }
            }
        }
    }

    #[test]
    fn float_tracks_exact() {
        let f = Integrand::Runge;
        let exact_value = Value::Exact(exact(&f, 12, 8));
        let float_value = emi_integrate(&f, &EmiConfig::float(12, 8, 40)).unwrap().value;
        assert_eq!(exact_value.render(40).unwrap(), float_value.render(40).unwrap());
    }
}
