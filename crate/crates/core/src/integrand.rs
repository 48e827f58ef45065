//! Built-in integrands on `[0, 1]` and their midpoint jets.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::arith::Arithmetic;
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::rat::Rat;

/// Names accepted by [`Integrand::from_name`]; `poly:k` takes any `k >= 0`.
pub const BUILTIN_NAMES: [&str; 4] = ["arctan-kernel", "exp", "runge", "poly:k"];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Integrand {
    /// `x / (1 + x²t²)`, whose integral over `[0, 1]` is `arctan(x)`.
    ArctanKernel { x: Rat },
    /// `e^t`. Float mode only.
    Exp,
    /// `1 / (1 + 25t²)`.
    Runge,
    /// `t^k`.
    Poly(u32),
}

impl Integrand {
    pub fn arctan_kernel(x: Rat) -> Self {
        Integrand::ArctanKernel { x }
    }

    /// Looks up a built-in by its CLI name. `x` parameterizes the arctan
    /// kernel (default 1) and is ignored by the others.
    pub fn from_name(name: &str, x: Option<Rat>) -> Result<Self> {
        match name {
            "arctan-kernel" | "arctan" => Ok(Integrand::ArctanKernel { x: x.unwrap_or_else(Rat::one) }),
            "exp" => Ok(Integrand::Exp),
            "runge" => Ok(Integrand::Runge),
            _ => name
                .strip_prefix("poly:")
                .and_then(|k| k.parse().ok())
                .map(Integrand::Poly)
                .ok_or_else(|| Error::UnknownIntegrand(name.to_string())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Integrand::ArctanKernel { .. } => "arctan-kernel".to_string(),
            Integrand::Exp => "exp".to_string(),
            Integrand::Runge => "runge".to_string(),
            Integrand::Poly(k) => format!("poly:{k}"),
        }
    }

    pub fn parameter(&self) -> Option<&Rat> {
        match self {
            Integrand::ArctanKernel { x } => Some(x),
            _ => None,
        }
    }

    /// Whether every jet coefficient at a rational center is rational.
    pub fn exact_capable(&self) -> bool {
        !matches!(self, Integrand::Exp)
    }

    /// `∫₀¹ f` when it is rational.
    pub fn exact_integral(&self) -> Option<Rat> {
        match self {
            Integrand::Poly(k) => Some(Rat::new(1, *k as i64 + 1).expect("nonzero")),
            Integrand::ArctanKernel { x } if x.is_zero() => Some(Rat::zero()),
            _ => None,
        }
    }

    /// Order-`order` jet of the integrand about `center`.
    pub fn jet<A: Arithmetic>(&self, arith: &A, center: &A::Scalar, order: u32) -> Result<Jet<A::Scalar>> {
        match self {
            Integrand::ArctanKernel { x } => {
                let x = arith.from_rat(x);
                let x2 = arith.mul(&x, &x);
                let denom = quadratic(arith, center, &x2, order)?;
                Ok(denom.reciprocal(arith)?.scale(&x, arith))
            }
            Integrand::Runge => {
                let denom = quadratic(arith, center, &arith.from_int(25), order)?;
                denom.reciprocal(arith)
            }
            Integrand::Exp => {
                let e = arith.exp(center).ok_or_else(|| Error::ExactModeUnsupported(self.name()))?;
                let mut coeffs = Vec::with_capacity(order as usize + 1);
                coeffs.push(e);
                for m in 1..=order {
                    let next = arith.div(&coeffs[m as usize - 1], &arith.from_int(m as i64))?;
                    coeffs.push(next);
                }
                Ok(Jet::from_coeffs(center.clone(), coeffs))
            }
            Integrand::Poly(k) => {
                // c_m = C(k, m) t0^(k-m)
                let k = *k;
                let mut powers = Vec::with_capacity(k as usize + 1);
                powers.push(arith.one());
                for i in 1..=k as usize {
                    powers.push(arith.mul(&powers[i - 1], center));
                }
                let mut binom = Rat::one();
                let coeffs = (0..=order)
                    .map(|m| {
                        if m > k {
                            return arith.zero();
                        }
                        if m > 0 {
                            binom = &binom * &Rat::new(k - m + 1, m).expect("nonzero");
                        }
                        arith.mul(&arith.from_rat(&binom), &powers[(k - m) as usize])
                    })
                    .collect();
                Ok(Jet::from_coeffs(center.clone(), coeffs))
            }
        }
    }

    /// `f(t)` evaluated directly, without jets.
    pub fn eval<A: Arithmetic>(&self, arith: &A, t: &A::Scalar) -> Result<A::Scalar> {
        let t2 = arith.mul(t, t);
        match self {
            Integrand::ArctanKernel { x } => {
                let x = arith.from_rat(x);
                let x2t2 = arith.mul(&arith.mul(&x, &x), &t2);
                arith.div(&x, &arith.add(&arith.one(), &x2t2))
            }
            Integrand::Runge => {
                let d = arith.add(&arith.one(), &arith.mul(&arith.from_int(25), &t2));
                arith.div(&arith.one(), &d)
            }
            Integrand::Exp => arith.exp(t).ok_or_else(|| Error::ExactModeUnsupported(self.name())),
            Integrand::Poly(k) => Ok((0..*k).fold(arith.one(), |acc, _| arith.mul(&acc, t))),
        }
    }
}

/// Jet of `1 + a·t²` about `center`.
fn quadratic<A: Arithmetic>(arith: &A, center: &A::Scalar, a: &A::Scalar, order: u32) -> Result<Jet<A::Scalar>> {
    let t = Jet::affine(arith, center.clone(), arith.one(), order);
    Ok(t.mul(&t, arith)?.scale(a, arith).add_constant(&arith.one(), arith))
}

impl fmt::Display for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integrand::ArctanKernel { x } => write!(f, "arctan-kernel(x={x})"),
            other => f.write_str(&other.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Exact, Float};
    use alloc::vec;

    fn q(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn qs(items: &[&str]) -> Vec<Rat> {
        items.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn registry() {
        assert_eq!(Integrand::from_name("exp", None).unwrap(), Integrand::Exp);
        assert_eq!(Integrand::from_name("poly:7", None).unwrap(), Integrand::Poly(7));
        assert_eq!(Integrand::from_name("arctan-kernel", None).unwrap(), Integrand::arctan_kernel(Rat::one()));
        assert_eq!(Integrand::from_name("sin", None), Err(Error::UnknownIntegrand("sin".into())));
        assert!(Integrand::from_name("poly:x", None).is_err());
        assert_eq!(Integrand::Poly(3).name(), "poly:3");
    }

    #[test]
    fn arctan_kernel_jets() {
        // f = 1/(1+t²): f(1/2) = 4/5, f'(1/2) = -2t/(1+t²)² = -16/25.
        let f = Integrand::arctan_kernel(q("1"));
        let j = f.jet(&Exact, &q("1/2"), 1).unwrap();
        assert_eq!(j.coeffs(), qs(&["4/5", "-16/25"]).as_slice());
        // Maclaurin: 1 - t² + ...
        let j = f.jet(&Exact, &q("0"), 2).unwrap();
        assert_eq!(j.coeffs(), qs(&["1", "0", "-1"]).as_slice());
        let zero = Integrand::arctan_kernel(q("0")).jet(&Exact, &q("3/7"), 4).unwrap();
        assert_eq!(zero.coeffs(), vec![Rat::zero(); 5].as_slice());
    }

    #[test]
    fn poly_jets() {
        // t³ about 1/2: 1/8, 3/4, 3/2, 1, 0
        let j = Integrand::Poly(3).jet(&Exact, &q("1/2"), 4).unwrap();
        assert_eq!(j.coeffs(), qs(&["1/8", "3/4", "3/2", "1", "0"]).as_slice());
        let j = Integrand::Poly(0).jet(&Exact, &q("1/3"), 2).unwrap();
        assert_eq!(j.coeffs(), qs(&["1", "0", "0"]).as_slice());
    }

    #[test]
    fn exp_is_float_only() {
        assert_eq!(Integrand::Exp.jet(&Exact, &q("1/2"), 2), Err(Error::ExactModeUnsupported("exp".into())));
        let float = Float::new(30).unwrap();
        let j = Integrand::Exp.jet(&float, &float.from_int(1), 3).unwrap();
        assert_eq!(j.coeffs()[0].render(20).unwrap(), "2.7182818284590452353");
        assert_eq!(j.coeffs()[3].render(20).unwrap(), "0.45304697140984087256");
    }

    #[test]
    fn eval_matches_constant_coefficient() {
        let center = q("3/10");
        for f in [Integrand::arctan_kernel(q("2/3")), Integrand::Runge, Integrand::Poly(5)] {
            let j = f.jet(&Exact, &center, 3).unwrap();
            assert_eq!(f.eval(&Exact, &center).unwrap(), j.coeffs()[0], "{f}");
        }
    }
}
