//! Truncated Taylor series ("jets").
//!
//! A jet of order `M` about `t0` stores `c_0..c_M` with `c_m = f^(m)(t0) / m!`.
//! Multiplying and inverting jets propagates all derivatives at once, so the
//! midpoint derivatives the quadrature needs come out of plain arithmetic on
//! `M + 1` coefficients with no symbolic differentiation.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::Arithmetic;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Jet<S> {
    center: S,
    coeffs: Vec<S>,
}

impl<S: Clone + PartialEq> Jet<S> {
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(center: S, coeffs: Vec<S>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least the constant coefficient");
        Jet { center, coeffs }
    }

    /// Seed jet `a0 + a1·ε` about `a0`, padded with zeros to `order`.
    pub fn affine<A: Arithmetic<Scalar = S>>(arith: &A, a0: S, a1: S, order: u32) -> Self {
        let mut coeffs = vec![arith.zero(); order as usize + 1];
        coeffs[0] = a0.clone();
        if order >= 1 {
            coeffs[1] = a1;
        }
        Jet { center: a0, coeffs }
    }

    /// The constant function `value` expanded about `center`.
    pub fn constant<A: Arithmetic<Scalar = S>>(arith: &A, center: S, value: S, order: u32) -> Self {
        let mut coeffs = vec![arith.zero(); order as usize + 1];
        coeffs[0] = value;
        Jet { center, coeffs }
    }

    pub fn order(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn center(&self) -> &S {
        &self.center
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// `f^(m)(t0) = m! · c_m`.
    pub fn derivative<A: Arithmetic<Scalar = S>>(&self, arith: &A, m: u32) -> Option<S> {
        let c = self.coeffs.get(m as usize)?;
        let mut value = c.clone();
        for k in 2..=m {
            value = arith.mul(&value, &arith.from_int(k as i64));
        }
        Some(value)
    }

    fn check_compatible(&self, other: &Jet<S>) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() || self.center != other.center {
            return Err(Error::JetMismatch);
        }
        Ok(())
    }

    /// Truncated Cauchy product.
    pub fn mul<A: Arithmetic<Scalar = S>>(&self, other: &Jet<S>, arith: &A) -> Result<Jet<S>> {
        self.check_compatible(other)?;
        let len = self.coeffs.len();
        let coeffs = (0..len)
            .map(|n| {
                (0..=n).fold(arith.zero(), |acc, k| {
                    let a = &self.coeffs[k];
                    let b = &other.coeffs[n - k];
                    if arith.is_zero(a) || arith.is_zero(b) {
                        acc
                    } else {
                        arith.add(&acc, &arith.mul(a, b))
                    }
                })
            })
            .collect();
        Ok(Jet { center: self.center.clone(), coeffs })
    }

    pub fn add<A: Arithmetic<Scalar = S>>(&self, other: &Jet<S>, arith: &A) -> Result<Jet<S>> {
        self.check_compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| arith.add(a, b)).collect();
        Ok(Jet { center: self.center.clone(), coeffs })
    }

    pub fn scale<A: Arithmetic<Scalar = S>>(&self, factor: &S, arith: &A) -> Jet<S> {
        let coeffs = self.coeffs.iter().map(|c| arith.mul(c, factor)).collect();
        Jet { center: self.center.clone(), coeffs }
    }

    pub fn add_constant<A: Arithmetic<Scalar = S>>(&self, k: &S, arith: &A) -> Jet<S> {
        let mut out = self.clone();
        out.coeffs[0] = arith.add(&out.coeffs[0], k);
        out
    }

    /// Series inversion: `b_0 = 1/a_0`, `b_n = -(1/a_0) Σ_{k=1..n} a_k b_{n-k}`.
    pub fn reciprocal<A: Arithmetic<Scalar = S>>(&self, arith: &A) -> Result<Jet<S>> {
        let a0 = &self.coeffs[0];
        if arith.is_zero(a0) {
            return Err(Error::PoleAtCenter);
        }
        let inv = arith.div(&arith.one(), a0)?;
        let mut out: Vec<S> = Vec::with_capacity(self.coeffs.len());
        out.push(inv.clone());
        for n in 1..self.coeffs.len() {
            let acc = (1..=n).fold(arith.zero(), |acc, k| {
                let a = &self.coeffs[k];
                if arith.is_zero(a) {
                    acc
                } else {
                    arith.add(&acc, &arith.mul(a, &out[n - k]))
                }
            });
            out.push(arith.neg(&arith.mul(&inv, &acc)));
        }
        Ok(Jet { center: self.center.clone(), coeffs: out })
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: u32) -> Jet<S> {
        let keep = (order as usize + 1).min(self.coeffs.len());
        Jet { center: self.center.clone(), coeffs: self.coeffs[..keep].to_vec() }
    }
}
