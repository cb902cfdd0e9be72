use alloc::format;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::LaurentPoly;

/// An element of `R[Pin(2)]`, the span of `1`, `1_-` and `μ_k` (`k ≥ 1`),
/// stored as its restriction to the circle (a symmetric Laurent polynomial
/// in `ξ`) together with its trace at `j`.
///
/// `μ_k` restricts to `ξ^k + ξ^{-k}` and has trace 0; `1` and `1_-` both
/// restrict to 1, with traces `1` and `-1`. This encoding is faithful and
/// turns the ring structure into componentwise arithmetic.
#[derive(Clone, Debug, PartialEq)]
pub struct Pin2Element {
    restriction: LaurentPoly<BigInt>,
    trace_j: BigInt,
}

impl Pin2Element {
    /// Checks symmetry under `ξ ↦ ξ^{-1}` and that the constant term and the
    /// trace have the same parity.
    pub fn new(restriction: LaurentPoly<BigInt>, trace_j: BigInt) -> Result<Self> {
        if !restriction.is_symmetric() {
            return Err(Error::InvalidInput(format!(
                "circle restriction {restriction} is not symmetric under ξ ↦ ξ^-1"
            )));
        }
        if (restriction.coeff(0) - &trace_j).is_odd() {
            return Err(Error::InvalidInput(format!(
                "constant term {} and trace {trace_j} differ in parity",
                restriction.coeff(0)
            )));
        }
        Ok(Pin2Element { restriction, trace_j })
    }

    pub fn zero() -> Self {
        Pin2Element {
            restriction: LaurentPoly::zero(()),
            trace_j: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        Pin2Element {
            restriction: LaurentPoly::one(()),
            trace_j: BigInt::one(),
        }
    }

    /// The sign representation `1_-`.
    pub fn sign() -> Self {
        Pin2Element {
            restriction: LaurentPoly::one(()),
            trace_j: -BigInt::one(),
        }
    }

    /// `μ_k`, with `μ_0 = 1 + 1_-`.
    pub fn mu(k: u32) -> Self {
        if k == 0 {
            return &Self::one() + &Self::sign();
        }
        let k = k as i64;
        Pin2Element {
            restriction: LaurentPoly::from_terms((), [(k, BigInt::one()), (-k, BigInt::one())]),
            trace_j: BigInt::zero(),
        }
    }

    /// `n_0 · 1 + n_- · 1_- + Σ_k mu[k-1] · μ_k`.
    pub fn from_coefficients(n0: BigInt, n_minus: BigInt, mu: &[BigInt]) -> Self {
        let mut out = &Self::one().scale(&n0) + &Self::sign().scale(&n_minus);
        for (i, n) in mu.iter().enumerate() {
            out = &out + &Self::mu(i as u32 + 1).scale(n);
        }
        out
    }

    /// Inverse of [`Pin2Element::from_coefficients`]; the `μ` list runs up
    /// to the highest nonzero one.
    pub fn coefficients(&self) -> (BigInt, BigInt, Vec<BigInt>) {
        let c0 = self.restriction.coeff(0);
        let n0 = (&c0 + &self.trace_j) / 2;
        let n_minus = (&c0 - &self.trace_j) / 2;
        let top = self.restriction.max_exp().unwrap_or(0).max(0);
        let mu = (1..=top).map(|k| self.restriction.coeff(k)).collect();
        (n0, n_minus, mu)
    }

    pub fn restrict_s1(&self) -> &LaurentPoly<BigInt> {
        &self.restriction
    }

    pub fn trace_j(&self) -> &BigInt {
        &self.trace_j
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        Pin2Element {
            restriction: self.restriction.scale(n),
            trace_j: &self.trace_j * n,
        }
    }

    /// Second Adams operation: `ξ ↦ ξ²` on the restriction, and the new
    /// trace at `j` is the old character at `j² = -1`, i.e. the restriction
    /// evaluated at `ξ = -1`.
    pub fn psi2(&self) -> Self {
        let trace =
            self.restriction.terms().fold(
                BigInt::zero(),
                |acc, (e, c)| if e.is_even() { acc + c } else { acc - c },
            );
        Pin2Element {
            restriction: self.restriction.dilate(2),
            trace_j: trace,
        }
    }
}

/// Trace of `j` on a `Pin(2)` representation.
pub fn trace_j(e: &Pin2Element) -> BigInt {
    e.trace_j.clone()
}

/// Restriction of a `Pin(2)` representation to the circle.
pub fn restrict_s1(e: &Pin2Element) -> LaurentPoly<BigInt> {
    e.restriction.clone()
}

impl Add for &Pin2Element {
    type Output = Pin2Element;

    fn add(self, rhs: &Pin2Element) -> Pin2Element {
        Pin2Element {
            restriction: &self.restriction + &rhs.restriction,
            trace_j: &self.trace_j + &rhs.trace_j,
        }
    }
}

impl Sub for &Pin2Element {
    type Output = Pin2Element;

    fn sub(self, rhs: &Pin2Element) -> Pin2Element {
        Pin2Element {
            restriction: &self.restriction - &rhs.restriction,
            trace_j: &self.trace_j - &rhs.trace_j,
        }
    }
}

impl Mul for &Pin2Element {
    type Output = Pin2Element;

    fn mul(self, rhs: &Pin2Element) -> Pin2Element {
        Pin2Element {
            restriction: &self.restriction * &rhs.restriction,
            trace_j: &self.trace_j * &rhs.trace_j,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projections_of_generators() {
        assert_eq!(trace_j(&Pin2Element::sign()), BigInt::from(-1));
        assert_eq!(restrict_s1(&Pin2Element::sign()), LaurentPoly::one(()));
        let m1 = Pin2Element::mu(1);
        assert_eq!(trace_j(&m1), BigInt::zero());
        assert_eq!(
            restrict_s1(&m1),
            LaurentPoly::from_terms((), [(1, BigInt::one()), (-1, BigInt::one())])
        );
        assert_eq!(trace_j(&Pin2Element::one()), BigInt::one());
    }

    #[test]
    fn sign_squares_to_one() {
        assert_eq!(&Pin2Element::sign() * &Pin2Element::sign(), Pin2Element::one());
        assert_eq!(&Pin2Element::sign() * &Pin2Element::mu(3), Pin2Element::mu(3));
    }

    #[test]
    fn psi2_of_mu1() {
        let expected = &(&Pin2Element::mu(2) - &Pin2Element::one()) + &Pin2Element::sign();
        assert_eq!(Pin2Element::mu(1).psi2(), expected);
        assert_eq!(Pin2Element::sign().psi2(), Pin2Element::one());
    }

    #[test]
    fn invalid_encodings_are_rejected() {
        let asym = LaurentPoly::from_terms((), [(1, BigInt::one())]);
        assert!(Pin2Element::new(asym, BigInt::zero()).is_err());
        assert!(Pin2Element::new(LaurentPoly::one(()), BigInt::zero()).is_err());
        assert!(Pin2Element::new(LaurentPoly::one(()), BigInt::from(-1)).is_ok());
    }
}
