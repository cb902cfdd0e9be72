//! Elements of `Z[ω_p]` and `Q(ω_p)` for a prime `p`.
//!
//! Values are stored in the power basis `1, ω, …, ω^{p-2}`; the relation
//! `1 + ω + … + ω^{p-1} = 0` rewrites `ω^{p-1}` away, so two values are equal
//! exactly when their coefficient vectors are. For `p = 2` the basis is `{1}`
//! and `ω = -1`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};

use super::prime::Prime;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<T> {
    p: Prime,
    coeffs: Vec<T>,
}

pub type CyclotomicInteger = Cyclotomic<BigInt>;
pub type CyclotomicRational = Cyclotomic<BigRational>;

impl<T> Cyclotomic<T>
where
    T: Clone + Num + Neg<Output = T>,
{
    /// Builds `Σ coeffs[i] ω^i` from a vector of any length.
    pub fn from_coeffs(p: Prime, coeffs: Vec<T>) -> Self {
        let n = p.as_usize();
        let mut folded = vec![T::zero(); n];
        for (i, c) in coeffs.into_iter().enumerate() {
            let slot = &mut folded[i % n];
            *slot = slot.clone() + c;
        }
        Self::reduce_full(p, folded)
    }

    /// Reduces a length-`p` vector over `1, ω, …, ω^{p-1}` to the basis.
    fn reduce_full(p: Prime, mut full: Vec<T>) -> Self {
        debug_assert_eq!(full.len(), p.as_usize());
        let top = full.pop().unwrap_or_else(T::zero);
        if !top.is_zero() {
            for c in full.iter_mut() {
                *c = c.clone() - top.clone();
            }
        }
        Cyclotomic { p, coeffs: full }
    }

    pub fn zero(p: Prime) -> Self {
        Cyclotomic {
            p,
            coeffs: vec![T::zero(); p.as_usize() - 1],
        }
    }

    pub fn one(p: Prime) -> Self {
        Self::from_scalar(p, T::one())
    }

    pub fn from_scalar(p: Prime, value: T) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = value;
        out
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(p: Prime, k: i64) -> Self {
        let mut full = vec![T::zero(); p.as_usize()];
        full[p.residue(k)] = T::one();
        Self::reduce_full(p, full)
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.p
    }

    /// Coefficients in the basis `1, ω, …, ω^{p-2}`.
    #[inline]
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational scalar this value equals, if it lies in the base ring.
    pub fn as_scalar(&self) -> Option<&T> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: other.p.get(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Cyclotomic { p: self.p, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Cyclotomic { p: self.p, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.p.as_usize();
        let mut full = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = &mut full[(i + j) % n];
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        Ok(Self::reduce_full(self.p, full))
    }

    pub fn scale(&self, s: &T) -> Self {
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies the Galois automorphism `ω ↦ ω^k`; `k` must be prime to `p`.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert!(self.p.residue(k) != 0, "ω ↦ ω^0 is not an automorphism");
        let n = self.p.as_usize();
        let step = self.p.residue(k);
        let mut full = vec![T::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            let slot = &mut full[(i * step) % n];
            *slot = slot.clone() + c.clone();
        }
        Self::reduce_full(self.p, full)
    }

    /// Product of all conjugates other than the identity. Multiplying by
    /// `self` gives the field norm, which is rational.
    fn conjugate_product(&self) -> Self {
        (2..self.p.get() as i64).fold(Self::one(self.p), |acc, k| &acc * &self.galois(k))
    }

    /// Field norm `N(a) = Π_k σ_k(a)`, an element of the base ring.
    pub fn norm(&self) -> T {
        let full = self * &self.conjugate_product();
        debug_assert!(full.as_scalar().is_some(), "norm must be rational");
        full.coeffs[0].clone()
    }
}

impl CyclotomicInteger {
    pub fn to_rational(&self) -> CyclotomicRational {
        Cyclotomic {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// Returns `self / other` when the quotient lies in `Z[ω]`.
    pub fn divide_exact(&self, other: &Self) -> Result<Option<Self>> {
        self.check(other)?;
        let inv = other.to_rational().inverse().ok_or(Error::DivisionByZero)?;
        Ok((&self.to_rational() * &inv).to_integral())
    }
}

impl CyclotomicRational {
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let conj = self.conjugate_product();
        let norm = (self * &conj).coeffs[0].clone();
        Some(conj.scale(&norm.recip()))
    }

    pub fn to_integral(&self) -> Option<CyclotomicInteger> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(Cyclotomic { p: self.p, coeffs })
    }
}

/// Binary operation selector for [`cyc_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Mul,
}

/// Sum or product in `Z[ω_p]`, rejecting operands over different primes.
pub fn cyc_arith(a: &CyclotomicInteger, b: &CyclotomicInteger, op: CycOp) -> Result<CyclotomicInteger> {
    match op {
        CycOp::Add => a.checked_add(b),
        CycOp::Mul => a.checked_mul(b),
    }
}

// Operator impls panic on mismatched primes; use the `checked_*` forms on
// untrusted input.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, T> $trait<&'a Cyclotomic<T>> for &'a Cyclotomic<T>
        where
            T: Clone + Num + Neg<Output = T>,
        {
            type Output = Cyclotomic<T>;

            fn $method(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
                self.$checked(rhs)
                    .expect("cyclotomic operands over different primes")
            }
        }

        impl<T> $trait for Cyclotomic<T>
        where
            T: Clone + Num + Neg<Output = T>,
        {
            type Output = Cyclotomic<T>;

            fn $method(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<T> Neg for &Cyclotomic<T>
where
    T: Clone + Num + Neg<Output = T>,
{
    type Output = Cyclotomic<T>;

    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T> Neg for Cyclotomic<T>
where
    T: Clone + Num + Neg<Output = T>,
{
    type Output = Cyclotomic<T>;

    fn neg(self) -> Cyclotomic<T> {
        -&self
    }
}

impl<T> fmt::Debug for Cyclotomic<T>
where
    T: Clone + Num + Neg<Output = T> + Signed + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in Z[ω_{}]", self, self.p)
    }
}

impl<T> fmt::Display for Cyclotomic<T>
where
    T: Clone + Num + Neg<Output = T> + Signed + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}")?;
                    }
                    if i == 1 {
                        f.write_str("ω")?;
                    } else {
                        write!(f, "ω^{i}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn cyc(p: u32, coeffs: &[i64]) -> CyclotomicInteger {
        Cyclotomic::from_coeffs(prime(p), coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn omega_squared_reduces_for_p3() {
        let w = CyclotomicInteger::omega_pow(prime(3), 1);
        assert_eq!(&w * &w, cyc(3, &[-1, -1]));
    }

    #[test]
    fn one_plus_omega_times_one_plus_omega_squared() {
        // (1 + ω)(1 + ω²) = 1 in Z[ω_3]
        let a = cyc(3, &[1, 1]);
        let b = cyc(3, &[1, 0, 1]);
        assert_eq!(cyc_arith(&a, &b, CycOp::Mul).unwrap(), cyc(3, &[1]));
    }

    #[test]
    fn p2_degenerates_to_integers() {
        let w = CyclotomicInteger::omega_pow(Prime::TWO, 1);
        assert_eq!(w, cyc(2, &[-1]));
        assert_eq!(&w * &w, cyc(2, &[1]));
        assert_eq!(w.coeffs().len(), 1);
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = cyc(3, &[1]);
        let b = cyc(5, &[1]);
        assert_eq!(
            cyc_arith(&a, &b, CycOp::Add),
            Err(Error::ModulusMismatch { left: 3, right: 5 })
        );
    }

    #[test]
    fn norm_of_one_minus_omega_is_p() {
        for p in [2u32, 3, 5, 7, 11] {
            let a = cyc(p, &[1, -1]);
            assert_eq!(a.norm(), BigInt::from(p), "p = {p}");
        }
    }

    #[test]
    fn inverse_round_trips() {
        let p = prime(7);
        let a = cyc(7, &[3, -1, 0, 2, 5]).to_rational();
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, CyclotomicRational::one(p));
    }

    #[test]
    fn exact_division_detects_non_units() {
        // 1 - ω is a unit times (1 - ω²), but 2 does not divide 1 + ω.
        let a = cyc(5, &[1, 0, -1]);
        let b = cyc(5, &[1, -1]);
        assert!(a.divide_exact(&b).unwrap().is_some());
        assert!(cyc(5, &[1, 1]).divide_exact(&cyc(5, &[2])).unwrap().is_none());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(alloc::format!("{}", cyc(5, &[1, -1, 0, 2])), "1 - ω + 2ω^3");
        assert_eq!(alloc::format!("{}", CyclotomicInteger::zero(prime(3))), "0");
    }
}
