use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::solve::solve_integer;
use crate::error::{Error, Result};
use crate::exact::{CyclotomicInteger, Prime};

/// A virtual representation `Σ mult[j] C_j` of `Z_p`, where the generator
/// acts on `C_j` by `ω^j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZpVirtualRep {
    p: Prime,
    mult: Vec<BigInt>,
}

impl ZpVirtualRep {
    pub fn new(p: Prime, mult: Vec<BigInt>) -> Result<Self> {
        if mult.len() != p.as_usize() {
            return Err(Error::InvalidInput(format!(
                "expected {p} character multiplicities, got {}",
                mult.len()
            )));
        }
        Ok(ZpVirtualRep { p, mult })
    }

    pub fn from_i64(p: Prime, mult: &[i64]) -> Result<Self> {
        Self::new(p, mult.iter().map(|&m| BigInt::from(m)).collect())
    }

    pub fn zero(p: Prime) -> Self {
        ZpVirtualRep {
            p,
            mult: vec![BigInt::zero(); p.as_usize()],
        }
    }

    /// `n C_0`.
    pub fn trivial(p: Prime, n: BigInt) -> Self {
        let mut out = Self::zero(p);
        out.mult[0] = n;
        out
    }

    pub fn one(p: Prime) -> Self {
        Self::trivial(p, BigInt::one())
    }

    /// The character `C_j`, with `j` taken mod `p`.
    pub fn character(p: Prime, j: i64) -> Self {
        let mut out = Self::zero(p);
        out.mult[p.residue(j)] = BigInt::one();
        out
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn mult(&self) -> &[BigInt] {
        &self.mult
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(Zero::is_zero)
    }

    /// Virtual dimension.
    pub fn dim(&self) -> BigInt {
        self.mult.iter().sum()
    }

    pub fn is_genuine(&self) -> bool {
        !self.mult.iter().any(Signed::is_negative)
    }

    /// `mult[j] = mult[p - j]`, as for the complexification of a real
    /// representation.
    pub fn is_self_conjugate(&self) -> bool {
        let p = self.p.as_usize();
        (1..p).all(|j| self.mult[j] == self.mult[p - j])
    }

    /// Self-conjugate of even dimension, the shadow of a quaternionic
    /// structure.
    pub fn is_quaternionic(&self) -> bool {
        self.is_self_conjugate() && (self.dim() % 2u32).is_zero()
    }

    /// The dual representation, `C_j ↦ C_{-j}`.
    pub fn dual(&self) -> Self {
        let p = self.p.as_usize();
        let mut out = Self::zero(self.p);
        for (j, m) in self.mult.iter().enumerate() {
            out.mult[(p - j) % p] = m.clone();
        }
        out
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
        let mult = self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect();
        Ok(ZpVirtualRep { p: self.p, mult })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mult = self.mult.iter().zip(&other.mult).map(|(a, b)| a - b).collect();
        Ok(ZpVirtualRep { p: self.p, mult })
    }

    /// Tensor product: convolution of multiplicities mod `p`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let p = self.p.as_usize();
        let mut out = Self::zero(self.p);
        for (i, a) in self.mult.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.mult.iter().enumerate() {
                out.mult[(i + j) % p] += a * b;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        ZpVirtualRep {
            p: self.p,
            mult: self.mult.iter().map(|m| m * n).collect(),
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

    fn require_genuine(&self, what: &str) -> Result<()> {
        if self.is_genuine() {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "{what} needs a genuine representation, got {self}"
            )))
        }
    }

    fn power_of_lines(&self, line: impl Fn(usize) -> ZpVirtualRep) -> Self {
        self.mult
            .iter()
            .enumerate()
            .fold(Self::one(self.p), |acc, (j, m)| {
                let e = u64::try_from(m).expect("genuine multiplicities fit in u64");
                &acc * &line(j).pow(e)
            })
    }
}

/// Total exterior power `Σ_i Λ^i r = ∏_j (1 + C_j)^{mult[j]}`.
pub fn lambda_total(r: &ZpVirtualRep) -> Result<ZpVirtualRep> {
    r.require_genuine("the total exterior power")?;
    let p = r.p;
    Ok(r.power_of_lines(|j| &ZpVirtualRep::one(p) + &ZpVirtualRep::character(p, j as i64)))
}

/// Second Adams operation, `C_j ↦ C_{2j}`.
pub fn psi2(r: &ZpVirtualRep) -> ZpVirtualRep {
    let p = r.p.as_usize();
    let mut out = ZpVirtualRep::zero(r.p);
    for (j, m) in r.mult.iter().enumerate() {
        out.mult[(2 * j) % p] += m;
    }
    out
}

/// K-theoretic Euler class `Λ_{-1}(r^*) = ∏_j (1 - C_{-j})^{mult[j]}`.
pub fn k_euler(r: &ZpVirtualRep) -> Result<ZpVirtualRep> {
    r.require_genuine("the K-theoretic Euler class")?;
    let p = r.p;
    Ok(r.power_of_lines(|j| &ZpVirtualRep::one(p) - &ZpVirtualRep::character(p, -(j as i64))))
}

/// The trace of the generator raised to the `k`-th power,
/// `Σ_j mult[j] ω^{jk}`.
pub fn character_at(r: &ZpVirtualRep, k: i64) -> CyclotomicInteger {
    let p = r.p;
    let mut full = vec![BigInt::zero(); p.as_usize()];
    for (j, m) in r.mult.iter().enumerate() {
        full[p.residue(j as i64 * k)] += m;
    }
    CyclotomicInteger::from_coeffs(p, full)
}

/// A character index `k` at which `tr_k(b)` does not divide `tr_k(a)` in
/// `Z[ω]`, which rules out any `q` with `a = q b`.
pub fn character_obstruction(a: &ZpVirtualRep, b: &ZpVirtualRep) -> Result<Option<usize>> {
    a.check(b)?;
    for k in 0..a.p.as_usize() {
        let ta = character_at(a, k as i64);
        let tb = character_at(b, k as i64);
        let divides = if tb.is_zero() {
            ta.is_zero()
        } else {
            ta.divide_exact(&tb)?.is_some()
        };
        if !divides {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Some `q` with `a = q b` in `R[Z_p] = Z[t]/(t^p - 1)`, or `None`.
///
/// Multiplication by `b` is the circulant matrix `M[i][j] = b[i - j]`; the
/// system `M q = a` is decided over the integers, so singular `M` and
/// non-integral rational solutions are both handled exactly.
pub fn repring_exact_divide(a: &ZpVirtualRep, b: &ZpVirtualRep) -> Result<Option<ZpVirtualRep>> {
    a.check(b)?;
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let p = a.p.as_usize();
    let m: Vec<Vec<BigInt>> = (0..p)
        .map(|i| (0..p).map(|j| b.mult[(i + p - j) % p].clone()).collect())
        .collect();
    Ok(solve_integer(&m, &a.mult).map(|mult| ZpVirtualRep { p: a.p, mult }))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a ZpVirtualRep> for &'a ZpVirtualRep {
            type Output = ZpVirtualRep;

            fn $method(self, rhs: &'a ZpVirtualRep) -> ZpVirtualRep {
                self.$checked(rhs)
                    .expect("representations of different groups")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &ZpVirtualRep {
    type Output = ZpVirtualRep;

    fn neg(self) -> ZpVirtualRep {
        ZpVirtualRep {
            p: self.p,
            mult: self.mult.iter().map(|m| -m).collect(),
        }
    }
}

impl fmt::Debug for ZpVirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ZpVirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, m) in self.mult.iter().enumerate().filter(|(_, m)| !m.is_zero()) {
            let mag = m.abs();
            match (first, m.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "C{j}")?;
            } else {
                write!(f, "{mag}C{j}")?;
            }
            first = false;
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

    fn p(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    fn rep(pr: u32, m: &[i64]) -> ZpVirtualRep {
        ZpVirtualRep::from_i64(p(pr), m).unwrap()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_total(&rep(3, &[0, 1, 0])).unwrap(), rep(3, &[1, 1, 0]));
        assert_eq!(lambda_total(&rep(3, &[0, 1, 1])).unwrap(), rep(3, &[2, 1, 1]));
        for k in 0..8 {
            let r = ZpVirtualRep::trivial(p(5), BigInt::from(k));
            assert_eq!(
                lambda_total(&r).unwrap(),
                ZpVirtualRep::trivial(p(5), BigInt::from(1 << k))
            );
        }
        assert!(lambda_total(&rep(3, &[0, -1, 0])).is_err());
    }

    #[test]
    fn psi2_examples() {
        assert_eq!(psi2(&rep(3, &[0, 1, 0])), rep(3, &[0, 0, 1]));
        assert_eq!(psi2(&rep(3, &[0, 1, 1])), rep(3, &[0, 1, 1]));
        assert_eq!(psi2(&rep(5, &[0, 0, 0, 1, 0])), rep(5, &[0, 1, 0, 0, 0]));
    }

    #[test]
    fn k_euler_examples() {
        assert_eq!(k_euler(&rep(3, &[0, 1, 0])).unwrap(), rep(3, &[1, 0, -1]));
        for k in 1..5 {
            assert!(k_euler(&ZpVirtualRep::trivial(p(3), BigInt::from(k)))
                .unwrap()
                .is_zero());
        }
        assert_eq!(k_euler(&rep(3, &[0, 1, 1])).unwrap(), rep(3, &[2, -1, -1]));
    }

    #[test]
    fn character_examples() {
        let w = CyclotomicInteger::omega_pow(p(3), 1);
        assert_eq!(character_at(&rep(3, &[0, 1, 0]), 1), w);
        assert!(character_at(&rep(3, &[1, 1, 1]), 1).is_zero());
        let r = rep(5, &[2, -1, 0, 3, 1]);
        assert_eq!(
            character_at(&r, 0),
            CyclotomicInteger::from_scalar(p(5), BigInt::from(5))
        );
    }

    #[test]
    fn exact_division_examples() {
        let a = ZpVirtualRep::trivial(p(3), BigInt::from(32));
        let b = ZpVirtualRep::trivial(p(3), BigInt::from(4));
        assert_eq!(
            repring_exact_divide(&a, &b).unwrap(),
            Some(ZpVirtualRep::trivial(p(3), BigInt::from(8)))
        );

        let a = rep(3, &[1, 1, 1]);
        let b = rep(3, &[1, 1, 0]);
        assert_eq!(repring_exact_divide(&a, &b).unwrap(), None);
        // Not ruled out by characters alone at k = 1, but fails at k = 0.
        assert_eq!(character_obstruction(&a, &b).unwrap(), Some(0));

        let x = rep(5, &[1, -2, 0, 4, 1]);
        assert_eq!(
            repring_exact_divide(&x, &x).unwrap(),
            Some(ZpVirtualRep::one(p(5)))
        );
        assert_eq!(
            repring_exact_divide(&x, &ZpVirtualRep::zero(p(5))),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn singular_divisor_with_solutions() {
        // b = 1 - C_1 kills the trivial character, and a = (1 - C_1)(2 + C_2).
        let b = rep(3, &[1, -1, 0]);
        let a = &b * &rep(3, &[2, 0, 1]);
        let q = repring_exact_divide(&a, &b).unwrap().unwrap();
        assert_eq!(&q * &b, a);
        assert_eq!(repring_exact_divide(&ZpVirtualRep::one(p(3)), &b).unwrap(), None);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", rep(3, &[2, -1, 1])), "2C0 - C1 + C2");
        assert_eq!(alloc::format!("{}", ZpVirtualRep::zero(p(2))), "0");
    }
}
