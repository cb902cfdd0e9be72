use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::{CyclotomicInteger, CyclotomicRational};
use super::prime::Prime;

/// Which coefficient ring a polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Integer,
    Rational,
    Cyclotomic(Prime),
    CyclotomicRational(Prime),
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integer => f.write_str("Z"),
            CoeffRing::Rational => f.write_str("Q"),
            CoeffRing::Cyclotomic(p) => write!(f, "Z[ω_{p}]"),
            CoeffRing::CyclotomicRational(p) => write!(f, "Q(ω_{p})"),
        }
    }
}

/// A commutative ring of coefficients without zero divisors.
///
/// Values that need a parameter to build a zero or a one (the prime of a
/// cyclotomic ring) expose it through [`Coefficient::Ctx`]; for `Z` and `Q`
/// the context is `()`.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    type Ctx: Copy + PartialEq + fmt::Debug;

    fn ctx(&self) -> Self::Ctx;
    fn ring(ctx: Self::Ctx) -> CoeffRing;
    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn from_integer(ctx: Self::Ctx, n: &BigInt) -> Self;

    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_i64(ctx: Self::Ctx, n: i64) -> Self {
        Self::from_integer(ctx, &BigInt::from(n))
    }
}

/// A coefficient ring in which every nonzero element is invertible.
pub trait Field: Coefficient {
    fn inv(&self) -> Option<Self>;
}

/// A ring together with its field of fractions, with a membership test for
/// mapping back.
pub trait IntegralDomain: Coefficient {
    type Frac: Field<Ctx = Self::Ctx>;

    fn to_frac(&self) -> Self::Frac;
    fn from_frac(value: &Self::Frac) -> Option<Self>;
}

impl Coefficient for BigInt {
    type Ctx = ();

    fn ctx(&self) {}
    fn ring(_: ()) -> CoeffRing {
        CoeffRing::Integer
    }
    fn zero(_: ()) -> Self {
        <BigInt as Zero>::zero()
    }
    fn one(_: ()) -> Self {
        <BigInt as One>::one()
    }
    fn from_integer(_: (), n: &BigInt) -> Self {
        n.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coefficient for BigRational {
    type Ctx = ();

    fn ctx(&self) {}
    fn ring(_: ()) -> CoeffRing {
        CoeffRing::Rational
    }
    fn zero(_: ()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: ()) -> Self {
        <BigRational as One>::one()
    }
    fn from_integer(_: (), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl IntegralDomain for BigInt {
    type Frac = BigRational;

    fn to_frac(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }
    fn from_frac(value: &BigRational) -> Option<Self> {
        value.is_integer().then(|| value.to_integer())
    }
}

impl IntegralDomain for BigRational {
    type Frac = BigRational;

    fn to_frac(&self) -> BigRational {
        self.clone()
    }
    fn from_frac(value: &BigRational) -> Option<Self> {
        Some(value.clone())
    }
}

impl Coefficient for CyclotomicInteger {
    type Ctx = Prime;

    fn ctx(&self) -> Prime {
        self.modulus()
    }
    fn ring(p: Prime) -> CoeffRing {
        CoeffRing::Cyclotomic(p)
    }
    fn zero(p: Prime) -> Self {
        CyclotomicInteger::zero(p)
    }
    fn one(p: Prime) -> Self {
        CyclotomicInteger::one(p)
    }
    fn from_integer(p: Prime, n: &BigInt) -> Self {
        CyclotomicInteger::from_scalar(p, n.clone())
    }
    fn is_zero(&self) -> bool {
        CyclotomicInteger::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Coefficient for CyclotomicRational {
    type Ctx = Prime;

    fn ctx(&self) -> Prime {
        self.modulus()
    }
    fn ring(p: Prime) -> CoeffRing {
        CoeffRing::CyclotomicRational(p)
    }
    fn zero(p: Prime) -> Self {
        CyclotomicRational::zero(p)
    }
    fn one(p: Prime) -> Self {
        CyclotomicRational::one(p)
    }
    fn from_integer(p: Prime, n: &BigInt) -> Self {
        CyclotomicRational::from_scalar(p, BigRational::from_integer(n.clone()))
    }
    fn is_zero(&self) -> bool {
        CyclotomicRational::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Field for CyclotomicRational {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}

impl IntegralDomain for CyclotomicInteger {
    type Frac = CyclotomicRational;

    fn to_frac(&self) -> CyclotomicRational {
        self.to_rational()
    }
    fn from_frac(value: &CyclotomicRational) -> Option<Self> {
        value.to_integral()
    }
}

impl IntegralDomain for CyclotomicRational {
    type Frac = CyclotomicRational;

    fn to_frac(&self) -> CyclotomicRational {
        self.clone()
    }
    fn from_frac(value: &CyclotomicRational) -> Option<Self> {
        Some(value.clone())
    }
}
