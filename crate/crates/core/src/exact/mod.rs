//! Exact arithmetic kernel.
//!
//! Coefficient rings are described by the [`Coefficient`] trait: `Z`, `Q`,
//! `Z[ω_p]` and `Q(ω_p)`. [`LaurentPoly`] is generic over them and carries
//! the exact division used by the divisibility oracles in [`factored`].

mod binomial;
mod cyclotomic;
pub mod factored;
mod laurent;
mod prime;
mod scalar;

pub use binomial::{binomial, binomial_mod2};
pub use cyclotomic::{cyc_arith, CycOp, Cyclotomic, CyclotomicInteger, CyclotomicRational};
pub use factored::{FactoredRational, LinearFactor, Polynomiality};
pub use laurent::{laurent_exact_divide, LaurentPoly};
pub use prime::Prime;
pub use scalar::{CoeffRing, Coefficient, Field, IntegralDomain};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
