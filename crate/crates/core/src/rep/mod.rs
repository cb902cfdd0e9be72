//! Representation rings of `Z_p` and `Pin(2)`.
//!
//! `R[Z_p]` is `Z[t]/(t^p - 1)` with `t = C_1`; it carries the total exterior
//! power, the Adams operation `ψ²`, K-theoretic Euler classes and the
//! character maps to `Z[ω_p]`. Division in `R[Z_p]` is decided exactly.

mod pin2;
mod solve;
mod zp;

pub use pin2::{restrict_s1, trace_j, Pin2Element};
pub use zp::{
    character_at, character_obstruction, k_euler, lambda_total, psi2, repring_exact_divide, ZpVirtualRep,
};
