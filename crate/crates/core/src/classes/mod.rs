//! Truncated cohomology rings and characteristic classes.
//!
//! Rings are given by explicit presentations ([`RingPresentation`]); classes
//! are reduced against the truncation and torsion relations on construction.
//! Stiefel-Whitney classes are computed for flat bundles over a point, a
//! torus, or a real projective space, which covers every family used by the
//! checkers.

mod flat;
mod ring;
mod segre;

pub use flat::{sw_class, sw_top_range_nonzero, sw_total, Base, FlatBundleDescriptor};
pub use ring::{ring_arith, Generator, GradedClass, RingOp, RingPresentation};
pub use segre::{euler_s1_complex, multiple, total_segre, whitney_sum};
