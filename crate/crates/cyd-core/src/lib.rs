//! Computational kernel for continuous Young diagrams.
//!
//! Young diagrams are left-aligned stairs built from unit blocks; their
//! continuous counterparts are stairs whose block widths and heights are
//! arbitrary nonnegative reals, encoded as east-north directed paths. This
//! crate computes with both sides of that correspondence:
//!
//! - [`simplex`] — exact rational integrals of monomial, divided-power and
//!   gap-monomial families over the ordered simplex, plus the discrete
//!   `T`/`U` number recursions and their continuous limits.
//! - [`diagram`] — directed paths as diagrams: area under two tessellations,
//!   stair form, duality, the concatenation monoid, the inclusion order, the
//!   area gradient, and the bridge to integer partitions.
//! - [`volume`] — volumes of diagram spaces as modified-Bessel series, their
//!   derivative/antiderivative family, power and reciprocal series with exact
//!   coefficients, asymptotics, and the continuous binomial bracket.
//! - [`qcard`] — q-cardinality of graded finite sets: q-integers,
//!   q-factorials via inversions, partition-count polynomials and power sums.
//! - [`zvolume`] — the one-parameter deformation `∫ e^{-z·area}` of volume:
//!   exact `d` coefficients, per-block-count and total z-volumes.
//! - [`montecarlo`] — seeded, stream-splittable Monte Carlo estimators that
//!   independently verify the analytic values.
//! - [`verify`] — named check suites over all of the above, shared by the
//!   CLI and the acceptance tests.
//!
//! Everything exact is computed with arbitrary-precision rationals; floating
//! point enters only at explicit evaluation, and every truncated series
//! reports a rigorous error bound alongside its value.

// Validation uses `!(a >= b)` so NaN fails closed; the suggested
// `partial_cmp` rewrite would lose that.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod diagram;
pub mod error;
pub mod montecarlo;
pub mod poly;
pub mod qcard;
pub mod quad;
pub mod rational;
pub mod series;
pub mod simplex;
pub mod verify;
pub mod volume;
pub mod zvolume;

pub use error::{Error, Result};
pub use series::SeriesValue;
