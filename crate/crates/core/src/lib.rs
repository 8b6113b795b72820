//! Certified bounds and rigorous enclosures for ratios of contiguous
//! hypergeometric-type functions: parabolic cylinder `U(n-1,x)/U(n,x)`,
//! modified Bessel `I_{nu-1}/I_nu` and `K_{nu+1}/K_nu`, Kummer
//! `m(a+1,b+1,x)/m(a,b,x)` (and its contiguous variants), and Gauss
//! `y(a+1,b+1,c+1,x)/y(a,b,c,x)`.
//!
//! The crate has three layers:
//!
//! * [`bounds`] - closed-form lower/upper bounds for each ratio, catalogued
//!   with validity predicates and accuracy tags;
//! * [`oracle`] - rigorous interval enclosures built from each family's own
//!   recurrence, seeded with proven bound pairs, plus independent series
//!   evaluators for cross-checks;
//! * [`riccati`], [`accuracy`], [`verify`] - executable certification: the
//!   generic nullcline/residual sign checkers, empirical accuracy-order
//!   fits, and grid verification of every catalogued inequality against the
//!   oracle.
//!
//! `no_std` compatible (requires `alloc`); disable default features and
//! enable `libm` for builds without the standard library.

#![cfg_attr(not(feature = "std"), no_std)]
// Domain guards use the `!(v > 0.0)` form so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::type_complexity)]

extern crate alloc;

mod fx;

pub mod accuracy;
pub mod bounds;
pub mod enclosure;
pub mod error;
pub mod oracle;
pub mod riccati;
pub mod types;
pub mod verify;

pub use enclosure::Enclosure;
pub use error::{Error, Result};
pub use oracle::OracleConfig;
pub use types::{Accuracy, Family, Grid, RatioKind, RatioSpec, Side, VerificationReport};
