//! Exact construction of every regular convex polytope inscribed in the unit
//! sphere, exact chord-length spectra, and verification of the arithmetic
//! identities those spectra satisfy.
//!
//! The crate is organized as a pipeline:
//!
//! * [`exactnum`]: arbitrary-precision rationals extended by `sqrt(5)`.
//! * [`cyclotomic`]: polygon chords as elements of `Q(zeta_E)`.
//! * [`catalog`]: the polytopes themselves (face counts, coordinates, duality).
//! * [`spectrum`]: squared chord lengths with multiplicities, plus exact
//!   sums and factored products.
//! * [`theorems`]: named pass/fail checks of the identities.
//! * [`oracle`]: an independent high-precision floating-point cross-check.
//! * [`report`]: canonical JSON/CSV/Markdown serializations.
//!
//! Everything outside [`oracle`] is exact: no floating-point value ever
//! feeds a verdict.

pub mod catalog;
pub mod cyclotomic;
pub mod exactnum;
pub mod oracle;
pub(crate) mod pairwise;
pub mod report;
pub mod spectrum;
pub mod theorems;
