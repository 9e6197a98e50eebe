//! Exact certification that a common zero of a polynomial system is not
//! isolated, driven by truncated Puiseux series data.
//!
//! Given a system `f = (f_1, ..., f_m)` over the rationals, a common zero
//! `xi`, and a vector of truncated Puiseux series `Theta` centered at
//! `xi_1`, this crate checks sufficient conditions of the form
//! "every `f_j(Theta)` vanishes to order greater than `L`" against degree
//! and Noether-exponent bounds, and emits self-contained certificates:
//!
//! * [`bivariate`] — the single-polynomial prefix certificate and the
//!   two-polynomial common-curve certificate, with Newton–Hensel
//!   refinements for regular points;
//! * [`multivar`] — the general non-isolation certificate and, for
//!   systems asserted to cut out a variety of dimension at most one, the
//!   parametrization-prefix certificate;
//! * [`bounds`] — Bézout, sparse-volume and mixed-volume upper bounds
//!   feeding the multivariate certificates;
//! * [`newton`] — classical Newton-polygon branch expansion, used both to
//!   produce candidate series and as an independent oracle in tests.
//!
//! All verdicts are `certified` or `inconclusive` (or
//! `precondition-violated` for malformed queries); the machinery never
//! claims that a point *is* isolated.
//!
//! Polynomial and series arithmetic is generic over an exact [`scalar::Scalar`];
//! the certification layer is pinned to the arbitrary-precision rationals
//! through the [`Rat`] alias, since exponents, orders and thresholds are
//! rational by construction.

pub mod bivariate;
pub mod bounds;
pub mod multivar;
pub mod newton;
pub mod poly;
pub mod puiseux;
pub mod scalar;
pub mod serde_util;
pub mod verdict;

/// Arbitrary-precision rational, the scalar of the certification layer.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Sparse multivariate polynomial over [`Rat`].
pub type Poly = poly::MultiPoly<Rat>;
/// Dense univariate polynomial over [`Rat`].
pub type UPoly = poly::UniPoly<Rat>;
/// Finite Puiseux polynomial (truncated Puiseux series) over [`Rat`].
pub type Series = puiseux::PuiseuxPoly<Rat>;
/// Vector of Puiseux polynomials with first component `t`.
pub type SeriesVec = puiseux::PuiseuxVector<Rat>;

pub use scalar::{parse_rat, rat, rat_int};
pub use verdict::{AuditFailure, Verdict};
