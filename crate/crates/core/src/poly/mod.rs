//! Exact polynomial arithmetic: sparse multivariate and dense univariate
//! polynomials, an expression parser, bivariate resultants and gcds.

mod bipoly;
mod gcd;
mod multi;
mod parse;
mod resultant;
mod uni;

pub use bipoly::{bipoly_from_multi, bipoly_to_multi, BiPoly};
pub use gcd::{gcd_bivariate, gcd_bivariate_raw, normalize_primitive};
pub use multi::{grlex_cmp, MultiPoly};
pub use parse::{parse_poly, ParseError};
pub use resultant::{resultant_y, sylvester_resultant_y};
pub use uni::{Ring, UniPoly};

/// Errors from polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("polynomial must be bivariate (2 variables), got {nvars}")]
    NotBivariate { nvars: usize },
    #[error("polynomial involves variables other than x{var}")]
    NotUnivariate { var: usize },
    #[error("polynomial has zero degree in X2 where positive degree is required")]
    ZeroDegreeInY,
}
