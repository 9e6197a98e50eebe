//! Scalar abstraction for the arithmetic core.
//!
//! Polynomial and series arithmetic is generic over [`Scalar`], an exact
//! field expressed through `num-traits` bounds. The certification layer
//! instantiates everything at [`crate::Rat`]; plain floats satisfy the
//! bounds too but give only approximate arithmetic and are not used by
//! the certificates.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_traits::{Num, Signed};

use crate::{Int, Rat};

/// Field scalar with exact semantics: `a / b * b == a` for nonzero `b`,
/// and equality is semantic equality.
///
/// Exact fraction types can expose their numerator/denominator through
/// [`Scalar::as_fraction`] so that series and polynomial convolutions
/// batch their arithmetic over a common denominator (one gcd per output
/// coefficient instead of one per operation). Types without that
/// structure keep the default opt-out.
pub trait Scalar:
    Num + Signed + Neg<Output = Self> + Clone + PartialEq + fmt::Debug + fmt::Display
{
    /// Exact `(numerator, denominator)` view, if the type has one.
    fn as_fraction(&self) -> Option<(Int, Int)> {
        None
    }

    /// Rebuild from an exact fraction; inverse of [`Scalar::as_fraction`]
    /// up to reduction.
    fn from_fraction(_num: Int, _den: Int) -> Option<Self> {
        None
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

impl Scalar for Rat {
    fn as_fraction(&self) -> Option<(Int, Int)> {
        Some((self.numer().clone(), self.denom().clone()))
    }

    fn from_fraction(num: Int, den: Int) -> Option<Self> {
        Some(Rat::new(num, den))
    }
}

/// Shorthand for small rational constants in code and tests.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(Int::from(num), Int::from(den))
}

/// Shorthand for integer-valued rationals.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Parse a rational from its canonical text form `p` or `p/q`.
///
/// Leading/trailing whitespace is tolerated; the result is always reduced
/// with a positive denominator.
pub fn parse_rat(text: &str) -> Result<Rat, RatParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(RatParseError {
            input: text.to_string(),
        });
    }
    Rat::from_str(trimmed).map_err(|_| RatParseError {
        input: text.to_string(),
    })
}

/// Error produced when a rational literal cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?} (expected `p` or `p/q`)")]
pub struct RatParseError {
    pub input: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_reduced_rationals() {
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat(" -4 ").unwrap(), rat_int(-4));
        assert_eq!(parse_rat("0").unwrap(), Rat::from_integer(Int::from(0)));
        assert_eq!(parse_rat("7/1").unwrap(), rat_int(7));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(rat(1, 2).to_string(), "1/2");
        assert_eq!(rat_int(5).to_string(), "5");
        assert_eq!(rat(-3, 6).to_string(), "-1/2");
    }
}
