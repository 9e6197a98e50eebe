//! Greatest common divisors of bivariate polynomials over the rationals.

use num_traits::{One, Signed, Zero};

use crate::poly::bipoly::{bipoly_from_multi, bipoly_to_multi, primitive_part_y, pseudo_rem};
use crate::poly::{MultiPoly, PolyError, UniPoly};
use crate::scalar::Scalar;
use crate::{Int, Rat};

/// Primitive gcd in `Q[X1, X2]`, computed by a primitive pseudo-remainder
/// sequence in `(Q[X1])[X2]`.
///
/// The result divides both inputs exactly and is normalized to be
/// primitive over `Z` with a positive leading coefficient under lex order
/// with `X2 > X1`.
pub fn gcd_bivariate(
    f: &MultiPoly<Rat>,
    g: &MultiPoly<Rat>,
) -> Result<MultiPoly<Rat>, PolyError> {
    let raw = gcd_bivariate_raw(f, g)?;
    Ok(normalize_primitive(&raw))
}

/// Gcd up to a scalar multiple, generic over the coefficient field.
///
/// Contents with respect to `X2` are split off, the primitive parts run
/// through the PRS, and the content gcd (a univariate gcd in `T[X1]`)
/// multiplies back in.
pub fn gcd_bivariate_raw<T: Scalar>(
    f: &MultiPoly<T>,
    g: &MultiPoly<T>,
) -> Result<MultiPoly<T>, PolyError> {
    for p in [f, g] {
        if p.nvars() != 2 {
            return Err(PolyError::NotBivariate { nvars: p.nvars() });
        }
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
    }
    let bf = bipoly_from_multi(f)?;
    let bg = bipoly_from_multi(g)?;
    let content_gcd = super::bipoly::content_y(&bf).gcd(&super::bipoly::content_y(&bg));

    let mut a = primitive_part_y(&bf);
    let mut b = primitive_part_y(&bg);
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    let pp_gcd: UniPoly<UniPoly<T>> = loop {
        if b.is_zero() {
            break a;
        }
        if b.degree() == Some(0) {
            // A primitive X2-constant is a unit up to scalar: coprime.
            break UniPoly::one();
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_zero() {
            UniPoly::zero()
        } else {
            primitive_part_y(&r)
        };
    };

    let result = pp_gcd.map(|c: &UniPoly<T>| c.mul_ref(&content_gcd));
    Ok(bipoly_to_multi(&result))
}

/// Scale to integer coefficients with content 1 and make the leading
/// coefficient positive under lex order with `X2` before `X1`.
pub fn normalize_primitive(p: &MultiPoly<Rat>) -> MultiPoly<Rat> {
    if p.is_zero() {
        return p.clone();
    }
    let mut den_lcm = Int::one();
    for (_, c) in p.terms() {
        den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
    }
    let mut num_gcd = Int::zero();
    for (_, c) in p.terms() {
        let scaled = c * Rat::from_integer(den_lcm.clone());
        num_gcd = num_integer::gcd(num_gcd, scaled.to_integer());
    }
    let factor = Rat::new(den_lcm, num_gcd);
    let scaled = p.scale(&factor);
    // Leading term under lex X2 > X1: compare the X2 exponent first.
    let lead = scaled
        .terms()
        .max_by_key(|(e, _)| (e[1], e[0]))
        .map(|(_, c)| c.clone())
        .unwrap();
    if lead.is_negative() {
        scaled.neg_ref()
    } else {
        scaled
    }
}
