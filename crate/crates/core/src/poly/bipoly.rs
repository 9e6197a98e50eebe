//! Bivariate polynomials viewed recursively: elements of `(T[X1])[X2]`.
//!
//! The resultant and gcd routines operate in this representation, where
//! the main variable is `X2` and coefficients live in
//! `T[X1]`.

use crate::poly::{MultiPoly, PolyError, UniPoly};
use crate::scalar::Scalar;

/// Polynomial in `X2` with coefficients in `T[X1]`.
pub type BiPoly<T> = UniPoly<UniPoly<T>>;

/// Reinterpret a bivariate `MultiPoly` (variables `X1`, `X2`) with `X2`
/// as the main variable.
pub fn bipoly_from_multi<T: Scalar>(f: &MultiPoly<T>) -> Result<BiPoly<T>, PolyError> {
    if f.nvars() != 2 {
        return Err(PolyError::NotBivariate { nvars: f.nvars() });
    }
    let deg_y = f.terms().map(|(e, _)| e[1]).max().unwrap_or(0) as usize;
    let mut coeffs: Vec<Vec<(usize, T)>> = vec![Vec::new(); deg_y + 1];
    for (exps, c) in f.terms() {
        coeffs[exps[1] as usize].push((exps[0] as usize, c.clone()));
    }
    let mut out = Vec::with_capacity(deg_y + 1);
    for terms in coeffs {
        let deg_x = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut dense = vec![T::zero(); deg_x + 1];
        for (e, c) in terms {
            dense[e] = c;
        }
        out.push(UniPoly::from_coeffs(dense));
    }
    Ok(UniPoly::from_coeffs(out))
}

/// Inverse of [`bipoly_from_multi`].
pub fn bipoly_to_multi<T: Scalar>(p: &BiPoly<T>) -> MultiPoly<T> {
    let mut terms = Vec::new();
    for (j, cy) in p.coeffs().iter().enumerate() {
        for (i, c) in cy.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.push((vec![i as u32, j as u32], c.clone()));
            }
        }
    }
    MultiPoly::from_terms(2, terms)
}

/// Pseudo-remainder: returns `r` with `lc(b)^(deg a - deg b + 1) * a = q*b + r`
/// and `deg r < deg b`. Requires `deg a >= deg b >= 0` and `b` nonzero.
pub fn pseudo_rem<T: Scalar>(a: &BiPoly<T>, b: &BiPoly<T>) -> BiPoly<T> {
    let da = a.degree().expect("pseudo_rem: zero dividend");
    let db = b.degree().expect("pseudo_rem: zero divisor");
    assert!(da >= db, "pseudo_rem requires deg a >= deg b");
    let lcb = b.leading().unwrap().clone();
    let mut r = a.clone();
    let mut steps = 0usize;
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lcr = r.leading().unwrap().clone();
        r = r.scale(&lcb).sub_ref(&b.scale(&lcr).shift_up(dr - db));
        steps += 1;
    }
    // Normalize to exactly lc(b)^(da-db+1) * a mod b.
    let want = da - db + 1;
    for _ in steps..want {
        r = r.scale(&lcb);
    }
    r
}

/// Content of `p` with respect to `X2`: a gcd in `T[X1]` of the
/// coefficients (monic representative; zero polynomial has content 0).
pub fn content_y<T: Scalar>(p: &BiPoly<T>) -> UniPoly<T> {
    let mut c = UniPoly::zero();
    for coeff in p.coeffs() {
        if coeff.is_zero() {
            continue;
        }
        c = if c.is_zero() { coeff.monic() } else { c.gcd(coeff) };
        if c.degree() == Some(0) {
            break;
        }
    }
    c
}

/// Divide every `X2`-coefficient exactly by `d` in `T[X1]`.
///
/// Panics if any division leaves a remainder, which would indicate a
/// broken content computation.
pub fn div_coeffs_exact<T: Scalar>(p: &BiPoly<T>, d: &UniPoly<T>) -> BiPoly<T> {
    UniPoly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| {
                if c.is_zero() {
                    UniPoly::zero()
                } else {
                    c.div_exact(d).expect("exact coefficient division")
                }
            })
            .collect(),
    )
}

/// Primitive part of `p` with respect to `X2`.
pub fn primitive_part_y<T: Scalar>(p: &BiPoly<T>) -> BiPoly<T> {
    if p.is_zero() {
        return UniPoly::zero();
    }
    let c = content_y(p);
    div_coeffs_exact(p, &c)
}
