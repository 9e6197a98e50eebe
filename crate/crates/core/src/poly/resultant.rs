//! Bivariate resultants with respect to `X2`.
//!
//! Two independent routes are provided: a pseudo-remainder sequence with
//! full content removal at every step (the primary route), and a
//! fraction-free Sylvester determinant via the Bareiss algorithm. Both
//! return the exact textbook resultant including its sign, so they can
//! be checked against each other.

use crate::poly::bipoly::{
    bipoly_from_multi, content_y, div_coeffs_exact, pseudo_rem, BiPoly,
};
use crate::poly::{MultiPoly, PolyError, UniPoly};
use crate::scalar::Scalar;

fn validate_pair<T: Scalar>(
    f: &MultiPoly<T>,
    g: &MultiPoly<T>,
) -> Result<(BiPoly<T>, BiPoly<T>), PolyError> {
    for p in [f, g] {
        if p.nvars() != 2 {
            return Err(PolyError::NotBivariate { nvars: p.nvars() });
        }
        if p.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
    }
    let a = bipoly_from_multi(f)?;
    let b = bipoly_from_multi(g)?;
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return Err(PolyError::ZeroDegreeInY);
    }
    Ok((a, b))
}

/// `Res_{X2}(f, g)` as a polynomial in `X1`, computed by a primitive
/// pseudo-remainder sequence.
///
/// Both inputs must be bivariate with positive degree in `X2`. The result
/// is the zero polynomial exactly when `f` and `g` share a factor of
/// positive `X2`-degree; otherwise its `X1`-degree is at most
/// `d11*d22 + d12*d21` where `d_ij = deg_{Xi}(f_j)`.
pub fn resultant_y<T: Scalar>(
    f: &MultiPoly<T>,
    g: &MultiPoly<T>,
) -> Result<UniPoly<T>, PolyError> {
    let (a, b) = validate_pair(f, g)?;
    Ok(res_rec(&a, &b))
}

/// Recursive resultant over `T[X1]`.
///
/// Uses the identities, for `m = deg A >= n = deg B`:
///   res(A, B) = (-1)^{mn} lc(B)^{m - deg R0} res(B, R0)
/// where `R0 = A mod B` over the fraction field, together with
///   res(B, u * P) = u^n res(B, P)  for a scalar `u` in T[X1],
/// applied to the pseudo-remainder `R = lc(B)^{m-n+1} R0 = cont(R) * P`.
/// Every division below is exact in `T[X1]`.
fn res_rec<T: Scalar>(a: &BiPoly<T>, b: &BiPoly<T>) -> UniPoly<T> {
    let m = a.degree().expect("nonzero");
    let n = b.degree().expect("nonzero");
    if m < n {
        let swapped = res_rec(b, a);
        return apply_sign(swapped, m * n);
    }
    let lcb = b.leading().unwrap().clone();
    if n == 0 {
        return lcb.pow(m as u32);
    }
    let r = pseudo_rem(a, b);
    if r.is_zero() {
        return UniPoly::zero();
    }
    let cont = content_y(&r);
    let prim = div_coeffs_exact(&r, &cont);
    let deg_r = prim.degree().unwrap();
    let sub = res_rec(b, &prim);
    // res(B, R) = cont^n * sub; res(B, R0) = res(B, R) / lc(B)^{(m-n+1) n}
    let num = sub
        .mul_ref(&cont.pow(n as u32))
        .mul_ref(&lcb.pow((m - deg_r) as u32));
    let den = lcb.pow(((m - n + 1) * n) as u32);
    let q = num.div_exact(&den).expect("resultant division is exact");
    apply_sign(q, m * n)
}

fn apply_sign<T: Scalar>(p: UniPoly<T>, parity: usize) -> UniPoly<T> {
    if parity % 2 == 1 {
        p.neg_ref()
    } else {
        p
    }
}

/// `Res_{X2}(f, g)` via the Sylvester matrix with fraction-free Bareiss
/// elimination over `T[X1]`. Independent of [`resultant_y`]; intended as
/// a cross-check and dense fallback at small degrees.
pub fn sylvester_resultant_y<T: Scalar>(
    f: &MultiPoly<T>,
    g: &MultiPoly<T>,
) -> Result<UniPoly<T>, PolyError> {
    let (a, b) = validate_pair(f, g)?;
    let m = a.degree().unwrap();
    let n = b.degree().unwrap();
    let size = m + n;
    let mut mat: Vec<Vec<UniPoly<T>>> = vec![vec![UniPoly::zero(); size]; size];
    // n rows of a's coefficients, highest first, shifted right.
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = a.coeff(m - k);
        }
    }
    // m rows of b's coefficients.
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = b.coeff(n - k);
        }
    }
    Ok(bareiss_det(mat))
}

/// Fraction-free determinant over an integral domain of polynomials.
fn bareiss_det<T: Scalar>(mut m: Vec<Vec<UniPoly<T>>>) -> UniPoly<T> {
    let size = m.len();
    if size == 0 {
        return UniPoly::one();
    }
    let mut sign_flip = false;
    let mut prev = UniPoly::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&l| !m[l][k].is_zero()) {
                Some(l) => {
                    m.swap(k, l);
                    sign_flip = !sign_flip;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let t = m[i][j]
                    .mul_ref(&m[k][k])
                    .sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if sign_flip {
        det.neg_ref()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::scalar::rat_int;
    use crate::{Poly, UPoly};

    const XY: [&str; 2] = ["x1", "x2"];

    fn p(text: &str) -> Poly {
        parse_poly(text, &XY).unwrap()
    }

    fn u(coeffs: &[i64]) -> UPoly {
        UPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn degree_one_pair_is_a_two_by_two_determinant() {
        // Res of two degree-1 polynomials in X2 is ad - bc; frozen from
        // the 2x2 Sylvester determinant done by hand.
        let f = p("x2 - 1 + x1 + x1^2");
        let g = p("x2 - 1 + x1 + x1^3");
        let expected = u(&[0, 0, -1, 1]); // x1^3 - x1^2
        assert_eq!(resultant_y(&f, &g).unwrap(), expected);
        assert_eq!(sylvester_resultant_y(&f, &g).unwrap(), expected);
        // Order 2 at x1 = 0.
        assert_eq!(expected.root_multiplicity(&rat_int(0)).unwrap(), 2);
    }

    #[test]
    fn common_factor_gives_zero() {
        let f = p("x2 - x1");
        assert!(resultant_y(&f, &f).unwrap().is_zero());
        let g = p("(x2 - x1)*(x2 + 1)");
        let h = p("(x2 - x1)*(x1*x2 + 3)");
        assert!(resultant_y(&g, &h).unwrap().is_zero());
        assert!(sylvester_resultant_y(&g, &h).unwrap().is_zero());
    }

    #[test]
    fn cusp_against_axis() {
        // res(x2^2 - x1, x2) = -x1: product of f over the roots of g up
        // to the textbook sign; frozen by hand from the 3x3 determinant.
        let f = p("x2^2 - x1");
        let g = p("x2");
        let expected = u(&[0, -1]);
        assert_eq!(resultant_y(&f, &g).unwrap(), expected);
        assert_eq!(sylvester_resultant_y(&f, &g).unwrap(), expected);
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(matches!(
            resultant_y(&p("x1 + 1"), &p("x2")),
            Err(PolyError::ZeroDegreeInY)
        ));
        assert!(matches!(
            resultant_y(&Poly::zero(2), &p("x2")),
            Err(PolyError::ZeroPolynomial)
        ));
        let three = parse_poly("x1", &["x1", "x2", "x3"]).unwrap();
        assert!(matches!(
            resultant_y(&three, &three),
            Err(PolyError::NotBivariate { nvars: 3 })
        ));
    }

    #[test]
    fn prs_and_sylvester_agree_on_mixed_degrees() {
        let cases = [
            ("x2^3 + x1*x2 + 1", "x1^2*x2^2 - x2 + x1"),
            ("x2^2 - x1^3", "x2^2 + x1*x2 + 2"),
            ("(x2 - x1)^3 + x1^4", "x2^2 + 3*x2 - x1"),
            ("2*x2^4 - x1", "3*x2^2 + x1^2*x2 - 1"),
        ];
        for (ft, gt) in cases {
            let f = p(ft);
            let g = p(gt);
            let a = resultant_y(&f, &g).unwrap();
            let b = sylvester_resultant_y(&f, &g).unwrap();
            assert_eq!(a, b, "mismatch for ({ft}, {gt})");
            let swapped = resultant_y(&g, &f).unwrap();
            let mn = (f.degree_in(1).unwrap() * g.degree_in(1).unwrap()) as usize;
            let expect = if mn % 2 == 1 { b.neg_ref() } else { b };
            assert_eq!(swapped, expect);
        }
    }
}
