//! Property-based checks of the algebraic invariants: ring axioms,
//! resultant/gcd duality, order arithmetic, and the substitution
//! homomorphism.

use num_traits::Zero;
use proptest::prelude::*;

use curvecert::poly::{gcd_bivariate, resultant_y, sylvester_resultant_y, MultiPoly};
use curvecert::puiseux::{substitute, OrderValue, PuiseuxVector};
use curvecert::scalar::rat_int;
use curvecert::{Poly, Rat, Series};

fn rat_coeff() -> impl Strategy<Value = Rat> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| curvecert::rat(n, d))
}

/// Sparse polynomial in `nvars` variables with total degree <= 3.
fn small_poly(nvars: usize) -> impl Strategy<Value = Poly> {
    let exps = prop::collection::vec(0u32..=3, nvars)
        .prop_filter("total degree <= 3", |e| e.iter().sum::<u32>() <= 3);
    prop::collection::vec((exps, rat_coeff()), 0..5)
        .prop_map(move |terms| Poly::from_terms(nvars, terms))
}

/// Bivariate polynomial with positive degree in X2.
fn poly_with_y() -> impl Strategy<Value = Poly> {
    small_poly(2).prop_filter("positive X2-degree", |f| {
        f.degree_in(1).map(|d| d > 0).unwrap_or(false)
    })
}

fn small_series() -> impl Strategy<Value = Series> {
    let exponent = (0i64..=6, 1i64..=2).prop_map(|(n, d)| curvecert::rat(n, d));
    prop::collection::vec((exponent, rat_coeff()), 0..4)
        .prop_map(|terms| Series::from_terms(Rat::zero(), terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms_hold(
        f in small_poly(2),
        g in small_poly(2),
        h in small_poly(2),
    ) {
        prop_assert_eq!(f.add_ref(&g), g.add_ref(&f));
        prop_assert_eq!(f.mul_ref(&g), g.mul_ref(&f));
        prop_assert_eq!(
            f.add_ref(&g).add_ref(&h),
            f.add_ref(&g.add_ref(&h))
        );
        prop_assert_eq!(
            f.mul_ref(&g).mul_ref(&h),
            f.mul_ref(&g.mul_ref(&h))
        );
        prop_assert_eq!(
            f.mul_ref(&g.add_ref(&h)),
            f.mul_ref(&g).add_ref(&f.mul_ref(&h))
        );
    }

    #[test]
    fn resultant_routes_agree(f in poly_with_y(), g in poly_with_y()) {
        let prs = resultant_y(&f, &g).unwrap();
        let syl = sylvester_resultant_y(&f, &g).unwrap();
        prop_assert_eq!(prs, syl);
    }

    #[test]
    fn resultant_vanishes_exactly_on_common_y_factors(
        a in poly_with_y(),
        b in poly_with_y(),
        c in poly_with_y(),
    ) {
        // f = a*c and g = b*c share at least the factor c.
        let f = a.mul_ref(&c);
        let g = b.mul_ref(&c);
        let res = resultant_y(&f, &g).unwrap();
        prop_assert!(res.is_zero());
        let d = gcd_bivariate(&f, &g).unwrap();
        prop_assert!(d.degree_in(1).unwrap() >= 1);
        // Conversely a nonzero resultant forces a Y-free gcd.
        let res_ab = resultant_y(&a, &b).unwrap();
        if !res_ab.is_zero() {
            let dab = gcd_bivariate(&a, &b).unwrap();
            prop_assert_eq!(dab.degree_in(1).unwrap(), 0);
        }
    }

    #[test]
    fn resultant_degree_bound(f in poly_with_y(), g in poly_with_y()) {
        let res = resultant_y(&f, &g).unwrap();
        if let Some(deg) = res.degree() {
            let d11 = f.degree_in(0).unwrap() as usize;
            let d21 = f.degree_in(1).unwrap() as usize;
            let d12 = g.degree_in(0).unwrap() as usize;
            let d22 = g.degree_in(1).unwrap() as usize;
            prop_assert!(deg <= d11 * d22 + d12 * d21);
        }
    }

    #[test]
    fn gcd_divides_both_inputs(
        a in poly_with_y(),
        b in poly_with_y(),
        c in poly_with_y(),
    ) {
        let f = a.mul_ref(&c);
        let g = b.mul_ref(&c);
        let d = gcd_bivariate(&f, &g).unwrap();
        prop_assert!(f.div_exact(&d).is_some());
        prop_assert!(g.div_exact(&d).is_some());
    }

    #[test]
    fn order_is_multiplicative(s in small_series(), r in small_series()) {
        let prod = s.mul(&r);
        let expected = match (s.order(), r.order()) {
            (OrderValue::Finite(a), OrderValue::Finite(b)) => OrderValue::Finite(a + b),
            _ => OrderValue::Infinite,
        };
        prop_assert_eq!(prod.order(), expected);
    }

    #[test]
    fn order_of_sums_does_not_drop(s in small_series(), r in small_series()) {
        let sum = s.add(&r);
        let floor = s.order().min(r.order());
        prop_assert!(sum.order() >= floor);
    }

    #[test]
    fn substitution_is_a_ring_morphism(
        f in small_poly(2),
        g in small_poly(2),
        theta2 in small_series(),
    ) {
        let theta = PuiseuxVector::with_identity_first(Rat::zero(), vec![theta2]).unwrap();
        let sum = substitute(&f.add_ref(&g), &theta).unwrap();
        let lhs = substitute(&f, &theta).unwrap().add(&substitute(&g, &theta).unwrap());
        prop_assert_eq!(sum, lhs);
        let prod = substitute(&f.mul_ref(&g), &theta).unwrap();
        let rhs = substitute(&f, &theta).unwrap().mul(&substitute(&g, &theta).unwrap());
        prop_assert_eq!(prod, rhs);
    }

    #[test]
    fn substitution_extends_evaluation(f in small_poly(3)) {
        // Substituting the constant vector xi gives the constant f(xi).
        let xi = vec![rat_int(0), curvecert::rat(1, 2), rat_int(-1)];
        let theta = PuiseuxVector::with_identity_first(
            xi[0].clone(),
            vec![
                Series::constant(xi[0].clone(), xi[1].clone()),
                Series::constant(xi[0].clone(), xi[2].clone()),
            ],
        )
        .unwrap();
        let value = substitute(&f, &theta).unwrap();
        prop_assert_eq!(value.constant_term(), f.eval(&xi));
    }

    #[test]
    fn parse_print_round_trip(f in small_poly(2)) {
        let printed = f.to_string_with(&["x1", "x2"]);
        let reparsed = curvecert::poly::parse_poly(&printed, &["x1", "x2"]).unwrap();
        prop_assert_eq!(reparsed, f);
    }

    #[test]
    fn multiplicity_is_additive(base in small_poly(1), k in 0usize..4) {
        prop_assume!(!base.is_zero());
        let u = base.as_univariate(0).unwrap();
        let x0 = curvecert::rat(1, 2);
        let factor = curvecert::UPoly::from_coeffs(vec![-x0.clone(), rat_int(1)]);
        let m0 = u.root_multiplicity(&x0).unwrap();
        let scaled = u.mul_ref(&factor.pow(k as u32));
        prop_assert_eq!(scaled.root_multiplicity(&x0).unwrap(), m0 + k);
    }
}

/// MultiPoly construction from univariate input for the multiplicity
/// property above.
#[test]
fn one_variable_poly_strategy_sanity() {
    let f = MultiPoly::from_terms(1, [(vec![2], rat_int(3)), (vec![0], rat_int(1))]);
    assert_eq!(f.as_univariate(0).unwrap().degree(), Some(2));
}

/// Monotone-chain convex hull plus the shoelace formula: an independent
/// oracle for the incremental-hull volume in the plane.
mod planar_volume_oracle {
    use super::*;
    use curvecert::bounds::{normalized_volume, Support};
    use curvecert::Int;

    fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    }

    /// Twice the hull area, straight from Andrew's monotone chain.
    fn shoelace_twice_area(mut pts: Vec<(i64, i64)>) -> i64 {
        pts.sort_unstable();
        pts.dedup();
        if pts.len() < 3 {
            return 0;
        }
        let chain = |iter: &mut dyn Iterator<Item = (i64, i64)>| {
            let mut out: Vec<(i64, i64)> = Vec::new();
            for p in iter {
                while out.len() >= 2
                    && cross(out[out.len() - 2], out[out.len() - 1], p) <= 0
                {
                    out.pop();
                }
                out.push(p);
            }
            out
        };
        let mut lower = chain(&mut pts.iter().copied());
        let mut upper = chain(&mut pts.iter().rev().copied());
        lower.pop();
        upper.pop();
        lower.extend(upper);
        let hull = lower;
        if hull.len() < 3 {
            return 0;
        }
        let mut twice = 0i64;
        for i in 0..hull.len() {
            let (x1, y1) = hull[i];
            let (x2, y2) = hull[(i + 1) % hull.len()];
            twice += x1 * y2 - x2 * y1;
        }
        twice.abs()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]

        #[test]
        fn incremental_hull_matches_shoelace(
            pts in prop::collection::vec((0u64..=12, 0u64..=12), 1..12)
        ) {
            let expected = shoelace_twice_area(
                pts.iter().map(|&(x, y)| (x as i64, y as i64)).collect(),
            );
            let support =
                Support::new(2, pts.iter().map(|&(x, y)| vec![x, y])).unwrap();
            let (nvol, _) = normalized_volume(&support).unwrap();
            prop_assert_eq!(nvol, Rat::from_integer(Int::from(expected)));
        }
    }
}
