//! Finite Puiseux polynomials (exact truncated Puiseux series).
//!
//! A [`PuiseuxPoly`] is a finite sum of terms `c * (t - center)^gamma`
//! with rational exponents `gamma` in strictly increasing order. Because
//! the list is finite, every operation here is exact: the order of a
//! substituted polynomial is an exact rational, with no truncation-error
//! bookkeeping.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::{Int, Rat};

/// Errors from Puiseux arithmetic and vector construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PuiseuxError {
    #[error("series centers differ: {left} vs {right}")]
    CenterMismatch { left: String, right: String },
    #[error("arity mismatch: polynomial in {poly_vars} variables, vector of length {vector_len}")]
    Arity { poly_vars: usize, vector_len: usize },
    #[error("invalid Puiseux vector: {reason}")]
    InvalidVector { reason: String },
}

/// Order of a Puiseux series: its least exponent with nonzero
/// coefficient, or infinity for the zero series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderValue {
    Finite(Rat),
    Infinite,
}

impl OrderValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, OrderValue::Infinite)
    }

    /// Strict comparison `self > bound`, with infinity exceeding every
    /// rational.
    pub fn exceeds(&self, bound: &Rat) -> bool {
        match self {
            OrderValue::Infinite => true,
            OrderValue::Finite(v) => v > bound,
        }
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            OrderValue::Finite(v) => Some(v),
            OrderValue::Infinite => None,
        }
    }
}

impl PartialOrd for OrderValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (OrderValue::Infinite, OrderValue::Infinite) => Ordering::Equal,
            (OrderValue::Infinite, OrderValue::Finite(_)) => Ordering::Greater,
            (OrderValue::Finite(_), OrderValue::Infinite) => Ordering::Less,
            (OrderValue::Finite(a), OrderValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for OrderValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderValue::Finite(v) => write!(f, "{v}"),
            OrderValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Finite Puiseux polynomial centered at a scalar point.
///
/// Terms are kept sorted by strictly increasing exponent with nonzero
/// coefficients; the zero series has an empty term list.
#[derive(Clone, PartialEq, Eq)]
pub struct PuiseuxPoly<T> {
    center: T,
    terms: Vec<(Rat, T)>,
}

impl<T: Scalar> PuiseuxPoly<T> {
    pub fn zero(center: T) -> Self {
        PuiseuxPoly {
            center,
            terms: Vec::new(),
        }
    }

    pub fn constant(center: T, value: T) -> Self {
        let mut s = PuiseuxPoly::zero(center);
        if !value.is_zero() {
            s.terms.push((Rat::zero(), value));
        }
        s
    }

    /// The series of `t` itself around the center: `center + (t - center)`.
    pub fn identity(center: T) -> Self {
        PuiseuxPoly::from_terms(
            center.clone(),
            [
                (Rat::zero(), center),
                (Rat::from_integer(1.into()), T::one()),
            ],
        )
    }

    /// Build from (exponent, coefficient) pairs: sorts, combines equal
    /// exponents, and drops zero coefficients.
    pub fn from_terms(center: T, terms: impl IntoIterator<Item = (Rat, T)>) -> Self {
        let mut map: BTreeMap<Rat, T> = BTreeMap::new();
        for (exp, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&exp) {
                Some(existing) => {
                    let sum = existing.clone() + c;
                    if sum.is_zero() {
                        map.remove(&exp);
                    } else {
                        *existing = sum;
                    }
                }
                None => {
                    map.insert(exp, c);
                }
            }
        }
        PuiseuxPoly {
            center,
            terms: map.into_iter().collect(),
        }
    }

    pub fn center(&self) -> &T {
        &self.center
    }

    pub fn terms(&self) -> &[(Rat, T)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Minimum exponent with nonzero coefficient; infinity for zero.
    pub fn order(&self) -> OrderValue {
        match self.terms.first() {
            Some((exp, _)) => OrderValue::Finite(exp.clone()),
            None => OrderValue::Infinite,
        }
    }

    pub fn max_exponent(&self) -> Option<&Rat> {
        self.terms.last().map(|(e, _)| e)
    }

    pub fn coeff_at(&self, exp: &Rat) -> T {
        match self.terms.binary_search_by(|(e, _)| e.cmp(exp)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => T::zero(),
        }
    }

    /// Coefficient of the exponent-0 term (the value at the center).
    pub fn constant_term(&self) -> T {
        self.coeff_at(&Rat::zero())
    }

    fn check_center(&self, rhs: &Self) {
        assert_eq!(
            self.center, rhs.center,
            "Puiseux arithmetic requires matching centers"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_center(rhs);
        // Sorted two-pointer merge.
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            match self.terms[i].0.cmp(&rhs.terms[j].0) {
                Ordering::Less => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push(rhs.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let sum = self.terms[i].1.clone() + rhs.terms[j].1.clone();
                    if !sum.is_zero() {
                        terms.push((self.terms[i].0.clone(), sum));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&rhs.terms[j..]);
        PuiseuxPoly {
            center: self.center.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Self {
        PuiseuxPoly {
            center: self.center.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_center(rhs);
        if self.is_zero() || rhs.is_zero() {
            return PuiseuxPoly::zero(self.center.clone());
        }
        if let Some(out) = self.mul_dense(rhs) {
            return out;
        }
        let mut products = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                products.push((ea + eb, ca.clone() * cb.clone()));
            }
        }
        PuiseuxPoly::from_terms(self.center.clone(), products)
    }

    /// Convolution over a common exponent denominator. Falls back to the
    /// generic pairwise path when the exponent lattice is unreasonable.
    fn mul_dense(&self, rhs: &Self) -> Option<Self> {
        use num_traits::ToPrimitive;
        let mut den: u64 = 1;
        for (e, _) in self.terms.iter().chain(rhs.terms.iter()) {
            let d = e.denom().to_u64()?;
            den = num_integer::lcm(den, d);
            if den > 1 << 20 {
                return None;
            }
        }
        let den_int = Int::from(den);
        let index = |e: &Rat| -> Option<i64> {
            (e * Rat::from_integer(den_int.clone())).to_integer().to_i64()
        };
        let a0 = index(&self.terms.first()?.0)?;
        let a1 = index(&self.terms.last()?.0)?;
        let b0 = index(&rhs.terms.first()?.0)?;
        let b1 = index(&rhs.terms.last()?.0)?;
        let len = usize::try_from((a1 - a0) + (b1 - b0) + 1).ok()?;
        if len > 1 << 22 {
            return None;
        }
        let a_idx: Option<Vec<i64>> = self.terms.iter().map(|(e, _)| index(e)).collect();
        let b_idx: Option<Vec<i64>> = rhs.terms.iter().map(|(e, _)| index(e)).collect();
        let (a_idx, b_idx) = (a_idx?, b_idx?);
        let offset = a0 + b0;
        let exponent_of =
            |k: usize| Rat::new(Int::from(offset + k as i64), den_int.clone());

        // Exact fraction scalars: convolve integer numerators over a
        // common denominator, reducing once per output coefficient.
        if let Some((na, da)) = clear_denominators(&self.terms) {
            if let Some((nb, db)) = clear_denominators(&rhs.terms) {
                let mut acc: Vec<Int> = vec![Int::zero(); len];
                for (ia, ca) in a_idx.iter().zip(&na) {
                    for (ib, cb) in b_idx.iter().zip(&nb) {
                        let k = (ia - a0 + ib - b0) as usize;
                        acc[k] += ca * cb;
                    }
                }
                let den = da * db;
                let terms: Vec<(Rat, T)> = acc
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        let coeff =
                            T::from_fraction(c, den.clone()).expect("fraction round-trip");
                        (exponent_of(k), coeff)
                    })
                    .collect();
                return Some(PuiseuxPoly {
                    center: self.center.clone(),
                    terms,
                });
            }
        }

        let mut acc: Vec<T> = vec![T::zero(); len];
        for (ia, (_, ca)) in a_idx.iter().zip(&self.terms) {
            for (ib, (_, cb)) in b_idx.iter().zip(&rhs.terms) {
                let k = (ia - a0 + ib - b0) as usize;
                let prod = ca.clone() * cb.clone();
                acc[k] = std::mem::replace(&mut acc[k], T::zero()) + prod;
            }
        }
        let terms: Vec<(Rat, T)> = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (exponent_of(k), c))
            .collect();
        Some(PuiseuxPoly {
            center: self.center.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return PuiseuxPoly::zero(self.center.clone());
        }
        PuiseuxPoly {
            center: self.center.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = PuiseuxPoly::constant(self.center.clone(), T::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Keep only terms with exponent at most `cutoff`.
    pub fn truncate_at(&self, cutoff: &Rat) -> Self {
        PuiseuxPoly {
            center: self.center.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e <= cutoff)
                .cloned()
                .collect(),
        }
    }
}

impl<T: Scalar> fmt::Display for PuiseuxPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let base = if self.center.is_zero() {
            "t".to_string()
        } else {
            format!("(t - {})", self.center)
        };
        let one = Rat::from_integer(1.into());
        let mut first = true;
        for (exp, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if exp.is_zero() {
                write!(f, "{c}")?;
            } else if *exp == one {
                write!(f, "{c}*{base}")?;
            } else {
                write!(f, "{c}*{base}^({exp})")?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for PuiseuxPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PuiseuxPoly({self})")
    }
}

/// Vector of Puiseux polynomials with a shared center whose first
/// component is exactly the identity series `t`.
///
/// The constant terms of components `2..n` are the coordinates
/// `(xi_2, ..., xi_n)` of the base point.
#[derive(Clone, PartialEq, Eq)]
pub struct PuiseuxVector<T> {
    components: Vec<PuiseuxPoly<T>>,
}

impl<T: Scalar> fmt::Debug for PuiseuxVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "PuiseuxVector({})", parts.join(", "))
    }
}

impl<T: Scalar> PuiseuxVector<T> {
    pub fn new(components: Vec<PuiseuxPoly<T>>) -> Result<Self, PuiseuxError> {
        if components.is_empty() {
            return Err(PuiseuxError::InvalidVector {
                reason: "vector must have at least one component".into(),
            });
        }
        let center = components[0].center().clone();
        for (i, c) in components.iter().enumerate() {
            if c.center() != &center {
                return Err(PuiseuxError::InvalidVector {
                    reason: format!(
                        "component {} has center {} but component 1 has center {}",
                        i + 1,
                        c.center(),
                        center
                    ),
                });
            }
        }
        let expected_first = PuiseuxPoly::identity(center);
        if components[0] != expected_first {
            return Err(PuiseuxError::InvalidVector {
                reason: "component 1 must be exactly the series t".into(),
            });
        }
        Ok(PuiseuxVector { components })
    }

    /// Convenience constructor: prepends the identity component for the
    /// given center.
    pub fn with_identity_first(
        center: T,
        rest: Vec<PuiseuxPoly<T>>,
    ) -> Result<Self, PuiseuxError> {
        let mut components = Vec::with_capacity(rest.len() + 1);
        components.push(PuiseuxPoly::identity(center));
        components.extend(rest);
        PuiseuxVector::new(components)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[PuiseuxPoly<T>] {
        &self.components
    }

    pub fn center(&self) -> &T {
        self.components[0].center()
    }

    /// The base point: constant terms of every component.
    pub fn point(&self) -> Vec<T> {
        self.components.iter().map(|c| c.constant_term()).collect()
    }

    /// Sorted union of the exponents appearing in components `2..n`,
    /// always including 0 (the ladder starts at `gamma_0 = 0` whether or
    /// not the constant coefficient vanishes).
    pub fn exponent_ladder(&self) -> Vec<Rat> {
        let mut set: std::collections::BTreeSet<Rat> = std::collections::BTreeSet::new();
        set.insert(Rat::zero());
        for c in &self.components[1..] {
            for (e, _) in c.terms() {
                set.insert(e.clone());
            }
        }
        set.into_iter().collect()
    }

    /// Truncate components `2..n` at the cutoff exponent; the first
    /// component stays the full series `t`.
    pub fn truncate_at(&self, cutoff: &Rat) -> Self {
        let mut components = Vec::with_capacity(self.components.len());
        components.push(self.components[0].clone());
        for c in &self.components[1..] {
            components.push(c.truncate_at(cutoff));
        }
        PuiseuxVector { components }
    }
}

/// Numerators of the coefficients over their common denominator, via
/// the scalar's fraction view; `None` if the scalar opts out.
fn clear_denominators<T: Scalar>(terms: &[(Rat, T)]) -> Option<(Vec<Int>, Int)> {
    let mut fractions = Vec::with_capacity(terms.len());
    let mut lcm = Int::from(1);
    for (_, c) in terms {
        let (num, den) = c.as_fraction()?;
        lcm = num_integer::lcm(lcm, den.clone());
        fractions.push((num, den));
    }
    let nums = fractions
        .into_iter()
        .map(|(num, den)| num * (&lcm / den))
        .collect();
    Some((nums, lcm))
}

/// Exact evaluation `f(theta)` of a multivariate polynomial at a Puiseux
/// vector. The inputs are finite, so the result is a finite Puiseux
/// polynomial with no truncation error.
pub fn substitute<T: Scalar>(
    f: &MultiPoly<T>,
    theta: &PuiseuxVector<T>,
) -> Result<PuiseuxPoly<T>, PuiseuxError> {
    if f.nvars() != theta.len() {
        return Err(PuiseuxError::Arity {
            poly_vars: f.nvars(),
            vector_len: theta.len(),
        });
    }
    let center = theta.center().clone();
    // Cache powers of each component up to the largest exponent used.
    let mut caches: Vec<Vec<PuiseuxPoly<T>>> = theta
        .components()
        .iter()
        .map(|c| vec![PuiseuxPoly::constant(center.clone(), T::one()), c.clone()])
        .collect();
    let mut acc = PuiseuxPoly::zero(center.clone());
    for (exps, coeff) in f.terms() {
        let mut term = PuiseuxPoly::constant(center.clone(), coeff.clone());
        for (var, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let cache = &mut caches[var];
            while cache.len() <= e as usize {
                let next = cache.last().unwrap().mul(&cache[1]);
                cache.push(next);
            }
            term = term.mul(&cache[e as usize]);
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// Order of `f_j(theta)` for every polynomial in the system.
pub fn vanishing_order_profile<T: Scalar>(
    system: &[MultiPoly<T>],
    theta: &PuiseuxVector<T>,
) -> Result<Vec<OrderValue>, PuiseuxError> {
    system
        .iter()
        .map(|f| substitute(f, theta).map(|s| s.order()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::scalar::{rat, rat_int};
    use crate::{Poly, Rat, Series, SeriesVec};

    fn series(center: i64, terms: &[(Rat, i64)]) -> Series {
        Series::from_terms(
            rat_int(center),
            terms.iter().map(|(e, c)| (e.clone(), rat_int(*c))),
        )
    }

    #[test]
    fn order_of_spec_examples() {
        // 1 + t^(3/2) centered at 0 has order 0.
        let s = series(0, &[(rat_int(0), 1), (rat(3, 2), 1)]);
        assert_eq!(s.order(), OrderValue::Finite(rat_int(0)));
        // t^(13/2) has order 13/2.
        let m = series(0, &[(rat(13, 2), 1)]);
        assert_eq!(m.order(), OrderValue::Finite(rat(13, 2)));
        // Zero series has infinite order.
        assert_eq!(Series::zero(rat_int(0)).order(), OrderValue::Infinite);
        assert!(OrderValue::Infinite.exceeds(&rat_int(1_000_000)));
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        let one_plus_t = series(0, &[(rat_int(0), 1), (rat_int(1), 1)]);
        let one_minus_t = series(0, &[(rat_int(0), 1), (rat_int(1), -1)]);
        let prod = one_plus_t.mul(&one_minus_t);
        assert_eq!(prod, series(0, &[(rat_int(0), 1), (rat_int(2), -1)]));

        let root = series(0, &[(rat(1, 2), 1)]);
        assert_eq!(root.pow(4), series(0, &[(rat_int(2), 1)]));

        // Cancellation: (t + t^(3/2)) + (-t) = t^(3/2).
        let a = series(0, &[(rat_int(1), 1), (rat(3, 2), 1)]);
        let b = series(0, &[(rat_int(1), -1)]);
        assert_eq!(a.add(&b), series(0, &[(rat(3, 2), 1)]));
    }

    #[test]
    #[should_panic(expected = "matching centers")]
    fn mismatched_centers_panic() {
        let a = series(0, &[(rat_int(1), 1)]);
        let b = series(1, &[(rat_int(1), 1)]);
        let _ = a.add(&b);
    }

    #[test]
    fn substitute_spec_examples() {
        // f = x1^2 (x2 - 1)^3 at (t, 1 + t^(3/2)) gives t^(13/2).
        let f = parse_poly("x1^2*(x2 - 1)^3", &["x1", "x2"]).unwrap();
        let theta = SeriesVec::with_identity_first(
            rat_int(0),
            vec![series(0, &[(rat_int(0), 1), (rat(3, 2), 1)])],
        )
        .unwrap();
        let value = substitute(&f, &theta).unwrap();
        assert_eq!(value, series(0, &[(rat(13, 2), 1)]));

        // f = x2 at (t, 0) vanishes identically.
        let g = parse_poly("x2", &["x1", "x2"]).unwrap();
        let axis = SeriesVec::with_identity_first(rat_int(0), vec![Series::zero(rat_int(0))])
            .unwrap();
        assert!(substitute(&g, &axis).unwrap().is_zero());

        // f = (x1 - x2)(x1 - 2 x2) at (t, t + t^(3/2), 0) has order 5/2.
        let h = parse_poly("(x1 - x2)*(x1 - 2*x2)", &["x1", "x2", "x3"]).unwrap();
        let theta3 = SeriesVec::with_identity_first(
            rat_int(0),
            vec![
                series(0, &[(rat_int(1), 1), (rat(3, 2), 1)]),
                Series::zero(rat_int(0)),
            ],
        )
        .unwrap();
        let v = substitute(&h, &theta3).unwrap();
        assert_eq!(v.order(), OrderValue::Finite(rat(5, 2)));
    }

    #[test]
    fn substitution_at_constant_point_matches_eval() {
        let f = parse_poly("x1^2*x2 - x2 + 3", &["x1", "x2"]).unwrap();
        let xi1 = rat(1, 2);
        let xi2 = rat_int(2);
        let theta = SeriesVec::with_identity_first(
            xi1.clone(),
            vec![Series::constant(xi1.clone(), xi2.clone())],
        )
        .unwrap();
        let sub = substitute(&f, &theta).unwrap();
        assert_eq!(sub.constant_term(), f.eval(&[xi1, xi2]));
    }

    #[test]
    fn vanishing_profile_spec_examples() {
        let vars = ["x1", "x2", "x3"];
        let system: Vec<Poly> = ["x1^2", "x2", "x3"]
            .iter()
            .map(|t| parse_poly(t, &vars).unwrap())
            .collect();
        let theta = SeriesVec::with_identity_first(
            rat_int(0),
            vec![Series::zero(rat_int(0)), Series::zero(rat_int(0))],
        )
        .unwrap();
        let profile = vanishing_order_profile(&system, &theta).unwrap();
        assert_eq!(
            profile,
            vec![
                OrderValue::Finite(rat_int(2)),
                OrderValue::Infinite,
                OrderValue::Infinite
            ]
        );

        assert!(vanishing_order_profile(&[], &theta).unwrap().is_empty());

        // Exact cusp parametrization annihilates x2^2 - x1^3.
        let cusp = parse_poly("x2^2 - x1^3", &["x1", "x2"]).unwrap();
        let param = SeriesVec::with_identity_first(
            rat_int(0),
            vec![series(0, &[(rat(3, 2), 1)])],
        )
        .unwrap();
        let profile = vanishing_order_profile(&[cusp], &param).unwrap();
        assert_eq!(profile, vec![OrderValue::Infinite]);
    }

    #[test]
    fn vector_invariants_are_enforced() {
        // First component must be exactly t.
        let bad = PuiseuxVector::new(vec![
            series(0, &[(rat_int(1), 2)]),
            Series::zero(rat_int(0)),
        ]);
        assert!(bad.is_err());
        // Centers must agree.
        let mismatched = PuiseuxVector::new(vec![
            Series::identity(rat_int(0)),
            Series::constant(rat_int(1), rat_int(1)),
        ]);
        assert!(mismatched.is_err());
        // Point extraction reads constant terms.
        let v = SeriesVec::with_identity_first(
            rat(1, 2),
            vec![Series::constant(rat(1, 2), rat_int(3))],
        )
        .unwrap();
        assert_eq!(v.point(), vec![rat(1, 2), rat_int(3)]);
        // Ladder includes 0 and the nonzero exponents.
        let w = SeriesVec::with_identity_first(
            rat_int(0),
            vec![series(0, &[(rat_int(1), 1), (rat(3, 2), 1)])],
        )
        .unwrap();
        assert_eq!(w.exponent_ladder(), vec![rat_int(0), rat_int(1), rat(3, 2)]);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let f = parse_poly("x1", &["x1"]).unwrap();
        let theta = SeriesVec::with_identity_first(
            rat_int(0),
            vec![Series::zero(rat_int(0))],
        )
        .unwrap();
        assert!(matches!(
            substitute(&f, &theta),
            Err(PuiseuxError::Arity { .. })
        ));
    }
}
