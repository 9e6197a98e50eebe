//! Sparse multivariate polynomials keyed by exponent vector.

use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{PolyError, UniPoly};
use crate::scalar::Scalar;

/// Sparse multivariate polynomial over an exact scalar.
///
/// Invariants: no stored zero coefficients, every exponent vector has
/// length `nvars`, and the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, T::one())
    }

    /// The variable `x_var` (zero-based index).
    pub fn variable(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(exps, T::one());
        p
    }

    /// Build from (exponent vector, coefficient) pairs; duplicates are
    /// combined and zero coefficients dropped.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (exps, c) in terms {
            p.add_term(&exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &T)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    fn add_term(&mut self, exps: &[u32], c: T) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(exps) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps.to_vec(), c);
            }
        }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }

    /// Largest exponent of variable `var` across terms.
    ///
    /// The zero polynomial has no defined degree.
    pub fn degree_in(&self, var: usize) -> Result<u32, PolyError> {
        if var >= self.nvars {
            return Err(PolyError::VariableIndex {
                index: var,
                nvars: self.nvars,
            });
        }
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.terms.keys().map(|e| e[var]).max().unwrap())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn eval(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.nvars, "point arity mismatch");
        let mut acc = T::zero();
        for (exps, c) in self.terms.iter() {
            let mut term = c.clone();
            for (e, x) in exps.iter().zip(point) {
                for _ in 0..*e {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, c) in self.terms.iter() {
            let e = exps[var];
            if e == 0 {
                continue;
            }
            let mut factor = T::zero();
            for _ in 0..e {
                factor = factor + T::one();
            }
            let mut new_exps = exps.clone();
            new_exps[var] = e - 1;
            out.add_term(&new_exps, c.clone() * factor);
        }
        out
    }

    /// Substitute `x_var -> x_var + offset` (Taylor shift in one variable).
    pub fn shift_var(&self, var: usize, offset: &T) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        if offset.is_zero() {
            return self.clone();
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, c) in self.terms.iter() {
            let e = exps[var] as usize;
            // Pascal row for (x + offset)^e.
            let mut pow_off = T::one();
            let mut binom = T::one();
            for k in (0..=e).rev() {
                // binom = C(e, k), pow_off = offset^(e-k)
                let mut new_exps = exps.clone();
                new_exps[var] = k as u32;
                out.add_term(&new_exps, c.clone() * binom.clone() * pow_off.clone());
                if k > 0 {
                    // C(e, k-1) = C(e, k) * k / (e - k + 1)
                    let mut knum = T::zero();
                    for _ in 0..k {
                        knum = knum + T::one();
                    }
                    let mut kden = T::zero();
                    for _ in 0..(e - k + 1) {
                        kden = kden + T::one();
                    }
                    binom = binom * knum / kden;
                    pow_off = pow_off * offset.clone();
                }
            }
        }
        out
    }

    /// Substitute `x_i -> x_i + offsets[i]` for every variable.
    pub fn shift_all(&self, offsets: &[T]) -> Self {
        assert_eq!(offsets.len(), self.nvars, "offset arity mismatch");
        let mut out = self.clone();
        for (var, off) in offsets.iter().enumerate() {
            out = out.shift_var(var, off);
        }
        out
    }

    /// Substitute a constant for variable `var`, eliminating it from the
    /// support (the variable count stays unchanged).
    pub fn specialize(&self, var: usize, value: &T) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, c) in self.terms.iter() {
            let mut term = c.clone();
            for _ in 0..exps[var] {
                term = term * value.clone();
            }
            let mut new_exps = exps.clone();
            new_exps[var] = 0;
            out.add_term(&new_exps, term);
        }
        out
    }

    /// View as a univariate polynomial in `var`; fails if any other
    /// variable occurs.
    pub fn as_univariate(&self, var: usize) -> Result<UniPoly<T>, PolyError> {
        assert!(var < self.nvars, "variable index out of range");
        let deg = self.terms.keys().map(|e| e[var]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![T::zero(); deg + 1];
        for (exps, c) in self.terms.iter() {
            if exps
                .iter()
                .enumerate()
                .any(|(i, &e)| i != var && e != 0)
            {
                return Err(PolyError::NotUnivariate { var });
            }
            coeffs[exps[var] as usize] = c.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    /// Embed a univariate polynomial as a multivariate one in `var`.
    pub fn from_univariate(p: &UniPoly<T>, nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index out of range");
        let mut out = MultiPoly::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exps = vec![0; nvars];
            exps[var] = k as u32;
            out.add_term(&exps, c.clone());
        }
        out
    }

    /// Exponent vectors of the support.
    pub fn support(&self) -> Vec<Vec<u32>> {
        self.terms.keys().cloned().collect()
    }

    /// Exact multivariate division by a single divisor; `None` when the
    /// division leaves a remainder. Uses graded-lex leading terms.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.nvars, divisor.nvars, "variable count mismatch");
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (dlead, dcoeff) = divisor
            .terms
            .iter()
            .max_by(|(a, _), (b, _)| grlex_cmp(a, b))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rlead, rcoeff) = rem
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| grlex_cmp(a, b))
                .map(|(e, c)| (e.clone(), c.clone()))
                .unwrap();
            if !dlead.iter().zip(&rlead).all(|(d, r)| d <= r) {
                return None;
            }
            let exps: Vec<u32> = rlead.iter().zip(&dlead).map(|(r, d)| r - d).collect();
            let c = rcoeff / dcoeff.clone();
            let mono = MultiPoly::from_terms(self.nvars, [(exps, c)]);
            rem = rem.sub_ref(&mono.mul_ref(divisor));
            quot = quot.add_ref(&mono);
        }
        Some(quot)
    }

    /// Canonical text form with the given variable names, terms in
    /// descending graded-lex order.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars, "name list arity mismatch");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut entries: Vec<(&Vec<u32>, &T)> = self.terms.iter().collect();
        entries.sort_by(|(a, _), (b, _)| grlex_cmp(b, a));
        let mut out = String::new();
        for (i, (exps, c)) in entries.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(format!("{magnitude}"));
            }
            for (var, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[var].to_string()),
                    _ => factors.push(format!("{}^{}", names[var], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

/// Graded lexicographic comparison: total degree first, then lex with
/// earlier variables weighing more.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let ta: u32 = a.iter().sum();
    let tb: u32 = b.iter().sum();
    ta.cmp(&tb).then_with(|| a.cmp(b))
}

impl<T: Scalar> fmt::Display for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.to_string_with(&refs))
    }
}

impl<T: Scalar> fmt::Debug for MultiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    
    use crate::scalar::{rat, rat_int};
    use crate::Poly;

    fn x(i: usize) -> Poly {
        Poly::variable(2, i)
    }

    #[test]
    fn degree_in_matches_spec_examples() {
        // x1^2 * (x2 - 1)^3
        let f = x(0).pow(2).mul_ref(
            &x(1)
                .sub_ref(&Poly::one(2))
                .pow(3),
        );
        assert_eq!(f.degree_in(0).unwrap(), 2);
        assert_eq!(f.degree_in(1).unwrap(), 3);

        let c = Poly::constant(2, rat_int(5));
        assert_eq!(c.degree_in(0).unwrap(), 0);

        let g = x(0).mul_ref(&x(1)).add_ref(&x(1).pow(4));
        assert_eq!(g.degree_in(1).unwrap(), 4);

        assert!(Poly::zero(2).degree_in(0).is_err());
    }

    #[test]
    fn arithmetic_and_exact_division() {
        let f = x(0).sub_ref(&x(1).scale(&rat_int(2))); // x1 - 2 x2
        let sq = f.pow(2);
        assert_eq!(sq.coeff(&[2, 0]), rat_int(1));
        assert_eq!(sq.coeff(&[1, 1]), rat_int(-4));
        assert_eq!(sq.coeff(&[0, 2]), rat_int(4));
        let q = sq.div_exact(&f).unwrap();
        assert_eq!(q, f);
        assert!(sq.div_exact(&x(0).add_ref(&Poly::one(2))).is_none());
    }

    #[test]
    fn shift_recenters_exactly() {
        // (x2 - 1)^2 shifted by x2 -> x2 + 1 becomes x2^2.
        let f = x(1).sub_ref(&Poly::one(2)).pow(2);
        let shifted = f.shift_var(1, &rat_int(1));
        assert_eq!(shifted, x(1).pow(2));
        // Shift with a fraction round-trips.
        let g = x(0).pow(3).add_ref(&x(1).scale(&rat(1, 2)));
        let back = g.shift_var(0, &rat(2, 3)).shift_var(0, &rat(-2, 3));
        assert_eq!(back, g);
    }

    #[test]
    fn eval_and_specialize_agree() {
        let f = x(0).pow(2).mul_ref(&x(1)).add_ref(&x(1).pow(3));
        let v = f.eval(&[rat_int(2), rat(1, 2)]);
        assert_eq!(v, rat_int(2) + rat(1, 8)); // 4*(1/2) + 1/8
        let s = f.specialize(0, &rat_int(2));
        assert_eq!(s.eval(&[rat_int(0), rat(1, 2)]), v);
    }

    #[test]
    fn univariate_round_trip() {
        let f = x(0).pow(3).sub_ref(&x(0)); // x1^3 - x1
        let u = f.as_univariate(0).unwrap();
        assert_eq!(u.degree(), Some(3));
        assert_eq!(Poly::from_univariate(&u, 2, 0), f);
        assert!(x(0).add_ref(&x(1)).as_univariate(0).is_err());
    }

    #[test]
    fn printer_orders_by_graded_lex() {
        let f = Poly::from_terms(
            2,
            [
                (vec![0, 1], rat_int(1)),
                (vec![0, 0], rat_int(-1)),
                (vec![1, 0], rat_int(1)),
                (vec![3, 0], rat_int(1)),
            ],
        );
        assert_eq!(f.to_string(), "x1^3 + x1 + x2 - 1");
    }
}
