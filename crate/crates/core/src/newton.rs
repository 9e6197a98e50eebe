//! Classical Newton-polygon expansion of plane-curve branches at a
//! rational point, with rational-only coefficients.
//!
//! Used in two roles: generating candidate truncated Puiseux series, and
//! as an independent oracle validating the prefix certificates. When a
//! polygon edge polynomial has no rational root, the corresponding
//! branches exist over the complex numbers but not over `Q`; they are
//! reported with status [`BranchStatus::IrrationalObstruction`] together
//! with the rational prefix found so far.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::puiseux::OrderValue;
use crate::scalar::rat_int;
use crate::{Int, Poly, Rat, Series, UPoly};

/// Errors from polygon and expansion routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpandError {
    #[error("polynomial must be bivariate, got {nvars} variables")]
    NotBivariate { nvars: usize },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("q({point}) != 0: expansion point must lie on the curve")]
    PointNotOnCurve { point: String },
    #[error("q(center, Y) vanishes identically; the fiber is a vertical line")]
    VerticalFiber,
    #[error("expansion point is singular: {detail}")]
    SingularPoint { detail: String },
    #[error("precision must be positive, got {0}")]
    NonpositivePrecision(String),
    #[error("expansion exceeded the recursion depth limit {limit}")]
    DepthExceeded { limit: usize },
    #[error("ramification scale overflow")]
    ScaleOverflow,
}

/// Expansion status of a branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BranchStatus {
    /// The expansion is exactly a root of `q`.
    Exact,
    /// Expansion stopped once the residual order exceeded the requested
    /// precision.
    Truncated,
    /// A polygon edge polynomial has no rational root; the stored
    /// expansion is the maximal rational prefix along this path.
    IrrationalObstruction,
}

/// One branch through the expansion point.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    /// `y0` plus the computed terms, as a series in `t - center`.
    pub expansion: Series,
    /// Exponent threshold this expansion is good for: for non-obstructed
    /// branches, substituting into `q` vanishes to order strictly greater
    /// than this. For obstructed branches it is the largest exponent of
    /// the rational prefix.
    pub attained_precision: Rat,
    pub status: BranchStatus,
    /// Exact vanishing order of `q(t, expansion)`, recomputed by
    /// substitution when the branch is emitted.
    pub residual_order: OrderValue,
}

/// Tuning knobs for [`expand_branches_with`].
#[derive(Debug, Clone)]
pub struct ExpandConfig {
    /// Maximum substitution depth before giving up on non-squarefree
    /// pathologies.
    pub max_depth: usize,
}

impl Default for ExpandConfig {
    fn default() -> Self {
        ExpandConfig { max_depth: 64 }
    }
}

/// One edge of the Newton polygon.
///
/// Support points of `q(center + s, Y)` are plotted as `(i, j)` with `i`
/// the `s`-exponent and `j` the `Y`-exponent. An edge of the lower
/// convex hull with slope `m < 0` corresponds to the candidate leading
/// exponent `gamma = -1/m` (negative reciprocal). The edge polynomial
/// collects the coefficients on the edge: `sum a_ij c^(j - j_min)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge {
    pub slope: Rat,
    pub exponent: Rat,
    pub poly: UPoly,
}

fn check_bivariate(q: &Poly) -> Result<(), ExpandError> {
    if q.nvars() != 2 {
        return Err(ExpandError::NotBivariate { nvars: q.nvars() });
    }
    if q.is_zero() {
        return Err(ExpandError::ZeroPolynomial);
    }
    Ok(())
}

/// Newton polygon of `q` rewritten in `s = t - center`: one entry per
/// lower-hull edge with negative slope, sorted by increasing candidate
/// exponent.
pub fn newton_polygon_edges(q: &Poly, center: &Rat) -> Result<Vec<Edge>, ExpandError> {
    check_bivariate(q)?;
    let shifted = q.shift_var(0, center);
    let support: Vec<(u64, u64)> = shifted
        .terms()
        .map(|(e, _)| (e[0] as u64, e[1] as u64))
        .collect();
    let edges = polygon_candidates(&support)
        .into_iter()
        .map(|(gamma, points)| {
            let j_min = points.iter().map(|&(_, j)| j).min().unwrap();
            let deg = points.iter().map(|&(_, j)| j - j_min).max().unwrap() as usize;
            let mut coeffs = vec![Rat::zero(); deg + 1];
            for &(i, j) in &points {
                coeffs[(j - j_min) as usize] = shifted.coeff(&[i as u32, j as u32]);
            }
            Edge {
                slope: -gamma.recip(),
                exponent: gamma,
                poly: UPoly::from_coeffs(coeffs),
            }
        })
        .collect();
    Ok(edges)
}

/// Candidate exponents `gamma > 0` with their weight-minimizing support
/// subsets: `gamma` qualifies when `min (i + gamma j)` is attained by at
/// least two points with distinct `j`. All-integer arithmetic; this is
/// the hot loop of the expansion driver.
fn polygon_candidates(support: &[(u64, u64)]) -> Vec<(Rat, Vec<(u64, u64)>)> {
    // gamma = num/den in lowest terms with num, den > 0.
    let mut gammas: BTreeSet<(u64, u64)> = BTreeSet::new();
    for (a, &(i1, j1)) in support.iter().enumerate() {
        for &(i2, j2) in support.iter().skip(a + 1) {
            if j1 == j2 {
                continue;
            }
            // (i1 - i2) / (j2 - j1) > 0 exactly when the segment has
            // negative slope in the (i, j) plane.
            let num = i1 as i64 - i2 as i64;
            let den = j2 as i64 - j1 as i64;
            if num == 0 || num.signum() != den.signum() {
                continue;
            }
            let (num, den) = (num.unsigned_abs(), den.unsigned_abs());
            let g = num.gcd(&den);
            gammas.insert((num / g, den / g));
        }
    }
    let mut out = Vec::new();
    for (num, den) in gammas {
        // Weight scaled by den: i*den + j*num stays in u128.
        let weight =
            |&(i, j): &(u64, u64)| i as u128 * den as u128 + j as u128 * num as u128;
        let min_w = support.iter().map(weight).min().unwrap();
        let minimizers: Vec<(u64, u64)> = support
            .iter()
            .copied()
            .filter(|p| weight(p) == min_w)
            .collect();
        let distinct_j: BTreeSet<u64> = minimizers.iter().map(|&(_, j)| j).collect();
        if distinct_j.len() >= 2 {
            out.push((Rat::new(Int::from(num), Int::from(den)), minimizers));
        }
    }
    out
}

/// Nonzero rational roots of a rational univariate polynomial, with
/// multiplicities, plus a flag for leftover irrational (or complex)
/// roots.
///
/// Linear and quadratic factors are solved directly (this is the common
/// case along a branch, where coefficients grow large); higher degrees
/// peel off roots found by the rational root theorem.
pub fn rational_roots(p: &UPoly) -> (Vec<(Rat, usize)>, bool) {
    if p.is_zero() {
        return (Vec::new(), false);
    }
    // Strip powers of c: only nonzero roots are of interest.
    let start = p.trailing_order().unwrap();
    let coeffs: Vec<Rat> = p.coeffs()[start..].to_vec();
    let mut reduced = UPoly::from_coeffs(coeffs);
    let mut roots: Vec<(Rat, usize)> = Vec::new();
    let mut leftover = false;
    loop {
        match reduced.degree() {
            None | Some(0) => break,
            Some(1) => {
                let root = -(reduced.coeff(0) / reduced.coeff(1));
                push_root(&mut roots, root);
                break;
            }
            Some(2) => {
                let (a, b, c) = (reduced.coeff(2), reduced.coeff(1), reduced.coeff(0));
                let disc = b.clone() * b.clone()
                    - Rat::from_integer(Int::from(4)) * a.clone() * c;
                match rat_sqrt(&disc) {
                    Some(s) => {
                        let two_a = Rat::from_integer(Int::from(2)) * a;
                        if s.is_zero() {
                            roots.push((-b / two_a, 2));
                        } else {
                            push_root(&mut roots, (-b.clone() + s.clone()) / two_a.clone());
                            push_root(&mut roots, (-b - s) / two_a);
                        }
                    }
                    None => leftover = true,
                }
                break;
            }
            Some(_) => {
                // Rational root theorem on the denominator-cleared form.
                match find_one_root_by_divisors(&reduced) {
                    Some(root) => {
                        let divisor =
                            UPoly::from_coeffs(vec![-root.clone(), Rat::one()]);
                        reduced = reduced.div_exact(&divisor).expect("verified root");
                        push_root(&mut roots, root);
                    }
                    None => {
                        leftover = true;
                        break;
                    }
                }
            }
        }
    }
    let mut merged: Vec<(Rat, usize)> = Vec::new();
    roots.sort_by(|(a, _), (b, _)| a.cmp(b));
    for (r, m) in roots {
        if r.is_zero() {
            continue;
        }
        match merged.last_mut() {
            Some((last, count)) if *last == r => *count += m,
            _ => merged.push((r, m)),
        }
    }
    (merged, leftover)
}

fn push_root(roots: &mut Vec<(Rat, usize)>, r: Rat) {
    roots.push((r, 1));
}

/// Exact rational square root, if one exists.
fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    (&ns * &ns == *r.numer() && &ds * &ds == *r.denom()).then(|| Rat::new(ns, ds))
}

/// One rational root of a polynomial of degree >= 3 via divisor
/// enumeration of the cleared constant and leading coefficients.
fn find_one_root_by_divisors(p: &UPoly) -> Option<Rat> {
    let mut lcm = Int::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let int_coeffs: Vec<Int> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let a0 = int_coeffs.first().unwrap().abs();
    let lead = int_coeffs.last().unwrap().abs();
    for p_div in divisors(&a0) {
        for q_div in divisors(&lead) {
            for sign in [1i64, -1] {
                let cand = Rat::new(&p_div * Int::from(sign), q_div.clone());
                if p.eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors(n: &Int) -> Vec<Int> {
    if n.is_zero() {
        // Zero constant term was stripped beforehand; treat defensively.
        return vec![Int::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = Int::one();
    loop {
        let dd = &d * &d;
        if dd > *n {
            break;
        }
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            let other = n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Expand every branch of `V(q)` through `(center, y0)` far enough that
/// the residual order of each non-obstructed branch strictly exceeds
/// `precision`. Uses the default depth limit.
pub fn expand_branches(
    q: &Poly,
    center: &Rat,
    y0: &Rat,
    precision: &Rat,
) -> Result<Vec<Branch>, ExpandError> {
    expand_branches_with(q, center, y0, precision, &ExpandConfig::default())
}

pub fn expand_branches_with(
    q: &Poly,
    center: &Rat,
    y0: &Rat,
    precision: &Rat,
    config: &ExpandConfig,
) -> Result<Vec<Branch>, ExpandError> {
    check_bivariate(q)?;
    if !precision.is_positive() {
        return Err(ExpandError::NonpositivePrecision(precision.to_string()));
    }
    if !q.eval(&[center.clone(), y0.clone()]).is_zero() {
        return Err(ExpandError::PointNotOnCurve {
            point: format!("({center}, {y0})"),
        });
    }
    let fiber = q.specialize(0, center);
    if fiber.is_zero() {
        return Err(ExpandError::VerticalFiber);
    }
    // Recenter both variables at the expansion point.
    let recentered = q.shift_all(&[center.clone(), y0.clone()]);
    // Strip the s-content; it raises all residual orders uniformly.
    let s_content = recentered
        .terms()
        .map(|(e, _)| e[0] as u64)
        .min()
        .unwrap();
    let reduced = divide_s_power(&recentered, s_content);
    let mut state = Driver {
        original: q.clone(),
        prec: precision.clone(),
        max_depth: config.max_depth,
        center: center.clone(),
        y0: y0.clone(),
        branches: Vec::new(),
    };
    state.explore(reduced, 1, s_content, Rat::zero(), Vec::new(), 0)?;
    // Collapse entries that only differ beyond the precision horizon.
    let mut seen: Vec<(Series, BranchStatus)> = Vec::new();
    state.branches.retain(|b| {
        let key = (b.expansion.clone(), b.status);
        if seen.contains(&key) {
            false
        } else {
            seen.push(key);
            true
        }
    });
    Ok(state.branches)
}

struct Driver {
    original: Poly,
    prec: Rat,
    max_depth: usize,
    center: Rat,
    y0: Rat,
    branches: Vec<Branch>,
}

impl Driver {
    fn make_series(&self, prefix: &[(Rat, Rat)]) -> Series {
        let mut terms: Vec<(Rat, Rat)> = Vec::with_capacity(prefix.len() + 1);
        terms.push((Rat::zero(), self.y0.clone()));
        terms.extend(prefix.iter().cloned());
        Series::from_terms(self.center.clone(), terms)
    }

    /// Exact residual order of the prefix against the original input.
    fn exact_residual(&self, expansion: &Series) -> OrderValue {
        let vector = crate::puiseux::PuiseuxVector::with_identity_first(
            self.center.clone(),
            vec![expansion.clone()],
        )
        .expect("matching center");
        crate::puiseux::substitute(&self.original, &vector)
            .expect("bivariate")
            .order()
    }

    /// Emit a finished (non-obstructed) branch: the status and the
    /// residual come from one exact substitution into the original q.
    fn emit_verified(&mut self, prefix: &[(Rat, Rat)]) {
        let expansion = self.make_series(prefix);
        let residual = self.exact_residual(&expansion);
        debug_assert!(residual.exceeds(&self.prec), "emitted below precision");
        let status = if residual.is_infinite() {
            BranchStatus::Exact
        } else {
            BranchStatus::Truncated
        };
        self.branches.push(Branch {
            expansion,
            attained_precision: self.prec.clone(),
            status,
            residual_order: residual,
        });
    }

    /// Terms with s-exponent at or above this bound sit strictly beyond
    /// the precision horizon at the current scale.
    fn horizon(&self, scale: u64, drop: u64) -> i64 {
        use num_traits::ToPrimitive;
        let bound = self.prec.clone() * Rat::from_integer(Int::from(scale))
            - Rat::from_integer(Int::from(drop));
        bound.floor().to_integer().to_i64().unwrap_or(i64::MAX) + 1
    }

    /// Invariant: `q_cur(s, Y) = q_hat(u, theta_prefix(u) + u^base * Y) / s^drop`
    /// where `u = t - center = s^scale` and `q_hat` is the recentered
    /// polynomial (initial s-content accounted for in `drop`). Dividing
    /// out Y-factors below weakens the bookkeeping to a lower bound on
    /// the residual order, which keeps every stopping decision sound.
    fn explore(
        &mut self,
        mut q_cur: Poly,
        scale: u64,
        drop: u64,
        base: Rat,
        prefix: Vec<(Rat, Rat)>,
        depth: usize,
    ) -> Result<(), ExpandError> {
        // Everything at or beyond the horizon only influences orders
        // above the requested precision; cutting it keeps coefficient
        // growth and support size bounded. Decisions at the horizon are
        // re-verified by exact substitution on emission.
        q_cur = truncate_s(&q_cur, self.horizon(scale, drop));
        if q_cur.is_zero() {
            self.emit_verified(&prefix);
            return Ok(());
        }
        // Branches that terminate exactly: Y divides q_cur.
        let y_content = q_cur.terms().map(|(e, _)| e[1]).min().unwrap_or(0);
        if y_content > 0 {
            self.emit_verified(&prefix);
            q_cur = divide_y_power(&q_cur, y_content);
            if q_cur.degree_in(1).map(|d| d == 0).unwrap_or(true) {
                // No remaining Y-dependence: no other branches this way.
                return Ok(());
            }
        }
        let y0_order = q_cur
            .terms()
            .filter(|(e, _)| e[1] == 0)
            .map(|(e, _)| e[0] as u64)
            .min();
        let r = match y0_order {
            // The whole Y-free part sits beyond the horizon.
            None => {
                self.emit_verified(&prefix);
                return Ok(());
            }
            Some(r) => r,
        };
        let residual = Rat::new(Int::from(drop + r), Int::from(scale));
        if residual > self.prec {
            self.emit_verified(&prefix);
            return Ok(());
        }
        if std::env::var_os("CURVECERT_TRACE_EXPAND").is_some() {
            let max_bits = q_cur
                .terms()
                .map(|(_, c)| c.numer().bits() + c.denom().bits())
                .max()
                .unwrap_or(0);
            eprintln!(
                "depth {depth}: scale {scale} drop {drop} terms {} max_coeff_bits {max_bits} residual {residual}",
                q_cur.num_terms()
            );
        }
        let support: Vec<(u64, u64)> = q_cur
            .terms()
            .map(|(e, _)| (e[0] as u64, e[1] as u64))
            .collect();
        for (gamma, minimizers) in polygon_candidates(&support) {
            let j_min = minimizers.iter().map(|&(_, j)| j).min().unwrap();
            let deg = minimizers.iter().map(|&(_, j)| j - j_min).max().unwrap() as usize;
            let mut coeffs = vec![Rat::zero(); deg + 1];
            for &(i, j) in &minimizers {
                coeffs[(j - j_min) as usize] = q_cur.coeff(&[i as u32, j as u32]);
            }
            let edge_poly = UPoly::from_coeffs(coeffs);
            let (roots, leftover) = rational_roots(&edge_poly);
            if leftover {
                // Rational coefficients cannot continue along this edge.
                let expansion = self.make_series(&prefix);
                let residual_order = self.exact_residual(&expansion);
                self.branches.push(Branch {
                    expansion,
                    attained_precision: prefix
                        .last()
                        .map(|(e, _)| e.clone())
                        .unwrap_or_else(Rat::zero),
                    status: BranchStatus::IrrationalObstruction,
                    residual_order,
                });
            }
            for (root, mult) in roots {
                // Simple-root continuations terminate via the precision
                // check; only multiple-root steps (non-squarefree
                // pathologies) count against the depth limit.
                let next_depth = if mult > 1 { depth + 1 } else { depth };
                if mult > 1 && next_depth > self.max_depth {
                    return Err(ExpandError::DepthExceeded {
                        limit: self.max_depth,
                    });
                }
                let e = gamma.denom().to_u64().ok_or(ExpandError::ScaleOverflow)?;
                let p = gamma.numer().to_u64().ok_or(ExpandError::ScaleOverflow)?;
                let new_scale = scale.checked_mul(e).ok_or(ExpandError::ScaleOverflow)?;
                let (rescaled, base_drop) = if e > 1 {
                    (
                        rescale_s(&q_cur, e)?,
                        drop.checked_mul(e).ok_or(ExpandError::ScaleOverflow)?,
                    )
                } else {
                    (q_cur.clone(), drop)
                };
                let (next, extra_drop) = substitute_edge_root(&rescaled, p, &root)?;
                let exponent = base.clone() + Rat::new(Int::from(p), Int::from(new_scale));
                let mut new_prefix = prefix.clone();
                new_prefix.push((exponent.clone(), root.clone()));
                self.explore(
                    next,
                    new_scale,
                    base_drop + extra_drop,
                    exponent,
                    new_prefix,
                    next_depth,
                )?;
            }
        }
        Ok(())
    }
}

/// Drop terms whose s-exponent is at or above the horizon.
fn truncate_s(q: &Poly, horizon: i64) -> Poly {
    if horizon <= 0 {
        return Poly::zero(2);
    }
    let h = horizon as u64;
    if q.terms().all(|(e, _)| (e[0] as u64) < h) {
        return q.clone();
    }
    Poly::from_terms(
        2,
        q.terms()
            .filter(|(e, _)| (e[0] as u64) < h)
            .map(|(e, c)| (e.to_vec(), c.clone())),
    )
}

fn divide_s_power(q: &Poly, k: u64) -> Poly {
    if k == 0 {
        return q.clone();
    }
    Poly::from_terms(
        2,
        q.terms()
            .map(|(e, c)| (vec![e[0] - k as u32, e[1]], c.clone())),
    )
}

fn divide_y_power(q: &Poly, k: u32) -> Poly {
    if k == 0 {
        return q.clone();
    }
    Poly::from_terms(
        2,
        q.terms().map(|(e, c)| (vec![e[0], e[1] - k], c.clone())),
    )
}

/// Substitute `s -> s^e`.
fn rescale_s(q: &Poly, e: u64) -> Result<Poly, ExpandError> {
    let mut terms = Vec::new();
    for (exps, c) in q.terms() {
        let i = (exps[0] as u64)
            .checked_mul(e)
            .and_then(|v| u32::try_from(v).ok())
            .ok_or(ExpandError::ScaleOverflow)?;
        terms.push((vec![i, exps[1]], c.clone()));
    }
    Ok(Poly::from_terms(2, terms))
}

/// Substitute `Y -> s^p * (c + Y)` and divide out the s-content; returns
/// the new polynomial and the removed s-power.
fn substitute_edge_root(q: &Poly, p: u64, c: &Rat) -> Result<(Poly, u64), ExpandError> {
    let deg_y = q.degree_in(1).expect("nonzero with Y-dependence") as usize;
    // Binomial expansions of (c + Y)^j for all needed j.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(deg_y + 1);
    rows.push(vec![Rat::one()]);
    for j in 1..=deg_y {
        let prev = rows[j - 1].clone();
        let mut row = vec![Rat::zero(); j + 1];
        for (k, v) in prev.iter().enumerate() {
            // (c + Y) * prev
            row[k] = row[k].clone() + v * c;
            row[k + 1] = row[k + 1].clone() + v.clone();
        }
        rows.push(row);
    }
    let mut terms = Vec::new();
    for (exps, coeff) in q.terms() {
        let i = exps[0] as u64;
        let j = exps[1] as usize;
        let s_exp = i
            .checked_add((j as u64).checked_mul(p).ok_or(ExpandError::ScaleOverflow)?)
            .ok_or(ExpandError::ScaleOverflow)?;
        let s_exp = u32::try_from(s_exp).map_err(|_| ExpandError::ScaleOverflow)?;
        for (k, b) in rows[j].iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            terms.push((vec![s_exp, k as u32], coeff.clone() * b.clone()));
        }
    }
    let out = Poly::from_terms(2, terms);
    let content = out.terms().map(|(e, _)| e[0] as u64).min().unwrap_or(0);
    Ok((divide_s_power(&out, content), content))
}

/// Unique power-series solution through a regular point, truncated at
/// degree `k`: requires `q(center, y0) = 0` and a nonvanishing
/// `Y`-partial there (the Newton–Hensel setting).
pub fn regular_lift(q: &Poly, center: &Rat, y0: &Rat, k: u32) -> Result<Series, ExpandError> {
    check_bivariate(q)?;
    if !q.eval(&[center.clone(), y0.clone()]).is_zero() {
        return Err(ExpandError::PointNotOnCurve {
            point: format!("({center}, {y0})"),
        });
    }
    let recentered = q.shift_all(&[center.clone(), y0.clone()]);
    let dq = recentered.partial_derivative(1);
    let d0 = dq.eval(&[Rat::zero(), Rat::zero()]);
    if d0.is_zero() {
        return Err(ExpandError::SingularPoint {
            detail: format!("dq/dX2({center}, {y0}) = 0"),
        });
    }
    // Undetermined coefficients: c_i = -[s^i] q_hat(s, theta_{i-1}) / D.
    let mut theta = UPoly::zero();
    for i in 1..=k {
        let value = eval_bivariate_at_upoly(&recentered, &theta, k);
        let target = value.coeff(i as usize);
        if target.is_zero() {
            continue;
        }
        let c = -(target / d0.clone());
        theta = theta.add_ref(&UPoly::monomial(c, i as usize));
    }
    let mut terms: Vec<(Rat, Rat)> = vec![(Rat::zero(), y0.clone())];
    for (i, c) in theta.coeffs().iter().enumerate() {
        if !c.is_zero() {
            terms.push((rat_int(i as i64), c.clone()));
        }
    }
    Ok(Series::from_terms(center.clone(), terms))
}

/// Evaluate a bivariate polynomial at `(s, theta(s))`, truncating the
/// result beyond degree `trunc` (higher terms never feed back into the
/// lifting loop).
fn eval_bivariate_at_upoly(q: &Poly, theta: &UPoly, trunc: u32) -> UPoly {
    let deg_y = q.terms().map(|(e, _)| e[1]).max().unwrap_or(0) as usize;
    let mut powers: Vec<UPoly> = Vec::with_capacity(deg_y + 1);
    powers.push(UPoly::one());
    for j in 1..=deg_y {
        let next = truncate_upoly(&powers[j - 1].mul_ref(theta), trunc);
        powers.push(next);
    }
    let mut acc = UPoly::zero();
    for (exps, c) in q.terms() {
        let i = exps[0] as usize;
        if i as u32 > trunc {
            continue;
        }
        let j = exps[1] as usize;
        let term = powers[j].scale(c).shift_up(i);
        acc = acc.add_ref(&truncate_upoly(&term, trunc));
    }
    truncate_upoly(&acc, trunc)
}

fn truncate_upoly(p: &UPoly, trunc: u32) -> UPoly {
    let keep = (trunc as usize + 1).min(p.coeffs().len());
    UPoly::from_coeffs(p.coeffs()[..keep].to_vec())
}
