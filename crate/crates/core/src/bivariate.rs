//! Bivariate certificates: the single-polynomial prefix certificate and
//! the two-polynomial common-curve certificate, with Newton–Hensel
//! refinements at regular points.
//!
//! Both certificates are one-sided: a failed hypothesis yields
//! `inconclusive`, never a claim that the point is isolated.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::MultiPoly;
use crate::puiseux::{substitute, OrderValue};
use crate::newton::regular_lift;
use crate::verdict::{field_check, AuditFailure};
use crate::{Poly, Rat, Series, SeriesVec, Verdict};

/// Query for the single-polynomial prefix certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaQuery {
    pub q: Poly,
    pub point: (Rat, Rat),
    pub theta: Series,
    pub l: Rat,
}

/// Query for the common-curve certificate on a pair.
#[derive(Debug, Clone, PartialEq)]
pub struct PairQuery {
    pub f1: Poly,
    pub f2: Poly,
    pub point: (Rat, Rat),
    pub theta: Series,
    pub l: Rat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrefixKind {
    LemmaPrefix,
    PropositionCommonCurve,
}

/// Quantities the verdict was decided from, kept for auditability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum BoundData {
    Lemma {
        ord_q: OrderValue,
        mult_lc: usize,
        deg_y: u32,
    },
    Proposition {
        orders: Vec<OrderValue>,
        d11: u32,
        d12: u32,
        d21: u32,
        d22: u32,
        degree_gate: u64,
    },
}

/// Outcome of a bivariate certification check.
///
/// When `verdict` is `certified`, `m_index` points into the exponent
/// ladder `0 = gamma_0 < gamma_1 < ...` (the ladder always contains 0,
/// whether or not the constant coefficient vanishes), `m_exponent` is
/// the corresponding `gamma_M`, and `certified_prefix` is `theta`
/// truncated after that exponent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrefixCertificate {
    pub kind: PrefixKind,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(with = "crate::serde_util::rat_str_vec")]
    pub point: Vec<Rat>,
    #[serde(with = "crate::serde_util::rat_str", rename = "L")]
    pub l: Rat,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound_data: Option<BoundData>,
    #[serde(
        with = "crate::serde_util::rat_str_opt",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub threshold: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m_index: Option<usize>,
    #[serde(
        with = "crate::serde_util::rat_str_opt",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub m_exponent: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certified_prefix: Option<Series>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub refinement: Option<RefinementReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RefinementKind {
    NewtonHenselLemma,
    NewtonHenselProposition,
}

/// Newton–Hensel refinement at a regular point: the integer-exponent
/// coefficients of `theta` agree with the unique power-series lift up to
/// the stated threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RefinementReport {
    pub kind: RefinementKind,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(
        with = "crate::serde_util::rat_str_opt",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub k: Option<Rat>,
    /// Which pair member supplied the regular lift (proposition only).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub regular_member: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lift_prefix: Option<Series>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agrees: Option<bool>,
}

fn violated(kind: PrefixKind, point: &(Rat, Rat), l: &Rat, reason: String) -> PrefixCertificate {
    PrefixCertificate {
        kind,
        verdict: Verdict::PreconditionViolated,
        reason: Some(reason),
        point: vec![point.0.clone(), point.1.clone()],
        l: l.clone(),
        bound_data: None,
        threshold: None,
        m_index: None,
        m_exponent: None,
        certified_prefix: None,
        refinement: None,
    }
}

/// Exponent ladder of a theta component: 0 = gamma_0 followed by the
/// positive exponents present.
fn ladder_of(theta: &Series) -> Vec<Rat> {
    let mut ladder = vec![Rat::zero()];
    for (e, _) in theta.terms() {
        if e.is_positive() {
            ladder.push(e.clone());
        }
    }
    ladder
}

fn max_ladder_index(ladder: &[Rat], threshold: &Rat) -> Option<usize> {
    ladder.iter().rposition(|g| g <= threshold)
}

/// Structural checks shared by both certificates. Returns a reason
/// string naming the violated invariant.
fn validate_theta(theta: &Series, point: &(Rat, Rat), l: &Rat) -> Result<(), String> {
    if theta.center() != &point.0 {
        return Err(format!(
            "theta center {} must equal xi1 = {}",
            theta.center(),
            point.0
        ));
    }
    if theta.constant_term() != point.1 {
        return Err(format!(
            "theta constant term {} must equal xi2 = {}",
            theta.constant_term(),
            point.1
        ));
    }
    if let Some((e, _)) = theta.terms().first() {
        if e.is_negative() {
            return Err(format!("theta has a negative exponent {e}"));
        }
    }
    if l.is_negative() {
        return Err(format!("gamma_0 = 0 exceeds L = {l}"));
    }
    if let Some(max) = theta.max_exponent() {
        if max > l {
            return Err(format!("gamma_N = {max} exceeds L = {l}"));
        }
    }
    Ok(())
}

fn check_poly(f: &Poly, name: &str, point: &(Rat, Rat)) -> Result<u32, String> {
    if f.nvars() != 2 {
        return Err(format!("{name} must be bivariate"));
    }
    if f.is_zero() {
        return Err(format!("{name} is the zero polynomial"));
    }
    let deg_y = f.degree_in(1).expect("nonzero");
    if deg_y == 0 {
        return Err(format!("{name} has zero degree in X2"));
    }
    if !f.eval(&[point.0.clone(), point.1.clone()]).is_zero() {
        return Err(format!("{name}(xi) != 0"));
    }
    Ok(deg_y)
}

/// Leading coefficient of `f` as a polynomial in `X2`, viewed in `Q[X1]`.
fn leading_y_coefficient(f: &Poly, deg_y: u32) -> crate::UPoly {
    let terms = f
        .terms()
        .filter(|(e, _)| e[1] == deg_y)
        .map(|(e, c)| (vec![e[0], 0], c.clone()));
    let lc = MultiPoly::from_terms(2, terms);
    lc.as_univariate(0).expect("X2 power removed")
}

fn theta_vector(point: &(Rat, Rat), theta: &Series) -> SeriesVec {
    SeriesVec::with_identity_first(point.0.clone(), vec![theta.clone()])
        .expect("validated center")
}

/// Prefix certificate for a single bivariate polynomial.
///
/// Certified exactly when `ord(q(t, theta)) > L` and
/// `L >= mult(xi1, c)` for the leading `X2`-coefficient `c`; the
/// certified prefix keeps the ladder exponents up to
/// `(L - mult(xi1, c)) / deg_X2(q)`.
pub fn lemma_prefix_certificate(query: &LemmaQuery) -> PrefixCertificate {
    let kind = PrefixKind::LemmaPrefix;
    let deg_y = match check_poly(&query.q, "q", &query.point) {
        Ok(d) => d,
        Err(reason) => return violated(kind, &query.point, &query.l, reason),
    };
    if let Err(reason) = validate_theta(&query.theta, &query.point, &query.l) {
        return violated(kind, &query.point, &query.l, reason);
    }
    let lc = leading_y_coefficient(&query.q, deg_y);
    let mult = lc
        .root_multiplicity(&query.point.0)
        .expect("leading coefficient is nonzero");
    let vector = theta_vector(&query.point, &query.theta);
    let ord = substitute(&query.q, &vector)
        .expect("arity checked")
        .order();
    let bound_data = BoundData::Lemma {
        ord_q: ord.clone(),
        mult_lc: mult,
        deg_y,
    };
    let mut cert = PrefixCertificate {
        kind,
        verdict: Verdict::Inconclusive,
        reason: None,
        point: vec![query.point.0.clone(), query.point.1.clone()],
        l: query.l.clone(),
        bound_data: Some(bound_data),
        threshold: None,
        m_index: None,
        m_exponent: None,
        certified_prefix: None,
        refinement: None,
    };
    if !ord.exceeds(&query.l) {
        cert.reason = Some(format!("ord(q(t, theta)) = {ord} does not exceed L = {}", query.l));
        return cert;
    }
    let mult_rat = Rat::from_integer(crate::Int::from(mult as u64));
    if query.l < mult_rat {
        cert.reason = Some(format!(
            "L = {} is below mult(xi1, c) = {mult}",
            query.l
        ));
        return cert;
    }
    let threshold =
        (query.l.clone() - mult_rat) / Rat::from_integer(crate::Int::from(deg_y as u64));
    let ladder = ladder_of(&query.theta);
    let m_index = max_ladder_index(&ladder, &threshold).expect("threshold >= 0 = gamma_0");
    cert.verdict = Verdict::Certified;
    cert.m_exponent = Some(ladder[m_index].clone());
    cert.certified_prefix = Some(query.theta.truncate_at(&ladder[m_index]));
    cert.m_index = Some(m_index);
    cert.threshold = Some(threshold);
    cert
}

/// Newton–Hensel sharpening of the lemma certificate at a regular point:
/// the coefficients of `theta` agree with the unique power-series lift
/// for all integer exponents up to `L - mult(xi1, c)`.
pub fn lemma_regular_refinement(query: &LemmaQuery) -> RefinementReport {
    let kind = RefinementKind::NewtonHenselLemma;
    let cert = lemma_prefix_certificate(query);
    let mut report = RefinementReport {
        kind,
        verdict: cert.verdict,
        reason: cert.reason.clone(),
        k: None,
        regular_member: None,
        lift_prefix: None,
        agrees: None,
    };
    if cert.verdict == Verdict::PreconditionViolated {
        return report;
    }
    let dq = query.q.partial_derivative(1);
    if dq
        .eval(&[query.point.0.clone(), query.point.1.clone()])
        .is_zero()
    {
        report.verdict = Verdict::PreconditionViolated;
        report.reason = Some("singular point: dq/dX2(xi) = 0".to_string());
        return report;
    }
    if cert.verdict == Verdict::Inconclusive {
        report.reason = Some(format!(
            "lemma hypotheses not satisfied: {}",
            cert.reason.as_deref().unwrap_or("inconclusive")
        ));
        return report;
    }
    let mult = match cert.bound_data {
        Some(BoundData::Lemma { mult_lc, .. }) => mult_lc,
        _ => unreachable!("lemma certificate carries lemma data"),
    };
    let k = query.l.clone() - Rat::from_integer(crate::Int::from(mult as u64));
    let k_floor = rat_floor_u32(&k);
    match regular_lift(&query.q, &query.point.0, &query.point.1, k_floor) {
        Ok(lift) => {
            let agrees = query.theta.truncate_at(&k) == lift.truncate_at(&k);
            report.verdict = if agrees {
                Verdict::Certified
            } else {
                Verdict::Inconclusive
            };
            if !agrees {
                report.reason =
                    Some("theta disagrees with the unique regular lift".to_string());
            }
            report.agrees = Some(agrees);
            report.lift_prefix = Some(lift);
            report.k = Some(k);
        }
        Err(e) => {
            report.verdict = Verdict::PreconditionViolated;
            report.reason = Some(e.to_string());
        }
    }
    report
}

fn rat_floor_u32(r: &Rat) -> u32 {
    use num_traits::ToPrimitive;
    r.floor().to_integer().to_u32().unwrap_or(u32::MAX)
}

/// Common-curve certificate for a pair of bivariate polynomials.
///
/// Certified exactly when both vanishing orders exceed `L` and
/// `L >= d11*d22 + d12*d21` with `d_ij = deg_Xi(f_j)`; the certified
/// prefix keeps ladder exponents up to
/// `(L - (d11*d22 + d12*d21) - min(d11, d12)) / min(d21, d22) + d11 + d12`.
pub fn proposition_common_curve(query: &PairQuery) -> PrefixCertificate {
    let kind = PrefixKind::PropositionCommonCurve;
    let d21 = match check_poly(&query.f1, "f1", &query.point) {
        Ok(d) => d,
        Err(reason) => return violated(kind, &query.point, &query.l, reason),
    };
    let d22 = match check_poly(&query.f2, "f2", &query.point) {
        Ok(d) => d,
        Err(reason) => return violated(kind, &query.point, &query.l, reason),
    };
    if let Err(reason) = validate_theta(&query.theta, &query.point, &query.l) {
        return violated(kind, &query.point, &query.l, reason);
    }
    let d11 = query.f1.degree_in(0).expect("nonzero");
    let d12 = query.f2.degree_in(0).expect("nonzero");
    let gate = u64::from(d11) * u64::from(d22) + u64::from(d12) * u64::from(d21);
    let vector = theta_vector(&query.point, &query.theta);
    let orders: Vec<OrderValue> = [&query.f1, &query.f2]
        .iter()
        .map(|f| substitute(f, &vector).expect("arity checked").order())
        .collect();
    let bound_data = BoundData::Proposition {
        orders: orders.clone(),
        d11,
        d12,
        d21,
        d22,
        degree_gate: gate,
    };
    let mut cert = PrefixCertificate {
        kind,
        verdict: Verdict::Inconclusive,
        reason: None,
        point: vec![query.point.0.clone(), query.point.1.clone()],
        l: query.l.clone(),
        bound_data: Some(bound_data),
        threshold: None,
        m_index: None,
        m_exponent: None,
        certified_prefix: None,
        refinement: None,
    };
    for (j, ord) in orders.iter().enumerate() {
        if !ord.exceeds(&query.l) {
            cert.reason = Some(format!(
                "ord(f{}(t, theta)) = {ord} does not exceed L = {}",
                j + 1,
                query.l
            ));
            return cert;
        }
    }
    let gate_rat = Rat::from_integer(crate::Int::from(gate));
    if query.l < gate_rat {
        cert.reason = Some(format!(
            "L = {} is below the degree gate d11*d22 + d12*d21 = {gate}",
            query.l
        ));
        return cert;
    }
    let min_d1 = Rat::from_integer(crate::Int::from(d11.min(d12) as u64));
    let min_d2 = Rat::from_integer(crate::Int::from(d21.min(d22) as u64));
    let sum_d1 = Rat::from_integer(crate::Int::from(d11 as u64 + d12 as u64));
    let threshold = (query.l.clone() - gate_rat - min_d1) / min_d2 + sum_d1;
    let ladder = ladder_of(&query.theta);
    let m_index = max_ladder_index(&ladder, &threshold).expect("threshold >= 0 = gamma_0");
    cert.verdict = Verdict::Certified;
    cert.m_exponent = Some(ladder[m_index].clone());
    cert.certified_prefix = Some(query.theta.truncate_at(&ladder[m_index]));
    cert.m_index = Some(m_index);
    cert.threshold = Some(threshold);
    cert
}

/// Newton–Hensel sharpening of the common-curve certificate when some
/// `f_j` is regular at `xi`: the common curve has a parametrization
/// agreeing with `theta` on all integer exponents up to
/// `K = floor(L) - min(d11, d12)`.
pub fn proposition_regular_refinement(query: &PairQuery) -> RefinementReport {
    let kind = RefinementKind::NewtonHenselProposition;
    let cert = proposition_common_curve(query);
    let mut report = RefinementReport {
        kind,
        verdict: cert.verdict,
        reason: cert.reason.clone(),
        k: None,
        regular_member: None,
        lift_prefix: None,
        agrees: None,
    };
    if cert.verdict == Verdict::PreconditionViolated {
        return report;
    }
    let point = [query.point.0.clone(), query.point.1.clone()];
    let regular_member = [&query.f1, &query.f2]
        .iter()
        .position(|f| !f.partial_derivative(1).eval(&point).is_zero());
    let member = match regular_member {
        Some(j) => j,
        None => {
            report.verdict = Verdict::PreconditionViolated;
            report.reason = Some("both X2-partials vanish at xi".to_string());
            return report;
        }
    };
    if cert.verdict == Verdict::Inconclusive {
        report.reason = Some(format!(
            "proposition hypotheses not satisfied: {}",
            cert.reason.as_deref().unwrap_or("inconclusive")
        ));
        return report;
    }
    let (d11, d12) = match cert.bound_data {
        Some(BoundData::Proposition { d11, d12, .. }) => (d11, d12),
        _ => unreachable!("proposition certificate carries proposition data"),
    };
    let k = Rat::from_integer(query.l.floor().to_integer())
        - Rat::from_integer(crate::Int::from(d11.min(d12) as u64));
    let f = if member == 0 { &query.f1 } else { &query.f2 };
    match regular_lift(f, &query.point.0, &query.point.1, rat_floor_u32(&k)) {
        Ok(lift) => {
            let agrees = query.theta.truncate_at(&k) == lift.truncate_at(&k);
            report.verdict = if agrees {
                Verdict::Certified
            } else {
                Verdict::Inconclusive
            };
            if !agrees {
                report.reason =
                    Some("theta disagrees with the unique regular lift".to_string());
            }
            report.agrees = Some(agrees);
            report.lift_prefix = Some(lift);
            report.k = Some(k);
            report.regular_member = Some(member as u8 + 1);
        }
        Err(e) => {
            report.verdict = Verdict::PreconditionViolated;
            report.reason = Some(e.to_string());
        }
    }
    report
}

/// Recompute a lemma certificate from its query and compare every
/// stored field.
pub fn audit_lemma(cert: &PrefixCertificate, query: &LemmaQuery) -> Result<(), AuditFailure> {
    let mut expected = lemma_prefix_certificate(query);
    if cert.refinement.is_some() {
        expected.refinement = Some(lemma_regular_refinement(query));
    }
    audit_prefix(cert, &expected)
}

/// Recompute a proposition certificate from its query and compare every
/// stored field.
pub fn audit_proposition(
    cert: &PrefixCertificate,
    query: &PairQuery,
) -> Result<(), AuditFailure> {
    let mut expected = proposition_common_curve(query);
    if cert.refinement.is_some() {
        expected.refinement = Some(proposition_regular_refinement(query));
    }
    audit_prefix(cert, &expected)
}

fn audit_prefix(
    cert: &PrefixCertificate,
    expected: &PrefixCertificate,
) -> Result<(), AuditFailure> {
    field_check("kind", &expected.kind, &cert.kind)?;
    field_check("verdict", &expected.verdict, &cert.verdict)?;
    field_check("point", &expected.point, &cert.point)?;
    field_check("L", &expected.l, &cert.l)?;
    field_check("bound_data", &expected.bound_data, &cert.bound_data)?;
    field_check("threshold", &expected.threshold, &cert.threshold)?;
    field_check("m_index", &expected.m_index, &cert.m_index)?;
    field_check("m_exponent", &expected.m_exponent, &cert.m_exponent)?;
    field_check(
        "certified_prefix",
        &expected.certified_prefix,
        &cert.certified_prefix,
    )?;
    field_check("refinement", &expected.refinement, &cert.refinement)?;
    Ok(())
}
