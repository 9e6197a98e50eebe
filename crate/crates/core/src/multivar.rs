//! Multivariate certificates: non-isolation with free variable `X1` and,
//! for systems asserted to cut out a variety of dimension at most one,
//! the parametrization-prefix certificate.
//!
//! Both checks take upper bounds in place of the exact Noether exponent
//! and variety degree. Upper bounds strengthen the `L` requirement and
//! shorten the certified prefix, so certification stays sound.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::BoundReport;
use crate::puiseux::{vanishing_order_profile, OrderValue};
use crate::verdict::{field_check, AuditFailure};
use crate::{Int, Poly, Rat, SeriesVec, Verdict};

/// An upper bound fed into a certificate, with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum BoundValue {
    /// Supplied by the caller, taken on faith and recorded as such.
    User {
        #[serde(with = "crate::serde_util::int_str")]
        value: Int,
    },
    /// Produced by one of the bound formulas.
    Computed {
        #[serde(with = "crate::serde_util::int_str")]
        value: Int,
        report: BoundReport,
    },
}

impl BoundValue {
    pub fn user(value: impl Into<Int>) -> Self {
        BoundValue::User {
            value: value.into(),
        }
    }

    pub fn from_report(report: BoundReport) -> Self {
        BoundValue::Computed {
            value: report.value.clone(),
            report,
        }
    }

    pub fn value(&self) -> &Int {
        match self {
            BoundValue::User { value } => value,
            BoundValue::Computed { value, .. } => value,
        }
    }
}

/// A certification request for a polynomial system.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemQuery {
    pub system: Vec<Poly>,
    pub point: Vec<Rat>,
    pub theta: SeriesVec,
    pub l: Rat,
    /// Upper bound for the Noether exponent `e(f)`.
    pub noether_bound: BoundValue,
    /// Upper bound for `deg V(f)`; required by the dimension-1 path.
    pub degree_bound: Option<BoundValue>,
    /// Caller-asserted `dim V(f) <= 1`; recorded, never verified.
    pub dim1_asserted: bool,
}

pub const NON_ISOLATION_STATEMENT: &str =
    "xi lies on an irreducible component of V(f) with free variable X1";
pub const CURVE_PREFIX_STATEMENT: &str = "a curve in V(f) with free variable X1 passes through \
xi with a parametrization agreeing with the certified prefix of Theta";

/// Certificate that the base point is not isolated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NonIsolationCertificate {
    pub kind: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub n: usize,
    pub m: usize,
    #[serde(with = "crate::serde_util::rat_str_vec")]
    pub point: Vec<Rat>,
    #[serde(with = "crate::serde_util::rat_str", rename = "L")]
    pub l: Rat,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orders: Option<Vec<OrderValue>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub noether_bound: Option<BoundValue>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub statement: Option<String>,
}

/// Certificate that a prefix of `Theta` starts a curve parametrization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePrefixCertificate {
    pub kind: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub n: usize,
    pub m: usize,
    #[serde(with = "crate::serde_util::rat_str_vec")]
    pub point: Vec<Rat>,
    #[serde(with = "crate::serde_util::rat_str", rename = "L")]
    pub l: Rat,
    pub dim1_asserted: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orders: Option<Vec<OrderValue>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub noether_bound: Option<BoundValue>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_bound: Option<BoundValue>,
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
    pub certified_prefix: Option<SeriesVec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub statement: Option<String>,
}

pub const NON_ISOLATION_KIND: &str = "non-isolation";
pub const CURVE_PREFIX_KIND: &str = "curve-prefix";

/// Structural hypotheses shared by both theorems; returns the violated
/// invariant by name.
fn validate_query(query: &SystemQuery) -> Result<(), String> {
    if query.system.is_empty() {
        return Err("system must contain at least one polynomial".to_string());
    }
    let n = query.point.len();
    if n == 0 {
        return Err("point must have at least one coordinate".to_string());
    }
    if query.theta.len() != n {
        return Err(format!(
            "Theta has {} components but the point has {n} coordinates",
            query.theta.len()
        ));
    }
    for (j, f) in query.system.iter().enumerate() {
        if f.nvars() != n {
            return Err(format!(
                "f{} is a polynomial in {} variables, expected {n}",
                j + 1,
                f.nvars()
            ));
        }
        if !f.eval(&query.point).is_zero() {
            return Err(format!("f{}(xi) != 0", j + 1));
        }
    }
    if query.theta.center() != &query.point[0] {
        return Err(format!(
            "Theta center {} must equal xi1 = {}",
            query.theta.center(),
            query.point[0]
        ));
    }
    // Constant terms a_0l must match the point coordinates.
    let constants = query.theta.point();
    for (l, (have, want)) in constants.iter().zip(&query.point).enumerate() {
        if have != want {
            return Err(format!(
                "Theta component {} has constant term {have}, expected xi_{} = {want}",
                l + 1,
                l + 1
            ));
        }
    }
    if query.l.is_negative() {
        return Err(format!("gamma_0 = 0 exceeds L = {}", query.l));
    }
    for (idx, c) in query.theta.components().iter().enumerate().skip(1) {
        if let Some((e, _)) = c.terms().first() {
            if e.is_negative() {
                return Err(format!(
                    "Theta component {} has a negative exponent {e}",
                    idx + 1
                ));
            }
        }
        if let Some(max) = c.max_exponent() {
            if max > &query.l {
                return Err(format!(
                    "Theta component {} has exponent {max} exceeding L = {}",
                    idx + 1,
                    query.l
                ));
            }
        }
    }
    if query.noether_bound.value() < &Int::from(1) {
        return Err("noether bound must be a positive integer".to_string());
    }
    if let Some(db) = &query.degree_bound {
        if db.value() < &Int::from(1) {
            return Err("degree bound must be a positive integer".to_string());
        }
    }
    Ok(())
}

/// Non-isolation certificate: certified exactly when every
/// `ord(f_j(Theta))` exceeds `L` and `L` is at least the Noether-exponent
/// bound.
pub fn certify_nonisolated(query: &SystemQuery) -> NonIsolationCertificate {
    let n = query.point.len();
    let m = query.system.len();
    let mut cert = NonIsolationCertificate {
        kind: NON_ISOLATION_KIND.to_string(),
        verdict: Verdict::PreconditionViolated,
        reason: None,
        n,
        m,
        point: query.point.clone(),
        l: query.l.clone(),
        orders: None,
        noether_bound: None,
        statement: None,
    };
    if let Err(reason) = validate_query(query) {
        cert.reason = Some(reason);
        return cert;
    }
    let orders = vanishing_order_profile(&query.system, &query.theta)
        .expect("arity validated");
    cert.orders = Some(orders.clone());
    cert.noether_bound = Some(query.noether_bound.clone());
    cert.verdict = Verdict::Inconclusive;
    for (j, ord) in orders.iter().enumerate() {
        if !ord.exceeds(&query.l) {
            cert.reason = Some(format!(
                "ord(f{}(Theta)) = {ord} does not exceed L = {}",
                j + 1,
                query.l
            ));
            return cert;
        }
    }
    let e_bound = Rat::from_integer(query.noether_bound.value().clone());
    if query.l < e_bound {
        cert.reason = Some(format!(
            "L = {} is below the Noether-exponent bound {}",
            query.l,
            query.noether_bound.value()
        ));
        return cert;
    }
    cert.verdict = Verdict::Certified;
    cert.statement = Some(NON_ISOLATION_STATEMENT.to_string());
    cert
}

/// Dimension-1 prefix certificate: under the caller's `dim V(f) <= 1`
/// assertion, certified exactly when every order exceeds `L` and
/// `L >= e_bound * degree_bound`; the certified prefix keeps ladder
/// exponents up to `L / (e_bound * degree_bound)`.
pub fn certify_curve_prefix(query: &SystemQuery) -> CurvePrefixCertificate {
    let n = query.point.len();
    let m = query.system.len();
    let mut cert = CurvePrefixCertificate {
        kind: CURVE_PREFIX_KIND.to_string(),
        verdict: Verdict::PreconditionViolated,
        reason: None,
        n,
        m,
        point: query.point.clone(),
        l: query.l.clone(),
        dim1_asserted: query.dim1_asserted,
        orders: None,
        noether_bound: None,
        degree_bound: None,
        threshold: None,
        m_index: None,
        m_exponent: None,
        certified_prefix: None,
        statement: None,
    };
    if !query.dim1_asserted {
        cert.reason =
            Some("dim V(f) <= 1 must be asserted for the curve-prefix certificate".to_string());
        return cert;
    }
    let degree_bound = match &query.degree_bound {
        Some(db) => db.clone(),
        None => {
            cert.reason =
                Some("a degree bound is required for the curve-prefix certificate".to_string());
            return cert;
        }
    };
    if let Err(reason) = validate_query(query) {
        cert.reason = Some(reason);
        return cert;
    }
    let orders = vanishing_order_profile(&query.system, &query.theta)
        .expect("arity validated");
    cert.orders = Some(orders.clone());
    cert.noether_bound = Some(query.noether_bound.clone());
    cert.degree_bound = Some(degree_bound.clone());
    cert.verdict = Verdict::Inconclusive;
    for (j, ord) in orders.iter().enumerate() {
        if !ord.exceeds(&query.l) {
            cert.reason = Some(format!(
                "ord(f{}(Theta)) = {ord} does not exceed L = {}",
                j + 1,
                query.l
            ));
            return cert;
        }
    }
    let gate = query.noether_bound.value() * degree_bound.value();
    let gate_rat = Rat::from_integer(gate.clone());
    if query.l < gate_rat {
        cert.reason = Some(format!(
            "L = {} is below e_bound * degree_bound = {gate}",
            query.l
        ));
        return cert;
    }
    let threshold = query.l.clone() / gate_rat;
    let ladder = query.theta.exponent_ladder();
    let m_index = ladder
        .iter()
        .rposition(|g| g <= &threshold)
        .expect("threshold > 0 = gamma_0");
    cert.verdict = Verdict::Certified;
    cert.m_exponent = Some(ladder[m_index].clone());
    cert.certified_prefix = Some(query.theta.truncate_at(&ladder[m_index]));
    cert.m_index = Some(m_index);
    cert.threshold = Some(threshold);
    cert.statement = Some(CURVE_PREFIX_STATEMENT.to_string());
    cert
}

/// Either multivariate certificate, for audit dispatch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MultivarCertificate {
    CurvePrefix(Box<CurvePrefixCertificate>),
    NonIsolation(Box<NonIsolationCertificate>),
}

/// Recompute every stored quantity from the query and confirm the
/// certificate is internally consistent.
pub fn audit_certificate(
    cert: &MultivarCertificate,
    query: &SystemQuery,
) -> Result<(), AuditFailure> {
    match cert {
        MultivarCertificate::NonIsolation(c) => audit_nonisolated(c, query),
        MultivarCertificate::CurvePrefix(c) => audit_curve_prefix(c, query),
    }
}

pub fn audit_nonisolated(
    cert: &NonIsolationCertificate,
    query: &SystemQuery,
) -> Result<(), AuditFailure> {
    let expected = certify_nonisolated(query);
    field_check("kind", &expected.kind, &cert.kind)?;
    field_check("verdict", &expected.verdict, &cert.verdict)?;
    field_check("n", &expected.n, &cert.n)?;
    field_check("m", &expected.m, &cert.m)?;
    field_check("point", &expected.point, &cert.point)?;
    field_check("L", &expected.l, &cert.l)?;
    field_check("orders", &expected.orders, &cert.orders)?;
    field_check("noether_bound", &expected.noether_bound, &cert.noether_bound)?;
    field_check("statement", &expected.statement, &cert.statement)?;
    Ok(())
}

pub fn audit_curve_prefix(
    cert: &CurvePrefixCertificate,
    query: &SystemQuery,
) -> Result<(), AuditFailure> {
    let expected = certify_curve_prefix(query);
    field_check("kind", &expected.kind, &cert.kind)?;
    field_check("verdict", &expected.verdict, &cert.verdict)?;
    field_check("n", &expected.n, &cert.n)?;
    field_check("m", &expected.m, &cert.m)?;
    field_check("point", &expected.point, &cert.point)?;
    field_check("L", &expected.l, &cert.l)?;
    field_check("dim1_asserted", &expected.dim1_asserted, &cert.dim1_asserted)?;
    field_check("orders", &expected.orders, &cert.orders)?;
    field_check("noether_bound", &expected.noether_bound, &cert.noether_bound)?;
    field_check("degree_bound", &expected.degree_bound, &cert.degree_bound)?;
    field_check("threshold", &expected.threshold, &cert.threshold)?;
    field_check("m_index", &expected.m_index, &cert.m_index)?;
    field_check("m_exponent", &expected.m_exponent, &cert.m_exponent)?;
    field_check(
        "certified_prefix",
        &expected.certified_prefix,
        &cert.certified_prefix,
    )?;
    field_check("statement", &expected.statement, &cert.statement)?;
    Ok(())
}
