//! Report schemas and the per-command pipelines that fill them.
//!
//! Reports are emitted as canonical pretty JSON with stable field order;
//! identical inputs produce byte-identical output. Timing information
//! never enters the JSON payload (it would break reproducibility); the
//! text format prints it to stderr instead.

use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use curvecert::bivariate::{
    audit_lemma, audit_proposition, lemma_prefix_certificate, lemma_regular_refinement,
    proposition_common_curve, proposition_regular_refinement, LemmaQuery, PairQuery,
    PrefixCertificate,
};
use curvecert::bounds::BoundReport;
use curvecert::multivar::{
    audit_curve_prefix, audit_nonisolated, certify_curve_prefix, certify_nonisolated,
    CurvePrefixCertificate, NonIsolationCertificate, SystemQuery,
};
use curvecert::newton::{expand_branches_with, Branch, ExpandConfig};
use curvecert::Verdict;

use crate::job::{JobFile, ResolvedJob};

pub const SCHEMA: &str = "1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JobDigest {
    pub digest: String,
    pub n: usize,
    pub m: usize,
    pub variables: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertifyReport {
    pub schema: String,
    pub command: String,
    pub job: JobDigest,
    pub verdict: Verdict,
    pub certificates: Certificates,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound_resolution: Option<BoundResolution>,
    pub summary: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificates {
    pub nonisolation: NonIsolationCertificate,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub curve_prefix: Option<CurvePrefixCertificate>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bivariate: Option<PrefixCertificate>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundResolution {
    /// Every formula evaluated by "auto" resolution; the smallest value
    /// per family wins and is echoed inside the certificates.
    pub candidates: Vec<BoundReport>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("sha256:{}", hex_string(&hasher.finalize()))
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Queries reconstructed for a job, used for certification and audit.
pub struct JobQueries {
    pub system_query: SystemQuery,
    pub lemma_query: Option<LemmaQuery>,
    pub pair_query: Option<PairQuery>,
}

pub fn build_queries(job: &ResolvedJob) -> JobQueries {
    let system_query = SystemQuery {
        system: job.system.clone(),
        point: job.point.clone(),
        theta: job.theta.clone(),
        l: job.l.clone(),
        noether_bound: job.noether.clone(),
        degree_bound: job.degree.clone(),
        dim1_asserted: job.dim1,
    };
    let n = job.point.len();
    let m = job.system.len();
    let bivariate_point = (n == 2).then(|| (job.point[0].clone(), job.point[1].clone()));
    let theta2 = (n == 2).then(|| job.theta.components()[1].clone());
    let lemma_query = match (&bivariate_point, &theta2, m) {
        (Some(point), Some(theta), 1) => Some(LemmaQuery {
            q: job.system[0].clone(),
            point: point.clone(),
            theta: theta.clone(),
            l: job.l.clone(),
        }),
        _ => None,
    };
    let pair_query = match (&bivariate_point, &theta2, m) {
        (Some(point), Some(theta), 2) => Some(PairQuery {
            f1: job.system[0].clone(),
            f2: job.system[1].clone(),
            point: point.clone(),
            theta: theta.clone(),
            l: job.l.clone(),
        }),
        _ => None,
    };
    JobQueries {
        system_query,
        lemma_query,
        pair_query,
    }
}

/// Run every applicable certification path for a parsed job.
pub fn certify_pipeline(raw: &[u8], job_file: &JobFile, job: &ResolvedJob) -> CertifyReport {
    let queries = build_queries(job);
    let nonisolation = certify_nonisolated(&queries.system_query);
    let curve_prefix = job
        .dim1
        .then(|| certify_curve_prefix(&queries.system_query));
    let bivariate = bivariate_certificate(&queries);

    let mut verdict = nonisolation.verdict;
    for v in curve_prefix
        .iter()
        .map(|c| c.verdict)
        .chain(bivariate.iter().map(|c| c.verdict))
    {
        if v.strength() > verdict.strength() {
            verdict = v;
        }
    }
    let summary = summarize(&nonisolation, curve_prefix.as_ref(), bivariate.as_ref());
    let _ = job_file;
    CertifyReport {
        schema: SCHEMA.to_string(),
        command: "certify".to_string(),
        job: JobDigest {
            digest: sha256_hex(raw),
            n: job.point.len(),
            m: job.system.len(),
            variables: job.variables.clone(),
        },
        verdict,
        certificates: Certificates {
            nonisolation,
            curve_prefix,
            bivariate,
        },
        bound_resolution: (!job.bound_candidates.is_empty()).then(|| BoundResolution {
            candidates: job.bound_candidates.clone(),
        }),
        summary,
    }
}

fn bivariate_certificate(queries: &JobQueries) -> Option<PrefixCertificate> {
    if let Some(q) = &queries.lemma_query {
        let mut cert = lemma_prefix_certificate(q);
        if cert.verdict != Verdict::PreconditionViolated {
            cert.refinement = Some(lemma_regular_refinement(q));
        }
        return Some(cert);
    }
    if let Some(q) = &queries.pair_query {
        let mut cert = proposition_common_curve(q);
        if cert.verdict != Verdict::PreconditionViolated {
            cert.refinement = Some(proposition_regular_refinement(q));
        }
        return Some(cert);
    }
    None
}

fn summarize(
    nonisolation: &NonIsolationCertificate,
    curve_prefix: Option<&CurvePrefixCertificate>,
    bivariate: Option<&PrefixCertificate>,
) -> String {
    let mut parts = vec![format!("non-isolation: {}", nonisolation.verdict)];
    if let Some(c) = curve_prefix {
        match (&c.verdict, &c.m_exponent) {
            (Verdict::Certified, Some(m)) => {
                parts.push(format!("curve-prefix: certified through gamma_M = {m}"))
            }
            _ => parts.push(format!("curve-prefix: {}", c.verdict)),
        }
    }
    if let Some(c) = bivariate {
        parts.push(format!("bivariate: {}", c.verdict));
    }
    parts.join("; ")
}

/// Re-run every certificate in a report against its job and confirm the
/// stored fields; used by the round-trip gate before emission.
pub fn audit_report(report: &CertifyReport, job: &ResolvedJob) -> Result<()> {
    let queries = build_queries(job);
    audit_nonisolated(&report.certificates.nonisolation, &queries.system_query)
        .map_err(|e| anyhow::anyhow!("nonisolation: {e}"))?;
    if let Some(cert) = &report.certificates.curve_prefix {
        audit_curve_prefix(cert, &queries.system_query)
            .map_err(|e| anyhow::anyhow!("curve_prefix: {e}"))?;
    }
    if let Some(cert) = &report.certificates.bivariate {
        match (&queries.lemma_query, &queries.pair_query) {
            (Some(q), _) => {
                audit_lemma(cert, q).map_err(|e| anyhow::anyhow!("bivariate: {e}"))?
            }
            (_, Some(q)) => {
                audit_proposition(cert, q).map_err(|e| anyhow::anyhow!("bivariate: {e}"))?
            }
            _ => anyhow::bail!("bivariate certificate present for a non-bivariate job"),
        }
    }
    Ok(())
}

// --------------------------------------------------------------------
// expand

#[derive(Debug, Clone, Serialize)]
pub struct ExpandReport {
    pub schema: String,
    pub command: String,
    pub query: ExpandQuery,
    pub branches: Vec<Branch>,
    pub summary: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpandQuery {
    pub poly: String,
    pub variables: Vec<String>,
    pub center: String,
    pub y0: String,
    pub precision: String,
    pub max_depth: usize,
}

pub fn expand_pipeline(
    poly_text: &str,
    variables: &[String],
    center: &curvecert::Rat,
    y0: &curvecert::Rat,
    precision: &curvecert::Rat,
    max_depth: usize,
) -> Result<ExpandReport> {
    let poly = curvecert::poly::parse_poly(poly_text, variables)
        .map_err(|e| anyhow::anyhow!("polynomial: {e}"))?;
    let config = ExpandConfig { max_depth };
    let branches = expand_branches_with(&poly, center, y0, precision, &config)
        .map_err(|e| anyhow::anyhow!("{e}"))?;
    let summary = format!(
        "{} branch(es) through ({center}, {y0}) at precision {precision}",
        branches.len()
    );
    Ok(ExpandReport {
        schema: SCHEMA.to_string(),
        command: "expand".to_string(),
        query: ExpandQuery {
            poly: poly_text.to_string(),
            variables: variables.to_vec(),
            center: center.to_string(),
            y0: y0.to_string(),
            precision: precision.to_string(),
            max_depth,
        },
        branches,
        summary,
    })
}

// --------------------------------------------------------------------
// bounds

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub schema: String,
    pub variables: Vec<String>,
    pub system: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsReportDoc {
    pub schema: String,
    pub command: String,
    pub input: JobDigest,
    pub reports: Vec<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub noether_minimum: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_minimum: Option<BoundReport>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

pub fn bounds_pipeline(raw: &[u8], file: &SystemFile) -> Result<BoundsReportDoc> {
    use curvecert::bounds::*;
    if file.schema != "1" {
        anyhow::bail!("unsupported schema {:?} (expected \"1\")", file.schema);
    }
    if file.system.is_empty() {
        anyhow::bail!("field `system`: at least one polynomial is required");
    }
    let system: Vec<curvecert::Poly> = file
        .system
        .iter()
        .enumerate()
        .map(|(j, text)| {
            curvecert::poly::parse_poly(text, &file.variables)
                .map_err(|e| anyhow::anyhow!("field `system[{j}]`: {e}"))
        })
        .collect::<Result<_>>()?;
    let n = file.variables.len();
    let m = system.len();
    let mut warnings = Vec::new();
    let mut reports = Vec::new();
    let max_degree = system
        .iter()
        .map(|f| f.total_degree().map(u64::from))
        .collect::<Option<Vec<u64>>>()
        .and_then(|ds| ds.into_iter().max())
        .filter(|&d| d > 0);
    match max_degree {
        Some(d) => {
            reports.push(bezout_noether_bound(d, n, m)?);
            reports.push(bezout_degree_bound(d, n, m)?);
        }
        None => warnings.push(
            "system has no positive-degree polynomial; Bezout bounds skipped".to_string(),
        ),
    }
    if n <= DIMENSION_CAP {
        let supports: Vec<Support> = system
            .iter()
            .map(Support::of_poly)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| anyhow::anyhow!("{e}"))?;
        reports.push(sparse_noether_bound(&supports, n).map_err(|e| anyhow::anyhow!("{e}"))?);
        reports.push(sparse_degree_bound(&supports, n).map_err(|e| anyhow::anyhow!("{e}"))?);
        if m <= n {
            reports
                .push(mixedvol_degree_bound(&supports, n).map_err(|e| anyhow::anyhow!("{e}"))?);
        } else {
            warnings.push(format!(
                "mixed-volume degree bound skipped: m = {m} exceeds n = {n}"
            ));
        }
    } else {
        warnings.push(format!(
            "dimension {n} exceeds the exact-volume cap {DIMENSION_CAP}; \
only Bezout bounds computed"
        ));
    }
    let minimum = |kinds: &[BoundKind]| {
        reports
            .iter()
            .filter(|r| kinds.contains(&r.kind))
            .min_by(|a, b| a.value.cmp(&b.value))
            .cloned()
    };
    Ok(BoundsReportDoc {
        schema: SCHEMA.to_string(),
        command: "bounds".to_string(),
        input: JobDigest {
            digest: sha256_hex(raw),
            n,
            m,
            variables: file.variables.clone(),
        },
        noether_minimum: minimum(&[BoundKind::BezoutNoether, BoundKind::SparseNoether]),
        degree_minimum: minimum(&[
            BoundKind::BezoutDegree,
            BoundKind::SparseDegree,
            BoundKind::MixedvolDegree,
        ]),
        reports,
        warnings,
    })
}

// --------------------------------------------------------------------
// batch

#[derive(Debug, Clone, Deserialize)]
pub struct Manifest {
    pub schema: String,
    pub jobs: Vec<ManifestEntry>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub path: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchReport {
    pub schema: String,
    pub command: String,
    pub jobs: Vec<BatchEntry>,
    pub summary: BatchSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchEntry {
    pub name: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CertifyReport>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct BatchSummary {
    pub total: usize,
    pub certified: usize,
    pub inconclusive: usize,
    pub precondition_violated: usize,
    pub errors: usize,
}

/// Certify one job file from disk, with the emission-time audit gate.
pub fn run_job_file(path: &Path) -> Result<CertifyReport> {
    let raw = std::fs::read(path)
        .with_context(|| format!("reading job file {}", path.display()))?;
    let job_file = JobFile::parse(std::str::from_utf8(&raw).context("job file is not UTF-8")?)?;
    let resolved = job_file.resolve()?;
    let report = certify_pipeline(&raw, &job_file, &resolved);
    audit_report(&report, &resolved).context("emission-time audit failed")?;
    Ok(report)
}
