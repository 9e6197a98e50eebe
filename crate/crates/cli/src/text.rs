//! Human-readable rendering of the report types.

use crate::report::{BatchReport, BoundsReportDoc, CertifyReport, ExpandReport};

pub fn certify_text(report: &CertifyReport) -> String {
    let mut out = Vec::new();
    out.push(format!(
        "job {} (n = {}, m = {})",
        report.job.digest, report.job.n, report.job.m
    ));
    out.push(format!("verdict: {}", report.verdict));
    out.push(report.summary.clone());
    let ni = &report.certificates.nonisolation;
    if let Some(orders) = &ni.orders {
        let rendered: Vec<String> = orders.iter().map(|o| o.to_string()).collect();
        out.push(format!("orders: [{}], L = {}", rendered.join(", "), ni.l));
    }
    if let Some(reason) = &ni.reason {
        out.push(format!("non-isolation reason: {reason}"));
    }
    if let Some(cp) = &report.certificates.curve_prefix {
        if let (Some(threshold), Some(prefix)) = (&cp.threshold, &cp.certified_prefix) {
            out.push(format!("prefix threshold: {threshold}"));
            let comps: Vec<String> =
                prefix.components().iter().map(|c| c.to_string()).collect();
            out.push(format!("certified prefix: ({})", comps.join(", ")));
        }
        if let Some(reason) = &cp.reason {
            out.push(format!("curve-prefix reason: {reason}"));
        }
    }
    if let Some(b) = &report.certificates.bivariate {
        if let Some(reason) = &b.reason {
            out.push(format!("bivariate reason: {reason}"));
        }
        if let Some(prefix) = &b.certified_prefix {
            out.push(format!("bivariate certified prefix: {prefix}"));
        }
    }
    out.join("\n")
}

pub fn expand_text(report: &ExpandReport) -> String {
    let mut out = vec![report.summary.clone()];
    for (i, b) in report.branches.iter().enumerate() {
        out.push(format!(
            "branch {}: {} [{:?}, residual order {}]",
            i + 1,
            b.expansion,
            b.status,
            b.residual_order
        ));
    }
    out.join("\n")
}

pub fn bounds_text(report: &BoundsReportDoc) -> String {
    let mut out = vec![format!(
        "bounds for n = {}, m = {}",
        report.input.n, report.input.m
    )];
    for r in &report.reports {
        out.push(format!("  {}: {}", r.kind, r.value));
    }
    if let Some(min) = &report.noether_minimum {
        out.push(format!("noether minimum: {} ({})", min.value, min.kind));
    }
    if let Some(min) = &report.degree_minimum {
        out.push(format!("degree minimum: {} ({})", min.value, min.kind));
    }
    for w in &report.warnings {
        out.push(format!("warning: {w}"));
    }
    out.join("\n")
}

pub fn batch_text(report: &BatchReport) -> String {
    let mut out = Vec::new();
    for job in &report.jobs {
        let status = match (&job.verdict, &job.error) {
            (Some(v), _) => v.to_string(),
            (None, Some(e)) => format!("error: {e}"),
            (None, None) => "unknown".to_string(),
        };
        out.push(format!("{:<24} {status}", job.name));
    }
    let s = &report.summary;
    out.push(format!(
        "total {}: {} certified, {} inconclusive, {} precondition-violated, {} errors",
        s.total, s.certified, s.inconclusive, s.precondition_violated, s.errors
    ));
    out.join("\n")
}
