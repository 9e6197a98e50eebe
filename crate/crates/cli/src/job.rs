//! Job-file schema and validation.

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use curvecert::bounds::{
    bezout_degree_bound, bezout_noether_bound, mixedvol_degree_bound, sparse_degree_bound,
    sparse_noether_bound, BoundReport, Support, DIMENSION_CAP,
};
use curvecert::multivar::BoundValue;
use curvecert::poly::parse_poly;
use curvecert::{parse_rat, Int, Poly, Rat, SeriesVec};

/// Either a literal integer or the string `"auto"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundOption {
    Auto(String),
    Value(u64),
}

impl Default for BoundOption {
    fn default() -> Self {
        BoundOption::Auto("auto".to_string())
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobOptions {
    #[serde(default)]
    pub noether_bound: BoundOption,
    #[serde(default)]
    pub degree_bound: BoundOption,
    #[serde(default)]
    pub dim1: bool,
    /// Variable names in the order the certificates should see them;
    /// the first listed variable becomes the free variable X1. The
    /// point is permuted along; theta is always given in the permuted
    /// order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variable_permutation: Option<Vec<String>>,
}

/// On-disk certification job.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobFile {
    pub schema: String,
    pub variables: Vec<String>,
    pub system: Vec<String>,
    pub point: Vec<String>,
    pub theta: SeriesVec,
    #[serde(rename = "L")]
    pub l: String,
    #[serde(default)]
    pub options: JobOptions,
}

/// A job after parsing and permutation, ready for the certificate layer.
#[derive(Debug, Clone)]
pub struct ResolvedJob {
    pub variables: Vec<String>,
    pub system: Vec<Poly>,
    pub point: Vec<Rat>,
    pub theta: SeriesVec,
    pub l: Rat,
    pub dim1: bool,
    pub noether: BoundValue,
    pub degree: Option<BoundValue>,
    /// All candidate bound reports considered by "auto" resolution.
    pub bound_candidates: Vec<BoundReport>,
}

impl JobFile {
    pub fn parse(text: &str) -> Result<JobFile> {
        let job: JobFile = serde_json::from_str(text).context("malformed job JSON")?;
        if job.schema != "1" {
            bail!("unsupported schema {:?} (expected \"1\")", job.schema);
        }
        Ok(job)
    }

    pub fn resolve(&self) -> Result<ResolvedJob> {
        if self.variables.is_empty() {
            bail!("field `variables`: at least one variable is required");
        }
        let mut seen = BTreeMap::new();
        for v in &self.variables {
            if seen.insert(v.clone(), ()).is_some() {
                bail!("field `variables`: duplicate name `{v}`");
            }
        }
        if self.system.is_empty() {
            bail!("field `system`: at least one polynomial is required");
        }
        if self.point.len() != self.variables.len() {
            bail!(
                "field `point`: {} coordinates for {} variables",
                self.point.len(),
                self.variables.len()
            );
        }

        // The permutation renames which variable plays X1, X2, ...:
        // polynomials are re-read in the permuted variable order and the
        // point follows. Theta is already expressed in the permuted
        // frame (its first component is t for the new X1).
        let order: Vec<String> = match &self.options.variable_permutation {
            None => self.variables.clone(),
            Some(perm) => {
                if perm.len() != self.variables.len() {
                    bail!(
                        "field `options.variable_permutation`: expected {} names",
                        self.variables.len()
                    );
                }
                for name in perm {
                    if !self.variables.contains(name) {
                        bail!("field `options.variable_permutation`: unknown variable `{name}`");
                    }
                }
                let mut dedup = perm.clone();
                dedup.sort();
                dedup.dedup();
                if dedup.len() != perm.len() {
                    bail!("field `options.variable_permutation`: duplicate names");
                }
                perm.clone()
            }
        };
        let index_of = |name: &String| {
            self.variables
                .iter()
                .position(|v| v == name)
                .expect("validated membership")
        };

        let system: Vec<Poly> = self
            .system
            .iter()
            .enumerate()
            .map(|(j, text)| {
                parse_poly(text, &order)
                    .map_err(|e| anyhow::anyhow!("field `system[{j}]`: {e}"))
            })
            .collect::<Result<_>>()?;
        let point: Vec<Rat> = order
            .iter()
            .map(|name| {
                let raw = &self.point[index_of(name)];
                parse_rat(raw).map_err(|e| anyhow::anyhow!("field `point`: {e}"))
            })
            .collect::<Result<_>>()?;
        if self.theta.len() != order.len() {
            bail!(
                "field `theta`: {} components for {} variables",
                self.theta.len(),
                order.len()
            );
        }
        let l = parse_rat(&self.l).map_err(|e| anyhow::anyhow!("field `L`: {e}"))?;

        let n = order.len();
        let m = system.len();
        let mut candidates: Vec<BoundReport> = Vec::new();
        let noether = resolve_bound(
            &self.options.noether_bound,
            BoundFamily::Noether,
            &system,
            n,
            m,
            &mut candidates,
        )?;
        let degree = match (&self.options.degree_bound, self.options.dim1) {
            (BoundOption::Value(v), _) => Some(user_bound(*v)?),
            (BoundOption::Auto(_), true) => Some(resolve_bound(
                &self.options.degree_bound,
                BoundFamily::Degree,
                &system,
                n,
                m,
                &mut candidates,
            )?),
            // Degree bounds are only consumed by the dim-1 path.
            (BoundOption::Auto(_), false) => None,
        };

        Ok(ResolvedJob {
            variables: order,
            system,
            point,
            theta: self.theta.clone(),
            l,
            dim1: self.options.dim1,
            noether,
            degree,
            bound_candidates: candidates,
        })
    }
}

enum BoundFamily {
    Noether,
    Degree,
}

fn user_bound(v: u64) -> Result<BoundValue> {
    if v == 0 {
        bail!("bounds must be positive integers");
    }
    Ok(BoundValue::user(Int::from(v)))
}

/// "auto" takes the minimum over every applicable formula; above the
/// volume dimension cap only the Bezout bounds apply.
fn resolve_bound(
    option: &BoundOption,
    family: BoundFamily,
    system: &[Poly],
    n: usize,
    m: usize,
    candidates: &mut Vec<BoundReport>,
) -> Result<BoundValue> {
    match option {
        BoundOption::Value(v) => user_bound(*v),
        BoundOption::Auto(word) => {
            if word != "auto" {
                bail!("bound option must be an integer or \"auto\", got {word:?}");
            }
            let mut reports: Vec<BoundReport> = Vec::new();
            let max_degree = system
                .iter()
                .map(|f| f.total_degree().map(u64::from))
                .collect::<Option<Vec<u64>>>()
                .and_then(|ds| ds.into_iter().max())
                .filter(|&d| d > 0);
            if let Some(d) = max_degree {
                let report = match family {
                    BoundFamily::Noether => bezout_noether_bound(d, n, m),
                    BoundFamily::Degree => bezout_degree_bound(d, n, m),
                };
                reports.push(report.context("Bezout bound")?);
            }
            if n <= DIMENSION_CAP {
                let supports: Result<Vec<Support>, _> =
                    system.iter().map(Support::of_poly).collect();
                if let Ok(supports) = supports {
                    let sparse = match family {
                        BoundFamily::Noether => sparse_noether_bound(&supports, n),
                        BoundFamily::Degree => sparse_degree_bound(&supports, n),
                    };
                    if let Ok(r) = sparse {
                        reports.push(r);
                    }
                    if matches!(family, BoundFamily::Degree) && m <= n {
                        if let Ok(r) = mixedvol_degree_bound(&supports, n) {
                            reports.push(r);
                        }
                    }
                }
            }
            let best = reports
                .iter()
                .min_by(|a, b| a.value.cmp(&b.value))
                .cloned()
                .context("no applicable bound formula (is the system identically zero?)")?;
            candidates.extend(reports);
            Ok(BoundValue::from_report(best))
        }
    }
}
