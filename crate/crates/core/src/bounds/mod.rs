//! Upper bounds for the Noether exponent and the variety degree: Bézout,
//! sparse normalized-volume, and mixed-volume variants, plus the exact
//! polytope volume machinery behind them.
//!
//! All bound values are upper bounds for the true invariants, so using
//! them in place of the exact quantities keeps every certificate sound
//! (the hypotheses get stronger, the certified prefix possibly shorter).

mod hull;

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::{Int, Rat};

/// Exact volume computations are capped at this many variables; callers
/// fall back to the Bézout bounds above it.
pub const DIMENSION_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("support must be nonempty")]
    EmptySupport,
    #[error("support point has length {got}, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("dimension {n} exceeds the exact-volume cap {cap}; use the Bezout bounds")]
    DimensionCap { n: usize, cap: usize },
    #[error("expected {expected} supports, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("support dimension {got} does not match ambient dimension {expected}")]
    DimMismatch { expected: usize, got: usize },
    #[error("inputs must be positive (d >= 1, n >= 1, m >= 1)")]
    NonpositiveInput,
    #[error("the zero polynomial has no support")]
    ZeroPolynomial,
    #[error("mixed-volume degree bound needs m <= n supports, got m = {m} > n = {n}")]
    TooManySupports { m: usize, n: usize },
    #[error("mixed volume of lattice polytopes must be an integer, got {value}")]
    NonIntegerMixedVolume { value: String },
}

/// Set of exponent vectors in the nonnegative integer lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    dim: usize,
    points: BTreeSet<Vec<u64>>,
}

impl Support {
    pub fn new(
        dim: usize,
        points: impl IntoIterator<Item = Vec<u64>>,
    ) -> Result<Self, BoundsError> {
        let points: BTreeSet<Vec<u64>> = points.into_iter().collect();
        if points.is_empty() {
            return Err(BoundsError::EmptySupport);
        }
        for p in &points {
            if p.len() != dim {
                return Err(BoundsError::PointLength {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        Ok(Support { dim, points })
    }

    /// Exponent vectors of a nonzero polynomial.
    pub fn of_poly<T: Scalar>(f: &MultiPoly<T>) -> Result<Self, BoundsError> {
        if f.is_zero() {
            return Err(BoundsError::ZeroPolynomial);
        }
        Support::new(
            f.nvars(),
            f.support()
                .into_iter()
                .map(|e| e.into_iter().map(u64::from).collect()),
        )
    }

    /// Vertices of the standard simplex: the origin and the unit vectors.
    pub fn simplex(dim: usize) -> Self {
        let mut points: BTreeSet<Vec<u64>> = BTreeSet::new();
        points.insert(vec![0; dim]);
        for i in 0..dim {
            let mut e = vec![0; dim];
            e[i] = 1;
            points.insert(e);
        }
        Support { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.points.iter()
    }

    pub fn union(&self, other: &Support) -> Result<Support, BoundsError> {
        if self.dim != other.dim {
            return Err(BoundsError::DimMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        Support::new(
            self.dim,
            self.points.iter().chain(other.points.iter()).cloned(),
        )
    }

    /// Translate every point by a nonnegative lattice vector.
    pub fn translate(&self, v: &[u64]) -> Result<Support, BoundsError> {
        if v.len() != self.dim {
            return Err(BoundsError::PointLength {
                expected: self.dim,
                got: v.len(),
            });
        }
        Support::new(
            self.dim,
            self.points
                .iter()
                .map(|p| p.iter().zip(v).map(|(a, b)| a + b).collect()),
        )
    }

    fn int_points(&self) -> Vec<Vec<Int>> {
        self.points
            .iter()
            .map(|p| p.iter().map(|&c| Int::from(c)).collect())
            .collect()
    }
}

/// Which bound formula produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    BezoutNoether,
    SparseNoether,
    BezoutDegree,
    SparseDegree,
    MixedvolDegree,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            BoundKind::BezoutNoether => "bezout-noether",
            BoundKind::SparseNoether => "sparse-noether",
            BoundKind::BezoutDegree => "bezout-degree",
            BoundKind::SparseDegree => "sparse-degree",
            BoundKind::MixedvolDegree => "mixedvol-degree",
        };
        write!(f, "{s}")
    }
}

/// Inputs a bound was computed from, for auditability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundInputs {
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub support_sizes: Option<Vec<usize>>,
    /// Number of simplex supports appended when a mixed-volume bound is
    /// requested for m < n polynomials.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub padded_supports: Option<usize>,
}

/// A computed upper bound with provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    #[serde(with = "crate::serde_util::int_str")]
    pub value: Int,
    pub inputs: BoundInputs,
}

fn check_cap(n: usize) -> Result<(), BoundsError> {
    if n == 0 {
        return Err(BoundsError::NonpositiveInput);
    }
    if n > DIMENSION_CAP {
        return Err(BoundsError::DimensionCap {
            n,
            cap: DIMENSION_CAP,
        });
    }
    Ok(())
}

fn bezout_value(d: u64, n: usize, m: usize) -> Result<Int, BoundsError> {
    if d == 0 || n == 0 || m == 0 {
        return Err(BoundsError::NonpositiveInput);
    }
    Ok(Int::from(d).pow(n.min(m) as u32))
}

/// `e(f) <= d^min(n, m)` for systems of total degree at most `d`.
pub fn bezout_noether_bound(d: u64, n: usize, m: usize) -> Result<BoundReport, BoundsError> {
    Ok(BoundReport {
        kind: BoundKind::BezoutNoether,
        value: bezout_value(d, n, m)?,
        inputs: BoundInputs {
            n,
            m,
            degree: Some(d),
            support_sizes: None,
            padded_supports: None,
        },
    })
}

/// `deg V(f) <= d^min(n, m)`.
pub fn bezout_degree_bound(d: u64, n: usize, m: usize) -> Result<BoundReport, BoundsError> {
    Ok(BoundReport {
        kind: BoundKind::BezoutDegree,
        value: bezout_value(d, n, m)?,
        inputs: BoundInputs {
            n,
            m,
            degree: Some(d),
            support_sizes: None,
            padded_supports: None,
        },
    })
}

/// Exact `n! * vol(conv(S))` as a rational together with its integer
/// ceiling. Lattice inputs always give an integer; lower-dimensional
/// hulls give zero.
pub fn normalized_volume(s: &Support) -> Result<(Rat, Int), BoundsError> {
    check_cap(s.dim)?;
    let nvol = hull::hull_summary(&s.int_points(), s.dim).nvol;
    let value = Rat::from_integer(nvol);
    let ceiling = value.ceil().to_integer();
    Ok((value, ceiling))
}

fn union_with_simplex(supports: &[Support], n: usize) -> Result<Support, BoundsError> {
    if supports.is_empty() {
        return Err(BoundsError::EmptySupport);
    }
    let mut acc = Support::simplex(n);
    for s in supports {
        acc = acc.union(s)?;
    }
    Ok(acc)
}

/// `e(f) <= n^(n+2) * n! * vol(conv(A u simplex))` where `A` is the union
/// of the supports.
pub fn sparse_noether_bound(
    supports: &[Support],
    n: usize,
) -> Result<BoundReport, BoundsError> {
    check_cap(n)?;
    let m = supports.len();
    let union = union_with_simplex(supports, n)?;
    let (_, nvol) = normalized_volume(&union)?;
    let value = Int::from(n).pow(n as u32 + 2) * nvol;
    Ok(BoundReport {
        kind: BoundKind::SparseNoether,
        value,
        inputs: BoundInputs {
            n,
            m,
            degree: None,
            support_sizes: Some(supports.iter().map(Support::len).collect()),
            padded_supports: None,
        },
    })
}

/// `deg V(f) <= n! * vol(conv(A u simplex))`.
pub fn sparse_degree_bound(
    supports: &[Support],
    n: usize,
) -> Result<BoundReport, BoundsError> {
    check_cap(n)?;
    let m = supports.len();
    let union = union_with_simplex(supports, n)?;
    let (_, nvol) = normalized_volume(&union)?;
    // The union contains the simplex, so the hull is full-dimensional
    // and the bound is at least 1.
    Ok(BoundReport {
        kind: BoundKind::SparseDegree,
        value: nvol,
        inputs: BoundInputs {
            n,
            m,
            degree: None,
            support_sizes: Some(supports.iter().map(Support::len).collect()),
            padded_supports: None,
        },
    })
}

/// Normalized n-dimensional mixed volume of exactly `n` supports:
/// `MV(simplex, ..., simplex) = 1`, computed by inclusion-exclusion over
/// Minkowski sums of subsets:
/// `sum over nonempty S of (-1)^(n-|S|) vol(sum of conv(P_i), i in S)`.
pub fn mixed_volume(polytopes: &[Support], n: usize) -> Result<Int, BoundsError> {
    check_cap(n)?;
    if polytopes.len() != n {
        return Err(BoundsError::WrongCount {
            expected: n,
            got: polytopes.len(),
        });
    }
    for p in polytopes {
        if p.dim != n {
            return Err(BoundsError::DimMismatch {
                expected: n,
                got: p.dim,
            });
        }
    }
    // Prune to hull points before summing: vertices of a Minkowski sum
    // are sums of vertices.
    let reduced: Vec<Vec<Vec<Int>>> = polytopes
        .iter()
        .map(|p| hull::hull_summary(&p.int_points(), n).hull_points)
        .collect();
    let mut total = Rat::zero();
    let factorial: Int = (1..=n as u64).product::<u64>().into();
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sum_points = minkowski_sum(&reduced, &members);
        let nvol = hull::hull_summary(&sum_points, n).nvol;
        let vol = Rat::new(nvol, factorial.clone());
        if (n - members.len()).is_multiple_of(2) {
            total += vol;
        } else {
            total -= vol;
        }
    }
    if !total.denom().is_one() {
        return Err(BoundsError::NonIntegerMixedVolume {
            value: total.to_string(),
        });
    }
    Ok(total.to_integer())
}

fn minkowski_sum(point_sets: &[Vec<Vec<Int>>], members: &[usize]) -> Vec<Vec<Int>> {
    let mut acc: Vec<Vec<Int>> = vec![vec![Int::zero(); point_sets[members[0]][0].len()]];
    for &i in members {
        let mut next: BTreeSet<Vec<Int>> = BTreeSet::new();
        for a in &acc {
            for b in &point_sets[i] {
                next.insert(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        acc = next.into_iter().collect();
    }
    acc
}

/// `deg V(f) <= MV_n(A_1 u simplex, ..., A_n u simplex)`.
///
/// The mixed-volume bound is stated for square systems; when `m < n`,
/// the missing slots are padded with plain simplex supports (generic
/// hyperplane sections, which is how the degree is measured). `m > n`
/// is rejected.
pub fn mixedvol_degree_bound(
    supports: &[Support],
    n: usize,
) -> Result<BoundReport, BoundsError> {
    check_cap(n)?;
    let m = supports.len();
    if m == 0 {
        return Err(BoundsError::EmptySupport);
    }
    if m > n {
        return Err(BoundsError::TooManySupports { m, n });
    }
    let mut augmented = Vec::with_capacity(n);
    for s in supports {
        augmented.push(s.union(&Support::simplex(n))?);
    }
    let padded = n - m;
    for _ in 0..padded {
        augmented.push(Support::simplex(n));
    }
    let value = mixed_volume(&augmented, n)?;
    Ok(BoundReport {
        kind: BoundKind::MixedvolDegree,
        value,
        inputs: BoundInputs {
            n,
            m,
            degree: None,
            support_sizes: Some(supports.iter().map(Support::len).collect()),
            padded_supports: (padded > 0).then_some(padded),
        },
    })
}
