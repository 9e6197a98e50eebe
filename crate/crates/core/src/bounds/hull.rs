//! Exact convex hulls of integer point sets in dimension at most 4.
//!
//! Incremental beneath-beyond construction with exact integer
//! orientation predicates. Only strictly visible facets receive cone
//! updates; points on the current boundary change nothing, so degenerate
//! (coplanar) inputs stay exact. Volumes are accumulated incrementally:
//! each insertion adds the pyramid volumes over the strictly visible
//! facets, which is exactly the volume gained.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::Int;

pub(crate) struct HullSummary {
    /// `dim! * volume` of the convex hull (an integer for lattice input).
    pub nvol: Int,
    /// Superset of the hull's vertex set (union of facet vertices);
    /// interior points are pruned.
    pub hull_points: Vec<Vec<Int>>,
}

/// Exact `dim! * volume` of `conv(points)` together with a pruned point
/// set. Lower-dimensional hulls report volume zero.
pub(crate) fn hull_summary(points: &[Vec<Int>], dim: usize) -> HullSummary {
    assert!(dim >= 1, "dimension must be positive");
    let dedup: Vec<Vec<Int>> = points
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    assert!(dedup.iter().all(|p| p.len() == dim), "point dimension mismatch");
    if dim == 1 {
        let min = dedup.iter().map(|p| p[0].clone()).min().unwrap();
        let max = dedup.iter().map(|p| p[0].clone()).max().unwrap();
        let nvol = &max - &min;
        let hull_points = if min == max {
            vec![vec![min]]
        } else {
            vec![vec![min], vec![max]]
        };
        return HullSummary { nvol, hull_points };
    }

    // Greedy affinely independent seed simplex.
    let seed = match affine_seed(&dedup, dim) {
        Some(s) => s,
        None => {
            return HullSummary {
                nvol: Int::zero(),
                hull_points: dedup,
            }
        }
    };

    let mut hull = Hull::new(&dedup, dim, &seed);
    for idx in 0..dedup.len() {
        if seed.contains(&idx) {
            continue;
        }
        hull.insert(idx);
    }
    let mut used: BTreeSet<usize> = BTreeSet::new();
    for f in &hull.facets {
        used.extend(f.iter().copied());
    }
    HullSummary {
        nvol: hull.nvol,
        hull_points: used.into_iter().map(|i| dedup[i].clone()).collect(),
    }
}

/// Indices of `dim + 1` affinely independent points, or `None` when the
/// set is lower-dimensional.
fn affine_seed(points: &[Vec<Int>], dim: usize) -> Option<Vec<usize>> {
    let mut chosen = vec![0usize];
    let mut dirs: Vec<Vec<Int>> = Vec::new();
    for idx in 1..points.len() {
        if dirs.len() == dim {
            break;
        }
        let v = sub(&points[idx], &points[0]);
        let mut trial = dirs.clone();
        trial.push(v);
        if int_rank(&trial) == trial.len() {
            dirs = trial;
            chosen.push(idx);
        }
    }
    (dirs.len() == dim).then_some(chosen)
}

fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Rank of a small integer matrix via fraction-free elimination.
fn int_rank(rows: &[Vec<Int>]) -> usize {
    let mut m: Vec<Vec<Int>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        match pivot {
            None => {
                col += 1;
            }
            Some(p) => {
                m.swap(rank, p);
                for r in rank + 1..nrows {
                    if m[r][col].is_zero() {
                        continue;
                    }
                    let a = m[rank][col].clone();
                    let b = m[r][col].clone();
                    let pivot_row = m[rank].clone();
                    for (c, entry) in m[r].iter_mut().enumerate().skip(col) {
                        *entry = &*entry * &a - &pivot_row[c] * &b;
                    }
                }
                rank += 1;
                col += 1;
            }
        }
    }
    rank
}

/// Determinant by Laplace expansion; matrices here are at most 4x4.
fn det_int(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    match n {
        0 => Int::from(1),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = Int::zero();
            for k in 0..n {
                if m[0][k].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Int>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != k)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let cof = &m[0][k] * det_int(&minor);
                if k % 2 == 0 {
                    acc += cof;
                } else {
                    acc -= cof;
                }
            }
            acc
        }
    }
}

struct Hull<'a> {
    points: &'a [Vec<Int>],
    dim: usize,
    /// Facets as vertex index lists, ordered so that a positive
    /// orientation determinant means "strictly outside".
    facets: Vec<Vec<usize>>,
    /// `(dim + 1) * centroid` of the seed simplex: an integer interior
    /// witness for orienting new facets.
    witness: Vec<Int>,
    nvol: Int,
}

impl<'a> Hull<'a> {
    fn new(points: &'a [Vec<Int>], dim: usize, seed: &[usize]) -> Self {
        let mut witness = vec![Int::zero(); dim];
        for &i in seed {
            for (w, c) in witness.iter_mut().zip(&points[i]) {
                *w += c;
            }
        }
        let mut hull = Hull {
            points,
            dim,
            facets: Vec::new(),
            witness,
            nvol: Int::zero(),
        };
        // Seed volume.
        let rows: Vec<Vec<Int>> = seed[1..]
            .iter()
            .map(|&i| sub(&points[i], &points[seed[0]]))
            .collect();
        hull.nvol = det_int(&rows).abs();
        // One facet per omitted seed vertex.
        for omit in 0..=dim {
            let verts: Vec<usize> = seed
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != omit)
                .map(|(_, &i)| i)
                .collect();
            let oriented = hull.orient_outward(verts);
            hull.facets.push(oriented);
        }
        hull
    }

    /// Determinant of `[v2-v1, ..., vn-v1, x-v1]`; positive means `x`
    /// strictly outside the facet's supporting hyperplane.
    fn facet_det(&self, verts: &[usize], x: &[Int]) -> Int {
        let v1 = &self.points[verts[0]];
        let mut rows: Vec<Vec<Int>> = verts[1..]
            .iter()
            .map(|&i| sub(&self.points[i], v1))
            .collect();
        rows.push(sub(x, v1));
        det_int(&rows)
    }

    /// Same predicate against the scaled interior witness: the witness
    /// is `(dim+1) * centroid`, so compare against `(dim+1) * v1`.
    fn witness_det(&self, verts: &[usize]) -> Int {
        let v1 = &self.points[verts[0]];
        let scaled_x: Vec<Int> = self
            .witness
            .iter()
            .zip(v1)
            .map(|(w, c)| w - c * Int::from(self.dim as i64 + 1))
            .collect();
        let mut rows: Vec<Vec<Int>> = verts[1..]
            .iter()
            .map(|&i| sub(&self.points[i], v1))
            .collect();
        rows.push(scaled_x);
        det_int(&rows)
    }

    fn orient_outward(&self, mut verts: Vec<usize>) -> Vec<usize> {
        let d = self.witness_det(&verts);
        debug_assert!(!d.is_zero(), "interior witness on a facet hyperplane");
        if d.is_positive() {
            verts.swap(0, 1);
        }
        verts
    }

    fn insert(&mut self, idx: usize) {
        let x = &self.points[idx];
        let dets: Vec<Int> = self
            .facets
            .iter()
            .map(|f| self.facet_det(f, x))
            .collect();
        let visible: Vec<usize> = (0..self.facets.len())
            .filter(|&i| dets[i].is_positive())
            .collect();
        if visible.is_empty() {
            // Inside or on the boundary: the hull is unchanged.
            return;
        }
        for &i in &visible {
            self.nvol += dets[i].abs();
        }
        // Horizon ridges: appear in exactly one visible facet.
        let mut ridge_uses: HashMap<Vec<usize>, usize> = HashMap::new();
        for &i in &visible {
            let f = &self.facets[i];
            for omit in 0..f.len() {
                let mut ridge: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != omit)
                    .map(|(_, &v)| v)
                    .collect();
                ridge.sort_unstable();
                *ridge_uses.entry(ridge).or_insert(0) += 1;
            }
        }
        let mut new_facets = Vec::new();
        for (ridge, uses) in ridge_uses {
            if uses != 1 {
                continue;
            }
            let mut verts = ridge;
            verts.push(idx);
            new_facets.push(self.orient_outward(verts));
        }
        let visible_set: BTreeSet<usize> = visible.into_iter().collect();
        let mut kept: Vec<Vec<usize>> = self
            .facets
            .iter()
            .enumerate()
            .filter(|(i, _)| !visible_set.contains(i))
            .map(|(_, f)| f.clone())
            .collect();
        kept.extend(new_facets);
        self.facets = kept;
    }
}
