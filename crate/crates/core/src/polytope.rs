//! Exact convex hull, face, and edge machinery for weight polytopes.
//!
//! Hulls are found by brute force: every hyperplane through `dim`
//! affinely independent configuration points is tested for being
//! supporting. At the sizes that occur here (at most 14 points in
//! dimension at most 6) this is instant and keeps everything exact.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{dot, hermite_basis, hyperplane_normal};
use crate::orbit::{WeightConfiguration, WeightTuple};

/// A supporting inequality `normal . x <= offset` with primitive
/// integer normal; every point of the polytope satisfies it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn contains(&self, point: &[i64]) -> bool {
        dot(&self.normal, point) == self.offset
    }
}

/// Facet-and-vertex description of the convex hull of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    points: Vec<Vec<i64>>,
    vertices: Vec<Vec<i64>>,
    facets: Vec<Facet>,
}

/// Hull of the weight configuration `conv{w_0, ..., -w_{n-1}}`.
pub fn convex_hull(config: &WeightConfiguration) -> Result<LatticePolytope> {
    if !config.is_nondegenerate() {
        return Err(Error::DegenerateConfiguration);
    }
    LatticePolytope::from_points(config.dim(), config.points())
}

impl LatticePolytope {
    /// Hull of arbitrary generating points; fails when the points do not
    /// affinely span dimension `dim`.
    pub fn from_points(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        if dim == 0 || points.iter().any(|p| p.len() != dim) {
            return Err(Error::DegenerateConfiguration);
        }
        let distinct: Vec<Vec<i64>> = {
            let set: BTreeSet<Vec<i64>> = points.iter().cloned().collect();
            set.into_iter().collect()
        };
        if affine_rank(&distinct) != dim {
            return Err(Error::DegenerateConfiguration);
        }

        let mut facet_set: BTreeSet<(Vec<i64>, i64)> = BTreeSet::new();
        for subset in combinations(distinct.len(), dim) {
            let base = &distinct[subset[0]];
            let diffs: Vec<Vec<i64>> = subset[1..]
                .iter()
                .map(|&i| distinct[i].iter().zip(base).map(|(&x, &b)| x - b).collect())
                .collect();
            let Some(normal) = hyperplane_normal(dim, &diffs) else {
                continue;
            };
            let offset = dot(&normal, base);
            let mut any_below = false;
            let mut any_above = false;
            for p in &distinct {
                match dot(&normal, p).cmp(&offset) {
                    core::cmp::Ordering::Less => any_below = true,
                    core::cmp::Ordering::Greater => any_above = true,
                    core::cmp::Ordering::Equal => {}
                }
            }
            if !any_above {
                facet_set.insert((normal.clone(), offset));
            }
            if !any_below {
                facet_set.insert((normal.iter().map(|&v| -v).collect(), -offset));
            }
        }
        let facets: Vec<Facet> = facet_set
            .into_iter()
            .map(|(normal, offset)| Facet { normal, offset })
            .collect();

        let mut vertices = Vec::new();
        for p in &distinct {
            let touching: Vec<Vec<i64>> = facets
                .iter()
                .filter(|f| f.contains(p))
                .map(|f| f.normal.clone())
                .collect();
            if touching.len() >= dim && hermite_basis(&touching).len() == dim {
                vertices.push(p.clone());
            }
        }
        vertices.sort();

        Ok(LatticePolytope {
            dim,
            points: points.to_vec(),
            vertices,
            facets,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    /// Hull vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_vertex(&self, point: &[i64]) -> bool {
        self.vertices.iter().any(|v| v == point)
    }

    /// Facets passing through the given point.
    pub fn facets_at(&self, point: &[i64]) -> Vec<&Facet> {
        self.facets.iter().filter(|f| f.contains(point)).collect()
    }

    /// The 1-faces: a vertex pair is an edge when its common facets have
    /// normals spanning a `(dim-1)`-dimensional space and no third
    /// vertex lies on all of them.
    pub fn edges(&self) -> EdgeSet {
        let mut pairs = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                let p = &self.vertices[i];
                let q = &self.vertices[j];
                let common: Vec<&Facet> = self
                    .facets
                    .iter()
                    .filter(|f| f.contains(p) && f.contains(q))
                    .collect();
                let normals: Vec<Vec<i64>> = common.iter().map(|f| f.normal.clone()).collect();
                if hermite_basis(&normals).len() != self.dim - 1 {
                    continue;
                }
                let third = self.vertices.iter().enumerate().any(|(k, w)| {
                    k != i && k != j && common.iter().all(|f| f.contains(w))
                });
                if !third {
                    pairs.push((p.clone(), q.clone()));
                }
            }
        }
        EdgeSet::from_pairs(pairs)
    }

    /// Every vertex meets exactly `dim` edges.
    pub fn is_simple(&self) -> bool {
        let edges = self.edges();
        self.vertices.iter().all(|v| edges.degree(v) == self.dim)
    }
}

fn affine_rank(points: &[Vec<i64>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(&x, &b)| x - b).collect())
        .collect();
    hermite_basis(&diffs).len()
}

/// All k-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // Advance the odometer.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
        }
        if current[i] == i + n - k {
            return out;
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Unordered vertex pairs forming the 1-skeleton, with a degree table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSet {
    edges: Vec<(Vec<i64>, Vec<i64>)>,
    degrees: BTreeMap<Vec<i64>, usize>,
}

impl EdgeSet {
    pub fn from_pairs(pairs: Vec<(Vec<i64>, Vec<i64>)>) -> Self {
        let normalized: BTreeSet<(Vec<i64>, Vec<i64>)> = pairs
            .into_iter()
            .map(|(p, q)| if p <= q { (p, q) } else { (q, p) })
            .collect();
        let mut degrees: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for (p, q) in &normalized {
            *degrees.entry(p.clone()).or_default() += 1;
            *degrees.entry(q.clone()).or_default() += 1;
        }
        EdgeSet {
            edges: normalized.into_iter().collect(),
            degrees,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(Vec<i64>, Vec<i64>)] {
        &self.edges
    }

    pub fn contains(&self, p: &[i64], q: &[i64]) -> bool {
        let key = if p <= q { (p, q) } else { (q, p) };
        self.edges.iter().any(|(a, b)| (a.as_slice(), b.as_slice()) == key)
    }

    pub fn degree(&self, vertex: &[i64]) -> usize {
        self.degrees.get(vertex).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> &BTreeMap<Vec<i64>, usize> {
        &self.degrees
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.edges.iter().all(|(p, q)| other.contains(p, q))
    }
}

/// Edges predicted by sufficient supporting-hyperplane conditions, from
/// index splits `I ⊔ J = {1, ..., n-1}` with `sigma = sum_I a_i - sum_J a_j`:
///
/// - any pair `(w_k, -w_l)` with `k != l` is an edge;
/// - if `|sigma| < a_0`, every pair inside `{w_i : i in I}` is an edge;
/// - if `sigma > a_0`, the pairs `(w_0, w_k)` for `k in I` and
///   `(w_0, -w_l)` for `l in J` are edges;
///
/// plus the centrally mirrored pairs. Equality cases fire nothing. The
/// conditions are sufficient only, so the prediction is a subset of the
/// true edge set, never claimed equal.
pub fn predicted_edges(tuple: &WeightTuple) -> EdgeSet {
    let n = tuple.n();
    let a = tuple.entries();
    let config = tuple.configuration();
    let w = config.positive_half();
    let neg = |v: &[i64]| -> Vec<i64> { v.iter().map(|&x| -x).collect() };

    let mut pairs = Vec::new();
    for k in 1..n {
        for l in 1..n {
            if k != l {
                pairs.push((w[k].clone(), neg(&w[l])));
            }
        }
    }

    let free = n - 1;
    for mask in 0u32..(1 << free) {
        let in_i = |i: usize| mask & (1 << (i - 1)) != 0;
        let sigma: i64 = (1..n).map(|i| if in_i(i) { a[i] } else { -a[i] }).sum();
        if sigma.abs() < a[0] {
            let members: Vec<usize> = (1..n).filter(|&i| in_i(i)).collect();
            for (x, &i1) in members.iter().enumerate() {
                for &i2 in &members[x + 1..] {
                    pairs.push((w[i1].clone(), w[i2].clone()));
                    pairs.push((neg(&w[i1]), neg(&w[i2])));
                }
            }
        }
        if sigma > a[0] {
            for i in 1..n {
                if in_i(i) {
                    pairs.push((w[0].clone(), w[i].clone()));
                    pairs.push((neg(&w[0]), neg(&w[i])));
                } else {
                    pairs.push((w[0].clone(), neg(&w[i])));
                    pairs.push((neg(&w[0]), w[i].clone()));
                }
            }
        }
    }
    EdgeSet::from_pairs(pairs)
}

/// Whether every predicted edge is an actual hull edge.
pub fn oracle_consistency(tuple: &WeightTuple) -> Result<bool> {
    let hull = convex_hull(&tuple.configuration())?;
    Ok(predicted_edges(tuple).is_subset_of(&hull.edges()))
}
