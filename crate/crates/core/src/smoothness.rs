//! Vertex-chart affine semigroups and the smoothness criterion.
//!
//! At a hull vertex `v` the chart semigroup is generated by the
//! difference vectors `{w - v}` over the configuration. The embedded
//! variety is smooth at the corresponding fixed point exactly when that
//! semigroup is free of full rank: its minimal generating set has
//! `dim` elements forming a basis of the lattice the differences
//! generate. Freeness is decided by finite search, bounded through a
//! linear functional strictly positive on the chart cone.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{det, dot, hermite_basis, lattice_det};
use crate::orbit::WeightConfiguration;
use crate::polytope::{convex_hull, LatticePolytope};

/// The chart data at a hull vertex: difference generators in
/// configuration order and the lattice they generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexChart {
    dim: usize,
    vertex: Vec<i64>,
    generators: Vec<Vec<i64>>,
    lattice_basis: Vec<Vec<i64>>,
    /// Sum of the facet normals at the vertex; the functional
    /// `g -> -grading . g` is strictly positive on every generator.
    grading: Vec<i64>,
}

/// Builds the chart of `config` at `v`, which must be a hull vertex.
pub fn vertex_chart(config: &WeightConfiguration, v: &[i64]) -> Result<VertexChart> {
    let hull = convex_hull(config)?;
    chart_at_hull_vertex(config, &hull, v)
}

fn chart_at_hull_vertex(
    config: &WeightConfiguration,
    hull: &LatticePolytope,
    v: &[i64],
) -> Result<VertexChart> {
    if !hull.is_vertex(v) {
        return Err(Error::NotAVertex);
    }
    let dim = config.dim();
    let generators: Vec<Vec<i64>> = config
        .points()
        .iter()
        .filter(|w| w.as_slice() != v)
        .map(|w| w.iter().zip(v).map(|(&x, &b)| x - b).collect())
        .collect();
    let lattice_basis = hermite_basis(&generators);
    let mut grading = alloc::vec![0i64; dim];
    for facet in hull.facets_at(v) {
        for (slot, &component) in grading.iter_mut().zip(&facet.normal) {
            *slot += component;
        }
    }
    let chart = VertexChart {
        dim,
        vertex: v.to_vec(),
        generators,
        lattice_basis,
        grading,
    };
    if chart.generators.iter().any(|g| chart.phi(g) <= 0) {
        return Err(Error::NonPointedCone);
    }
    Ok(chart)
}

impl VertexChart {
    pub fn vertex(&self) -> &[i64] {
        &self.vertex
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Hermite-normal-form basis of the lattice the generators span.
    pub fn lattice_basis(&self) -> &[Vec<i64>] {
        &self.lattice_basis
    }

    /// Covolume of the chart lattice inside `Z^dim`, when full rank.
    pub fn lattice_determinant(&self) -> Option<i64> {
        lattice_det(&self.generators, self.dim)
    }

    /// Value of the strictly positive functional on a cone vector.
    fn phi(&self, g: &[i64]) -> i64 {
        -dot(&self.grading, g)
    }

    /// Generators not expressible as a sum of two or more generators
    /// with nonnegative integer coefficients, in configuration order.
    pub fn minimal_generators(&self) -> Vec<Vec<i64>> {
        self.generators
            .iter()
            .filter(|g| !self.decomposable(g))
            .cloned()
            .collect()
    }

    /// Whether `target` is a sum of two or more generators. The search
    /// is finite: any representation satisfies
    /// `sum_i c_i phi(g_i) = phi(target)` with all `phi(g_i) > 0`.
    fn decomposable(&self, target: &[i64]) -> bool {
        let phis: Vec<i64> = self.generators.iter().map(|g| self.phi(g)).collect();
        let mut residual: Vec<i64> = target.to_vec();
        self.search(0, &mut residual, self.phi(target), 0, &phis)
    }

    fn search(
        &self,
        idx: usize,
        residual: &mut Vec<i64>,
        phi_left: i64,
        parts: usize,
        phis: &[i64],
    ) -> bool {
        if phi_left == 0 {
            return parts >= 2 && residual.iter().all(|&v| v == 0);
        }
        if idx == self.generators.len() {
            return false;
        }
        let g = &self.generators[idx];
        let phi_g = phis[idx];
        let max_c = phi_left / phi_g;
        for c in 0..=max_c {
            if c > 0 {
                for (slot, &component) in residual.iter_mut().zip(g) {
                    *slot -= component;
                }
            }
            if self.search(idx + 1, residual, phi_left - c * phi_g, parts + c as usize, phis) {
                for (slot, &component) in residual.iter_mut().zip(g) {
                    *slot += c * component;
                }
                return true;
            }
        }
        for (slot, &component) in residual.iter_mut().zip(g) {
            *slot += max_c * component;
        }
        false
    }

    /// The free-semigroup criterion: exactly `dim` minimal generators
    /// forming a basis of the chart lattice.
    pub fn is_smooth(&self) -> bool {
        let Some(lattice_determinant) = self.lattice_determinant() else {
            return false;
        };
        let minimal = self.minimal_generators();
        if minimal.len() != self.dim {
            return false;
        }
        det(&minimal).abs() == lattice_determinant.abs()
    }
}

/// Smoothness at every hull vertex. On failure returns the
/// lexicographically smallest failing vertex as witness.
pub fn is_smooth(config: &WeightConfiguration) -> Result<(bool, Option<Vec<i64>>)> {
    let hull = convex_hull(config)?;
    for v in hull.vertices() {
        let chart = chart_at_hull_vertex(config, &hull, v)?;
        if !chart.is_smooth() {
            return Ok((false, Some(v.clone())));
        }
    }
    Ok((true, None))
}
