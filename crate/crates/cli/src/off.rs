//! OFF export for polytopes of dimension at most 3.
//!
//! Faces list their vertices in convex cyclic order, oriented outward,
//! starting from the smallest vertex index; the ordering is computed in
//! exact integer arithmetic (scaled centroid differences compared by
//! half-plane and cross product), so output is deterministic.

use std::fmt;
use std::fmt::Write as _;

use legendric_core::polytope::LatticePolytope;

#[derive(Debug, PartialEq, Eq)]
pub struct UnsupportedDimension(pub usize);

impl fmt::Display for UnsupportedDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unsupported dimension for OFF: {}", self.0)
    }
}

impl std::error::Error for UnsupportedDimension {}

pub fn polytope_to_off(poly: &LatticePolytope) -> Result<String, UnsupportedDimension> {
    let dim = poly.dim();
    if dim > 3 {
        return Err(UnsupportedDimension(dim));
    }
    let vertices = poly.vertices();
    let edge_count = poly.edges().len();

    let faces: Vec<Vec<usize>> = match dim {
        1 => vec![vec![0, 1]],
        2 => {
            let all: Vec<usize> = (0..vertices.len()).collect();
            vec![order_cycle(vertices, all, None)]
        }
        _ => poly
            .facets()
            .iter()
            .map(|facet| {
                let on_facet: Vec<usize> = (0..vertices.len())
                    .filter(|&i| facet.contains(&vertices[i]))
                    .collect();
                order_cycle(vertices, on_facet, Some(&facet.normal))
            })
            .collect(),
    };

    let mut out = String::new();
    out.push_str("OFF\n");
    writeln!(out, "{} {} {}", vertices.len(), faces.len(), edge_count).unwrap();
    for v in vertices {
        let mut padded = [0i64; 3];
        padded[..v.len()].copy_from_slice(v);
        writeln!(out, "{} {} {}", padded[0], padded[1], padded[2]).unwrap();
    }
    for face in faces {
        write!(out, "{}", face.len()).unwrap();
        for idx in face {
            write!(out, " {idx}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}

fn cross3(a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn pad3(v: &[i64]) -> [i64; 3] {
    let mut out = [0i64; 3];
    out[..v.len()].copy_from_slice(v);
    out
}

/// Orders the given vertex indices cyclically around their centroid,
/// counter-clockwise as seen from the outward normal side (or in the
/// plane for dimension 2), starting at the smallest index.
fn order_cycle(vertices: &[Vec<i64>], mut indices: Vec<usize>, normal: Option<&[i64]>) -> Vec<usize> {
    if indices.len() <= 2 {
        indices.sort_unstable();
        return indices;
    }
    let m = indices.len() as i64;
    let mut center = [0i64; 3];
    for &i in &indices {
        let p = pad3(&vertices[i]);
        for (c, x) in center.iter_mut().zip(p) {
            *c += x;
        }
    }
    let diff = |i: usize| -> [i64; 3] {
        let p = pad3(&vertices[i]);
        [m * p[0] - center[0], m * p[1] - center[1], m * p[2] - center[2]]
    };

    // In-plane coordinates of each direction vector.
    let planar: Vec<(usize, i64, i64)> = match normal {
        None => indices.iter().map(|&i| {
            let d = diff(i);
            (i, d[0], d[1])
        }).collect(),
        Some(n) => {
            let n = pad3(n);
            let u = indices
                .iter()
                .map(|&i| diff(i))
                .find(|d| d.iter().any(|&x| x != 0))
                .expect("a polygon vertex differs from the centroid");
            let w = cross3(&n, &u);
            indices
                .iter()
                .map(|&i| {
                    let d = diff(i);
                    let alpha = d[0] * u[0] + d[1] * u[1] + d[2] * u[2];
                    let beta = d[0] * w[0] + d[1] * w[1] + d[2] * w[2];
                    (i, alpha, beta)
                })
                .collect()
        }
    };

    let half = |(_, alpha, beta): &(usize, i64, i64)| -> u8 {
        if *beta > 0 || (*beta == 0 && *alpha > 0) {
            0
        } else {
            1
        }
    };
    let mut ordered = planar;
    ordered.sort_by(|a, b| {
        half(a)
            .cmp(&half(b))
            .then_with(|| (b.1 * a.2 - b.2 * a.1).cmp(&0))
    });

    let mut cycle: Vec<usize> = ordered.into_iter().map(|(i, _, _)| i).collect();
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &v)| v)
        .map(|(pos, _)| pos)
        .expect("non-empty cycle");
    cycle.rotate_left(start);
    cycle
}
