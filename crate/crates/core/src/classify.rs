//! Exhaustive classification of the toric family over bounded weight
//! tuples: per-tuple verdict reports and the simplicity filter.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::orbit::{verify_legendrian, WeightTuple};
use crate::polytope::convex_hull;
use crate::smoothness;
use crate::symplectic::SymplecticSpace;

/// Known identifications of the smooth members of the family.
const IDENTIFICATIONS: &[(&[i64], &str)] = &[
    (&[2, 1, 1], "P1xQ1"),
    (&[1, 1, 1], "P2 blown up in three non-colinear points"),
    (&[1, 1, 1, 1], "P1xP1xP1"),
];

/// Name of the variety when the tuple is one of the known smooth cases.
pub fn identification_for(tuple: &WeightTuple) -> Option<&'static str> {
    IDENTIFICATIONS
        .iter()
        .find(|(entries, _)| *entries == tuple.entries())
        .map(|&(_, name)| name)
}

/// All verdicts for one weight tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub tuple: WeightTuple,
    /// Tangent frames Lagrangian at the base point and at the trial
    /// parameters.
    pub legendrian: bool,
    /// Weights pairwise distinct and affinely spanning.
    pub nondegenerate: bool,
    /// Every torus generator lies in `sp`: the action preserves the
    /// contact structure.
    pub star_condition: bool,
    /// Every vertex chart semigroup is free of full rank.
    pub smooth: bool,
    /// Lexicographically smallest failing vertex when not smooth.
    pub smooth_witness: Option<Vec<i64>>,
    /// Every hull vertex meets exactly `n - 1` edges.
    pub simple_polytope: bool,
    /// `w_0` lies strictly inside the octahedron of the other weights.
    pub interior_weight: bool,
    /// Name of the variety for the known smooth cases.
    pub identification: Option<&'static str>,
}

/// Runs every check on one tuple. Trials and seed control the random
/// parameter vectors of the Legendrian verification; everything else is
/// deterministic in the tuple.
pub fn classify(tuple: &WeightTuple, trials: usize, seed: u64) -> ClassificationReport {
    let config = tuple.configuration();
    let nondegenerate = config.is_nondegenerate();
    let legendrian = verify_legendrian(tuple, trials, seed);
    let space = SymplecticSpace::new(tuple.n()).expect("tuples are non-empty");
    let star_condition = config
        .torus_generators()
        .iter()
        .all(|g| space.in_sp(g).expect("generators are 2n x 2n"));

    let (smooth, smooth_witness, simple_polytope) = match convex_hull(&config) {
        Ok(hull) => {
            let (smooth, witness) =
                smoothness::is_smooth(&config).expect("hull construction already succeeded");
            (smooth, witness, hull.is_simple())
        }
        // Degenerate configurations cannot be certified smooth.
        Err(_) => (false, None, false),
    };

    let identification = if smooth { identification_for(tuple) } else { None };

    ClassificationReport {
        tuple: tuple.clone(),
        legendrian,
        nondegenerate,
        star_condition,
        smooth,
        smooth_witness,
        simple_polytope,
        interior_weight: tuple.has_interior_weight(),
        identification,
    }
}

/// All coprime non-increasing positive tuples of length `n` with
/// `a_0 <= a_max`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleEnumeration {
    pub n: usize,
    pub a_max: i64,
    pub tuples: Vec<WeightTuple>,
}

pub fn enumerate_tuples(n: usize, a_max: i64) -> Result<TupleEnumeration> {
    if n < 2 {
        return Err(Error::BadBounds("tuple length must be at least 2"));
    }
    if a_max < 1 {
        return Err(Error::BadBounds("weight bound must be at least 1"));
    }
    let mut tuples = Vec::new();
    let mut current = Vec::with_capacity(n);
    descend(n, a_max, &mut current, &mut tuples);
    Ok(TupleEnumeration { n, a_max, tuples })
}

fn descend(n: usize, a_max: i64, current: &mut Vec<i64>, out: &mut Vec<WeightTuple>) {
    if current.len() == n {
        if let Ok(tuple) = WeightTuple::new(current) {
            out.push(tuple);
        }
        return;
    }
    let upper = current.last().copied().unwrap_or(a_max);
    for value in 1..=upper {
        current.push(value);
        descend(n, a_max, current, out);
        current.pop();
    }
}

/// Reports for every enumerated tuple, in enumeration order.
pub fn classify_all(
    n: usize,
    a_max: i64,
    trials: usize,
    seed: u64,
) -> Result<Vec<ClassificationReport>> {
    if n < 3 {
        return Err(Error::BadBounds("classification needs tuple length at least 3"));
    }
    let enumeration = enumerate_tuples(n, a_max)?;
    Ok(enumeration
        .tuples
        .iter()
        .map(|t| classify(t, trials, seed))
        .collect())
}

/// Tuples whose weight polytope is simple, within the bound.
pub fn simple_survivors(n: usize, a_max: i64) -> Result<Vec<WeightTuple>> {
    if n < 4 {
        return Err(Error::BadBounds("simplicity filter needs tuple length at least 4"));
    }
    let enumeration = enumerate_tuples(n, a_max)?;
    let mut survivors = Vec::new();
    for tuple in enumeration.tuples {
        let hull = convex_hull(&tuple.configuration())?;
        if hull.is_simple() {
            survivors.push(tuple);
        }
    }
    Ok(survivors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(tuples: &[WeightTuple]) -> Vec<Vec<i64>> {
        tuples.iter().map(|t| t.entries().to_vec()).collect()
    }

    #[test]
    fn enumeration_small_cases() {
        let e = enumerate_tuples(3, 2).unwrap();
        assert_eq!(entries(&e.tuples), vec![vec![1, 1, 1], vec![2, 1, 1], vec![2, 2, 1]]);

        let e = enumerate_tuples(2, 1).unwrap();
        assert_eq!(entries(&e.tuples), vec![vec![1, 1]]);

        assert!(enumerate_tuples(1, 5).is_err());
        assert!(enumerate_tuples(3, 0).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let e = enumerate_tuples(3, 3).unwrap();
        // Independent oracle: filter the full grid.
        let mut expected = Vec::new();
        for a0 in 1..=3i64 {
            for a1 in 1..=a0 {
                for a2 in 1..=a1 {
                    if crate::lattice::gcd_slice(&[a0, a1, a2]) == 1 {
                        expected.push(vec![a0, a1, a2]);
                    }
                }
            }
        }
        assert_eq!(entries(&e.tuples), expected);
        assert_eq!(e.tuples.len(), 8);
        assert_eq!(
            entries(&e.tuples),
            vec![
                vec![1, 1, 1],
                vec![2, 1, 1],
                vec![2, 2, 1],
                vec![3, 1, 1],
                vec![3, 2, 1],
                vec![3, 2, 2],
                vec![3, 3, 1],
                vec![3, 3, 2],
            ]
        );
    }

    #[test]
    fn classify_smooth_surface_cases() {
        let report = classify(&WeightTuple::new(&[1, 1, 1]).unwrap(), 2, 11);
        assert!(report.legendrian);
        assert!(report.nondegenerate);
        assert!(report.star_condition);
        assert!(report.smooth);
        assert!(report.simple_polytope);
        assert!(!report.interior_weight);
        assert_eq!(report.identification, Some("P2 blown up in three non-colinear points"));

        let report = classify(&WeightTuple::new(&[2, 1, 1]).unwrap(), 2, 11);
        assert!(report.smooth);
        assert_eq!(report.identification, Some("P1xQ1"));
    }

    #[test]
    fn classify_singular_case() {
        let report = classify(&WeightTuple::new(&[4, 3, 2]).unwrap(), 2, 11);
        assert!(report.legendrian);
        assert!(!report.smooth);
        assert!(report.smooth_witness.is_some());
        assert_eq!(report.identification, None);
    }

    #[test]
    fn classify_is_deterministic() {
        let t = WeightTuple::new(&[3, 2, 1]).unwrap();
        assert_eq!(classify(&t, 4, 99), classify(&t, 4, 99));
    }

    #[test]
    fn classify_all_small_surface_sweep() {
        let reports = classify_all(3, 6, 2, 5).unwrap();
        let smooth: Vec<Vec<i64>> = reports
            .iter()
            .filter(|r| r.smooth)
            .map(|r| r.tuple.entries().to_vec())
            .collect();
        assert_eq!(smooth, vec![vec![1, 1, 1], vec![2, 1, 1]]);
        assert!(reports.iter().all(|r| r.legendrian && r.star_condition));
    }

    #[test]
    fn smooth_implies_simple_in_small_sweeps() {
        for (n, a_max) in [(3usize, 5i64), (4, 3)] {
            for report in classify_all(n, a_max, 1, 3).unwrap() {
                if report.smooth {
                    assert!(report.simple_polytope, "{:?}", report.tuple);
                }
            }
        }
    }

    #[test]
    fn simple_survivors_small_bounds() {
        let survivors = simple_survivors(4, 4).unwrap();
        assert_eq!(entries(&survivors), vec![vec![1, 1, 1, 1]]);

        let survivors = simple_survivors(5, 3).unwrap();
        assert!(survivors.is_empty());

        assert!(simple_survivors(3, 5).is_err());
    }
}
