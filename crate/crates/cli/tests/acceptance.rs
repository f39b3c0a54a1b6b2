//! Acceptance suite. One test per criterion; each prints a
//! `criterion N ... PASS` line when its exact checks hold (run with
//! `--nocapture` to see them). Every check is exact: no tolerances.

use std::process::Command;
use std::time::{Duration, Instant};

use legendric::json::parse_classification;
use legendric_core::matrix::{frac, Rational, RationalMatrix};
use legendric_core::orbit::verify_legendrian;
use legendric_core::polytope::{convex_hull, oracle_consistency};
use legendric_core::smoothness::vertex_chart;
use legendric_core::symplectic::SymplecticSpace;
use legendric_core::{enumerate_tuples, simple_survivors, DEFAULT_SEED};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn classify_via_binary(n: &str, max_a: &str) -> (Vec<(Vec<i64>, Option<String>)>, Duration) {
    let started = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_legendric"))
        .args(["classify", "--n", n, "--max-a", max_a, "--jobs", "1"])
        .output()
        .expect("binary runs");
    let elapsed = started.elapsed();
    assert_eq!(output.status.code(), Some(0), "classify --n {n} --max-a {max_a} failed");
    let doc = parse_classification(&String::from_utf8(output.stdout).unwrap()).unwrap();
    let smooth = doc
        .reports
        .iter()
        .filter(|r| r.smooth)
        .map(|r| (r.tuple.clone(), r.identification.clone()))
        .collect();
    (smooth, elapsed)
}

#[test]
fn criterion_1_surface_classification() {
    let (smooth, elapsed) = classify_via_binary("3", "20");
    assert_eq!(
        smooth,
        vec![
            (
                vec![1, 1, 1],
                Some("P2 blown up in three non-colinear points".to_string())
            ),
            (vec![2, 1, 1], Some("P1xQ1".to_string())),
        ]
    );
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "criterion 1 (surface classification, n=3 a0<=20): PASS in {:?}",
        elapsed
    );
}

#[test]
fn criterion_2_threefold_classification() {
    let (smooth, elapsed) = classify_via_binary("4", "10");
    assert_eq!(smooth, vec![(vec![1, 1, 1, 1], Some("P1xP1xP1".to_string()))]);
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 2 (threefold classification, n=4 a0<=10): PASS in {:?}",
        elapsed
    );
}

#[test]
fn criterion_3_higher_dimensions_have_no_smooth_tuples() {
    let (smooth_5, elapsed_5) = classify_via_binary("5", "6");
    assert!(smooth_5.is_empty(), "unexpected smooth tuples: {smooth_5:?}");
    let (smooth_6, elapsed_6) = classify_via_binary("6", "4");
    assert!(smooth_6.is_empty(), "unexpected smooth tuples: {smooth_6:?}");
    let combined = elapsed_5 + elapsed_6;
    assert!(combined < Duration::from_secs(300), "took {combined:?}");
    println!(
        "criterion 3 (no smooth tuples, n=5 a0<=6 and n=6 a0<=4): PASS in {:?}",
        combined
    );
}

#[test]
fn criterion_4_every_enumerated_tuple_is_legendrian() {
    let mut checked = 0usize;
    for n in [3usize, 4, 5] {
        for tuple in enumerate_tuples(n, 6).unwrap().tuples {
            assert!(
                verify_legendrian(&tuple, 5, DEFAULT_SEED),
                "frame not Lagrangian for {tuple:?}"
            );
            checked += 1;
        }
    }
    println!("criterion 4 (Legendrian verification, {checked} tuples across n=3,4,5 a0<=6): PASS");
}

#[test]
fn criterion_5_simplicity_filter() {
    let survivors_4: Vec<Vec<i64>> = simple_survivors(4, 8)
        .unwrap()
        .iter()
        .map(|t| t.entries().to_vec())
        .collect();
    assert_eq!(survivors_4, vec![vec![1, 1, 1, 1]]);

    let survivors_5 = simple_survivors(5, 6).unwrap();
    assert!(survivors_5.is_empty(), "unexpected survivors: {survivors_5:?}");

    // Every interior-w_0 tuple has the cross-polytope's uniform vertex
    // degree 2(n-2).
    let mut interior_checked = 0usize;
    for (n, a_max) in [(4usize, 8i64), (5, 6)] {
        for tuple in enumerate_tuples(n, a_max).unwrap().tuples {
            if !tuple.has_interior_weight() {
                continue;
            }
            let hull = convex_hull(&tuple.configuration()).unwrap();
            let edges = hull.edges();
            for v in hull.vertices() {
                assert_eq!(edges.degree(v), 2 * (n - 2), "degree off for {tuple:?} at {v:?}");
            }
            interior_checked += 1;
        }
    }
    assert!(interior_checked > 0);
    println!(
        "criterion 5 (simplicity filter; {interior_checked} interior-weight tuples at degree 2(n-2)): PASS"
    );
}

#[test]
fn criterion_6_edge_oracle_soundness() {
    let mut checked = 0usize;
    for n in [2usize, 3, 4, 5] {
        for tuple in enumerate_tuples(n, 6).unwrap().tuples {
            // The single degenerate configuration (1,1) has no hull.
            if !tuple.configuration().is_nondegenerate() {
                continue;
            }
            assert!(oracle_consistency(&tuple).unwrap(), "oracle unsound for {tuple:?}");
            checked += 1;
        }
    }
    println!("criterion 6 (edge oracle soundness, {checked} tuples with n<=5 a0<=6): PASS");
}

#[test]
fn criterion_7_symplectic_algebra_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let rational = |rng: &mut ChaCha8Rng| -> Rational {
        frac(rng.gen_range(-20i64..=20), rng.gen_range(1i64..=12))
    };

    for n in [1usize, 2, 3] {
        let space = SymplecticSpace::new(n).unwrap();
        let j = space.form_matrix().clone();
        for _ in 0..1000 {
            let rows: Vec<Vec<Rational>> = (0..2 * n)
                .map(|_| (0..2 * n).map(|_| rational(&mut rng)).collect())
                .collect();
            let g = RationalMatrix::from_rows(rows).unwrap();
            let (plus, minus) = space.decompose(&g).unwrap();
            assert_eq!(&plus + &minus, g, "decomposition does not add back");
            assert!((&j * &plus).is_symmetric(), "J g_plus not symmetric");
            assert!((&j * &minus).is_skew_symmetric(), "J g_minus not skew");

            // The moving identity omega(gu, v) = omega(u, gv) on a
            // weks-symplectic instance built from the same sample.
            let skew = (&g - &g.transpose()).scale(&frac(1, 2));
            let asp = space.asp_from_skew(&skew).unwrap();
            let u: Vec<Rational> = (0..2 * n).map(|_| rational(&mut rng)).collect();
            let v: Vec<Rational> = (0..2 * n).map(|_| rational(&mut rng)).collect();
            let gu = asp.mul_vector(&u).unwrap();
            let gv = asp.mul_vector(&v).unwrap();
            assert_eq!(
                space.omega(&gu, &v).unwrap(),
                space.omega(&u, &gv).unwrap(),
                "pairing identity fails"
            );
        }
    }

    // Torus generators are symplectic for every enumerated tuple.
    let mut generators_checked = 0usize;
    for n in [3usize, 4, 5] {
        let space = SymplecticSpace::new(n).unwrap();
        for tuple in enumerate_tuples(n, 6).unwrap().tuples {
            for g in tuple.configuration().torus_generators() {
                assert!(space.in_sp(&g).unwrap(), "generator not in sp for {tuple:?}");
                generators_checked += 1;
            }
        }
    }
    println!(
        "criterion 7 (symplectic suite: 1000 matrices per n=1,2,3; {generators_checked} torus generators): PASS"
    );
}

/// Integer solvability of `(0, 2 a_0) = k (a_0, a_0) + l (-a_1, a_0 - a_2)`
/// for the given `k` with some integer `l >= 1`.
fn edge_equation_solvable(a: &[i64], k: i64) -> bool {
    let (a0, a1, a2) = (a[0], a[1], a[2]);
    if (k * a0) % a1 != 0 {
        return false;
    }
    let l = k * a0 / a1;
    l >= 1 && 2 * a0 == k * a0 + l * (a0 - a2)
}

#[test]
fn criterion_8_surface_edge_equation_cross_check() {
    let mut k1_solvable = Vec::new();
    let mut k2_solvable = Vec::new();
    let mut checked = 0usize;
    for tuple in enumerate_tuples(3, 20).unwrap().tuples {
        let a = tuple.entries();
        if a[1] + a[2] < a[0] {
            continue;
        }
        let config = tuple.configuration();
        let minus_w2 = vec![0i64, -a[0]];
        let chart = vertex_chart(&config, &minus_w2).unwrap();
        let chart_smooth = chart.is_smooth();

        let k1 = edge_equation_solvable(a, 1);
        let k2 = edge_equation_solvable(a, 2);
        assert_eq!(
            k1 || k2,
            chart_smooth,
            "solvability and chart smoothness disagree for {tuple:?}"
        );
        if k1 {
            k1_solvable.push(a.to_vec());
        }
        if k2 {
            k2_solvable.push(a.to_vec());
        }
        checked += 1;
    }
    assert_eq!(k1_solvable, vec![vec![2, 1, 1]]);
    assert_eq!(k2_solvable, vec![vec![1, 1, 1]]);
    println!(
        "criterion 8 (edge equation vs chart smoothness at -w_2, {checked} surface tuples): PASS"
    );
}
