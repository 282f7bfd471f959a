//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its elapsed time (runtime budgets are asserted as stated).
//!
//! Criterion 4 asserts the full bounded three-way equivalence (bad pair
//! <=> conflicting priority <=> brute-force witness over the two bases'
//! segments). The order-level legs are exact; the witness leg is not
//! complete for two pinned bases (two orders can be irreconcilable
//! while their own segment families never interleave), so that test
//! documents the failure rate rather than passing. The sub-equivalences
//! that do hold are asserted in `criterion_4_supported_directions`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use cdseg_core::*;

fn pt(x: i64, y: i64) -> Point {
    Point::new(x, y)
}

fn path(pts: &[(i64, i64)]) -> Vec<Point> {
    pts.iter().map(|&(x, y)| pt(x, y)).collect()
}

/// Random permutation of `lo..=hi`.
fn random_window(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> OrderSpec {
    let mut asc: Vec<i64> = (lo..=hi).collect();
    asc.shuffle(rng);
    OrderSpec::explicit(lo, hi, asc).unwrap()
}

#[test]
fn criterion_1_explicit_window_reproduction() {
    let expected = path(&[
        (0, 0),
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 3),
        (1, 4),
        (2, 4),
        (2, 5),
        (3, 5),
    ]);
    let expected_h: std::collections::BTreeSet<i64> = [4, 6, 8].into();
    let expected_v: std::collections::BTreeSet<i64> = [1, 2, 3, 5, 7].into();

    // any order on [0,7] whose three smallest elements are {3,5,7}
    // produces the same segment
    let mut orders = vec![
        vec![3, 7, 5, 2, 1, 0, 4, 6],
        vec![3, 5, 7, 0, 1, 2, 4, 6],
        vec![7, 5, 3, 6, 4, 0, 1, 2],
        vec![5, 3, 7, 4, 6, 2, 0, 1],
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..16 {
        let mut small = vec![3, 5, 7];
        let mut rest = vec![0, 1, 2, 4, 6];
        small.shuffle(&mut rng);
        rest.shuffle(&mut rng);
        small.extend(rest);
        orders.push(small);
    }

    for asc in &orders {
        let spec = OrderSpec::explicit(0, 7, asc.clone()).unwrap();
        let seg = first_quadrant_segment(pt(0, 0), pt(3, 5), &spec).unwrap();
        assert_eq!(seg.points(), &expected[..], "order {asc:?}");
        let (h, v) = derived_third_quadrant_moves(&seg).unwrap();
        assert_eq!(h, expected_h);
        assert_eq!(v, expected_v);
    }

    // timing on the already-warm path
    let spec = OrderSpec::explicit(0, 7, orders[0].clone()).unwrap();
    let start = Instant::now();
    let seg = first_quadrant_segment(pt(0, 0), pt(3, 5), &spec).unwrap();
    let moves = derived_third_quadrant_moves(&seg).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(seg.points(), &expected[..]);
    assert_eq!(moves.0, expected_h);
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("criterion 1 (explicit-window reproduction): PASS ({elapsed:?})");
}

#[test]
fn criterion_2_waterline_nonsmooth_exhibit() {
    let w = OrderAssignment::Waterline;
    let s1 = segment(&w, pt(0, 0), pt(4, 3)).unwrap();
    let s2 = segment(&w, pt(3, -3), pt(6, 3)).unwrap();

    let start = Instant::now();
    let profile = dist_profile(&s1, &s2).unwrap();
    let verdict = is_smooth_pair(&s1, &s2).unwrap();
    let elapsed = start.elapsed();

    let by_sum: BTreeMap<i64, i64> = profile.entries.iter().map(|e| (e.sum, e.dist)).collect();
    assert_eq!(by_sum[&0], -3);
    assert_eq!(by_sum[&3], 0);
    assert_eq!(by_sum[&7], -2);
    let dists: Vec<i64> = profile.dists().collect();
    assert_eq!(dists, vec![-3, -2, -1, 0, 0, -1, -2, -2]);
    assert!(!verdict.smooth);
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    println!("criterion 2 (waterline non-smooth exhibit): PASS ({elapsed:?})");
}

#[test]
fn criterion_3_waterline_region_is_consistent() {
    let start = Instant::now();
    let w = OrderAssignment::Waterline;
    let region = Region::new(-6, 6, -6, 6).unwrap();
    let report = verify_region(&w, region, &Property::ALL).unwrap();
    assert!(report.is_clean(), "violations: {:?}", report.violations);
    for p in Property::ALL {
        assert!(report.checked[&p] > 0);
    }

    // no waterline order pair has a bad pair in the bounded search
    let points: Vec<Point> = region.points().collect();
    let mut pairs = 0u64;
    for (i, &p1) in points.iter().enumerate() {
        let spec1 = w.order1(p1);
        for &p2 in &points[i + 1..] {
            let spec2 = w.order1(p2);
            let found = find_bad_pair(p1, &spec1, p2, &spec2, 20).unwrap();
            assert!(found.is_none(), "bad pair for {p1} and {p2}: {found:?}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, (169 * 168) / 2);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 3 (waterline region + bad-pair sweep): PASS ({elapsed:?})");
}

/// Draws a random trial for the bounded equivalence: two base points in
/// a small box and two window orders covering sums up to `max_end_sum`,
/// with window length at most 14.
fn random_equivalence_trial(rng: &mut ChaCha8Rng) -> (Point, OrderSpec, Point, OrderSpec, i64) {
    let p1 = pt(rng.gen_range(0..=2), rng.gen_range(0..=2));
    let p2 = pt(rng.gen_range(0..=2), rng.gen_range(0..=2));
    let max_end_sum = rng.gen_range(8..=13).max(p1.sum().max(p2.sum()) + 2);
    let spec1 = random_window(rng, p1.sum(), max_end_sum);
    let spec2 = random_window(rng, p2.sum(), max_end_sum);
    (p1, spec1, p2, spec2, max_end_sum)
}

#[test]
fn criterion_4_theorem_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let trials = 500;
    let mut inconsistent: Vec<(Point, Point, bool, bool, bool)> = Vec::new();
    for _ in 0..trials {
        let (p1, spec1, p2, spec2, max_end_sum) = random_equivalence_trial(&mut rng);
        let report = equivalence_check(p1, &spec1, p2, &spec2, max_end_sum).unwrap();
        if !report.consistent {
            inconsistent.push((
                p1,
                p2,
                report.bad_pair.is_some(),
                report.conflict.is_some(),
                report.witness.is_some(),
            ));
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    assert!(
        inconsistent.is_empty(),
        "{}/{trials} trials inconsistent (each: bad pair and conflicting priority found, \
         no witness among the two bases' own segments — the witness leg of the bounded \
         equivalence is not complete for two pinned bases; see criterion_4_supported_directions \
         for the directions that do hold). first cases: {:?}",
        inconsistent.len(),
        &inconsistent[..inconsistent.len().min(3)],
    );
    println!("criterion 4 (three-way oracle equivalence): PASS ({elapsed:?})");
}

/// The directions of the bounded equivalence that the characterization
/// actually guarantees for two pinned bases: the order-level
/// certificates are equivalent, and a witness implies both.
#[test]
fn criterion_4_supported_directions() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let trials = 500;
    let mut bad_pairs = 0u32;
    let mut witnesses = 0u32;
    for _ in 0..trials {
        let (p1, spec1, p2, spec2, max_end_sum) = random_equivalence_trial(&mut rng);
        let report = equivalence_check(p1, &spec1, p2, &spec2, max_end_sum).unwrap();
        assert_eq!(
            report.bad_pair.is_some(),
            report.conflict.is_some(),
            "bad pair and conflicting priority must certify each other: {p1} {p2}"
        );
        if let Some(w) = &report.witness {
            assert!(report.bad_pair.is_some(), "witness without bad pair: {w:?}");
        }
        if report.bad_pair.is_some() {
            bad_pairs += 1;
        }
        if report.witness.is_some() {
            witnesses += 1;
        }
    }
    // shared-base trials additionally make the witness leg complete
    for _ in 0..100 {
        let p = pt(rng.gen_range(0..=2), rng.gen_range(0..=2));
        let max_end_sum = rng.gen_range(8..=13).max(p.sum() + 2);
        let spec1 = random_window(&mut rng, p.sum(), max_end_sum);
        let spec2 = random_window(&mut rng, p.sum(), max_end_sum);
        let report = equivalence_check(p, &spec1, p, &spec2, max_end_sum).unwrap();
        assert!(
            report.consistent,
            "shared-base equivalence must be complete at {p}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 4 supported directions: PASS ({elapsed:?}; {bad_pairs}/{trials} trials \
         with certificates, {witnesses} with witnesses)"
    );
}

#[test]
fn criterion_5_crafted_counterexample_certificates() {
    let start = Instant::now();
    let natural = OrderSpec::Natural;
    let swapped = OrderSpec::explicit(1, 7, vec![1, 2, 3, 6, 4, 5, 7]).unwrap();

    let s1 = first_quadrant_segment(pt(0, 0), pt(5, 2), &natural).unwrap();
    let s2 = first_quadrant_segment(pt(1, 0), pt(5, 2), &swapped).unwrap();
    let witness = find_witness(&s1, &s2).expect("the crafted pair violates the subsegment axiom");
    assert_eq!(
        witness,
        Witness {
            t1: pt(4, 0),
            t2: pt(5, 2)
        }
    );

    let finding = find_bad_pair(pt(0, 0), &natural, pt(1, 0), &swapped, 8)
        .unwrap()
        .unwrap();
    assert_eq!(
        finding,
        BadPairFinding {
            a: 4,
            b: 6,
            end_sum: 6,
            line_pos: 5,
            p3: pt(5, 2)
        }
    );

    let conflict = conflicting_priorities(pt(0, 0), &natural, pt(1, 0), &swapped, pt(5, 2))
        .unwrap()
        .unwrap();
    assert_eq!(conflict, (7, 5));

    // the three certificates describe the same failure: the apex of the
    // bad pair is the re-intersection point of the witness, and the
    // conflicting priorities are the bad pair shifted by one
    assert_eq!(finding.p3, witness.t2);
    assert_eq!(conflict.0, finding.b + 1);
    assert_eq!(conflict.1, finding.a + 1);

    // region verification surfaces the same witness first
    let table = OrderAssignment::Table {
        entries: BTreeMap::from([(
            pt(1, 0),
            (
                OrderSpec::explicit(1, 8, vec![1, 2, 3, 6, 4, 5, 7, 8]).unwrap(),
                OrderSpec::Natural,
            ),
        )]),
        default: (OrderSpec::Natural, OrderSpec::Natural),
    };
    let report = verify_region(&table, Region::new(0, 6, 0, 3).unwrap(), &[Property::S3]).unwrap();
    assert!(!report.is_clean());
    assert_eq!(
        report.violations[0].certificate,
        Certificate::Witness(Witness {
            t1: pt(4, 0),
            t2: pt(5, 2)
        })
    );
    let elapsed = start.elapsed();
    println!("criterion 5 (crafted counterexample certificates): PASS ({elapsed:?})");
}

#[test]
fn criterion_6_agreement_smoothness_equivalence() {
    let start = Instant::now();

    let uniform = agreement_smoothness_check(
        &OrderAssignment::uniform_natural(),
        Region::new(0, 5, 0, 5).unwrap(),
        8,
    )
    .unwrap();
    assert!(uniform.agreement_all && uniform.smooth_all && uniform.consistent);

    let waterline = agreement_smoothness_check(
        &OrderAssignment::Waterline,
        Region::new(-3, 6, -3, 3).unwrap(),
        8,
    )
    .unwrap();
    assert!(!waterline.agreement_all && !waterline.smooth_all && waterline.consistent);
    assert!(waterline.disagreement.is_some());
    assert!(waterline.exhibit.is_some());

    // the counterexample quoted for this criterion: the two orders of
    // the non-smooth exhibit disagree on (0, 4), and that pair is what
    // the proof extraction recovers from the exhibited segments
    let spec1 = OrderSpec::Natural;
    let spec2 = OrderSpec::WaterlineBelow { anchor_x: 3 };
    assert_eq!(spec1.compare(0, 4).unwrap(), std::cmp::Ordering::Less);
    assert_eq!(spec2.compare(0, 4).unwrap(), std::cmp::Ordering::Greater);
    let w = OrderAssignment::Waterline;
    let e1 = segment(&w, pt(0, 0), pt(4, 3)).unwrap();
    let e2 = segment(&w, pt(3, -3), pt(6, 3)).unwrap();
    assert_eq!(order_disagreement(&e1, &e2).unwrap(), Some((0, 4)));
    let direct = in_agreement(pt(0, 0), &spec1, pt(3, -3), &spec2, 8).unwrap();
    assert!(!direct.agree);

    // seeded random uniform assignments: agreement holds trivially, so
    // the exhaustive smoothness scan must come back clean as well
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for trial in 0..200 {
        let spec1 = random_window(&mut rng, 0, 15);
        let spec2 = random_window(&mut rng, -2, 13);
        let a = OrderAssignment::Uniform { spec1, spec2 };
        let report = agreement_smoothness_check(&a, Region::new(0, 2, 0, 2).unwrap(), 6).unwrap();
        assert!(report.consistent, "trial {trial}");
        assert!(report.agreement_all && report.smooth_all, "trial {trial}");
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("criterion 6 (agreement-smoothness equivalence): PASS ({elapsed:?})");
}

#[test]
fn criterion_7_axiom_suite_uniform_natural() {
    let start = Instant::now();
    let a = OrderAssignment::uniform_natural();
    let region = Region::new(-5, 5, -5, 5).unwrap();
    let report = verify_region(&a, region, &Property::ALL).unwrap();
    assert!(report.is_clean(), "violations: {:?}", report.violations);

    // segment-level invariants over every ordered pair
    let points: Vec<Point> = region.points().collect();
    let mut ordered_pairs = 0u64;
    for &p in &points {
        for &q in &points {
            if p == q {
                continue;
            }
            let seg = segment(&a, p, q).unwrap();
            assert!(validate_path(seg.points()).is_ok());
            assert_eq!(seg.first(), p);
            assert_eq!(seg.last(), q);
            assert_eq!(seg.len() as i64, (q.x - p.x).abs() + (q.y - p.y).abs() + 1);
            assert_eq!(segment(&a, q, p).unwrap().reversed(), seg);
            ordered_pairs += 1;
        }
    }
    assert_eq!(ordered_pairs, 121 * 120);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 7 (axiom suite, uniform natural): PASS ({elapsed:?}; {ordered_pairs} ordered pairs)");
}

#[test]
fn criterion_8_metrics_sanity() {
    let start = Instant::now();
    let a = OrderAssignment::uniform_natural();
    for n in [1i64, 2, 4, 8] {
        let q = pt(n, n);
        let seg = segment(&a, pt(0, 0), q).unwrap();
        let r = hausdorff(&seg, pt(0, 0), q, 0.001).unwrap();
        let expected = n as f64 / std::f64::consts::SQRT_2;
        assert!(
            (r.value - expected).abs() <= r.error_bound,
            "n={n}: value {} vs {expected}",
            r.value
        );
    }
    for (p, q) in [
        (pt(0, 0), pt(7, 0)),
        (pt(2, -3), pt(2, 5)),
        (pt(-4, 1), pt(3, 1)),
    ] {
        let seg = segment(&a, p, q).unwrap();
        let r = hausdorff(&seg, p, q, 0.001).unwrap();
        assert_eq!(r.value, 0.0, "axis-aligned {p} to {q}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 8 (metrics sanity): PASS ({elapsed:?})");
}
