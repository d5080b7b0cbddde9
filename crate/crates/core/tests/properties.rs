use proptest::prelude::*;

use shoelace_pip::classify::{
    area_with_insertion, classify_extra_vertex_best_edge, classify_half_plane_oracle,
    insertion_delta,
};
use shoelace_pip::containment::{polygon_inside, segments_intersect};
use shoelace_pip::geom::{shoelace_signed_sum, triangle_signed2};
use shoelace_pip::harness::{differential_fuzz, FuzzConfig, PointMode};
use shoelace_pip::polygen::{self, GenConfig};
use shoelace_pip::{AlgorithmId, Classification, Orientation, Point, Polygon, Tolerance};

fn convex(n: usize, seed: u64, ccw: bool) -> Polygon {
    let mut cfg = GenConfig::new(n, seed);
    if ccw {
        cfg.orientation = Orientation::CounterClockwise;
    }
    polygen::gen_convex(&cfg).unwrap()
}

fn coord() -> impl Strategy<Value = f64> {
    -1e3..1e3f64
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

fn close(a: f64, b: f64, scale: f64) -> bool {
    (a - b).abs() <= 1e-9 + 1e-12 * scale
}

proptest! {
    #[test]
    fn delta_equals_triangle_and_full_recompute(
        n in 3usize..40, seed: u64, ccw: bool, edge in 0usize..40, p in point()
    ) {
        let poly = convex(n, seed, ccw);
        let i = edge % n;
        let (a, b) = poly.edge(i);
        let d = insertion_delta(&poly, i, p).unwrap();
        let scale = poly.signed_sum().abs() + d.abs() + 1e6;
        prop_assert!(close(d, triangle_signed2(a, p, b), scale));
        let full = area_with_insertion(&poly, i, p).unwrap();
        prop_assert!(close(full, 0.5 * (poly.signed_sum() + d).abs(), scale));
    }

    #[test]
    fn rotation_and_reversal_of_shoelace(n in 3usize..64, seed: u64, k in 0usize..64) {
        let poly = convex(n, seed, false);
        let tol = Tolerance::default();
        let rotated = shoelace_signed_sum(poly.rotated(k).vertices()).unwrap();
        prop_assert!((rotated - poly.signed_sum()).abs() <= tol.abs_eps);
        prop_assert!((poly.reversed().signed_sum() + poly.signed_sum()).abs() <= tol.abs_eps);
    }

    #[test]
    fn triangle_equals_three_vertex_shoelace(a in point(), b in point(), c in point()) {
        let direct = triangle_signed2(a, b, c);
        let summed = shoelace_signed_sum(&[a, b, c]).unwrap();
        // both evaluate the same determinant; products reach ~4e6
        prop_assert!(close(direct, summed, 4e6));
    }

    // Arbitrary query points, not just generator fixtures.
    #[test]
    fn best_edge_matches_oracle_away_from_boundary(
        n in 3usize..64, seed: u64, ccw: bool, p in (-300.0..300.0f64, -300.0..300.0f64)
    ) {
        let poly = convex(n, seed, ccw);
        let p = Point::new(p.0, p.1);
        let dist = poly
            .edges()
            .map(|(a, b)| {
                let ab = b - a;
                let t = ((p - a).dot(ab) / ab.dot(ab)).clamp(0.0, 1.0);
                (a + ab * t - p).norm()
            })
            .fold(f64::INFINITY, f64::min);
        prop_assume!(dist > 1e-6 * poly.diameter());
        let tol = Tolerance::default();
        let truth = classify_half_plane_oracle(&poly, p, &tol).unwrap();
        for alg in [
            AlgorithmId::ExtraVertexBestEdge,
            AlgorithmId::Triangulation,
            AlgorithmId::RayCasting,
            AlgorithmId::AngleSum,
        ] {
            prop_assert_eq!(alg.classify(&poly, p, &tol).unwrap(), truth, "{}", alg);
        }
    }

    #[test]
    fn segments_intersect_is_symmetric(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(a != b && c != d);
        let r = segments_intersect(a, b, c, d).unwrap();
        prop_assert_eq!(segments_intersect(c, d, a, b).unwrap(), r);
        prop_assert_eq!(segments_intersect(b, a, c, d).unwrap(), r);
        prop_assert_eq!(segments_intersect(a, b, d, c).unwrap(), r);
    }

    #[test]
    fn segment_intersection_on_integer_grid(
        a in (0i32..6, 0i32..6), b in (0i32..6, 0i32..6), c in (0i32..6, 0i32..6), d in (0i32..6, 0i32..6)
    ) {
        let p = |(x, y): (i32, i32)| Point::new(x as f64, y as f64);
        let (a, b, c, d) = (p(a), p(b), p(c), p(d));
        prop_assume!(a != b && c != d);
        // brute force: walk both segments in tiny rational steps
        let steps = 120;
        let on = |s: Point, e: Point, q: Point| {
            triangle_signed2(s, e, q) == 0.0
                && q.x >= s.x.min(e.x) && q.x <= s.x.max(e.x)
                && q.y >= s.y.min(e.y) && q.y <= s.y.max(e.y)
        };
        let mut brute = false;
        for k in 0..=steps {
            let t = k as f64 / steps as f64;
            if on(c, d, a + (b - a) * t) || on(a, b, c + (d - c) * t) {
                brute = true;
                break;
            }
        }
        // proper crossings can fall between sample points; check those exactly
        let d1 = triangle_signed2(c, d, a);
        let d2 = triangle_signed2(c, d, b);
        let d3 = triangle_signed2(a, b, c);
        let d4 = triangle_signed2(a, b, d);
        brute |= d1 * d2 < 0.0 && d3 * d4 < 0.0;
        prop_assert_eq!(segments_intersect(a, b, c, d).unwrap(), brute);
    }

    #[test]
    fn containment_is_transitive(seed: u64, n in 3usize..20) {
        let tol = Tolerance::default();
        let outer = convex(n, seed, false);
        let c = outer.vertex_centroid();
        let shrink = |poly: &Polygon, k: f64| poly.map(|v| c + (v - c) * k).unwrap();
        let mid = shrink(&outer, 0.7);
        let inner = shrink(&outer, 0.4);
        prop_assert!(polygon_inside(&outer, &mid, &tol).unwrap());
        prop_assert!(polygon_inside(&mid, &inner, &tol).unwrap());
        prop_assert!(polygon_inside(&outer, &inner, &tol).unwrap());
        prop_assert!(!polygon_inside(&inner, &outer, &tol).unwrap());
    }
}

#[test]
fn generator_outputs_validate_and_are_convex() {
    for n in [3, 4, 5, 8, 20, 64, 180] {
        for seed in 0..100 {
            let poly = polygen::gen_convex(&GenConfig::new(n, seed)).unwrap();
            assert_eq!(poly.len(), n);
            assert!(poly.is_convex(), "n={n} seed={seed}");
            let again = polygen::gen_convex(&GenConfig::new(n, seed)).unwrap();
            assert_eq!(poly, again);
        }
    }
}

#[test]
fn generator_oracle_closed_loop() {
    let tol = Tolerance::default();
    for i in 0..10_000u64 {
        let poly = convex(3 + (i % 62) as usize, i, i % 2 == 0);
        let (p, want) = match i % 3 {
            0 => (
                polygen::gen_point_inside(&poly, i).unwrap(),
                Classification::Inside,
            ),
            1 => (
                polygen::gen_point_outside(&poly, i).unwrap(),
                Classification::Outside,
            ),
            _ => (
                polygen::gen_point_on_edge(&poly, i),
                Classification::OnBoundary,
            ),
        };
        assert_eq!(
            classify_half_plane_oracle(&poly, p, &tol).unwrap(),
            want,
            "case {i}"
        );
        if want == Classification::OnBoundary {
            assert_eq!(
                classify_extra_vertex_best_edge(&poly, p, &tol).unwrap(),
                want
            );
        }
    }
}

#[test]
fn fuzzer_is_deterministic_and_best_edge_is_clean() {
    let cfg = FuzzConfig::new(17, 10_000, vec![AlgorithmId::ExtraVertexBestEdge]);
    assert!(differential_fuzz(&cfg).unwrap().is_empty());

    let mut mixed = FuzzConfig::new(
        23,
        2_000,
        vec![AlgorithmId::ExtraVertexAppend, AlgorithmId::RayCasting],
    );
    let first = differential_fuzz(&mixed).unwrap();
    assert_eq!(first, differential_fuzz(&mixed).unwrap());
    assert!(first
        .iter()
        .all(|d| d.algorithm == AlgorithmId::ExtraVertexAppend));

    // away from the tolerance band every baseline agrees too
    mixed.mode = PointMode::NearBoundary;
    mixed.algorithms = vec![
        AlgorithmId::ExtraVertexBestEdge,
        AlgorithmId::Triangulation,
        AlgorithmId::RayCasting,
        AlgorithmId::AngleSum,
    ];
    assert!(differential_fuzz(&mixed).unwrap().is_empty());
}
