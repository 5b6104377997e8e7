mod common;

use common::{arb_polygon, arb_vec};
use gjk2d::baseline::{oracle_distance, sat_intersects, sat_overlap_depth};
use gjk2d::gjk::distance_traced;
use gjk2d::{distance, intersects, CollisionExit, QueryOptions, Transform2, Vec2};
use proptest::prelude::*;

fn tol(oracle: f64) -> f64 {
    1e-7 * oracle + 1e-9
}

fn both_options() -> [QueryOptions; 2] {
    [QueryOptions::brute_force(), QueryOptions::hill_climbing()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn distance_matches_oracle(p in arb_polygon(), q in arb_polygon()) {
        let oracle = oracle_distance(&p, &q).distance;
        for opts in both_options() {
            let d = distance(&p, &q, &opts).distance;
            prop_assert!((d - oracle).abs() <= tol(oracle), "gjk {d} oracle {oracle}");
        }
    }

    #[test]
    fn distance_is_symmetric(p in arb_polygon(), q in arb_polygon()) {
        let opts = QueryOptions::default();
        let pq = distance(&p, &q, &opts).distance;
        let qp = distance(&q, &p, &opts).distance;
        prop_assert!((pq - qp).abs() <= tol(pq));
    }

    #[test]
    fn distance_is_rigid_invariant(
        p in arb_polygon(),
        q in arb_polygon(),
        angle in -3.2f64..3.2,
        offset in arb_vec(50.0),
    ) {
        let t = Transform2::new(angle, offset);
        let opts = QueryOptions::default();
        let before = distance(&p, &q, &opts).distance;
        let after = distance(&p.transformed(&t), &q.transformed(&t), &opts).distance;
        // coordinates up to ~60 lose a few ulps under rotation
        prop_assert!((before - after).abs() <= tol(before) + 1e-12 * 64.0);
    }

    #[test]
    fn closest_vector_never_grows(p in arb_polygon(), q in arb_polygon()) {
        for opts in both_options() {
            let (_, trace) = distance_traced(&p, &q, &opts);
            for w in trace.norms.windows(2) {
                prop_assert!(w[1] <= w[0] + 1e-12, "{} -> {}", w[0], w[1]);
            }
        }
    }

    #[test]
    fn witnesses_lie_on_their_polygons(p in arb_polygon(), q in arb_polygon()) {
        let r = distance(&p, &q, &QueryOptions::default());
        prop_assume!(r.distance > 0.0);
        prop_assert!(p.contains(r.witness_p, 1e-9));
        prop_assert!(q.contains(r.witness_q, 1e-9));
        prop_assert!(((r.witness_p - r.witness_q).norm() - r.distance).abs() <= 1e-9);
        prop_assert!((r.witness_p - r.witness_q - r.separating_vector).norm() <= 1e-9);
    }

    #[test]
    fn binary_agrees_with_sat_off_the_boundary(p in arb_polygon(), q in arb_polygon()) {
        let oracle = oracle_distance(&p, &q).distance;
        prop_assume!(oracle > 1e-9 || sat_overlap_depth(&p, &q) > 1e-9);
        let sat = sat_intersects(&p, &q);
        for opts in both_options() {
            let c = intersects(&p, &q, &opts);
            prop_assert_eq!(c.colliding, sat);
        }
    }

    #[test]
    fn early_exits_are_sound(p in arb_polygon(), q in arb_polygon()) {
        let sat = sat_intersects(&p, &q);
        for opts in both_options() {
            match intersects(&p, &q, &opts).exit {
                CollisionExit::SeparatingHyperplane => prop_assert!(!sat),
                CollisionExit::VerticalAngleEnclosure => prop_assert!(sat),
                _ => {}
            }
        }
    }

    #[test]
    fn binary_never_needs_more_supports(p in arb_polygon(), q in arb_polygon()) {
        for opts in both_options() {
            prop_assert!(intersects(&p, &q, &opts).support_calls <= distance(&p, &q, &opts).support_calls);
        }
    }

    #[test]
    fn hill_climbing_does_not_change_the_answer(p in arb_polygon(), q in arb_polygon()) {
        let a = distance(&p, &q, &QueryOptions::brute_force()).distance;
        let b = distance(&p, &q, &QueryOptions::hill_climbing()).distance;
        prop_assert!((a - b).abs() <= tol(a));
    }
}

#[test]
fn identical_polygons_collide() {
    let p = common::polygon(9, 11, 1.0, 0.3, Vec2::new(2.0, -1.0));
    let opts = QueryOptions::default();
    assert_eq!(distance(&p, &p, &opts).distance, 0.0);
    assert!(intersects(&p, &p, &opts).colliding);
}
