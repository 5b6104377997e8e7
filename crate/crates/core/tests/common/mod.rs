#![allow(dead_code)]

use gjk2d::datasets::random_convex_polygon;
use gjk2d::{ConvexPolygon, Transform2, Vec2};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Polygon with `n` vertices from a seed, placed by a rigid transform.
pub fn polygon(n: usize, seed: u64, scale: f64, angle: f64, offset: Vec2) -> ConvexPolygon {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_convex_polygon(n, &mut rng, scale)
        .unwrap()
        .transformed(&Transform2::new(angle, offset))
}

pub fn arb_vec(range: f64) -> impl Strategy<Value = Vec2> {
    (-range..range, -range..range).prop_map(|(x, y)| Vec2::new(x, y))
}

pub fn arb_polygon() -> impl Strategy<Value = ConvexPolygon> {
    (
        3usize..=24,
        any::<u64>(),
        0.2f64..3.0,
        -3.2f64..3.2,
        arb_vec(4.0),
    )
        .prop_map(|(n, seed, scale, angle, offset)| polygon(n, seed, scale, angle, offset))
}

pub fn arb_direction() -> impl Strategy<Value = Vec2> {
    arb_vec(10.0).prop_filter("nonzero direction", |d| d.norm() > 1e-6)
}

/// Origin inside the closed triangle, by three half-plane tests against the
/// triangle's orientation.
pub fn origin_in_triangle(a: Vec2, b: Vec2, c: Vec2) -> bool {
    let o = (b - a).cross(c - a);
    let side = |p: Vec2, q: Vec2| (q - p).cross(-p) * o;
    side(a, b) >= 0.0 && side(b, c) >= 0.0 && side(c, a) >= 0.0
}

/// Smallest absolute half-plane margin of the origin, scaled by edge length.
pub fn origin_edge_margin(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    let m = |p: Vec2, q: Vec2| (q - p).cross(-p).abs() / (q - p).norm().max(f64::MIN_POSITIVE);
    m(a, b).min(m(b, c)).min(m(c, a))
}

pub const ORACLE_SAMPLES: usize = 64;

/// Distance from the origin to segment `PQ`: `ORACLE_SAMPLES + 1` samples,
/// then the best one refined to the exact foot of the perpendicular. Returns
/// the refined distance and the raw sampled minimum.
pub fn segment_oracle(p: Vec2, q: Vec2) -> (f64, f64) {
    let d = q - p;
    let mut best_t = 0.0;
    let mut best = f64::INFINITY;
    for i in 0..=ORACLE_SAMPLES {
        let t = i as f64 / ORACLE_SAMPLES as f64;
        let dist = (p + d * t).norm();
        if dist < best {
            best = dist;
            best_t = t;
        }
    }
    // the true minimiser lies within one sample of the best one
    let h = 1.0 / ORACLE_SAMPLES as f64;
    let (lo, hi) = ((best_t - h).max(0.0), (best_t + h).min(1.0));
    let dd = d.norm_squared();
    let t = if dd > 0.0 {
        (-p.dot(d) / dd).clamp(lo, hi)
    } else {
        lo
    };
    ((p + d * t).norm(), best)
}

/// Distance from the origin to a triangle: zero inside, else the best edge.
pub fn triangle_oracle(a: Vec2, b: Vec2, c: Vec2) -> (f64, f64) {
    let mut sampled = f64::INFINITY;
    let mut refined = f64::INFINITY;
    for (p, q) in [(a, b), (b, c), (c, a)] {
        let (r, s) = segment_oracle(p, q);
        refined = refined.min(r);
        sampled = sampled.min(s);
    }
    if origin_in_triangle(a, b, c) {
        (0.0, sampled)
    } else {
        (refined, sampled)
    }
}
