//! Warm-started hill-climbing support versus a linear scan.
//!
//! cargo run --release --example hill_climbing

use std::hint::black_box;
use std::time::Instant;

use gjk2d::datasets::random_convex_polygon;
use gjk2d::support::{support_brute, support_hill_climb};
use gjk2d::Vec2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let poly = random_convex_polygon(64, &mut rng, 1.0).unwrap();
    // directions sweeping slowly, as between consecutive GJK iterations
    let dirs: Vec<Vec2> = (0..10_000)
        .map(|i| {
            let t = i as f64 * 1e-3;
            Vec2::new(t.cos(), t.sin())
        })
        .collect();

    let start = Instant::now();
    let mut scan = Vec::with_capacity(dirs.len());
    for &d in &dirs {
        scan.push(black_box(support_brute(&poly, d)).index);
    }
    let scan_time = start.elapsed();

    let start = Instant::now();
    let mut warm = 0;
    let mut climb = Vec::with_capacity(dirs.len());
    for &d in &dirs {
        warm = black_box(support_hill_climb(&poly, d, warm)).index;
        climb.push(warm);
    }
    let climb_time = start.elapsed();

    assert_eq!(scan, climb);
    println!("64-gon, {} directions, identical answers", dirs.len());
    println!("linear scan:  {scan_time:?}");
    println!("hill climbing: {climb_time:?}");
}
