//! Binary collision test and its exit reasons.
//!
//! cargo run --example collision_check

use gjk2d::{intersects, ConvexPolygon, QueryOptions, Vec2};

fn main() {
    let square =
        ConvexPolygon::from_points(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
    let opts = QueryOptions::default();

    for (label, offset) in [
        ("far apart", Vec2::new(3.0, 0.0)),
        ("half overlap", Vec2::new(0.5, 0.2)),
        ("shared edge", Vec2::new(1.0, 0.0)),
        ("tiny gap", Vec2::new(1.0 + 1e-6, 0.0)),
    ] {
        let other = square.translated(offset);
        let r = intersects(&square, &other, &opts);
        println!(
            "{label:>12}: colliding {:5} after {} iterations via {:?}",
            r.colliding, r.iterations, r.exit
        );
    }
}
