//! Distance between two polygons, with witness points and loop statistics.
//!
//! cargo run --example distance_query

use gjk2d::{distance, ConvexPolygon, QueryOptions, Transform2, Vec2};

fn main() {
    let hexagon = ConvexPolygon::from_points(&[
        [1.0, 0.0],
        [0.5, 0.866],
        [-0.5, 0.866],
        [-1.0, 0.0],
        [-0.5, -0.866],
        [0.5, -0.866],
    ])
    .expect("valid hexagon");
    let wedge = ConvexPolygon::from_points(&[[0.0, 0.0], [2.0, -0.5], [2.0, 0.5]])
        .expect("valid wedge")
        .transformed(&Transform2::new(0.4, Vec2::new(2.5, 0.8)));

    for opts in [QueryOptions::brute_force(), QueryOptions::hill_climbing()] {
        let r = distance(&hexagon, &wedge, &opts);
        println!(
            "hill climbing {:5}: distance {:.6} in {} iterations, {} support calls ({:?})",
            opts.use_hill_climbing, r.distance, r.iterations, r.support_calls, r.termination
        );
        println!(
            "  witness on hexagon ({:.4}, {:.4})",
            r.witness_p.x, r.witness_p.y
        );
        println!(
            "  witness on wedge   ({:.4}, {:.4})",
            r.witness_q.x, r.witness_q.y
        );
    }

    // moving the wedge onto the hexagon drives the distance to zero
    let overlapping = wedge.translated(Vec2::new(-2.0, -0.5));
    let r = distance(&hexagon, &overlapping, &QueryOptions::default());
    println!(
        "after overlap: distance {} ({:?})",
        r.distance, r.termination
    );
}
