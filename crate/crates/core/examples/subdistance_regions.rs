//! Barycentric sign codes of the triangle step, and the feature each selects.
//!
//! cargo run --example subdistance_regions

use gjk2d::subdistance::{compute_barycode, s2d};
use gjk2d::{SimplexVertex, Vec2};

fn main() {
    let (a, b, c) = (
        Vec2::new(0.0, 0.0),
        Vec2::new(4.0, 0.0),
        Vec2::new(1.0, 3.0),
    );
    // shift the triangle so each query point becomes the origin
    let queries = [
        ("interior", Vec2::new(1.5, 1.0)),
        ("past edge AB", Vec2::new(2.0, -1.0)),
        ("past edge BC", Vec2::new(4.0, 2.0)),
        ("past edge CA", Vec2::new(-1.0, 1.5)),
        ("beyond A", Vec2::new(-1.0, -1.0)),
        ("beyond B", Vec2::new(5.0, -1.0)),
        ("beyond C", Vec2::new(1.0, 4.0)),
    ];
    for (label, x) in queries {
        let (a, b, c) = (a - x, b - x, c - x);
        let code = compute_barycode(a, b, c)
            .expect("non-degenerate triangle")
            .code;
        let sv = SimplexVertex::from_point;
        let r = s2d(sv(a), sv(b), sv(c));
        let closest = r.v + x;
        println!(
            "{label:>13}: code {} ({:03b}), keeps {} vertices, closest ({:.3}, {:.3})",
            code.get(),
            code.get(),
            r.simplex.len(),
            closest.x,
            closest.y
        );
    }
}
