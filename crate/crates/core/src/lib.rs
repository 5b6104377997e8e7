//! Planar GJK distance and collision queries between convex polygons.
//!
//! The triangle step of the subdistance solver classifies the origin with a
//! 3-bit barycentric sign code instead of testing Voronoi regions one by one;
//! see [`subdistance`]. On top of it sit the distance query with witness
//! points ([`gjk::distance`]) and a binary collision test with two extra
//! early exits ([`gjk::intersects`]).
//!
//! ```
//! use gjk2d::{distance, intersects, ConvexPolygon, QueryOptions, Vec2};
//!
//! let a = ConvexPolygon::from_points(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
//! let b = a.translated(Vec2::new(3.0, 0.0));
//! let opts = QueryOptions::default();
//! assert!((distance(&a, &b, &opts).distance - 2.0).abs() < 1e-12);
//! assert!(!intersects(&a, &b, &opts).colliding);
//! ```
//!
//! Also included: brute-force and SAT baselines ([`baseline`]), seeded
//! dataset generation ([`datasets`]), an oracle cross-check harness
//! ([`check`]) and a timing harness ([`bench`]).

// `!(x > 0.0)` deliberately rejects NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod baseline;
pub mod bench;
pub mod check;
pub mod cli;
pub mod datasets;
pub mod geometry;
pub mod gjk;
pub mod subdistance;
pub mod support;

pub use geometry::{
    apply_transform, cross, dot, validate_polygon, ConvexPolygon, PolygonError, Transform2, Vec2,
};
pub use gjk::{
    distance, intersects, witness_points, CollisionExit, CollisionResult, DistanceResult,
    QueryOptions, Termination,
};
pub use subdistance::{BaryCode, Simplex, SubdistanceResult};
pub use support::SimplexVertex;
