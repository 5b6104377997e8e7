//! Reference implementations: separating-axis test and brute-force distance.
//!
//! Nothing here touches the GJK, subdistance or support code, so these can
//! serve as independent oracles for them.

use crate::datasets::convex_hull;
use crate::geometry::{ConvexPolygon, Vec2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosestFeature {
    VertexVertex,
    VertexEdge,
    Overlap,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    pub distance: f64,
    pub closest_feature: ClosestFeature,
}

fn project(poly: &ConvexPolygon, axis: Vec2) -> (f64, f64) {
    poly.vertices()
        .iter()
        .map(|v| v.x * axis.x + v.y * axis.y)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), d| {
            (lo.min(d), hi.max(d))
        })
}

fn edge_normals(poly: &ConvexPolygon) -> impl Iterator<Item = Vec2> + '_ {
    let verts = poly.vertices();
    let n = verts.len();
    (0..n).map(move |i| {
        let e = verts[(i + 1) % n] - verts[i];
        let len = (e.x * e.x + e.y * e.y).sqrt();
        Vec2::new(e.y / len, -e.x / len)
    })
}

/// Separating-axis test over all edge normals of both polygons. Intervals are
/// closed, so touching polygons intersect.
pub fn sat_intersects(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    for axis in edge_normals(p).chain(edge_normals(q)) {
        let (p_lo, p_hi) = project(p, axis);
        let (q_lo, q_hi) = project(q, axis);
        if p_hi < q_lo || q_hi < p_lo {
            return false;
        }
    }
    true
}

/// Smallest interval overlap over all unit edge normals. Positive values
/// measure penetration along the best axis; negative values mean that axis
/// separates the polygons.
pub fn sat_overlap_depth(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    edge_normals(p)
        .chain(edge_normals(q))
        .map(|axis| {
            let (p_lo, p_hi) = project(p, axis);
            let (q_lo, q_hi) = project(q, axis);
            p_hi.min(q_hi) - p_lo.max(q_lo)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Distance from `p` to segment `ab` by clamped projection.
pub fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let ap = p - a;
    let len2 = ab.x * ab.x + ab.y * ab.y;
    let t = if len2 > 0.0 {
        ((ap.x * ab.x + ap.y * ab.y) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let foot = a + ab * t;
    (p - foot).norm()
}

fn vertex_to_edges(from: &ConvexPolygon, to: &ConvexPolygon, best: &mut (f64, ClosestFeature)) {
    let edges = to.vertices();
    let n = edges.len();
    for &p in from.vertices() {
        for i in 0..n {
            let a = edges[i];
            let b = edges[(i + 1) % n];
            let d = point_segment_distance(p, a, b);
            if d < best.0 {
                let at_vertex = d == (p - a).norm() || d == (p - b).norm();
                let feature = if at_vertex {
                    ClosestFeature::VertexVertex
                } else {
                    ClosestFeature::VertexEdge
                };
                *best = (d, feature);
            }
        }
    }
}

/// Exact distance between two convex polygons by exhaustive vertex-edge
/// search, zero when SAT reports intersection.
pub fn oracle_distance(p: &ConvexPolygon, q: &ConvexPolygon) -> OracleReport {
    if sat_intersects(p, q) {
        return OracleReport {
            distance: 0.0,
            closest_feature: ClosestFeature::Overlap,
        };
    }
    let mut best = (f64::INFINITY, ClosestFeature::VertexEdge);
    vertex_to_edges(p, q, &mut best);
    vertex_to_edges(q, p, &mut best);
    OracleReport {
        distance: best.0,
        closest_feature: best.1,
    }
}

/// Builds `P - Q` explicitly as the hull of all vertex differences and tests
/// whether it contains the origin (closed).
pub fn explicit_cso_contains_origin(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    let diffs: Vec<Vec2> = p
        .vertices()
        .iter()
        .flat_map(|&a| q.vertices().iter().map(move |&b| a - b))
        .collect();
    let hull = convex_hull(&diffs);
    let n = hull.len();
    (0..n).all(|i| {
        let a = hull[i];
        let b = hull[(i + 1) % n];
        let e = b - a;
        // origin on the left of (or on) every edge
        e.x * (-a.y) - e.y * (-a.x) >= 0.0
    })
}
