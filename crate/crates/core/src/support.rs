//! Support mappings for polygons and for their Minkowski difference.

use crate::geometry::{dot, ConvexPolygon, Vec2};

/// A support vertex of a single polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupportResult {
    pub point: Vec2,
    pub index: usize,
}

/// A point of the Minkowski difference `P - Q` together with the vertices it
/// came from. `w == p - q` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SimplexVertex {
    pub w: Vec2,
    pub p: Vec2,
    pub q: Vec2,
    pub ip: usize,
    pub iq: usize,
}

impl SimplexVertex {
    pub fn new(p: Vec2, q: Vec2, ip: usize, iq: usize) -> Self {
        Self {
            w: p - q,
            p,
            q,
            ip,
            iq,
        }
    }

    /// A vertex carrying only a difference point; `p = w`, `q = 0`.
    pub fn from_point(w: Vec2) -> Self {
        Self::new(w, Vec2::ZERO, 0, 0)
    }
}

/// Linear scan for the vertex maximizing `dot(v, dir)`. The lowest index wins
/// ties, so a zero direction yields vertex 0.
pub fn support_brute(poly: &ConvexPolygon, dir: Vec2) -> SupportResult {
    let verts = poly.vertices();
    let mut best = 0;
    let mut best_dot = dot(verts[0], dir);
    for (i, &v) in verts.iter().enumerate().skip(1) {
        let d = dot(v, dir);
        if d > best_dot {
            best = i;
            best_dot = d;
        }
    }
    SupportResult {
        point: verts[best],
        index: best,
    }
}

/// Local search along the vertex ring starting at `start`.
///
/// Steps toward whichever neighbour is strictly better and keeps walking that
/// way until no improvement. On a strictly convex polygon `dot(v, dir)` is
/// unimodal around the ring, so the local maximum is the global one.
pub fn support_hill_climb(poly: &ConvexPolygon, dir: Vec2, start: usize) -> SupportResult {
    let verts = poly.vertices();
    let n = verts.len();
    let mut cur = start;
    let mut cur_dot = dot(verts[cur], dir);

    let next = if cur + 1 == n { 0 } else { cur + 1 };
    let next_dot = dot(verts[next], dir);
    if next_dot > cur_dot {
        cur = next;
        cur_dot = next_dot;
        loop {
            let next = if cur + 1 == n { 0 } else { cur + 1 };
            let next_dot = dot(verts[next], dir);
            if next_dot > cur_dot {
                cur = next;
                cur_dot = next_dot;
            } else {
                break;
            }
        }
    } else {
        loop {
            let prev = if cur == 0 { n - 1 } else { cur - 1 };
            let prev_dot = dot(verts[prev], dir);
            if prev_dot > cur_dot {
                cur = prev;
                cur_dot = prev_dot;
            } else {
                break;
            }
        }
    }
    SupportResult {
        point: verts[cur],
        index: cur,
    }
}

/// Support point of `P - Q` in direction `dir`: the support of `P` along
/// `dir` minus the support of `Q` along `-dir`.
///
/// With `warm = Some((ip, iq))` both polygon supports hill-climb from those
/// indices; otherwise they are found by linear scan.
#[inline]
pub fn cso_support(
    p: &ConvexPolygon,
    q: &ConvexPolygon,
    dir: Vec2,
    warm: Option<(usize, usize)>,
) -> SimplexVertex {
    let (sp, sq) = match warm {
        Some((ip, iq)) => (
            support_hill_climb(p, dir, ip),
            support_hill_climb(q, -dir, iq),
        ),
        None => (support_brute(p, dir), support_brute(q, -dir)),
    };
    SimplexVertex::new(sp.point, sq.point, sp.index, sq.index)
}

const DIRECTION_FLOOR: f64 = 1e-12;

/// Starting direction for the GJK loops: a point of `P - Q` taken from the
/// vertex centroids, with fallbacks when it is (nearly) zero.
pub fn initial_direction(p: &ConvexPolygon, q: &ConvexPolygon) -> Vec2 {
    let d = p.vertex_centroid() - q.vertex_centroid();
    if d.norm() >= DIRECTION_FLOOR {
        return d;
    }
    let d = p.vertex(0) - q.vertex(0);
    if d.norm() >= DIRECTION_FLOOR {
        return d;
    }
    Vec2::new(1.0, 0.0)
}
