//! Minimum-norm point of a 1-, 2- or 3-point simplex, with the triangle case
//! dispatched on a barycentric sign code.
//!
//! For a triangle `A, B, C` the signed sub-areas
//! `σu = B × C`, `σv = C × A`, `σw = A × B` are proportional to the
//! barycentric coordinates of the origin. Each bit of the [`BaryCode`] records
//! whether one of them agrees in sign with their sum, which splits the plane
//! into seven regions:
//!
//! | code | origin lies in            | reduced to            |
//! |------|---------------------------|-----------------------|
//! | 4    | cone beyond `A`           | [`cone_region`] at A  |
//! | 2    | cone beyond `B`           | [`cone_region`] at B  |
//! | 1    | cone beyond `C`           | [`cone_region`] at C  |
//! | 6    | beyond edge `AB`          | [`s1d`] on A, B       |
//! | 5    | beyond edge `AC`          | [`s1d`] on A, C       |
//! | 3    | beyond edge `BC`          | [`s1d`] on B, C       |
//! | 7    | inside the triangle       | full triangle         |

use thiserror::Error;

use crate::geometry::{cross, dot, Vec2};
use crate::support::SimplexVertex;

const SEGMENT_EPS: f64 = 1e-12;
const TRIANGLE_REL_EPS: f64 = 1e-12;

/// Up to three difference-space vertices with their barycentric weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Simplex {
    verts: [SimplexVertex; 3],
    lambdas: [f64; 3],
    len: usize,
}

impl Simplex {
    pub fn point(a: SimplexVertex) -> Self {
        Self {
            verts: [a, a, a],
            lambdas: [1.0, 0.0, 0.0],
            len: 1,
        }
    }

    pub fn segment(a: SimplexVertex, b: SimplexVertex) -> Self {
        Self {
            verts: [a, b, b],
            lambdas: [0.5, 0.5, 0.0],
            len: 2,
        }
    }

    pub fn triangle(a: SimplexVertex, b: SimplexVertex, c: SimplexVertex) -> Self {
        let third = 1.0 / 3.0;
        Self {
            verts: [a, b, c],
            lambdas: [third, third, third],
            len: 3,
        }
    }

    /// Builds a simplex from 1 to 3 vertices; `None` for any other count.
    pub fn from_vertices(verts: &[SimplexVertex]) -> Option<Self> {
        match *verts {
            [a] => Some(Self::point(a)),
            [a, b] => Some(Self::segment(a, b)),
            [a, b, c] => Some(Self::triangle(a, b, c)),
            _ => None,
        }
    }

    fn solved<const N: usize>(verts: [SimplexVertex; N], lambdas: [f64; N]) -> Self {
        let mut s = Self {
            verts: [verts[0]; 3],
            lambdas: [0.0; 3],
            len: N,
        };
        s.verts[..N].copy_from_slice(&verts);
        s.lambdas[..N].copy_from_slice(&lambdas);
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn vertices(&self) -> &[SimplexVertex] {
        &self.verts[..self.len]
    }

    #[inline]
    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas[..self.len]
    }

    /// `Σ λᵢ wᵢ`
    pub fn combination(&self) -> Vec2 {
        self.vertices()
            .iter()
            .zip(self.lambdas())
            .fold(Vec2::ZERO, |acc, (v, &l)| acc + v.w * l)
    }

    /// Appends a vertex. Returns `None` when the simplex is already full.
    pub fn with(&self, extra: SimplexVertex) -> Option<Self> {
        if self.len == 3 {
            return None;
        }
        let mut s = *self;
        s.verts[s.len] = extra;
        s.len += 1;
        Some(s)
    }

    /// True when some vertex's difference point is within `tol` of `w`.
    pub fn contains_point(&self, w: Vec2, tol: f64) -> bool {
        self.vertices().iter().any(|v| (v.w - w).norm() <= tol)
    }
}

/// 3-bit region code of the origin relative to a triangle, in `1..=7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BaryCode(u8);

impl BaryCode {
    pub fn new(code: u8) -> Option<Self> {
        (1..=7).contains(&code).then_some(Self(code))
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    /// Origin strictly inside the triangle.
    pub fn is_inside(self) -> bool {
        self.0 == 7
    }
}

/// Barycode together with the sub-areas it was built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaryCoords {
    pub code: BaryCode,
    pub sigma_u: f64,
    pub sigma_v: f64,
    pub sigma_w: f64,
    pub sum: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum SubdistanceError {
    #[error("triangle is degenerate (signed area sum {sum})")]
    DegenerateTriangle { sum: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubdistanceResult {
    /// Minimal sub-simplex with solved weights.
    pub simplex: Simplex,
    /// Closest point to the origin.
    pub v: Vec2,
}

impl SubdistanceResult {
    fn vertex(a: SimplexVertex) -> Self {
        Self {
            simplex: Simplex::point(a),
            v: a.w,
        }
    }
}

#[inline]
fn same_sign(m: f64, n: f64) -> bool {
    (m > 0.0) == (n > 0.0)
}

/// Closest point of segment `AB` to the origin.
///
/// Nearly coincident endpoints (closer than `1e-12`) collapse to `A`.
pub fn s1d(a: SimplexVertex, b: SimplexVertex) -> SubdistanceResult {
    let ab = b.w - a.w;
    if ab.norm() < SEGMENT_EPS {
        return SubdistanceResult::vertex(a);
    }
    let oa_ab = dot(a.w, ab);
    if oa_ab >= 0.0 {
        return SubdistanceResult::vertex(a);
    }
    let ob_ab = dot(b.w, ab);
    if ob_ab <= 0.0 {
        return SubdistanceResult::vertex(b);
    }
    let sum = oa_ab - ob_ab;
    let lu = -ob_ab / sum;
    let lv = oa_ab / sum;
    SubdistanceResult {
        simplex: Simplex::solved([a, b], [lu, lv]),
        v: a.w * lu + b.w * lv,
    }
}

/// Sub-areas and region code of the origin relative to triangle `ABC`.
///
/// Fails when `|sum|` is below `1e-12 · max(|σu|, |σv|, |σw|, 1)`, i.e. the
/// points are (nearly) collinear.
pub fn compute_barycode(a: Vec2, b: Vec2, c: Vec2) -> Result<BaryCoords, SubdistanceError> {
    let sigma_u = cross(b, c);
    let sigma_v = cross(c, a);
    let sigma_w = cross(a, b);
    let sum = sigma_u + sigma_v + sigma_w;
    let scale = sigma_u.abs().max(sigma_v.abs()).max(sigma_w.abs()).max(1.0);
    if !(sum.abs() >= TRIANGLE_REL_EPS * scale) {
        return Err(SubdistanceError::DegenerateTriangle { sum });
    }
    let code = (same_sign(sum, sigma_w) as u8)
        | ((same_sign(sum, sigma_v) as u8) << 1)
        | ((same_sign(sum, sigma_u) as u8) << 2);
    // The three sub-areas add up to `sum`, so at least one shares its sign.
    debug_assert!(code != 0);
    Ok(BaryCoords {
        code: BaryCode(code),
        sigma_u,
        sigma_v,
        sigma_w,
        sum,
    })
}

/// Which vertex of a triangle a cone region hangs off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeVertex {
    A,
    B,
    C,
}

/// Origin in the cone beyond vertex `V` of triangle `tau`.
///
/// A right or acute angle at `V` means `V` itself is closest. Otherwise the
/// origin may project onto one of the two incident edges; whichever edge the
/// origin projects inside of is handed to [`s1d`].
pub fn cone_region(tau: &Simplex, vertex: ConeVertex) -> SubdistanceResult {
    let [a, b, c] = tau.verts;
    let (v, m, n) = match vertex {
        ConeVertex::A => (a, b, c),
        ConeVertex::B => (b, c, a),
        ConeVertex::C => (c, a, b),
    };
    cone_region_at(v, m, n)
}

#[inline]
fn cone_region_at(v: SimplexVertex, m: SimplexVertex, n: SimplexVertex) -> SubdistanceResult {
    let mv = v.w - m.w;
    let nv = v.w - n.w;
    if dot(mv, nv) < 0.0 {
        if dot(v.w, mv) > 0.0 {
            return s1d(v, m);
        }
        if dot(v.w, nv) > 0.0 {
            return s1d(v, n);
        }
    }
    SubdistanceResult::vertex(v)
}

/// Closest point of triangle `ABC` to the origin.
///
/// Collinear input falls back to the best of the three edges, preferring
/// `AB`, then `BC`, then `CA` on ties.
pub fn s2d(a: SimplexVertex, b: SimplexVertex, c: SimplexVertex) -> SubdistanceResult {
    let coords = match compute_barycode(a.w, b.w, c.w) {
        Ok(coords) => coords,
        Err(SubdistanceError::DegenerateTriangle { .. }) => return degenerate_triangle(a, b, c),
    };
    match coords.code.0 {
        1 => cone_region_at(c, a, b),
        2 => cone_region_at(b, c, a),
        3 => s1d(b, c),
        4 => cone_region_at(a, b, c),
        5 => s1d(a, c),
        6 => s1d(a, b),
        _ => {
            let lu = coords.sigma_u / coords.sum;
            let lv = coords.sigma_v / coords.sum;
            let lw = 1.0 - lu - lv;
            SubdistanceResult {
                simplex: Simplex::solved([a, b, c], [lu, lv, lw]),
                v: a.w * lu + b.w * lv + c.w * lw,
            }
        }
    }
}

fn degenerate_triangle(a: SimplexVertex, b: SimplexVertex, c: SimplexVertex) -> SubdistanceResult {
    let mut best = s1d(a, b);
    let mut best_norm = best.v.norm_squared();
    for candidate in [s1d(b, c), s1d(c, a)] {
        let norm = candidate.v.norm_squared();
        if norm < best_norm {
            best = candidate;
            best_norm = norm;
        }
    }
    best
}

/// Dispatches on simplex size.
pub fn subdistance(tau: &Simplex) -> SubdistanceResult {
    let v = tau.vertices();
    match tau.len {
        3 => s2d(v[0], v[1], v[2]),
        2 => s1d(v[0], v[1]),
        _ => SubdistanceResult::vertex(v[0]),
    }
}
