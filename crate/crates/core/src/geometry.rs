//! Planar vectors, rigid transforms and validated convex polygons.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A point or direction in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn dot(self, other: Vec2) -> f64 {
        dot(self, other)
    }

    #[inline]
    pub fn cross(self, other: Vec2) -> f64 {
        cross(self, other)
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Rotates counter-clockwise by the angle whose cosine and sine are given.
    #[inline]
    pub fn rotated(self, cos: f64, sin: f64) -> Vec2 {
        Vec2::new(cos * self.x - sin * self.y, sin * self.x + cos * self.y)
    }
}

impl From<[f64; 2]> for Vec2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Vec2::new(x, y)
    }
}

impl From<Vec2> for [f64; 2] {
    fn from(v: Vec2) -> Self {
        [v.x, v.y]
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    #[inline]
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl AddAssign for Vec2 {
    #[inline]
    fn add_assign(&mut self, rhs: Vec2) {
        self.x += rhs.x;
        self.y += rhs.y;
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    #[inline]
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    #[inline]
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    #[inline]
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl Mul<Vec2> for f64 {
    type Output = Vec2;
    #[inline]
    fn mul(self, v: Vec2) -> Vec2 {
        v * self
    }
}

#[inline]
pub fn dot(a: Vec2, b: Vec2) -> f64 {
    a.x * b.x + a.y * b.y
}

/// The scalar (z-component) cross product `a.x * b.y - a.y * b.x`.
#[inline]
pub fn cross(a: Vec2, b: Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// A rigid motion: rotate about the origin, then translate.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Transform2 {
    /// Counter-clockwise angle in radians.
    pub rotation: f64,
    pub translation: Vec2,
}

impl Transform2 {
    pub const IDENTITY: Transform2 = Transform2 {
        rotation: 0.0,
        translation: Vec2::ZERO,
    };

    pub fn new(rotation: f64, translation: Vec2) -> Self {
        Self {
            rotation,
            translation,
        }
    }

    pub fn translation(translation: Vec2) -> Self {
        Self::new(0.0, translation)
    }

    pub fn rotation(rotation: f64) -> Self {
        Self::new(rotation, Vec2::ZERO)
    }

    pub fn apply_point(&self, p: Vec2) -> Vec2 {
        let (sin, cos) = self.rotation.sin_cos();
        p.rotated(cos, sin) + self.translation
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolygonError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    FewerThanThreeVertices(usize),
    #[error("vertex {index} has a non-finite coordinate")]
    NonFiniteCoordinate { index: usize },
    #[error("vertices are not in counter-clockwise order (signed area {signed_area})")]
    NotCounterClockwise { signed_area: f64 },
    #[error("polygon is not strictly convex at vertex {index}")]
    NotStrictlyConvex { index: usize },
}

/// A strictly convex polygon with counter-clockwise vertices.
///
/// Construction goes through [`ConvexPolygon::new`], which rejects fewer than
/// three vertices, clockwise order, collinear or duplicate vertices, and
/// self-overlapping vertex rings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

impl ConvexPolygon {
    pub fn new(vertices: Vec<Vec2>) -> Result<Self, PolygonError> {
        validate_polygon(vertices)
    }

    pub fn from_points(points: &[[f64; 2]]) -> Result<Self, PolygonError> {
        Self::new(points.iter().map(|&p| Vec2::from(p)).collect())
    }

    #[inline]
    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Always false; a valid polygon has at least three vertices.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertex(&self, index: usize) -> Vec2 {
        self.vertices[index]
    }

    pub fn signed_area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    /// Mean of the vertices.
    pub fn vertex_centroid(&self) -> Vec2 {
        let sum = self.vertices.iter().fold(Vec2::ZERO, |acc, &v| acc + v);
        sum * (1.0 / self.vertices.len() as f64)
    }

    /// Largest distance from `center` to a vertex.
    pub fn bounding_radius(&self, center: Vec2) -> f64 {
        self.vertices
            .iter()
            .map(|&v| (v - center).norm())
            .fold(0.0, f64::max)
    }

    /// Closed containment test with an absolute slack on every edge.
    pub fn contains(&self, p: Vec2, slack: f64) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let edge = b - a;
            cross(edge, p - a) >= -slack * edge.norm()
        })
    }

    pub fn transformed(&self, t: &Transform2) -> ConvexPolygon {
        apply_transform(t, self)
    }

    pub fn translated(&self, offset: Vec2) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&v| v + offset).collect(),
        }
    }
}

impl<'de> Deserialize<'de> for ConvexPolygon {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<Vec2>,
        }
        let raw = Raw::deserialize(deserializer)?;
        ConvexPolygon::new(raw.vertices).map_err(serde::de::Error::custom)
    }
}

fn signed_area(vertices: &[Vec2]) -> f64 {
    let n = vertices.len();
    let twice: f64 = (0..n)
        .map(|i| cross(vertices[i], vertices[(i + 1) % n]))
        .sum();
    0.5 * twice
}

/// Validates a vertex ring as a counter-clockwise, strictly convex polygon.
pub fn validate_polygon(vertices: Vec<Vec2>) -> Result<ConvexPolygon, PolygonError> {
    let n = vertices.len();
    if n < 3 {
        return Err(PolygonError::FewerThanThreeVertices(n));
    }
    if let Some(index) = vertices.iter().position(|v| !v.is_finite()) {
        return Err(PolygonError::NonFiniteCoordinate { index });
    }
    let area = signed_area(&vertices);
    if !(area > 0.0) {
        return Err(PolygonError::NotCounterClockwise { signed_area: area });
    }

    // Every turn must be strictly left, and the edge directions must wind
    // around exactly once (rules out star-shaped rings such as a pentagram).
    let mut wraps = 0;
    let mut prev_angle = {
        let e = vertices[0] - vertices[n - 1];
        e.y.atan2(e.x)
    };
    for i in 0..n {
        let prev = vertices[(i + n - 1) % n];
        let cur = vertices[i];
        let next = vertices[(i + 1) % n];
        if !(cross(cur - prev, next - cur) > 0.0) {
            return Err(PolygonError::NotStrictlyConvex { index: i });
        }
        let e = next - cur;
        let angle = e.y.atan2(e.x);
        if angle < prev_angle {
            wraps += 1;
            if wraps > 1 {
                return Err(PolygonError::NotStrictlyConvex { index: i });
            }
        }
        prev_angle = angle;
    }
    Ok(ConvexPolygon { vertices })
}

/// Rotates every vertex about the origin, then translates.
///
/// Rigid motions preserve orientation and convexity, so the result skips
/// revalidation.
pub fn apply_transform(t: &Transform2, poly: &ConvexPolygon) -> ConvexPolygon {
    let (sin, cos) = t.rotation.sin_cos();
    ConvexPolygon {
        vertices: poly
            .vertices
            .iter()
            .map(|&v| v.rotated(cos, sin) + t.translation)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn v(x: f64, y: f64) -> Vec2 {
        Vec2::new(x, y)
    }

    #[test]
    fn dot_examples() {
        assert_eq!(dot(v(1.0, 0.0), v(0.0, 1.0)), 0.0);
        assert_eq!(dot(v(2.0, 3.0), v(4.0, -1.0)), 5.0);
        assert_eq!(dot(v(0.0, 0.0), v(5.0, 7.0)), 0.0);
    }

    #[test]
    fn cross_examples() {
        assert_eq!(cross(v(1.0, 0.0), v(0.0, 1.0)), 1.0);
        assert_eq!(cross(v(0.0, 1.0), v(1.0, 0.0)), -1.0);
        assert_eq!(cross(v(2.0, 2.0), v(1.0, 1.0)), 0.0);
    }

    #[test]
    fn validate_accepts_ccw_triangle() {
        let tri = validate_polygon(vec![v(0.0, 0.0), v(1.0, 0.0), v(0.0, 1.0)]).unwrap();
        assert_eq!(tri.len(), 3);
        assert_eq!(tri.signed_area(), 0.5);
    }

    #[test]
    fn validate_rejects_clockwise() {
        let err = validate_polygon(vec![v(0.0, 0.0), v(0.0, 1.0), v(1.0, 0.0)]).unwrap_err();
        assert!(matches!(err, PolygonError::NotCounterClockwise { .. }));
    }

    #[test]
    fn validate_reports_collinear_index() {
        let err =
            validate_polygon(vec![v(0.0, 0.0), v(1.0, 0.0), v(2.0, 0.0), v(0.0, 1.0)]).unwrap_err();
        assert_eq!(err, PolygonError::NotStrictlyConvex { index: 1 });
    }

    #[test]
    fn validate_rejects_short_and_non_finite() {
        assert_eq!(
            validate_polygon(vec![v(0.0, 0.0), v(1.0, 0.0)]).unwrap_err(),
            PolygonError::FewerThanThreeVertices(2)
        );
        assert_eq!(
            validate_polygon(vec![v(0.0, 0.0), v(f64::NAN, 0.0), v(0.0, 1.0)]).unwrap_err(),
            PolygonError::NonFiniteCoordinate { index: 1 }
        );
    }

    #[test]
    fn validate_rejects_duplicate_vertex() {
        let err =
            validate_polygon(vec![v(0.0, 0.0), v(1.0, 0.0), v(1.0, 0.0), v(0.0, 1.0)]).unwrap_err();
        assert!(matches!(err, PolygonError::NotStrictlyConvex { .. }));
    }

    #[test]
    fn validate_rejects_pentagram() {
        let star: Vec<Vec2> = (0..5)
            .map(|k| {
                let a = (k as f64) * 4.0 * std::f64::consts::PI / 5.0;
                v(a.cos(), a.sin())
            })
            .collect();
        assert!(matches!(
            validate_polygon(star),
            Err(PolygonError::NotStrictlyConvex { .. })
        ));
    }

    #[test]
    fn identity_transform_is_noop() {
        let tri = ConvexPolygon::from_points(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        assert_eq!(apply_transform(&Transform2::IDENTITY, &tri), tri);
    }

    #[test]
    fn quarter_turn_rotation() {
        let tri = ConvexPolygon::from_points(&[[1.0, 0.0], [2.0, 0.0], [1.0, 1.0]]).unwrap();
        let out = apply_transform(&Transform2::rotation(FRAC_PI_2), &tri);
        let expected = [v(0.0, 1.0), v(0.0, 2.0), v(-1.0, 1.0)];
        for (a, b) in out.vertices().iter().zip(expected) {
            assert!((*a - b).norm() < 1e-15, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn pure_translation() {
        let tri = ConvexPolygon::from_points(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        let out = apply_transform(&Transform2::translation(v(5.0, 0.0)), &tri);
        for (a, b) in out.vertices().iter().zip(tri.vertices()) {
            assert_eq!(*a, *b + v(5.0, 0.0));
        }
    }

    #[test]
    fn polygon_json_shape() {
        let tri = ConvexPolygon::from_points(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]).unwrap();
        let json = serde_json::to_string(&tri).unwrap();
        assert_eq!(json, r#"{"vertices":[[0.0,0.0],[1.0,0.0],[0.0,1.0]]}"#);
        let back: ConvexPolygon = serde_json::from_str(&json).unwrap();
        assert_eq!(back, tri);
        assert!(
            serde_json::from_str::<ConvexPolygon>(r#"{"vertices":[[0,0],[0,1],[1,0]]}"#).is_err()
        );
    }

    #[test]
    fn contains_with_slack() {
        let sq =
            ConvexPolygon::from_points(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
        assert!(sq.contains(v(0.5, 0.5), 0.0));
        assert!(sq.contains(v(1.0, 0.5), 0.0));
        assert!(!sq.contains(v(1.0 + 1e-6, 0.5), 1e-9));
    }
}
