//! GJK distance query and the binary collision test.
//!
//! Both loops walk the same sequence of support points; the binary test only
//! adds cheaper exits, so it never makes more support calls than the distance
//! query on the same input.

use crate::geometry::{cross, dot, ConvexPolygon, Vec2};
use crate::subdistance::{subdistance, Simplex};
use crate::support::{cso_support, initial_direction, SimplexVertex};

/// Tolerance under which a new support point counts as already present.
const DUPLICATE_EPS: f64 = 1e-12;

/// Distances at or below this are reported as touching or overlapping.
pub const TOUCH_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QueryOptions {
    /// Relative tolerance of the convergence test, also used as the absolute
    /// threshold below which `‖v‖` counts as zero.
    pub epsilon: f64,
    pub max_iterations: u32,
    /// Warm-start support searches from the previous support vertices.
    pub use_hill_climbing: bool,
}

impl Default for QueryOptions {
    fn default() -> Self {
        Self {
            epsilon: 1e-10,
            max_iterations: 64,
            use_hill_climbing: true,
        }
    }
}

impl QueryOptions {
    pub fn brute_force() -> Self {
        Self {
            use_hill_climbing: false,
            ..Self::default()
        }
    }

    pub fn hill_climbing() -> Self {
        Self::default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Termination {
    /// The support point made no further progress.
    Converged,
    /// A triangle survived the subdistance step: the origin is enclosed.
    SimplexFull,
    /// `‖v‖` fell to the tolerance.
    ContainsOrigin,
    MaxIterations,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceResult {
    pub distance: f64,
    pub witness_p: Vec2,
    pub witness_q: Vec2,
    /// Closest point of `P - Q` to the origin.
    pub separating_vector: Vec2,
    pub iterations: u32,
    pub support_calls: u32,
    pub termination: Termination,
    /// Final simplex with solved weights.
    pub simplex: Simplex,
}

impl DistanceResult {
    pub fn is_touching_or_overlapping(&self) -> bool {
        self.distance <= TOUCH_TOLERANCE
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CollisionExit {
    /// `v · w > 0`: a line through the origin separates it from `P - Q`.
    SeparatingHyperplane,
    /// The new support point lies in the vertical angle opposite the current
    /// segment, so the new triangle encloses the origin.
    VerticalAngleEnclosure,
    /// The subdistance step reached the origin or a full triangle.
    SubdistanceEnclosure,
    Converged,
    MaxIterations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollisionResult {
    pub colliding: bool,
    pub iterations: u32,
    pub support_calls: u32,
    pub exit: CollisionExit,
}

/// Per-iteration trace of a distance query.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DistanceTrace {
    /// `‖v‖` after the first support call and after every subdistance step.
    pub norms: Vec<f64>,
}

struct SupportState<'a> {
    p: &'a ConvexPolygon,
    q: &'a ConvexPolygon,
    warm: Option<(usize, usize)>,
    hill_climb: bool,
    calls: u32,
}

impl<'a> SupportState<'a> {
    fn new(p: &'a ConvexPolygon, q: &'a ConvexPolygon, hill_climb: bool) -> Self {
        Self {
            p,
            q,
            warm: None,
            hill_climb,
            calls: 0,
        }
    }

    #[inline]
    fn support(&mut self, dir: Vec2) -> SimplexVertex {
        let s = cso_support(self.p, self.q, dir, self.warm);
        if self.hill_climb {
            self.warm = Some((s.ip, s.iq));
        }
        self.calls += 1;
        s
    }
}

/// Minimum distance between two convex polygons, with witness points.
pub fn distance(p: &ConvexPolygon, q: &ConvexPolygon, opts: &QueryOptions) -> DistanceResult {
    distance_impl(p, q, opts, None)
}

/// Like [`distance`] but also records `‖v‖` at every step.
pub fn distance_traced(
    p: &ConvexPolygon,
    q: &ConvexPolygon,
    opts: &QueryOptions,
) -> (DistanceResult, DistanceTrace) {
    let mut trace = DistanceTrace::default();
    let r = distance_impl(p, q, opts, Some(&mut trace));
    (r, trace)
}

fn distance_impl(
    p: &ConvexPolygon,
    q: &ConvexPolygon,
    opts: &QueryOptions,
    mut trace: Option<&mut DistanceTrace>,
) -> DistanceResult {
    let eps = opts.epsilon;
    let eps2 = eps * eps;
    let mut sup = SupportState::new(p, q, opts.use_hill_climbing);

    let first = sup.support(-initial_direction(p, q));
    let mut simplex = Simplex::point(first);
    let mut v = first.w;
    let mut vv = v.norm_squared();
    let mut k = 0;
    if let Some(t) = trace.as_deref_mut() {
        t.norms.push(vv.sqrt());
    }

    let termination = if vv.sqrt() <= eps {
        Termination::ContainsOrigin
    } else {
        loop {
            k += 1;
            let w = sup.support(-v);
            if vv - dot(v, w.w) <= eps2 * vv || simplex.contains_point(w.w, DUPLICATE_EPS) {
                break Termination::Converged;
            }
            let tau = simplex.with(w).expect("simplex below capacity");
            let next = subdistance(&tau);
            let next_vv = next.v.norm_squared();
            if next_vv >= vv {
                // no progress; keep the previous closest point
                break Termination::Converged;
            }
            simplex = next.simplex;
            v = next.v;
            vv = next_vv;
            if let Some(t) = trace.as_deref_mut() {
                t.norms.push(vv.sqrt());
            }
            if vv.sqrt() <= eps {
                break Termination::ContainsOrigin;
            }
            if simplex.len() == 3 {
                break Termination::SimplexFull;
            }
            if k >= opts.max_iterations {
                break Termination::MaxIterations;
            }
        }
    };

    let (witness_p, witness_q) = witness_points(&simplex);
    let distance = match termination {
        Termination::ContainsOrigin | Termination::SimplexFull => 0.0,
        _ => vv.sqrt(),
    };
    DistanceResult {
        distance,
        witness_p,
        witness_q,
        separating_vector: if distance == 0.0 { Vec2::ZERO } else { v },
        iterations: k,
        support_calls: sup.calls,
        termination,
        simplex,
    }
}

/// Binary intersection test. Touching counts as colliding only when the
/// final `‖v‖` falls within the tolerance.
pub fn intersects(p: &ConvexPolygon, q: &ConvexPolygon, opts: &QueryOptions) -> CollisionResult {
    let eps = opts.epsilon;
    let eps2 = eps * eps;
    let mut sup = SupportState::new(p, q, opts.use_hill_climbing);

    let first = sup.support(-initial_direction(p, q));
    let mut simplex = Simplex::point(first);
    let mut v = first.w;
    let mut vv = v.norm_squared();
    let mut k = 0;

    let done = |colliding, k, calls, exit| CollisionResult {
        colliding,
        iterations: k,
        support_calls: calls,
        exit,
    };

    if vv.sqrt() <= eps {
        return done(true, 0, sup.calls, CollisionExit::SubdistanceEnclosure);
    }
    loop {
        k += 1;
        let w = sup.support(-v);
        let vw = dot(v, w.w);
        // The separating line must clear the origin by more than eps.
        if vw > 0.0 && vw * vw > eps2 * vv {
            return done(false, k, sup.calls, CollisionExit::SeparatingHyperplane);
        }
        if simplex.len() == 2 && vw <= 0.0 {
            let [a, b] = [simplex.vertices()[0].w, simplex.vertices()[1].w];
            if encloses_origin(a, b, w.w, eps2) {
                return done(true, k, sup.calls, CollisionExit::VerticalAngleEnclosure);
            }
        }
        if vv - vw <= eps2 * vv || simplex.contains_point(w.w, DUPLICATE_EPS) {
            return done(vv.sqrt() < eps, k, sup.calls, CollisionExit::Converged);
        }
        let tau = simplex.with(w).expect("simplex below capacity");
        let next = subdistance(&tau);
        let next_vv = next.v.norm_squared();
        if next_vv >= vv {
            return done(vv.sqrt() < eps, k, sup.calls, CollisionExit::Converged);
        }
        simplex = next.simplex;
        v = next.v;
        vv = next_vv;
        if vv.sqrt() <= eps || simplex.len() == 3 {
            return done(true, k, sup.calls, CollisionExit::SubdistanceEnclosure);
        }
        if k >= opts.max_iterations {
            return done(vv.sqrt() < eps, k, sup.calls, CollisionExit::MaxIterations);
        }
    }
}

/// `w` lies in the vertical angle opposite `∠AOB`, with the origin more than
/// `sqrt(eps2)` away from the lines `Aw` and `Bw`.
#[inline]
fn encloses_origin(a: Vec2, b: Vec2, w: Vec2, eps2: f64) -> bool {
    let ca = cross(a, w);
    let cb = cross(b, w);
    ca * cb < 0.0
        && ca * ca > eps2 * (w - a).norm_squared()
        && cb * cb > eps2 * (w - b).norm_squared()
}

/// Witness points `(Σ λᵢ pᵢ, Σ λᵢ qᵢ)` of a solved simplex.
pub fn witness_points(simplex: &Simplex) -> (Vec2, Vec2) {
    simplex
        .vertices()
        .iter()
        .zip(simplex.lambdas())
        .fold((Vec2::ZERO, Vec2::ZERO), |(wp, wq), (s, &l)| {
            (wp + s.p * l, wq + s.q * l)
        })
}
