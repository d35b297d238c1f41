//! Moving vertices and kinetic polygons.
//!
//! A kinetic polygon is a circular sequence of vertices travelling along
//! straight trajectories. Every side keeps a fixed direction and offsets at
//! unit speed along its fixed normal; vertex velocities are chosen so that
//! each vertex stays on the supporting lines of its two adjacent sides.
//!
//! Orientation convention: the region being swept lies to the right of each
//! directed side, so side normals are the clockwise rotation of the side
//! direction. A shrinking polygon is stored clockwise, the outward-growing
//! sliver polygon arrives in tree-walk order with the same property.

use crate::error::Error;
use crate::geom::{Point2, SimplePolygon, Vector2};
use crate::scalar::{c, geom_eps, time_eps, Scalar};

/// A polygon vertex moving along a straight trajectory.
#[derive(Debug, Clone)]
pub struct MovingVertex<S> {
    /// Position at `birth_time`.
    pub origin: Point2<S>,
    pub birth_time: S,
    pub velocity: Vector2<S>,
    /// Tree node this vertex started at (initial sliver vertices only).
    pub tree_node: Option<usize>,
    /// Ancestry links: edge-event vertices carry both, split-event vertices
    /// only `pi_a`, initial vertices neither.
    pub pi_a: Option<usize>,
    pub pi_b: Option<usize>,
    /// Direction of the outgoing side (towards the successor vertex).
    pub(crate) out_dir: Vector2<S>,
    /// Unit normal of the outgoing side; the side's supporting line at time
    /// `t` is `x . normal = offset + t`.
    pub(crate) out_normal: Vector2<S>,
    pub(crate) out_offset: S,
    /// Time and location at which the vertex merged or was removed.
    pub death: Option<(S, Point2<S>)>,
}

impl<S: Scalar> MovingVertex<S> {
    pub fn position(&self, t: S) -> Point2<S> {
        self.origin + self.velocity * (t - self.birth_time)
    }

    pub fn speed(&self) -> S {
        self.velocity.norm()
    }

    pub fn direction(&self) -> Vector2<S> {
        self.velocity.normalized()
    }
}

/// A circular sequence of moving vertices.
#[derive(Debug, Clone)]
pub struct KineticPolygon<S> {
    pub vertices: Vec<MovingVertex<S>>,
    pub creation_time: S,
}

impl<S: Scalar> KineticPolygon<S> {
    /// Kinetic form of a simple polygon whose sides all move toward the
    /// interior (the shrinking transformation).
    pub fn shrinking(polygon: &SimplePolygon<S>) -> Self {
        // Canonical CCW input reversed to CW puts the interior on the right
        // of each directed side, so rot90_cw normals point inward.
        let pts: Vec<Point2<S>> = polygon.vertices().iter().rev().cloned().collect();
        Self::from_positions(&pts)
    }

    /// Build from explicit positions already in swept-region-on-the-right
    /// order. Velocities are solved from the adjacent side normals.
    pub fn from_positions(pts: &[Point2<S>]) -> Self {
        let n = pts.len();
        let mut sides = Vec::with_capacity(n);
        for i in 0..n {
            let dir = (pts[(i + 1) % n] - pts[i]).normalized();
            let normal = dir.rot90_cw();
            let offset = pts[i].to_vector().dot(&normal);
            sides.push((dir, normal, offset));
        }
        let vertices = (0..n)
            .map(|i| {
                let (_, in_normal, _) = sides[(i + n - 1) % n];
                let (out_dir, out_normal, out_offset) = sides[i];
                MovingVertex {
                    origin: pts[i],
                    birth_time: S::zero(),
                    velocity: solve_velocity(in_normal, out_normal),
                    tree_node: None,
                    pi_a: None,
                    pi_b: None,
                    out_dir,
                    out_normal,
                    out_offset,
                    death: None,
                }
            })
            .collect();
        KineticPolygon {
            vertices,
            creation_time: S::zero(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex positions at time `t`.
    pub fn positions(&self, t: S) -> Vec<Point2<S>> {
        self.vertices.iter().map(|v| v.position(t)).collect()
    }
}

/// Velocity keeping a vertex on both supporting lines (`v . n = 1` for each
/// unit-speed line normal).
///
/// Falls back to the mean normal when the normals are (anti-)parallel: equal
/// normals describe a flat vertex moving with its sides, opposite normals a
/// locally collapsed strip whose remaining events fire at the same instant.
pub(crate) fn solve_velocity<S: Scalar>(n1: Vector2<S>, n2: Vector2<S>) -> Vector2<S> {
    let det = n1.cross(&n2);
    if det.abs() < c(1e-12) {
        let sum = n1 + n2;
        let norm = sum.norm();
        if norm > c(1e-9) {
            return sum / norm;
        }
        return Vector2::zero();
    }
    Vector2::new((n2.y - n1.y) / det, (n1.x - n2.x) / det)
}

/// Interior angle (on the swept side) formed by two consecutive side
/// directions, in (0, 2pi).
pub(crate) fn swept_interior_angle<S: Scalar>(in_dir: Vector2<S>, out_dir: Vector2<S>) -> S {
    let turn = in_dir.cross(&out_dir).atan2(in_dir.dot(&out_dir));
    c::<S>(std::f64::consts::PI) + turn
}

/// Interior angle above pi on the swept side.
pub fn is_reflex<S: Scalar>(v: &MovingVertex<S>) -> bool {
    v.velocity.dot(&v.out_dir) < -c::<S>(1e-12)
}

/// Earliest `t >= t_now` at which the two trajectories coincide within the
/// coincidence tolerance; `None` for parallel or diverging motion.
pub fn edge_event_time<S: Scalar>(
    v: &MovingVertex<S>,
    w: &MovingVertex<S>,
    t_now: S,
) -> Option<(S, Point2<S>)> {
    let d0 = (w.origin.to_vector() - w.velocity * w.birth_time)
        - (v.origin.to_vector() - v.velocity * v.birth_time);
    let dv = w.velocity - v.velocity;
    let dv2 = dv.norm_squared();
    if dv2 < c(1e-18) {
        return None;
    }
    let t = -(d0.dot(&dv)) / dv2;
    if t < t_now - time_eps() {
        return None;
    }
    let scale = S::one() + v.origin.to_vector().norm().max(w.origin.to_vector().norm());
    let residual = (d0 + dv * t).norm();
    if residual > geom_eps::<S>() * scale {
        return None;
    }
    Some((t, v.position(t).midpoint(&w.position(t))))
}

/// Earliest `t >= t_now` at which `v` lies on the moving supporting line of
/// the side `(a, b)` and within the side's span at that time.
///
/// Only reflex vertices can split (the projection of the velocity onto the
/// outgoing side direction is `cot(theta/2)`, negative exactly for interior
/// angles above pi, so reflexness is checked from the vertex itself). The
/// side must not be incident to `v`. Corner hits (span boundary) count.
pub fn split_event_time<S: Scalar>(
    v: &MovingVertex<S>,
    edge: (&MovingVertex<S>, &MovingVertex<S>),
    t_now: S,
) -> Option<(S, Point2<S>)> {
    let (a, b) = edge;
    if !is_reflex(v) {
        return None;
    }
    // Side direction is constant in time up to sign; probe a couple of
    // instants to dodge degenerate coincidences.
    let probe = t_now.max(a.birth_time.max(b.birth_time)) + S::one();
    let mut span = b.position(probe) - a.position(probe);
    if span.norm() <= geom_eps() {
        span = b.position(probe + S::one()) - a.position(probe + S::one());
        if span.norm() <= geom_eps() {
            return None; // endpoints share a trajectory
        }
    }
    // Orient the normal so the line advances at unit speed along it, then
    // recover the direction consistent with that orientation.
    let mut normal = span.normalized().rot90_cw();
    if (a.velocity.dot(&normal) - S::one()).abs() > c(1e-6) {
        normal = -normal;
        if (a.velocity.dot(&normal) - S::one()).abs() > c(1e-6) {
            return None; // endpoints do not ride a unit-speed line
        }
    }
    let dir = normal.rot90_ccw();
    let offset = a.origin.to_vector().dot(&normal) - a.birth_time;
    split_against_line(v, a, b, dir, normal, offset, t_now)
}

/// Shared split computation against an explicit moving line.
#[allow(clippy::too_many_arguments)]
pub(crate) fn split_against_line<S: Scalar>(
    v: &MovingVertex<S>,
    a: &MovingVertex<S>,
    b: &MovingVertex<S>,
    dir: Vector2<S>,
    normal: Vector2<S>,
    offset: S,
    t_now: S,
) -> Option<(S, Point2<S>)> {
    let teps = time_eps::<S>();
    let slope = v.velocity.dot(&normal) - S::one();
    if slope > -c::<S>(1e-12) {
        return None; // not approaching the line
    }
    let g0 = (v.origin.to_vector() - v.velocity * v.birth_time).dot(&normal) - offset;
    let t = -g0 / slope;
    if t < t_now - teps || t < v.birth_time - teps {
        return None;
    }
    if t < a.birth_time.max(b.birth_time) - teps {
        return None; // side does not exist yet
    }
    if !t.is_finite() {
        return None;
    }
    // Span test at the collision time.
    let pa = a.position(t);
    let pb = b.position(t);
    let len = (pb - pa).dot(&dir);
    let hit = v.position(t);
    let s = (hit - pa).dot(&dir);
    let span_eps = geom_eps::<S>() * (S::one() + len.abs());
    if t <= v.birth_time + teps {
        // A vertex born on a line through its own position must not "split"
        // sides it merely touches at birth; demand a strictly interior hit.
        if s <= span_eps || s >= len - span_eps {
            return None;
        }
    } else if s < -span_eps || s > len + span_eps {
        return None;
    }
    Some((t, hit))
}

/// Validate finiteness of event data; corrupt velocities surface here.
pub(crate) fn check_finite<S: Scalar>(t: S, loc: Point2<S>) -> Result<(), Error> {
    if !t.is_finite() || !loc.is_finite() {
        return Err(Error::Corrupt(format!(
            "non-finite event (t = {:?}), velocity corruption upstream",
            t
        )));
    }
    Ok(())
}
