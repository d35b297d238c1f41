//! Simple polygons with a canonical counter-clockwise orientation.

use super::point::Point2;
use crate::error::Error;
use crate::scalar::{c, geom_eps, Scalar};

/// Shoelace signed area of a raw vertex sequence.
///
/// Positive for counter-clockwise input, negative for clockwise.
pub fn signed_area<S: Scalar>(points: &[Point2<S>]) -> S {
    let mut acc = S::zero();
    let n = points.len();
    for i in 0..n {
        let p = points[i];
        let q = points[(i + 1) % n];
        acc = acc + p.x * q.y - q.x * p.y;
    }
    acc / c(2.0)
}

/// A simple (non-self-intersecting) polygon stored counter-clockwise.
///
/// Construction canonicalizes the orientation and rejects degenerate input:
/// fewer than three vertices, non-finite coordinates, coincident consecutive
/// vertices, vanishing area, or a self-intersecting boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplePolygon<S> {
    vertices: Vec<Point2<S>>,
}

impl<S: Scalar> SimplePolygon<S> {
    pub fn new(mut vertices: Vec<Point2<S>>) -> Result<Self, Error> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon("fewer than 3 vertices".into()));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidPolygon("non-finite coordinate".into()));
        }
        let eps = geom_eps::<S>();
        let n = vertices.len();
        for i in 0..n {
            if vertices[i].distance(&vertices[(i + 1) % n]) <= eps {
                return Err(Error::InvalidPolygon(
                    "consecutive vertices coincide".into(),
                ));
            }
        }
        let area = signed_area(&vertices);
        let scale = bbox_diag(&vertices);
        if area.abs() <= c::<S>(1e-12) * scale * scale {
            return Err(Error::InvalidPolygon("degenerate (zero area)".into()));
        }
        if area < S::zero() {
            vertices.reverse();
        }
        let poly = SimplePolygon { vertices };
        if !poly.is_simple() {
            return Err(Error::InvalidPolygon("self-intersecting boundary".into()));
        }
        Ok(poly)
    }

    pub fn vertices(&self) -> &[Point2<S>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Signed area; always positive thanks to the canonical orientation.
    pub fn signed_area(&self) -> S {
        signed_area(&self.vertices)
    }

    pub fn area(&self) -> S {
        self.signed_area().abs()
    }

    /// Interior angle at vertex `i`, in (0, 2pi). Values above pi mark a
    /// reflex vertex.
    pub fn interior_angle(&self, i: usize) -> Result<S, Error> {
        let n = self.vertices.len();
        if i >= n {
            return Err(Error::IndexOutOfRange(i));
        }
        let prev = self.vertices[(i + n - 1) % n];
        let here = self.vertices[i];
        let next = self.vertices[(i + 1) % n];
        let d1 = here - prev;
        let d2 = next - here;
        let eps = geom_eps::<S>();
        if d1.norm() <= eps || d2.norm() <= eps {
            return Err(Error::InvalidPolygon("zero-length neighbor edge".into()));
        }
        let turn = d1.cross(&d2).atan2(d1.dot(&d2));
        // CCW polygon: interior angle = pi - exterior turn.
        Ok(S::from_f64(std::f64::consts::PI).unwrap() - turn)
    }

    /// Longest side length.
    pub fn max_side(&self) -> S {
        let n = self.vertices.len();
        (0..n)
            .map(|i| self.vertices[i].distance(&self.vertices[(i + 1) % n]))
            .fold(S::zero(), |a, b| a.max(b))
    }

    pub fn bounding_box(&self) -> (Point2<S>, Point2<S>) {
        bbox(&self.vertices)
    }

    /// Even-odd point containment (boundary points are unspecified).
    pub fn contains(&self, p: &Point2<S>) -> bool {
        let mut inside = false;
        let n = self.vertices.len();
        let mut j = n - 1;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[j];
            if (a.y > p.y) != (b.y > p.y) {
                let x_cross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
                if p.x < x_cross {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    fn is_simple(&self) -> bool {
        let n = self.vertices.len();
        let eps = geom_eps::<S>();
        // Reject u-turn spikes (the next edge folding back over the previous).
        for i in 0..n {
            let prev = self.vertices[(i + n - 1) % n];
            let here = self.vertices[i];
            let next = self.vertices[(i + 1) % n];
            let d1 = (here - prev).normalized();
            let d2 = (next - here).normalized();
            if d1.dot(&d2) < c::<S>(-1.0) + c::<S>(1e-12) {
                return false;
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                // Skip adjacent edges (they share an endpoint by design).
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let (a1, a2) = (self.vertices[i], self.vertices[(i + 1) % n]);
                let (b1, b2) = (self.vertices[j], self.vertices[(j + 1) % n]);
                if segments_intersect(a1, a2, b1, b2, eps) {
                    return false;
                }
            }
        }
        true
    }
}

fn bbox<S: Scalar>(points: &[Point2<S>]) -> (Point2<S>, Point2<S>) {
    let mut lo = points[0];
    let mut hi = points[0];
    for p in points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (lo, hi)
}

fn bbox_diag<S: Scalar>(points: &[Point2<S>]) -> S {
    let (lo, hi) = bbox(points);
    (hi - lo).norm().max(S::one())
}

/// Closed-segment intersection test with tolerance `eps` for touching.
fn segments_intersect<S: Scalar>(
    a1: Point2<S>,
    a2: Point2<S>,
    b1: Point2<S>,
    b2: Point2<S>,
    eps: S,
) -> bool {
    let d1 = a2 - a1;
    let d2 = b2 - b1;
    let denom = d1.cross(&d2);
    let diff = b1 - a1;
    if denom.abs() <= eps * eps {
        // Parallel: overlapping collinear segments count as intersecting.
        if diff.cross(&d1).abs() > eps * d1.norm().max(S::one()) {
            return false;
        }
        let len2 = d1.norm_squared();
        let t0 = diff.dot(&d1) / len2;
        let t1 = (b2 - a1).dot(&d1) / len2;
        let (lo, hi) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
        return hi >= S::zero() && lo <= S::one();
    }
    let t = diff.cross(&d2) / denom;
    let u = diff.cross(&d1) / denom;
    let tol = eps / d1.norm().max(S::one());
    let tol_u = eps / d2.norm().max(S::one());
    t >= -tol && t <= S::one() + tol && u >= -tol_u && u <= S::one() + tol_u
}
