//! Polygon overlap areas and the area-based matching score.
//!
//! Intersection area is computed exactly (up to floating rounding) by
//! decomposing each polygon into a signed triangle fan and clipping every
//! triangle pair. For simple polygons the signed sum of pairwise triangle
//! intersections equals the area of the region intersection, so no boolean
//! arrangement is needed.

use super::point::Point2;
use super::polygon::SimplePolygon;
use crate::scalar::{c, Scalar};

/// Intersection and union areas of two simple polygons.
///
/// The identity `union = area(P) + area(Q) - intersection` holds by
/// construction; both results are non-negative.
pub fn area_overlap<S: Scalar>(p: &SimplePolygon<S>, q: &SimplePolygon<S>) -> (S, S) {
    let area_p = p.area();
    let area_q = q.area();
    let inter = intersection_area(p, q);
    let union = area_p + area_q - inter;
    (inter, union)
}

/// Area-based similarity in [0, 1]: intersection over union.
///
/// 1 when the regions coincide, 0 when they are disjoint.
pub fn matching_score<S: Scalar>(p: &SimplePolygon<S>, q: &SimplePolygon<S>) -> S {
    let (inter, union) = area_overlap(p, q);
    if union <= S::zero() {
        return S::zero();
    }
    inter / union
}

fn intersection_area<S: Scalar>(p: &SimplePolygon<S>, q: &SimplePolygon<S>) -> S {
    let (plo, phi) = p.bounding_box();
    let (qlo, qhi) = q.bounding_box();
    if plo.x > qhi.x || qlo.x > phi.x || plo.y > qhi.y || qlo.y > phi.y {
        return S::zero();
    }
    // Recenter on the joint bounding box for conditioning.
    let half = c::<S>(0.5);
    let origin = Point2::new(
        (plo.x.min(qlo.x) + phi.x.max(qhi.x)) * half,
        (plo.y.min(qlo.y) + phi.y.max(qhi.y)) * half,
    );

    let mut total = S::zero();
    let pv = p.vertices();
    let qv = q.vertices();
    let np = pv.len();
    let nq = qv.len();
    for i in 0..np {
        let (ta, sa) = oriented_triangle(origin, pv[i], pv[(i + 1) % np]);
        if sa == S::zero() {
            continue;
        }
        for j in 0..nq {
            let (tb, sb) = oriented_triangle(origin, qv[j], qv[(j + 1) % nq]);
            if sb == S::zero() {
                continue;
            }
            let a = convex_clip_area(&ta, &tb);
            total = total + sa * sb * a;
        }
    }
    let area_cap = p.area().min(q.area());
    // Snap floating residue from cancelling fan terms.
    let snap = c::<S>(1e-12) * (p.area() + q.area());
    if total.abs() <= snap {
        return S::zero();
    }
    total.max(S::zero()).min(area_cap)
}

/// Triangle (origin, a, b) normalized to CCW plus its orientation sign.
fn oriented_triangle<S: Scalar>(
    origin: Point2<S>,
    a: Point2<S>,
    b: Point2<S>,
) -> ([Point2<S>; 3], S) {
    let cross = (a - origin).cross(&(b - origin));
    if cross == S::zero() {
        return ([origin, a, b], S::zero());
    }
    if cross > S::zero() {
        ([origin, a, b], S::one())
    } else {
        ([origin, b, a], -S::one())
    }
}

/// Area of the intersection of two CCW triangles (Sutherland-Hodgman).
fn convex_clip_area<S: Scalar>(subject: &[Point2<S>; 3], clip: &[Point2<S>; 3]) -> S {
    let mut poly: Vec<Point2<S>> = subject.to_vec();
    let mut next: Vec<Point2<S>> = Vec::with_capacity(8);
    for k in 0..3 {
        if poly.is_empty() {
            return S::zero();
        }
        let a = clip[k];
        let b = clip[(k + 1) % 3];
        let dir = b - a;
        next.clear();
        let n = poly.len();
        for i in 0..n {
            let cur = poly[i];
            let nxt = poly[(i + 1) % n];
            let side_cur = dir.cross(&(cur - a));
            let side_nxt = dir.cross(&(nxt - a));
            if side_cur >= S::zero() {
                next.push(cur);
                if side_nxt < S::zero() {
                    next.push(line_intersect(cur, nxt, side_cur, side_nxt));
                }
            } else if side_nxt >= S::zero() {
                next.push(line_intersect(cur, nxt, side_cur, side_nxt));
            }
        }
        std::mem::swap(&mut poly, &mut next);
    }
    polygon_area(&poly)
}

fn line_intersect<S: Scalar>(p: Point2<S>, q: Point2<S>, sp: S, sq: S) -> Point2<S> {
    let t = sp / (sp - sq);
    p + (q - p) * t
}

fn polygon_area<S: Scalar>(poly: &[Point2<S>]) -> S {
    if poly.len() < 3 {
        return S::zero();
    }
    let mut acc = S::zero();
    let n = poly.len();
    for i in 0..n {
        let p = poly[i];
        let q = poly[(i + 1) % n];
        acc = acc + p.x * q.y - q.x * p.y;
    }
    (acc / c(2.0)).max(S::zero())
}
