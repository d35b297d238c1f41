//! Points and vectors in the plane.

use crate::scalar::Scalar;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// A position in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2<S> {
    pub x: S,
    pub y: S,
}

/// A displacement in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector2<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point2<S> {
    pub fn new(x: S, y: S) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn to_vector(self) -> Vector2<S> {
        Vector2::new(self.x, self.y)
    }

    pub fn distance(&self, other: &Point2<S>) -> S {
        (*other - *self).norm()
    }

    pub fn midpoint(&self, other: &Point2<S>) -> Point2<S> {
        let half = S::one() / (S::one() + S::one());
        Point2::new((self.x + other.x) * half, (self.y + other.y) * half)
    }
}

impl<S: Scalar> Vector2<S> {
    pub fn new(x: S, y: S) -> Self {
        Vector2 { x, y }
    }

    pub fn zero() -> Self {
        Vector2::new(S::zero(), S::zero())
    }

    pub fn from_angle(theta: S) -> Self {
        Vector2::new(theta.cos(), theta.sin())
    }

    pub fn dot(&self, other: &Vector2<S>) -> S {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product.
    pub fn cross(&self, other: &Vector2<S>) -> S {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(&self) -> S {
        self.x.hypot(self.y)
    }

    pub fn norm_squared(&self) -> S {
        self.dot(self)
    }

    pub fn normalized(&self) -> Vector2<S> {
        let n = self.norm();
        Vector2::new(self.x / n, self.y / n)
    }

    pub fn angle(&self) -> S {
        self.y.atan2(self.x)
    }

    /// Rotate by +90 degrees (counter-clockwise).
    pub fn rot90_ccw(&self) -> Vector2<S> {
        Vector2::new(-self.y, self.x)
    }

    /// Rotate by -90 degrees (clockwise).
    pub fn rot90_cw(&self) -> Vector2<S> {
        Vector2::new(self.y, -self.x)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl<S: Scalar> Sub for Point2<S> {
    type Output = Vector2<S>;
    fn sub(self, rhs: Point2<S>) -> Vector2<S> {
        Vector2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<S: Scalar> Add<Vector2<S>> for Point2<S> {
    type Output = Point2<S>;
    fn add(self, rhs: Vector2<S>) -> Point2<S> {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<S: Scalar> Sub<Vector2<S>> for Point2<S> {
    type Output = Point2<S>;
    fn sub(self, rhs: Vector2<S>) -> Point2<S> {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<S: Scalar> Add for Vector2<S> {
    type Output = Vector2<S>;
    fn add(self, rhs: Vector2<S>) -> Vector2<S> {
        Vector2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<S: Scalar> AddAssign for Vector2<S> {
    fn add_assign(&mut self, rhs: Vector2<S>) {
        self.x = self.x + rhs.x;
        self.y = self.y + rhs.y;
    }
}

impl<S: Scalar> Sub for Vector2<S> {
    type Output = Vector2<S>;
    fn sub(self, rhs: Vector2<S>) -> Vector2<S> {
        Vector2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<S: Scalar> Mul<S> for Vector2<S> {
    type Output = Vector2<S>;
    fn mul(self, rhs: S) -> Vector2<S> {
        Vector2::new(self.x * rhs, self.y * rhs)
    }
}

impl<S: Scalar> Div<S> for Vector2<S> {
    type Output = Vector2<S>;
    fn div(self, rhs: S) -> Vector2<S> {
        Vector2::new(self.x / rhs, self.y / rhs)
    }
}

impl<S: Scalar> Neg for Vector2<S> {
    type Output = Vector2<S>;
    fn neg(self) -> Vector2<S> {
        Vector2::new(-self.x, -self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotations() {
        let e = Vector2::new(1.0f64, 0.0);
        assert_eq!(e.rot90_ccw(), Vector2::new(0.0, 1.0));
        assert_eq!(e.rot90_cw(), Vector2::new(0.0, -1.0));
    }

    #[test]
    fn cross_sign() {
        let a = Vector2::new(1.0f64, 0.0);
        let b = Vector2::new(0.0f64, 1.0);
        assert!(a.cross(&b) > 0.0);
        assert!(b.cross(&a) < 0.0);
    }

    #[test]
    fn works_with_f32() {
        let p = Point2::new(1.0f32, 2.0);
        let q = p + Vector2::new(0.5, 0.5);
        assert!((q.distance(&p) - 0.5f32 * std::f32::consts::SQRT_2).abs() < 1e-6);
    }
}
