use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

/// A single 3D sample.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const ORIGIN: Point3 = Point3 { x: 0.0, y: 0.0, z: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    #[inline]
    pub fn norm_squared(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    #[inline]
    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    #[inline]
    pub fn distance(&self, other: &Point3) -> f64 {
        (*self - *other).norm()
    }

    #[inline]
    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Point3 {
    fn from(a: [f64; 3]) -> Self {
        Point3::new(a[0], a[1], a[2])
    }
}

impl Add for Point3 {
    type Output = Point3;
    #[inline]
    fn add(self, o: Point3) -> Point3 {
        Point3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point3 {
    type Output = Point3;
    #[inline]
    fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Point3 {
    type Output = Point3;
    #[inline]
    fn mul(self, s: f64) -> Point3 {
        Point3::new(self.x * s, self.y * s, self.z * s)
    }
}

/// Sphere center and radius.
///
/// Estimators only ever return spheres with a finite center and a finite,
/// strictly positive radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphereParams {
    pub x0: f64,
    pub y0: f64,
    pub z0: f64,
    pub r: f64,
}

impl SphereParams {
    pub const fn new(x0: f64, y0: f64, z0: f64, r: f64) -> Self {
        SphereParams { x0, y0, z0, r }
    }

    pub fn from_center(center: Point3, r: f64) -> Self {
        SphereParams::new(center.x, center.y, center.z, r)
    }

    #[inline]
    pub fn center(&self) -> Point3 {
        Point3::new(self.x0, self.y0, self.z0)
    }

    pub fn is_valid(&self) -> bool {
        self.x0.is_finite() && self.y0.is_finite() && self.z0.is_finite() && self.r.is_finite() && self.r > 0.0
    }

    /// Parameters in `(x0, y0, z0, r)` order.
    #[inline]
    pub fn to_array(self) -> [f64; 4] {
        [self.x0, self.y0, self.z0, self.r]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        SphereParams::new(a[0], a[1], a[2], a[3])
    }
}
