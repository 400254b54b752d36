//! Power sums of point coordinates up to third order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point3;

/// The sufficient statistics of the exact fit.
///
/// All sums are taken over coordinates relative to `origin`, which
/// [`accumulate`] sets to the data centroid. Working about the centroid keeps
/// the third-order sums free of the cancellation that raw sums suffer when the
/// data sit far from the coordinate origin.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct MomentSums {
    pub n: usize,
    pub origin: Point3,

    pub s_x: f64,
    pub s_y: f64,
    pub s_z: f64,

    pub s_xx: f64,
    pub s_yy: f64,
    pub s_zz: f64,
    pub s_xy: f64,
    pub s_xz: f64,
    pub s_yz: f64,

    pub s_xxx: f64,
    pub s_yyy: f64,
    pub s_zzz: f64,
    pub s_xyy: f64,
    pub s_xzz: f64,
    pub s_xxy: f64,
    pub s_xxz: f64,
    pub s_yzz: f64,
    pub s_yyz: f64,
}

/// Full symmetric tensors of first, second and third moments.
struct Tensors {
    s1: [f64; 3],
    s2: [[f64; 3]; 3],
    s3: [[[f64; 3]; 3]; 3],
}

impl MomentSums {
    /// The moments of no points.
    pub fn empty() -> Self {
        MomentSums::default()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Adds one point expressed relative to `origin`.
    #[inline]
    fn push_local(&mut self, x: f64, y: f64, z: f64) {
        let (xx, yy, zz) = (x * x, y * y, z * z);
        self.n += 1;
        self.s_x += x;
        self.s_y += y;
        self.s_z += z;
        self.s_xx += xx;
        self.s_yy += yy;
        self.s_zz += zz;
        self.s_xy += x * y;
        self.s_xz += x * z;
        self.s_yz += y * z;
        self.s_xxx += xx * x;
        self.s_yyy += yy * y;
        self.s_zzz += zz * z;
        self.s_xyy += x * yy;
        self.s_xzz += x * zz;
        self.s_xxy += xx * y;
        self.s_xxz += xx * z;
        self.s_yzz += y * zz;
        self.s_yyz += yy * z;
    }

    /// Third moment along axes `i`, `j`, `k` (0 = x, 1 = y, 2 = z).
    fn third(&self, i: usize, j: usize, k: usize) -> f64 {
        let mut idx = [i, j, k];
        idx.sort_unstable();
        match idx {
            [0, 0, 0] => self.s_xxx,
            [1, 1, 1] => self.s_yyy,
            [2, 2, 2] => self.s_zzz,
            [0, 0, 1] => self.s_xxy,
            [0, 0, 2] => self.s_xxz,
            [0, 1, 1] => self.s_xyy,
            [0, 2, 2] => self.s_xzz,
            [1, 1, 2] => self.s_yyz,
            [1, 2, 2] => self.s_yzz,
            // s_xyz never enters the fit and is not tracked
            _ => 0.0,
        }
    }

    fn tensors(&self) -> Tensors {
        let s1 = [self.s_x, self.s_y, self.s_z];
        let s2 =
            [[self.s_xx, self.s_xy, self.s_xz], [self.s_xy, self.s_yy, self.s_yz], [self.s_xz, self.s_yz, self.s_zz]];
        let s3 = std::array::from_fn(|i| std::array::from_fn(|j| std::array::from_fn(|k| self.third(i, j, k))));
        Tensors { s1, s2, s3 }
    }

    /// The same point set, with sums re-expressed about `new_origin`.
    ///
    /// Each coordinate `q` about the old origin becomes `q + δ` with
    /// `δ = origin − new_origin`; the sums follow from the binomial
    /// expansion of the products.
    pub fn shifted_to(&self, new_origin: Point3) -> MomentSums {
        if self.n == 0 {
            return MomentSums { origin: new_origin, ..MomentSums::empty() };
        }
        let d = (self.origin - new_origin).to_array();
        let n = self.n as f64;
        let t = self.tensors();
        let s1 = |i: usize| t.s1[i] + n * d[i];
        let s2 = |i: usize, j: usize| t.s2[i][j] + d[i] * t.s1[j] + d[j] * t.s1[i] + n * d[i] * d[j];
        let s3 = |i: usize, j: usize, k: usize| {
            t.s3[i][j][k]
                + d[i] * t.s2[j][k]
                + d[j] * t.s2[i][k]
                + d[k] * t.s2[i][j]
                + d[i] * d[j] * t.s1[k]
                + d[i] * d[k] * t.s1[j]
                + d[j] * d[k] * t.s1[i]
                + n * d[i] * d[j] * d[k]
        };
        MomentSums {
            n: self.n,
            origin: new_origin,
            s_x: s1(0),
            s_y: s1(1),
            s_z: s1(2),
            s_xx: s2(0, 0),
            s_yy: s2(1, 1),
            s_zz: s2(2, 2),
            s_xy: s2(0, 1),
            s_xz: s2(0, 2),
            s_yz: s2(1, 2),
            s_xxx: s3(0, 0, 0),
            s_yyy: s3(1, 1, 1),
            s_zzz: s3(2, 2, 2),
            s_xyy: s3(0, 1, 1),
            s_xzz: s3(0, 2, 2),
            s_xxy: s3(0, 0, 1),
            s_xxz: s3(0, 0, 2),
            s_yzz: s3(1, 2, 2),
            s_yyz: s3(1, 1, 2),
        }
    }

    /// Centroid of the accumulated points in world coordinates.
    pub fn centroid(&self) -> Option<Point3> {
        if self.n == 0 {
            return None;
        }
        let n = self.n as f64;
        Some(self.origin + Point3::new(self.s_x / n, self.s_y / n, self.s_z / n))
    }

    /// The sums in field order, origin and count excluded.
    pub fn sums(&self) -> [f64; 18] {
        [
            self.s_x, self.s_y, self.s_z, self.s_xx, self.s_yy, self.s_zz, self.s_xy, self.s_xz, self.s_yz, self.s_xxx,
            self.s_yyy, self.s_zzz, self.s_xyy, self.s_xzz, self.s_xxy, self.s_xxz, self.s_yzz, self.s_yyz,
        ]
    }
}

/// Accumulates the moment sums of `points` about their centroid.
///
/// Two linear passes: one for the centroid, one for the sums.
pub fn accumulate(points: &[Point3]) -> Result<MomentSums> {
    if points.is_empty() {
        return Ok(MomentSums::empty());
    }
    let mut sum = Point3::ORIGIN;
    for (index, p) in points.iter().enumerate() {
        if !p.is_finite() {
            return Err(Error::NonFinitePoint { index });
        }
        sum = sum + *p;
    }
    let origin = sum * (1.0 / points.len() as f64);

    let mut m = MomentSums { origin, ..MomentSums::empty() };
    for p in points {
        m.push_local(p.x - origin.x, p.y - origin.y, p.z - origin.z);
    }
    Ok(m)
}

/// Combines the moments of two disjoint point sets.
///
/// The result is expressed about the combined centroid, so it agrees with
/// [`accumulate`] on the concatenated points up to rounding.
pub fn merge(a: &MomentSums, b: &MomentSums) -> MomentSums {
    match (a.n, b.n) {
        (0, _) => return *b,
        (_, 0) => return *a,
        _ => {}
    }
    let (ca, cb) = (a.centroid().unwrap(), b.centroid().unwrap());
    let (na, nb) = (a.n as f64, b.n as f64);
    let total = na + nb;
    let target = ca * (na / total) + cb * (nb / total);

    let a = a.shifted_to(target);
    let b = b.shifted_to(target);
    let mut out = MomentSums { n: a.n + b.n, origin: target, ..MomentSums::empty() };
    let (sa, sb) = (a.sums(), b.sums());
    let fields: [&mut f64; 18] = [
        &mut out.s_x,
        &mut out.s_y,
        &mut out.s_z,
        &mut out.s_xx,
        &mut out.s_yy,
        &mut out.s_zz,
        &mut out.s_xy,
        &mut out.s_xz,
        &mut out.s_yz,
        &mut out.s_xxx,
        &mut out.s_yyy,
        &mut out.s_zzz,
        &mut out.s_xyy,
        &mut out.s_xzz,
        &mut out.s_xxy,
        &mut out.s_xxz,
        &mut out.s_yzz,
        &mut out.s_yyz,
    ];
    for (i, f) in fields.into_iter().enumerate() {
        *f = sa[i] + sb[i];
    }
    out
}
