//! The 3×3 center system and its closed-form solution.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point3;
use crate::moments::MomentSums;
use crate::MIN_POINTS;

/// Relative determinant threshold below which the center system is treated
/// as singular.
pub const DEGENERACY_RTOL: f64 = 1e-9;

/// Linear system for the sphere center:
///
/// ```text
/// a·x0 + b·y0 + c·z0 = d
/// e·x0 + f·y0 + g·z0 = h
/// j·x0 + k·y0 + l·z0 = m
/// ```
///
/// Coordinates are relative to the `origin` of the moments it was built
/// from. The coefficient matrix is symmetric: `b == e`, `c == j`, `g == k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearSystem3 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub h: f64,
    pub j: f64,
    pub k: f64,
    pub l: f64,
    pub m: f64,
}

impl LinearSystem3 {
    /// Determinant of the coefficient matrix, expanded along the first column.
    pub fn determinant(&self) -> f64 {
        let LinearSystem3 { a, b, c, e, f, g, j, k, l, .. } = *self;
        a * (f * l - g * k) - e * (b * l - c * k) + j * (b * g - c * f)
    }

    /// Product over rows of the largest coefficient magnitude in that row.
    /// Bounds `|det|` up to a factor of 6 and carries the same units.
    pub fn scale(&self) -> f64 {
        let row = |p: f64, q: f64, r: f64| p.abs().max(q.abs()).max(r.abs());
        row(self.a, self.b, self.c) * row(self.e, self.f, self.g) * row(self.j, self.k, self.l)
    }
}

/// Builds the center system from moment sums.
///
/// Each row is the stationarity condition of the objective in one center
/// coordinate after eliminating the radius.
pub fn build_system(s: &MomentSums) -> Result<LinearSystem3> {
    if s.n < MIN_POINTS {
        return Err(Error::InsufficientPoints { needed: MIN_POINTS, got: s.n });
    }
    let n = s.n as f64;
    let a1 = s.s_xx + s.s_yy + s.s_zz;

    let a = 2.0 * s.s_x * s.s_x - 2.0 * n * s.s_xx;
    let b = 2.0 * s.s_x * s.s_y - 2.0 * n * s.s_xy;
    let c = 2.0 * s.s_x * s.s_z - 2.0 * n * s.s_xz;
    let d = -n * (s.s_xxx + s.s_xyy + s.s_xzz) + a1 * s.s_x;

    let f = 2.0 * s.s_y * s.s_y - 2.0 * n * s.s_yy;
    let g = 2.0 * s.s_y * s.s_z - 2.0 * n * s.s_yz;
    let h = -n * (s.s_xxy + s.s_yyy + s.s_yzz) + a1 * s.s_y;

    let l = 2.0 * s.s_z * s.s_z - 2.0 * n * s.s_zz;
    let m = -n * (s.s_xxz + s.s_yyz + s.s_zzz) + a1 * s.s_z;

    Ok(LinearSystem3 { a, b, c, d, e: b, f, g, h, j: c, k: g, l, m })
}

/// Solves the center system by Cramer's rule.
///
/// Fails with [`Error::DegenerateGeometry`] when `|det| <= DEGENERACY_RTOL * scale`.
pub fn solve_center(sys: &LinearSystem3) -> Result<Point3> {
    let LinearSystem3 { a, b, c, d, e, f, g, h, j, k, l, m } = *sys;
    let det = sys.determinant();
    let threshold = DEGENERACY_RTOL * sys.scale();
    if !det.is_finite() || det.abs() <= threshold {
        return Err(Error::DegenerateGeometry { det, threshold });
    }
    let x = (d * (f * l - g * k) - h * (b * l - c * k) + m * (b * g - c * f)) / det;
    let y = (a * (h * l - m * g) - e * (d * l - m * c) + j * (d * g - h * c)) / det;
    let z = (a * (f * m - h * k) - e * (b * m - d * k) + j * (b * h - d * f)) / det;
    Ok(Point3::new(x, y, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::accumulate;

    fn axis_points() -> Vec<Point3> {
        vec![
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(-1.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
            Point3::new(0.0, -1.0, 0.0),
            Point3::new(0.0, 0.0, 1.0),
            Point3::new(0.0, 0.0, -1.0),
        ]
    }

    #[test]
    fn axis_points_system() {
        let sys = build_system(&accumulate(&axis_points()).unwrap()).unwrap();
        // a = 2·0² − 2·6·2
        assert_eq!(sys.a, -24.0);
        assert_eq!(sys.f, -24.0);
        assert_eq!(sys.l, -24.0);
        for v in [sys.b, sys.c, sys.d, sys.e, sys.g, sys.h, sys.j, sys.k, sys.m] {
            assert_eq!(v, 0.0);
        }
    }

    #[test]
    fn too_few_points() {
        let m = accumulate(&axis_points()[..3]).unwrap();
        assert_eq!(build_system(&m), Err(Error::InsufficientPoints { needed: 4, got: 3 }));
    }

    #[test]
    fn diagonal_system() {
        let sys = LinearSystem3 {
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 2.0,
            e: 0.0,
            f: 1.0,
            g: 0.0,
            h: 3.0,
            j: 0.0,
            k: 0.0,
            l: 1.0,
            m: 4.0,
        };
        assert_eq!(solve_center(&sys).unwrap(), Point3::new(2.0, 3.0, 4.0));
    }

    #[test]
    fn coplanar_points_are_degenerate() {
        let pts = [
            Point3::new(1.0, 0.0, 0.0),
            Point3::new(-1.0, 0.0, 0.0),
            Point3::new(0.0, 1.0, 0.0),
            Point3::new(0.3, -2.0, 0.0),
        ];
        let sys = build_system(&accumulate(&pts).unwrap()).unwrap();
        assert!(matches!(solve_center(&sys), Err(Error::DegenerateGeometry { .. })));
    }

    #[test]
    fn collinear_points_are_degenerate() {
        let pts: Vec<_> = (0..10).map(|i| Point3::new(i as f64, 2.0 * i as f64, -(i as f64))).collect();
        let sys = build_system(&accumulate(&pts).unwrap()).unwrap();
        assert!(matches!(solve_center(&sys), Err(Error::DegenerateGeometry { .. })));
    }

    #[test]
    fn zero_matrix_is_degenerate() {
        let sys = LinearSystem3 {
            a: 0.0,
            b: 0.0,
            c: 0.0,
            d: 1.0,
            e: 0.0,
            f: 0.0,
            g: 0.0,
            h: 1.0,
            j: 0.0,
            k: 0.0,
            l: 0.0,
            m: 1.0,
        };
        assert!(matches!(solve_center(&sys), Err(Error::DegenerateGeometry { .. })));
    }
}
