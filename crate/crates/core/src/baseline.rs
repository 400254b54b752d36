//! Fixed-point geometric sphere fit, used as the comparison baseline.
//!
//! Minimizes `Σ (Lᵢ − r)²` with `Lᵢ = |pᵢ − c|`. For a fixed center the
//! optimal radius is the mean distance `r̄`; setting the center gradient to
//! zero gives the update
//!
//! ```text
//! c ← p̄ + r̄ · mean((c − pᵢ) / Lᵢ)
//! ```
//!
//! which is iterated from the centroid until the center moves less than the
//! configured tolerance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point3, SphereParams};
use crate::MIN_POINTS;

/// Distances below this fraction of the data extent are treated as zero.
const ZERO_DISTANCE_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterativeConfig {
    /// Stop once the Euclidean length of a center step is at most this.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for IterativeConfig {
    /// Tolerance 1e-4 with at most 25 iterations.
    fn default() -> Self {
        IterativeConfig { tolerance: 1e-4, max_iterations: 25 }
    }
}

impl IterativeConfig {
    pub fn new(tolerance: f64, max_iterations: usize) -> Result<Self> {
        let c = IterativeConfig { tolerance, max_iterations };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidConfig(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig("max_iterations must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterativeFitResult {
    pub params: SphereParams,
    pub iterations_used: usize,
    /// The last center step was within tolerance.
    pub converged: bool,
}

/// Runs the fixed-point iteration starting from the data centroid.
pub fn fit_eberly(points: &[Point3], config: &IterativeConfig) -> Result<IterativeFitResult> {
    let centroid = checked_centroid(points)?;
    iterate(points, config, centroid, centroid)
}

/// Same as [`fit_eberly`] but starting from an arbitrary center.
pub fn fit_eberly_from(points: &[Point3], config: &IterativeConfig, start: Point3) -> Result<IterativeFitResult> {
    let centroid = checked_centroid(points)?;
    if !start.is_finite() {
        return Err(Error::InvalidConfig("start center must be finite".into()));
    }
    iterate(points, config, centroid, start)
}

/// `Σ (Lᵢ − r̄)²` for the given center, with `r̄` the mean distance.
pub fn geometric_objective(points: &[Point3], center: Point3) -> f64 {
    if points.is_empty() {
        return 0.0;
    }
    let mean = points.iter().map(|p| p.distance(&center)).sum::<f64>() / points.len() as f64;
    points
        .iter()
        .map(|p| {
            let d = p.distance(&center) - mean;
            d * d
        })
        .sum()
}

fn checked_centroid(points: &[Point3]) -> Result<Point3> {
    if points.len() < MIN_POINTS {
        return Err(Error::InsufficientPoints { needed: MIN_POINTS, got: points.len() });
    }
    let mut sum = Point3::ORIGIN;
    for (index, p) in points.iter().enumerate() {
        if !p.is_finite() {
            return Err(Error::NonFinitePoint { index });
        }
        sum = sum + *p;
    }
    Ok(sum * (1.0 / points.len() as f64))
}

/// Mean distance to `center` and mean unit vector from the points toward it.
fn distance_stats(points: &[Point3], center: Point3, min_dist: f64) -> (f64, Point3) {
    let mut sum_len = 0.0;
    let mut dir = Point3::ORIGIN;
    let mut used = 0usize;
    for p in points {
        let v = center - *p;
        let len = v.norm();
        sum_len += len;
        if len > min_dist {
            dir = dir + v * (1.0 / len);
            used += 1;
        }
    }
    let mean_len = sum_len / points.len() as f64;
    let mean_dir = if used > 0 { dir * (1.0 / used as f64) } else { Point3::ORIGIN };
    (mean_len, mean_dir)
}

fn iterate(points: &[Point3], config: &IterativeConfig, centroid: Point3, start: Point3) -> Result<IterativeFitResult> {
    config.validate()?;
    let extent = points.iter().map(|p| p.distance(&centroid)).fold(0.0, f64::max);
    let min_dist = ZERO_DISTANCE_RTOL * extent.max(f64::MIN_POSITIVE);

    let mut center = start;
    let mut iterations_used = 0;
    let mut converged = false;
    while iterations_used < config.max_iterations {
        iterations_used += 1;
        let (mean_len, mean_dir) = distance_stats(points, center, min_dist);
        let next = centroid + mean_dir * mean_len;
        let step = (next - center).norm();
        center = next;
        if !step.is_finite() {
            return Err(Error::NumericalDegeneracy { r_squared: f64::NAN });
        }
        if step <= config.tolerance {
            converged = true;
            break;
        }
    }

    let (r, _) = distance_stats(points, center, min_dist);
    if r.is_nan() || r <= 0.0 {
        return Err(Error::ZeroRadius);
    }
    Ok(IterativeFitResult { params: SphereParams::from_center(center, r), iterations_used, converged })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron(c: Point3, r: f64) -> Vec<Point3> {
        let mut v = Vec::new();
        for s in [r, -r] {
            v.push(c + Point3::new(s, 0.0, 0.0));
            v.push(c + Point3::new(0.0, s, 0.0));
            v.push(c + Point3::new(0.0, 0.0, s));
        }
        v
    }

    #[test]
    fn config_validation() {
        assert!(IterativeConfig::new(0.0, 10).is_err());
        assert!(IterativeConfig::new(-1.0, 10).is_err());
        assert!(IterativeConfig::new(f64::NAN, 10).is_err());
        assert!(IterativeConfig::new(1e-4, 0).is_err());
        assert_eq!(IterativeConfig::default(), IterativeConfig::new(1e-4, 25).unwrap());
    }

    #[test]
    fn fixed_point_on_exact_sphere() {
        let c = Point3::new(1.0, 2.0, 3.0);
        let pts = octahedron(c, 7.2);
        let res = fit_eberly(&pts, &IterativeConfig::default()).unwrap();
        assert_eq!(res.iterations_used, 1);
        assert!(res.converged);
        assert!((res.params.r - 7.2).abs() < 1e-12);
        assert!(res.params.center().distance(&c) < 1e-12);
    }

    #[test]
    fn start_at_true_center_of_asymmetric_points() {
        let c = Point3::new(-2.0, 0.5, 4.0);
        let pts: Vec<_> = [(0.3, 0.1), (1.2, 2.0), (2.5, -0.4), (0.9, 1.0), (2.0, 2.9)]
            .iter()
            .map(|&(t, p): &(f64, f64)| c + Point3::new(t.sin() * p.cos(), t.sin() * p.sin(), t.cos()) * 3.0)
            .collect();
        let res = fit_eberly_from(&pts, &IterativeConfig::default(), c).unwrap();
        assert_eq!(res.iterations_used, 1);
        assert!(res.converged);
        assert!((res.params.r - 3.0).abs() < 1e-12);
    }

    #[test]
    fn reports_non_convergence() {
        let c = Point3::new(0.0, 0.0, 0.0);
        let pts: Vec<_> = (0..40)
            .map(|i| {
                let t = i as f64 * 0.7;
                let u: f64 = -0.9 + 0.01 * (i % 7) as f64;
                let s = (1.0 - u * u).sqrt();
                c + Point3::new(s * t.cos(), s * t.sin(), u)
            })
            .collect();
        let res = fit_eberly_from(&pts, &IterativeConfig::new(1e-14, 2).unwrap(), Point3::new(0.0, 0.0, -0.5)).unwrap();
        assert_eq!(res.iterations_used, 2);
        assert!(!res.converged);
    }

    #[test]
    fn point_at_iterate_is_skipped() {
        // The centroid coincides with the last point.
        let mut pts = octahedron(Point3::ORIGIN, 1.0);
        pts.push(Point3::ORIGIN);
        let res = fit_eberly(&pts, &IterativeConfig::default()).unwrap();
        assert!(res.params.is_valid());
        assert!(res.params.center().norm() < 1e-12);
    }

    #[test]
    fn input_errors() {
        let pts = octahedron(Point3::ORIGIN, 1.0);
        assert!(matches!(
            fit_eberly(&pts[..3], &IterativeConfig::default()),
            Err(Error::InsufficientPoints { got: 3, .. })
        ));
        let mut bad = pts.clone();
        bad[2].y = f64::INFINITY;
        assert!(matches!(fit_eberly(&bad, &IterativeConfig::default()), Err(Error::NonFinitePoint { index: 2 })));
    }
}
