use crate::error::{Error, Result};
use crate::geometry::{Point3, SphereParams};
use crate::moments::{accumulate, MomentSums};
use crate::system::{build_system, solve_center};

/// Relative tolerance under which a slightly negative squared radius is
/// attributed to rounding.
const NEGATIVE_R2_RTOL: f64 = 1e-9;

/// Radius of the best sphere with the given (world-coordinate) center:
/// the root mean squared distance from `center` to the points.
pub fn radius(moments: &MomentSums, center: Point3) -> Result<f64> {
    radius_local(moments, center - moments.origin)
}

fn radius_local(s: &MomentSums, c: Point3) -> Result<f64> {
    if s.n == 0 {
        return Err(Error::InsufficientPoints { needed: 1, got: 0 });
    }
    let n = s.n as f64;
    let second = s.s_xx + s.s_yy + s.s_zz;
    let r2 = (second - 2.0 * (c.x * s.s_x + c.y * s.s_y + c.z * s.s_z)) / n + c.norm_squared();
    if !r2.is_finite() {
        return Err(Error::NumericalDegeneracy { r_squared: r2 });
    }
    if r2 > 0.0 {
        return Ok(r2.sqrt());
    }
    let scale2 = second / n + c.norm_squared();
    if r2 < -NEGATIVE_R2_RTOL * scale2 {
        Err(Error::NumericalDegeneracy { r_squared: r2 })
    } else {
        Err(Error::ZeroRadius)
    }
}

/// Exact, non-iterative geometric sphere fit.
///
/// Returns the stationary point of [`objective_j`]. Needs at least four
/// points that do not all lie in one plane.
pub fn fit_exact(points: &[Point3]) -> Result<SphereParams> {
    let moments = accumulate(points)?;
    let system = build_system(&moments)?;
    let local = solve_center(&system)?;
    let r = radius_local(&moments, local)?;
    Ok(SphereParams::from_center(moments.origin + local, r))
}

/// `Σ [R² − |pᵢ − c|²]²`, the objective minimized by [`fit_exact`].
pub fn objective_j(points: &[Point3], params: &SphereParams) -> f64 {
    let c = params.center();
    let r2 = params.r * params.r;
    points
        .iter()
        .map(|p| {
            let res = r2 - (*p - c).norm_squared();
            res * res
        })
        .sum()
}
