//! Seeded synthetic point clouds on full and partial spheres.
//!
//! A sample is drawn on the band `u ∈ [u_min·R, u_max·R]` of heights above
//! the equator:
//!
//! ```text
//! x = x0 + sqrt(R² − u²)·cos θ
//! y = y0 + sqrt(R² − u²)·sin θ
//! z = z0 + u
//! ```
//!
//! with `θ` and `u` uniform and independent (uniform in `u` is uniform in
//! surface area), then perturbed coordinate-wise by noise of scale `epsilon`.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point3, SphereParams};

/// Per-coordinate additive noise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseModel {
    /// Uniform on `[−ε, +ε]`.
    #[default]
    Uniform,
    /// Normal with standard deviation `ε`.
    Gaussian,
}

impl std::str::FromStr for NoiseModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(NoiseModel::Uniform),
            "gaussian" => Ok(NoiseModel::Gaussian),
            other => Err(Error::InvalidConfig(format!("unknown noise model {other:?}"))),
        }
    }
}

impl std::fmt::Display for NoiseModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NoiseModel::Uniform => "uniform",
            NoiseModel::Gaussian => "gaussian",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseConfig {
    /// Set for the builtin cases.
    pub case_id: Option<usize>,
    pub truth: SphereParams,
    pub epsilon: f64,
    /// Band limits as fractions of the radius, `−1 ≤ u_min < u_max ≤ 1`.
    pub u_min: f64,
    pub u_max: f64,
    pub n_points: usize,
    pub seed: u64,
    #[serde(default)]
    pub noise: NoiseModel,
}

/// Points per dataset in the builtin cases.
pub const DEFAULT_POINTS: usize = 100;

const CASE2_SPHERE: SphereParams = SphereParams::new(2.3423, 0.8764, 45.8785, 9.02321);

/// One of the four reference configurations:
///
/// | case | sphere                               | ε    | u range      |
/// |------|--------------------------------------|------|--------------|
/// | 1    | (1, 2, 3), R = 7.2                   | 0.1  | [−1, 1]      |
/// | 2    | (2.3423, 0.8764, 45.8785), R = 9.02321 | 0.2  | [−1, 1]      |
/// | 3    | same as 2                            | 0.12 | [−1, 0]      |
/// | 4    | same as 2                            | 0.12 | [−1, −0.5]   |
///
/// Cases 1 and 2 cover the full sphere, case 3 the lower hemisphere and case
/// 4 a cap around the south pole.
pub fn builtin_case(index: usize) -> Result<CaseConfig> {
    let (truth, epsilon, u_min, u_max) = match index {
        1 => (SphereParams::new(1.0, 2.0, 3.0, 7.2), 0.1, -1.0, 1.0),
        2 => (CASE2_SPHERE, 0.2, -1.0, 1.0),
        3 => (CASE2_SPHERE, 0.12, -1.0, 0.0),
        4 => (CASE2_SPHERE, 0.12, -1.0, -0.5),
        _ => return Err(Error::UnknownCase(index)),
    };
    Ok(CaseConfig {
        case_id: Some(index),
        truth,
        epsilon,
        u_min,
        u_max,
        n_points: DEFAULT_POINTS,
        seed: 0,
        noise: NoiseModel::Uniform,
    })
}

impl CaseConfig {
    pub fn validate(&self) -> Result<()> {
        let t = &self.truth;
        if !t.is_valid() {
            return Err(Error::InvalidConfig(format!("sphere must be finite with positive radius, got {t:?}")));
        }
        if !(-1.0 <= self.u_min && self.u_min < self.u_max && self.u_max <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "need -1 <= u_min < u_max <= 1, got [{}, {}]",
                self.u_min, self.u_max
            )));
        }
        if !(self.epsilon >= 0.0 && self.epsilon.is_finite()) {
            return Err(Error::InvalidConfig(format!("epsilon must be >= 0, got {}", self.epsilon)));
        }
        if self.n_points == 0 {
            return Err(Error::InvalidConfig("n_points must be at least 1".into()));
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_points(mut self, n_points: usize) -> Self {
        self.n_points = n_points;
        self
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_noise(mut self, noise: NoiseModel) -> Self {
        self.noise = noise;
        self
    }

    /// Configuration of the `index`-th dataset in a batch: seed offset by the
    /// index.
    pub fn for_dataset(&self, index: u64) -> Self {
        CaseConfig { seed: self.seed.wrapping_add(index), ..self.clone() }
    }
}

/// Noise-free point at azimuth `theta` and normalized height `u_norm`.
pub fn parametric_point(truth: &SphereParams, theta: f64, u_norm: f64) -> Point3 {
    let r = truth.r;
    let u = u_norm * r;
    let ring = (r * r - u * u).max(0.0).sqrt();
    Point3::new(truth.x0 + ring * theta.cos(), truth.y0 + ring * theta.sin(), truth.z0 + u)
}

/// Draws `config.n_points` samples. Deterministic in `config.seed`.
pub fn generate(config: &CaseConfig) -> Result<Vec<Point3>> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let eps = config.epsilon;
    let normal = Normal::new(0.0, eps).map_err(|e| Error::InvalidConfig(e.to_string()))?;

    let mut out = Vec::with_capacity(config.n_points);
    for _ in 0..config.n_points {
        let theta = rng.random_range(0.0..TAU);
        let u_norm = rng.random_range(config.u_min..=config.u_max);
        let p = parametric_point(&config.truth, theta, u_norm);
        let p = if eps > 0.0 {
            let mut noise = || match config.noise {
                NoiseModel::Uniform => rng.random_range(-eps..=eps),
                NoiseModel::Gaussian => normal.sample(&mut rng),
            };
            let (dx, dy, dz) = (noise(), noise(), noise());
            p + Point3::new(dx, dy, dz)
        } else {
            p
        };
        out.push(p);
    }
    Ok(out)
}
