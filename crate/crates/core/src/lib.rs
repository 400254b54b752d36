//! Sphere fitting from 3D point samples.
//!
//! The main estimator, [`fit_exact`], minimizes the squared difference of
//! squared distances
//!
//! ```text
//! J(x0, y0, z0, R) = Σ [R² − (xᵢ−x0)² − (yᵢ−y0)² − (zᵢ−z0)²]²
//! ```
//!
//! without iterating. The stationarity conditions reduce to a symmetric 3×3
//! linear system in the center whose coefficients depend only on the power
//! sums of the coordinates up to third order ([`MomentSums`]). The center is
//! obtained with Cramer's rule and the radius follows in closed form.
//!
//! The crate also ships:
//!
//! * [`fit_eberly`], the classic fixed-point geometric fit used as a baseline,
//! * [`datagen`], a seeded generator of noisy full and partial spheres,
//! * [`eval`], accuracy and timing harnesses built on top of both fitters.
//!
//! ```
//! use spherefit::{fit_exact, Point3};
//!
//! let pts = [
//!     Point3::new(1.0, 0.0, 0.0),
//!     Point3::new(-1.0, 0.0, 0.0),
//!     Point3::new(0.0, 1.0, 0.0),
//!     Point3::new(0.0, 0.0, 1.0),
//! ];
//! let s = fit_exact(&pts).unwrap();
//! assert!((s.r - 1.0).abs() < 1e-12);
//! ```

pub mod baseline;
pub mod datagen;
mod error;
pub mod eval;
mod fit;
mod geometry;
mod moments;
pub mod pointio;
mod system;

pub use baseline::{fit_eberly, fit_eberly_from, IterativeConfig, IterativeFitResult};
pub use datagen::{builtin_case, generate, CaseConfig, NoiseModel};
pub use error::{Error, Result};
pub use eval::{CaseReport, EstimateBatch, Method, TimingRecord};
pub use fit::{fit_exact, objective_j, radius};
pub use geometry::{Point3, SphereParams};
pub use moments::{accumulate, merge, MomentSums};
pub use system::{build_system, solve_center, LinearSystem3, DEGENERACY_RTOL};

/// Fewest points that determine a sphere.
pub const MIN_POINTS: usize = 4;
