//! Accuracy and timing harnesses.
//!
//! Accuracy follows the repeated-dataset protocol: generate many independent
//! datasets from one [`CaseConfig`], fit each, and summarize the estimates by
//! their mean and by [`EstimateBatch::rms_max`]. Timing fits one
//! pre-generated dataset many times per point count.

use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::baseline::{fit_eberly, IterativeConfig};
use crate::datagen::{builtin_case, generate, CaseConfig};
use crate::error::{Error, Result};
use crate::fit::fit_exact;
use crate::geometry::{Point3, SphereParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Eberly,
}

impl Method {
    pub const ALL: [Method; 2] = [Method::Exact, Method::Eberly];

    pub fn name(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Eberly => "eberly",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Method::Exact),
            "eberly" => Ok(Method::Eberly),
            other => Err(Error::InvalidConfig(format!("unknown method {other:?} (expected exact or eberly)"))),
        }
    }
}

/// Outcome of fitting one point set with either method.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitOutcome {
    pub params: SphereParams,
    /// `None` for the exact method.
    pub iterations: Option<usize>,
    pub converged: bool,
}

pub fn fit_with(method: Method, points: &[Point3], iter: &IterativeConfig) -> Result<FitOutcome> {
    match method {
        Method::Exact => Ok(FitOutcome { params: fit_exact(points)?, iterations: None, converged: true }),
        Method::Eberly => {
            let r = fit_eberly(points, iter)?;
            Ok(FitOutcome { params: r.params, iterations: Some(r.iterations_used), converged: r.converged })
        }
    }
}

/// Estimates from repeated datasets together with the sphere they came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateBatch {
    pub estimates: Vec<SphereParams>,
    pub truth: SphereParams,
}

impl EstimateBatch {
    pub fn new(estimates: Vec<SphereParams>, truth: SphereParams) -> Result<Self> {
        if estimates.is_empty() {
            return Err(Error::EmptyBatch);
        }
        if let Some(bad) = estimates.iter().find(|e| !e.to_array().iter().all(|v| v.is_finite())) {
            return Err(Error::InvalidConfig(format!("non-finite estimate {bad:?}")));
        }
        Ok(EstimateBatch { estimates, truth })
    }

    /// Mean squared deviation from the truth of each of `x0, y0, z0, r`.
    pub fn per_parameter_mse(&self) -> Result<[f64; 4]> {
        if self.estimates.is_empty() {
            return Err(Error::EmptyBatch);
        }
        let truth = self.truth.to_array();
        let mut acc = [0.0; 4];
        for e in &self.estimates {
            for (k, v) in e.to_array().into_iter().enumerate() {
                let d = v - truth[k];
                acc[k] += d * d;
            }
        }
        let n = self.estimates.len() as f64;
        Ok(acc.map(|s| s / n))
    }

    /// Largest per-parameter mean squared error,
    ///
    /// ```text
    /// max( Σ(x0ᵢ − x0)²/N, Σ(y0ᵢ − y0)²/N, Σ(z0ᵢ − z0)²/N, Σ(Rᵢ − R)²/N )
    /// ```
    ///
    /// over the `N` estimates. No square root is taken: this is the
    /// convention the reference accuracy tables are reported in, usually
    /// scaled by 10³.
    pub fn rms_max(&self) -> Result<f64> {
        Ok(self.per_parameter_mse()?.into_iter().fold(0.0, f64::max))
    }

    pub fn mean(&self) -> Result<SphereParams> {
        if self.estimates.is_empty() {
            return Err(Error::EmptyBatch);
        }
        let mut acc = [0.0; 4];
        for e in &self.estimates {
            for (k, v) in e.to_array().into_iter().enumerate() {
                acc[k] += v;
            }
        }
        let n = self.estimates.len() as f64;
        Ok(SphereParams::from_array(acc.map(|s| s / n)))
    }
}

/// Summary of one method on one configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case_id: Option<usize>,
    pub method: Method,
    /// Mean over the fits that did not error; `None` if all of them did.
    pub mean_params: Option<SphereParams>,
    pub rms_max: Option<f64>,
    pub datasets: usize,
    pub points_per_dataset: usize,
    /// Fits that errored plus iterative fits that hit the iteration cap.
    pub failures: usize,
    pub errored: usize,
    pub non_converged: usize,
    pub mean_iterations: Option<f64>,
}

impl CaseReport {
    pub fn rms_max_e3(&self) -> Option<f64> {
        self.rms_max.map(|v| v * 1e3)
    }
}

/// Fits `datasets` independent datasets drawn from `config` (seeds
/// `config.seed + i`).
///
/// Per-dataset errors are counted, never propagated. Errored fits are left
/// out of the mean and `rms_max`; iterative fits that did not converge are
/// counted in `failures` but their estimates are kept.
pub fn run_case(config: &CaseConfig, method: Method, datasets: usize, iter: &IterativeConfig) -> Result<CaseReport> {
    config.validate()?;
    iter.validate()?;
    if datasets == 0 {
        return Err(Error::InvalidConfig("datasets must be at least 1".into()));
    }

    let outcomes: Vec<Result<FitOutcome>> = (0..datasets as u64)
        .into_par_iter()
        .map(|i| {
            let points = generate(&config.for_dataset(i))?;
            fit_with(method, &points, iter)
        })
        .collect();

    let mut estimates = Vec::with_capacity(datasets);
    let mut errored = 0;
    let mut non_converged = 0;
    let mut iterations = Vec::new();
    for o in outcomes {
        match o {
            Ok(fit) if fit.params.is_valid() => {
                if !fit.converged {
                    non_converged += 1;
                }
                iterations.extend(fit.iterations);
                estimates.push(fit.params);
            }
            _ => errored += 1,
        }
    }

    let (mean_params, rms_max) = match EstimateBatch::new(estimates, config.truth) {
        Ok(batch) => (Some(batch.mean()?), Some(batch.rms_max()?)),
        Err(_) => (None, None),
    };
    let mean_iterations =
        (!iterations.is_empty()).then(|| iterations.iter().sum::<usize>() as f64 / iterations.len() as f64);

    Ok(CaseReport {
        case_id: config.case_id,
        method,
        mean_params,
        rms_max,
        datasets,
        points_per_dataset: config.n_points,
        failures: errored + non_converged,
        errored,
        non_converged,
        mean_iterations,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingRecord {
    pub method: Method,
    pub n_points: usize,
    pub repetitions: usize,
    pub total_seconds: f64,
    pub seconds_per_fit: f64,
}

/// Seed of the datasets used for timing.
pub const TIMING_SEED: u64 = 0x7153;

/// Times `repetitions` fits of one dataset per entry of `n_list`.
///
/// The dataset (case 1 geometry and noise) is generated before the clock
/// starts, and one untimed warmup fit precedes the timed loop. Runs on the
/// calling thread only.
pub fn bench_timing(
    method: Method,
    n_list: &[usize],
    repetitions: usize,
    iter: &IterativeConfig,
) -> Result<Vec<TimingRecord>> {
    if n_list.is_empty() {
        return Err(Error::InvalidConfig("n_list must not be empty".into()));
    }
    if repetitions == 0 {
        return Err(Error::InvalidConfig("repetitions must be at least 1".into()));
    }
    iter.validate()?;

    let mut out = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let points = generate(&builtin_case(1)?.with_points(n).with_seed(TIMING_SEED))?;
        fit_with(method, &points, iter)?;

        let start = Instant::now();
        for _ in 0..repetitions {
            black_box(fit_with(method, black_box(&points), iter)?);
        }
        let total_seconds = start.elapsed().as_secs_f64();
        out.push(TimingRecord {
            method,
            n_points: n,
            repetitions,
            total_seconds,
            seconds_per_fit: total_seconds / repetitions as f64,
        });
    }
    Ok(out)
}

/// Coefficient of determination of the least-squares line through `(x, y)`.
pub fn linear_r_squared(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let syy: f64 = y.iter().map(|b| (b - my) * (b - my)).sum();
    if sxx == 0.0 || syy == 0.0 {
        return 0.0;
    }
    sxy * sxy / (sxx * syy)
}

/// Flat, serializable view of a [`CaseReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub case: Option<usize>,
    pub method: Method,
    pub x0: Option<f64>,
    pub y0: Option<f64>,
    pub z0: Option<f64>,
    pub r: Option<f64>,
    pub rms_max_e3: Option<f64>,
    pub datasets: usize,
    pub points_per_dataset: usize,
    pub failures: usize,
    pub non_converged: usize,
}

impl From<&CaseReport> for ReportRow {
    fn from(r: &CaseReport) -> Self {
        let p = r.mean_params;
        ReportRow {
            case: r.case_id,
            method: r.method,
            x0: p.map(|p| p.x0),
            y0: p.map(|p| p.y0),
            z0: p.map(|p| p.z0),
            r: p.map(|p| p.r),
            rms_max_e3: r.rms_max_e3(),
            datasets: r.datasets,
            points_per_dataset: r.points_per_dataset,
            failures: r.failures,
            non_converged: r.non_converged,
        }
    }
}

#[derive(Serialize)]
struct TimingRow {
    method: Method,
    n_points: usize,
    repetitions: usize,
    seconds_per_fit: f64,
}

fn write_csv<W: Write, T: Serialize>(w: W, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    for row in rows {
        wtr.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn write_reports_csv<W: Write>(w: W, reports: &[CaseReport]) -> Result<()> {
    write_csv(w, reports.iter().map(ReportRow::from))
}

pub fn write_reports_json<W: Write>(w: W, reports: &[CaseReport]) -> Result<()> {
    let rows: Vec<ReportRow> = reports.iter().map(ReportRow::from).collect();
    serde_json::to_writer_pretty(w, &rows).map_err(|e| Error::Io(e.to_string()))
}

/// Columns `method,n_points,repetitions,seconds_per_fit`.
pub fn write_timing_csv<W: Write>(w: W, records: &[TimingRecord]) -> Result<()> {
    write_csv(
        w,
        records.iter().map(|t| TimingRow {
            method: t.method,
            n_points: t.n_points,
            repetitions: t.repetitions,
            seconds_per_fit: t.seconds_per_fit,
        }),
    )
}

pub fn write_timing_json<W: Write>(w: W, records: &[TimingRecord]) -> Result<()> {
    serde_json::to_writer_pretty(w, records).map_err(|e| Error::Io(e.to_string()))
}
