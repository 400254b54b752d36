use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use spherefit::eval::{
    bench_timing, fit_with, run_case, write_reports_csv, write_reports_json, write_timing_csv, write_timing_json,
    CaseReport,
};
use spherefit::pointio::{read_points_file, write_points};
use spherefit::{builtin_case, generate as gen_points, CaseConfig, Error, IterativeConfig, Method, SphereParams};

use crate::{BenchArgs, EvaluateArgs, FitArgs, Format, GenerateArgs, IterArgs};

pub struct CliError {
    kind: Kind,
    message: String,
}

enum Kind {
    Internal,
    Input,
    Fit,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self.kind {
            Kind::Internal => 1,
            Kind::Input => 2,
            Kind::Fit => 3,
        }
    }

    fn input(message: impl Into<String>) -> Self {
        CliError { kind: Kind::Input, message: message.into() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            e if e.is_fit_error() => Kind::Fit,
            Error::EmptyBatch => Kind::Internal,
            _ => Kind::Input,
        };
        CliError { kind, message: e.to_string() }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError { kind: Kind::Input, message: e.to_string() }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn iter_config(a: IterArgs) -> Result<IterativeConfig> {
    Ok(IterativeConfig::new(a.tol, a.max_iter as usize)?)
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

#[derive(Serialize)]
struct FitOutput {
    method: Method,
    x0: f64,
    y0: f64,
    z0: f64,
    r: f64,
    n_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    converged: Option<bool>,
}

pub fn fit(a: FitArgs) -> Result<()> {
    let points = read_points_file(&a.input).map_err(|e| match e {
        Error::Io(m) => CliError::input(format!("{}: {m}", a.input.display())),
        other => other.into(),
    })?;
    let method: Method = a.method.into();
    let fit = fit_with(method, &points, &iter_config(a.iter)?)?;
    let out = FitOutput {
        method,
        x0: fit.params.x0,
        y0: fit.params.y0,
        z0: fit.params.z0,
        r: fit.params.r,
        n_points: points.len(),
        iterations: fit.iterations,
        converged: fit.iterations.map(|_| fit.converged),
    };
    let json =
        serde_json::to_string_pretty(&out).map_err(|e| CliError { kind: Kind::Internal, message: e.to_string() })?;
    println!("{json}");
    Ok(())
}

pub fn generate(a: GenerateArgs) -> Result<()> {
    let mut cfg = match (a.case, a.center.as_deref()) {
        (Some(case), _) => builtin_case(case as usize)?,
        (None, Some(&[x, y, z])) => CaseConfig {
            case_id: None,
            truth: SphereParams::new(x, y, z, a.radius.unwrap_or(f64::NAN)),
            epsilon: 0.0,
            u_min: -1.0,
            u_max: 1.0,
            n_points: 0,
            seed: 0,
            noise: Default::default(),
        },
        (None, Some(c)) => return Err(CliError::input(format!("--center needs 3 values, got {}", c.len()))),
        (None, None) => return Err(CliError::input("either --case or --center x,y,z with --radius is required")),
    };
    if let Some(v) = a.u_min {
        cfg.u_min = v;
    }
    if let Some(v) = a.u_max {
        cfg.u_max = v;
    }
    if let Some(eps) = a.noise {
        cfg.epsilon = eps;
    }
    let cfg = cfg.with_points(a.n as usize).with_seed(a.seed).with_noise(a.noise_model.into());
    let points = gen_points(&cfg)?;
    let mut w = output(a.out.as_deref())?;
    write_points(&mut w, &points, a.header)?;
    w.flush()?;
    Ok(())
}

pub fn evaluate(a: EvaluateArgs) -> Result<()> {
    let iter = iter_config(a.iter)?;
    let (cases, methods, datasets, points) = if a.paper_tables {
        (vec![1, 2, 3, 4], Method::ALL.to_vec(), if a.fast { 100 } else { 1500 }, 100)
    } else {
        let datasets = if a.fast { 100 } else { a.datasets as usize };
        (a.case.clone(), a.methods.iter().map(|&m| m.into()).collect(), datasets, a.points as usize)
    };

    let mut reports = Vec::new();
    for &case in &cases {
        let mut cfg =
            builtin_case(case as usize)?.with_points(points).with_seed(a.seed).with_noise(a.noise_model.into());
        if let Some(eps) = a.noise {
            cfg.epsilon = eps;
        }
        for &m in &methods {
            reports.push(run_case(&cfg, m, datasets, &iter)?);
        }
    }

    let mut w = output(a.out.as_deref())?;
    if a.paper_tables {
        write_paper_tables(&mut w, &reports)?;
    } else {
        match a.format {
            Format::Csv => write_reports_csv(&mut w, &reports)?,
            Format::Json => {
                write_reports_json(&mut w, &reports)?;
                writeln!(w)?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn write_paper_tables(w: &mut dyn Write, reports: &[CaseReport]) -> Result<()> {
    for (title, method) in
        [("Fitted values, exact method", Method::Exact), ("Fitted values, iterative method", Method::Eberly)]
    {
        writeln!(w, "{title}")?;
        writeln!(w, "{:<8}{:>10}{:>10}{:>10}{:>10}", "", "x0", "y0", "z0", "R")?;
        for r in reports.iter().filter(|r| r.method == method) {
            let case = r.case_id.map_or("-".into(), |c| c.to_string());
            match r.mean_params {
                Some(p) => writeln!(w, "Case {case:<3}{:>10.4}{:>10.4}{:>10.4}{:>10.4}", p.x0, p.y0, p.z0, p.r)?,
                None => writeln!(w, "Case {case:<3}{:>40}", "all fits failed")?,
            }
        }
        writeln!(w)?;
    }
    writeln!(w, "rms_max x 10^3")?;
    write!(w, "{:<10}", "")?;
    for case in 1..=4 {
        write!(w, "{:>10}", format!("Case {case}"))?;
    }
    writeln!(w)?;
    for method in Method::ALL {
        write!(w, "{:<10}", method.name())?;
        for r in reports.iter().filter(|r| r.method == method) {
            match r.rms_max_e3() {
                Some(v) => write!(w, "{v:>10.2}")?,
                None => write!(w, "{:>10}", "-")?,
            }
        }
        writeln!(w)?;
    }
    Ok(())
}

pub fn bench(a: BenchArgs) -> Result<()> {
    let iter = iter_config(a.iter)?;
    let n_list: Vec<usize> = a.n_list.iter().map(|&n| n as usize).collect();
    let mut records = Vec::new();
    for m in &a.methods {
        records.extend(bench_timing((*m).into(), &n_list, a.reps as usize, &iter)?);
    }
    let mut w = output(a.out.as_deref())?;
    match a.format {
        Format::Csv => write_timing_csv(&mut w, &records)?,
        Format::Json => {
            write_timing_json(&mut w, &records)?;
            writeln!(w)?;
        }
    }
    w.flush()?;
    Ok(())
}
