use std::path::PathBuf;

use evanesce_core::{Vec3, WaveguideSpec};

use crate::args::{Common, GuideArgs};
use crate::config::ConfigFile;
use crate::table::{Format, Table};
use crate::CliError;

pub mod decay;
pub mod dispersion;
pub mod modes;
pub mod propagator;
pub mod verify;

/// What a subcommand hands back for printing.
#[derive(Debug)]
pub struct Report {
    pub table: Table,
    /// False only when a verification row failed.
    pub passed: bool,
    /// One line for stderr.
    pub summary: Option<String>,
}

impl Report {
    pub fn ok(table: Table) -> Self {
        Self {
            table,
            passed: true,
            summary: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Sink {
    pub format: Format,
    pub out: Option<PathBuf>,
}

pub fn load_config(common: &Common) -> Result<ConfigFile, CliError> {
    match &common.config {
        Some(p) => ConfigFile::load(p),
        None => Ok(ConfigFile::default()),
    }
}

pub fn sink(common: &Common, cfg: &ConfigFile) -> Result<Sink, CliError> {
    Ok(Sink {
        format: cfg.get(common.output, "output", Format::Csv)?,
        out: cfg.opt(common.out.clone(), "out")?,
    })
}

fn parse_vec3(s: &str) -> Result<Vec3, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "orientation must be x,y,z, got '{s}'"
        )));
    }
    let mut v = [0.0; 3];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|e| CliError::Usage(format!("orientation component '{p}': {e}")))?;
    }
    Ok(Vec3::from(v))
}

pub fn guide(args: &GuideArgs, cfg: &ConfigFile) -> Result<WaveguideSpec, CliError> {
    let b1 = cfg.get(args.b1, "b1", 2.0)?;
    let b2 = cfg.get(args.b2, "b2", 1.0)?;
    let orientation = match cfg.opt(args.orientation.clone(), "orientation")? {
        Some(s) => parse_vec3(&s)?,
        None => Vec3::z(),
    };
    let spec = if cfg.switch(args.allow_square, "allow-square")? {
        WaveguideSpec::new_allow_square(b1, b2, orientation)
    } else {
        WaveguideSpec::new(b1, b2, orientation)
    };
    Ok(spec?)
}

/// `n` evenly spaced points from `a` to `b`; a single point sits at `a`.
pub fn linspace(a: f64, b: f64, n: usize, what: &str) -> Result<Vec<f64>, CliError> {
    if n == 0 {
        return Err(CliError::Usage(format!("{what} must be at least 1")));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(CliError::Usage(format!("{what}: grid ends must be finite")));
    }
    if n == 1 {
        return Ok(vec![a]);
    }
    Ok((0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect())
}

pub fn positive(v: f64, name: &str) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Usage(format!("{name} must be positive, got {v}")))
    }
}
