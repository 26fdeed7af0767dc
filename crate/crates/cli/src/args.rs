use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::table::Format;

const CONFIG_HELP: &str = "\
Config files hold one `key = value` per line, keyed by long flag name
(for example `omega-c = 2`, `output = json`); `#` starts a comment.
Precedence is flags, then config file, then defaults.

Exit status: 0 success, 1 verification failure, 2 usage or config error.";

#[derive(Debug, Parser)]
#[command(
    name = "evanesce",
    version,
    about = "Guided-photon kinematics and evanescent-mode propagators in rectangular waveguides",
    after_help = CONFIG_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the seeded identity and oracle suites.
    Verify(VerifyArgs),
    /// Table of mode cutoff frequencies.
    Modes(ModesArgs),
    /// Energy, momentum and velocities over a frequency grid.
    Dispersion(DispersionArgs),
    /// Propagator values along a segment in the (t, r) plane.
    Propagator(PropagatorArgs),
    /// Fit the spacelike decay length of a propagator.
    Decay(DecayArgs),
}

#[derive(Debug, Args, Clone, Default)]
pub struct Common {
    /// Output format: csv or json [default: csv]
    #[arg(long)]
    pub output: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flat key = value config file.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args, Clone, Default)]
pub struct GuideArgs {
    /// Broad side of the guide cross-section [default: 2]
    #[arg(long)]
    pub b1: Option<f64>,
    /// Narrow side of the guide cross-section [default: 1]
    #[arg(long)]
    pub b2: Option<f64>,
    /// Guide axis as x,y,z [default: 0,0,1]
    #[arg(long)]
    pub orientation: Option<String>,
    /// Accept a square cross-section (b1 = b2).
    #[arg(long)]
    pub allow_square: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    /// Seed for the randomized trials [default: 42]
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random trials per identity [default: 1000]
    #[arg(long)]
    pub trials: Option<usize>,
    /// Comma-separated subset of suites: algebra, eigen, kinematics, special, oracle, structure, fit
    #[arg(long)]
    pub suite: Option<String>,
    /// Tolerance for exact algebraic identities [default: 1e-12]
    #[arg(long)]
    pub tol_algebra: Option<f64>,
    /// Tolerance for eigenvalue checks, relative to |k| [default: 1e-10]
    #[arg(long)]
    pub tol_eigen: Option<f64>,
    /// Relative tolerance for kinematic invariants [default: 1e-10]
    #[arg(long)]
    pub tol_kinematics: Option<f64>,
    /// Relative tolerance for special functions vs quadrature [default: 1e-8]
    #[arg(long)]
    pub tol_special: Option<f64>,
    /// Relative tolerance for propagator closed form vs oracle [default: 1e-3]
    #[arg(long)]
    pub tol_oracle: Option<f64>,
    /// Relative tolerance for fitted decay lengths and envelopes [default: 0.02]
    #[arg(long)]
    pub tol_fit: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ModesArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub guide: GuideArgs,
    /// Highest cutoff to list [default: 2 pi]
    #[arg(long)]
    pub max_freq: Option<f64>,
}

#[derive(Debug, Args)]
pub struct DispersionArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub guide: GuideArgs,
    /// First frequency [default: 1]
    #[arg(long)]
    pub omega_min: Option<f64>,
    /// Last frequency [default: 5]
    #[arg(long)]
    pub omega_max: Option<f64>,
    /// Number of frequencies [default: 9]
    #[arg(long)]
    pub steps: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PropagatorArgs {
    #[command(flatten)]
    pub common: Common,
    /// Cutoff frequency acting as mass [default: 1]
    #[arg(long)]
    pub omega_c: Option<f64>,
    /// s1, s2, s2full or d [default: s1]
    #[arg(long)]
    pub variant: Option<String>,
    /// Segment start time [default: 0]
    #[arg(long)]
    pub t0: Option<f64>,
    /// Segment end time [default: 0]
    #[arg(long)]
    pub t1: Option<f64>,
    /// Segment start distance [default: 1]
    #[arg(long)]
    pub r0: Option<f64>,
    /// Segment end distance [default: 15]
    #[arg(long)]
    pub r1: Option<f64>,
    /// Number of points on the segment [default: 29]
    #[arg(long)]
    pub steps: Option<usize>,
    /// Add a quadrature cross-check column (s1 and s2 only).
    #[arg(long)]
    pub oracle: bool,
    /// One-dimensional momentum measure (s1 only).
    #[arg(long)]
    pub one_dim: bool,
}

#[derive(Debug, Args)]
pub struct DecayArgs {
    #[command(flatten)]
    pub common: Common,
    /// Cutoff frequency acting as mass [default: 1]
    #[arg(long)]
    pub omega_c: Option<f64>,
    /// s1 or s2 [default: s1]
    #[arg(long)]
    pub variant: Option<String>,
    /// Smallest spacelike distance [default: 5/omega_c]
    #[arg(long)]
    pub d_min: Option<f64>,
    /// Largest spacelike distance [default: 15/omega_c]
    #[arg(long)]
    pub d_max: Option<f64>,
    /// Number of samples [default: 41]
    #[arg(long)]
    pub samples: Option<usize>,
}
