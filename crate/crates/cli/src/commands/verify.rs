use super::{load_config, sink, Report, Sink};
use crate::args::VerifyArgs;
use crate::suites::{run_all, Suite, SuiteOptions, Tolerances};
use crate::table::Table;
use crate::CliError;

fn parse_suites(s: &str) -> Result<Vec<Suite>, CliError> {
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let suite: Suite = part.parse().map_err(CliError::Usage)?;
        if !out.contains(&suite) {
            out.push(suite);
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("--suite selects no suites".into()));
    }
    Ok(out)
}

fn tolerance(v: f64, name: &str) -> Result<f64, CliError> {
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Usage(format!("{name} must be a finite non-negative number")))
    }
}

pub fn run(args: &VerifyArgs) -> Result<(Report, Sink), CliError> {
    let cfg = load_config(&args.common)?;
    let d = Tolerances::default();
    let tol = Tolerances {
        algebra: tolerance(cfg.get(args.tol_algebra, "tol-algebra", d.algebra)?, "tol-algebra")?,
        eigen: tolerance(cfg.get(args.tol_eigen, "tol-eigen", d.eigen)?, "tol-eigen")?,
        kinematics: tolerance(
            cfg.get(args.tol_kinematics, "tol-kinematics", d.kinematics)?,
            "tol-kinematics",
        )?,
        special: tolerance(cfg.get(args.tol_special, "tol-special", d.special)?, "tol-special")?,
        oracle: tolerance(cfg.get(args.tol_oracle, "tol-oracle", d.oracle)?, "tol-oracle")?,
        fit: tolerance(cfg.get(args.tol_fit, "tol-fit", d.fit)?, "tol-fit")?,
    };
    let opts = SuiteOptions {
        seed: cfg.get(args.seed, "seed", 42)?,
        trials: cfg.get(args.trials, "trials", 1000)?,
        tol,
    };
    if opts.trials == 0 {
        return Err(CliError::Usage("trials must be at least 1".into()));
    }
    let suites = match cfg.opt(args.suite.clone(), "suite")? {
        Some(s) => parse_suites(&s)?,
        None => Suite::ALL.to_vec(),
    };

    let checks = run_all(&suites, &opts);
    let mut table = Table::new(&[
        "suite",
        "identity",
        "seed",
        "trials",
        "max_residual",
        "tolerance",
        "passed",
        "note",
    ]);
    for c in &checks {
        table.push(vec![
            c.suite.name().into(),
            c.identity.into(),
            opts.seed.into(),
            c.trials.into(),
            c.max_residual.into(),
            c.tolerance.into(),
            c.passed().into(),
            c.note.clone().into(),
        ]);
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    let summary = format!(
        "verify: {}/{} checks passed (seed {})",
        checks.len() - failed,
        checks.len(),
        opts.seed
    );
    Ok((
        Report {
            table,
            passed: failed == 0,
            summary: Some(summary),
        },
        sink(&args.common, &cfg)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_lists() {
        assert_eq!(parse_suites("eigen, algebra,eigen").unwrap(), vec![Suite::Eigen, Suite::Algebra]);
        assert!(parse_suites(",").is_err());
        assert!(parse_suites("algebra,nope").is_err());
    }
}
