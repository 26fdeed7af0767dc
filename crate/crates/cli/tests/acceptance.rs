//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! fails. Runs without the libtest harness so the lines print in order.

use std::process::Command;
use std::time::{Duration, Instant};

use evanesce_cli::suites::{
    oracle_grid, run_suite, s2_oracle_check, Check, Suite, SuiteOptions, ENVELOPE_TOL, I1_TOL,
};
use evanesce_core::{s2_closed, s2_oracle, QuadratureConfig, Separation};
use serde_json::Value;

struct Outcome {
    id: &'static str,
    title: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
    budget: Duration,
}

fn timed<F: FnOnce() -> (bool, String)>(
    id: &'static str,
    title: &'static str,
    budget_s: u64,
    f: F,
) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = f();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_s);
    Outcome {
        id,
        title,
        passed: passed && elapsed <= budget,
        detail,
        elapsed,
        budget,
    }
}

fn summarize(checks: &[Check]) -> (bool, String) {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed()).collect();
    let worst = checks
        .iter()
        .map(|c| c.max_residual / c.tolerance.max(f64::MIN_POSITIVE))
        .fold(0.0, f64::max);
    let mut detail = format!("{} checks, worst residual/tolerance {worst:.2e}", checks.len());
    for c in &failed {
        detail.push_str(&format!(
            "; FAILED {} ({:.3e} > {:.1e}{})",
            c.identity,
            c.max_residual,
            c.tolerance,
            c.note.as_deref().map(|n| format!(", {n}")).unwrap_or_default()
        ));
    }
    (failed.is_empty(), detail)
}

fn suites(list: &[Suite]) -> Vec<Check> {
    let opts = SuiteOptions::default();
    list.iter().flat_map(|s| run_suite(*s, &opts)).collect()
}

fn only(checks: Vec<Check>, identities: &[&str]) -> Vec<Check> {
    checks
        .into_iter()
        .filter(|c| identities.contains(&c.identity))
        .collect()
}

/// Where the evanescent closed form and its integral part ways most.
fn s2_worst_point() -> String {
    let cfg = QuadratureConfig::default();
    let mut worst = (0.0, 0.0, 0.0, 0.0);
    for (t, r) in oracle_grid() {
        let (Ok(sep), Ok(o)) = (Separation::new(t, r), s2_oracle(t, r, 1.0, &cfg)) else {
            continue;
        };
        let Ok(c) = s2_closed(&sep, 1.0) else { continue };
        let rel = (c.value - o).norm() / o.norm();
        if rel > worst.0 {
            worst = (rel, t, r, (c.value / o).norm());
        }
    }
    format!(
        "worst at (t, r) = ({:.3}, {:.3}) with |closed/integral| = {:.4}",
        worst.1, worst.2, worst.3
    )
}

fn evanesce(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_evanesce"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().ok_or("killed by signal")?;
    Ok((code, String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn csv_json_agree(args: &[&str]) -> Result<(), String> {
    let (c1, csv_text) = evanesce(args)?;
    let mut jargs = args.to_vec();
    jargs.extend(["--output", "json"]);
    let (c2, json_text) = evanesce(&jargs)?;
    if c1 != 0 || c2 != 0 {
        return Err(format!("{args:?} exited {c1}/{c2}"));
    }
    let json: Vec<Value> = serde_json::from_str(&json_text).map_err(|e| e.to_string())?;
    let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
    let headers = rdr.headers().map_err(|e| e.to_string())?.clone();
    let mut n = 0;
    for (rec, obj) in rdr.records().zip(&json) {
        let rec = rec.map_err(|e| e.to_string())?;
        for (h, cv) in headers.iter().zip(rec.iter()) {
            let ok = match &obj[h] {
                Value::Number(x) => {
                    let (a, b) = (cv.parse::<f64>().unwrap_or(f64::NAN), x.as_f64().unwrap());
                    a == b || (a - b).abs() <= 1e-14 * b.abs()
                }
                Value::String(s) => s == cv,
                Value::Bool(b) => b.to_string() == cv,
                Value::Null => cv.is_empty() || cv.parse::<f64>().is_ok_and(|v| !v.is_finite()),
                _ => false,
            };
            if !ok {
                return Err(format!("{args:?}: column {h}: csv '{cv}' vs json {}", obj[h]));
            }
        }
        n += 1;
    }
    if n != json.len() || n == 0 {
        return Err(format!("{args:?}: {n} csv rows vs {} json rows", json.len()));
    }
    Ok(())
}

fn cli_contract() -> (bool, String) {
    let mut notes = Vec::new();
    let mut ok = true;
    match evanesce(&["verify"]) {
        Ok((0, _)) => notes.push("verify exit 0".to_string()),
        Ok((c, _)) => {
            ok = false;
            notes.push(format!("verify exit {c}"));
        }
        Err(e) => {
            ok = false;
            notes.push(e);
        }
    }
    for args in [
        &["propagator", "--oracle"][..],
        &["dispersion"],
        &["decay"],
        &["verify", "--suite", "algebra,special"],
    ] {
        if let Err(e) = csv_json_agree(args) {
            ok = false;
            notes.push(e);
        }
    }
    if ok {
        notes.push("csv/json equal".into());
    }
    let a = evanesce(&["verify", "--seed", "1234"]);
    let b = evanesce(&["verify", "--seed", "1234"]);
    match (a, b) {
        (Ok(a), Ok(b)) if a == b => notes.push("seed 1234 reproduces".into()),
        _ => {
            ok = false;
            notes.push("seed 1234 runs differ".into());
        }
    }
    (ok, notes.join(", "))
}

fn main() {
    let outcomes = vec![
        timed("1", "algebraic identities over 1000 wave vectors", 10, || {
            summarize(&suites(&[Suite::Algebra, Suite::Eigen]))
        }),
        timed("2", "kinematics over 1000 guided states", 5, || {
            summarize(&suites(&[Suite::Kinematics]))
        }),
        timed("3a", "S1 closed form vs momentum integral, 1e-3", 60, || {
            summarize(&only(
                suites(&[Suite::Oracle]),
                &["S1 closed form vs damped momentum integral"],
            ))
        }),
        timed("3b", "S2 closed form vs evanescent integral, 1e-6", 60, || {
            let (ok, detail) = summarize(&[s2_oracle_check()]);
            (ok, if ok { detail } else { format!("{detail}; {}", s2_worst_point()) })
        }),
        timed("4", "decay length 1/omega_c and timelike envelope, 2%", 5, || {
            summarize(&suites(&[Suite::Fit]))
        }),
        timed("5", "structural relations", 5, || {
            summarize(&only(
                suites(&[Suite::Structure]),
                &[
                    "S2 = -S1/2",
                    "full form grows at rate +omega_c",
                    "massless limit D ~ 1/x^2",
                    "S1 -> D at omega_c sqrt|x^2| = 1e-6",
                ],
            ))
        }),
        timed("6", "special functions vs quadrature", 5, || {
            let checks = suites(&[Suite::Special]);
            let envelope_ok = checks.iter().any(|c| c.tolerance == ENVELOPE_TOL);
            let i1_ok = checks.iter().any(|c| c.tolerance == I1_TOL);
            let (ok, detail) = summarize(&only(
                checks,
                &[
                    "H0(z) vs contour quadrature",
                    "H1(z) vs contour quadrature",
                    "|H_nu(z)| sqrt(z) -> sqrt(2/pi) for z >= 40",
                    "I1(x) vs integral representation",
                ],
            ));
            (ok && envelope_ok && i1_ok, detail)
        }),
        timed("7", "command-line contract", 90, cli_contract),
    ];

    let mut failed = 0;
    for o in &outcomes {
        if !o.passed {
            failed += 1;
        }
        println!(
            "criterion {:<3} {} | {} | {:.2} s of {} s | {}",
            o.id,
            if o.passed { "PASS" } else { "FAIL" },
            o.title,
            o.elapsed.as_secs_f64(),
            o.budget.as_secs(),
            o.detail
        );
    }
    println!(
        "acceptance: {} passed, {} failed",
        outcomes.len() - failed,
        failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
