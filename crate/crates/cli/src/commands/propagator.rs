use evanesce_core::propagator::{evaluate, Variant};
use evanesce_core::{s1_oracle, s1_oracle_1d, s2_oracle, QuadratureConfig, Regime, Separation};
use num_complex::Complex64;
use rayon::prelude::*;

use super::{linspace, load_config, positive, sink, Report, Sink};
use crate::args::PropagatorArgs;
use crate::table::{Cell, Table};
use crate::CliError;

pub const LIGHTLIKE_EXCLUDED: &str = "lightlike-excluded";

const BASE_COLUMNS: [&str; 9] = ["index", "t", "r", "x2", "regime", "variant", "re", "im", "abs"];
const ORACLE_COLUMNS: [&str; 4] = ["oracle_re", "oracle_im", "rel_err", "oracle_status"];

pub fn parse_variant(s: &str, one_dim: bool) -> Result<Variant, CliError> {
    let v = match s.trim().to_ascii_lowercase().as_str() {
        "s1" => Variant::S1,
        "s2" => Variant::S2Evanescent,
        "s2full" | "s2-full" => Variant::S2Full,
        "d" => Variant::DMassless,
        other => {
            return Err(CliError::Usage(format!(
                "unknown variant '{other}' (expected s1, s2, s2full or d)"
            )))
        }
    };
    match (one_dim, v) {
        (false, v) => Ok(v),
        (true, Variant::S1) => Ok(Variant::S1OneDim),
        (true, _) => Err(CliError::Usage(
            "--one-dim is only available for variant s1".into(),
        )),
    }
}

type Oracle = fn(f64, f64, f64, &QuadratureConfig) -> evanesce_core::Result<Complex64>;

fn oracle_for(v: Variant) -> Option<Oracle> {
    match v {
        Variant::S1 => Some(s1_oracle),
        Variant::S1OneDim => Some(s1_oracle_1d),
        Variant::S2Evanescent => Some(s2_oracle),
        _ => None,
    }
}

fn row(
    index: usize,
    t: f64,
    r: f64,
    variant: Variant,
    omega_c: f64,
    oracle: Option<Oracle>,
) -> Result<Vec<Cell>, CliError> {
    let sep = Separation::new(t, r)?;
    let mut cells: Vec<Cell> = vec![index.into(), t.into(), r.into(), sep.x2().into()];
    let width = BASE_COLUMNS.len() + if oracle.is_some() { ORACLE_COLUMNS.len() } else { 0 };
    if sep.regime() == Regime::Lightlike {
        cells.push(LIGHTLIKE_EXCLUDED.into());
        cells.push(variant.as_str().into());
        cells.resize(width, Cell::Empty);
        return Ok(cells);
    }
    let v = evaluate(variant, &sep, omega_c)?.value;
    cells.extend([
        sep.regime().as_str().into(),
        variant.as_str().into(),
        v.re.into(),
        v.im.into(),
        v.norm().into(),
    ]);
    if let Some(f) = oracle {
        match f(t, r, omega_c, &QuadratureConfig::default()) {
            Ok(o) => cells.extend([
                o.re.into(),
                o.im.into(),
                ((v - o).norm() / o.norm()).into(),
                "ok".into(),
            ]),
            Err(e) => cells.extend([Cell::Empty, Cell::Empty, Cell::Empty, e.to_string().into()]),
        }
    }
    Ok(cells)
}

pub fn run(args: &PropagatorArgs) -> Result<(Report, Sink), CliError> {
    let cfg = load_config(&args.common)?;
    let omega_c = positive(cfg.get(args.omega_c, "omega-c", 1.0)?, "omega-c")?;
    let one_dim = cfg.switch(args.one_dim, "one-dim")?;
    let name: String = cfg.get(args.variant.clone(), "variant", "s1".to_string())?;
    let variant = parse_variant(&name, one_dim)?;
    let oracle = if cfg.switch(args.oracle, "oracle")? {
        Some(oracle_for(variant).ok_or_else(|| {
            CliError::Usage(format!("--oracle is not available for variant {}", variant.as_str()))
        })?)
    } else {
        None
    };
    let steps = cfg.get(args.steps, "steps", 29)?;
    let ts = linspace(cfg.get(args.t0, "t0", 0.0)?, cfg.get(args.t1, "t1", 0.0)?, steps, "steps")?;
    let rs = linspace(cfg.get(args.r0, "r0", 1.0)?, cfg.get(args.r1, "r1", 15.0)?, steps, "steps")?;

    let mut columns = BASE_COLUMNS.to_vec();
    if oracle.is_some() {
        columns.extend(ORACLE_COLUMNS);
    }
    let rows = ts
        .par_iter()
        .zip(rs.par_iter())
        .enumerate()
        .map(|(i, (&t, &r))| row(i, t, r, variant, omega_c, oracle))
        .collect::<Result<Vec<_>, _>>()?;
    let mut table = Table::new(&columns);
    for r in rows {
        table.push(r);
    }
    Ok((Report::ok(table), sink(&args.common, &cfg)?))
}
