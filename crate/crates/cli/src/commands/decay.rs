use evanesce_core::propagator::{evaluate, Variant};
use evanesce_core::{decay_length_fit, DecayModel, Separation};

use super::{linspace, load_config, positive, sink, Report, Sink};
use crate::args::DecayArgs;
use crate::table::Table;
use crate::CliError;

pub fn run(args: &DecayArgs) -> Result<(Report, Sink), CliError> {
    let cfg = load_config(&args.common)?;
    let omega_c = positive(cfg.get(args.omega_c, "omega-c", 1.0)?, "omega-c")?;
    let name: String = cfg.get(args.variant.clone(), "variant", "s1".to_string())?;
    let variant = match name.trim() {
        "s1" => Variant::S1,
        "s2" => Variant::S2Evanescent,
        other => {
            return Err(CliError::Usage(format!(
                "decay needs variant s1 or s2, got '{other}'"
            )))
        }
    };
    let d_min = positive(cfg.get(args.d_min, "d-min", 5.0 / omega_c)?, "d-min")?;
    let d_max = positive(cfg.get(args.d_max, "d-max", 15.0 / omega_c)?, "d-max")?;
    if d_max <= d_min {
        return Err(CliError::Usage(format!("need d-max > d-min, got {d_min} .. {d_max}")));
    }
    let n = cfg.get(args.samples, "samples", 41)?;

    let samples = linspace(d_min, d_max, n, "samples")?
        .into_iter()
        .map(|d| Ok((d, evaluate(variant, &Separation::spacelike(d)?, omega_c)?.value.norm())))
        .collect::<Result<Vec<_>, CliError>>()?;

    let expected = 1.0 / omega_c;
    let mut table = Table::new(&[
        "variant",
        "model",
        "omega_c",
        "d_min",
        "d_max",
        "samples",
        "lambda",
        "expected_lambda",
        "rel_deviation",
        "alpha",
        "rms_log_residual",
    ]);
    for model in [DecayModel::PowerLawExponential, DecayModel::Exponential] {
        let fit = decay_length_fit(&samples, model)?;
        table.push(vec![
            variant.as_str().into(),
            model.as_str().into(),
            omega_c.into(),
            d_min.into(),
            d_max.into(),
            n.into(),
            fit.lambda.into(),
            expected.into(),
            (fit.lambda / expected - 1.0).into(),
            fit.alpha.into(),
            fit.rel_err.into(),
        ]);
    }
    Ok((Report::ok(table), sink(&args.common, &cfg)?))
}
