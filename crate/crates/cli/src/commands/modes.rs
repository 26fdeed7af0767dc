use std::f64::consts::PI;

use evanesce_core::waveguide::{compton_wavelength, enumerate_modes};

use super::{guide, load_config, positive, sink, Report, Sink};
use crate::args::ModesArgs;
use crate::table::Table;
use crate::CliError;

pub fn run(args: &ModesArgs) -> Result<(Report, Sink), CliError> {
    let cfg = load_config(&args.common)?;
    let spec = guide(&args.guide, &cfg)?;
    let max_freq = positive(cfg.get(args.max_freq, "max-freq", 2.0 * PI)?, "max-freq")?;

    let mut table = Table::new(&["r", "s", "omega_crs", "compton_wavelength"]);
    for (mode, w) in enumerate_modes(&spec, max_freq) {
        table.push(vec![
            mode.r().into(),
            mode.s().into(),
            w.into(),
            compton_wavelength(w)?.into(),
        ]);
    }
    Ok((Report::ok(table), sink(&args.common, &cfg)?))
}
