use evanesce_core::waveguide::{guided_state, velocities};
use evanesce_core::Error;

use super::{guide, linspace, load_config, sink, Report, Sink};
use crate::args::DispersionArgs;
use crate::table::{Cell, Table};
use crate::CliError;

pub const EVANESCENT_NOTE: &str = "evanescent regime - see propagator command";

pub fn run(args: &DispersionArgs) -> Result<(Report, Sink), CliError> {
    let cfg = load_config(&args.common)?;
    let spec = guide(&args.guide, &cfg)?;
    let lo = cfg.get(args.omega_min, "omega-min", 1.0)?;
    let hi = cfg.get(args.omega_max, "omega-max", 5.0)?;
    let steps = cfg.get(args.steps, "steps", 9)?;
    let omega_c = spec.lowest_cutoff();

    let mut table = Table::new(&[
        "omega", "omega_c", "energy", "momentum", "v_group", "v_phase", "vg_dot_vp", "status",
    ]);
    for w in linspace(lo, hi, steps, "steps")? {
        let row: Vec<Cell> = match guided_state(&spec, w) {
            Ok(st) => {
                let v = velocities(&st);
                vec![
                    w.into(),
                    omega_c.into(),
                    st.energy.into(),
                    st.momentum.norm().into(),
                    v.group.norm().into(),
                    v.phase.magnitude().into(),
                    v.product().into(),
                    "traveling".into(),
                ]
            }
            Err(Error::BelowCutoff { .. }) => {
                let mut r = vec![w.into(), omega_c.into()];
                r.extend(std::iter::repeat_n(Cell::Empty, 5));
                r.push(EVANESCENT_NOTE.into());
                r
            }
            Err(e) => return Err(e.into()),
        };
        table.push(row);
    }
    Ok((Report::ok(table), sink(&args.common, &cfg)?))
}
