use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};

use super::ExperimentSpec;
use crate::error::{Error, Result};
use crate::measures::SearchPolicy;
use crate::walk::Topology;

pub const PRESET_NAMES: [&str; 4] = ["fig1", "fig2", "fig3", "fig4"];

const CYCLE: Topology = Topology::Cycle { n: 51 };
const LINE: Topology = Topology::Line { t_max: 100 };

fn spec(
    id: &str,
    topology: Topology,
    steps: usize,
    thetas: &[f64],
    lambdas: &[f64],
    record_every: usize,
    note: &str,
) -> ExperimentSpec {
    ExperimentSpec {
        id: id.to_string(),
        topology,
        steps,
        thetas: thetas.to_vec(),
        lambdas: lambdas.to_vec(),
        record_every,
        output_path: None,
        search: SearchPolicy::default(),
        note: note.to_string(),
    }
}

/// Sweep grid for the noise-strength figure: weak to moderate damping.
/// Only the recorded times are fixed for this figure; the grid is chosen.
const FIG2_LAMBDAS: [f64; 5] = [0.0, 0.001, 0.01, 0.05, 0.1];

/// Experiments for one named figure.
pub fn preset(name: &str) -> Result<Vec<ExperimentSpec>> {
    let specs = match name {
        // θ = π/2 is the angle named for this figure. That coin is a bit
        // flip, so the walk only alternates between a product state and a
        // maximally entangled one; π/4 may be what is meant. Override with
        // --theta.
        "fig1" => vec![
            spec("fig1_cycle", CYCLE, 200, &[FRAC_PI_2], &[0.0], 1, "unitary walk, 51-cycle; theta=pi/2 bit-flip coin (pi/4 may be intended)"),
            spec("fig1_line", LINE, 100, &[FRAC_PI_2], &[0.0], 1, "unitary walk, line inset; theta=pi/2 bit-flip coin"),
        ],
        "fig2" => vec![
            spec("fig2_cycle", CYCLE, 200, &[FRAC_PI_4], &FIG2_LAMBDAS, 10, "quantumness vs lambda at t=70 and t=200; lambda grid chosen"),
            spec("fig2_line", LINE, 100, &[FRAC_PI_4], &FIG2_LAMBDAS, 100, "line inset at t=100; lambda grid chosen"),
        ],
        "fig3" => vec![spec(
            "fig3_cycle",
            CYCLE,
            200,
            &[PI / 12.0, FRAC_PI_6, FRAC_PI_4, FRAC_PI_3, 5.0 * PI / 12.0],
            &[0.0],
            1,
            "unitary walk, 51-cycle, coin angle sweep",
        )],
        "fig4" => vec![spec("fig4_cycle", CYCLE, 200, &[FRAC_PI_4], &[0.01, 0.1], 1, "noisy walk, 51-cycle, theta=pi/4")],
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    Ok(specs)
}

/// Every preset experiment, in figure order.
pub fn figure_presets() -> Vec<ExperimentSpec> {
    PRESET_NAMES
        .iter()
        .flat_map(|name| preset(name).expect("built-in preset"))
        .collect()
}
