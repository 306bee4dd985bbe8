use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use qwalk_core::harness::ExperimentSpec;
use qwalk_core::measures::SearchPolicy;
use qwalk_core::walk::Topology;
use serde::Deserialize;

use crate::angle::{parse_angle, AngleValue};
use crate::RunArgs;

const DEFAULT_CYCLE: usize = 51;
const DEFAULT_STEPS: usize = 100;

/// On-disk form of `qwalk run`. Every key is optional and uses the flag's
/// name; flags given on the command line win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunFile {
    pub id: Option<String>,
    pub topology: Option<String>,
    pub n: Option<usize>,
    pub tmax: Option<usize>,
    pub theta: Option<Vec<AngleValue>>,
    pub lambda: Option<Vec<f64>>,
    pub steps: Option<usize>,
    pub record_every: Option<usize>,
    pub out: Option<PathBuf>,
    pub search: Option<SearchPolicy>,
}

impl RunFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }
}

/// Merges flags over the config file into a validated sweep.
pub fn build_spec(args: &RunArgs, file: RunFile) -> Result<ExperimentSpec> {
    let steps = args.steps.or(file.steps).unwrap_or(DEFAULT_STEPS);
    let kind = args
        .topology
        .clone()
        .or(file.topology)
        .unwrap_or_else(|| "cycle".to_string());
    let topology = match kind.as_str() {
        "cycle" => Topology::Cycle {
            n: args.n.or(file.n).unwrap_or(DEFAULT_CYCLE),
        },
        "line" => Topology::Line {
            t_max: args.tmax.or(file.tmax).unwrap_or(steps),
        },
        other => bail!("unknown topology {other:?} (expected line or cycle)"),
    };

    let thetas = if !args.theta.is_empty() {
        args.theta.iter().map(|t| parse_angle(t)).collect::<Result<Vec<_>>>()?
    } else if let Some(list) = file.theta {
        list.iter().map(AngleValue::radians).collect::<Result<Vec<_>>>()?
    } else {
        vec![std::f64::consts::FRAC_PI_4]
    };
    let lambdas = if !args.lambda.is_empty() {
        args.lambda.clone()
    } else {
        file.lambda.unwrap_or_else(|| vec![0.0])
    };

    let spec = ExperimentSpec {
        id: args.id.clone().or(file.id).unwrap_or_else(|| "run".to_string()),
        topology,
        steps,
        thetas,
        lambdas,
        record_every: args.record_every.or(file.record_every).unwrap_or(1),
        output_path: args.out.clone().or(file.out),
        search: file.search.unwrap_or_default(),
        note: String::new(),
    };
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

    fn args() -> RunArgs {
        RunArgs {
            config: None,
            id: None,
            topology: None,
            n: None,
            tmax: None,
            theta: vec![],
            lambda: vec![],
            steps: None,
            record_every: None,
            out: None,
        }
    }

    #[test]
    fn defaults() {
        let spec = build_spec(&args(), RunFile::default()).unwrap();
        assert_eq!(spec.topology, Topology::Cycle { n: 51 });
        assert_eq!(spec.thetas, vec![FRAC_PI_4]);
        assert_eq!(spec.lambdas, vec![0.0]);
        assert_eq!(spec.steps, 100);
    }

    #[test]
    fn flags_override_file() {
        let file: RunFile = toml::from_str(
            r#"
            topology = "line"
            tmax = 40
            theta = ["pi/3", 0.5]
            lambda = [0.1]
            steps = 30
            record-every = 5
            "#,
        )
        .unwrap();
        let mut a = args();
        a.lambda = vec![0.0, 0.2];
        a.steps = Some(20);
        let spec = build_spec(&a, file).unwrap();
        assert_eq!(spec.topology, Topology::Line { t_max: 40 });
        assert!((spec.thetas[0] - FRAC_PI_3).abs() < 1e-15 && spec.thetas[1] == 0.5);
        assert_eq!(spec.lambdas, vec![0.0, 0.2]);
        assert_eq!(spec.steps, 20);
        assert_eq!(spec.record_every, 5);
    }

    #[test]
    fn bad_inputs() {
        let mut a = args();
        a.topology = Some("torus".into());
        assert!(build_spec(&a, RunFile::default()).is_err());
        let mut a = args();
        a.topology = Some("line".into());
        a.tmax = Some(5);
        a.steps = Some(6);
        assert!(build_spec(&a, RunFile::default()).is_err());
        assert!(toml::from_str::<RunFile>("colour = 3").is_err());
    }
}
