use std::f64::consts::PI;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

/// Parses an angle in radians: a plain number or a multiple of pi such as
/// `pi/4`, `5pi/12`, `5*pi/12` or `-pi`.
pub fn parse_angle(text: &str) -> Result<f64> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let lower = compact.to_ascii_lowercase().replace('π', "pi");
    if let Ok(v) = lower.parse::<f64>() {
        return Ok(v);
    }
    let Some(at) = lower.find("pi") else {
        bail!("cannot parse angle {text:?}");
    };
    let head = lower[..at].trim_end_matches('*');
    let tail = &lower[at + 2..];
    let factor = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().with_context(|| format!("bad multiplier in angle {text:?}"))?,
    };
    let divisor = match tail {
        "" => 1.0,
        t => {
            let Some(d) = t.strip_prefix('/') else {
                bail!("cannot parse angle {text:?}");
            };
            d.parse::<f64>().with_context(|| format!("bad divisor in angle {text:?}"))?
        }
    };
    if divisor == 0.0 {
        bail!("zero divisor in angle {text:?}");
    }
    Ok(factor * PI / divisor)
}

/// Angle as written in a config file: either a TOML number or a string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum AngleValue {
    Number(f64),
    Text(String),
}

impl AngleValue {
    pub fn radians(&self) -> Result<f64> {
        match self {
            AngleValue::Number(v) => Ok(*v),
            AngleValue::Text(s) => parse_angle(s),
        }
    }
}
