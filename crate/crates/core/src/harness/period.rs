use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Shortest series accepted by [`dominant_period`].
pub const MIN_PERIOD_SERIES: usize = 32;

/// Frequency grid refinement relative to the natural `1/N` resolution.
const OVERSAMPLE: usize = 16;

/// Least-squares fit `y ≈ intercept + slope·x`, returned as
/// `(slope, intercept)`.
pub fn linear_trend(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len().min(ys.len()) as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    (slope, my - slope * mx)
}

/// Shortest period searched by [`dominant_period`]. Walk observables carry
/// period-2 and period-3 parity jitter that would otherwise mask the revival
/// period.
pub const DEFAULT_MIN_PERIOD: f64 = 8.0;

/// Period (in samples) of the strongest non-DC component of the linearly
/// detrended series, read off an oversampled periodogram. Only periods of
/// at least [`DEFAULT_MIN_PERIOD`] samples are considered.
pub fn dominant_period(series: &[f64]) -> Result<f64> {
    dominant_period_above(series, DEFAULT_MIN_PERIOD)
}

/// As [`dominant_period`] with an explicit lower bound on the period
/// (clamped to the Nyquist limit of 2 samples).
pub fn dominant_period_above(series: &[f64], min_period: f64) -> Result<f64> {
    let n = series.len();
    if n < MIN_PERIOD_SERIES {
        return Err(Error::SeriesTooShort {
            len: n,
            min: MIN_PERIOD_SERIES,
        });
    }
    let ts: Vec<f64> = (0..n).map(|t| t as f64).collect();
    let (slope, intercept) = linear_trend(&ts, series);
    let residual: Vec<f64> = series
        .iter()
        .zip(&ts)
        .map(|(y, t)| y - (intercept + slope * t))
        .collect();
    let scale = series.iter().map(|v| v.abs()).fold(0.0, f64::max).max(1.0);
    if residual.iter().all(|r| r.abs() <= 1e-12 * scale) {
        return Err(Error::UndefinedPeriod);
    }

    let power = |f: f64| {
        let (mut re, mut im) = (0.0, 0.0);
        for (t, r) in residual.iter().enumerate() {
            let (s, c) = (TAU * f * t as f64).sin_cos();
            re += r * c;
            im -= r * s;
        }
        re * re + im * im
    };
    // f from 1/N (one cycle over the record) up to 1/min_period.
    let f_max = 1.0 / min_period.max(2.0);
    let steps = ((n * OVERSAMPLE) as f64 * f_max).floor() as usize;
    if steps < OVERSAMPLE {
        return Err(Error::SeriesTooShort { len: n, min: min_period.ceil() as usize });
    }
    let mut best = (f64::NEG_INFINITY, 0.0);
    for k in (OVERSAMPLE..=steps).rev() {
        let f = k as f64 / (n * OVERSAMPLE) as f64;
        let p = power(f);
        if p > best.0 {
            best = (p, f);
        }
    }
    Ok(1.0 / best.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_synthetic_sinusoid() {
        let series: Vec<f64> = (0..200).map(|t| (TAU * t as f64 / 17.0).sin()).collect();
        let p = dominant_period(&series).unwrap();
        assert!((p - 17.0).abs() <= 0.5, "{p}");
    }

    #[test]
    fn ignores_linear_drift() {
        let series: Vec<f64> = (0..120)
            .map(|t| 0.05 * t as f64 + 0.3 * (TAU * t as f64 / 24.0).cos())
            .collect();
        let p = dominant_period(&series).unwrap();
        assert!((p - 24.0).abs() <= 0.5, "{p}");
    }

    #[test]
    fn constant_and_short_series_are_errors() {
        assert!(matches!(dominant_period(&[0.7; 64]), Err(Error::UndefinedPeriod)));
        let ramp: Vec<f64> = (0..64).map(|t| t as f64 * 0.1).collect();
        assert!(matches!(dominant_period(&ramp), Err(Error::UndefinedPeriod)));
        assert!(matches!(dominant_period(&[1.0, 2.0]), Err(Error::SeriesTooShort { .. })));
    }

    #[test]
    fn short_period_jitter_is_outside_the_band() {
        let series: Vec<f64> = (0..300)
            .map(|t| {
                let t = t as f64;
                0.2 * (TAU * t / 60.0).sin() + 0.5 * if t as usize % 2 == 0 { 1.0 } else { -1.0 }
            })
            .collect();
        assert!((dominant_period(&series).unwrap() - 60.0).abs() <= 1.0);
        assert!((dominant_period_above(&series, 2.0).unwrap() - 2.0).abs() <= 1e-9);
    }

    #[test]
    fn trend_of_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [3.0, 5.0, 7.0, 9.0];
        let (slope, intercept) = linear_trend(&xs, &ys);
        assert!((slope - 2.0).abs() < 1e-12 && (intercept - 1.0).abs() < 1e-12);
    }
}
