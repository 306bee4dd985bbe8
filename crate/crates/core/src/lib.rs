//! Noisy discrete-time quantum walks on a line and an n-cycle, simulated at
//! the density-matrix level, together with two quantumness measures for the
//! coin–position split: measurement-induced disturbance (MID) and quantum
//! discord (QD).
//!
//! Layers, bottom up:
//!
//! * [`qstate`]: density operators, partial traces, spectra, entropies.
//! * [`channels`]: Kraus channels on the coin (amplitude damping).
//! * [`walk`]: coin, controlled shift, noisy evolution.
//! * [`measures`]: classicalization, MID, discord and its basis search.
//! * [`harness`]: parameter sweeps, figure presets and CSV output.

pub mod channels;
pub mod error;
pub mod harness;
mod linalg;
pub mod measures;
pub mod qstate;
pub mod walk;

pub use error::{Error, Result};
pub use linalg::{max_abs_diff, CMatrix};
