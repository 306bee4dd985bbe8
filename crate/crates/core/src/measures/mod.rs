//! Quantumness of coin–position states: measurement-induced disturbance (MID)
//! and quantum discord with the coin as the measured party.

mod discord;
mod disturbance;

pub use discord::{discord, discord_oracle, SearchPolicy};
pub use disturbance::{classicalize, classicalize_coarse, mid, mid_coarse, mid_with};

use disturbance::{disturbance_from, reduced_spectra, resolve};

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::qstate::{partial_trace_position, von_neumann_entropy, DensityOperator, Entropies, COIN_DIM};

/// Measurement branches with probability below this are dropped.
pub const OUTCOME_FLOOR: f64 = 1e-12;

/// Eigenvalues above this count when flagging degenerate marginals.
pub(crate) const DEGENERACY_FLOOR: f64 = 1e-10;

/// Rank-1 projective coin measurement
/// `{cos α|0⟩ + e^{iβ} sin α|1⟩, e^{−iβ} sin α|0⟩ − cos α|1⟩}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasurementBasis {
    pub alpha: f64,
    pub beta: f64,
}

impl MeasurementBasis {
    pub const COMPUTATIONAL: Self = Self {
        alpha: 0.0,
        beta: 0.0,
    };

    /// Strict constructor: `α ∈ [0, π/2]`, `β ∈ [0, 2π)`.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(0.0..=FRAC_PI_2).contains(&alpha) {
            return Err(Error::InvalidBasis(format!("alpha {alpha} outside [0, pi/2]")));
        }
        if !(0.0..TAU).contains(&beta) {
            return Err(Error::InvalidBasis(format!("beta {beta} outside [0, 2pi)")));
        }
        Ok(Self { alpha, beta })
    }

    /// Folds arbitrary angles into the canonical ranges while describing the
    /// same pair of projectors.
    pub fn canonical(alpha: f64, beta: f64) -> Self {
        // α ↦ α + π flips the sign of both vectors; α ↦ −α is β ↦ β + π.
        let mut alpha = alpha.rem_euclid(PI);
        let mut beta = beta;
        if alpha > FRAC_PI_2 {
            alpha = PI - alpha;
            beta += PI;
        }
        let mut beta = beta.rem_euclid(TAU);
        if beta >= TAU {
            beta = 0.0;
        }
        Self { alpha, beta }
    }

    /// The two orthonormal basis vectors.
    pub fn vectors(&self) -> [[Complex64; 2]; 2] {
        let (s, c) = self.alpha.sin_cos();
        let phase = Complex64::from_polar(1.0, self.beta);
        [
            [Complex64::new(c, 0.0), phase * s],
            [phase.conj() * s, Complex64::new(-c, 0.0)],
        ]
    }

    /// `|v_j⟩⟨v_j|` for both outcomes.
    pub fn projectors(&self) -> [CMatrix; 2] {
        self.vectors().map(|v| {
            CMatrix::from_fn(COIN_DIM, COIN_DIM, |i, j| v[i] * v[j].conj())
        })
    }
}

/// Per-step quantumness figures, all in bits.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumnessRecord {
    pub t: usize,
    pub mid: f64,
    pub qd: f64,
    pub mutual_info: f64,
    pub s_coin: f64,
    pub s_pos: f64,
    pub s_joint: f64,
    pub qd_argmin: MeasurementBasis,
    /// A reduced state had a repeated non-zero eigenvalue, so the MID
    /// eigenbasis was chosen by minimization rather than fixed by the state.
    pub degenerate_marginal: bool,
}

impl QuantumnessRecord {
    pub fn check_invariants(&self) -> Result<()> {
        if self.qd > self.mid + 1e-6 {
            return Err(Error::InvalidSpec(format!(
                "t={}: discord {} exceeds MID {}",
                self.t, self.qd, self.mid
            )));
        }
        for s in [self.s_coin, self.s_pos, self.s_joint] {
            if s < -1e-9 {
                return Err(Error::InvalidSpec(format!("t={}: negative entropy {s}", self.t)));
            }
        }
        Ok(())
    }
}

/// `Tr_C[(N⊗I) ρ (N⊗I)]` for a coin operator `N`, summing over coin blocks.
fn conditional_block(rho: &DensityOperator, n: &CMatrix) -> CMatrix {
    let d = rho.dim_p();
    let mut out = CMatrix::zeros(d, d);
    for a in 0..COIN_DIM {
        for b in 0..COIN_DIM {
            // Σ_c N[c,a] N†[b,c]: coefficient of block ⟨a|ρ|b⟩.
            let w: Complex64 = (0..COIN_DIM).map(|c| n[(c, a)] * n[(c, b)].conj()).sum();
            if w.norm_sqr() == 0.0 {
                continue;
            }
            out += rho.coin_block(a, b) * w;
        }
    }
    out
}

/// `S(P|{N_j}) = Σ_j p_j S(ρ_{P|j})` for a projective coin measurement.
pub fn conditional_entropy_after_measurement(
    rho: &DensityOperator,
    basis: &MeasurementBasis,
) -> Result<f64> {
    let mut total = 0.0;
    for n in basis.projectors() {
        let unnormalized = conditional_block(rho, &n);
        let p = unnormalized.trace().re;
        if p < OUTCOME_FLOOR {
            continue;
        }
        total += p * von_neumann_entropy(&(unnormalized / Complex64::new(p, 0.0)))?;
    }
    Ok(total)
}

/// `S(ρ_C)` of a pure state.
pub fn entanglement_entropy(rho: &DensityOperator) -> Result<f64> {
    let purity = rho.purity();
    if purity <= 1.0 - 1e-8 {
        return Err(Error::NotPure { purity });
    }
    von_neumann_entropy(&partial_trace_position(rho))
}

/// All quantumness figures for one state.
pub fn quantumness(rho: &DensityOperator, t: usize, policy: &SearchPolicy) -> Result<QuantumnessRecord> {
    let (coin, pos) = reduced_spectra(rho)?;
    let entropies = Entropies::of(rho)?;
    let mid = disturbance_from(entropies.joint, &resolve(rho, &coin, &pos, policy)?);
    let (qd, qd_argmin) = discord(rho, policy)?;
    Ok(QuantumnessRecord {
        t,
        mid,
        qd,
        mutual_info: entropies.mutual_information(),
        s_coin: entropies.coin,
        s_pos: entropies.position,
        s_joint: entropies.joint,
        qd_argmin,
        degenerate_marginal: coin.has_degenerate_support(DEGENERACY_FLOOR)
            || pos.has_degenerate_support(DEGENERACY_FLOOR),
    })
}
