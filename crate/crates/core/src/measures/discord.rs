//! Discord `D(P|C) = min_{α,β} S(P|{N_j}) − S(P|C)` over projective coin
//! measurements, found by a coarse grid followed by shrinking local grids.

use std::collections::HashMap;
use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{conditional_entropy_after_measurement, MeasurementBasis, OUTCOME_FLOOR};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};
use crate::qstate::{entropy_of_eigenvalues, partial_trace_position, von_neumann_entropy, DensityOperator, COIN_DIM};

/// Eigenvalues of `ρ` at or below this are dropped from its factorization
/// when the low-rank evaluation route is used.
const RANK_CUTOFF: f64 = 1e-14;

/// Cap on incumbent moves at one refinement scale.
const MAX_MOVES_PER_ROUND: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchPolicy {
    /// Grid points over `α ∈ [0, π/2]`, both ends included.
    pub coarse_alpha: usize,
    /// Grid points over `β ∈ [0, 2π]`, both ends included.
    pub coarse_beta: usize,
    pub refine_rounds: usize,
    /// Step-size divisor per refinement round.
    pub shrink: f64,
    /// Local grid extends this many steps either side of the incumbent.
    pub refine_half_width: usize,
}

impl Default for SearchPolicy {
    fn default() -> Self {
        Self {
            coarse_alpha: 33,
            coarse_beta: 65,
            refine_rounds: 6,
            shrink: 4.0,
            refine_half_width: 2,
        }
    }
}

impl SearchPolicy {
    fn validate(&self) -> Result<()> {
        if self.coarse_alpha < 2 || self.coarse_beta < 2 {
            return Err(Error::InvalidSpec("discord grid needs at least 2 points per axis".into()));
        }
        if self.refine_rounds > 0 && !(self.shrink > 1.0) {
            return Err(Error::InvalidSpec("refinement shrink factor must exceed 1".into()));
        }
        Ok(())
    }
}

/// Pre-factored evaluator for `S(P|{N_j})`.
///
/// For a coin vector `v`, the unnormalized conditional state is
/// `A_v = Σ_ab conj(v_a) v_b ⟨a|ρ|b⟩`. When `ρ = W W†` has rank `r` below the
/// position dimension, `A_v` shares its non-zero spectrum with the `r × r`
/// Gram matrix `Σ_ab v_a conj(v_b) W_a† W_b`, which is much cheaper.
struct ConditionalKernel {
    /// `[00, 01, 11]` blocks (either `⟨a|ρ|b⟩` or `W_a† W_b`).
    blocks: [CMatrix; 3],
    gram: bool,
}

impl ConditionalKernel {
    fn new(rho: &DensityOperator, eigen: &(Vec<f64>, CMatrix)) -> Self {
        let d = rho.dim_p();
        let (values, vectors) = eigen;
        let rank = values.iter().take_while(|&&v| v > RANK_CUTOFF).count();
        if rank < d {
            let w = CMatrix::from_fn(COIN_DIM * d, rank, |i, k| {
                vectors[(i, k)] * Complex64::new(values[k].sqrt(), 0.0)
            });
            let w0 = w.rows(0, d).into_owned();
            let w1 = w.rows(d, d).into_owned();
            let m = |a: &CMatrix, b: &CMatrix| linalg::matmul(&a.adjoint(), b);
            Self {
                blocks: [m(&w0, &w0), m(&w0, &w1), m(&w1, &w1)],
                gram: true,
            }
        } else {
            Self {
                blocks: [rho.coin_block(0, 0), rho.coin_block(0, 1), rho.coin_block(1, 1)],
                gram: false,
            }
        }
    }

    fn branch(&self, v: &[Complex64; 2]) -> Result<f64> {
        // Gram route uses the conjugate coefficients of the block route.
        let (c00, c11) = (v[0].norm_sqr(), v[1].norm_sqr());
        let c01 = if self.gram { v[0] * v[1].conj() } else { v[0].conj() * v[1] };
        let [b00, b01, b11] = &self.blocks;
        let n = b00.nrows();
        let a = CMatrix::from_fn(n, n, |i, j| {
            b00[(i, j)] * c00 + b11[(i, j)] * c11 + b01[(i, j)] * c01 + (b01[(j, i)] * c01).conj()
        });
        let p = a.trace().re;
        if p < OUTCOME_FLOOR {
            return Ok(0.0);
        }
        let mut values = linalg::hermitian_eigenvalues(&a)?;
        for v in &mut values {
            *v /= p;
        }
        Ok(p * entropy_of_eigenvalues(&values))
    }

    fn conditional_entropy(&self, basis: &MeasurementBasis) -> Result<f64> {
        let [u, v] = basis.vectors();
        Ok(self.branch(&u)? + self.branch(&v)?)
    }
}

/// Grid key shared by every `(i, k)` that names the same measurement. Both
/// poles are the computational basis; `(α, β)` and `(π/2 − α, β + π)` swap
/// the two outcomes and give the same conditional entropy.
fn grid_key(i: usize, k: usize, na: usize, nb: usize) -> (usize, usize) {
    let last = na - 1;
    let period = nb - 1;
    let k = k % period;
    if i == 0 || i == last {
        return (0, 0);
    }
    if last % 2 == 0 && period % 2 == 0 {
        let half = period / 2;
        if 2 * i > last {
            return (last - i, (k + half) % period);
        }
        if 2 * i == last {
            return (i, k % half);
        }
    }
    (i, k)
}

/// Minimum of `f` over the closed `na × nb` grid; first minimum in
/// `(α, β)` row order wins ties.
fn grid_minimum<F>(na: usize, nb: usize, mut f: F) -> Result<(f64, MeasurementBasis)>
where
    F: FnMut(&MeasurementBasis) -> Result<f64>,
{
    let ha = FRAC_PI_2 / (na - 1) as f64;
    let hb = TAU / (nb - 1) as f64;
    let mut cache: HashMap<(usize, usize), f64> = HashMap::new();
    let mut best = (f64::INFINITY, MeasurementBasis::COMPUTATIONAL);
    for i in 0..na {
        for k in 0..nb {
            let basis = MeasurementBasis::canonical(i as f64 * ha, k as f64 * hb);
            let key = grid_key(i, k, na, nb);
            let value = match cache.get(&key) {
                Some(&v) => v,
                None => {
                    let v = f(&basis)?;
                    cache.insert(key, v);
                    v
                }
            };
            if value < best.0 {
                best = (value, basis);
            }
        }
    }
    Ok(best)
}

/// Coarse closed grid, then shrinking local grids around the incumbent.
pub(super) fn minimize_over_bases<F>(policy: &SearchPolicy, mut objective: F) -> Result<(f64, MeasurementBasis)>
where
    F: FnMut(&MeasurementBasis) -> Result<f64>,
{
    policy.validate()?;
    let (na, nb) = (policy.coarse_alpha, policy.coarse_beta);
    let (mut value, mut basis) = grid_minimum(na, nb, &mut objective)?;

    let mut ha = FRAC_PI_2 / (na - 1) as f64;
    let mut hb = TAU / (nb - 1) as f64;
    let m = policy.refine_half_width as i64;
    for _ in 0..policy.refine_rounds {
        ha /= policy.shrink;
        hb /= policy.shrink;
        // Re-centre at this scale until the incumbent stays put, so a tilted
        // valley can be followed before the step shrinks again.
        for _ in 0..MAX_MOVES_PER_ROUND {
            let center = basis;
            for i in -m..=m {
                for k in -m..=m {
                    if i == 0 && k == 0 {
                        continue;
                    }
                    let candidate = MeasurementBasis::canonical(
                        center.alpha + i as f64 * ha,
                        center.beta + k as f64 * hb,
                    );
                    let v = objective(&candidate)?;
                    if v < value {
                        value = v;
                        basis = candidate;
                    }
                }
            }
            if basis == center {
                break;
            }
        }
    }
    Ok((value, basis))
}

/// `S(P|C) = S(ρ) − S(ρ_C)`.
fn conditional_entropy_of(rho: &DensityOperator, joint: f64) -> Result<f64> {
    Ok(joint - von_neumann_entropy(&partial_trace_position(rho))?)
}

/// Quantum discord `D(P|C)` in bits and the minimizing basis.
pub fn discord(rho: &DensityOperator, policy: &SearchPolicy) -> Result<(f64, MeasurementBasis)> {
    policy.validate()?;
    let eigen = linalg::hermitian_eigen(rho.matrix())?;
    let s_joint = entropy_of_eigenvalues(&eigen.0);
    let s_p_given_c = conditional_entropy_of(rho, s_joint)?;
    let kernel = ConditionalKernel::new(rho, &eigen);

    let (value, basis) = minimize_over_bases(policy, |b| kernel.conditional_entropy(b))?;
    Ok((value - s_p_given_c, basis))
}

/// Exhaustive-grid discord using the direct conditional-entropy definition.
/// Upper-bounds the true minimum.
pub fn discord_oracle(rho: &DensityOperator, grid_alpha: usize, grid_beta: usize) -> Result<f64> {
    if grid_alpha < 2 || grid_beta < 2 {
        return Err(Error::InvalidSpec("oracle grid needs at least 2 points per axis".into()));
    }
    let s_joint = von_neumann_entropy(rho.matrix())?;
    let s_p_given_c = conditional_entropy_of(rho, s_joint)?;
    let (value, _) = grid_minimum(grid_alpha, grid_beta, |b| {
        conditional_entropy_after_measurement(rho, b)
    })?;
    Ok(value - s_p_given_c)
}
