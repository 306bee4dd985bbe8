//! Discrete-time coined quantum walk on a line or an n-cycle, evolved at the
//! density-matrix level.
//!
//! One step is `ρ ↦ N(W ρ W†)` with `W = U(B_θ ⊗ 1)`: coin, then the
//! coin-controlled shift, then the coin noise channel `N` (if any).

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::channels::{self, KrausChannel, NoiseConfig};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::qstate::{partial_trace_coin, DensityOperator, COIN_DIM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Topology {
    /// Line lattice pre-allocated with `2 t_max + 1` sites, origin in the middle.
    Line { t_max: usize },
    /// `n` sites with periodic boundary.
    Cycle { n: usize },
}

impl Topology {
    /// Number of lattice sites held in memory.
    pub fn sites(&self) -> usize {
        match *self {
            Topology::Line { t_max } => 2 * t_max + 1,
            Topology::Cycle { n } => n,
        }
    }

    /// Lattice index of position `x = 0`.
    pub fn origin(&self) -> usize {
        match *self {
            Topology::Line { t_max } => t_max,
            Topology::Cycle { .. } => 0,
        }
    }

    /// Physical position of a lattice index (`-t_max..=t_max` on the line).
    pub fn position_of(&self, index: usize) -> i64 {
        index as i64 - self.origin() as i64
    }

    /// `t_max` for the line, `n` for the cycle.
    pub fn size(&self) -> usize {
        match *self {
            Topology::Line { t_max } => t_max,
            Topology::Cycle { n } => n,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Topology::Line { .. } => "line",
            Topology::Cycle { .. } => "cycle",
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Topology::Line { t_max: 0 } => {
                Err(Error::InvalidTopology("line needs t_max >= 1".into()))
            }
            Topology::Cycle { n } if n < 3 => {
                Err(Error::InvalidTopology(format!("cycle needs n >= 3, got {n}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Topology::Line { t_max } => write!(f, "line(t_max={t_max})"),
            Topology::Cycle { n } => write!(f, "cycle(n={n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WalkConfig {
    pub topology: Topology,
    pub theta: f64,
    pub steps: usize,
    #[serde(default)]
    pub noise: Option<NoiseConfig>,
}

impl WalkConfig {
    pub fn unitary(topology: Topology, theta: f64, steps: usize) -> Self {
        Self {
            topology,
            theta,
            steps,
            noise: None,
        }
    }

    pub fn with_noise(mut self, noise: NoiseConfig) -> Self {
        self.noise = Some(noise);
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.topology.validate()?;
        if !(0.0..=FRAC_PI_2 + 1e-12).contains(&self.theta) {
            return Err(Error::InvalidTheta(self.theta));
        }
        if let Topology::Line { t_max } = self.topology {
            if self.steps > t_max {
                return Err(Error::LineEdgeOverflow {
                    step: self.steps,
                    t_max,
                });
            }
        }
        if let Some(noise) = &self.noise {
            noise.channel()?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct WalkState {
    pub rho: DensityOperator,
    pub t: usize,
    pub config: WalkConfig,
}

/// The symmetric initial coin `(|0⟩ + i|1⟩)/√2`.
pub fn symmetric_coin() -> [Complex64; 2] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [Complex64::new(s, 0.0), Complex64::new(0.0, s)]
}

/// Walker at the origin with the symmetric coin.
pub fn initial_state(config: &WalkConfig) -> Result<WalkState> {
    initial_state_with_coin(config, symmetric_coin())
}

/// Walker at the origin with an arbitrary (normalized on entry) pure coin.
pub fn initial_state_with_coin(config: &WalkConfig, coin: [Complex64; 2]) -> Result<WalkState> {
    config.validate()?;
    let norm = (coin[0].norm_sqr() + coin[1].norm_sqr()).sqrt();
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::InvalidSpec("initial coin vector must be non-zero".into()));
    }
    let sites = config.topology.sites();
    let origin = config.topology.origin();
    let mut psi = DVector::zeros(COIN_DIM * sites);
    psi[origin] = coin[0] / norm;
    psi[sites + origin] = coin[1] / norm;
    Ok(WalkState {
        rho: DensityOperator::from_pure(&psi, sites)?,
        t: 0,
        config: *config,
    })
}

/// `B_θ = [[cos θ, sin θ], [sin θ, −cos θ]]`.
pub fn coin_operator(theta: f64) -> CMatrix {
    let (s, c) = theta.sin_cos();
    CMatrix::from_row_slice(
        2,
        2,
        &[
            Complex64::new(c, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(-c, 0.0),
        ],
    )
}

/// Destination lattice index for coin `c` leaving `index`: coin 0 moves
/// `x → x − 1`, coin 1 moves `x → x + 1`. The line lattice wraps at its ends,
/// which keeps `U` unitary; the step budget guarantees no amplitude reaches
/// the seam.
fn shifted(c: usize, index: usize, sites: usize) -> usize {
    if c == 0 {
        (index + sites - 1) % sites
    } else {
        (index + 1) % sites
    }
}

/// The controlled shift `U` as a dense unitary on coin⊗position.
pub fn shift_operator(topology: &Topology) -> CMatrix {
    let sites = topology.sites();
    let dim = COIN_DIM * sites;
    let mut u = CMatrix::zeros(dim, dim);
    for c in 0..COIN_DIM {
        for x in 0..sites {
            u[(c * sites + shifted(c, x, sites), c * sites + x)] = Complex64::new(1.0, 0.0);
        }
    }
    u
}

/// Applies `W = U(B⊗1)` and then the noise channel.
pub fn step(state: &WalkState) -> Result<WalkState> {
    let config = &state.config;
    if let Topology::Line { t_max } = config.topology {
        if state.t + 1 > t_max {
            return Err(Error::LineEdgeOverflow {
                step: state.t + 1,
                t_max,
            });
        }
    }
    let sites = config.topology.sites();
    let coined = channels::conjugate_coin(&[coin_operator(config.theta)], state.rho.matrix(), sites);

    let dim = COIN_DIM * sites;
    let mut target = vec![0usize; dim];
    for c in 0..COIN_DIM {
        for x in 0..sites {
            target[c * sites + x] = c * sites + shifted(c, x, sites);
        }
    }
    let mut moved = CMatrix::zeros(dim, dim);
    for j in 0..dim {
        for i in 0..dim {
            moved[(target[i], target[j])] = coined[(i, j)];
        }
    }
    let mut rho = DensityOperator::from_matrix_unchecked(moved, sites)?;

    if let Some(noise) = &config.noise {
        let channel: KrausChannel = noise.channel()?;
        rho = channels::apply_to_coin(&channel, &rho)?;
    }
    Ok(WalkState {
        rho,
        t: state.t + 1,
        config: *config,
    })
}

/// Runs `config.steps` steps from the initial state. The observer sees the
/// initial state and every state after a step, in order.
pub fn evolve<F>(config: &WalkConfig, observer: F) -> Result<WalkState>
where
    F: FnMut(&WalkState) -> Result<()>,
{
    evolve_from(initial_state(config)?, config.steps, observer)
}

/// Like [`evolve`] but from an explicit starting state.
pub fn evolve_from<F>(mut state: WalkState, steps: usize, mut observer: F) -> Result<WalkState>
where
    F: FnMut(&WalkState) -> Result<()>,
{
    observer(&state)?;
    for _ in 0..steps {
        state = step(&state)?;
        observer(&state)?;
    }
    Ok(state)
}

/// `p(x, t) = ⟨ψ_x| Tr_c ρ |ψ_x⟩`, indexed by lattice index.
pub fn position_distribution(state: &WalkState) -> Vec<f64> {
    let rho_p = partial_trace_coin(&state.rho);
    (0..rho_p.nrows()).map(|i| rho_p[(i, i)].re).collect()
}
