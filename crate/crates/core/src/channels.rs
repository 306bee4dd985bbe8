//! Kraus-operator noise channels acting on the coin register.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::qstate::{DensityOperator, COIN_DIM};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseKind {
    #[default]
    AmplitudeDamping,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoiseConfig {
    #[serde(default)]
    pub kind: NoiseKind,
    pub lambda: f64,
}

impl NoiseConfig {
    pub fn amplitude_damping(lambda: f64) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(Self {
            kind: NoiseKind::AmplitudeDamping,
            lambda,
        })
    }

    pub fn channel(&self) -> Result<KrausChannel> {
        match self.kind {
            NoiseKind::AmplitudeDamping => amplitude_damping(self.lambda),
        }
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if (0.0..=1.0).contains(&lambda) {
        Ok(())
    } else {
        Err(Error::InvalidLambda(lambda))
    }
}

/// A channel `ρ ↦ Σ_k E_k ρ E_k†` on the coin.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausChannel {
    operators: Vec<CMatrix>,
}

impl KrausChannel {
    /// Accepts any list of 2×2 operators obeying `Σ E_k† E_k = I` to 1e-12.
    pub fn new(operators: Vec<CMatrix>) -> Result<Self> {
        if let Some(bad) = operators
            .iter()
            .find(|e| e.nrows() != COIN_DIM || e.ncols() != COIN_DIM)
        {
            return Err(Error::DimensionMismatch {
                expected: COIN_DIM,
                found: bad.nrows().max(bad.ncols()),
            });
        }
        let channel = Self { operators };
        let defect = channel.completeness_defect();
        if defect > 1e-12 {
            return Err(Error::InvalidSpec(format!(
                "Kraus operators are not trace preserving (defect {defect:e})"
            )));
        }
        Ok(channel)
    }

    pub fn identity() -> Self {
        Self {
            operators: vec![CMatrix::identity(COIN_DIM, COIN_DIM)],
        }
    }

    pub fn operators(&self) -> &[CMatrix] {
        &self.operators
    }

    /// Largest entry of `|Σ E_k† E_k − I|`.
    pub fn completeness_defect(&self) -> f64 {
        let sum = self
            .operators
            .iter()
            .fold(CMatrix::zeros(COIN_DIM, COIN_DIM), |acc, e| acc + e.adjoint() * e);
        (sum - CMatrix::identity(COIN_DIM, COIN_DIM))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Applies the channel to a bare 2×2 coin operator.
    pub fn apply_to_qubit(&self, rho: &CMatrix) -> CMatrix {
        self.operators
            .iter()
            .fold(CMatrix::zeros(COIN_DIM, COIN_DIM), |acc, e| {
                acc + e * rho * e.adjoint()
            })
    }
}

/// Standard trace-preserving amplitude damping towards `|0⟩`:
/// `E_0 = diag(1, √(1−λ))`, `E_1 = √λ |0⟩⟨1|`.
pub fn amplitude_damping(lambda: f64) -> Result<KrausChannel> {
    check_lambda(lambda)?;
    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let e0 = CMatrix::from_row_slice(2, 2, &[one, z, z, Complex64::new((1.0 - lambda).sqrt(), 0.0)]);
    let e1 = CMatrix::from_row_slice(2, 2, &[z, Complex64::new(lambda.sqrt(), 0.0), z, z]);
    Ok(KrausChannel {
        operators: vec![e0, e1],
    })
}

/// `Σ_k (E_k⊗I) ρ (E_k⊗I)†`, computed blockwise over the coin indices.
pub fn apply_to_coin(channel: &KrausChannel, rho: &DensityOperator) -> Result<DensityOperator> {
    let d = rho.dim_p();
    DensityOperator::from_matrix_unchecked(conjugate_coin(channel.operators(), rho.matrix(), d), d)
}

/// `Σ_k (A_k⊗I) m (A_k⊗I)†` for 2×2 coin operators `A_k` and a position
/// register of dimension `d`.
pub(crate) fn conjugate_coin(ops: &[CMatrix], m: &CMatrix, d: usize) -> CMatrix {
    let mut out = CMatrix::zeros(COIN_DIM * d, COIN_DIM * d);
    for e in ops {
        for a in 0..COIN_DIM {
            for b in 0..COIN_DIM {
                let mut target = out.view_mut((a * d, b * d), (d, d));
                for c in 0..COIN_DIM {
                    for cp in 0..COIN_DIM {
                        let w = e[(a, c)] * e[(b, cp)].conj();
                        if w.norm_sqr() == 0.0 {
                            continue;
                        }
                        target += m.view((c * d, cp * d), (d, d)) * w;
                    }
                }
            }
        }
    }
    out
}
