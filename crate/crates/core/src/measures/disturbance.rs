//! Measurement-induced disturbance: the mutual information lost when both
//! parties are measured in eigenbases of their reduced states.
//!
//! With non-degenerate marginals the local eigenbases are unique. When a
//! marginal has a repeated eigenvalue, [`classicalize`] picks the rank-1
//! resolution of the degenerate eigenspaces that disturbs the state least;
//! [`classicalize_coarse`] instead keeps whole eigenspace projectors.

use num_complex::Complex64;

use super::discord::minimize_over_bases;
use super::{MeasurementBasis, SearchPolicy, DEGENERACY_FLOOR};
use crate::error::Result;
use crate::linalg::{self, CMatrix};
use crate::qstate::{
    entropy_of_eigenvalues, mutual_information, partial_trace_coin, partial_trace_position,
    spectral_decomposition, tensor, DensityOperator, Spectrum, CLUSTER_TOLERANCE, COIN_DIM,
};

pub(super) fn reduced_spectra(rho: &DensityOperator) -> Result<(Spectrum, Spectrum)> {
    Ok((
        spectral_decomposition(&partial_trace_position(rho), CLUSTER_TOLERANCE)?,
        spectral_decomposition(&partial_trace_coin(rho), CLUSTER_TOLERANCE)?,
    ))
}

/// Local product basis `|v_j⟩⊗|u_k⟩` and the outcome distribution
/// `p_jk = ⟨v_j u_k|ρ|v_j u_k⟩`, indexed `j·d + k`.
pub(super) struct Resolution {
    pub coin: CMatrix,
    pub position: CMatrix,
    pub probabilities: Vec<f64>,
}

impl Resolution {
    /// `H(p)`: the joint entropy after measuring both parties.
    pub fn outcome_entropy(&self) -> f64 {
        entropy_of_eigenvalues(&self.probabilities)
    }

    /// `Σ_jk p_jk |v_j u_k⟩⟨v_j u_k|` in the computational basis.
    pub fn state(&self, dim_p: usize) -> Result<DensityOperator> {
        let basis = tensor(&self.coin, &self.position);
        let n = basis.nrows();
        let mut out = CMatrix::zeros(n, n);
        for (col, &p) in self.probabilities.iter().enumerate() {
            if p <= 0.0 {
                continue;
            }
            let v = basis.column(col);
            out += &v * v.adjoint() * Complex64::new(p, 0.0);
        }
        DensityOperator::from_matrix_unchecked(out, dim_p)
    }
}

fn basis_matrix(basis: &MeasurementBasis) -> CMatrix {
    let [u, v] = basis.vectors();
    CMatrix::from_fn(COIN_DIM, COIN_DIM, |i, j| if j == 0 { u[i] } else { v[i] })
}

/// Coin blocks `U†⟨a|ρ|b⟩U` in the eigenbasis `U` of `ρ_P`, for
/// `ab ∈ {00, 01, 11}`.
struct PositionFrame<'a> {
    pos: &'a Spectrum,
    blocks: [CMatrix; 3],
}

impl<'a> PositionFrame<'a> {
    fn new(rho: &DensityOperator, pos: &'a Spectrum) -> Self {
        let u = pos.basis();
        let rotate = |a, b| linalg::congruence(u, &rho.coin_block(a, b));
        Self {
            pos,
            blocks: [rotate(0, 0), rotate(0, 1), rotate(1, 1)],
        }
    }

    /// `⟨v|ρ|v⟩` restricted to rows and columns `range` of the frame.
    fn conditional(&self, v: &[Complex64], range: std::ops::Range<usize>) -> CMatrix {
        let (c00, c11) = (v[0].norm_sqr(), v[1].norm_sqr());
        let c01 = v[0].conj() * v[1];
        let [b00, b01, b11] = &self.blocks;
        let (s, m) = (range.start, range.len());
        CMatrix::from_fn(m, m, |i, j| {
            let (i, j) = (s + i, s + j);
            b00[(i, j)] * c00 + b11[(i, j)] * c11 + b01[(i, j)] * c01 + (b01[(j, i)] * c01).conj()
        })
    }

    /// Outcome distribution for a fixed coin basis, plus the rotation that
    /// resolves each degenerate eigenspace of `ρ_P`. Such a space is resolved
    /// along the eigenvectors of `⟨v_0|ρ|v_0⟩` compressed onto it; there
    /// `⟨v_1|ρ|v_1⟩` compresses to `μ·I` minus the same operator, so both
    /// conditional diagonals are spectra and, by Schur–Horn, the outcome
    /// entropy is minimal.
    fn outcomes(&self, coin: &CMatrix) -> Result<(Vec<f64>, Vec<(usize, CMatrix)>)> {
        let d = self.pos.basis().nrows();
        let v: Vec<Vec<Complex64>> = (0..COIN_DIM).map(|j| coin.column(j).iter().copied().collect()).collect();
        let mut probabilities = vec![0.0; COIN_DIM * d];
        let mut rotations = Vec::new();
        let [b00, b01, b11] = &self.blocks;
        for (k, &value) in self.pos.eigenvalues.iter().enumerate() {
            let range = self.pos.cluster(k);
            if range.len() > 1 && value > DEGENERACY_FLOOR {
                let sigma: Vec<CMatrix> = v.iter().map(|vj| self.conditional(vj, range.clone())).collect();
                let (_, w) = linalg::hermitian_eigen(&sigma[0])?;
                for (j, s) in sigma.iter().enumerate() {
                    let diagonal = linalg::congruence(&w, s);
                    for (i, x) in range.clone().enumerate() {
                        probabilities[j * d + x] = diagonal[(i, i)].re;
                    }
                }
                rotations.push((range.start, w));
            } else {
                for (j, vj) in v.iter().enumerate() {
                    let (c00, c11) = (vj[0].norm_sqr(), vj[1].norm_sqr());
                    let c01 = vj[0].conj() * vj[1];
                    for x in range.clone() {
                        probabilities[j * d + x] =
                            b00[(x, x)].re * c00 + b11[(x, x)].re * c11 + 2.0 * (b01[(x, x)] * c01).re;
                    }
                }
            }
        }
        Ok((probabilities, rotations))
    }

    fn resolution(&self, coin: &CMatrix) -> Result<Resolution> {
        let (probabilities, rotations) = self.outcomes(coin)?;
        let mut position = self.pos.basis().clone();
        for (start, w) in rotations {
            let span = self.pos.basis().columns(start, w.nrows()).into_owned();
            position.columns_mut(start, w.nrows()).copy_from(&linalg::matmul(&span, &w));
        }
        Ok(Resolution {
            coin: coin.clone(),
            position,
            probabilities,
        })
    }
}

/// Least-disturbing rank-1 eigenbasis resolution. A degenerate coin marginal
/// is `I/2`, so every coin basis is an eigenbasis and the search runs over
/// all of them.
pub(super) fn resolve(
    rho: &DensityOperator,
    coin: &Spectrum,
    pos: &Spectrum,
    policy: &SearchPolicy,
) -> Result<Resolution> {
    let frame = PositionFrame::new(rho, pos);
    if !coin.has_degenerate_support(DEGENERACY_FLOOR) {
        return frame.resolution(coin.basis());
    }
    let (_, best) = minimize_over_bases(policy, |b| {
        Ok(entropy_of_eigenvalues(&frame.outcomes(&basis_matrix(b))?.0))
    })?;
    frame.resolution(&basis_matrix(&best))
}

/// `Π(ρ)`: both parties measured in the least-disturbing local eigenbases.
pub fn classicalize(rho: &DensityOperator) -> Result<DensityOperator> {
    let (coin, pos) = reduced_spectra(rho)?;
    resolve(rho, &coin, &pos, &SearchPolicy::default())?.state(rho.dim_p())
}

/// `Σ_{j,k} (Π_C^j⊗Π_P^k) ρ (Π_C^j⊗Π_P^k)` over whole eigenspace
/// projectors. Agrees with [`classicalize`] when both marginals are
/// non-degenerate; a maximally entangled state is left unchanged.
pub fn classicalize_coarse(rho: &DensityOperator) -> Result<DensityOperator> {
    let (coin, pos) = reduced_spectra(rho)?;
    let d = rho.dim_p();
    let basis = tensor(coin.basis(), pos.basis());
    let mut rotated = linalg::congruence(&basis, rho.matrix());
    let coin_labels = coin.labels();
    let pos_labels = pos.labels();
    let label = |i: usize| (coin_labels[i / d], pos_labels[i % d]);
    let n = rotated.nrows();
    for j in 0..n {
        let lj = label(j);
        for i in 0..n {
            if label(i) != lj {
                rotated[(i, j)] = Complex64::new(0.0, 0.0);
            }
        }
    }
    let back = linalg::congruence(&basis.adjoint(), &rotated);
    DensityOperator::from_matrix_unchecked(back, d)
}

/// Measurement-induced disturbance `I(ρ) − I(Π(ρ))` in bits.
pub fn mid(rho: &DensityOperator) -> Result<f64> {
    mid_with(rho, &SearchPolicy::default())
}

/// [`mid`] with an explicit search policy for degenerate coin marginals.
pub fn mid_with(rho: &DensityOperator, policy: &SearchPolicy) -> Result<f64> {
    let (coin, pos) = reduced_spectra(rho)?;
    let resolution = resolve(rho, &coin, &pos, policy)?;
    disturbance(rho, &resolution)
}

/// `Π(ρ)` keeps both marginals, so `I(ρ) − I(Π(ρ)) = H(p) − S(ρ)`.
pub(super) fn disturbance_from(joint_entropy: f64, resolution: &Resolution) -> f64 {
    resolution.outcome_entropy() - joint_entropy
}

fn disturbance(rho: &DensityOperator, resolution: &Resolution) -> Result<f64> {
    let joint = entropy_of_eigenvalues(&linalg::hermitian_eigenvalues(rho.matrix())?);
    Ok(disturbance_from(joint, resolution))
}

/// MID under [`classicalize_coarse`].
pub fn mid_coarse(rho: &DensityOperator) -> Result<f64> {
    Ok(mutual_information(rho)? - mutual_information(&classicalize_coarse(rho)?)?)
}
