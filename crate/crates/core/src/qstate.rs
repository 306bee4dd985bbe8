//! Finite-dimensional coin⊗position states: composition, reduction, spectra
//! and entropies.
//!
//! Index convention: the coin is the slow tensor factor everywhere, so the
//! basis vector `|c⟩⊗|x⟩` sits at row `c * dim_p + x`.

use std::ops::Range;

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

/// Dimension of the coin register.
pub const COIN_DIM: usize = 2;

/// Tolerance used when validating Hermiticity, unit trace and positivity.
pub const STATE_TOLERANCE: f64 = 1e-10;

/// Eigenvalues closer than this are merged into one eigenspace.
pub const CLUSTER_TOLERANCE: f64 = 1e-10;

/// Eigenvalues below this are treated as zero in entropy sums.
const ENTROPY_FLOOR: f64 = 1e-12;

/// Kronecker product with `a` as the slow index.
pub fn tensor(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// A Hermitian, positive semidefinite, unit-trace operator on coin⊗position.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator {
    dim_p: usize,
    matrix: CMatrix,
}

impl DensityOperator {
    /// Validates the invariants and wraps `matrix`.
    pub fn new(matrix: CMatrix, dim_p: usize) -> Result<Self> {
        let rho = Self::from_matrix_unchecked(matrix, dim_p)?;
        rho.validate(STATE_TOLERANCE)?;
        Ok(rho)
    }

    /// Wraps `matrix` after checking only its shape. Used on the evolution
    /// path where the invariants hold by construction.
    pub fn from_matrix_unchecked(matrix: CMatrix, dim_p: usize) -> Result<Self> {
        let dim = COIN_DIM * dim_p;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: matrix.nrows().max(matrix.ncols()),
            });
        }
        Ok(Self { dim_p, matrix })
    }

    /// `|ψ⟩⟨ψ|` for a normalized state vector on coin⊗position.
    pub fn from_pure(psi: &DVector<Complex64>, dim_p: usize) -> Result<Self> {
        let norm = psi.norm();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::TraceNotUnit { trace: norm * norm });
        }
        Self::from_matrix_unchecked(psi * psi.adjoint(), dim_p)
    }

    /// `ρ_C ⊗ ρ_P`.
    pub fn product(rho_c: &CMatrix, rho_p: &CMatrix) -> Result<Self> {
        if rho_c.nrows() != COIN_DIM {
            return Err(Error::DimensionMismatch {
                expected: COIN_DIM,
                found: rho_c.nrows(),
            });
        }
        Self::new(tensor(rho_c, rho_p), rho_p.nrows())
    }

    pub fn dim_c(&self) -> usize {
        COIN_DIM
    }

    pub fn dim_p(&self) -> usize {
        self.dim_p
    }

    pub fn dim(&self) -> usize {
        COIN_DIM * self.dim_p
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        // Tr(ρ²) = Σ |ρ_ij|² for Hermitian ρ.
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    /// The `dim_p × dim_p` block `⟨a|ρ|b⟩` over the coin indices.
    pub fn coin_block(&self, a: usize, b: usize) -> CMatrix {
        let d = self.dim_p;
        self.matrix.view((a * d, b * d), (d, d)).into_owned()
    }

    pub fn validate(&self, tol: f64) -> Result<()> {
        let deviation = linalg::hermiticity_defect(&self.matrix);
        if deviation > tol {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = self.trace();
        if (trace - 1.0).abs() > tol {
            return Err(Error::TraceNotUnit { trace });
        }
        let min_eigenvalue = linalg::hermitian_eigenvalues(&self.matrix)?
            .last()
            .copied()
            .unwrap_or(0.0);
        if min_eigenvalue < -tol {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(())
    }
}

/// `ρ_P = Tr_C ρ`.
pub fn partial_trace_coin(rho: &DensityOperator) -> CMatrix {
    let d = rho.dim_p();
    let m = rho.matrix();
    CMatrix::from_fn(d, d, |x, y| {
        (0..COIN_DIM).map(|c| m[(c * d + x, c * d + y)]).sum()
    })
}

/// `ρ_C = Tr_P ρ`.
pub fn partial_trace_position(rho: &DensityOperator) -> CMatrix {
    let d = rho.dim_p();
    let m = rho.matrix();
    CMatrix::from_fn(COIN_DIM, COIN_DIM, |a, b| {
        (0..d).map(|x| m[(a * d + x, b * d + x)]).sum()
    })
}

/// Spectral resolution of a Hermitian matrix with numerically degenerate
/// eigenvalues merged into single eigenspaces.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// One value per eigenspace, descending.
    pub eigenvalues: Vec<f64>,
    pub cluster_tolerance: f64,
    /// Orthonormal eigenvectors as columns, ordered like `eigenvalues`.
    basis: CMatrix,
    /// Column range of `basis` spanning each eigenspace.
    clusters: Vec<Range<usize>>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    pub fn multiplicity(&self, k: usize) -> usize {
        self.clusters[k].len()
    }

    /// Columns of [`Spectrum::basis`] spanning eigenspace `k`.
    pub fn cluster(&self, k: usize) -> Range<usize> {
        self.clusters[k].clone()
    }

    /// Eigenspace index of every basis column.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.basis.ncols()];
        for (k, range) in self.clusters.iter().enumerate() {
            for col in range.clone() {
                labels[col] = k;
            }
        }
        labels
    }

    /// Orthogonal projector onto eigenspace `k`.
    pub fn projector(&self, k: usize) -> CMatrix {
        let range = self.clusters[k].clone();
        let cols = self.basis.columns(range.start, range.len());
        &cols * cols.adjoint()
    }

    pub fn projectors(&self) -> impl Iterator<Item = CMatrix> + '_ {
        (0..self.len()).map(|k| self.projector(k))
    }

    /// `Σ_k λ_k P_k`.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.basis.nrows();
        let mut out = CMatrix::zeros(n, n);
        for (k, &value) in self.eigenvalues.iter().enumerate() {
            out += self.projector(k) * Complex64::new(value, 0.0);
        }
        out
    }

    /// True when an eigenspace with eigenvalue above `floor` has dimension
    /// greater than one.
    pub fn has_degenerate_support(&self, floor: f64) -> bool {
        self.eigenvalues
            .iter()
            .zip(&self.clusters)
            .any(|(&v, r)| v > floor && r.len() > 1)
    }
}

pub fn spectral_decomposition(m: &CMatrix, cluster_tolerance: f64) -> Result<Spectrum> {
    let scale = m.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let deviation = linalg::hermiticity_defect(m);
    if deviation > STATE_TOLERANCE * scale {
        return Err(Error::NotHermitian { deviation });
    }
    let (values, basis) = linalg::hermitian_eigen(m)?;

    // Chain consecutive (descending) eigenvalues whose gap is within tolerance.
    let mut clusters: Vec<Range<usize>> = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || values[i - 1] - values[i] > cluster_tolerance {
            clusters.push(start..i);
            start = i;
        }
    }
    let eigenvalues = clusters
        .iter()
        .map(|r| values[r.clone()].iter().sum::<f64>() / r.len() as f64)
        .collect();
    Ok(Spectrum {
        eigenvalues,
        cluster_tolerance,
        basis,
        clusters,
    })
}

/// Shannon entropy in bits of a spectrum, with tiny negative eigenvalues
/// clamped and eigenvalues below the floor skipped.
pub fn entropy_of_eigenvalues(values: &[f64]) -> f64 {
    values
        .iter()
        .map(|&v| v.max(0.0))
        .filter(|&v| v > ENTROPY_FLOOR)
        .map(|v| -v * v.log2())
        .sum()
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(m: &CMatrix) -> Result<f64> {
    let trace = m.trace().re;
    if (trace - 1.0).abs() > 1e-6 {
        return Err(Error::TraceNotUnit { trace });
    }
    Ok(entropy_of_eigenvalues(&linalg::hermitian_eigenvalues(m)?))
}

/// The three entropies `S(ρ_C)`, `S(ρ_P)`, `S(ρ)` in bits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Entropies {
    pub coin: f64,
    pub position: f64,
    pub joint: f64,
}

impl Entropies {
    pub fn of(rho: &DensityOperator) -> Result<Self> {
        Ok(Self {
            coin: von_neumann_entropy(&partial_trace_position(rho))?,
            position: von_neumann_entropy(&partial_trace_coin(rho))?,
            joint: von_neumann_entropy(rho.matrix())?,
        })
    }

    pub fn mutual_information(&self) -> f64 {
        self.coin + self.position - self.joint
    }
}

/// `S(ρ_C) + S(ρ_P) − S(ρ)` in bits.
pub fn mutual_information(rho: &DensityOperator) -> Result<f64> {
    Ok(Entropies::of(rho)?.mutual_information())
}
