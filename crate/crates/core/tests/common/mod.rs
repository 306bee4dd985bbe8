#![allow(dead_code)]

pub mod oracle;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use qwalk_core::qstate::DensityOperator;
use rand::Rng;

pub type Mat = DMatrix<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ginibre<R: Rng>(rng: &mut R, n: usize, m: usize) -> Mat {
    Mat::from_fn(n, m, |_, _| c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
}

/// Full-rank mixed state `G G† / Tr`.
pub fn random_density<R: Rng>(rng: &mut R, n: usize) -> Mat {
    random_density_rank(rng, n, n)
}

pub fn random_density_rank<R: Rng>(rng: &mut R, n: usize, rank: usize) -> Mat {
    let g = ginibre(rng, n, rank);
    let rho = &g * g.adjoint();
    let tr = rho.trace();
    rho / tr
}

pub fn random_state<R: Rng>(rng: &mut R, k: usize) -> DensityOperator {
    DensityOperator::new(random_density(rng, 2 * k), k).unwrap()
}

pub fn random_pure<R: Rng>(rng: &mut R, n: usize) -> DVector<Complex64> {
    let v = DVector::from_fn(n, |_, _| c(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5));
    let norm = v.norm();
    v / c(norm, 0.0)
}

pub fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> Mat {
    ginibre(rng, n, n).qr().q()
}

pub fn max_diff(a: &Mat, b: &Mat) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// `|i⟩⟨j|` on an `n`-dimensional space.
pub fn unit(n: usize, i: usize, j: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    m[(i, j)] = c(1.0, 0.0);
    m
}
