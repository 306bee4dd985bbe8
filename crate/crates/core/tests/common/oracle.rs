//! Slow reference implementations written without the library's kernels.

use nalgebra::DVector;
use num_complex::Complex64;
use qwalk_core::qstate::{partial_trace_coin, partial_trace_position, DensityOperator};

use super::{c, Mat};

/// Walk amplitudes `ψ[c][x]` stepped by hand: coin mix, then coin 0 moves
/// left and coin 1 right.
pub fn state_vector_walk(sites: usize, origin: usize, theta: f64, steps: usize) -> Vec<DVector<Complex64>> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut psi = vec![vec![c(0.0, 0.0); sites]; 2];
    psi[0][origin] = c(s, 0.0);
    psi[1][origin] = c(0.0, s);
    let (sn, cs) = theta.sin_cos();
    let mut out = Vec::new();
    let flat = |psi: &Vec<Vec<Complex64>>| {
        DVector::from_iterator(2 * sites, psi.iter().flat_map(|row| row.iter().copied()))
    };
    out.push(flat(&psi));
    for _ in 0..steps {
        let mut next = vec![vec![c(0.0, 0.0); sites]; 2];
        for x in 0..sites {
            let up = psi[0][x] * cs + psi[1][x] * sn;
            let down = psi[0][x] * sn - psi[1][x] * cs;
            next[0][(x + sites - 1) % sites] += up;
            next[1][(x + 1) % sites] += down;
        }
        psi = next;
        out.push(flat(&psi));
    }
    out
}

/// `Tr_X` by sandwiching with explicit basis vectors of the traced factor.
pub fn naive_partial_traces(rho: &Mat, k: usize) -> (Mat, Mat) {
    let id2 = Mat::identity(2, 2);
    let idk = Mat::identity(k, k);
    let mut rho_c = Mat::zeros(2, 2);
    for x in 0..k {
        let e = Mat::from_fn(k, 1, |i, _| if i == x { c(1.0, 0.0) } else { c(0.0, 0.0) });
        let lift = id2.kronecker(&e);
        rho_c += lift.adjoint() * rho * &lift;
    }
    let mut rho_p = Mat::zeros(k, k);
    for a in 0..2 {
        let e = Mat::from_fn(2, 1, |i, _| if i == a { c(1.0, 0.0) } else { c(0.0, 0.0) });
        let lift = e.kronecker(&idk);
        rho_p += lift.adjoint() * rho * &lift;
    }
    (rho_c, rho_p)
}

/// Rank-1 eigenprojectors of a Hermitian matrix with a non-degenerate
/// support, plus the projector onto its null space.
fn eigen_projectors(m: &Mat) -> Vec<Mat> {
    let n = m.nrows();
    let eig = m.clone().symmetric_eigen();
    let mut out = Vec::new();
    let mut support = Mat::zeros(n, n);
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().filter(|v| *v > 1e-12).collect();
    values.sort_by(f64::total_cmp);
    for w in values.windows(2) {
        assert!(w[1] - w[0] > 1e-6, "oracle needs a non-degenerate support");
    }
    for (i, &v) in eig.eigenvalues.iter().enumerate() {
        if v > 1e-12 {
            let col = eig.eigenvectors.column(i);
            let p = &col * col.adjoint();
            support += &p;
            out.push(p);
        }
    }
    let null = Mat::identity(n, n) - support;
    if null.iter().any(|z| z.norm() > 1e-9) {
        out.push(null);
    }
    out
}

pub fn projector_sandwich(rho: &DensityOperator) -> Mat {
    let m = rho.matrix();
    let pc = eigen_projectors(&partial_trace_position(rho));
    let pp = eigen_projectors(&partial_trace_coin(rho));
    let mut out = Mat::zeros(m.nrows(), m.ncols());
    for a in &pc {
        for b in &pp {
            let p = a.kronecker(b);
            out += &p * m * &p;
        }
    }
    out
}

/// `ρ'[(a,x),(b,y)] = Σ_k Σ_{a',b'} E_k[a,a'] ρ[(a',x),(b',y)] conj(E_k[b,b'])`.
pub fn kraus_four_index(ops: &[Mat], rho: &Mat, k: usize) -> Mat {
    let mut out = Mat::zeros(2 * k, 2 * k);
    for e in ops {
        for a in 0..2 {
            for b in 0..2 {
                for a2 in 0..2 {
                    for b2 in 0..2 {
                        let w = e[(a, a2)] * e[(b, b2)].conj();
                        for x in 0..k {
                            for y in 0..k {
                                out[(a * k + x, b * k + y)] += w * rho[(a2 * k + x, b2 * k + y)];
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
