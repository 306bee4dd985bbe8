//! Library routines against slow, independently written reference versions.

mod common;

use std::f64::consts::{FRAC_PI_4, PI};

use common::oracle::{kraus_four_index, naive_partial_traces, projector_sandwich, state_vector_walk};
use common::{c, max_diff, random_density, unit, Mat};
use qwalk_core::channels::{amplitude_damping, apply_to_coin, NoiseConfig};
use qwalk_core::measures::{classicalize, classicalize_coarse, conditional_entropy_after_measurement, MeasurementBasis};
use qwalk_core::qstate::{partial_trace_coin, partial_trace_position, DensityOperator};
use qwalk_core::walk::{evolve, Topology, WalkConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn frobenius(a: &Mat, b: &Mat) -> f64 {
    (a - b).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[test]
fn unitary_evolution_matches_state_vector_simulation() {
    let cases = [
        (Topology::Cycle { n: 11 }, FRAC_PI_4),
        (Topology::Cycle { n: 51 }, PI / 3.0),
        (Topology::Line { t_max: 30 }, FRAC_PI_4),
        (Topology::Line { t_max: 30 }, 0.2),
    ];
    for (topology, theta) in cases {
        let config = WalkConfig::unitary(topology, theta, 30);
        let reference = state_vector_walk(topology.sites(), topology.origin(), theta, 30);
        let mut worst: f64 = 0.0;
        evolve(&config, |state| {
            let psi = &reference[state.t];
            let rho = psi * psi.adjoint();
            worst = worst.max(frobenius(state.rho.matrix(), &rho));
            Ok(())
        })
        .unwrap();
        assert!(worst <= 1e-9, "{topology} theta={theta}: {worst}");
    }
}

#[test]
fn partial_traces_match_sandwich_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut states: Vec<DensityOperator> = (1..=8)
        .map(|k| DensityOperator::new(random_density(&mut rng, 2 * k), k).unwrap())
        .collect();
    let walk = WalkConfig::unitary(Topology::Cycle { n: 7 }, 0.4, 3);
    states.push(evolve(&walk, |_| Ok(())).unwrap().rho);
    for rho in &states {
        let (rc, rp) = naive_partial_traces(rho.matrix(), rho.dim_p());
        assert!(max_diff(&partial_trace_position(rho), &rc) < 1e-13);
        assert!(max_diff(&partial_trace_coin(rho), &rp) < 1e-13);
    }
}

#[test]
fn classicalize_matches_projector_sandwich() {
    let noise = NoiseConfig::amplitude_damping(0.2).unwrap();
    let walk = WalkConfig::unitary(Topology::Cycle { n: 7 }, FRAC_PI_4, 2).with_noise(noise);
    let mut states = vec![evolve(&walk, |_| Ok(())).unwrap().rho];
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for k in 2..=8 {
        states.push(DensityOperator::new(random_density(&mut rng, 2 * k), k).unwrap());
    }
    for rho in &states {
        let reference = projector_sandwich(rho);
        assert!(max_diff(classicalize(rho).unwrap().matrix(), &reference) < 1e-10);
        assert!(max_diff(classicalize_coarse(rho).unwrap().matrix(), &reference) < 1e-10);
    }
}

#[test]
fn kraus_application_matches_four_index_sum() {
    let walk = WalkConfig::unitary(Topology::Cycle { n: 5 }, FRAC_PI_4, 1);
    let mut states = vec![evolve(&walk, |_| Ok(())).unwrap().rho];
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for k in 1..=8 {
        states.push(DensityOperator::new(random_density(&mut rng, 2 * k), k).unwrap());
    }
    for lambda in [0.3, 0.0, 1.0, 0.77] {
        let channel = amplitude_damping(lambda).unwrap();
        for rho in &states {
            let reference = kraus_four_index(channel.operators(), rho.matrix(), rho.dim_p());
            let out = apply_to_coin(&channel, rho).unwrap();
            assert!(max_diff(out.matrix(), &reference) < 1e-14);
        }
    }
}

#[test]
fn kraus_operators_have_the_standard_form() {
    let lambda: f64 = 0.3;
    let channel = amplitude_damping(lambda).unwrap();
    let expected = [
        unit(2, 0, 0) + unit(2, 1, 1) * c((1.0 - lambda).sqrt(), 0.0),
        unit(2, 0, 1) * c(lambda.sqrt(), 0.0),
    ];
    for (op, want) in channel.operators().iter().zip(&expected) {
        assert!(max_diff(op, want) < 1e-15);
    }
}

fn binary_mixture_entropy(top: f64, rest: f64, d: usize) -> f64 {
    let mut s = -top * top.log2();
    if rest > 0.0 {
        s -= (d - 1) as f64 * rest * rest.log2();
    }
    s
}

#[test]
fn one_step_conditional_entropy_by_hand() {
    // One step at θ = π/4 from (|0⟩ + i|1⟩)/√2 at the origin gives
    // ((1+i)|0,−1⟩ + (1−i)|1,+1⟩)/2. In the basis |±⟩ = (|0⟩ ± |1⟩)/√2 each
    // outcome has probability 1/2 and leaves P in a pure state.
    let n = 5;
    let walk = WalkConfig::unitary(Topology::Cycle { n }, FRAC_PI_4, 1);
    let pure = evolve(&walk, |_| Ok(())).unwrap().rho;
    let basis = MeasurementBasis::new(FRAC_PI_4, 0.0).unwrap();
    let s = conditional_entropy_after_measurement(&pure, &basis).unwrap();
    assert!(s.abs() < 1e-12, "{s}");

    // Mixed with white noise q·I/(2n): each branch becomes
    // (1−q)|φ_j⟩⟨φ_j| + q·I/n, whose spectrum is known.
    let q = 0.25;
    let m = pure.matrix() * c(1.0 - q, 0.0) + Mat::identity(2 * n, 2 * n) * c(q / (2 * n) as f64, 0.0);
    let rho = DensityOperator::new(m, n).unwrap();
    let expected = binary_mixture_entropy(1.0 - q + q / n as f64, q / n as f64, n);
    let s = conditional_entropy_after_measurement(&rho, &basis).unwrap();
    assert!((s - expected).abs() < 1e-12, "{s} vs {expected}");
}
