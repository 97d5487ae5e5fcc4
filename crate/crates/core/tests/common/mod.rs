//! Shared generators and dense-matrix oracles for the integration tests.
//!
//! The oracles go through nalgebra's matrix exponential and never touch the
//! eigendecomposition, so they check the spectral pipeline independently.

#![allow(dead_code)]

use opflow::linops::{ComplexMatrix, HermitianMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(d: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |_, _| {
        C64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    })
}

/// Hermitian with spectrum of order `scale`.
pub fn random_hermitian(d: usize, scale: f64, rng: &mut ChaCha8Rng) -> HermitianMatrix {
    let a = random_complex(d, rng);
    let h = (&a + a.adjoint()) * C64::new(0.5 * scale / (d as f64).sqrt(), 0.0);
    HermitianMatrix::new(h).unwrap()
}

/// Log-uniform scale in `[lo, hi]`.
pub fn log_uniform(lo: f64, hi: f64, rng: &mut ChaCha8Rng) -> f64 {
    (rng.random_range(lo.ln()..hi.ln())).exp()
}

fn propagator(h: &HermitianMatrix, t: f64) -> ComplexMatrix {
    (h.as_matrix() * C64::new(0.0, -t)).exp()
}

/// `e^{iHt} O e^{-iHt}` by matrix exponential.
pub fn dense_heisenberg(h: &HermitianMatrix, o: &ComplexMatrix, t: f64) -> ComplexMatrix {
    let u = propagator(h, t);
    u.adjoint() * o * u
}

/// `e^{-βH}/Z` by scaling and squaring of the matrix exponential, with the
/// trace divided out after every squaring so nothing overflows.
pub fn dense_gibbs(h: &HermitianMatrix, beta: f64) -> ComplexMatrix {
    let mut k = 0;
    while beta * h.as_matrix().norm() / 2f64.powi(k) > 0.5 {
        k += 1;
    }
    let mut w = (h.as_matrix() * C64::new(-beta / 2f64.powi(k), 0.0)).exp();
    for _ in 0..k {
        w = &w * &w;
        let z = w.trace();
        w /= z;
    }
    let z = w.trace();
    w / z
}

/// `⟨O_0|O_t⟩ / ‖O‖²`.
pub fn dense_overlap(h: &HermitianMatrix, o: &ComplexMatrix, t: f64) -> C64 {
    let ot = dense_heisenberg(h, o, t);
    (o.adjoint() * ot).trace() / o.norm_squared()
}

/// `Tr(O_t† O_0 ρ)`.
pub fn dense_autocorr(h: &HermitianMatrix, o: &ComplexMatrix, beta: f64, t: f64) -> C64 {
    let rho = dense_gibbs(h, beta);
    let ot = dense_heisenberg(h, o, t);
    (ot.adjoint() * o * rho).trace()
}

/// `-i Tr(ρ [A_t, V])`.
pub fn dense_susceptibility(
    h: &HermitianMatrix,
    a: &HermitianMatrix,
    v: &HermitianMatrix,
    beta: f64,
    t: f64,
) -> C64 {
    let rho = dense_gibbs(h, beta);
    let at = dense_heisenberg(h, a.as_matrix(), t);
    let comm = &at * v.as_matrix() - v.as_matrix() * &at;
    (rho * comm).trace() * C64::new(0.0, -1.0)
}
