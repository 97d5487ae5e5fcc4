use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linops::{ComplexMatrix, HermitianMatrix, C64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    StandardNormal.sample(rng)
}

pub fn random_complex(d: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |_, _| C64::new(normal(rng), normal(rng)))
}

/// Complex Hermitian matrix with spectrum of order one.
pub fn random_hermitian(d: usize, rng: &mut ChaCha8Rng) -> HermitianMatrix {
    let a = random_complex(d, rng);
    let h = (&a + a.adjoint()) * C64::new(0.5 / (d as f64).sqrt(), 0.0);
    HermitianMatrix::new(h).unwrap()
}
