//! Seeded Gaussian Orthogonal Ensemble sampling.
//!
//! `H = M + Mᵀ` with `M_ij ~ N(0, σ²)` i.i.d., so off-diagonal entries have
//! variance `2σ²`, diagonal entries `4σ²`, and the semicircle has radius
//! `σ√(8d)`. Streams are ChaCha8 seeded from a `u64`; normals come from
//! `rand_distr::Normal`.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::linops::HermitianMatrix;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct GoeSpec {
    pub dim: usize,
    pub sigma: f64,
    pub seed: u64,
}

impl GoeSpec {
    pub fn new(dim: usize, sigma: f64, seed: u64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::OutOfRange(format!("GOE dimension {dim} < 2")));
        }
        if !(sigma > 0.0) || !sigma.is_finite() {
            return Err(Error::OutOfRange(format!("GOE sigma {sigma} must be > 0")));
        }
        Ok(Self { dim, sigma, seed })
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    /// Semicircle radius `σ√(8d)`.
    pub fn spectral_radius(&self) -> f64 {
        self.sigma * (8.0 * self.dim as f64).sqrt()
    }
}

pub fn sample_goe(spec: &GoeSpec) -> HermitianMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let normal = Normal::new(0.0, spec.sigma).expect("validated sigma");
    let d = spec.dim;
    let m = DMatrix::from_fn(d, d, |_, _| normal.sample(&mut rng));
    let h = &m + m.transpose();
    HermitianMatrix::from_real(&h).expect("M + Mᵀ is symmetric")
}

/// Independent Hamiltonian and operator draws from seeds `spec.seed` and `seed2`.
pub fn sample_goe_pair(spec: &GoeSpec, seed2: u64) -> (HermitianMatrix, HermitianMatrix) {
    if seed2 == spec.seed {
        log::warn!("identical GOE seeds {seed2}: the two draws coincide");
    }
    (sample_goe(spec), sample_goe(&spec.with_seed(seed2)))
}
