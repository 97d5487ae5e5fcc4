//! Pure-state speed limits obtained from the operator flow of the projector
//! `|ψ_0⟩⟨ψ_0|`.
//!
//! For `O = |ψ_0⟩⟨ψ_0|` the operator overlap `⟨O_0|O_{-t}⟩` equals the
//! fidelity `|⟨ψ_0|ψ_t⟩|²`, and the Liouvillian variance is twice the energy
//! variance. The operator angle `arccos Re⟨O_0|O_t⟩` is *not* the Bures angle
//! `arccos|⟨ψ_0|ψ_t⟩|`.

use rayon::prelude::*;

use crate::ensembles::{sample_goe, GoeSpec};
use crate::error::{Error, Result};
use crate::gapdist::overlap_distribution;
use crate::grid::TimeGrid;
use crate::linops::{eigh, gibbs, ComplexMatrix, EnergyBasisOperator, Spectrum, C64};
use crate::qsl::alpha_constant;

const NORM_TOL: f64 = 1e-12;

/// Pure state given by its amplitudes `c_j` in an energy basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<C64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
        if amplitudes.is_empty() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::UnnormalizedState(norm));
        }
        Ok(Self { amplitudes })
    }

    /// Real amplitudes, rescaled to unit norm.
    pub fn normalized_real(amplitudes: &[f64]) -> Result<Self> {
        let norm = amplitudes.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !(norm > 0.0) {
            return Err(Error::UnnormalizedState(0.0));
        }
        Self::new(
            amplitudes
                .iter()
                .map(|&c| C64::new(c / norm, 0.0))
                .collect(),
        )
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// Energy-basis elements of `|ψ⟩⟨ψ|`.
    pub fn projector(&self, s: &Spectrum) -> Result<EnergyBasisOperator> {
        self.check(s)?;
        let c = &self.amplitudes;
        let d = c.len();
        EnergyBasisOperator::from_elements(
            ComplexMatrix::from_fn(d, d, |j, k| c[j] * c[k].conj()),
            s,
        )
    }

    /// `⟨H⟩` and `ΔH`.
    pub fn energy_moments(&self, s: &Spectrum) -> Result<(f64, f64)> {
        self.check(s)?;
        let e = s.energies();
        let p = self.amplitudes.iter().map(|c| c.norm_sqr());
        let mean: f64 = p.clone().zip(e).map(|(p, e)| p * e).sum();
        let var: f64 = p.zip(e).map(|(p, e)| p * (e - mean) * (e - mean)).sum();
        Ok((mean, var.sqrt()))
    }

    fn check(&self, s: &Spectrum) -> Result<()> {
        if s.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: s.dim(),
            });
        }
        Ok(())
    }
}

/// `⟨ψ_0|ψ_t⟩ = Σ_j |c_j|² e^{-iE_j t}`.
pub fn state_overlap(psi: &PureState, s: &Spectrum, t: f64) -> Result<C64> {
    psi.check(s)?;
    Ok(psi
        .amplitudes
        .iter()
        .zip(s.energies())
        .map(|(c, &e)| C64::from_polar(c.norm_sqr(), -e * t))
        .sum())
}

/// `⟨O_0|O_{-t}⟩` for the projector `O = |ψ_0⟩⟨ψ_0|`.
pub fn projector_overlap(psi: &PureState, s: &Spectrum, t: f64) -> Result<C64> {
    let dist = overlap_distribution(&psi.projector(s)?)?;
    Ok(dist.char_function(-t))
}

/// `sin ℓ / ΔH`.
pub fn mt_state_min_time(psi: &PureState, s: &Spectrum, bures_angle: f64) -> Result<f64> {
    check_angle(bures_angle)?;
    let (_, spread) = psi.energy_moments(s)?;
    unreachable_or(bures_angle.sin(), spread)
}

/// `sin² ℓ / (2α(⟨H⟩ - E_0))`.
pub fn ml_state_min_time(psi: &PureState, s: &Spectrum, bures_angle: f64) -> Result<f64> {
    check_angle(bures_angle)?;
    let (mean, _) = psi.energy_moments(s)?;
    let excess = (mean - s.ground_energy()).max(0.0);
    unreachable_or(bures_angle.sin().powi(2), 2.0 * alpha_constant() * excess)
}

fn check_angle(angle: f64) -> Result<()> {
    if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&angle) {
        return Err(Error::OutOfRange(format!(
            "Bures angle {angle} outside [0, π/2]"
        )));
    }
    Ok(())
}

fn unreachable_or(numerator: f64, speed: f64) -> Result<f64> {
    if numerator == 0.0 {
        Ok(0.0)
    } else if speed == 0.0 {
        Err(Error::ZeroScale {
            quantity: "state speed",
        })
    } else {
        Ok(numerator / speed)
    }
}

/// Orthogonalization bounds as fractions of `π/(2ΔH)` and `π/(2(⟨H⟩ - E_0))`:
/// `(2/π, 1/(πα))`.
pub fn orthogonalization_ratios() -> (f64, f64) {
    let pi = std::f64::consts::PI;
    (2.0 / pi, 1.0 / (pi * alpha_constant()))
}

/// `((Δ𝕃)², (ΔH)²)` for the projector flow of `psi`.
pub fn variance_relation_check(psi: &PureState, s: &Spectrum) -> Result<(f64, f64)> {
    let (_, spread) = psi.energy_moments(s)?;
    let dist = overlap_distribution(&psi.projector(s)?)?;
    Ok((dist.second_moment()?, spread * spread))
}

/// `Σ_n e^{-β(E_n - E_0)/2} |n⟩ / √Z`.
pub fn coherent_gibbs(s: &Spectrum, beta: f64) -> Result<PureState> {
    let p = gibbs(s, beta)?;
    let amplitudes = p
        .populations()
        .iter()
        .map(|&p| C64::new(p.sqrt(), 0.0))
        .collect::<Vec<_>>();
    let norm: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
    let scale = 1.0 / norm.sqrt();
    PureState::new(amplitudes.into_iter().map(|c| c * scale).collect())
}

/// `Z(β + it)/Z(β)` with both sums shifted by the ground energy.
pub fn partition_overlap(s: &Spectrum, beta: f64, t: f64) -> Result<C64> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::InvalidBeta(beta));
    }
    let e0 = s.ground_energy();
    let mut num = C64::new(0.0, 0.0);
    let mut den = 0.0;
    for &e in s.energies() {
        let w = (-beta * (e - e0)).exp();
        num += C64::from_polar(w, -e * t);
        den += w;
    }
    Ok(num / den)
}

/// `|⟨ψ_0|ψ_t⟩|` on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FidelityCurve {
    pub grid: TimeGrid,
    pub values: Vec<f64>,
}

pub fn fidelity_curve(psi: &PureState, s: &Spectrum, grid: &TimeGrid) -> Result<FidelityCurve> {
    let values = grid
        .points()
        .par_iter()
        .map(|&t| state_overlap(psi, s, t).map(|z| z.norm().min(1.0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FidelityCurve {
        grid: grid.clone(),
        values,
    })
}

/// Coherent-Gibbs fidelity of a GOE Hamiltonian with its linear floor.
#[derive(Debug, Clone, PartialEq)]
pub struct FidelityExperiment {
    pub curve: FidelityCurve,
    /// `1 - 2α(⟨H⟩ - E_0)t`.
    pub ml_floor: Vec<f64>,
    /// `1/(σ√(8d))`.
    pub tau: f64,
    pub mean_energy_above_ground: f64,
}

impl FidelityExperiment {
    /// Grid points `t ≤ τ` where the fidelity dips below the floor by more than `tol`.
    pub fn violations_before_tau(&self, tol: f64) -> usize {
        self.curve
            .grid
            .points()
            .iter()
            .zip(&self.curve.values)
            .zip(&self.ml_floor)
            .filter(|((&t, &f), &floor)| t <= self.tau && f < floor - tol)
            .count()
    }
}

pub fn goe_fidelity_experiment(
    spec: &GoeSpec,
    beta: f64,
    grid: &TimeGrid,
) -> Result<FidelityExperiment> {
    let s = eigh(&sample_goe(spec));
    let psi = coherent_gibbs(&s, beta)?;
    let (mean, _) = psi.energy_moments(&s)?;
    let excess = mean - s.ground_energy();
    let curve = fidelity_curve(&psi, &s, grid)?;
    let slope = 2.0 * alpha_constant() * excess;
    let ml_floor = grid.points().iter().map(|&t| 1.0 - slope * t).collect();
    Ok(FidelityExperiment {
        curve,
        ml_floor,
        tau: 1.0 / spec.spectral_radius(),
        mean_energy_above_ground: excess,
    })
}
