//! Thermal autocorrelation functions and their speed-limit bounds.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gapdist::{anchored_sum, correlation_distribution, WeightedGapDistribution};
use crate::grid::TimeGrid;
use crate::linops::{
    pauli, ComplexMatrix, DensityMatrix, EnergyBasisOperator, HermitianMatrix, C64,
};
use crate::qsl::alpha_constant;

/// Sampled `C_O(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationCurve {
    pub grid: TimeGrid,
    pub values: Vec<C64>,
    pub c0: f64,
    pub normalized: bool,
}

impl CorrelationCurve {
    /// Copy divided by `C_O(0)`.
    pub fn normalized(&self) -> Result<Self> {
        if self.c0 == 0.0 {
            return Err(Error::ZeroOperator);
        }
        let scale = 1.0 / self.c0;
        Ok(Self {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v * scale).collect(),
            c0: 1.0,
            normalized: true,
        })
    }
}

/// `C_O(t) = Tr(O_t† O_0 ρ)` on every grid point.
pub fn autocorr_curve(
    oe: &EnergyBasisOperator,
    rho: &DensityMatrix,
    grid: &TimeGrid,
) -> Result<CorrelationCurve> {
    if !oe.is_hermitian() {
        log::debug!("autocorrelation of a non-Hermitian operator");
    }
    let dist = correlation_distribution(oe, rho)?;
    Ok(curve_from_distribution(&dist, grid))
}

pub(crate) fn curve_from_distribution(
    dist: &WeightedGapDistribution,
    grid: &TimeGrid,
) -> CorrelationCurve {
    let values = grid
        .points()
        .par_iter()
        .map(|&t| dist.char_function(t))
        .collect();
    CorrelationCurve {
        grid: grid.clone(),
        values,
        c0: dist.total_weight(),
        normalized: false,
    }
}

/// `⟨Ȯ²⟩ = ‖[H, O√ρ]‖² = Σ_jk |O_jk|² p_k Δ_jk²`.
pub fn velocity_moment(oe: &EnergyBasisOperator, rho: &DensityMatrix) -> Result<f64> {
    Ok(correlation_distribution(oe, rho)?.squared_weighted_sum())
}

/// `C(0) - ⟨Ȯ²⟩t²/2`.
pub fn mt_autocorr_floor(c0: f64, velocity_moment: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    Ok(c0 - 0.5 * velocity_moment * t * t)
}

/// `C(0) - α Tr(ρO†{H - E_0, O}) t`.
pub fn ml_autocorr_floor(c0: f64, anchored: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    check_anchored(anchored)?;
    Ok(c0 - alpha_constant() * anchored * t)
}

/// `τ_c = 2α·anchored/⟨Ȯ²⟩`.
pub fn autocorr_crossover(velocity_moment: f64, anchored: f64) -> Result<f64> {
    check_anchored(anchored)?;
    if !(velocity_moment > 0.0) {
        return Err(Error::ZeroScale {
            quantity: "velocity moment",
        });
    }
    Ok(2.0 * alpha_constant() * anchored / velocity_moment)
}

/// `anchored·t`, a ceiling for `|Im C_O(t)|`.
pub fn im_autocorr_ceiling(anchored: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    Ok(anchored * t)
}

fn check_time(t: f64) -> Result<()> {
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    Ok(())
}

fn check_anchored(anchored: f64) -> Result<()> {
    if !(anchored >= 0.0) {
        return Err(Error::OutOfRange(format!("anchored sum {anchored} < 0")));
    }
    Ok(())
}

/// All scalar inputs of the autocorrelation bounds for one `(O, ρ)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AutocorrScales {
    pub c0: f64,
    pub velocity_moment: f64,
    pub anchored: f64,
    /// `Σ_jk |O_jk|² p_k |Δ_jk|`, the Liouvillian speed of the linear bound.
    pub liouvillian_speed: f64,
}

impl AutocorrScales {
    pub fn of(oe: &EnergyBasisOperator, rho: &DensityMatrix) -> Result<Self> {
        let dist = correlation_distribution(oe, rho)?;
        Ok(Self {
            c0: dist.total_weight(),
            velocity_moment: dist.squared_weighted_sum(),
            anchored: anchored_sum(oe, rho, oe.energies()[0])?,
            liouvillian_speed: dist.abs_weighted_sum(),
        })
    }

    /// Same scales for the curve divided by `C_O(0)`.
    pub fn normalized(&self) -> Result<Self> {
        if self.c0 == 0.0 {
            return Err(Error::ZeroOperator);
        }
        Ok(Self {
            c0: 1.0,
            velocity_moment: self.velocity_moment / self.c0,
            anchored: self.anchored / self.c0,
            liouvillian_speed: self.liouvillian_speed / self.c0,
        })
    }

    pub fn mt_floor(&self, t: f64) -> Result<f64> {
        mt_autocorr_floor(self.c0, self.velocity_moment, t)
    }

    pub fn ml_floor(&self, t: f64) -> Result<f64> {
        ml_autocorr_floor(self.c0, self.anchored, t)
    }

    /// Linear floor with the Liouvillian speed in place of the anchored sum.
    pub fn liouvillian_ml_floor(&self, t: f64) -> Result<f64> {
        ml_autocorr_floor(self.c0, self.liouvillian_speed, t)
    }

    pub fn im_ceiling(&self, t: f64) -> Result<f64> {
        im_autocorr_ceiling(self.anchored, t)
    }

    pub fn crossover(&self) -> Result<f64> {
        autocorr_crossover(self.velocity_moment, self.anchored)
    }
}

/// Two-level Hamiltonian `H = k + aσ_x + bσ_y + cσ_z` probed with `O = σ_x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub k: f64,
    pub beta: f64,
}

/// Closed-form `C_{σx}(t)` and time scales of the two-level model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitReference {
    pub re: f64,
    pub im: f64,
    pub mt_scale: f64,
    pub ml_scale: f64,
    pub liouvillian_ml_scale: f64,
}

impl QubitParams {
    pub fn new(a: f64, b: f64, c: f64, beta: f64) -> Result<Self> {
        let q = Self {
            a,
            b,
            c,
            k: 0.0,
            beta,
        };
        q.validate()?;
        Ok(q)
    }

    pub fn with_k(self, k: f64) -> Self {
        Self { k, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if ![self.a, self.b, self.c, self.k]
            .iter()
            .all(|x| x.is_finite())
        {
            return Err(Error::OutOfRange("non-finite qubit coefficient".into()));
        }
        if !(self.beta >= 0.0) || !self.beta.is_finite() {
            return Err(Error::InvalidBeta(self.beta));
        }
        if self.r() == 0.0 {
            return Err(Error::ZeroScale { quantity: "r" });
        }
        Ok(())
    }

    pub fn r(&self) -> f64 {
        (self.a * self.a + self.b * self.b + self.c * self.c).sqrt()
    }

    /// Thermal population of the upper level, `1/(1 + e^{2βr})`.
    pub fn upper_population(&self) -> f64 {
        1.0 / (1.0 + (2.0 * self.beta * self.r()).exp())
    }

    pub fn hamiltonian(&self) -> HermitianMatrix {
        let re = |x: f64| C64::new(x, 0.0);
        let h = pauli::identity() * re(self.k)
            + pauli::sigma_x() * re(self.a)
            + pauli::sigma_y() * re(self.b)
            + pauli::sigma_z() * re(self.c);
        HermitianMatrix::new(h).expect("Pauli combination is Hermitian")
    }

    pub fn operator(&self) -> ComplexMatrix {
        pauli::sigma_x()
    }

    pub fn reference(&self, t: f64) -> Result<QubitReference> {
        self.validate()?;
        let r = self.r();
        let r2 = r * r;
        let transverse = self.b * self.b + self.c * self.c;
        let phase = 2.0 * r * t;
        Ok(QubitReference {
            re: (self.a * self.a + transverse * phase.cos()) / r2,
            im: -(transverse / r2) * (self.beta * r).tanh() * phase.sin(),
            mt_scale: 4.0 * transverse,
            ml_scale: (2.0 / r) * (2.0 * self.a * self.a * self.upper_population() + transverse),
            liouvillian_ml_scale: (2.0 / r) * transverse,
        })
    }

    /// `ml_scale - liouvillian_ml_scale = 4a²/(r(1 + e^{2βr}))`.
    pub fn ml_scale_difference(&self) -> f64 {
        4.0 * self.a * self.a * self.upper_population() / self.r()
    }

    /// `τ_c = 2α·ml_scale/mt_scale`.
    pub fn crossover(&self) -> Result<f64> {
        let s = self.reference(0.0)?;
        autocorr_crossover(s.mt_scale, s.ml_scale)
    }
}

/// Closed-form curve of the two-level model.
pub fn qubit_reference(q: &QubitParams, t: f64) -> Result<QubitReference> {
    q.reference(t)
}
