//! Weighted distributions of Bohr frequencies.
//!
//! For a Hamiltonian with energies `E_j` and an operator with energy-basis
//! elements `O_jk`, both the operator overlap `⟨O_0|O_t⟩` and the thermal
//! autocorrelation `C_O(t)` are characteristic functions `Σ w e^{iΔt}` of a
//! distribution over gaps `Δ_jk = E_j - E_k`. The speed-limit velocities are
//! its moments.
//!
//! Sign convention for autocorrelations: `C_O(t) = Tr(O_t† O_0 ρ)` with
//! `O_t = e^{iHt} O e^{-iHt}` expands to `Σ |O_jk|² p_k e^{-iΔ_jk t}`, so the
//! correlation distribution stores `-Δ_jk`. For the two-level example this
//! makes `Im C_O(t) = -((b²+c²)/r²) tanh(βr) sin(2rt)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linops::{DensityMatrix, EnergyBasisOperator};

/// Gaps closer than this are merged into a single entry.
pub const MERGE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapWeight {
    pub gap: f64,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGapDistribution {
    entries: Vec<GapWeight>,
    normalized: bool,
    total_weight: f64,
}

impl WeightedGapDistribution {
    /// Builds a distribution from raw `(gap, weight)` pairs.
    ///
    /// Zero weights are dropped and gaps within [`MERGE_TOLERANCE`] of the
    /// first gap of their run are merged at their weighted mean.
    pub fn new(raw: Vec<GapWeight>, normalized: bool) -> Result<Self> {
        for e in &raw {
            if !(e.weight >= 0.0) || !e.weight.is_finite() || !e.gap.is_finite() {
                return Err(Error::OutOfRange(format!(
                    "gap/weight pair ({}, {}) is not a finite nonnegative weight",
                    e.gap, e.weight
                )));
            }
        }
        let total_weight: f64 = raw.iter().map(|e| e.weight).sum();
        if normalized && (total_weight - 1.0).abs() > 1e-12 {
            return Err(Error::OutOfRange(format!(
                "normalized distribution has total weight {total_weight}"
            )));
        }
        Ok(Self {
            entries: compact(raw),
            normalized,
            total_weight,
        })
    }

    pub fn entries(&self) -> &[GapWeight] {
        &self.entries
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn total_weight(&self) -> f64 {
        self.total_weight
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ w e^{iΔt}`.
    pub fn char_function(&self, t: f64) -> Complex64 {
        let (mut re, mut im) = (0.0, 0.0);
        for e in &self.entries {
            let (s, c) = (e.gap * t).sin_cos();
            re += e.weight * c;
            im += e.weight * s;
        }
        Complex64::new(re, im)
    }

    /// `Σ w |Δ|` without normalization.
    pub fn abs_weighted_sum(&self) -> f64 {
        self.entries.iter().map(|e| e.weight * e.gap.abs()).sum()
    }

    /// `Σ w Δ²` without normalization.
    pub fn squared_weighted_sum(&self) -> f64 {
        self.entries.iter().map(|e| e.weight * e.gap * e.gap).sum()
    }

    fn nonzero_total(&self) -> Result<f64> {
        if self.total_weight > 0.0 {
            Ok(self.total_weight)
        } else {
            Err(Error::ZeroWeight)
        }
    }

    /// Mean gap `⟨𝕃⟩` (times `-i`) of the weight-normalized distribution.
    pub fn first_moment(&self) -> Result<f64> {
        let total = self.nonzero_total()?;
        Ok(self.entries.iter().map(|e| e.weight * e.gap).sum::<f64>() / total)
    }

    /// Mean absolute gap `⟨|𝕃|⟩`.
    pub fn abs_moment(&self) -> Result<f64> {
        Ok(self.abs_weighted_sum() / self.nonzero_total()?)
    }

    /// Mean squared gap `⟨𝕃²⟩ = ‖𝕃|O⟩‖²`.
    pub fn second_moment(&self) -> Result<f64> {
        Ok(self.squared_weighted_sum() / self.nonzero_total()?)
    }

    /// Copy rescaled to unit total weight.
    pub fn normalized_copy(&self) -> Result<Self> {
        let total = self.nonzero_total()?;
        Ok(Self {
            entries: self
                .entries
                .iter()
                .map(|e| GapWeight {
                    gap: e.gap,
                    weight: e.weight / total,
                })
                .collect(),
            normalized: true,
            total_weight: 1.0,
        })
    }
}

fn compact(mut raw: Vec<GapWeight>) -> Vec<GapWeight> {
    raw.retain(|e| e.weight > 0.0);
    raw.sort_by(|a, b| a.gap.total_cmp(&b.gap));
    let mut out: Vec<GapWeight> = Vec::with_capacity(raw.len());
    let mut run_start = f64::NEG_INFINITY;
    let mut weighted_gap = 0.0;
    for e in raw {
        match out.last_mut() {
            Some(last) if e.gap - run_start <= MERGE_TOLERANCE => {
                weighted_gap += e.weight * e.gap;
                last.weight += e.weight;
                last.gap = weighted_gap / last.weight;
            }
            _ => {
                run_start = e.gap;
                weighted_gap = e.weight * e.gap;
                out.push(e);
            }
        }
    }
    out
}

/// Distribution of the operator overlap `⟨O_0|O_t⟩`:
/// entries `(E_j - E_k, |O_jk|²/‖O‖²)`.
pub fn overlap_distribution(oe: &EnergyBasisOperator) -> Result<WeightedGapDistribution> {
    let norm2 = oe.hs_norm_squared();
    if norm2 == 0.0 {
        return Err(Error::ZeroOperator);
    }
    let e = oe.energies();
    let o = oe.elements();
    let d = oe.dim();
    let mut raw = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            raw.push(GapWeight {
                gap: e[j] - e[k],
                weight: o[(j, k)].norm_sqr() / norm2,
            });
        }
    }
    // re-normalize against the rounding of the sum
    let total: f64 = raw.iter().map(|g| g.weight).sum();
    for g in &mut raw {
        g.weight /= total;
    }
    WeightedGapDistribution::new(raw, true)
}

/// Distribution of `C_O(t) = Tr(O_t† O_0 ρ)`: entries `(-(E_j - E_k), |O_jk|² p_k)`,
/// total weight `C_O(0)`.
pub fn correlation_distribution(
    oe: &EnergyBasisOperator,
    rho: &DensityMatrix,
) -> Result<WeightedGapDistribution> {
    check_dims(oe, rho)?;
    let e = oe.energies();
    let o = oe.elements();
    let p = rho.populations();
    let d = oe.dim();
    let mut raw = Vec::with_capacity(d * d);
    for j in 0..d {
        for k in 0..d {
            raw.push(GapWeight {
                gap: -(e[j] - e[k]),
                weight: o[(j, k)].norm_sqr() * p[k],
            });
        }
    }
    WeightedGapDistribution::new(raw, false)
}

fn check_dims(oe: &EnergyBasisOperator, rho: &DensityMatrix) -> Result<()> {
    if oe.dim() != rho.dim() {
        return Err(Error::DimensionMismatch {
            left: oe.dim(),
            right: rho.dim(),
        });
    }
    Ok(())
}

pub(crate) fn anchored_with_weights(oe: &EnergyBasisOperator, weights: &[f64], e0: f64) -> f64 {
    let e = oe.energies();
    let o = oe.elements();
    let d = oe.dim();
    let mut acc = 0.0;
    for k in 0..d {
        if weights[k] == 0.0 {
            continue;
        }
        for j in 0..d {
            acc += o[(j, k)].norm_sqr() * weights[k] * ((e[j] - e0) + (e[k] - e0));
        }
    }
    acc
}

/// `Tr(ρ O† {H - E_0, O}) = Σ_jk |O_jk|² p_k (E_j + E_k - 2E_0)`.
///
/// `e0` must not exceed the lowest energy; passing anything but the ground
/// energy loosens the bound `anchored ≥ Σ w|Δ|`.
pub fn anchored_sum(oe: &EnergyBasisOperator, rho: &DensityMatrix, e0: f64) -> Result<f64> {
    check_dims(oe, rho)?;
    let emin = oe.energies()[0];
    if e0 > emin + 1e-12 * emin.abs().max(1.0) {
        return Err(Error::OutOfRange(format!(
            "anchor {e0} lies above the ground energy {emin}"
        )));
    }
    Ok(anchored_with_weights(oe, rho.populations(), e0))
}
