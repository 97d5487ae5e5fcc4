//! Linear response of thermal states and three ceilings on the dynamical
//! susceptibility `χ_AV(t) = -iθ(t)⟨[A(t), V]⟩_0`:
//!
//! * Heisenberg: `2 ΔA ΔV`, constant in time;
//! * Bogoliubov: `√(β⟨A²⟩⟨[V,[H_0,V]]⟩)`, constant in time;
//! * speed limit (`A = V`): `2t⟨V{H_0 - E_0, V}⟩`, linear in time.
//!
//! The Bogoliubov ceiling can also be written `2√(T_B/T) ΔA ΔV` with the
//! characteristic temperature `T_B`. [`BogoliubovVariant::InvertedRatio`] keeps the
//! inverted ratio `2√(T/T_B) ΔA ΔV` for comparison; it is not a valid bound.

use nalgebra::DMatrix;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gapdist::anchored_sum;
use crate::grid::TimeGrid;
use crate::linops::{
    commutator, eigh, expectation, gibbs, to_energy_basis, ComplexMatrix, DensityMatrix,
    HermitianMatrix, Spectrum, C64,
};

/// Gibbs state of an unperturbed Hamiltonian `H_0`.
#[derive(Debug, Clone)]
pub struct ThermalState {
    hamiltonian: HermitianMatrix,
    spectrum: Spectrum,
    rho: DensityMatrix,
    beta: f64,
}

impl ThermalState {
    pub fn new(h0: &HermitianMatrix, beta: f64) -> Result<Self> {
        let spectrum = eigh(h0);
        let rho = gibbs(&spectrum, beta)?;
        Ok(Self {
            hamiltonian: h0.clone(),
            spectrum,
            rho,
            beta,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn populations(&self) -> &[f64] {
        self.rho.populations()
    }

    pub fn dim(&self) -> usize {
        self.spectrum.dim()
    }

    /// `⟨X⟩_0`; the imaginary part is dropped for Hermitian `X`.
    pub fn mean(&self, x: &HermitianMatrix) -> Result<f64> {
        Ok(expectation(&self.rho, &self.spectrum, x.as_matrix())?.re)
    }

    /// `Δ_0X = √(⟨X²⟩ - ⟨X⟩²)`.
    pub fn std_dev(&self, x: &HermitianMatrix) -> Result<f64> {
        let mean = self.mean(x)?;
        let d = self.dim();
        let centered = x.as_matrix() - ComplexMatrix::identity(d, d) * C64::new(mean, 0.0);
        let variance = expectation(&self.rho, &self.spectrum, &(&centered * &centered))?.re;
        Ok(variance.max(0.0).sqrt())
    }

    /// `⟨[V,[H_0,V]]⟩_0 ≥ 0`.
    pub fn double_commutator(&self, v: &HermitianMatrix) -> Result<f64> {
        let inner = commutator(self.hamiltonian.as_matrix(), v.as_matrix())?;
        let outer = commutator(v.as_matrix(), &inner)?;
        let value = expectation(&self.rho, &self.spectrum, &outer)?.re;
        let scale = self.hamiltonian.norm() * v.norm() * v.norm();
        debug_assert!(
            value >= -1e-10 * scale.max(1.0),
            "double commutator {value}"
        );
        Ok(value.max(0.0))
    }

    /// `⟨V{H_0 - E_0, V}⟩_0`.
    pub fn anchored(&self, v: &HermitianMatrix) -> Result<f64> {
        let ve = to_energy_basis(v.as_matrix(), &self.spectrum)?;
        anchored_sum(&ve, &self.rho, self.spectrum.ground_energy())
    }
}

/// `χ_AV(t)` sampled for `t ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SusceptibilityCurve {
    pub grid: TimeGrid,
    pub values: Vec<f64>,
    pub labels: (String, String),
}

/// Largest imaginary part discarded when taking `χ` real, relative to `max|χ|`.
pub const REALITY_TOLERANCE: f64 = 1e-10;

/// `χ_AV(t) = -i Σ_jk (p_j - p_k) A_jk V_kj e^{iΔ_jk t}`.
pub fn susceptibility_curve(
    a: &HermitianMatrix,
    v: &HermitianMatrix,
    state: &ThermalState,
    grid: &TimeGrid,
) -> Result<SusceptibilityCurve> {
    if grid.first() < 0.0 {
        return Err(Error::NegativeTime(grid.first()));
    }
    let s = &state.spectrum;
    let ae = to_energy_basis(a.as_matrix(), s)?;
    let ve = to_energy_basis(v.as_matrix(), s)?;
    let e = s.energies();
    let p = state.populations();
    let d = s.dim();
    let mut terms = Vec::new();
    let mut scale = 0.0;
    for j in 0..d {
        for k in 0..d {
            let w = (p[j] - p[k]) * ae.elements()[(j, k)] * ve.elements()[(k, j)];
            if w != C64::new(0.0, 0.0) {
                scale += w.norm();
                terms.push((e[j] - e[k], w));
            }
        }
    }
    let values = grid
        .points()
        .par_iter()
        .map(|&t| {
            let sum: C64 = terms
                .iter()
                .map(|&(gap, w)| w * C64::from_polar(1.0, gap * t))
                .sum();
            let chi = sum * C64::new(0.0, -1.0);
            debug_assert!(chi.im.abs() <= REALITY_TOLERANCE * scale.max(1.0));
            chi.re
        })
        .collect();
    Ok(SusceptibilityCurve {
        grid: grid.clone(),
        values,
        labels: ("A".into(), "V".into()),
    })
}

impl SusceptibilityCurve {
    pub fn with_labels(mut self, a: &str, v: &str) -> Self {
        self.labels = (a.into(), v.into());
        self
    }
}

/// Causal response `λ ∫_0^t χ(t - s) f(s) ds` by the trapezoid rule on the
/// curve's grid, which must be uniform and start at `t = 0`.
pub fn kubo_response(chi: &SusceptibilityCurve, drive: &[f64], lambda: f64) -> Result<Vec<f64>> {
    let n = chi.grid.len();
    if drive.len() != n {
        return Err(Error::InvalidGrid(format!(
            "drive has {} samples, grid has {n}",
            drive.len()
        )));
    }
    if chi.grid.first() != 0.0 {
        return Err(Error::InvalidGrid(
            "response grid must start at t = 0".into(),
        ));
    }
    let h = chi
        .grid
        .uniform_step()
        .ok_or_else(|| Error::InvalidGrid("response grid must be uniform".into()))?;
    let x = &chi.values;
    let out = (0..n)
        .into_par_iter()
        .map(|i| {
            if i == 0 {
                return 0.0;
            }
            let mut acc = 0.5 * (x[i] * drive[0] + x[0] * drive[i]);
            for m in 1..i {
                acc += x[i - m] * drive[m];
            }
            lambda * h * acc
        })
        .collect();
    Ok(out)
}

/// `2 Δ_0A Δ_0V`.
pub fn heisenberg_ceiling(
    a: &HermitianMatrix,
    v: &HermitianMatrix,
    state: &ThermalState,
) -> Result<f64> {
    Ok(2.0 * state.std_dev(a)? * state.std_dev(v)?)
}

/// `T_B = ⟨A²⟩⟨[V,[H_0,V]]⟩ / (4 (Δ_0A Δ_0V)²)`.
pub fn bogoliubov_temperature(
    a: &HermitianMatrix,
    v: &HermitianMatrix,
    state: &ThermalState,
) -> Result<f64> {
    let spread = state.std_dev(a)? * state.std_dev(v)?;
    if spread == 0.0 {
        return Err(Error::ZeroScale {
            quantity: "Δ_0A Δ_0V",
        });
    }
    let a2 = state.mean(&HermitianMatrix::new(a.as_matrix() * a.as_matrix())?)?;
    Ok(a2 * state.double_commutator(v)? / (4.0 * spread * spread))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BogoliubovVariant {
    /// `√(β⟨A²⟩⟨[V,[H_0,V]]⟩) = 2√(T_B/T) Δ_0A Δ_0V`.
    #[default]
    Derived,
    /// `2√(T/T_B) Δ_0A Δ_0V`; fails to bound `χ` below `T_B`.
    InvertedRatio,
}

impl std::str::FromStr for BogoliubovVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "derived" => Ok(Self::Derived),
            "inverted_ratio" => Ok(Self::InvertedRatio),
            other => Err(Error::OutOfRange(format!(
                "unknown Bogoliubov variant {other:?} (expected derived or inverted_ratio)"
            ))),
        }
    }
}

pub fn bogoliubov_ceiling(
    a: &HermitianMatrix,
    v: &HermitianMatrix,
    state: &ThermalState,
    variant: BogoliubovVariant,
) -> Result<f64> {
    let beta = state.beta;
    if !(beta > 0.0) {
        return Err(Error::InvalidBeta(beta));
    }
    match variant {
        BogoliubovVariant::Derived => {
            let a2 = state.mean(&HermitianMatrix::new(a.as_matrix() * a.as_matrix())?)?;
            Ok((beta * a2 * state.double_commutator(v)?).sqrt())
        }
        BogoliubovVariant::InvertedRatio => {
            let tb = bogoliubov_temperature(a, v, state)?;
            if tb == 0.0 {
                return Err(Error::ZeroScale { quantity: "T_B" });
            }
            Ok(2.0 * (1.0 / (beta * tb)).sqrt() * state.std_dev(a)? * state.std_dev(v)?)
        }
    }
}

/// `2t⟨V{H_0 - E_0, V}⟩_0`, valid for `χ_VV`.
pub fn qsl_ceiling(v: &HermitianMatrix, state: &ThermalState, t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    Ok(2.0 * t * state.anchored(v)?)
}

/// `τ_QSL = ⟨V{H_0 - E_0, V}⟩_0^{-1/3}`.
pub fn tau_qsl(v: &HermitianMatrix, state: &ThermalState) -> Result<f64> {
    let anchored = state.anchored(v)?;
    if !(anchored > 0.0) {
        return Err(Error::ZeroScale {
            quantity: "⟨V{H_0 - E_0, V}⟩",
        });
    }
    Ok(anchored.powf(-1.0 / 3.0))
}

/// Times where the linear speed-limit ceiling meets the constant ones.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CrossoverTimes {
    /// `(Δ_0V)² τ_QSL³`, where it meets the Heisenberg ceiling.
    pub tau_h: f64,
    /// `(Δ_0V)² √(T/T_B) τ_QSL³`, with the inverted temperature ratio.
    pub tau_b_inverted: f64,
    /// `(Δ_0V)² √(T_B/T) τ_QSL³`, where it meets the derived Bogoliubov ceiling.
    pub tau_b_derived: f64,
    pub tau_qsl: f64,
    pub bogoliubov_temperature: f64,
}

pub fn crossover_times(
    v: &HermitianMatrix,
    a: &HermitianMatrix,
    state: &ThermalState,
) -> Result<CrossoverTimes> {
    let tau = tau_qsl(v, state)?;
    let dv = state.std_dev(v)?;
    let tb = bogoliubov_temperature(a, v, state)?;
    if !(state.beta > 0.0) {
        return Err(Error::InvalidBeta(state.beta));
    }
    let temperature = 1.0 / state.beta;
    let base = dv * dv * tau.powi(3);
    Ok(CrossoverTimes {
        tau_h: base,
        tau_b_inverted: base * (temperature / tb).sqrt(),
        tau_b_derived: base * (tb / temperature).sqrt(),
        tau_qsl: tau,
        bogoliubov_temperature: tb,
    })
}

/// Ceilings for every pair `(A_i, V_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundTensor {
    pub heisenberg: DMatrix<f64>,
    pub bogoliubov: DMatrix<f64>,
    /// Slope `2⟨V_i{H_0 - E_0, V_i}⟩` of the speed-limit ceiling, present where `A_i = V_i`.
    pub qsl_slope: Vec<Option<f64>>,
}

pub fn bound_tensor(
    a_list: &[HermitianMatrix],
    v_list: &[HermitianMatrix],
    state: &ThermalState,
) -> Result<BoundTensor> {
    if a_list.is_empty() || v_list.is_empty() {
        return Err(Error::OutOfRange("empty operator list".into()));
    }
    if a_list.len() != v_list.len() {
        return Err(Error::DimensionMismatch {
            left: a_list.len(),
            right: v_list.len(),
        });
    }
    let n = a_list.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let entries = pairs
        .par_iter()
        .map(|&(i, j)| {
            Ok((
                heisenberg_ceiling(&a_list[i], &v_list[j], state)?,
                bogoliubov_ceiling(&a_list[i], &v_list[j], state, BogoliubovVariant::Derived)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let heisenberg = DMatrix::from_fn(n, n, |i, j| entries[i * n + j].0);
    let bogoliubov = DMatrix::from_fn(n, n, |i, j| entries[i * n + j].1);
    let qsl_slope = (0..n)
        .map(|i| {
            let same = a_list[i].as_matrix() == v_list[i].as_matrix();
            if same {
                qsl_ceiling(&v_list[i], state, 1.0).map(Some)
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundTensor {
        heisenberg,
        bogoliubov,
        qsl_slope,
    })
}

/// Spin-1/2 operators `S_x, S_y, S_z = σ/2`.
pub fn spin_half_components() -> [HermitianMatrix; 3] {
    use crate::linops::pauli::*;
    let half = C64::new(0.5, 0.0);
    [sigma_x(), sigma_y(), sigma_z()].map(|m| HermitianMatrix::new(m * half).unwrap())
}
