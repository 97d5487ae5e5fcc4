//! Speed limits on unitary operator flows.
//!
//! Given the gap distribution of the overlap `⟨O_0|O_t⟩`, two floors bound
//! its real part from below:
//!
//! * linear (Margolus–Levitin type): `1 - α⟨|𝕃|⟩t`, from `cos x ≥ 1 - α|x|`;
//! * quadratic (Mandelstam–Tamm type): `1 - ⟨𝕃²⟩t²/2`.
//!
//! The quadratic floor is the tighter one up to the crossover time
//! `τ_c = 2α⟨|𝕃|⟩/⟨𝕃²⟩`, the linear one afterwards. Inverting the floors gives
//! minimal times to reach a target overlap.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gapdist::{overlap_distribution, WeightedGapDistribution};
use crate::grid::TimeGrid;
use crate::linops::{ComplexMatrix, EnergyBasisOperator, Spectrum, C64};

/// Clamp window for `arccos` arguments.
pub const ANGLE_CLAMP_TOLERANCE: f64 = 1e-9;

fn tangency_residual(x: f64) -> f64 {
    x.cos() + x * x.sin() - 1.0
}

/// Root `x*` of `cos x + x sin x = 1` in `(2, 3)`: the abscissa where the
/// line `1 - αx` touches `cos x`.
pub fn tangency_point() -> f64 {
    static ROOT: OnceLock<f64> = OnceLock::new();
    *ROOT.get_or_init(|| {
        let (mut lo, mut hi) = (2.0_f64, 3.0_f64);
        // residual is positive at 2 and negative at 3
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if tangency_residual(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-15 {
                break;
            }
        }
        let mut x = 0.5 * (lo + hi);
        // Newton polish; d/dx residual = x cos x
        for _ in 0..3 {
            let step = tangency_residual(x) / (x * x.cos());
            if !step.is_finite() {
                break;
            }
            x -= step;
        }
        x
    })
}

/// The tangency constant `α = sin x* ≈ 0.7246`.
pub fn alpha_constant() -> f64 {
    tangency_point().sin()
}

/// Speeds of an operator flow: `⟨|𝕃|⟩`, `⟨𝕃²⟩` and the constant `α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QslVelocities {
    pub abs_liouvillian: f64,
    pub second_moment: f64,
    pub alpha: f64,
}

impl QslVelocities {
    pub fn new(abs_liouvillian: f64, second_moment: f64) -> Result<Self> {
        if !(abs_liouvillian >= 0.0) || !(second_moment >= 0.0) {
            return Err(Error::OutOfRange(format!(
                "velocities must be >= 0 (got {abs_liouvillian}, {second_moment})"
            )));
        }
        if abs_liouvillian * abs_liouvillian > second_moment * (1.0 + 1e-10) + 1e-300 {
            return Err(Error::OutOfRange(format!(
                "⟨|L|⟩² = {} exceeds ⟨L²⟩ = {second_moment}",
                abs_liouvillian * abs_liouvillian
            )));
        }
        Ok(Self {
            abs_liouvillian,
            second_moment,
            alpha: alpha_constant(),
        })
    }

    pub fn from_distribution(g: &WeightedGapDistribution) -> Result<Self> {
        Self::new(g.abs_moment()?, g.second_moment()?)
    }

    pub fn of_operator(oe: &EnergyBasisOperator) -> Result<Self> {
        Self::from_distribution(&overlap_distribution(oe)?)
    }
}

fn check_time(t: f64) -> Result<()> {
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    Ok(())
}

fn check_target(target: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&target) {
        return Err(Error::OutOfRange(format!(
            "target overlap {target} outside [-1, 1]"
        )));
    }
    Ok(())
}

/// `1 - α⟨|𝕃|⟩t`.
pub fn ml_overlap_floor(v: &QslVelocities, t: f64) -> Result<f64> {
    check_time(t)?;
    Ok(1.0 - v.alpha * v.abs_liouvillian * t)
}

/// `1 - ⟨𝕃²⟩t²/2`.
pub fn mt_overlap_floor(v: &QslVelocities, t: f64) -> Result<f64> {
    check_time(t)?;
    Ok(1.0 - 0.5 * v.second_moment * t * t)
}

/// `1 - (4/π)⟨|𝕃|⟩t`, the weaker linear floor.
pub fn trig_ml_overlap_floor(v: &QslVelocities, t: f64) -> Result<f64> {
    check_time(t)?;
    Ok(1.0 - 4.0 / std::f64::consts::PI * v.abs_liouvillian * t)
}

/// `1 - (6/π²)⟨𝕃²⟩t²`, the weaker quadratic floor.
pub fn trig_mt_overlap_floor(v: &QslVelocities, t: f64) -> Result<f64> {
    check_time(t)?;
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    Ok(1.0 - 6.0 / pi2 * v.second_moment * t * t)
}

fn ratio_or_infinite(numerator: f64, denominator: f64) -> f64 {
    if numerator == 0.0 {
        0.0
    } else if denominator == 0.0 {
        f64::INFINITY
    } else {
        numerator / denominator
    }
}

/// `(1 - target) / (α⟨|𝕃|⟩)`; infinite if the flow cannot move.
pub fn ml_min_time(v: &QslVelocities, target_overlap: f64) -> Result<f64> {
    check_target(target_overlap)?;
    Ok(ratio_or_infinite(
        1.0 - target_overlap,
        v.alpha * v.abs_liouvillian,
    ))
}

/// `√(2(1 - target)/⟨𝕃²⟩)`; infinite if the flow cannot move.
pub fn mt_min_time(v: &QslVelocities, target_overlap: f64) -> Result<f64> {
    check_target(target_overlap)?;
    Ok(ratio_or_infinite(2.0 * (1.0 - target_overlap), v.second_moment).sqrt())
}

/// `(π/4)(1 - target)/⟨|𝕃|⟩`.
pub fn trig_ml_min_time(v: &QslVelocities, target_overlap: f64) -> Result<f64> {
    check_target(target_overlap)?;
    Ok(std::f64::consts::FRAC_PI_4 * ratio_or_infinite(1.0 - target_overlap, v.abs_liouvillian))
}

/// `(π/√6)√(1 - target)/√⟨𝕃²⟩`.
pub fn trig_mt_min_time(v: &QslVelocities, target_overlap: f64) -> Result<f64> {
    check_target(target_overlap)?;
    let scale = std::f64::consts::PI / 6.0_f64.sqrt();
    Ok(scale * ratio_or_infinite(1.0 - target_overlap, v.second_moment).sqrt())
}

/// `τ_c = 2α⟨|𝕃|⟩/⟨𝕃²⟩`, infinite for a frozen flow.
pub fn crossover_time(v: &QslVelocities) -> f64 {
    if v.second_moment == 0.0 {
        return f64::INFINITY;
    }
    2.0 * v.alpha * v.abs_liouvillian / v.second_moment
}

/// Linear bound with the Liouvillian speed replaced by the anchored
/// Hamiltonian expression `Tr(O†{H - E_0, O})/‖O‖²`. Never longer than
/// [`ml_min_time`].
pub fn ml_hamiltonian_min_time(oe: &EnergyBasisOperator, target_overlap: f64) -> Result<f64> {
    check_target(target_overlap)?;
    let norm2 = oe.hs_norm_squared();
    if norm2 == 0.0 {
        return Err(Error::ZeroOperator);
    }
    let e0 = oe.energies()[0];
    let ones = vec![1.0; oe.dim()];
    let anchored = crate::gapdist::anchored_with_weights(oe, &ones, e0);
    if anchored == 0.0 {
        return Err(Error::ZeroScale {
            quantity: "Tr(O†{H - E_0, O})",
        });
    }
    Ok(norm2 * (1.0 - target_overlap) / (alpha_constant() * anchored))
}

/// `μ|E_max⟩⟨E_0| + ν|E_0⟩⟨E_max|` in the lab basis of `s`.
///
/// With degenerate extremal levels the lowest-index eigenvector of each
/// extremal level is used and a warning is logged.
pub fn max_speed_operator(s: &Spectrum, mu: C64, nu: C64) -> Result<ComplexMatrix> {
    let d = s.dim();
    if d < 2 {
        return Err(Error::OutOfRange(format!("dimension {d} < 2")));
    }
    if mu == C64::new(0.0, 0.0) && nu == C64::new(0.0, 0.0) {
        return Err(Error::ZeroOperator);
    }
    let e = s.energies();
    let width = (s.max_energy() - s.ground_energy()).abs().max(1.0);
    let top = (0..d)
        .find(|&k| (e[k] - s.max_energy()).abs() <= 1e-12 * width)
        .unwrap_or(d - 1);
    if e[1] - e[0] <= 1e-12 * width || top != d - 1 {
        log::warn!("degenerate extremal level; using eigenvectors 0 and {top}");
    }
    let ground = s.vectors().column(0);
    let highest = s.vectors().column(top);
    let up = highest * ground.adjoint() * mu;
    let down = ground * highest.adjoint() * nu;
    Ok(up + down)
}

/// Instantaneous energies `E_j(s)` of a Hamiltonian with a fixed eigenbasis.
#[derive(Debug, Clone)]
pub struct EnergyTrajectories {
    grid: TimeGrid,
    levels: Vec<Vec<f64>>,
}

impl EnergyTrajectories {
    /// `levels[i]` holds all energies at `grid[i]`, in the operator's basis order.
    pub fn new(grid: TimeGrid, levels: Vec<Vec<f64>>) -> Result<Self> {
        if levels.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "{} energy samples for {} grid points",
                levels.len(),
                grid.len()
            )));
        }
        let d = levels[0].len();
        if levels.iter().any(|l| l.len() != d) {
            return Err(Error::InvalidGrid("ragged energy samples".into()));
        }
        Ok(Self { grid, levels })
    }

    /// Samples `energies(s)` on `grid`.
    pub fn sample(grid: TimeGrid, energies: impl Fn(f64) -> Vec<f64>) -> Result<Self> {
        let levels = grid.points().iter().map(|&s| energies(s)).collect();
        Self::new(grid, levels)
    }

    pub fn dim(&self) -> usize {
        self.levels[0].len()
    }

    /// Trapezoid integrals `∫_0^t E_j(s) ds` for every level.
    fn integrated(&self, t: f64) -> Result<Vec<f64>> {
        check_time(t)?;
        let pts = self.grid.points();
        if pts[0] > 0.0 || self.grid.last() < t {
            return Err(Error::InvalidGrid(format!(
                "grid [{}, {}] does not cover [0, {t}]",
                pts[0],
                self.grid.last()
            )));
        }
        let d = self.dim();
        let mut acc = vec![0.0; d];
        for i in 0..pts.len() - 1 {
            let (a, b) = (pts[i], pts[i + 1]);
            let lo = a.max(0.0);
            let hi = b.min(t);
            if hi <= lo {
                continue;
            }
            for (j, slot) in acc.iter_mut().enumerate() {
                let fa = self.levels[i][j];
                let fb = self.levels[i + 1][j];
                let at = |x: f64| fa + (fb - fa) * (x - a) / (b - a);
                *slot += 0.5 * (hi - lo) * (at(lo) + at(hi));
            }
        }
        Ok(acc)
    }
}

fn driven_parts(
    oe: &EnergyBasisOperator,
    traj: &EnergyTrajectories,
    t: f64,
) -> Result<(Vec<f64>, f64)> {
    if traj.dim() != oe.dim() {
        return Err(Error::DimensionMismatch {
            left: oe.dim(),
            right: traj.dim(),
        });
    }
    let norm2 = oe.hs_norm_squared();
    if norm2 == 0.0 {
        return Err(Error::ZeroOperator);
    }
    Ok((traj.integrated(t)?, norm2))
}

/// `1 - α Σ_jk w_jk |∫_0^t Δ_jk(s) ds|` with `w_jk = |O_jk|²/‖O‖²`; valid when
/// the Hamiltonians at different times share an eigenbasis.
pub fn driven_ml_floor(oe: &EnergyBasisOperator, traj: &EnergyTrajectories, t: f64) -> Result<f64> {
    let (phase, norm2) = driven_parts(oe, traj, t)?;
    let o = oe.elements();
    let d = oe.dim();
    let mut acc = 0.0;
    for j in 0..d {
        for k in 0..d {
            acc += o[(j, k)].norm_sqr() / norm2 * (phase[j] - phase[k]).abs();
        }
    }
    Ok(1.0 - alpha_constant() * acc)
}

/// Realized overlap `Σ_jk w_jk e^{i∫_0^t Δ_jk(s) ds}` of the driven flow.
pub fn driven_overlap(oe: &EnergyBasisOperator, traj: &EnergyTrajectories, t: f64) -> Result<C64> {
    let (phase, norm2) = driven_parts(oe, traj, t)?;
    let o = oe.elements();
    let d = oe.dim();
    let mut acc = C64::new(0.0, 0.0);
    for j in 0..d {
        for k in 0..d {
            acc += C64::from_polar(o[(j, k)].norm_sqr() / norm2, phase[j] - phase[k]);
        }
    }
    Ok(acc)
}

/// Operator angle `arccos Re⟨O_0|O_t⟩`, in `[0, π]`.
pub fn operator_angle(overlap_re: f64) -> Result<f64> {
    if !(overlap_re.abs() <= 1.0 + ANGLE_CLAMP_TOLERANCE) {
        return Err(Error::OutOfRange(format!(
            "overlap {overlap_re} outside [-1, 1]"
        )));
    }
    Ok(overlap_re.clamp(-1.0, 1.0).acos())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Ml,
    Mt,
    TrigMl,
    TrigMt,
    DrivenMl,
}

/// A floor sampled on a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurve {
    pub grid: TimeGrid,
    pub values: Vec<f64>,
    pub kind: BoundKind,
}

impl BoundCurve {
    /// Samples one of the static floors. `DrivenMl` needs trajectories; use
    /// [`BoundCurve::driven`].
    pub fn sample(kind: BoundKind, v: &QslVelocities, grid: &TimeGrid) -> Result<Self> {
        let f: fn(&QslVelocities, f64) -> Result<f64> = match kind {
            BoundKind::Ml => ml_overlap_floor,
            BoundKind::Mt => mt_overlap_floor,
            BoundKind::TrigMl => trig_ml_overlap_floor,
            BoundKind::TrigMt => trig_mt_overlap_floor,
            BoundKind::DrivenMl => {
                return Err(Error::OutOfRange("driven floor needs trajectories".into()))
            }
        };
        let values = grid
            .points()
            .iter()
            .map(|&t| f(v, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            grid: grid.clone(),
            values,
            kind,
        })
    }

    pub fn driven(
        oe: &EnergyBasisOperator,
        traj: &EnergyTrajectories,
        grid: &TimeGrid,
    ) -> Result<Self> {
        let values = grid
            .points()
            .iter()
            .map(|&t| driven_ml_floor(oe, traj, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            grid: grid.clone(),
            values,
            kind: BoundKind::DrivenMl,
        })
    }
}
