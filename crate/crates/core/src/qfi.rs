//! Quantum Fisher information of thermal states generated by an observable.
//!
//! Two routes to `F_Q(T)`:
//!
//! * spectral: `2 Σ_{n≠m} (p_n - p_m)²/(p_n + p_m) |O_nm|²`, the reference;
//! * integral: `-16T ∫_0^∞ csch(πTt) Im C_O(t) dt`, times a calibration.
//!
//! With `Im C_O` in the sign convention of [`crate::gapdist`] the raw integral
//! is exactly twice the spectral value (for the two-level case
//! `∫ sin(2t) csch(πTt) dt = tanh(1/T)/(2T)`), so the frozen calibration is
//! [`INTEGRAL_CALIBRATION`] ` = 1/2`.

use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gapdist::{anchored_sum, correlation_distribution};
use crate::linops::{gibbs, to_energy_basis, HermitianMatrix, Spectrum};

/// Multiplier taking the raw kernel integral onto the spectral value.
pub const INTEGRAL_CALIBRATION: f64 = 0.5;

/// Largest admissible `csch(πT t_max)` at the end of the integration window.
pub const KERNEL_TAIL_TOLERANCE: f64 = 1e-12;

const GL_ORDER: usize = 16;
const POINTS_PER_PERIOD: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QfiRoute {
    Spectral,
    Integral,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QfiResult {
    pub value: f64,
    pub route: QfiRoute,
    pub temperature: f64,
    pub calibration: f64,
    /// Integral before calibration; equal to `value` for the spectral route.
    pub raw: f64,
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::InvalidBeta(beta));
    }
    Ok(())
}

/// Spectral QFI of the Gibbs state of `s` at `beta` for generator `o`.
pub fn qfi_spectral(s: &Spectrum, beta: f64, o: &HermitianMatrix) -> Result<QfiResult> {
    check_beta(beta)?;
    let p = gibbs(s, beta)?;
    let p = p.populations();
    let oe = to_energy_basis(o.as_matrix(), s)?;
    let d = s.dim();
    let mut acc = 0.0;
    for n in 0..d {
        for m in 0..d {
            let sum = p[n] + p[m];
            if n == m || sum == 0.0 {
                continue;
            }
            let diff = p[n] - p[m];
            acc += diff * diff / sum * oe.elements()[(n, m)].norm_sqr();
        }
    }
    let value = 2.0 * acc;
    Ok(QfiResult {
        value,
        route: QfiRoute::Spectral,
        temperature: 1.0 / beta,
        calibration: 1.0,
        raw: value,
    })
}

fn csch(x: f64) -> f64 {
    if x > 20.0 {
        2.0 * (-x).exp() / (1.0 - (-2.0 * x).exp())
    } else {
        1.0 / x.sinh()
    }
}

/// Window (with a 1% margin) such that `csch(πT t_max) ≤ KERNEL_TAIL_TOLERANCE`.
pub fn kernel_window(temperature: f64) -> f64 {
    1.01 * (1.0 / KERNEL_TAIL_TOLERANCE).asinh() / (std::f64::consts::PI * temperature)
}

/// `∫_0^{t_max} csch(πqt) g(t) dt` on composite Gauss–Legendre panels for an
/// odd `g` (so the integrand stays finite at `t = 0`). `max_frequency` sets
/// the panel width to resolve the oscillations of `g`.
pub fn csch_integral<F>(q: f64, t_max: f64, max_frequency: f64, g: F) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::OutOfRange(format!("kernel scale {q} must be > 0")));
    }
    let tail = csch(std::f64::consts::PI * q * t_max);
    if !(tail <= KERNEL_TAIL_TOLERANCE) {
        return Err(Error::InsufficientWindow {
            tail,
            tolerance: KERNEL_TAIL_TOLERANCE,
        });
    }
    let mut width = 0.25 / q;
    if max_frequency > 0.0 {
        let period = 2.0 * std::f64::consts::PI / max_frequency;
        width = width.min(period * GL_ORDER as f64 / POINTS_PER_PERIOD);
    }
    let panels = (t_max / width).ceil().max(1.0) as usize;
    let h = t_max / panels as f64;
    let rule = GaussLegendre::new(NonZeroUsize::new(GL_ORDER).unwrap());
    let pi_q = std::f64::consts::PI * q;
    let total = (0..panels)
        .into_par_iter()
        .map(|i| {
            let a = i as f64 * h;
            rule.integrate(a, a + h, |t| csch(pi_q * t) * g(t))
        })
        .sum();
    Ok(total)
}

/// `calibration · (-16T ∫_0^{t_max} csch(πTt) Im C(t) dt)`.
///
/// `max_gap` is the largest Bohr frequency present in `im_c`.
pub fn qfi_from_autocorr<F>(
    im_c: F,
    temperature: f64,
    t_max: f64,
    max_gap: f64,
    calibration: f64,
) -> Result<QfiResult>
where
    F: Fn(f64) -> f64 + Sync,
{
    if !(temperature > 0.0) || !temperature.is_finite() {
        return Err(Error::InvalidBeta(1.0 / temperature));
    }
    let raw = -16.0 * temperature * csch_integral(temperature, t_max, max_gap, im_c)?;
    Ok(QfiResult {
        value: calibration * raw,
        route: QfiRoute::Integral,
        temperature,
        calibration,
        raw,
    })
}

/// Integral route with `Im C_O` evaluated from the spectrum.
pub fn qfi_integral(s: &Spectrum, beta: f64, o: &HermitianMatrix) -> Result<QfiResult> {
    check_beta(beta)?;
    let rho = gibbs(s, beta)?;
    let oe = to_energy_basis(o.as_matrix(), s)?;
    let dist = correlation_distribution(&oe, &rho)?;
    let max_gap = dist
        .entries()
        .iter()
        .map(|e| e.gap.abs())
        .fold(0.0, f64::max);
    let temperature = 1.0 / beta;
    qfi_from_autocorr(
        |t| dist.char_function(t).im,
        temperature,
        kernel_window(temperature),
        max_gap,
        INTEGRAL_CALIBRATION,
    )
}

/// `∫_0^∞ x csch(πqx) dx` by the same quadrature as the integral route.
pub fn kernel_first_moment(q: f64) -> Result<f64> {
    csch_integral(q, kernel_window(q), 0.0, |x| x)
}

/// `4β⟨O{H - E_0, O}⟩`.
pub fn qfi_ceiling(o: &HermitianMatrix, s: &Spectrum, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    Ok(4.0 * beta * anchored(o, s, beta)?)
}

fn anchored(o: &HermitianMatrix, s: &Spectrum, beta: f64) -> Result<f64> {
    let rho = gibbs(s, beta)?;
    let oe = to_energy_basis(o.as_matrix(), s)?;
    anchored_sum(&oe, &rho, s.ground_energy())
}

/// `T / (4M⟨O{H - E_0, O}⟩)`, a floor for `(Δθ)²` after `M` measurements.
pub fn cramer_rao_floor(o: &HermitianMatrix, s: &Spectrum, beta: f64, m: usize) -> Result<f64> {
    check_beta(beta)?;
    if m == 0 {
        return Err(Error::OutOfRange("measurement count must be >= 1".into()));
    }
    let a = anchored(o, s, beta)?;
    if !(a > 0.0) {
        return Err(Error::ZeroScale {
            quantity: "⟨O{H - E_0, O}⟩",
        });
    }
    Ok(1.0 / (beta * 4.0 * m as f64 * a))
}
