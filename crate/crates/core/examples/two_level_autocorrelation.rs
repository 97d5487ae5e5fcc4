//! Thermal autocorrelation of σx for a driven two-level system, with both
//! speed-limit floors, the imaginary-part ceiling and the crossover time.
//!
//! ```text
//! cargo run --example two_level_autocorrelation
//! ```

use opflow::autocorr::{autocorr_curve, AutocorrScales, QubitParams};
use opflow::grid::TimeGrid;
use opflow::linops::{eigh, gibbs, to_energy_basis};

fn main() -> opflow::Result<()> {
    let q = QubitParams::new(10.0, 1.0, 1.0, 10.0)?;
    let s = eigh(&q.hamiltonian());
    let oe = to_energy_basis(&q.operator(), &s)?;
    let rho = gibbs(&s, q.beta)?;

    let scales = AutocorrScales::of(&oe, &rho)?.normalized()?;
    let tau_c = scales.crossover()?;
    println!(
        "r = {:.6}, tau_c = {tau_c:.6} (closed form {:.6})",
        q.r(),
        q.crossover()?
    );

    let grid = TimeGrid::uniform(0.0, 0.25, 11)?;
    let curve = autocorr_curve(&oe, &rho, &grid)?.normalized()?;
    println!(
        "{:>6} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "t", "Re C", "MT", "ML", "Im C", "ceiling"
    );
    for (&t, c) in grid.points().iter().zip(&curve.values) {
        let reference = q.reference(t)?;
        assert!((reference.re - c.re).abs() < 1e-12);
        println!(
            "{t:>6.3} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            c.re,
            scales.mt_floor(t)?,
            scales.ml_floor(t)?,
            c.im,
            scales.im_ceiling(t)?
        );
    }
    Ok(())
}
