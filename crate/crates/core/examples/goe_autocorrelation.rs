//! Normalized autocorrelation of a GOE observable under an independent GOE
//! Hamiltonian, checked against every bound at each grid point.

use opflow::autocorr::{autocorr_curve, AutocorrScales};
use opflow::ensembles::{sample_goe_pair, GoeSpec};
use opflow::grid::TimeGrid;
use opflow::linops::{eigh, gibbs, to_energy_basis};

fn main() -> opflow::Result<()> {
    let spec = GoeSpec::new(200, 1.0, 1)?;
    let (h, o) = sample_goe_pair(&spec, 2);
    let s = eigh(&h);
    println!(
        "spectrum [{:.2}, {:.2}], semicircle radius {:.2}",
        s.ground_energy(),
        s.max_energy(),
        spec.spectral_radius()
    );

    let oe = to_energy_basis(o.as_matrix(), &s)?;
    let rho = gibbs(&s, 0.1)?;
    let grid = TimeGrid::uniform(0.0, 0.2, 2000)?;
    let curve = autocorr_curve(&oe, &rho, &grid)?.normalized()?;
    let scales = AutocorrScales::of(&oe, &rho)?.normalized()?;

    let mut worst = f64::INFINITY;
    for (&t, c) in grid.points().iter().zip(&curve.values) {
        let floor = scales.mt_floor(t)?.max(scales.ml_floor(t)?);
        worst = worst
            .min(c.re - floor)
            .min(scales.im_ceiling(t)? - c.im.abs());
    }
    println!(
        "tau_c = {:.5}, smallest margin {worst:.3e}",
        scales.crossover()?
    );
    Ok(())
}
