//! Kubo susceptibility of a spin in a field with the Heisenberg, Bogoliubov
//! and speed-limit ceilings, the crossover times, and the response to a step.

use opflow::grid::TimeGrid;
use opflow::linops::{pauli, HermitianMatrix};
use opflow::response::{
    bogoliubov_ceiling, crossover_times, heisenberg_ceiling, kubo_response, qsl_ceiling,
    susceptibility_curve, BogoliubovVariant, ThermalState,
};

fn main() -> opflow::Result<()> {
    let h0 = HermitianMatrix::new(pauli::sigma_z())?;
    let v = HermitianMatrix::new(pauli::sigma_x())?;
    let state = ThermalState::new(&h0, 10.0)?;

    let heis = heisenberg_ceiling(&v, &v, &state)?;
    let derived = bogoliubov_ceiling(&v, &v, &state, BogoliubovVariant::Derived)?;
    let inverted = bogoliubov_ceiling(&v, &v, &state, BogoliubovVariant::InvertedRatio)?;
    let times = crossover_times(&v, &v, &state)?;
    println!("Heisenberg {heis:.4}, Bogoliubov {derived:.4} (inverted ratio {inverted:.4})");
    println!("{times:#?}");

    let grid = TimeGrid::uniform(0.0, 2.0, 401)?;
    let chi = susceptibility_curve(&v, &v, &state, &grid)?;
    let step = kubo_response(&chi, &vec![1.0; grid.len()], 0.01)?;
    for i in (0..grid.len()).step_by(50) {
        let t = grid.points()[i];
        println!(
            "t = {t:.2}: chi = {:+.4}  qsl = {:.4}  step response = {:+.6}",
            chi.values[i],
            qsl_ceiling(&v, &state, t)?,
            step[i]
        );
    }
    Ok(())
}
