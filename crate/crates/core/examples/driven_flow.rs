//! Linear floor for a Hamiltonian with time-dependent energies and a fixed
//! eigenbasis: `H(s) = s σz` with `O = σx` gives overlap `cos t²`.

use opflow::grid::TimeGrid;
use opflow::linops::{eigh, pauli, to_energy_basis, HermitianMatrix};
use opflow::qsl::{driven_overlap, BoundCurve, EnergyTrajectories};

fn main() -> opflow::Result<()> {
    let grid = TimeGrid::uniform(0.0, 2.0, 2000)?;
    let s = eigh(&HermitianMatrix::new(pauli::sigma_z())?);
    let oe = to_energy_basis(&pauli::sigma_x(), &s)?;
    let traj = EnergyTrajectories::sample(grid.clone(), |t| vec![-t, t])?;
    let floor = BoundCurve::driven(&oe, &traj, &grid)?;
    for i in (0..grid.len()).step_by(250) {
        let t = grid.points()[i];
        let overlap = driven_overlap(&oe, &traj, t)?.re;
        println!(
            "t = {t:.3}: overlap {overlap:+.5} (cos t² = {:+.5}), floor {:+.5}",
            (t * t).cos(),
            floor.values[i]
        );
    }
    Ok(())
}
