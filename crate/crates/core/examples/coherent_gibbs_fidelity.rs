//! Coherent Gibbs state of a GOE Hamiltonian: fidelity decay against the
//! linear floor up to τ = 1/(σ√(8d)), plus state speed limits.

use opflow::ensembles::{sample_goe, GoeSpec};
use opflow::grid::TimeGrid;
use opflow::linops::eigh;
use opflow::states::{
    coherent_gibbs, goe_fidelity_experiment, ml_state_min_time, mt_state_min_time,
    orthogonalization_ratios, partition_overlap, variance_relation_check,
};

fn main() -> opflow::Result<()> {
    let spec = GoeSpec::new(50, 1.0, 3)?;
    let grid = TimeGrid::uniform(0.0, 0.2, 2000)?;
    let beta = 1.0;
    let ex = goe_fidelity_experiment(&spec, beta, &grid)?;
    println!(
        "tau = {:.4}, <H> - E0 = {:.4}, violations before tau: {}",
        ex.tau,
        ex.mean_energy_above_ground,
        ex.violations_before_tau(1e-9)
    );

    let s = eigh(&sample_goe(&spec));
    let psi = coherent_gibbs(&s, beta)?;
    let (l2, h2) = variance_relation_check(&psi, &s)?;
    println!("(ΔL)² = {l2:.6} = 2 x {h2:.6}");
    let angle = std::f64::consts::FRAC_PI_4;
    println!(
        "Bures angle π/4 needs t ≥ {:.5} (MT) and t ≥ {:.5} (ML)",
        mt_state_min_time(&psi, &s, angle)?,
        ml_state_min_time(&psi, &s, angle)?
    );
    println!(
        "Z(β + it)/Z(β) at t = 0.05: {:.6}",
        partition_overlap(&s, beta, 0.05)?
    );
    let (mt, ml) = orthogonalization_ratios();
    println!("orthogonalization ratios {mt:.5}, {ml:.5}");
    Ok(())
}
