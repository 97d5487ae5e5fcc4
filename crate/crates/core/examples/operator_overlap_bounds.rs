//! Operator overlap of a random observable under a random Hamiltonian,
//! against the linear and quadratic floors and their trigonometric variants.
//! Also inverts the floors into minimal times for a target overlap.

use opflow::gapdist::overlap_distribution;
use opflow::grid::TimeGrid;
use opflow::linops::{eigh, to_energy_basis, ComplexMatrix, HermitianMatrix, C64};
use opflow::qsl::{
    crossover_time, ml_min_time, mt_min_time, operator_angle, trig_ml_min_time, trig_mt_min_time,
    BoundCurve, BoundKind, QslVelocities,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

fn random_matrix(d: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |_, _| {
        C64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
    })
}

fn main() -> opflow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let d = 6;
    let a = random_matrix(d, &mut rng);
    let h = HermitianMatrix::new((&a + a.adjoint()) * C64::new(0.5, 0.0))?;
    let o = random_matrix(d, &mut rng);

    let oe = to_energy_basis(&o, &eigh(&h))?;
    let dist = overlap_distribution(&oe)?;
    let v = QslVelocities::from_distribution(&dist)?;
    println!(
        "<|L|> = {:.4}, <L^2> = {:.4}, tau_c = {:.4}",
        v.abs_liouvillian,
        v.second_moment,
        crossover_time(&v)
    );

    let grid = TimeGrid::uniform(0.0, 1.0, 6)?;
    let ml = BoundCurve::sample(BoundKind::Ml, &v, &grid)?;
    let mt = BoundCurve::sample(BoundKind::Mt, &v, &grid)?;
    for (i, &t) in grid.points().iter().enumerate() {
        let overlap = dist.char_function(t).re;
        println!(
            "t = {t:.2}: Re<O0|Ot> = {overlap:+.4}  angle = {:.4}  ML {:+.4}  MT {:+.4}",
            operator_angle(overlap)?,
            ml.values[i],
            mt.values[i]
        );
    }

    for target in [0.9, 0.5, 0.0] {
        println!(
            "overlap {target}: t_ML >= {:.4} (trig {:.4}), t_MT >= {:.4} (trig {:.4})",
            ml_min_time(&v, target)?,
            trig_ml_min_time(&v, target)?,
            mt_min_time(&v, target)?,
            trig_mt_min_time(&v, target)?
        );
    }
    Ok(())
}
