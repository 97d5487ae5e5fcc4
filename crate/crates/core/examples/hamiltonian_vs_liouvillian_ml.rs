//! The linear floor with the Liouvillian speed `Σ w|Δ|` against the one with
//! the anchored Hamiltonian expression `⟨O{H - E0, O}⟩`. The Liouvillian
//! version is never weaker; the gap closes at low temperature.

use opflow::autocorr::{AutocorrScales, QubitParams};
use opflow::linops::{eigh, gibbs, to_energy_basis};

fn main() -> opflow::Result<()> {
    println!(
        "{:>6} {:>12} {:>12} {:>12}",
        "beta", "liouvillian", "hamiltonian", "closed gap"
    );
    for beta in [0.1, 0.5, 1.0, 2.0, 10.0] {
        let q = QubitParams::new(1.0, 0.5, 0.5, beta)?;
        let s = eigh(&q.hamiltonian());
        let oe = to_energy_basis(&q.operator(), &s)?;
        let scales = AutocorrScales::of(&oe, &gibbs(&s, beta)?)?.normalized()?;
        println!(
            "{beta:>6.1} {:>12.6} {:>12.6} {:>12.6}",
            scales.liouvillian_speed,
            scales.anchored,
            q.ml_scale_difference()
        );
    }
    Ok(())
}
