//! Thermal quantum Fisher information by the spectral sum and by the
//! autocorrelation integral, with the ceiling and the Cramér–Rao floor.

use opflow::linops::{eigh, pauli, HermitianMatrix};
use opflow::qfi::{cramer_rao_floor, qfi_ceiling, qfi_integral, qfi_spectral};

fn main() -> opflow::Result<()> {
    let s = eigh(&HermitianMatrix::new(pauli::sigma_z())?);
    let o = HermitianMatrix::new(pauli::sigma_x())?;
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>12}",
        "beta", "spectral", "integral", "ceiling", "CR floor"
    );
    for beta in [0.2_f64, 0.5, 1.0, 2.0, 5.0] {
        let spectral = qfi_spectral(&s, beta, &o)?;
        let integral = qfi_integral(&s, beta, &o)?;
        assert!((spectral.value - 4.0 * beta.tanh().powi(2)).abs() < 1e-12);
        println!(
            "{beta:>6.1} {:>12.8} {:>12.8} {:>12.4} {:>12.6}",
            spectral.value,
            integral.value,
            qfi_ceiling(&o, &s, beta)?,
            cramer_rao_floor(&o, &s, beta, 100)?
        );
    }
    Ok(())
}
