//! Liouville-space view: the superoperator `i(H⊗1 - 1⊗Hᵀ)` has the Bohr
//! frequencies as eigenvalues, and its exponential moves vectorized
//! operators exactly like the Heisenberg picture.

use nalgebra::DVector;
use opflow::linops::{
    build_liouvillian, eigh, evolve_heisenberg, pauli, to_energy_basis, vectorize, HermitianMatrix,
    C64,
};

fn main() -> opflow::Result<()> {
    let h = HermitianMatrix::new(pauli::sigma_z() + pauli::sigma_x() * C64::new(0.5, 0.0))?;
    let s = eigh(&h);
    let l = build_liouvillian(&h);
    let generator = HermitianMatrix::new(&l * C64::new(0.0, -1.0))?;
    let freqs = eigh(&generator).energies().to_vec();
    println!("energies {:?}", s.energies());
    println!("Liouvillian spectrum (imaginary parts) {freqs:.6?}");

    let o = pauli::sigma_y();
    let t = 0.8;
    let lifted = (l * C64::new(t, 0.0)).exp() * DVector::from_vec(vectorize(&o)?);
    let direct = evolve_heisenberg(&to_energy_basis(&o, &s)?, t).to_lab(&s);
    let direct = DVector::from_vec(vectorize(&direct)?);
    println!(
        "|exp(Lt) vec(O) - vec(O_t)| = {:.2e}",
        (lifted - direct).norm()
    );
    Ok(())
}
