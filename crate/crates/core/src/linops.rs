//! Dense complex linear algebra for Hermitian generators.
//!
//! Everything downstream works in the energy eigenbasis of a Hamiltonian, so
//! the central objects here are [`Spectrum`] (sorted energies plus a unitary
//! eigenvector matrix) and [`EnergyBasisOperator`] (matrix elements `O_jk`
//! tied to the energies of that spectrum). Natural units `ħ = k_B = 1`.
//!
//! Liouville-space vectors use row-major ordering: component `(i, j)` of a
//! vectorized operator sits at index `i * d + j`, matching `|i⟩ ⊗ |j⟩`.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// General dense complex matrix (possibly non-Hermitian).
pub type ComplexMatrix = DMatrix<C64>;

const HERMITIAN_RTOL: f64 = 1e-12;
const POPULATION_TOL: f64 = 1e-12;

/// Largest entry of `m - m†`.
pub fn symmetry_violation(m: &ComplexMatrix) -> f64 {
    let d = m.nrows();
    let mut worst = 0.0_f64;
    for i in 0..d {
        for j in i..d {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

fn check_square(m: &ComplexMatrix) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(())
}

fn check_finite(m: &ComplexMatrix) -> Result<()> {
    for ((row, col), z) in m
        .iter()
        .enumerate()
        .map(|(k, z)| ((k % m.nrows(), k / m.nrows()), z))
    {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite { row, col });
        }
    }
    Ok(())
}

fn check_same_dim(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            left: a.nrows(),
            right: b.nrows(),
        });
    }
    Ok(())
}

/// A validated Hermitian matrix.
///
/// Construction rejects inputs whose anti-Hermitian part exceeds `1e-12`
/// times the largest entry, then stores the exactly Hermitian projection.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix(ComplexMatrix);

impl HermitianMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        check_square(&m)?;
        check_finite(&m)?;
        let scale = m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()));
        let violation = symmetry_violation(&m);
        if violation > HERMITIAN_RTOL * scale {
            return Err(Error::NotHermitian { violation });
        }
        let sym = (&m + m.adjoint()) * C64::new(0.5, 0.0);
        Ok(Self(sym))
    }

    pub fn from_real(m: &DMatrix<f64>) -> Result<Self> {
        Self::new(m.map(|x| C64::new(x, 0.0)))
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let d = diag.len();
        let mut m = ComplexMatrix::zeros(d, d);
        for (k, &e) in diag.iter().enumerate() {
            m[(k, k)] = C64::new(e, 0.0);
        }
        Self(m)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_inner(self) -> ComplexMatrix {
        self.0
    }

    /// Frobenius (Hilbert–Schmidt) norm.
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    /// `self + c·1`.
    pub fn shifted(&self, c: f64) -> Self {
        let d = self.dim();
        Self(&self.0 + ComplexMatrix::identity(d, d) * C64::new(c, 0.0))
    }
}

/// Sorted eigenvalues and orthonormal eigenvectors (as columns) of a
/// Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Spectrum {
    energies: Arc<[f64]>,
    vectors: ComplexMatrix,
}

impl Spectrum {
    /// Spectrum of an operator already diagonal in the computational basis.
    pub fn from_energies(energies: &[f64]) -> Result<Self> {
        if energies.is_empty() {
            return Err(Error::OutOfRange("empty spectrum".into()));
        }
        let mut order: Vec<usize> = (0..energies.len()).collect();
        order.sort_by(|&a, &b| energies[a].total_cmp(&energies[b]));
        let d = energies.len();
        let mut vectors = ComplexMatrix::zeros(d, d);
        for (col, &src) in order.iter().enumerate() {
            vectors[(src, col)] = C64::new(1.0, 0.0);
        }
        let sorted: Vec<f64> = order.iter().map(|&k| energies[k]).collect();
        Ok(Self {
            energies: sorted.into(),
            vectors,
        })
    }

    pub fn dim(&self) -> usize {
        self.energies.len()
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub(crate) fn shared_energies(&self) -> Arc<[f64]> {
        Arc::clone(&self.energies)
    }

    /// Unitary whose k-th column is the eigenvector of `energies()[k]`.
    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn ground_energy(&self) -> f64 {
        self.energies[0]
    }

    pub fn max_energy(&self) -> f64 {
        self.energies[self.energies.len() - 1]
    }

    /// `V diag(E) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let mut scaled = self.vectors.clone();
        for (k, &e) in self.energies.iter().enumerate() {
            scaled.column_mut(k).scale_mut(e);
        }
        scaled * self.vectors.adjoint()
    }
}

/// Eigendecomposition of a Hermitian matrix, energies ascending.
pub fn eigh(h: &HermitianMatrix) -> Spectrum {
    let d = h.dim();
    let eig = h.as_matrix().clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let energies: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut vectors = ComplexMatrix::zeros(d, d);
    for (col, &src) in order.iter().enumerate() {
        vectors.set_column(col, &eig.eigenvectors.column(src));
    }
    Spectrum {
        energies: energies.into(),
        vectors,
    }
}

/// Stationary state given by its populations in the energy basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    populations: Vec<f64>,
}

impl DensityMatrix {
    pub fn new(populations: Vec<f64>) -> Result<Self> {
        if populations.is_empty() {
            return Err(Error::InvalidPopulations("empty".into()));
        }
        if let Some(p) = populations.iter().find(|p| !(**p >= 0.0) || !p.is_finite()) {
            return Err(Error::InvalidPopulations(format!("entry {p} is not >= 0")));
        }
        let total: f64 = populations.iter().sum();
        if (total - 1.0).abs() > POPULATION_TOL {
            return Err(Error::InvalidPopulations(format!("sum is {total}")));
        }
        Ok(Self { populations })
    }

    /// Maximally mixed state `1/d`.
    pub fn uniform(dim: usize) -> Self {
        Self {
            populations: vec![1.0 / dim as f64; dim],
        }
    }

    /// Projector onto the `level`-th energy eigenstate.
    pub fn eigenstate(dim: usize, level: usize) -> Result<Self> {
        if level >= dim {
            return Err(Error::OutOfRange(format!("level {level} >= dim {dim}")));
        }
        let mut populations = vec![0.0; dim];
        populations[level] = 1.0;
        Ok(Self { populations })
    }

    pub fn dim(&self) -> usize {
        self.populations.len()
    }

    pub fn populations(&self) -> &[f64] {
        &self.populations
    }

    /// Dense matrix `V diag(p) V†` in the lab basis of `s`.
    pub fn to_lab(&self, s: &Spectrum) -> Result<ComplexMatrix> {
        if s.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: s.dim(),
                right: self.dim(),
            });
        }
        let mut scaled = s.vectors().clone();
        for (k, &p) in self.populations.iter().enumerate() {
            scaled.column_mut(k).scale_mut(p);
        }
        Ok(scaled * s.vectors().adjoint())
    }
}

/// Gibbs populations `e^{-β(E_k - E_0)} / Σ_m e^{-β(E_m - E_0)}`.
pub fn gibbs(s: &Spectrum, beta: f64) -> Result<DensityMatrix> {
    if !(beta >= 0.0) || !beta.is_finite() {
        return Err(Error::InvalidBeta(beta));
    }
    let e0 = s.ground_energy();
    let weights: Vec<f64> = s
        .energies()
        .iter()
        .map(|&e| (-beta * (e - e0)).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    Ok(DensityMatrix {
        populations: weights.into_iter().map(|w| w / z).collect(),
    })
}

/// Operator matrix elements `O_jk = ⟨E_j|O|E_k⟩` together with the energies
/// of the basis they refer to.
#[derive(Debug, Clone)]
pub struct EnergyBasisOperator {
    elements: ComplexMatrix,
    energies: Arc<[f64]>,
}

impl EnergyBasisOperator {
    /// Wraps elements that are already expressed in the eigenbasis of `s`.
    pub fn from_elements(elements: ComplexMatrix, s: &Spectrum) -> Result<Self> {
        check_square(&elements)?;
        check_finite(&elements)?;
        if elements.nrows() != s.dim() {
            return Err(Error::DimensionMismatch {
                left: elements.nrows(),
                right: s.dim(),
            });
        }
        Ok(Self {
            elements,
            energies: s.shared_energies(),
        })
    }

    pub fn dim(&self) -> usize {
        self.elements.nrows()
    }

    pub fn elements(&self) -> &ComplexMatrix {
        &self.elements
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn hs_norm(&self) -> f64 {
        self.elements.norm()
    }

    pub fn hs_norm_squared(&self) -> f64 {
        self.elements.norm_squared()
    }

    pub fn is_hermitian(&self) -> bool {
        let scale = self
            .elements
            .iter()
            .fold(0.0_f64, |acc, z| acc.max(z.norm()));
        symmetry_violation(&self.elements) <= HERMITIAN_RTOL * scale.max(f64::MIN_POSITIVE)
    }

    /// Back to the lab basis: `V O V†`.
    pub fn to_lab(&self, s: &Spectrum) -> ComplexMatrix {
        s.vectors() * &self.elements * s.vectors().adjoint()
    }
}

/// `V† O V`: matrix elements of `o` in the eigenbasis of `s`.
pub fn to_energy_basis(o: &ComplexMatrix, s: &Spectrum) -> Result<EnergyBasisOperator> {
    check_square(o)?;
    check_finite(o)?;
    if o.nrows() != s.dim() {
        return Err(Error::DimensionMismatch {
            left: o.nrows(),
            right: s.dim(),
        });
    }
    let elements = s.vectors().adjoint() * o * s.vectors();
    Ok(EnergyBasisOperator {
        elements,
        energies: s.shared_energies(),
    })
}

/// Heisenberg-picture operator `U_t† O U_t` with `U_t = e^{-iHt}`:
/// `(O_t)_jk = e^{iΔ_jk t} O_jk`, `Δ_jk = E_j - E_k`.
pub fn evolve_heisenberg(oe: &EnergyBasisOperator, t: f64) -> EnergyBasisOperator {
    let e = &oe.energies;
    let d = oe.dim();
    let elements = ComplexMatrix::from_fn(d, d, |j, k| {
        oe.elements[(j, k)] * C64::from_polar(1.0, (e[j] - e[k]) * t)
    });
    EnergyBasisOperator {
        elements,
        energies: Arc::clone(&oe.energies),
    }
}

/// Hilbert–Schmidt inner product `Tr(A† B)`.
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<C64> {
    check_same_dim(a, b)?;
    Ok(a.dotc(b))
}

pub fn hs_norm(a: &ComplexMatrix) -> f64 {
    a.norm()
}

/// Normalized Liouville-space vector of `a`, row-major.
pub fn vectorize(a: &ComplexMatrix) -> Result<Vec<C64>> {
    let norm = a.norm();
    if norm == 0.0 {
        return Err(Error::ZeroOperator);
    }
    let (rows, cols) = a.shape();
    let mut out = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            out.push(a[(i, j)] / norm);
        }
    }
    Ok(out)
}

/// Liouvillian `i(H ⊗ 1 - 1 ⊗ Hᵀ)` acting on row-major vectorized operators.
pub fn build_liouvillian(h: &HermitianMatrix) -> ComplexMatrix {
    let d = h.dim();
    let hm = h.as_matrix();
    let id = ComplexMatrix::identity(d, d);
    let generator = hm.kronecker(&id) - id.kronecker(&hm.transpose());
    generator * C64::new(0.0, 1.0)
}

pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_same_dim(a, b)?;
    Ok(a * b - b * a)
}

pub fn anticommutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_same_dim(a, b)?;
    Ok(a * b + b * a)
}

/// Expectation value `Tr(ρ A)` for a stationary state.
pub fn expectation(rho: &DensityMatrix, s: &Spectrum, a: &ComplexMatrix) -> Result<C64> {
    let ae = to_energy_basis(a, s)?;
    Ok(rho
        .populations()
        .iter()
        .enumerate()
        .map(|(k, &p)| ae.elements[(k, k)] * p)
        .sum())
}

/// Pauli matrices and the 2×2 identity.
pub mod pauli {
    use super::{ComplexMatrix, C64};

    fn m(a: [[C64; 2]; 2]) -> ComplexMatrix {
        ComplexMatrix::from_fn(2, 2, |i, j| a[i][j])
    }

    const O: C64 = C64::new(0.0, 0.0);
    const I: C64 = C64::new(1.0, 0.0);
    const J: C64 = C64::new(0.0, 1.0);

    pub fn identity() -> ComplexMatrix {
        m([[I, O], [O, I]])
    }

    pub fn sigma_x() -> ComplexMatrix {
        m([[O, I], [I, O]])
    }

    pub fn sigma_y() -> ComplexMatrix {
        m([[O, -J], [J, O]])
    }

    pub fn sigma_z() -> ComplexMatrix {
        m([[I, O], [O, -I]])
    }
}

#[cfg(test)]
mod tests {
    use super::pauli::*;
    use super::*;
    use crate::testutil::{random_complex, random_hermitian};

    fn herm(m: ComplexMatrix) -> HermitianMatrix {
        HermitianMatrix::new(m).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn eigh_diagonal_and_sigma_x() {
        let s = eigh(&HermitianMatrix::from_diagonal(&[1.0, -1.0]));
        assert_eq!(s.energies(), &[-1.0, 1.0]);

        let s = eigh(&herm(sigma_x()));
        assert!(close(s.energies()[0], -1.0, 1e-14));
        assert!(close(s.energies()[1], 1.0, 1e-14));
        let v0 = s.vectors().column(0);
        // (1, -1)/√2 up to a phase
        let ratio = v0[1] / v0[0];
        assert!((ratio + C64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(close(v0[0].norm(), std::f64::consts::FRAC_1_SQRT_2, 1e-12));
    }

    #[test]
    fn eigh_round_trip_and_unitarity() {
        let mut rng = crate::testutil::rng(11);
        for d in [1, 2, 5, 17, 64, 256] {
            let h = random_hermitian(d, &mut rng);
            let s = eigh(&h);
            assert!(s.energies().windows(2).all(|w| w[0] <= w[1]));
            let residual = (s.reconstruct() - h.as_matrix()).norm();
            assert!(residual <= 1e-10 * h.norm(), "d={d} residual {residual:e}");
            let v = s.vectors();
            let unit = (v.adjoint() * v - ComplexMatrix::identity(d, d)).norm();
            assert!(unit < 1e-10, "d={d} unitarity {unit:e}");
        }
    }

    #[test]
    fn non_hermitian_is_rejected_with_magnitude() {
        let mut m = sigma_x();
        m[(0, 1)] = C64::new(1.5, 0.0);
        match HermitianMatrix::new(m) {
            Err(Error::NotHermitian { violation }) => assert!(close(violation, 0.5, 1e-15)),
            other => panic!("unexpected {other:?}"),
        }
        let tiny = sigma_x()
            + ComplexMatrix::from_fn(2, 2, |i, j| {
                if (i, j) == (0, 1) {
                    C64::new(1e-14, 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            });
        assert!(HermitianMatrix::new(tiny).is_ok());
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            HermitianMatrix::new(rect),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn energy_basis_examples() {
        let mut rng = crate::testutil::rng(3);
        let h = random_hermitian(4, &mut rng);
        let s = eigh(&h);

        let he = to_energy_basis(h.as_matrix(), &s).unwrap();
        for j in 0..4 {
            for k in 0..4 {
                let expect = if j == k { s.energies()[j] } else { 0.0 };
                assert!((he.elements()[(j, k)] - C64::new(expect, 0.0)).norm() < 1e-12);
            }
        }

        let id = to_energy_basis(&ComplexMatrix::identity(4, 4), &s).unwrap();
        assert!((id.elements() - ComplexMatrix::identity(4, 4)).norm() < 1e-12);

        let o = random_complex(4, &mut rng);
        let oe = to_energy_basis(&o, &s).unwrap();
        assert!(close(oe.hs_norm(), o.norm(), 1e-12 * o.norm()));
        assert!((oe.to_lab(&s) - &o).norm() < 1e-12 * o.norm());

        let sz = eigh(&herm(sigma_z()));
        let xe = to_energy_basis(&sigma_x(), &sz).unwrap();
        assert!(close(xe.elements()[(0, 1)].norm(), 1.0, 1e-15));
        assert!(close(xe.elements()[(1, 0)].norm(), 1.0, 1e-15));
        assert!(xe.elements()[(0, 0)].norm() < 1e-15);

        assert!(matches!(
            to_energy_basis(&ComplexMatrix::identity(3, 3), &sz),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn heisenberg_evolution_examples() {
        let s = eigh(&herm(sigma_z()));
        let xe = to_energy_basis(&sigma_x(), &s).unwrap();
        let same = evolve_heisenberg(&xe, 0.0);
        assert_eq!(same.elements(), xe.elements());

        let half = evolve_heisenberg(&xe, std::f64::consts::FRAC_PI_2);
        assert!((half.to_lab(&s) + sigma_x()).norm() < 1e-14);

        let ze = to_energy_basis(&sigma_z(), &s).unwrap();
        for t in [0.3, 7.0, -2.0] {
            assert!((evolve_heisenberg(&ze, t).elements() - ze.elements()).norm() < 1e-15);
        }
    }

    #[test]
    fn heisenberg_matches_matrix_exponential() {
        let mut rng = crate::testutil::rng(5);
        let h = random_hermitian(6, &mut rng);
        let s = eigh(&h);
        let o = random_complex(6, &mut rng);
        let oe = to_energy_basis(&o, &s).unwrap();
        let t = 0.77;
        let u = (h.as_matrix() * C64::new(0.0, -t)).exp();
        let dense = u.adjoint() * &o * &u;
        let spectral = evolve_heisenberg(&oe, t).to_lab(&s);
        assert!((dense - spectral).norm() < 1e-11);
    }

    #[test]
    fn hs_products() {
        assert_eq!(
            hs_inner(&sigma_x(), &sigma_x()).unwrap(),
            C64::new(2.0, 0.0)
        );
        assert_eq!(
            hs_inner(&sigma_x(), &sigma_y()).unwrap(),
            C64::new(0.0, 0.0)
        );
        assert_eq!(
            hs_inner(&identity(), &sigma_z()).unwrap(),
            C64::new(0.0, 0.0)
        );
        let mut rng = crate::testutil::rng(8);
        let a = random_complex(3, &mut rng);
        let b = random_complex(3, &mut rng);
        let ab = hs_inner(&a, &b).unwrap();
        let ba = hs_inner(&b, &a).unwrap();
        assert!((ab - ba.conj()).norm() < 1e-14);
        assert!(close(
            hs_inner(&a, &a).unwrap().re.sqrt(),
            hs_norm(&a),
            1e-14
        ));
        assert!(hs_inner(&a, &ComplexMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn vectorize_examples() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let v = vectorize(&identity()).unwrap();
        let expect = [r, 0.0, 0.0, r];
        for (z, e) in v.iter().zip(expect) {
            assert!((z - C64::new(e, 0.0)).norm() < 1e-15);
        }
        let v = vectorize(&sigma_x()).unwrap();
        let expect = [0.0, r, r, 0.0];
        for (z, e) in v.iter().zip(expect) {
            assert!((z - C64::new(e, 0.0)).norm() < 1e-15);
        }
        let mut rng = crate::testutil::rng(1);
        let a = random_complex(5, &mut rng);
        let n: f64 = vectorize(&a).unwrap().iter().map(|z| z.norm_sqr()).sum();
        assert!(close(n, 1.0, 1e-12));
        assert_eq!(
            vectorize(&ComplexMatrix::zeros(2, 2)),
            Err(Error::ZeroOperator)
        );
    }

    fn sorted_imag_eigs(l: &ComplexMatrix) -> Vec<f64> {
        // -i𝕃 is Hermitian with eigenvalues Δ_jk
        let herm_gen = HermitianMatrix::new(l * C64::new(0.0, -1.0)).unwrap();
        eigh(&herm_gen).energies().to_vec()
    }

    #[test]
    fn liouvillian_spectrum_is_gap_set() {
        let l = build_liouvillian(&herm(sigma_z()));
        let eigs = sorted_imag_eigs(&l);
        for (got, want) in eigs.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
            assert!(close(*got, want, 1e-12));
        }

        let l = build_liouvillian(&HermitianMatrix::from_diagonal(&[0.0, 1.0, 3.0]));
        let eigs = sorted_imag_eigs(&l);
        let want = [-3.0, -2.0, -1.0, 0.0, 0.0, 0.0, 1.0, 2.0, 3.0];
        for (got, want) in eigs.iter().zip(want) {
            assert!(close(*got, want, 1e-12));
        }

        let mut rng = crate::testutil::rng(21);
        let h = random_hermitian(4, &mut rng);
        let s = eigh(&h);
        let mut gaps: Vec<f64> = Vec::new();
        for &ej in s.energies() {
            for &ek in s.energies() {
                gaps.push(ej - ek);
            }
        }
        gaps.sort_by(f64::total_cmp);
        let l = build_liouvillian(&h);
        assert!((&l + l.adjoint()).norm() < 1e-13, "anti-Hermitian");
        for (got, want) in sorted_imag_eigs(&l).iter().zip(&gaps) {
            assert!(close(*got, *want, 1e-10));
        }
    }

    #[test]
    fn liouvillian_generates_commutator() {
        let mut rng = crate::testutil::rng(77);
        for trial in 0..50 {
            let d = 1 + trial % 8;
            let h = random_hermitian(d, &mut rng);
            let o = random_complex(d, &mut rng);
            let l = build_liouvillian(&h);
            let vo = nalgebra::DVector::from_vec(vectorize(&o).unwrap());
            let lhs = &l * vo;
            let comm = commutator(h.as_matrix(), &o).unwrap() * C64::new(0.0, 1.0);
            // vectorize normalizes by ‖O‖, so compare against i[H,O]/‖O‖
            let norm = o.norm();
            let mut worst = 0.0_f64;
            for i in 0..d {
                for j in 0..d {
                    worst = worst.max((lhs[i * d + j] - comm[(i, j)] / norm).norm());
                }
            }
            assert!(worst < 1e-10, "d={d} worst={worst:e}");
        }
    }

    #[test]
    fn gibbs_examples() {
        let mut rng = crate::testutil::rng(4);
        let s = eigh(&random_hermitian(5, &mut rng));
        let p = gibbs(&s, 0.0).unwrap();
        assert!(p.populations().iter().all(|&x| close(x, 0.2, 1e-15)));

        let p = gibbs(&s, 1000.0).unwrap();
        assert!(close(p.populations()[0], 1.0, 1e-12));
        assert!(p.populations()[1..].iter().all(|&x| x < 1e-12));

        let sz = eigh(&herm(sigma_z()));
        let p = gibbs(&sz, 10.0).unwrap();
        assert!(close(
            p.populations()[0],
            1.0 / (1.0 + (-20.0_f64).exp()),
            1e-15
        ));

        assert_eq!(gibbs(&s, -1.0), Err(Error::InvalidBeta(-1.0)));
        assert!(gibbs(&s, f64::NAN).is_err());
    }

    #[test]
    fn gibbs_is_shift_invariant() {
        let base = [-1.3, 0.2, 0.25, 4.0];
        let a = gibbs(&Spectrum::from_energies(&base).unwrap(), 2.5).unwrap();
        let shifted: Vec<f64> = base.iter().map(|e| e + 123.456).collect();
        let b = gibbs(&Spectrum::from_energies(&shifted).unwrap(), 2.5).unwrap();
        for (x, y) in a.populations().iter().zip(b.populations()) {
            assert!(close(*x, *y, 1e-15));
        }
    }

    #[test]
    fn commutator_examples() {
        let c = commutator(&sigma_z(), &sigma_x()).unwrap();
        assert!((c - sigma_y() * C64::new(0.0, 2.0)).norm() < 1e-15);
        let a = anticommutator(&sigma_x(), &sigma_x()).unwrap();
        assert!((a - identity() * C64::new(2.0, 0.0)).norm() < 1e-15);
        let mut rng = crate::testutil::rng(9);
        let h = random_hermitian(4, &mut rng).into_inner();
        let g = random_hermitian(4, &mut rng).into_inner();
        assert!(commutator(&h, &h).unwrap().norm() < 1e-13);
        let c = commutator(&h, &g).unwrap();
        assert!((c.adjoint() + &c).norm() < 1e-13);
        assert!(commutator(&h, &identity()).is_err());
    }

    #[test]
    fn density_matrix_validation() {
        assert!(DensityMatrix::new(vec![0.5, 0.5]).is_ok());
        assert!(DensityMatrix::new(vec![0.5, 0.6]).is_err());
        assert!(DensityMatrix::new(vec![1.5, -0.5]).is_err());
        assert!(DensityMatrix::new(vec![]).is_err());
        assert!(DensityMatrix::eigenstate(3, 3).is_err());
    }
}
