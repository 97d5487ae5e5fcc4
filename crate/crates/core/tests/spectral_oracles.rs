//! Spectral pipeline against dense matrix-exponential evolution.

mod common;

use common::*;
use nalgebra::DVector;
use opflow::autocorr::autocorr_curve;
use opflow::gapdist::overlap_distribution;
use opflow::grid::TimeGrid;
use opflow::linops::{build_liouvillian, eigh, gibbs, to_energy_basis, vectorize, C64};
use opflow::response::{susceptibility_curve, ThermalState};
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn overlap_matches_dense(seed in any::<u64>(), d in 2usize..=12, t in 0.0f64..6.0) {
        let mut r = rng(seed);
        let h = random_hermitian(d, 2.0, &mut r);
        let o = random_complex(d, &mut r);
        let oe = to_energy_basis(&o, &eigh(&h)).unwrap();
        let spectral = overlap_distribution(&oe).unwrap().char_function(t);
        let dense = dense_overlap(&h, &o, t);
        prop_assert!((spectral - dense).norm() < 1e-10, "{spectral} vs {dense}");
    }

    #[test]
    fn autocorrelation_matches_dense(
        seed in any::<u64>(),
        d in 2usize..=10,
        beta in prop::sample::select(vec![0.0, 0.3, 1.0, 10.0]),
    ) {
        let mut r = rng(seed);
        let h = random_hermitian(d, 1.0, &mut r);
        let o = random_complex(d, &mut r);
        let s = eigh(&h);
        let oe = to_energy_basis(&o, &s).unwrap();
        let rho = gibbs(&s, beta).unwrap();
        let grid = TimeGrid::uniform(0.0, 4.0, 9).unwrap();
        let curve = autocorr_curve(&oe, &rho, &grid).unwrap();
        for (&t, &c) in grid.points().iter().zip(&curve.values) {
            let dense = dense_autocorr(&h, &o, beta, t);
            prop_assert!((c - dense).norm() < 1e-10 * curve.c0.max(1.0), "t={t}: {c} vs {dense}");
        }
    }

    #[test]
    fn susceptibility_matches_dense(seed in any::<u64>(), d in 2usize..=8, beta in 0.05f64..8.0) {
        let mut r = rng(seed);
        let h = random_hermitian(d, 1.0, &mut r);
        let a = random_hermitian(d, 1.0, &mut r);
        let v = random_hermitian(d, 1.0, &mut r);
        let state = ThermalState::new(&h, beta).unwrap();
        let grid = TimeGrid::uniform(0.0, 5.0, 7).unwrap();
        let chi = susceptibility_curve(&a, &v, &state, &grid).unwrap();
        for (&t, &x) in grid.points().iter().zip(&chi.values) {
            let dense = dense_susceptibility(&h, &a, &v, beta, t);
            prop_assert!(dense.im.abs() < 1e-10);
            prop_assert!((x - dense.re).abs() < 1e-10, "t={t}: {x} vs {}", dense.re);
        }
    }

    #[test]
    fn liouvillian_propagates_vectorized_operator(seed in any::<u64>(), d in 1usize..=5, t in 0.0f64..3.0) {
        let mut r = rng(seed);
        let h = random_hermitian(d, 1.0, &mut r);
        let o = random_complex(d, &mut r);
        let l = build_liouvillian(&h);
        let evolved = (l * C64::new(t, 0.0)).exp() * DVector::from_vec(vectorize(&o).unwrap());
        let expected = vectorize(&dense_heisenberg(&h, &o, t)).unwrap();
        for (x, y) in evolved.iter().zip(&expected) {
            prop_assert!((x - y).norm() < 1e-10);
        }
    }
}
