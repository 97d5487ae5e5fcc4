//! Validity of every floor and ceiling on random instances.

mod common;

use common::*;
use opflow::autocorr::{autocorr_curve, AutocorrScales};
use opflow::ensembles::{sample_goe, GoeSpec};
use opflow::gapdist::overlap_distribution;
use opflow::grid::TimeGrid;
use opflow::linops::{eigh, gibbs, to_energy_basis};
use opflow::qfi::{qfi_ceiling, qfi_integral, qfi_spectral};
use opflow::qsl::{
    ml_hamiltonian_min_time, ml_min_time, ml_overlap_floor, mt_min_time, mt_overlap_floor,
    trig_ml_min_time, trig_ml_overlap_floor, trig_mt_min_time, trig_mt_overlap_floor,
    QslVelocities,
};
use opflow::response::{
    bogoliubov_ceiling, heisenberg_ceiling, qsl_ceiling, susceptibility_curve, BogoliubovVariant,
    ThermalState,
};
use opflow::states::{
    coherent_gibbs, ml_state_min_time, mt_state_min_time, state_overlap, variance_relation_check,
    PureState,
};
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn autocorrelation_bounds_hold(
        seed in any::<u64>(),
        d in 2usize..=12,
        beta in prop::sample::select(vec![0.0, 0.5, 1.0, 10.0]),
        scale in 0.1f64..10.0,
    ) {
        let mut r = rng(seed);
        let h = random_hermitian(d, scale, &mut r);
        let o = random_hermitian(d, 1.0, &mut r);
        let s = eigh(&h);
        let oe = to_energy_basis(o.as_matrix(), &s).unwrap();
        let rho = gibbs(&s, beta).unwrap();
        let grid = TimeGrid::uniform(0.0, 3.0 / scale, 120).unwrap();
        let curve = autocorr_curve(&oe, &rho, &grid).unwrap().normalized().unwrap();
        let sc = AutocorrScales::of(&oe, &rho).unwrap().normalized().unwrap();
        prop_assert!(sc.anchored >= sc.liouvillian_speed - TOL);
        for (&t, c) in grid.points().iter().zip(&curve.values) {
            prop_assert!(c.re >= sc.mt_floor(t).unwrap() - TOL);
            prop_assert!(c.re >= sc.ml_floor(t).unwrap() - TOL);
            prop_assert!(c.re >= sc.liouvillian_ml_floor(t).unwrap() - TOL);
            prop_assert!(c.im.abs() <= sc.im_ceiling(t).unwrap() + TOL);
        }
    }

    #[test]
    fn overlap_floors_and_min_times(seed in any::<u64>(), d in 2usize..=10, t in 0.0f64..4.0) {
        let mut r = rng(seed);
        let h = random_hermitian(d, 1.0, &mut r);
        let o = random_complex(d, &mut r);
        let oe = to_energy_basis(&o, &eigh(&h)).unwrap();
        let dist = overlap_distribution(&oe).unwrap();
        let v = QslVelocities::from_distribution(&dist).unwrap();
        let overlap = dist.char_function(t).re;
        let ml = ml_overlap_floor(&v, t).unwrap();
        let mt = mt_overlap_floor(&v, t).unwrap();
        prop_assert!(overlap >= ml - TOL && overlap >= mt - TOL);
        prop_assert!(trig_ml_overlap_floor(&v, t).unwrap() <= ml);
        prop_assert!(trig_mt_overlap_floor(&v, t).unwrap() <= mt);
        // the realized overlap is reached no earlier than any speed limit allows
        if overlap < 1.0 - 1e-12 {
            prop_assert!(t >= ml_min_time(&v, overlap).unwrap() * (1.0 - 1e-9));
            prop_assert!(t >= mt_min_time(&v, overlap).unwrap() * (1.0 - 1e-9));
            prop_assert!(ml_hamiltonian_min_time(&oe, overlap).unwrap() <= ml_min_time(&v, overlap).unwrap() * (1.0 + 1e-9));
            prop_assert!(trig_ml_min_time(&v, overlap).unwrap() < ml_min_time(&v, overlap).unwrap());
            prop_assert!(trig_mt_min_time(&v, overlap).unwrap() < mt_min_time(&v, overlap).unwrap());
        }
    }

    #[test]
    fn susceptibility_ceilings_hold(seed in any::<u64>(), d in 2usize..=8, beta in 0.05f64..20.0) {
        let mut r = rng(seed);
        let h = random_hermitian(d, 1.0, &mut r);
        let a = random_hermitian(d, 1.0, &mut r);
        let v = random_hermitian(d, 1.0, &mut r);
        let state = ThermalState::new(&h, beta).unwrap();
        let grid = TimeGrid::uniform(0.0, 10.0, 150).unwrap();
        let heis = heisenberg_ceiling(&a, &v, &state).unwrap();
        let bog = bogoliubov_ceiling(&a, &v, &state, BogoliubovVariant::Derived).unwrap();
        let chi_av = susceptibility_curve(&a, &v, &state, &grid).unwrap();
        let chi_vv = susceptibility_curve(&v, &v, &state, &grid).unwrap();
        for ((&t, &x), &y) in grid.points().iter().zip(&chi_av.values).zip(&chi_vv.values) {
            prop_assert!(x.abs() <= heis + TOL);
            prop_assert!(x.abs() <= bog + TOL);
            prop_assert!(y.abs() <= qsl_ceiling(&v, &state, t).unwrap() + TOL);
        }
    }

    #[test]
    fn state_speed_limits(seed in any::<u64>(), d in 2usize..=10, beta in 0.0f64..5.0, t in 0.0f64..3.0) {
        let mut r = rng(seed);
        let h = random_hermitian(d, 1.0, &mut r);
        let s = eigh(&h);
        let psi = coherent_gibbs(&s, beta).unwrap();
        let (liouvillian, h_var) = variance_relation_check(&psi, &s).unwrap();
        prop_assert!((liouvillian - 2.0 * h_var).abs() <= 1e-10 * h_var.max(1.0));
        let angle = state_overlap(&psi, &s, t).unwrap().norm().min(1.0).acos();
        if angle > 1e-6 {
            prop_assert!(t >= mt_state_min_time(&psi, &s, angle).unwrap() * (1.0 - 1e-9));
            prop_assert!(t >= ml_state_min_time(&psi, &s, angle).unwrap() * (1.0 - 1e-9));
        }
    }
}

proptest! {
    #![proptest_config(config(16))]

    #[test]
    fn qfi_routes_agree_below_ceiling(seed in any::<u64>(), d in 2usize..=6, beta in 0.2f64..5.0) {
        let mut r = rng(seed);
        let h = random_hermitian(d, 1.0, &mut r);
        let o = random_hermitian(d, 1.0, &mut r);
        let s = eigh(&h);
        let spectral = qfi_spectral(&s, beta, &o).unwrap().value;
        let integral = qfi_integral(&s, beta, &o).unwrap().value;
        prop_assert!((integral - spectral).abs() <= 1e-4 * spectral.max(1e-12));
        prop_assert!(spectral <= qfi_ceiling(&o, &s, beta).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn goe_sampling_is_deterministic(seed in any::<u64>(), d in 2usize..=30) {
        let spec = GoeSpec::new(d, 1.0, seed).unwrap();
        prop_assert_eq!(sample_goe(&spec), sample_goe(&spec));
    }

    #[test]
    fn pure_state_normalization(amps in prop::collection::vec(-1.0f64..1.0, 2..8)) {
        prop_assume!(amps.iter().any(|a| a.abs() > 1e-3));
        let psi = PureState::normalized_real(&amps).unwrap();
        let n: f64 = psi.amplitudes().iter().map(|c| c.norm_sqr()).sum();
        prop_assert!((n - 1.0).abs() < 1e-12);
    }
}
