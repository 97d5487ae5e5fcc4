//! Reproducible scenario runs: configuration in, CSV curves and a JSON
//! summary of bound checks out.

pub mod config;
pub mod output;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

pub use config::{ConfigError, ScenarioConfig, ScenarioKind};
pub use output::{format_value, CheckSummary, CurveTable, RunSummary};

use crate::autocorr::{autocorr_curve, AutocorrScales, CorrelationCurve, QubitParams};
use crate::ensembles::sample_goe_pair;
use crate::grid::TimeGrid;
use crate::linops::{eigh, gibbs, to_energy_basis, ComplexMatrix, HermitianMatrix};
use crate::qfi::{
    cramer_rao_floor, qfi_ceiling, qfi_integral, qfi_spectral, INTEGRAL_CALIBRATION,
    KERNEL_TAIL_TOLERANCE,
};
use crate::qsl::alpha_constant;
use crate::response::{
    bogoliubov_ceiling, crossover_times, heisenberg_ceiling, kubo_response, qsl_ceiling,
    susceptibility_curve, BogoliubovVariant, ThermalState,
};
use crate::states::goe_fidelity_experiment;

/// Absolute tolerance (relative to `C(0)`) for bound checks on curves.
pub const BOUND_TOLERANCE: f64 = 1e-9;

/// Agreement required between the two QFI routes, relative to the spectral value.
pub const QFI_ROUTE_TOLERANCE: f64 = 1e-6;

/// Agreement required between the two-level closed form and the spectral pipeline.
pub const ORACLE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("config error: {0}")]
    Config(#[from] ConfigError),
    #[error("invalid parameters: {0}")]
    Numeric(#[from] crate::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl ScenarioError {
    /// Process exit code: 1 for configuration problems, 3 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) | Self::Numeric(_) => 1,
            Self::Io { .. } => 3,
        }
    }
}

/// Everything a run produces, before anything is written.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioOutput {
    pub tables: Vec<CurveTable>,
    pub summary: RunSummary,
}

/// Computes a scenario in memory.
pub fn execute(config: &ScenarioConfig) -> Result<ScenarioOutput, ScenarioError> {
    let start = Instant::now();
    let mut crossovers = BTreeMap::new();
    let (tables, checks) = match config.kind {
        ScenarioKind::QubitAutocorr => qubit_autocorr(config, &mut crossovers)?,
        ScenarioKind::GoeAutocorr => goe_autocorr(config, &mut crossovers)?,
        ScenarioKind::GoeFidelity => goe_fidelity(config, &mut crossovers)?,
        ScenarioKind::ResponseQubit => response_qubit(config, &mut crossovers)?,
        ScenarioKind::QfiSweep => qfi_sweep(config)?,
        ScenarioKind::CustomMatrix => custom_matrix(config, &mut crossovers)?,
    };
    let violations = checks
        .iter()
        .filter(|c| c.enforced)
        .map(|c| c.violations)
        .sum();
    let summary = RunSummary {
        scenario: config.kind.name().to_string(),
        checks,
        crossover_times: crossovers,
        violations,
        wall_time_s: start.elapsed().as_secs_f64(),
        seeds: config.seeds(),
        files: tables.iter().map(|t| t.file_name()).collect(),
    };
    Ok(ScenarioOutput { tables, summary })
}

/// Computes a scenario and writes its CSV files and `summary.json` into
/// `out_dir` (created if missing). Nothing is written if the computation fails.
pub fn run(config: &ScenarioConfig, out_dir: &Path) -> Result<RunSummary, ScenarioError> {
    let output = execute(config)?;
    let io_err = |path: &Path| {
        let path = path.to_path_buf();
        move |source| ScenarioError::Io { path, source }
    };
    fs::create_dir_all(out_dir).map_err(io_err(out_dir))?;
    for table in &output.tables {
        table
            .write(out_dir)
            .map_err(io_err(&out_dir.join(table.file_name())))?;
    }
    output
        .summary
        .write(out_dir)
        .map_err(io_err(&out_dir.join("summary.json")))?;
    Ok(output.summary)
}

/// `(name, description)` of every scenario.
pub fn list_scenarios() -> Vec<(&'static str, &'static str)> {
    ScenarioKind::ALL
        .iter()
        .map(|k| (k.name(), k.description()))
        .collect()
}

type Tables = (Vec<CurveTable>, Vec<CheckSummary>);

fn base_table(config: &ScenarioConfig, columns: &[&str]) -> CurveTable {
    let mut t = CurveTable::new(config.kind.name(), columns);
    for (k, v) in config.echo() {
        t.meta(&k, v);
    }
    t.meta("alpha", format_value(alpha_constant()));
    t
}

const AUTOCORR_COLUMNS: [&str; 7] = [
    "t",
    "re_C",
    "im_C",
    "mt_floor",
    "ml_floor",
    "im_ceiling",
    "ml_liouvillian_floor",
];

/// Normalized autocorrelation table with its floors and checks.
fn autocorr_table(
    config: &ScenarioConfig,
    curve: &CorrelationCurve,
    raw: &AutocorrScales,
    extra_columns: &[&str],
    mut extra: impl FnMut(f64) -> Result<Vec<f64>, ScenarioError>,
    crossovers: &mut BTreeMap<String, f64>,
) -> Result<(CurveTable, Vec<CheckSummary>), ScenarioError> {
    let scales = raw.normalized()?;
    let curve = curve.normalized()?;
    let mut columns = AUTOCORR_COLUMNS.to_vec();
    columns.extend_from_slice(extra_columns);
    let mut table = base_table(config, &columns);
    table.meta("c0", format_value(raw.c0));
    table.meta("normalized", "true");
    table.meta("velocity_moment", format_value(scales.velocity_moment));
    table.meta("anchored", format_value(scales.anchored));
    table.meta("liouvillian_speed", format_value(scales.liouvillian_speed));
    match scales.crossover() {
        Ok(tc) => {
            table.meta("tau_c", format_value(tc));
            crossovers.insert("tau_c".into(), tc);
        }
        Err(_) => table.meta("tau_c", "inf"),
    }

    let mut mt = Vec::new();
    let mut ml = Vec::new();
    let mut im = Vec::new();
    let mut mll = Vec::new();
    for (&t, c) in curve.grid.points().iter().zip(&curve.values) {
        let mut row = vec![
            t,
            c.re,
            c.im,
            scales.mt_floor(t)?,
            scales.ml_floor(t)?,
            scales.im_ceiling(t)?,
            scales.liouvillian_ml_floor(t)?,
        ];
        mt.push(c.re - row[3]);
        ml.push(c.re - row[4]);
        im.push(row[5] - c.im.abs());
        mll.push(c.re - row[6]);
        row.extend(extra(t)?);
        table.push(row);
    }
    let checks = vec![
        CheckSummary::from_margins("mt_floor", mt, BOUND_TOLERANCE, true),
        CheckSummary::from_margins("ml_floor", ml, BOUND_TOLERANCE, true),
        CheckSummary::from_margins("im_ceiling", im, BOUND_TOLERANCE, true),
        CheckSummary::from_margins("ml_liouvillian_floor", mll, BOUND_TOLERANCE, true),
    ];
    Ok((table, checks))
}

fn spectral_autocorr(
    h: &HermitianMatrix,
    o: &ComplexMatrix,
    beta: f64,
    grid: &TimeGrid,
) -> Result<(CorrelationCurve, AutocorrScales), ScenarioError> {
    let s = eigh(h);
    let oe = to_energy_basis(o, &s)?;
    let rho = gibbs(&s, beta)?;
    Ok((
        autocorr_curve(&oe, &rho, grid)?,
        AutocorrScales::of(&oe, &rho)?,
    ))
}

fn qubit_params(config: &ScenarioConfig) -> QubitParams {
    config.qubit.expect("resolved qubit block")
}

fn qubit_autocorr(
    config: &ScenarioConfig,
    crossovers: &mut BTreeMap<String, f64>,
) -> Result<Tables, ScenarioError> {
    let q = qubit_params(config);
    let (curve, raw) = spectral_autocorr(&q.hamiltonian(), &q.operator(), q.beta, &config.grid)?;
    let reference_column = |t| -> Result<Vec<f64>, ScenarioError> {
        let r = q.reference(t)?;
        Ok(vec![r.re, r.im])
    };
    let (mut table, mut checks) = autocorr_table(
        config,
        &curve,
        &raw,
        &["re_C_ref", "im_C_ref"],
        reference_column,
        crossovers,
    )?;
    let reference = q.reference(0.0)?;
    table.meta("r", format_value(q.r()));
    table.meta("mt_scale", format_value(reference.mt_scale));
    table.meta("ml_scale", format_value(reference.ml_scale));
    table.meta(
        "liouvillian_ml_scale",
        format_value(reference.liouvillian_ml_scale),
    );
    let mut deviation = Vec::with_capacity(table.rows.len());
    for row in &table.rows {
        deviation.push(ORACLE_TOLERANCE - (row[1] - row[7]).abs().max((row[2] - row[8]).abs()));
    }
    checks.push(CheckSummary::from_margins(
        "closed_form_deviation",
        deviation,
        0.0,
        true,
    ));
    Ok((vec![table], checks))
}

fn goe_autocorr(
    config: &ScenarioConfig,
    crossovers: &mut BTreeMap<String, f64>,
) -> Result<Tables, ScenarioError> {
    let g = config.goe.as_ref().expect("resolved goe block");
    let (h, o) = sample_goe_pair(&g.spec, g.seed2);
    let (curve, raw) = spectral_autocorr(&h, o.as_matrix(), g.beta, &config.grid)?;
    let (table, checks) =
        autocorr_table(config, &curve, &raw, &[], |_| Ok(Vec::new()), crossovers)?;
    Ok((vec![table], checks))
}

fn custom_matrix(
    config: &ScenarioConfig,
    crossovers: &mut BTreeMap<String, f64>,
) -> Result<Tables, ScenarioError> {
    let c = config.custom.as_ref().expect("resolved custom block");
    let (curve, raw) = spectral_autocorr(&c.hamiltonian, &c.operator, c.beta, &config.grid)?;
    let (table, checks) =
        autocorr_table(config, &curve, &raw, &[], |_| Ok(Vec::new()), crossovers)?;
    Ok((vec![table], checks))
}

fn goe_fidelity(
    config: &ScenarioConfig,
    crossovers: &mut BTreeMap<String, f64>,
) -> Result<Tables, ScenarioError> {
    let g = config.goe.as_ref().expect("resolved goe block");
    let ex = goe_fidelity_experiment(&g.spec, g.beta, &config.grid)?;
    let mut table = base_table(config, &["t", "fidelity", "ml_floor"]);
    table.meta("tau", format_value(ex.tau));
    table.meta(
        "mean_energy_above_ground",
        format_value(ex.mean_energy_above_ground),
    );
    crossovers.insert("tau".into(), ex.tau);
    let mut before = Vec::new();
    let mut all = Vec::new();
    for ((&t, &f), &floor) in config
        .grid
        .points()
        .iter()
        .zip(&ex.curve.values)
        .zip(&ex.ml_floor)
    {
        table.push(vec![t, f, floor]);
        all.push(f - floor);
        if t <= ex.tau {
            before.push(f - floor);
        }
    }
    let checks = vec![
        CheckSummary::from_margins("ml_floor_until_tau", before, BOUND_TOLERANCE, true),
        CheckSummary::from_margins("ml_floor_full_window", all, BOUND_TOLERANCE, false),
    ];
    Ok((vec![table], checks))
}

fn response_qubit(
    config: &ScenarioConfig,
    crossovers: &mut BTreeMap<String, f64>,
) -> Result<Tables, ScenarioError> {
    let q = qubit_params(config);
    let state = ThermalState::new(&q.hamiltonian(), q.beta)?;
    let v = HermitianMatrix::new(q.operator())?;
    let grid = &config.grid;
    let chi = susceptibility_curve(&v, &v, &state, grid)?.with_labels("sigma_x", "sigma_x");
    let heis = heisenberg_ceiling(&v, &v, &state)?;
    let bog = bogoliubov_ceiling(&v, &v, &state, config.variant)?;
    let times = crossover_times(&v, &v, &state)?;
    let step = if grid.first() == 0.0 && grid.uniform_step().is_some() {
        Some(kubo_response(&chi, &vec![1.0; grid.len()], config.lambda)?)
    } else {
        None
    };

    let mut columns = vec!["t", "chi", "heisenberg", "bogoliubov", "qsl_ceiling"];
    if step.is_some() {
        columns.push("kubo_step_response");
    }
    let mut table = base_table(config, &columns);
    table.meta(
        "bogoliubov_temperature",
        format_value(times.bogoliubov_temperature),
    );
    table.meta("tau_qsl", format_value(times.tau_qsl));
    table.meta("tau_h", format_value(times.tau_h));
    table.meta("tau_b_inverted", format_value(times.tau_b_inverted));
    table.meta("tau_b_derived", format_value(times.tau_b_derived));
    crossovers.insert("tau_h".into(), times.tau_h);
    crossovers.insert("tau_b_inverted".into(), times.tau_b_inverted);
    crossovers.insert("tau_b_derived".into(), times.tau_b_derived);

    let mut mh = Vec::new();
    let mut mb = Vec::new();
    let mut mq = Vec::new();
    for (i, (&t, &x)) in grid.points().iter().zip(&chi.values).enumerate() {
        let qsl = qsl_ceiling(&v, &state, t)?;
        let mut row = vec![t, x, heis, bog, qsl];
        if let Some(s) = &step {
            row.push(s[i]);
        }
        mh.push(heis - x.abs());
        mb.push(bog - x.abs());
        mq.push(qsl - x.abs());
        table.push(row);
    }
    let bog_name = match config.variant {
        BogoliubovVariant::Derived => "bogoliubov",
        BogoliubovVariant::InvertedRatio => "bogoliubov_inverted_ratio",
    };
    let checks = vec![
        CheckSummary::from_margins("heisenberg", mh, BOUND_TOLERANCE, true),
        CheckSummary::from_margins(
            bog_name,
            mb,
            BOUND_TOLERANCE,
            config.variant == BogoliubovVariant::Derived,
        ),
        CheckSummary::from_margins("qsl_ceiling", mq, BOUND_TOLERANCE, true),
    ];
    Ok((vec![table], checks))
}

fn qfi_sweep(config: &ScenarioConfig) -> Result<Tables, ScenarioError> {
    let q = qubit_params(config);
    let s = eigh(&q.hamiltonian());
    let o = HermitianMatrix::new(q.operator())?;
    let mut table = base_table(
        config,
        &[
            "beta",
            "qfi_spectral",
            "qfi_integral",
            "qfi_ceiling",
            "cramer_rao_floor",
        ],
    );
    table.meta("calibration", format_value(INTEGRAL_CALIBRATION));
    table.meta("kernel_tail_tolerance", format_value(KERNEL_TAIL_TOLERANCE));
    let rows = config
        .betas
        .par_iter()
        .map(|&beta| -> Result<Vec<f64>, crate::Error> {
            Ok(vec![
                beta,
                qfi_spectral(&s, beta, &o)?.value,
                qfi_integral(&s, beta, &o)?.value,
                qfi_ceiling(&o, &s, beta)?,
                cramer_rao_floor(&o, &s, beta, config.measurements)?,
            ])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut ceiling = Vec::new();
    let mut route = Vec::new();
    for row in rows {
        ceiling.push(row[3] - row[1]);
        route.push(QFI_ROUTE_TOLERANCE * row[1].max(1e-300) - (row[2] - row[1]).abs());
        table.push(row);
    }
    let checks = vec![
        CheckSummary::from_margins("qfi_ceiling", ceiling, BOUND_TOLERANCE, true),
        CheckSummary::from_margins("integral_route", route, 0.0, true),
    ];
    Ok((vec![table], checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(text: &str) -> ScenarioConfig {
        ScenarioConfig::from_text(text, &[]).unwrap()
    }

    #[test]
    fn qubit_autocorr_passes_with_reference_columns() {
        let c = config("[scenario]\nname = qubit_autocorr\n[time]\nn_points = 201\n");
        let out = execute(&c).unwrap();
        assert!(out.summary.passed(), "{:?}", out.summary.checks);
        let t = &out.tables[0];
        for col in [
            "t",
            "re_C",
            "im_C",
            "mt_floor",
            "ml_floor",
            "im_ceiling",
            "re_C_ref",
            "im_C_ref",
        ] {
            assert!(t.column(col).is_some(), "{col}");
        }
        let tau: f64 = t.metadata_value("tau_c").unwrap().parse().unwrap();
        assert!((tau - 0.0718).abs() < 1e-4, "{tau}");
        assert!(out.summary.crossover_times.contains_key("tau_c"));
    }

    #[test]
    fn response_inverted_ratio_is_reported_not_enforced() {
        let c = config("[scenario]\nname = response_qubit\n[response]\nvariant = inverted_ratio\n");
        let out = execute(&c).unwrap();
        let bog = out
            .summary
            .checks
            .iter()
            .find(|c| c.name == "bogoliubov_inverted_ratio")
            .unwrap();
        assert!(bog.violations > 0);
        assert!(!bog.enforced);
        assert!(out.summary.passed());
        assert!(out.tables[0].column("kubo_step_response").is_some());
    }

    #[test]
    fn qfi_sweep_routes_agree() {
        let out = execute(&config("[scenario]\nname = qfi_sweep\n")).unwrap();
        assert!(out.summary.passed(), "{:?}", out.summary.checks);
        assert_eq!(out.tables[0].rows.len(), 5);
    }

    #[test]
    fn goe_fidelity_tau() {
        let c =
            config("[scenario]\nname = goe_fidelity\n[goe]\nseed = 3\n[time]\nn_points = 101\n");
        let out = execute(&c).unwrap();
        assert!(out.summary.passed(), "{:?}", out.summary.checks);
        let tau: f64 = out.tables[0]
            .metadata_value("tau")
            .unwrap()
            .parse()
            .unwrap();
        assert!((tau - 0.05).abs() < 1e-15);
        assert_eq!(out.summary.seeds, c.seeds());
    }

    #[test]
    fn failed_computation_writes_nothing() {
        let dir = std::env::temp_dir().join(format!("opflow-nothing-{}", std::process::id()));
        let c = config(
            "[scenario]\nname = custom_matrix\n[custom]\nhamiltonian = 0 0; 0 0\noperator = 0 0; 0 0\n",
        );
        assert!(run(&c, &dir).is_err());
        assert!(!dir.exists());
    }

    #[test]
    fn exit_codes() {
        let err = ScenarioError::Io {
            path: "x".into(),
            source: std::io::Error::other("denied"),
        };
        assert_eq!(err.exit_code(), 3);
        assert_eq!(
            ScenarioError::Numeric(crate::Error::ZeroOperator).exit_code(),
            1
        );
        assert_eq!(list_scenarios().len(), ScenarioKind::ALL.len());
    }
}
