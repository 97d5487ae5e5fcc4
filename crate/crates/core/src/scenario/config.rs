//! Sectioned `key = value` scenario files.
//!
//! ```text
//! [scenario]
//! name = qubit_autocorr
//!
//! [time]
//! t_min = 0
//! t_max = 1
//! n_points = 2000
//!
//! [qubit]
//! a = 10
//! b = 1
//! c = 1
//! beta = 10
//! ```
//!
//! Lines starting with `#` or `;` are comments. Matrix values list rows
//! separated by `;` with entries separated by whitespace or commas; entries
//! may be complex (`1+2i`).

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use crate::autocorr::QubitParams;
use crate::ensembles::GoeSpec;
use crate::grid::TimeGrid;
use crate::linops::{ComplexMatrix, HermitianMatrix, C64};
use crate::response::BogoliubovVariant;

/// A configuration problem, located by line where possible.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub field: String,
    pub message: String,
}

impl ConfigError {
    fn new(line: Option<usize>, field: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            line,
            field: field.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}: {}", self.field, self.message),
            None => write!(f, "{}: {}", self.field, self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, PartialEq)]
struct Entry {
    value: String,
    line: Option<usize>,
}

/// Raw parsed file: section → key → value.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawConfig {
    sections: BTreeMap<String, BTreeMap<String, Entry>>,
}

const KNOWN: &[(&str, &[&str])] = &[
    ("scenario", &["name"]),
    ("time", &["t_min", "t_max", "n_points"]),
    ("qubit", &["a", "b", "c", "k", "beta"]),
    ("goe", &["dim", "sigma", "seed", "seed2", "beta"]),
    ("response", &["variant", "lambda"]),
    ("qfi", &["betas", "measurements"]),
    ("custom", &["hamiltonian", "operator", "beta"]),
    ("output", &["dir"]),
];

fn check_known(section: &str, key: &str, line: Option<usize>) -> Result<(), ConfigError> {
    let Some((_, keys)) = KNOWN.iter().find(|(s, _)| *s == section) else {
        return Err(ConfigError::new(
            line,
            format!("[{section}]"),
            "unknown section",
        ));
    };
    if !keys.contains(&key) {
        return Err(ConfigError::new(
            line,
            format!("{section}.{key}"),
            format!("unknown key (expected one of: {})", keys.join(", ")),
        ));
    }
    Ok(())
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut raw = Self::default();
        let mut current: Option<String> = None;
        for (idx, line) in text.lines().enumerate() {
            let lineno = Some(idx + 1);
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest
                    .strip_suffix(']')
                    .ok_or_else(|| ConfigError::new(lineno, line, "unterminated section header"))?
                    .trim()
                    .to_string();
                if !KNOWN.iter().any(|(s, _)| *s == name) {
                    return Err(ConfigError::new(
                        lineno,
                        format!("[{name}]"),
                        "unknown section",
                    ));
                }
                raw.sections.entry(name.clone()).or_default();
                current = Some(name);
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError::new(lineno, line, "expected key = value"))?;
            let key = key.trim();
            let section = current
                .as_ref()
                .ok_or_else(|| ConfigError::new(lineno, key, "key outside of any section"))?;
            raw.insert(section, key, value.trim(), lineno)?;
        }
        Ok(raw)
    }

    fn insert(
        &mut self,
        section: &str,
        key: &str,
        value: &str,
        line: Option<usize>,
    ) -> Result<(), ConfigError> {
        check_known(section, key, line)?;
        let slot = self.sections.entry(section.to_string()).or_default();
        if line.is_some() && slot.contains_key(key) {
            return Err(ConfigError::new(
                line,
                format!("{section}.{key}"),
                "duplicate key",
            ));
        }
        slot.insert(
            key.to_string(),
            Entry {
                value: value.to_string(),
                line,
            },
        );
        Ok(())
    }

    /// Applies `section.key=value`, replacing any value from the file.
    pub fn apply_override(&mut self, spec: &str) -> Result<(), ConfigError> {
        let field = || format!("--override {spec}");
        let (path, value) = spec
            .split_once('=')
            .ok_or_else(|| ConfigError::new(None, field(), "expected section.key=value"))?;
        let (section, key) = path
            .trim()
            .split_once('.')
            .ok_or_else(|| ConfigError::new(None, field(), "expected section.key=value"))?;
        self.insert(section.trim(), key.trim(), value.trim(), None)
    }

    fn get(&self, section: &str, key: &str) -> Option<&Entry> {
        self.sections.get(section).and_then(|s| s.get(key))
    }

    fn parsed<T: std::str::FromStr>(
        &self,
        section: &str,
        key: &str,
    ) -> Result<Option<T>, ConfigError>
    where
        T::Err: fmt::Display,
    {
        match self.get(section, key) {
            None => Ok(None),
            Some(e) => e.value.parse::<T>().map(Some).map_err(|err| {
                ConfigError::new(
                    e.line,
                    format!("{section}.{key}"),
                    format!("{:?}: {err}", e.value),
                )
            }),
        }
    }

    fn line_of(&self, section: &str, key: &str) -> Option<usize> {
        self.get(section, key).and_then(|e| e.line)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioKind {
    QubitAutocorr,
    GoeAutocorr,
    GoeFidelity,
    ResponseQubit,
    QfiSweep,
    CustomMatrix,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 6] = [
        Self::QubitAutocorr,
        Self::GoeAutocorr,
        Self::GoeFidelity,
        Self::ResponseQubit,
        Self::QfiSweep,
        Self::CustomMatrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::QubitAutocorr => "qubit_autocorr",
            Self::GoeAutocorr => "goe_autocorr",
            Self::GoeFidelity => "goe_fidelity",
            Self::ResponseQubit => "response_qubit",
            Self::QfiSweep => "qfi_sweep",
            Self::CustomMatrix => "custom_matrix",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Self::QubitAutocorr => {
                "two-level C_{σx}(t) with MT/ML floors, Im ceiling and crossover"
            }
            Self::GoeAutocorr => {
                "normalized autocorrelation of a GOE operator under a GOE Hamiltonian"
            }
            Self::GoeFidelity => {
                "coherent-Gibbs fidelity of a GOE Hamiltonian with its linear floor"
            }
            Self::ResponseQubit => {
                "σx susceptibility with Heisenberg, Bogoliubov and speed-limit ceilings"
            }
            Self::QfiSweep => "thermal QFI by spectral and kernel routes against its ceiling",
            Self::CustomMatrix => "autocorrelation bounds for user-supplied H and O",
        }
    }

    fn default_time(self) -> (f64, f64, usize) {
        match self {
            Self::QubitAutocorr | Self::CustomMatrix => (0.0, 1.0, 2000),
            Self::GoeAutocorr | Self::GoeFidelity => (0.0, 0.2, 2000),
            Self::ResponseQubit => (0.0, 3.0, 2000),
            Self::QfiSweep => (0.0, 1.0, 2),
        }
    }
}

impl std::str::FromStr for ScenarioKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|k| k.name()).collect();
                format!("unknown scenario (expected one of: {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoeBlock {
    pub spec: GoeSpec,
    pub seed2: u64,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CustomBlock {
    pub hamiltonian: HermitianMatrix,
    pub operator: ComplexMatrix,
    pub beta: f64,
}

/// Fully resolved scenario with defaults filled in.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub kind: ScenarioKind,
    pub grid: TimeGrid,
    pub time: (f64, f64, usize),
    pub qubit: Option<QubitParams>,
    pub goe: Option<GoeBlock>,
    pub variant: BogoliubovVariant,
    pub lambda: f64,
    pub betas: Vec<f64>,
    pub measurements: usize,
    pub custom: Option<CustomBlock>,
    pub output_dir: Option<PathBuf>,
}

fn parse_matrix(text: &str) -> Result<ComplexMatrix, String> {
    let rows: Vec<Vec<C64>> = text
        .split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|e| !e.is_empty())
                .map(|e| {
                    e.parse::<C64>()
                        .map_err(|err| format!("entry {e:?}: {err}"))
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let d = rows.len();
    if d == 0 {
        return Err("empty matrix".into());
    }
    if let Some(bad) = rows.iter().position(|r| r.len() != d) {
        return Err(format!(
            "row {} has {} entries, expected {d}",
            bad + 1,
            rows[bad].len()
        ));
    }
    Ok(ComplexMatrix::from_fn(d, d, |i, j| rows[i][j]))
}

fn parse_list(text: &str) -> Result<Vec<f64>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|e| !e.is_empty())
        .map(|e| {
            e.parse::<f64>()
                .map_err(|err| format!("entry {e:?}: {err}"))
        })
        .collect()
}

fn require_beta(beta: f64, field: &str, line: Option<usize>) -> Result<f64, ConfigError> {
    if !(beta >= 0.0) || !beta.is_finite() {
        return Err(ConfigError::new(
            line,
            field,
            format!("beta = {beta} must be finite and >= 0"),
        ));
    }
    Ok(beta)
}

impl ScenarioConfig {
    pub fn from_text(text: &str, overrides: &[String]) -> Result<Self, ConfigError> {
        let mut raw = RawConfig::parse(text)?;
        for o in overrides {
            raw.apply_override(o)?;
        }
        Self::resolve(&raw)
    }

    pub fn resolve(raw: &RawConfig) -> Result<Self, ConfigError> {
        let kind: ScenarioKind = raw
            .parsed("scenario", "name")?
            .ok_or_else(|| ConfigError::new(None, "scenario.name", "missing scenario name"))?;

        let (t0, t1, n0) = kind.default_time();
        let t_min = raw.parsed::<f64>("time", "t_min")?.unwrap_or(t0);
        let t_max = raw.parsed::<f64>("time", "t_max")?.unwrap_or(t1);
        let n_points = raw.parsed::<usize>("time", "n_points")?.unwrap_or(n0);
        if !(t_min >= 0.0) || !t_min.is_finite() {
            return Err(ConfigError::new(
                raw.line_of("time", "t_min"),
                "time.t_min",
                "must be finite and >= 0",
            ));
        }
        if !(t_max > t_min) || !t_max.is_finite() {
            return Err(ConfigError::new(
                raw.line_of("time", "t_max"),
                "time.t_max",
                format!("t_max = {t_max} must exceed t_min = {t_min}"),
            ));
        }
        if n_points < 2 {
            return Err(ConfigError::new(
                raw.line_of("time", "n_points"),
                "time.n_points",
                "must be >= 2",
            ));
        }
        let grid = TimeGrid::uniform(t_min, t_max, n_points)
            .map_err(|e| ConfigError::new(None, "time", e.to_string()))?;

        let qubit = match kind {
            ScenarioKind::QubitAutocorr | ScenarioKind::ResponseQubit | ScenarioKind::QfiSweep => {
                let (a0, b0, c0) = if kind == ScenarioKind::QubitAutocorr {
                    (10.0, 1.0, 1.0)
                } else {
                    (0.0, 0.0, 1.0)
                };
                let q = QubitParams {
                    a: raw.parsed("qubit", "a")?.unwrap_or(a0),
                    b: raw.parsed("qubit", "b")?.unwrap_or(b0),
                    c: raw.parsed("qubit", "c")?.unwrap_or(c0),
                    k: raw.parsed("qubit", "k")?.unwrap_or(0.0),
                    beta: raw.parsed("qubit", "beta")?.unwrap_or(10.0),
                };
                q.validate().map_err(|e| {
                    ConfigError::new(raw.line_of("qubit", "beta"), "[qubit]", e.to_string())
                })?;
                Some(q)
            }
            _ => None,
        };

        let goe = match kind {
            ScenarioKind::GoeAutocorr | ScenarioKind::GoeFidelity => {
                let (dim0, beta0) = if kind == ScenarioKind::GoeAutocorr {
                    (200, 0.1)
                } else {
                    (50, 10.0)
                };
                let seed: u64 = raw.parsed("goe", "seed")?.ok_or_else(|| {
                    ConfigError::new(
                        None,
                        "goe.seed",
                        "an explicit seed is required for reproducibility",
                    )
                })?;
                let dim = raw.parsed("goe", "dim")?.unwrap_or(dim0);
                let sigma = raw.parsed("goe", "sigma")?.unwrap_or(1.0);
                let spec = GoeSpec::new(dim, sigma, seed).map_err(|e| {
                    ConfigError::new(raw.line_of("goe", "dim"), "[goe]", e.to_string())
                })?;
                let beta = require_beta(
                    raw.parsed("goe", "beta")?.unwrap_or(beta0),
                    "goe.beta",
                    raw.line_of("goe", "beta"),
                )?;
                let seed2 = raw.parsed("goe", "seed2")?.unwrap_or(seed.wrapping_add(1));
                Some(GoeBlock { spec, seed2, beta })
            }
            _ => None,
        };

        let variant = match raw.get("response", "variant") {
            None => BogoliubovVariant::Derived,
            Some(e) => e.value.parse().map_err(|err: crate::Error| {
                ConfigError::new(e.line, "response.variant", err.to_string())
            })?,
        };
        let lambda = raw.parsed("response", "lambda")?.unwrap_or(1.0);

        let betas = match raw.get("qfi", "betas") {
            None => vec![0.5, 1.0, 2.0, 5.0, 10.0],
            Some(e) => {
                parse_list(&e.value).map_err(|m| ConfigError::new(e.line, "qfi.betas", m))?
            }
        };
        if kind == ScenarioKind::QfiSweep {
            if betas.is_empty() {
                return Err(ConfigError::new(
                    raw.line_of("qfi", "betas"),
                    "qfi.betas",
                    "empty list",
                ));
            }
            if let Some(b) = betas.iter().find(|b| !(**b > 0.0) || !b.is_finite()) {
                return Err(ConfigError::new(
                    raw.line_of("qfi", "betas"),
                    "qfi.betas",
                    format!("beta = {b} must be finite and > 0"),
                ));
            }
        }
        let measurements: usize = raw.parsed("qfi", "measurements")?.unwrap_or(1);
        if measurements == 0 {
            return Err(ConfigError::new(
                raw.line_of("qfi", "measurements"),
                "qfi.measurements",
                "must be >= 1",
            ));
        }

        let custom = if kind == ScenarioKind::CustomMatrix {
            let matrix = |key: &str| -> Result<ComplexMatrix, ConfigError> {
                let e = raw.get("custom", key).ok_or_else(|| {
                    ConfigError::new(None, format!("custom.{key}"), "required for custom_matrix")
                })?;
                parse_matrix(&e.value)
                    .map_err(|m| ConfigError::new(e.line, format!("custom.{key}"), m))
            };
            let h = matrix("hamiltonian")?;
            let o = matrix("operator")?;
            let hamiltonian = HermitianMatrix::new(h).map_err(|e| {
                ConfigError::new(
                    raw.line_of("custom", "hamiltonian"),
                    "custom.hamiltonian",
                    e.to_string(),
                )
            })?;
            if o.nrows() != hamiltonian.dim() {
                return Err(ConfigError::new(
                    raw.line_of("custom", "operator"),
                    "custom.operator",
                    format!(
                        "dimension {} does not match hamiltonian {}",
                        o.nrows(),
                        hamiltonian.dim()
                    ),
                ));
            }
            let beta = require_beta(
                raw.parsed("custom", "beta")?.unwrap_or(1.0),
                "custom.beta",
                raw.line_of("custom", "beta"),
            )?;
            Some(CustomBlock {
                hamiltonian,
                operator: o,
                beta,
            })
        } else {
            None
        };

        let output_dir = raw.get("output", "dir").map(|e| PathBuf::from(&e.value));

        Ok(Self {
            kind,
            grid,
            time: (t_min, t_max, n_points),
            qubit,
            goe,
            variant,
            lambda,
            betas,
            measurements,
            custom,
            output_dir,
        })
    }

    /// Resolved parameters as `key = value` pairs, defaults included.
    pub fn echo(&self) -> Vec<(String, String)> {
        let mut out = vec![("scenario".to_string(), self.kind.name().to_string())];
        let mut push = |k: &str, v: String| out.push((k.to_string(), v));
        if self.kind != ScenarioKind::QfiSweep {
            push("time.t_min", self.time.0.to_string());
            push("time.t_max", self.time.1.to_string());
            push("time.n_points", self.time.2.to_string());
        }
        if let Some(q) = &self.qubit {
            push("qubit.a", q.a.to_string());
            push("qubit.b", q.b.to_string());
            push("qubit.c", q.c.to_string());
            push("qubit.k", q.k.to_string());
            if self.kind != ScenarioKind::QfiSweep {
                push("qubit.beta", q.beta.to_string());
            }
        }
        if let Some(g) = &self.goe {
            push("goe.dim", g.spec.dim.to_string());
            push("goe.sigma", g.spec.sigma.to_string());
            push("goe.seed", g.spec.seed.to_string());
            if self.kind == ScenarioKind::GoeAutocorr {
                push("goe.seed2", g.seed2.to_string());
            }
            push("goe.beta", g.beta.to_string());
        }
        if self.kind == ScenarioKind::ResponseQubit {
            let v = match self.variant {
                BogoliubovVariant::Derived => "derived",
                BogoliubovVariant::InvertedRatio => "inverted_ratio",
            };
            push("response.variant", v.to_string());
            push("response.lambda", self.lambda.to_string());
        }
        if self.kind == ScenarioKind::QfiSweep {
            let list: Vec<String> = self.betas.iter().map(|b| b.to_string()).collect();
            push("qfi.betas", list.join(","));
            push("qfi.measurements", self.measurements.to_string());
        }
        if let Some(c) = &self.custom {
            push("custom.dim", c.hamiltonian.dim().to_string());
            push("custom.beta", c.beta.to_string());
        }
        if let Some(dir) = &self.output_dir {
            push("output.dir", dir.display().to_string());
        }
        out
    }

    /// Seeds that determine the run.
    pub fn seeds(&self) -> Vec<u64> {
        match (&self.goe, self.kind) {
            (Some(g), ScenarioKind::GoeAutocorr) => vec![g.spec.seed, g.seed2],
            (Some(g), _) => vec![g.spec.seed],
            _ => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUBIT: &str = "\
# two-level example
[scenario]
name = qubit_autocorr

[time]
t_min = 0
t_max = 1
n_points = 11

[qubit]
a = 10
b = 1
c = 1
beta = 10
";

    #[test]
    fn parses_and_resolves() {
        let c = ScenarioConfig::from_text(QUBIT, &[]).unwrap();
        assert_eq!(c.kind, ScenarioKind::QubitAutocorr);
        assert_eq!(c.grid.len(), 11);
        let q = c.qubit.unwrap();
        assert_eq!((q.a, q.b, q.c, q.k, q.beta), (10.0, 1.0, 1.0, 0.0, 10.0));
        assert_eq!(c.variant, BogoliubovVariant::Derived);
    }

    #[test]
    fn overrides_replace_values() {
        let c = ScenarioConfig::from_text(QUBIT, &["qubit.a=2".into(), "time.n_points = 5".into()])
            .unwrap();
        assert_eq!(c.qubit.unwrap().a, 2.0);
        assert_eq!(c.grid.len(), 5);
        let err = ScenarioConfig::from_text(QUBIT, &["qubit.x=2".into()]).unwrap_err();
        assert_eq!(err.field, "qubit.x");
        assert!(ScenarioConfig::from_text(QUBIT, &["qubit".into()]).is_err());
    }

    #[test]
    fn diagnostics_carry_line_numbers() {
        let text = QUBIT.replace("t_max = 1", "t_max = -1");
        let err = ScenarioConfig::from_text(&text, &[]).unwrap_err();
        assert_eq!(err.field, "time.t_max");
        assert_eq!(err.line, Some(7));

        let err = ScenarioConfig::from_text("[scenario]\nname = nope\n", &[]).unwrap_err();
        assert_eq!(err.field, "scenario.name");
        assert!(err.message.contains("unknown scenario"));
        assert_eq!(err.line, Some(2));

        let err = RawConfig::parse("[bogus]\n").unwrap_err();
        assert_eq!(err.line, Some(1));
        let err = RawConfig::parse("a = 1\n").unwrap_err();
        assert!(err.message.contains("outside"));
        let err = RawConfig::parse("[time]\nt_min = 0\nt_min = 1\n").unwrap_err();
        assert!(err.message.contains("duplicate"));
        let err =
            ScenarioConfig::from_text("[scenario]\nname = qubit_autocorr\n[qubit]\na = x\n", &[])
                .unwrap_err();
        assert_eq!((err.field.as_str(), err.line), ("qubit.a", Some(4)));
    }

    #[test]
    fn goe_requires_seed() {
        let err = ScenarioConfig::from_text("[scenario]\nname = goe_fidelity\n", &[]).unwrap_err();
        assert_eq!(err.field, "goe.seed");
        let c =
            ScenarioConfig::from_text("[scenario]\nname = goe_fidelity\n[goe]\nseed = 4\n", &[])
                .unwrap();
        let g = c.goe.unwrap();
        assert_eq!((g.spec.dim, g.spec.sigma, g.beta), (50, 1.0, 10.0));
        let c =
            ScenarioConfig::from_text("[scenario]\nname = goe_autocorr\n[goe]\nseed = 4\n", &[])
                .unwrap();
        assert_eq!(c.seeds(), vec![4, 5]);
    }

    #[test]
    fn custom_matrices() {
        let text = "[scenario]\nname = custom_matrix\n[custom]\nhamiltonian = 1 0; 0 -1\noperator = 0, 1-1i; 1+1i, 0\nbeta = 2\n";
        let c = ScenarioConfig::from_text(text, &[])
            .unwrap()
            .custom
            .unwrap();
        assert_eq!(c.hamiltonian.dim(), 2);
        assert_eq!(c.operator[(0, 1)], C64::new(1.0, -1.0));
        let bad = text.replace("1 0; 0 -1", "1 2; 0 -1");
        let err = ScenarioConfig::from_text(&bad, &[]).unwrap_err();
        assert_eq!(err.field, "custom.hamiltonian");
        let ragged = text.replace("1 0; 0 -1", "1 0; 0");
        assert!(ScenarioConfig::from_text(&ragged, &[]).is_err());
    }

    #[test]
    fn qfi_and_response_blocks() {
        let c = ScenarioConfig::from_text(
            "[scenario]\nname = qfi_sweep\n[qfi]\nbetas = 0.5, 1, 2\n",
            &[],
        )
        .unwrap();
        assert_eq!(c.betas, vec![0.5, 1.0, 2.0]);
        assert!(
            ScenarioConfig::from_text("[scenario]\nname = qfi_sweep\n[qfi]\nbetas = 0\n", &[])
                .is_err()
        );
        let c = ScenarioConfig::from_text(
            "[scenario]\nname = response_qubit\n[response]\nvariant = inverted_ratio\n",
            &[],
        )
        .unwrap();
        assert_eq!(c.variant, BogoliubovVariant::InvertedRatio);
        assert!(ScenarioConfig::from_text(
            "[scenario]\nname = response_qubit\n[response]\nvariant = other\n",
            &[]
        )
        .is_err());
    }

    #[test]
    fn echo_lists_defaults() {
        let c = ScenarioConfig::from_text("[scenario]\nname = qubit_autocorr\n", &[]).unwrap();
        let echo = c.echo();
        assert!(echo.contains(&("qubit.a".into(), "10".into())));
        assert!(echo.contains(&("time.n_points".into(), "2000".into())));
    }
}
