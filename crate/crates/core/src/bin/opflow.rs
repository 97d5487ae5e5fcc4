use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use opflow::scenario::{self, ConfigError, ScenarioConfig, ScenarioError};

#[derive(Parser)]
#[command(version, about = "Run operator-flow speed-limit scenarios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a scenario and write CSV curves plus summary.json.
    Run {
        #[command(flatten)]
        input: Input,
        /// Output directory; falls back to `[output] dir` in the config.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Check a config and print the resolved parameters.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Print the available scenario names.
    ListScenarios,
}

#[derive(Args)]
struct Input {
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// section.key=value, applied after the file is read.
    #[arg(long = "override", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
}

impl Input {
    fn load(&self) -> Result<ScenarioConfig, ScenarioError> {
        let text = std::fs::read_to_string(&self.config).map_err(|source| ScenarioError::Io {
            path: self.config.clone(),
            source,
        })?;
        Ok(ScenarioConfig::from_text(&text, &self.overrides)?)
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(command: Command) -> Result<u8, ScenarioError> {
    match command {
        Command::ListScenarios => {
            for (name, description) in scenario::list_scenarios() {
                println!("{name:<16} {description}");
            }
            Ok(0)
        }
        Command::Validate { input } => {
            let config = input.load()?;
            println!("ok");
            for (k, v) in config.echo() {
                println!("{k} = {v}");
            }
            Ok(0)
        }
        Command::Run { input, out } => {
            let config = input.load()?;
            let out = out.or_else(|| config.output_dir.clone()).ok_or_else(|| {
                ScenarioError::Config(ConfigError {
                    line: None,
                    field: "output.dir".into(),
                    message: "no output directory: pass --out or set [output] dir".into(),
                })
            })?;
            let summary = scenario::run(&config, &out)?;
            for check in &summary.checks {
                let status = match (check.violations, check.enforced) {
                    (0, _) => "ok",
                    (_, true) => "VIOLATED",
                    (_, false) => "violated (reported)",
                };
                println!(
                    "{:<24} min_margin={:+.3e} violations={} {status}",
                    check.name, check.min_margin, check.violations
                );
            }
            for (name, t) in &summary.crossover_times {
                println!("{name} = {t:.6e}");
            }
            log::info!(
                "wrote {} files to {}",
                summary.files.len() + 1,
                out.display()
            );
            Ok(if summary.passed() { 0 } else { 2 })
        }
    }
}
