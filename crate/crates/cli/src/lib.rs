//! Experiment runner: parses JSON configs, dispatches SYK, circuit and
//! entropy-production experiments, and writes CSV plus JSON summaries.

pub mod config;
pub mod error;
pub mod experiment;
pub mod presets;

use std::path::{Path, PathBuf};

pub use config::{ExperimentConfig, ExperimentKind, ValidatedConfig};
pub use error::{CliError, CliResult};
pub use experiment::{run_experiment, to_csv, ExperimentResult};

/// Environment variable overriding the worker count.
pub const WORKERS_ENV: &str = "SCRAMBLE_WORKERS";

/// Command-line overrides applied on top of a config file.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub output: Option<PathBuf>,
    pub workers: Option<usize>,
    pub realizations: Option<usize>,
}

/// Worker count: explicit override, then `SCRAMBLE_WORKERS`, then the
/// config, then the number of available cores.
pub fn resolve_workers(explicit: Option<usize>, configured: Option<usize>) -> CliResult<usize> {
    if let Some(n) = explicit {
        return positive("--workers", n);
    }
    if let Ok(raw) = std::env::var(WORKERS_ENV) {
        let n: usize = raw.trim().parse().map_err(|_| {
            CliError::Config(format!("{WORKERS_ENV}='{raw}' is not a positive integer"))
        })?;
        return positive(WORKERS_ENV, n);
    }
    if let Some(n) = configured {
        return positive("workers", n);
    }
    Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn positive(what: &str, n: usize) -> CliResult<usize> {
    if n == 0 {
        Err(CliError::Config(format!("{what} must be at least 1")))
    } else {
        Ok(n)
    }
}

/// Parses and validates a config file without running it.
pub fn validate_file(path: &Path) -> CliResult<ValidatedConfig> {
    let (cfg, base) = config::load_config(path)?;
    cfg.validate(&base)
}

/// Applies overrides and validates.
pub fn prepare(cfg: &ExperimentConfig, base: &Path, opts: &RunOptions) -> CliResult<ValidatedConfig> {
    let mut cfg = cfg.clone();
    if let Some(n) = opts.realizations {
        match cfg.syk.as_mut() {
            Some(s) => s.realizations = n,
            None => {
                return Err(CliError::Config(
                    "--realizations only applies to kind `syk`".into(),
                ))
            }
        }
    }
    if let Some(out) = &opts.output {
        cfg.output = out.to_string_lossy().into_owned();
    }
    cfg.validate(base)
}

/// Runs a validated experiment on a dedicated pool of `workers` threads.
pub fn execute(v: &ValidatedConfig, workers: usize) -> CliResult<ExperimentResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Io(format!("cannot start worker pool: {e}")))?;
    pool.install(|| run_experiment(v))
}

/// Files written by a run.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub csv_path: PathBuf,
    pub summary_path: PathBuf,
    pub result: ExperimentResult,
}

impl RunOutcome {
    /// `Err` with the first offending sample when a hard check failed.
    pub fn check(&self) -> CliResult<()> {
        match self.result.first_violation() {
            None => Ok(()),
            Some(v) => Err(CliError::Assertion(format!(
                "{} violated at sample {} (t = {}): value {:.6e}; {} violation(s) in total, see {}",
                v.check,
                v.index,
                v.t,
                v.value,
                self.result.violations.len(),
                self.summary_path.display()
            ))),
        }
    }
}

fn with_extension(prefix: &str, ext: &str) -> PathBuf {
    PathBuf::from(format!("{prefix}.{ext}"))
}

/// Runs a config file and writes `<output>.csv` and `<output>.json`.
pub fn run_file(path: &Path, opts: &RunOptions) -> CliResult<RunOutcome> {
    let (cfg, base) = config::load_config(path)?;
    let v = prepare(&cfg, &base, opts)?;
    let workers = resolve_workers(opts.workers, v.config.workers)?;
    let result = execute(&v, workers)?;

    let csv_path = with_extension(&v.config.output, "csv");
    let summary_path = with_extension(&v.config.output, "json");
    if let Some(dir) = csv_path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(&csv_path, to_csv(&result)?)?;
    let summary = experiment::summary(&v, &result, workers, &csv_path.to_string_lossy());
    let text = serde_json::to_string_pretty(&summary).expect("summary serializes");
    std::fs::write(&summary_path, text + "\n")?;
    Ok(RunOutcome {
        csv_path,
        summary_path,
        result,
    })
}
