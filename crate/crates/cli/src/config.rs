//! Experiment configuration files (JSON).

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use scramble_core::liouville::DEFAULT_REGULARIZATION;
use scramble_core::models::{scrambler_preset, CircuitSpec, SykConfig};
use scramble_core::scrambling::OtocConfig;
use scramble_core::Bipartition;

use crate::error::{CliError, CliResult};

pub const DEFAULT_REALIZATIONS: usize = 300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    /// Disorder-averaged SYK scrambling trajectory.
    Syk,
    /// Time-scheduled circuit with the modified OTOC.
    Circuit,
    /// Entropy-production bound along a Hamiltonian trajectory.
    Bound8,
    /// Scrambling trajectory of a fixed Hamiltonian.
    OtocSweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionSpec {
    pub n_a: usize,
    pub n_b: usize,
}

/// Either a uniform grid `{start, stop, samples}` or explicit `{times: [...]}`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeGrid {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stop: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub times: Option<Vec<f64>>,
}

impl TimeGrid {
    pub fn uniform(start: f64, stop: f64, samples: usize) -> Self {
        Self {
            start: Some(start),
            stop: Some(stop),
            samples: Some(samples),
            times: None,
        }
    }

    /// Sample times; at least two, strictly increasing, starting at `t = 0`.
    pub fn resolve(&self) -> CliResult<Vec<f64>> {
        let times = match (&self.times, self.start, self.stop, self.samples) {
            (Some(t), None, None, None) => t.clone(),
            (None, Some(start), Some(stop), Some(samples)) => {
                if samples < 2 {
                    return Err(CliError::field(
                        "time_grid.samples",
                        format!("need at least 2 samples (got {samples})"),
                    ));
                }
                if !(stop > start) {
                    return Err(CliError::field(
                        "time_grid.stop",
                        format!("must exceed start (start = {start}, stop = {stop})"),
                    ));
                }
                let step = (stop - start) / (samples - 1) as f64;
                (0..samples).map(|k| start + step * k as f64).collect()
            }
            (None, ..) => {
                return Err(CliError::field(
                    "time_grid",
                    "give either `times` or all of `start`, `stop`, `samples`",
                ))
            }
            (Some(_), ..) => {
                return Err(CliError::field(
                    "time_grid",
                    "`times` cannot be combined with `start`/`stop`/`samples`",
                ))
            }
        };
        if times.len() < 2 {
            return Err(CliError::field(
                "time_grid",
                format!("need at least 2 sample times (got {})", times.len()),
            ));
        }
        if let Some(bad) = times.iter().position(|t| !t.is_finite()) {
            return Err(CliError::field("time_grid", format!("sample {bad} is not finite")));
        }
        if times[0] != 0.0 {
            return Err(CliError::field(
                "time_grid",
                format!("first sample must be t = 0 (got {})", times[0]),
            ));
        }
        if let Some(k) = times.windows(2).position(|w| w[1] <= w[0]) {
            return Err(CliError::field(
                "time_grid",
                format!("times must be strictly increasing (sample {})", k + 1),
            ));
        }
        Ok(times)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SykModel {
    pub n_majorana: usize,
    pub q: usize,
    pub j_squared: f64,
    #[serde(default = "default_realizations")]
    pub realizations: usize,
}

fn default_realizations() -> usize {
    DEFAULT_REALIZATIONS
}

/// Exactly one of a named preset, a circuit file (relative to the config
/// file) or an inline circuit.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitSource {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<CircuitSpec>,
}

impl CircuitSource {
    pub fn load(&self, base_dir: &Path) -> CliResult<CircuitSpec> {
        match (&self.preset, &self.file, &self.spec) {
            (Some(name), None, None) => match name.as_str() {
                "scrambler" => Ok(scrambler_preset()),
                other => Err(CliError::field(
                    "circuit.preset",
                    format!("unknown preset '{other}' (available: scrambler)"),
                )),
            },
            (None, Some(file), None) => {
                let path = base_dir.join(file);
                let text = std::fs::read_to_string(&path).map_err(|e| {
                    CliError::field("circuit.file", format!("cannot read {}: {e}", path.display()))
                })?;
                CircuitSpec::from_json(&text)
                    .map_err(|e| CliError::field("circuit.file", format!("{}: {e}", path.display())))
            }
            (None, None, Some(spec)) => {
                spec.validate()
                    .map_err(|e| CliError::field("circuit.spec", e))?;
                Ok(spec.clone())
            }
            _ => Err(CliError::field(
                "circuit",
                "give exactly one of `preset`, `file`, `spec`",
            )),
        }
    }
}

/// Hamiltonians for `bound8` and `otoc-sweep` experiments.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case", deny_unknown_fields)]
pub enum HamiltonianSpec {
    /// `coupling Σ Z_i Z_{i+1} + field Σ X_i + longitudinal Σ Z_i` on an open chain.
    IsingChain {
        n_qubits: usize,
        coupling: f64,
        field: f64,
        #[serde(default)]
        longitudinal: f64,
    },
    /// Gaussian random Hermitian matrix drawn from the base seed.
    Random { n_qubits: usize },
    /// One SYK disorder realization drawn from the base seed.
    Syk {
        n_majorana: usize,
        q: usize,
        j_squared: f64,
        #[serde(default)]
        realization: usize,
    },
}

impl HamiltonianSpec {
    pub fn n_qubits(&self) -> usize {
        match self {
            HamiltonianSpec::IsingChain { n_qubits, .. } | HamiltonianSpec::Random { n_qubits } => {
                *n_qubits
            }
            HamiltonianSpec::Syk { n_majorana, .. } => n_majorana / 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: ExperimentKind,
    pub partition: PartitionSpec,
    pub time_grid: TimeGrid,
    #[serde(default)]
    pub otoc: OtocConfig,
    /// Output prefix; `<output>.csv` and `<output>.json` are written.
    pub output: String,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub syk: Option<SykModel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circuit: Option<CircuitSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hamiltonian: Option<HamiltonianSpec>,
    /// Maximally mixed admixture for `bound8` (default `1e-6`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regularization: Option<f64>,
    /// Report the modified OTOC for `circuit` runs (default on).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modified_otoc: Option<bool>,
}

/// Model description after validation.
#[derive(Debug, Clone)]
pub enum Model {
    Syk(SykConfig),
    Circuit(CircuitSpec),
    Hamiltonian(HamiltonianSpec),
}

/// A config that passed every check, with derived quantities.
#[derive(Debug, Clone)]
pub struct ValidatedConfig {
    pub config: ExperimentConfig,
    pub partition: Bipartition,
    pub times: Vec<f64>,
    pub model: Model,
    pub regularization: f64,
    pub modified_otoc: bool,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| {
            CliError::Config(format!("line {} column {}: {e}", e.line(), e.column()))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn validate(&self, base_dir: &Path) -> CliResult<ValidatedConfig> {
        let partition = Bipartition::new(self.partition.n_a, self.partition.n_b)
            .map_err(|e| CliError::field("partition", e))?;
        let times = self.time_grid.resolve()?;
        self.otoc.validate().map_err(|e| CliError::field("otoc", e))?;
        if self.output.trim().is_empty() {
            return Err(CliError::field("output", "must not be empty"));
        }
        if self.workers == Some(0) {
            return Err(CliError::field("workers", "must be at least 1"));
        }
        let unused = |field: &str, present: bool| -> CliResult<()> {
            if present {
                Err(CliError::field(
                    field,
                    format!("not used by kind `{}`", self.kind_name()),
                ))
            } else {
                Ok(())
            }
        };
        let model = match self.kind {
            ExperimentKind::Syk => {
                unused("circuit", self.circuit.is_some())?;
                unused("hamiltonian", self.hamiltonian.is_some())?;
                let s = self
                    .syk
                    .as_ref()
                    .ok_or_else(|| CliError::field("syk", "required for kind `syk`"))?;
                let cfg = SykConfig {
                    n_majorana: s.n_majorana,
                    q: s.q,
                    j_squared: s.j_squared,
                    seed: self.seed,
                    realizations: s.realizations,
                    time_grid: times.clone(),
                };
                cfg.validate().map_err(|e| CliError::field("syk", e))?;
                check_register("syk.n_majorana", cfg.n_qubits(), &partition)?;
                Model::Syk(cfg)
            }
            ExperimentKind::Circuit => {
                unused("syk", self.syk.is_some())?;
                unused("hamiltonian", self.hamiltonian.is_some())?;
                let spec = self
                    .circuit
                    .as_ref()
                    .ok_or_else(|| CliError::field("circuit", "required for kind `circuit`"))?
                    .load(base_dir)?;
                check_register("circuit.n_qubits", spec.n_qubits, &partition)?;
                Model::Circuit(spec)
            }
            ExperimentKind::Bound8 | ExperimentKind::OtocSweep => {
                unused("syk", self.syk.is_some())?;
                unused("circuit", self.circuit.is_some())?;
                let h = self.hamiltonian.as_ref().ok_or_else(|| {
                    CliError::field(
                        "hamiltonian",
                        format!("required for kind `{}`", self.kind_name()),
                    )
                })?;
                validate_hamiltonian(h)?;
                check_register("hamiltonian", h.n_qubits(), &partition)?;
                Model::Hamiltonian(h.clone())
            }
        };
        let regularization = match (self.kind, self.regularization) {
            (ExperimentKind::Bound8, Some(d)) if (d > 0.0 && d < 1.0) => d,
            (ExperimentKind::Bound8, Some(d)) => {
                return Err(CliError::field(
                    "regularization",
                    format!("must lie in (0, 1) (got {d})"),
                ))
            }
            (ExperimentKind::Bound8, None) => DEFAULT_REGULARIZATION,
            (_, Some(_)) => {
                return Err(CliError::field("regularization", "only used by kind `bound8`"))
            }
            (_, None) => 0.0,
        };
        let modified_otoc = match (self.kind, self.modified_otoc) {
            (ExperimentKind::Circuit, flag) => flag.unwrap_or(true),
            (_, Some(_)) => {
                return Err(CliError::field("modified_otoc", "only used by kind `circuit`"))
            }
            (_, None) => false,
        };
        if modified_otoc && partition.n_a != 1 {
            return Err(CliError::field(
                "modified_otoc",
                "needs a single-qubit subsystem A (partition.n_a = 1)",
            ));
        }
        Ok(ValidatedConfig {
            config: self.clone(),
            partition,
            times,
            model,
            regularization,
            modified_otoc,
        })
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ExperimentKind::Syk => "syk",
            ExperimentKind::Circuit => "circuit",
            ExperimentKind::Bound8 => "bound8",
            ExperimentKind::OtocSweep => "otoc-sweep",
        }
    }
}

fn check_register(field: &str, n_qubits: usize, part: &Bipartition) -> CliResult<()> {
    if n_qubits != part.n_qubits() {
        return Err(CliError::field(
            field,
            format!(
                "model has {n_qubits} qubits but the partition covers {} (n_a = {}, n_b = {})",
                part.n_qubits(),
                part.n_a,
                part.n_b
            ),
        ));
    }
    Ok(())
}

fn validate_hamiltonian(h: &HamiltonianSpec) -> CliResult<()> {
    match h {
        HamiltonianSpec::IsingChain {
            n_qubits,
            coupling,
            field,
            longitudinal,
        } => {
            if !(2..=10).contains(n_qubits) {
                return Err(CliError::field(
                    "hamiltonian.n_qubits",
                    format!("ising_chain supports 2..=10 qubits (got {n_qubits})"),
                ));
            }
            if ![coupling, field, longitudinal].iter().all(|x| x.is_finite()) {
                return Err(CliError::field("hamiltonian", "couplings must be finite"));
            }
        }
        HamiltonianSpec::Random { n_qubits } => {
            if !(2..=10).contains(n_qubits) {
                return Err(CliError::field(
                    "hamiltonian.n_qubits",
                    format!("random supports 2..=10 qubits (got {n_qubits})"),
                ));
            }
        }
        HamiltonianSpec::Syk {
            n_majorana,
            q,
            j_squared,
            ..
        } => {
            let cfg = SykConfig {
                n_majorana: *n_majorana,
                q: *q,
                j_squared: *j_squared,
                seed: 0,
                realizations: 1,
                time_grid: vec![],
            };
            cfg.validate().map_err(|e| CliError::field("hamiltonian", e))?;
        }
    }
    Ok(())
}

/// Reads and parses a config file; returns it with the directory used to
/// resolve relative circuit files.
pub fn load_config(path: &Path) -> CliResult<(ExperimentConfig, PathBuf)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let cfg = ExperimentConfig::from_json(&text)
        .map_err(|e| CliError::Config(format!("{}: {}", path.display(), strip(&e))))?;
    let base = path
        .parent()
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("."));
    Ok((cfg, base))
}

fn strip(e: &CliError) -> String {
    match e {
        CliError::Config(m) => m.clone(),
        other => other.to_string(),
    }
}
