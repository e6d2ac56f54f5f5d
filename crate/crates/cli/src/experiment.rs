//! Dispatch of validated configs to the core algorithms.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use scramble_core::entropy::max_pure_mutual_information;
use scramble_core::liouville::{bound8_report, EntropyRateSeries, BOUND_TOL, RATE_CUTOFF};
use scramble_core::models::{build_syk_hamiltonian, syk_trajectory, ScheduledCircuit, SykConfig};
use scramble_core::pauli::{Pauli, PauliString};
use scramble_core::scrambling::{
    bound_report, Averaging, HamiltonianPropagator, ModifiedOtocSpec, ScramblingReport,
    OBAR_ZERO_TOL, SLACK_TOL,
};
use scramble_core::{ComplexMatrix, DensityMatrix, SeededRng};

use crate::config::{HamiltonianSpec, Model, ValidatedConfig};
use crate::error::CliResult;

/// One named CSV column.
#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: &'static str,
    pub values: Vec<f64>,
}

/// A failed hard check at a specific time sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub index: usize,
    pub t: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub columns: Vec<Column>,
    pub report: ScramblingReport,
    pub rates: Option<EntropyRateSeries>,
    pub violations: Vec<Violation>,
    pub slack9_violations: usize,
    pub slack8_violations: Option<usize>,
    pub runtime_seconds: f64,
    pub realizations: Option<usize>,
}

impl ExperimentResult {
    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.values.as_slice())
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.iter().min_by_key(|v| v.index)
    }
}

/// `coupling Σ Z_i Z_{i+1} + field Σ X_i + longitudinal Σ Z_i`.
pub fn ising_chain(n: usize, coupling: f64, field: f64, longitudinal: f64) -> ComplexMatrix {
    let d = 1usize << n;
    let mut h = ComplexMatrix::zeros(d, d);
    let single = |site: usize, p: Pauli| {
        let mut labels = vec![Pauli::I; n];
        labels[site] = p;
        PauliString::new(labels).matrix()
    };
    for i in 0..n {
        if i + 1 < n {
            let mut labels = vec![Pauli::I; n];
            labels[i] = Pauli::Z;
            labels[i + 1] = Pauli::Z;
            h = &h + &PauliString::new(labels).matrix().scale_real(coupling);
        }
        h = &h + &single(i, Pauli::X).scale_real(field);
        if longitudinal != 0.0 {
            h = &h + &single(i, Pauli::Z).scale_real(longitudinal);
        }
    }
    h
}

pub fn build_hamiltonian(spec: &HamiltonianSpec, seed: u64) -> CliResult<ComplexMatrix> {
    Ok(match spec {
        HamiltonianSpec::IsingChain {
            n_qubits,
            coupling,
            field,
            longitudinal,
        } => ising_chain(*n_qubits, *coupling, *field, *longitudinal),
        HamiltonianSpec::Random { n_qubits } => SeededRng::new(seed).hermitian(1 << n_qubits),
        HamiltonianSpec::Syk {
            n_majorana,
            q,
            j_squared,
            realization,
        } => {
            let cfg = SykConfig {
                n_majorana: *n_majorana,
                q: *q,
                j_squared: *j_squared,
                seed,
                realizations: realization + 1,
                time_grid: vec![],
            };
            build_syk_hamiltonian(&cfg, *realization)?
        }
    })
}

fn scrambling_columns(report: &ScramblingReport) -> Vec<Column> {
    vec![
        Column { name: "t", values: report.times.clone() },
        Column { name: "I", values: report.mutual_info.clone() },
        Column { name: "I2", values: report.renyi2_mi.clone() },
        Column { name: "Obar", values: report.obar.clone() },
        Column { name: "deltaO", values: report.delta_o.clone() },
    ]
}

/// Runs the experiment on the current rayon pool.
pub fn run_experiment(v: &ValidatedConfig) -> CliResult<ExperimentResult> {
    let started = Instant::now();
    let part = &v.partition;
    let cfg = &v.config;
    let initial = DensityMatrix::zero_state(part.n_qubits());
    let mut realizations = None;
    let mut rates = None;

    let report = match &v.model {
        Model::Syk(syk) => {
            realizations = Some(syk.realizations);
            syk_trajectory(syk, part, &initial, &cfg.otoc)?.average
        }
        Model::Circuit(spec) => {
            let circuit = ScheduledCircuit::new(spec)?;
            let modified = v.modified_otoc.then(ModifiedOtocSpec::default);
            bound_report(&circuit, part, &initial, &v.times, &cfg.otoc, modified.as_ref())?
        }
        Model::Hamiltonian(spec) => {
            let h = build_hamiltonian(spec, cfg.seed)?;
            let prop = HamiltonianPropagator::new(&h)?;
            let report = bound_report(&prop, part, &initial, &v.times, &cfg.otoc, None)?;
            if v.regularization > 0.0 {
                rates = Some(bound8_report(&h, &initial, part, &v.times, v.regularization)?);
            }
            report
        }
    };

    let mut columns = scrambling_columns(&report);
    if let Some(dmo) = &report.delta_mo {
        columns.push(Column { name: "deltaMO", values: dmo.clone() });
    }
    if let Some(series) = &rates {
        let pick = |f: fn(&scramble_core::liouville::EntropyRates) -> f64| {
            series.rates.iter().map(f).collect::<Vec<f64>>()
        };
        columns.push(Column { name: "Idot", values: pick(|r| r.i_dot) });
        columns.push(Column { name: "SdotA", values: pick(|r| r.s_dot_a) });
        columns.push(Column { name: "SdotB", values: pick(|r| r.s_dot_b) });
        columns.push(Column { name: "SdotE", values: pick(|r| r.s_dot_e) });
    }
    columns.push(Column { name: "slack9", values: report.slack.clone() });
    if let Some(series) = &rates {
        columns.push(Column {
            name: "slack8",
            values: series.rates.iter().map(|r| r.slack).collect(),
        });
    }

    let mut violations = Vec::new();
    if let Some(err) = report.obar_zero_error() {
        if err > OBAR_ZERO_TOL {
            violations.push(Violation { check: "obar_zero", index: 0, t: 0.0, value: report.obar[0] });
        }
    }
    let slack9: Vec<usize> = report.violations();
    for &k in &slack9 {
        violations.push(Violation {
            check: "slack9",
            index: k,
            t: report.times[k],
            value: report.slack[k],
        });
    }
    let slack8_violations = rates.as_ref().map(|series| {
        let idx = series.violations();
        for &k in &idx {
            violations.push(Violation {
                check: "slack8",
                index: k,
                t: series.times[k],
                value: series.rates[k].slack,
            });
        }
        idx.len()
    });
    violations.sort_by_key(|v| v.index);

    Ok(ExperimentResult {
        columns,
        report,
        rates,
        slack9_violations: slack9.len(),
        slack8_violations,
        violations,
        runtime_seconds: started.elapsed().as_secs_f64(),
        realizations,
    })
}

/// CSV text with every value in 17-significant-digit scientific notation.
pub fn to_csv(result: &ExperimentResult) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| crate::error::CliError::Io(e.to_string());
    w.write_record(result.columns.iter().map(|c| c.name)).map_err(io)?;
    let rows = result.columns.first().map_or(0, |c| c.values.len());
    for k in 0..rows {
        w.write_record(result.columns.iter().map(|c| format!("{:.16e}", c.values[k])))
            .map_err(io)?;
    }
    w.into_inner()
        .map_err(|e| crate::error::CliError::Io(e.to_string()))
}

fn min_of(values: &[f64]) -> Option<f64> {
    values.iter().copied().reduce(f64::min)
}

/// Machine-readable run summary.
pub fn summary(v: &ValidatedConfig, result: &ExperimentResult, workers: usize, csv_path: &str) -> Value {
    let report = &result.report;
    let monte_carlo_seed = match v.config.otoc.averaging {
        Averaging::MonteCarlo { seed, .. } => Some(seed),
        Averaging::ExactEnumeration => None,
    };
    json!({
        "config": v.config,
        "kind": v.config.kind_name(),
        "samples": report.len(),
        "seeds": {
            "base": v.config.seed,
            "realizations": result.realizations,
            "realization_streams": result.realizations.map(|n| format!("0..{n}")),
            "monte_carlo": monte_carlo_seed,
        },
        "workers": workers,
        "violations": {
            "total": result.violations.len(),
            "slack9": result.slack9_violations,
            "slack8": result.slack8_violations,
            "obar_zero": result.violations.iter().any(|x| x.check == "obar_zero"),
        },
        "first_violation": result.first_violation(),
        "tolerances": {
            "slack": SLACK_TOL,
            "bound8": BOUND_TOL,
            "obar_zero": OBAR_ZERO_TOL,
        },
        "min_slack9": min_of(&report.slack),
        "min_slack8": result.rates.as_ref().and_then(|s| {
            min_of(&s.rates.iter().map(|r| r.slack).collect::<Vec<_>>())
        }),
        "obar_zero_error": report.obar_zero_error(),
        "max_mutual_info": report.mutual_info.iter().copied().reduce(f64::max),
        "information_capacity": {
            "two_ln_min_dim": max_pure_mutual_information(&v.partition),
            "min_dim_ln_2": v.partition.dim_a().min(v.partition.dim_b()) as f64 * std::f64::consts::LN_2,
        },
        "renyi2_prediction_gap": report.renyi2_prediction_gap(),
        "max_obar_imag": report.max_obar_imag,
        "modified_exceedances": report.delta_mo.as_ref().map(|_| report.modified_exceedances()),
        "entropy_rates": result.rates.as_ref().map(|s| json!({
            "regularization": s.regularization,
            "rate_cutoff": RATE_CUTOFF,
            "skipped_pairs": s.rates.iter().map(|r| r.skipped_pairs).sum::<u64>(),
            "max_phase": s.rates.iter().map(|r| r.max_phase).fold(0.0, f64::max),
        })),
        "csv": csv_path,
        "runtime_seconds": result.runtime_seconds,
    })
}
