use itertools::Itertools;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::jw::majorana_string;
use crate::error::{Error, Result};
use crate::pauli::PauliString;
use crate::qdense::{Bipartition, ComplexMatrix, DensityMatrix, SeededRng};
use crate::scrambling::{bound_report, HamiltonianPropagator, OtocConfig, ScramblingReport};

/// Disorder ensemble of the SYK model with `n_majorana` Majoranas and
/// `q`-body couplings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SykConfig {
    pub n_majorana: usize,
    pub q: usize,
    pub j_squared: f64,
    pub seed: u64,
    pub realizations: usize,
    #[serde(default)]
    pub time_grid: Vec<f64>,
}

impl SykConfig {
    pub fn validate(&self) -> Result<()> {
        let n = self.n_majorana;
        let q = self.q;
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "n_majorana must be even (got {n})"
            )));
        }
        if !q.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!("q must be even (got {q})")));
        }
        if q < 4 {
            return Err(Error::InvalidConfig(format!("q must be at least 4 (got {q})")));
        }
        if q > n {
            return Err(Error::InvalidConfig(format!(
                "q must not exceed n_majorana (q = {q}, n_majorana = {n})"
            )));
        }
        if n > 32 {
            return Err(Error::InvalidConfig(format!(
                "n_majorana = {n} is beyond dense simulation"
            )));
        }
        if !(self.j_squared.is_finite() && self.j_squared >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "j_squared must be finite and non-negative (got {})",
                self.j_squared
            )));
        }
        if self.realizations == 0 {
            return Err(Error::InvalidConfig("realizations must be at least 1".into()));
        }
        Ok(())
    }

    pub fn n_qubits(&self) -> usize {
        self.n_majorana / 2
    }

    /// `binomial(N, q)`.
    pub fn term_count(&self) -> usize {
        binomial(self.n_majorana, self.q)
    }

    /// `J² (q-1)! / N^{q-1}`.
    pub fn coupling_variance(&self) -> f64 {
        let fact: f64 = (1..self.q).map(|k| k as f64).product();
        self.j_squared * fact / (self.n_majorana as f64).powi(self.q as i32 - 1)
    }

    /// Coupling generator of one realization; realizations use disjoint streams.
    pub fn coupling_rng(&self, realization: usize) -> SeededRng {
        SeededRng::for_stream(self.seed, realization as u64)
    }

    /// Couplings of one realization in lexicographic order of `i_1 < ... < i_q`.
    pub fn couplings(&self, realization: usize) -> Vec<f64> {
        let sigma = self.coupling_variance().sqrt();
        let mut rng = self.coupling_rng(realization);
        (0..self.term_count()).map(|_| sigma * rng.gaussian()).collect()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `H = i^{q/2} Σ_{i_1<...<i_q} J_{i_1...i_q} ψ_{i_1} ⋯ ψ_{i_q}` for one disorder realization.
pub fn build_syk_hamiltonian(cfg: &SykConfig, realization: usize) -> Result<ComplexMatrix> {
    cfg.validate()?;
    let couplings = cfg.couplings(realization);
    syk_hamiltonian_from_couplings(cfg.n_majorana, cfg.q, &couplings)
}

pub fn syk_hamiltonian_from_couplings(
    n_majorana: usize,
    q: usize,
    couplings: &[f64],
) -> Result<ComplexMatrix> {
    let n_qubits = n_majorana / 2;
    let strings: Vec<PauliString> = (1..=n_majorana)
        .map(|i| majorana_string(i, n_qubits))
        .collect::<Result<_>>()?;
    let expected = binomial(n_majorana, q);
    if couplings.len() != expected {
        return Err(Error::InvalidConfig(format!(
            "{} couplings for {expected} terms",
            couplings.len()
        )));
    }
    let prefactor = Complex64::new(0.0, 1.0).powu((q / 2) as u32)
        * std::f64::consts::FRAC_1_SQRT_2.powi(q as i32);
    let d = 1usize << n_qubits;
    let mut h = ComplexMatrix::zeros(d, d);
    for (combo, &j) in (0..n_majorana).combinations(q).zip(couplings) {
        let (&last, rest) = combo.split_last().expect("q >= 1");
        let mut term = strings[last].matrix();
        for &idx in rest.iter().rev() {
            term = strings[idx].left_mul(&term);
        }
        let w = prefactor * j;
        for (acc, &x) in h.as_mut_slice().iter_mut().zip(term.as_slice()) {
            *acc += w * x;
        }
    }
    Ok(h)
}

/// Per-realization reports and their pointwise average.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SykTrajectory {
    pub realizations: Vec<ScramblingReport>,
    pub average: ScramblingReport,
}

/// Evolves `initial` under every disorder realization and averages the
/// scrambling channels in realization order.
///
/// Realizations run on the current rayon pool; the reduction order is fixed,
/// so the result does not depend on the number of threads.
pub fn syk_trajectory(
    cfg: &SykConfig,
    part: &Bipartition,
    initial: &DensityMatrix,
    otoc: &OtocConfig,
) -> Result<SykTrajectory> {
    cfg.validate()?;
    part.check_dim(1 << cfg.n_qubits())?;
    if cfg.time_grid.is_empty() {
        return Err(Error::InvalidConfig("time_grid is empty".into()));
    }
    let realizations: Vec<ScramblingReport> = (0..cfg.realizations)
        .into_par_iter()
        .map(|k| {
            let h = build_syk_hamiltonian(cfg, k)?;
            let prop = HamiltonianPropagator::new(&h)?;
            bound_report(&prop, part, initial, &cfg.time_grid, otoc, None)
        })
        .collect::<Result<_>>()?;
    let average = ScramblingReport::average(&realizations)?;
    Ok(SykTrajectory {
        realizations,
        average,
    })
}
