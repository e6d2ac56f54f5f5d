//! Out-of-time-ordered correlators and the mutual-information lower bound.
//!
//! The averaged OTOC replaces the Haar average over local unitaries by the
//! uniform average over all Pauli strings on A and on B (identity included):
//!
//! ```text
//! Ō(t) = 4^{-n_A} 4^{-n_B} Σ_{P_A, P_B} <P_A P_B(t) P_A P_B(t)>,   P_B(t) = U† P_B U
//! ```
//!
//! Pauli strings are Hermitian involutions, so every term is 1 at `t = 0`.
//! [`bound_report`] tracks `I(t) - (Ō(0) - Ō(t))`, which must stay non-negative.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entropy::{mutual_information, pure_state_information};
use crate::error::{Error, Result};
use crate::pauli::{self, PauliString};
use crate::qdense::{
    eigh, partial_trace_matrix, Bipartition, ComplexMatrix, DensityMatrix, HermitianEigen, Keep,
    SeededRng,
};

/// Maximum `4^{n_A} 4^{n_B}` accepted for exact enumeration.
pub const ENUMERATION_BUDGET: u64 = 1_000_000;

/// Hard tolerance on the bound `I(t) >= Ō(0) - Ō(t)`.
pub const SLACK_TOL: f64 = 1e-9;

/// Tolerance on `Ō(0) = 1`.
pub const OBAR_ZERO_TOL: f64 = 1e-12;

/// State in which OTOC expectation values are taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectationState {
    /// The initial state of the trajectory.
    InitialState,
    /// `I/d` (infinite temperature).
    #[default]
    MaximallyMixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum Averaging {
    #[default]
    ExactEnumeration,
    /// A- and B-strings drawn independently and uniformly.
    MonteCarlo { samples: u64, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OtocConfig {
    #[serde(default)]
    pub expectation_state: ExpectationState,
    #[serde(default)]
    pub averaging: Averaging,
}

impl OtocConfig {
    pub fn validate(&self) -> Result<()> {
        if let Averaging::MonteCarlo { samples, .. } = self.averaging {
            if samples == 0 {
                return Err(Error::InvalidConfig(
                    "monte_carlo averaging needs at least one sample".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Expectation functional `X ↦ tr(ρ X)` in a form that only needs
/// matrix-vector products (or the plain trace for `I/d`).
#[derive(Debug, Clone)]
enum Expectation {
    Trace(usize),
    Spectral(Vec<(f64, Vec<Complex64>)>),
}

impl Expectation {
    fn new(kind: ExpectationState, state: &DensityMatrix) -> Result<Self> {
        match kind {
            ExpectationState::MaximallyMixed => Ok(Self::Trace(state.dim())),
            ExpectationState::InitialState => Self::of_state(state),
        }
    }

    fn of_state(state: &DensityMatrix) -> Result<Self> {
        let eig = state.eigen()?;
        let terms = eig
            .values
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 1e-15)
            .map(|(k, &p)| (p, eig.vectors.column(k)))
            .collect();
        Ok(Self::Spectral(terms))
    }
}

/// Single OTOC `tr(ρ O_A† O_B(t)† O_A O_B(t))` with `O_A = o_A ⊗ I`,
/// `O_B = I ⊗ o_B` and `O_B(t) = U† O_B U`.
pub fn otoc(
    o_a: &ComplexMatrix,
    o_b: &ComplexMatrix,
    u_t: &ComplexMatrix,
    state: &DensityMatrix,
) -> Result<Complex64> {
    if !o_a.is_square() || !o_b.is_square() {
        return Err(Error::DimensionMismatch("local operators must be square".into()));
    }
    let d = o_a.rows() * o_b.rows();
    if u_t.rows() != d || u_t.cols() != d || state.dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "local operators span dimension {d}, unitary is {}x{}, state has {}",
            u_t.rows(),
            u_t.cols(),
            state.dim()
        )));
    }
    let big_a = crate::qdense::kron(o_a, &ComplexMatrix::identity(o_b.rows()));
    let big_b = crate::qdense::kron(&ComplexMatrix::identity(o_a.rows()), o_b);
    let b_t = u_t.adjoint_matmul(&big_b.matmul(u_t));
    let chain = big_a
        .dagger()
        .matmul(&b_t.dagger())
        .matmul(&big_a)
        .matmul(&b_t);
    Ok(state.matrix().trace_product(&chain))
}

/// Result of an averaged-OTOC evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OtocEstimate {
    /// Real part of the average.
    pub value: f64,
    /// Imaginary part of the average (round-off or genuine for non-thermal states).
    pub imag: f64,
    /// Standard error of the mean; zero for exact enumeration.
    pub std_error: f64,
    pub terms: u64,
}

fn enumeration_terms(part: &Bipartition) -> u64 {
    pauli::count(part.n_a).saturating_mul(pauli::count(part.n_b))
}

/// `<P_A Q P_A Q>` with `Q = P_B(t)`.
fn pauli_correlator(p_a: &PauliString, q: &ComplexMatrix, exp: &Expectation) -> Complex64 {
    match exp {
        Expectation::Trace(d) => p_a.conjugate(q).trace_product(q) / *d as f64,
        Expectation::Spectral(terms) => {
            let mut acc = Complex64::new(0.0, 0.0);
            for (p, v) in terms {
                let w = q.apply(v);
                let w = p_a.apply(&w);
                let w = q.apply(&w);
                let w = p_a.apply(&w);
                let ip: Complex64 = v.iter().zip(&w).map(|(a, b)| a.conj() * b).sum();
                acc += ip * *p;
            }
            acc
        }
    }
}

/// Pauli-averaged OTOC `Ō(t)` for the propagator `u_t`.
pub fn averaged_otoc(
    part: &Bipartition,
    u_t: &ComplexMatrix,
    cfg: &OtocConfig,
    state: &DensityMatrix,
) -> Result<OtocEstimate> {
    cfg.validate()?;
    part.check_dim(state.dim())?;
    part.check_dim(u_t.rows())?;
    let exp = Expectation::new(cfg.expectation_state, state)?;
    averaged_otoc_with(part, u_t, cfg.averaging, &exp)
}

/// Infinite-temperature average with the B-strings summed in closed form:
/// `(1/d_B²) Σ_{P_B} P_B R P_B = tr_B(R) ⊗ I/d_B` with `R = U P_A U†`, so each
/// A-string contributes `tr((tr_B R)²) / (d d_B)`.
fn b_twirled_average(
    part: &Bipartition,
    u_t: &ComplexMatrix,
    a_strings: &[PauliString],
    d: usize,
    terms: u64,
) -> OtocEstimate {
    let (da, db) = (part.dim_a(), part.dim_b());
    let u_dag = u_t.dagger();
    let partial: Vec<Complex64> = a_strings
        .par_iter()
        .map(|p_a| {
            let r = u_t.matmul(&p_a.left_mul(&u_dag));
            let m = partial_trace_matrix(&r, da, db, Keep::A);
            m.trace_product(&m) / (d * db) as f64
        })
        .collect();
    let sum = partial
        .into_iter()
        .fold(Complex64::new(0.0, 0.0), |acc, z| acc + z);
    let mean = sum / a_strings.len() as f64;
    OtocEstimate {
        value: mean.re,
        imag: mean.im,
        std_error: 0.0,
        terms,
    }
}

fn averaged_otoc_with(
    part: &Bipartition,
    u_t: &ComplexMatrix,
    averaging: Averaging,
    exp: &Expectation,
) -> Result<OtocEstimate> {
    match averaging {
        Averaging::ExactEnumeration => {
            let needed = enumeration_terms(part);
            if needed > ENUMERATION_BUDGET {
                return Err(Error::EnumerationBudget {
                    needed,
                    budget: ENUMERATION_BUDGET,
                });
            }
            let a_strings: Vec<PauliString> =
                pauli::enumerate(part.n_a).map(|p| p.on_a(part.n_b)).collect();
            if let Expectation::Trace(d) = exp {
                if part.n_a <= part.n_b {
                    return Ok(b_twirled_average(part, u_t, &a_strings, *d, needed));
                }
            }
            // per-B partial sums, reduced below in canonical order
            let partial: Vec<Complex64> = (0..pauli::count(part.n_b))
                .into_par_iter()
                .map(|kb| {
                    let p_b = PauliString::from_index(part.n_b, kb).on_b(part.n_a);
                    let q = p_b.heisenberg(u_t);
                    a_strings
                        .iter()
                        .map(|p_a| pauli_correlator(p_a, &q, exp))
                        .fold(Complex64::new(0.0, 0.0), |acc, z| acc + z)
                })
                .collect();
            let sum = partial
                .into_iter()
                .fold(Complex64::new(0.0, 0.0), |acc, z| acc + z);
            let mean = sum / needed as f64;
            Ok(OtocEstimate {
                value: mean.re,
                imag: mean.im,
                std_error: 0.0,
                terms: needed,
            })
        }
        Averaging::MonteCarlo { samples, seed } => {
            if samples == 0 {
                return Err(Error::InvalidConfig("monte_carlo samples must be >= 1".into()));
            }
            let mut rng = SeededRng::new(seed);
            let na = pauli::count(part.n_a);
            let nb = pauli::count(part.n_b);
            let mut sum = Complex64::new(0.0, 0.0);
            let mut sum_sq = 0.0;
            for _ in 0..samples {
                let ka = rng.below(na);
                let kb = rng.below(nb);
                let p_a = PauliString::from_index(part.n_a, ka).on_a(part.n_b);
                let p_b = PauliString::from_index(part.n_b, kb).on_b(part.n_a);
                let z = pauli_correlator(&p_a, &p_b.heisenberg(u_t), exp);
                sum += z;
                sum_sq += z.re * z.re;
            }
            let n = samples as f64;
            let mean = sum / n;
            let var = if samples > 1 {
                ((sum_sq - n * mean.re * mean.re) / (n - 1.0)).max(0.0)
            } else {
                0.0
            };
            Ok(OtocEstimate {
                value: mean.re,
                imag: mean.im,
                std_error: (var / n).sqrt(),
                terms: samples,
            })
        }
    }
}

/// The six single-qubit stabilizer states (±Z, ±X, ±Y eigenstates).
pub fn stabilizer_states() -> Vec<[Complex64; 2]> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let c = Complex64::new;
    vec![
        [c(1.0, 0.0), c(0.0, 0.0)],
        [c(0.0, 0.0), c(1.0, 0.0)],
        [c(s, 0.0), c(s, 0.0)],
        [c(s, 0.0), c(-s, 0.0)],
        [c(s, 0.0), c(0.0, s)],
        [c(s, 0.0), c(0.0, -s)],
    ]
}

/// Settings for the modified OTOC built from `O_1 = |ψ><φ|` on the first qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct ModifiedOtocSpec {
    pub phi_set: Vec<[Complex64; 2]>,
    pub psi: [Complex64; 2],
}

impl Default for ModifiedOtocSpec {
    fn default() -> Self {
        Self {
            phi_set: stabilizer_states(),
            psi: [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        }
    }
}

/// Dense single-qubit operator.
type Qubit2x2 = [[Complex64; 2]; 2];

/// `(o ⊗ I_B) M` for a 2x2 `o` on the leading qubit.
fn first_qubit_left_mul(o: &Qubit2x2, m: &ComplexMatrix) -> ComplexMatrix {
    let d = m.rows();
    let half = d / 2;
    let cols = m.cols();
    let mut out = ComplexMatrix::zeros(d, cols);
    for r in 0..half {
        for j in 0..cols {
            let top = m[(r, j)];
            let bottom = m[(r + half, j)];
            out[(r, j)] = o[0][0] * top + o[0][1] * bottom;
            out[(r + half, j)] = o[1][0] * top + o[1][1] * bottom;
        }
    }
    out
}

fn first_qubit_apply(o: &Qubit2x2, v: &[Complex64]) -> Vec<Complex64> {
    let half = v.len() / 2;
    let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
    for r in 0..half {
        out[r] = o[0][0] * v[r] + o[0][1] * v[r + half];
        out[r + half] = o[1][0] * v[r] + o[1][1] * v[r + half];
    }
    out
}

fn outer2(a: &[Complex64; 2], b: &[Complex64; 2]) -> Qubit2x2 {
    [
        [a[0] * b[0].conj(), a[0] * b[1].conj()],
        [a[1] * b[0].conj(), a[1] * b[1].conj()],
    ]
}

fn normalized2(v: &[Complex64; 2]) -> Result<[Complex64; 2]> {
    let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::InvalidConfig("zero or non-finite single-qubit state".into()));
    }
    Ok([v[0] / n, v[1] / n])
}

/// Modified OTOC averaged over `φ ∈ phi_set` and all Pauli strings `O_P` on B:
/// `avg Re <O_1† O_P(t) O_1 O_P(t)>` with `O_1 = |ψ><φ| ⊗ I`.
pub fn modified_otoc(
    part: &Bipartition,
    u_t: &ComplexMatrix,
    spec: &ModifiedOtocSpec,
    expectation: ExpectationState,
    state: &DensityMatrix,
) -> Result<f64> {
    if part.n_a != 1 {
        return Err(Error::InvalidPartition(format!(
            "modified OTOC acts on a single first qubit, partition has n_A = {}",
            part.n_a
        )));
    }
    part.check_dim(u_t.rows())?;
    part.check_dim(state.dim())?;
    let exp = Expectation::new(expectation, state)?;
    modified_otoc_with(part, u_t, spec, &exp)
}

fn modified_otoc_with(
    part: &Bipartition,
    u_t: &ComplexMatrix,
    spec: &ModifiedOtocSpec,
    exp: &Expectation,
) -> Result<f64> {
    if spec.phi_set.is_empty() {
        return Err(Error::InvalidConfig("empty phi set".into()));
    }
    let psi = normalized2(&spec.psi)?;
    let ops: Vec<(Qubit2x2, Qubit2x2)> = spec
        .phi_set
        .iter()
        .map(|phi| {
            let phi = normalized2(phi)?;
            Ok((outer2(&psi, &phi), outer2(&phi, &psi)))
        })
        .collect::<Result<_>>()?;
    let nb = pauli::count(part.n_b);
    let partial: Vec<f64> = (0..nb)
        .into_par_iter()
        .map(|kb| {
            let q = PauliString::from_index(part.n_b, kb)
                .on_b(part.n_a)
                .heisenberg(u_t);
            let mut acc = 0.0;
            for (o1, o1_dag) in &ops {
                let z = match exp {
                    Expectation::Trace(d) => {
                        let left = first_qubit_left_mul(o1_dag, &q);
                        let right = first_qubit_left_mul(o1, &q);
                        left.trace_product(&right) / *d as f64
                    }
                    Expectation::Spectral(terms) => {
                        let mut s = Complex64::new(0.0, 0.0);
                        for (p, v) in terms {
                            let w = q.apply(v);
                            let w = first_qubit_apply(o1, &w);
                            let w = q.apply(&w);
                            let w = first_qubit_apply(o1_dag, &w);
                            let ip: Complex64 = v.iter().zip(&w).map(|(a, b)| a.conj() * b).sum();
                            s += ip * *p;
                        }
                        s
                    }
                };
                acc += z.re;
            }
            acc
        })
        .collect();
    let total: f64 = partial.into_iter().sum();
    Ok(total / (nb as f64 * ops.len() as f64))
}

/// Time evolution `t ↦ U(t)`.
pub trait Propagator: Sync {
    fn dim(&self) -> usize;
    fn unitary(&self, t: f64) -> Result<ComplexMatrix>;
}

/// `U(t) = exp(-iHt)` from a cached eigendecomposition of `H`.
#[derive(Debug, Clone)]
pub struct HamiltonianPropagator {
    eig: HermitianEigen,
}

impl HamiltonianPropagator {
    pub fn new(h: &ComplexMatrix) -> Result<Self> {
        Ok(Self { eig: eigh(h)? })
    }

    pub fn eigen(&self) -> &HermitianEigen {
        &self.eig
    }
}

impl Propagator for HamiltonianPropagator {
    fn dim(&self) -> usize {
        self.eig.dim()
    }

    fn unitary(&self, t: f64) -> Result<ComplexMatrix> {
        Ok(self.eig.propagator(t))
    }
}

/// Trajectory of scrambling diagnostics on a time grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScramblingReport {
    pub times: Vec<f64>,
    /// Mutual information `I(t)`.
    pub mutual_info: Vec<f64>,
    /// Rényi-2 mutual information `I2(t)`.
    pub renyi2_mi: Vec<f64>,
    pub obar: Vec<f64>,
    /// `Ō(0) - Ō(t)`.
    pub delta_o: Vec<f64>,
    /// Normalized modified-OTOC change `1 - MO(t)/MO(0)`.
    pub delta_mo: Option<Vec<f64>>,
    /// `I(t) - ΔO(t)`.
    pub slack: Vec<f64>,
    /// Standard errors of `Ō` under Monte-Carlo averaging.
    pub obar_std_error: Option<Vec<f64>>,
    pub monte_carlo_seed: Option<u64>,
    /// Largest imaginary part seen in the averaged OTOC.
    pub max_obar_imag: f64,
}

impl ScramblingReport {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Samples with `slack < -SLACK_TOL`.
    pub fn violations(&self) -> Vec<usize> {
        self.slack
            .iter()
            .enumerate()
            .filter(|(_, &s)| s < -SLACK_TOL)
            .map(|(i, _)| i)
            .collect()
    }

    /// `|Ō(0) - 1|` when the grid starts at `t = 0`.
    pub fn obar_zero_error(&self) -> Option<f64> {
        match (self.times.first(), self.obar.first()) {
            (Some(&0.0), Some(&o)) => Some((o - 1.0).abs()),
            _ => None,
        }
    }

    /// Samples where `ΔMO > ΔO + SLACK_TOL` (reported, not enforced).
    pub fn modified_exceedances(&self) -> Vec<usize> {
        match &self.delta_mo {
            Some(dmo) => dmo
                .iter()
                .zip(&self.delta_o)
                .enumerate()
                .filter(|(_, (&m, &o))| m > o + SLACK_TOL)
                .map(|(i, _)| i)
                .collect(),
            None => Vec::new(),
        }
    }

    /// `max |e^{-I2(t)} - Ō(t)|`: how far the Rényi-2 prediction is from the averaged OTOC.
    pub fn renyi2_prediction_gap(&self) -> f64 {
        self.renyi2_mi
            .iter()
            .zip(&self.obar)
            .map(|(&i2, &o)| ((-i2).exp() - o).abs())
            .fold(0.0, f64::max)
    }

    /// Pointwise mean over reports in slice order. Slack is recomputed from
    /// the averaged channels so that `slack = I - ΔO` holds row by row.
    pub fn average(reports: &[ScramblingReport]) -> Result<ScramblingReport> {
        let first = reports
            .first()
            .ok_or_else(|| Error::InvalidConfig("no reports to average".into()))?;
        let n = first.len();
        if reports.iter().any(|r| r.times != first.times) {
            return Err(Error::DimensionMismatch("reports use different time grids".into()));
        }
        let count = reports.len() as f64;
        let mean_of = |f: &dyn Fn(&ScramblingReport) -> &Vec<f64>| -> Vec<f64> {
            let mut acc = vec![0.0; n];
            for r in reports {
                for (a, &x) in acc.iter_mut().zip(f(r)) {
                    *a += x;
                }
            }
            acc.into_iter().map(|a| a / count).collect()
        };
        let mutual_info = mean_of(&|r| &r.mutual_info);
        let renyi2_mi = mean_of(&|r| &r.renyi2_mi);
        let obar = mean_of(&|r| &r.obar);
        let delta_o = mean_of(&|r| &r.delta_o);
        let delta_mo = if reports.iter().all(|r| r.delta_mo.is_some()) {
            Some(mean_of(&|r| r.delta_mo.as_ref().unwrap()))
        } else {
            None
        };
        let obar_std_error = if reports.iter().all(|r| r.obar_std_error.is_some()) {
            Some(mean_of(&|r| r.obar_std_error.as_ref().unwrap()))
        } else {
            None
        };
        let slack = mutual_info.iter().zip(&delta_o).map(|(i, d)| i - d).collect();
        Ok(ScramblingReport {
            times: first.times.clone(),
            mutual_info,
            renyi2_mi,
            obar,
            delta_o,
            delta_mo,
            slack,
            obar_std_error,
            monte_carlo_seed: first.monte_carlo_seed,
            max_obar_imag: reports.iter().map(|r| r.max_obar_imag).fold(0.0, f64::max),
        })
    }
}

/// Largest-weight eigenvector of a (near-)pure state.
fn pure_vector(state: &DensityMatrix) -> Result<Vec<Complex64>> {
    let p = state.purity();
    if p < 1.0 - crate::entropy::PURITY_TOL {
        return Err(Error::NotPure(p));
    }
    let eig = state.eigen()?;
    Ok(eig.vectors.column(eig.dim() - 1))
}

/// Evaluates `I(t)`, `I2(t)`, `Ō(t)` (and optionally the modified OTOC) on
/// `times` for a pure product initial state.
pub fn bound_report(
    dynamics: &dyn Propagator,
    part: &Bipartition,
    initial: &DensityMatrix,
    times: &[f64],
    cfg: &OtocConfig,
    modified: Option<&ModifiedOtocSpec>,
) -> Result<ScramblingReport> {
    cfg.validate()?;
    part.check_dim(initial.dim())?;
    part.check_dim(dynamics.dim())?;
    if times.is_empty() {
        return Err(Error::InvalidConfig("empty time grid".into()));
    }
    let psi0 = pure_vector(initial)?;
    let i0 = mutual_information(initial, part)?;
    if i0 > SLACK_TOL {
        return Err(Error::InvalidState(format!(
            "initial state is not a product across the cut (I = {i0:.3e})"
        )));
    }
    if modified.is_some() && part.n_a != 1 {
        return Err(Error::InvalidPartition(
            "modified OTOC needs a single-qubit subsystem A".into(),
        ));
    }
    let exp = Expectation::new(cfg.expectation_state, initial)?;

    let n = times.len();
    let mut mutual_info = Vec::with_capacity(n);
    let mut renyi2_mi = Vec::with_capacity(n);
    let mut obar = Vec::with_capacity(n);
    let mut std_err = Vec::with_capacity(n);
    let mut mo = Vec::with_capacity(n);
    let mut max_imag = 0.0f64;
    for &t in times {
        let u = dynamics.unitary(t)?;
        let psi = u.apply(&psi0);
        let info = pure_state_information(&psi, part)?;
        mutual_info.push(info.mutual);
        renyi2_mi.push(info.renyi2_mutual);
        let est = averaged_otoc_with(part, &u, cfg.averaging, &exp)?;
        max_imag = max_imag.max(est.imag.abs());
        obar.push(est.value);
        std_err.push(est.std_error);
        if let Some(spec) = modified {
            mo.push(modified_otoc_with(part, &u, spec, &exp)?);
        }
    }
    let o0 = obar[0];
    let delta_o: Vec<f64> = obar.iter().map(|&o| o0 - o).collect();
    let slack = mutual_info.iter().zip(&delta_o).map(|(i, d)| i - d).collect();
    let delta_mo = modified.map(|_| {
        let m0 = mo[0];
        mo.iter().map(|&m| 1.0 - m / m0).collect()
    });
    let (obar_std_error, monte_carlo_seed) = match cfg.averaging {
        Averaging::MonteCarlo { seed, .. } => (Some(std_err), Some(seed)),
        Averaging::ExactEnumeration => (None, None),
    };
    Ok(ScramblingReport {
        times: times.to_vec(),
        mutual_info,
        renyi2_mi,
        obar,
        delta_o,
        delta_mo,
        slack,
        obar_std_error,
        monte_carlo_seed,
        max_obar_imag: max_imag,
    })
}
