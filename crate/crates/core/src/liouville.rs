//! Fock–Liouville (vectorized) dynamics and the entropy-production upper
//! bound on the rate of mutual information.
//!
//! Density matrices are vectorized row-major, `|ρ>_{(i,j)} = ρ_ij`, so the
//! von Neumann equation reads `d|ρ>/dt = W|ρ>` with
//! `W = -i (H ⊗ I - I ⊗ Hᵀ)` (ħ = 1).
//!
//! The rate decomposition is evaluated in the instantaneous eigenbasis
//! `V_A ⊗ V_B` of the marginals. Each Liouville index `m = (i, j)` carries a
//! marginal weight `ρ'_{A,m} = sqrt(λ'_A(i) λ'_A(j))`, where `λ'_A(i)` is the
//! eigenvalue of `ρ_A ⊗ I` on basis vector `i` (likewise for B). On population
//! indices `i = j` this is the eigenvalue itself; off-diagonal indices get the
//! geometric mean so that every weight is strictly positive for full-rank
//! marginals.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::entropy::mutual_information;
use crate::error::{Error, Result};
use crate::qdense::{
    check_hermitian, eigh, kron, partial_trace_matrix, Bipartition, ComplexMatrix, DensityMatrix,
    HermitianEigen, Keep,
};

/// Weight of the maximally mixed admixture used to make pure starts full rank.
pub const DEFAULT_REGULARIZATION: f64 = 1e-6;

/// Pairs with `|W_{m,m'}|` or `|W_{m',m}|` below this are left out of the rate sums.
pub const RATE_CUTOFF: f64 = 1e-12;

/// Smallest marginal eigenvalue accepted before taking logarithms.
pub const MIN_MARGINAL_EIGENVALUE: f64 = 1e-9;

/// Hard tolerance on `RHS - İ`.
pub const BOUND_TOL: f64 = 1e-9;

pub fn vectorize(m: &ComplexMatrix) -> Vec<Complex64> {
    m.as_slice().to_vec()
}

pub fn unvectorize(v: &[Complex64], d: usize) -> Result<ComplexMatrix> {
    ComplexMatrix::from_row_major(d, d, v.to_vec())
}

/// Instantaneous product eigenbasis of the marginals, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct InstantaneousBasis {
    pub v_a: ComplexMatrix,
    pub v_b: ComplexMatrix,
    pub lambda_a: Vec<f64>,
    pub lambda_b: Vec<f64>,
}

impl InstantaneousBasis {
    /// `V = V_A ⊗ V_B`.
    pub fn unitary(&self) -> ComplexMatrix {
        kron(&self.v_a, &self.v_b)
    }

    pub fn min_eigenvalue(&self) -> (char, f64) {
        let a = self.lambda_a.last().copied().unwrap_or(0.0);
        let b = self.lambda_b.last().copied().unwrap_or(0.0);
        if a <= b {
            ('A', a)
        } else {
            ('B', b)
        }
    }
}

fn descending(eig: HermitianEigen) -> (Vec<f64>, ComplexMatrix) {
    let n = eig.dim();
    let mut v = ComplexMatrix::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for (col, src) in (0..n).rev().enumerate() {
        values.push(eig.values[src]);
        for i in 0..n {
            v[(i, col)] = eig.vectors[(i, src)];
        }
    }
    (values, v)
}

pub fn instantaneous_basis(rho: &DensityMatrix, part: &Bipartition) -> Result<InstantaneousBasis> {
    part.check_dim(rho.dim())?;
    let rho_a = rho.partial_trace(part, Keep::A)?;
    let rho_b = rho.partial_trace(part, Keep::B)?;
    let (lambda_a, v_a) = descending(eigh(rho_a.matrix())?);
    let (lambda_b, v_b) = descending(eigh(rho_b.matrix())?);
    Ok(InstantaneousBasis {
        v_a,
        v_b,
        lambda_a,
        lambda_b,
    })
}

/// Superoperator `W = -i (H' ⊗ I - I ⊗ H'ᵀ)` with `H' = V† H V`.
#[derive(Debug, Clone)]
pub struct Liouvillian {
    w: ComplexMatrix,
    basis: ComplexMatrix,
}

impl Liouvillian {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.w
    }

    pub fn basis(&self) -> &ComplexMatrix {
        &self.basis
    }

    /// Hilbert-space dimension `d` (W is `d² x d²`).
    pub fn hilbert_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.w.apply(v)
    }

    /// `max |W + W†|`.
    pub fn skew_hermiticity_error(&self) -> f64 {
        (&self.w + &self.w.dagger()).max_abs()
    }

    /// `Σ_{m,m'} W_{m,m'}`.
    pub fn total_sum(&self) -> Complex64 {
        self.w.as_slice().iter().sum()
    }
}

pub fn build_liouvillian(h: &ComplexMatrix, basis: &ComplexMatrix) -> Result<Liouvillian> {
    check_hermitian(h)?;
    if basis.rows() != h.rows() || !basis.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "basis {}x{} for a Hamiltonian of dimension {}",
            basis.rows(),
            basis.cols(),
            h.rows()
        )));
    }
    let err = basis.unitarity_error();
    if err > 1e-9 {
        return Err(Error::InvalidConfig(format!(
            "basis is not unitary (deviation {err:.3e})"
        )));
    }
    let d = h.rows();
    let hp = basis.adjoint_matmul(&h.matmul(basis)).hermitian_part();
    let id = ComplexMatrix::identity(d);
    let gen = &kron(&hp, &id) - &kron(&id, &hp.transpose());
    let w = gen.scale(Complex64::new(0.0, -1.0));
    Ok(Liouvillian {
        w,
        basis: basis.clone(),
    })
}

fn check_full_rank(basis: &InstantaneousBasis) -> Result<()> {
    let (subsystem, min) = basis.min_eigenvalue();
    if min < MIN_MARGINAL_EIGENVALUE {
        return Err(Error::RankDeficient {
            subsystem,
            min_eigenvalue: min,
        });
    }
    Ok(())
}

fn log_marginal(lambda: &[f64], v: &ComplexMatrix) -> ComplexMatrix {
    let mut scaled = v.clone();
    for (j, &l) in lambda.iter().enumerate() {
        let ln = l.ln();
        for i in 0..v.rows() {
            scaled[(i, j)] *= ln;
        }
    }
    scaled.matmul(&v.dagger())
}

fn rate_from_parts(
    h: &ComplexMatrix,
    rho: &DensityMatrix,
    part: &Bipartition,
    basis: &InstantaneousBasis,
) -> f64 {
    let comm = h.commutator(rho.matrix());
    let ca = partial_trace_matrix(&comm, part.dim_a(), part.dim_b(), Keep::A);
    let cb = partial_trace_matrix(&comm, part.dim_a(), part.dim_b(), Keep::B);
    let ln_a = log_marginal(&basis.lambda_a, &basis.v_a);
    let ln_b = log_marginal(&basis.lambda_b, &basis.v_b);
    let t = ca.trace_product(&ln_a) + cb.trace_product(&ln_b);
    (Complex64::new(0.0, 1.0) * t).re
}

/// Analytic rate `İ = i [tr([H,ρ](ln ρ_A ⊗ I)) + tr([H,ρ](I ⊗ ln ρ_B))]`.
pub fn mutual_information_rate(
    h: &ComplexMatrix,
    rho: &DensityMatrix,
    part: &Bipartition,
) -> Result<f64> {
    check_hermitian(h)?;
    part.check_dim(rho.dim())?;
    part.check_dim(h.rows())?;
    let basis = instantaneous_basis(rho, part)?;
    check_full_rank(&basis)?;
    Ok(rate_from_parts(h, rho, part, &basis))
}

/// Rate channels of the entropy-production bound at one instant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyRates {
    pub i_dot: f64,
    pub s_dot_a: f64,
    pub s_dot_b: f64,
    /// Exchange-entropy magnitude `X_A + X_B`.
    pub s_dot_e: f64,
    pub coeff_a: f64,
    pub coeff_b: f64,
    /// Chosen so that `coeff_c · s_dot_e = coeff_a X_A + coeff_b X_B`.
    pub coeff_c: f64,
    /// `coeff_a s_dot_a + coeff_b s_dot_b + coeff_c s_dot_e`.
    pub rhs: f64,
    /// `rhs - i_dot`.
    pub slack: f64,
    /// Off-diagonal `(m, m')` pairs dropped by the rate cutoff.
    pub skipped_pairs: u64,
    /// Largest `|arg(W_{m,m'}/W_{m',m})|` among the evaluated pairs.
    pub max_phase: f64,
}

impl EntropyRates {
    pub fn is_violation(&self) -> bool {
        self.slack < -BOUND_TOL
    }
}

/// Liouville-space marginal weights `sqrt(λ'(i) λ'(j))` for index `m = (i, j)`.
fn liouville_weights(per_state: &[f64]) -> Vec<f64> {
    let d = per_state.len();
    let mut w = Vec::with_capacity(d * d);
    for &li in per_state {
        for &lj in per_state {
            w.push((li * lj).sqrt());
        }
    }
    w
}

/// Local stochastic entropy productions, exchange entropy and the
/// corresponding coefficients, evaluated in the instantaneous eigenbasis.
pub fn entropy_production_rates(
    h: &ComplexMatrix,
    rho: &DensityMatrix,
    part: &Bipartition,
) -> Result<EntropyRates> {
    check_hermitian(h)?;
    part.check_dim(rho.dim())?;
    part.check_dim(h.rows())?;
    let basis = instantaneous_basis(rho, part)?;
    check_full_rank(&basis)?;
    let i_dot = rate_from_parts(h, rho, part, &basis);

    let v = basis.unitary();
    let liou = build_liouvillian(h, &v)?;
    let w = liou.matrix();
    let d = part.dim();
    let dd = d * d;
    let rho_rot = v.adjoint_matmul(&rho.matrix().matmul(&v));
    let r = rho_rot.as_slice();

    let (db, da) = (part.dim_b(), part.dim_a());
    let lam_a: Vec<f64> = (0..d).map(|i| basis.lambda_a[i / db]).collect();
    let lam_b: Vec<f64> = (0..d).map(|i| basis.lambda_b[i % db]).collect();
    debug_assert_eq!(lam_a.len(), da * db);
    let pa = liouville_weights(&lam_a);
    let pb = liouville_weights(&lam_b);

    let coeff_a = dd as f64 * r.iter().zip(&pa).map(|(z, p)| z.norm() / p).sum::<f64>();
    let coeff_b = dd as f64 * r.iter().zip(&pb).map(|(z, p)| z.norm() / p).sum::<f64>();

    let ws = w.as_slice();
    let mut s_a = 0.0;
    let mut s_b = 0.0;
    let mut x_a = 0.0;
    let mut x_b = 0.0;
    let mut skipped = 0u64;
    let mut max_phase = 0.0f64;
    for m in 0..dd {
        for mp in 0..dd {
            let fwd = ws[m * dd + mp];
            let bwd = ws[mp * dd + m];
            if fwd.norm() < RATE_CUTOFF || bwd.norm() < RATE_CUTOFF {
                if m != mp && (fwd.norm() > 0.0 || bwd.norm() > 0.0) {
                    skipped += 1;
                }
                continue;
            }
            let ratio = fwd / bwd;
            let ln_w = ratio.ln();
            max_phase = max_phase.max(ln_w.im.abs());
            let ln_a = (ratio * (pa[mp] / pa[m])).ln();
            let ln_b = (ratio * (pb[mp] / pb[m])).ln();
            s_a += (fwd * ln_a).norm() * pa[mp];
            s_b += (fwd * ln_b).norm() * pb[mp];
            x_a += (fwd * ln_w).norm() * pa[mp];
            x_b += (fwd * ln_w).norm() * pb[mp];
        }
    }
    let s_dot_e = x_a + x_b;
    let exchange = coeff_a * x_a + coeff_b * x_b;
    let coeff_c = if s_dot_e > 0.0 {
        exchange / s_dot_e
    } else {
        0.5 * (coeff_a + coeff_b)
    };
    let rhs = coeff_a * s_a + coeff_b * s_b + exchange;
    Ok(EntropyRates {
        i_dot,
        s_dot_a: s_a,
        s_dot_b: s_b,
        s_dot_e,
        coeff_a,
        coeff_b,
        coeff_c,
        rhs,
        slack: rhs - i_dot,
        skipped_pairs: skipped,
        max_phase,
    })
}

/// Entropy-production channels along `ρ(t) = U(t) ρ(0) U(t)†`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyRateSeries {
    pub times: Vec<f64>,
    pub mutual_info: Vec<f64>,
    pub rates: Vec<EntropyRates>,
    pub regularization: f64,
    pub rate_cutoff: f64,
}

impl EntropyRateSeries {
    pub fn violations(&self) -> Vec<usize> {
        self.rates
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_violation())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn i_dot(&self) -> Vec<f64> {
        self.rates.iter().map(|r| r.i_dot).collect()
    }
}

/// Evaluates [`entropy_production_rates`] at each time, starting from
/// `(1 - δ) ρ(0) + δ I/d` with `δ = regularization`.
pub fn bound8_report(
    h: &ComplexMatrix,
    initial: &DensityMatrix,
    part: &Bipartition,
    times: &[f64],
    regularization: f64,
) -> Result<EntropyRateSeries> {
    check_hermitian(h)?;
    part.check_dim(initial.dim())?;
    part.check_dim(h.rows())?;
    if times.is_empty() {
        return Err(Error::InvalidConfig("empty time grid".into()));
    }
    let initial = initial.regularize(regularization)?;
    let eig = eigh(h)?;
    let mut mutual_info = Vec::with_capacity(times.len());
    let mut rates = Vec::with_capacity(times.len());
    for &t in times {
        let rho = initial.evolve(&eig.propagator(t))?;
        mutual_info.push(mutual_information(&rho, part)?);
        rates.push(entropy_production_rates(h, &rho, part)?);
    }
    Ok(EntropyRateSeries {
        times: times.to_vec(),
        mutual_info,
        rates,
        regularization,
        rate_cutoff: RATE_CUTOFF,
    })
}
