use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::linalg::{eigh, HermitianEigen};
use super::matrix::{kron, ComplexMatrix};
use crate::error::{Error, Result};

/// Tolerance for Hermiticity, trace and positivity of density matrices.
pub const STATE_TOL: f64 = 1e-10;

/// Split of a qubit register into A (the leading `n_a` tensor factors) and B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub n_a: usize,
    pub n_b: usize,
}

impl Bipartition {
    pub fn new(n_a: usize, n_b: usize) -> Result<Self> {
        if n_a == 0 || n_b == 0 {
            return Err(Error::InvalidPartition(format!(
                "both sides need at least one qubit (got {n_a}|{n_b})"
            )));
        }
        if n_a + n_b > 30 {
            return Err(Error::InvalidPartition(format!(
                "{} qubits is beyond dense simulation",
                n_a + n_b
            )));
        }
        Ok(Self { n_a, n_b })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_a + self.n_b
    }

    pub fn dim_a(&self) -> usize {
        1 << self.n_a
    }

    pub fn dim_b(&self) -> usize {
        1 << self.n_b
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits()
    }

    pub fn check_dim(&self, d: usize) -> Result<()> {
        if d != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "partition {}|{} needs dimension {}, state has {d}",
                self.n_a,
                self.n_b,
                self.dim()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keep {
    A,
    B,
}

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates `mat` and wraps it. The stored matrix is the Hermitian part.
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::InvalidState(format!(
                "not square: {}x{}",
                mat.rows(),
                mat.cols()
            )));
        }
        if !mat.is_finite() {
            return Err(Error::NonFinite("density matrix entry".into()));
        }
        let herm = mat.hermiticity_error();
        if herm > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "not Hermitian (max deviation {herm:.3e})"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > STATE_TOL || tr.im.abs() > STATE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}")));
        }
        let mat = mat.hermitian_part();
        let min = eigh(&mat)?.values.first().copied().unwrap_or(0.0);
        if min < -STATE_TOL {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {min:.3e}"
            )));
        }
        Ok(Self { mat })
    }

    /// Wraps a matrix already known to be a valid state (e.g. `U ρ U^dagger`).
    /// Only the cheap invariants are checked in debug builds.
    pub(crate) fn new_unchecked(mat: ComplexMatrix) -> Self {
        debug_assert!(mat.hermiticity_error() < 1e-8);
        debug_assert!((mat.trace().re - 1.0).abs() < 1e-8);
        Self { mat }
    }

    /// `|ψ><ψ|` for a normalized vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>();
        if (norm - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "state vector has squared norm {norm}"
            )));
        }
        Ok(Self {
            mat: ComplexMatrix::outer(psi, psi),
        })
    }

    /// `|0...0><0...0|` on `n_qubits` qubits.
    pub fn zero_state(n_qubits: usize) -> Self {
        let d = 1usize << n_qubits;
        let mut mat = ComplexMatrix::zeros(d, d);
        mat[(0, 0)] = Complex64::new(1.0, 0.0);
        Self { mat }
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self {
            mat: ComplexMatrix::identity(d).scale_real(1.0 / d as f64),
        }
    }

    pub fn product(a: &DensityMatrix, b: &DensityMatrix) -> Self {
        Self {
            mat: kron(&a.mat, &b.mat),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// `tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.mat.trace_product(&self.mat).re
    }

    /// Eigenvalues ascending, with values in `[-STATE_TOL, 0)` clamped to zero.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eigh(&self.mat)?
            .values
            .into_iter()
            .map(|x| if (-STATE_TOL..0.0).contains(&x) { 0.0 } else { x })
            .collect())
    }

    pub fn eigen(&self) -> Result<HermitianEigen> {
        eigh(&self.mat)
    }

    /// `U ρ U^dagger`.
    pub fn evolve(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.rows() != self.dim() || !u.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "unitary {}x{} on a state of dimension {}",
                u.rows(),
                u.cols(),
                self.dim()
            )));
        }
        let m = u.matmul(&self.mat).matmul(&u.dagger()).hermitian_part();
        Ok(Self::new_unchecked(m))
    }

    /// Mixes in the maximally mixed state: `(1-δ) ρ + δ I/d`.
    pub fn regularize(&self, delta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&delta) {
            return Err(Error::InvalidConfig(format!(
                "regularization weight {delta} outside [0, 1]"
            )));
        }
        let d = self.dim();
        let mut m = self.mat.scale_real(1.0 - delta);
        for i in 0..d {
            m[(i, i)] += Complex64::new(delta / d as f64, 0.0);
        }
        Ok(Self { mat: m })
    }

    pub fn partial_trace(&self, part: &Bipartition, keep: Keep) -> Result<Self> {
        partial_trace(self, part, keep)
    }
}

/// Reduced state of one side of `part`.
pub fn partial_trace(rho: &DensityMatrix, part: &Bipartition, keep: Keep) -> Result<DensityMatrix> {
    part.check_dim(rho.dim())?;
    Ok(DensityMatrix::new_unchecked(partial_trace_matrix(
        rho.matrix(),
        part.dim_a(),
        part.dim_b(),
        keep,
    )))
}

/// Partial trace of an arbitrary `(da*db) x (da*db)` operator.
pub fn partial_trace_matrix(m: &ComplexMatrix, da: usize, db: usize, keep: Keep) -> ComplexMatrix {
    let d = da * db;
    assert_eq!(m.rows(), d);
    assert_eq!(m.cols(), d);
    let s = m.as_slice();
    match keep {
        Keep::A => {
            let mut out = ComplexMatrix::zeros(da, da);
            for i in 0..da {
                for j in 0..da {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for k in 0..db {
                        acc += s[(i * db + k) * d + j * db + k];
                    }
                    out[(i, j)] = acc;
                }
            }
            out
        }
        Keep::B => {
            let mut out = ComplexMatrix::zeros(db, db);
            for k in 0..da {
                for i in 0..db {
                    let row = (k * db + i) * d + k * db;
                    for j in 0..db {
                        out[(i, j)] += s[row + j];
                    }
                }
            }
            out
        }
    }
}

/// Reduced state of side A from a pure state vector, `ψ ψ^dagger` traced over B.
pub fn reduced_from_vector(psi: &[Complex64], da: usize, db: usize, keep: Keep) -> ComplexMatrix {
    assert_eq!(psi.len(), da * db);
    match keep {
        Keep::A => {
            let mut out = ComplexMatrix::zeros(da, da);
            for i in 0..da {
                for j in 0..=i {
                    let acc: Complex64 = (0..db)
                        .map(|k| psi[i * db + k] * psi[j * db + k].conj())
                        .sum();
                    out[(i, j)] = acc;
                    out[(j, i)] = acc.conj();
                }
            }
            out
        }
        Keep::B => {
            let mut out = ComplexMatrix::zeros(db, db);
            for i in 0..db {
                for j in 0..=i {
                    let acc: Complex64 = (0..da)
                        .map(|k| psi[k * db + i] * psi[k * db + j].conj())
                        .sum();
                    out[(i, j)] = acc;
                    out[(j, i)] = acc.conj();
                }
            }
            out
        }
    }
}
