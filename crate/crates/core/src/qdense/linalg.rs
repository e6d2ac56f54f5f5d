use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Tolerance for Hermiticity checks, scaled by `max(1, max|h|)`.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Eigendecomposition `h = V diag(values) V^dagger` of a Hermitian matrix.
///
/// Eigenvalues are ascending. Every eigenvector has its largest-magnitude
/// component real and positive (first such index on ties), so identical
/// inputs always produce identical bases.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

pub fn check_hermitian(h: &ComplexMatrix) -> Result<()> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "expected a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let err = h.hermiticity_error();
    if err > HERMITIAN_TOL * h.max_abs().max(1.0) {
        return Err(Error::NotHermitian(err));
    }
    Ok(())
}

pub fn eigh(h: &ComplexMatrix) -> Result<HermitianEigen> {
    check_hermitian(h)?;
    if !h.is_finite() {
        return Err(Error::NonFinite("eigh input".into()));
    }
    let n = h.rows();
    if n == 0 {
        return Ok(HermitianEigen {
            values: Vec::new(),
            vectors: ComplexMatrix::identity(0),
        });
    }
    let sym = h.hermitian_part();
    let m = DMatrix::from_row_slice(n, n, sym.as_slice());
    let dec = SymmetricEigen::try_new(m, f64::EPSILON, 0)
        .ok_or_else(|| Error::NonFinite("eigendecomposition did not converge".into()))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| dec.eigenvalues[a].total_cmp(&dec.eigenvalues[b]));

    let mut values = Vec::with_capacity(n);
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (col, &src) in order.iter().enumerate() {
        values.push(dec.eigenvalues[src]);
        let v: Vec<Complex64> = (0..n).map(|i| dec.eigenvectors[(i, src)]).collect();
        let v = fix_phase(v);
        for (i, z) in v.into_iter().enumerate() {
            vectors[(i, col)] = z;
        }
    }
    Ok(HermitianEigen { values, vectors })
}

fn fix_phase(mut v: Vec<Complex64>) -> Vec<Complex64> {
    let max = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return v;
    }
    let pivot = v
        .iter()
        .position(|z| z.norm() >= max * (1.0 - 1e-12))
        .unwrap_or(0);
    let phase = v[pivot].conj() / v[pivot].norm();
    for z in &mut v {
        *z *= phase;
    }
    v[pivot] = Complex64::new(v[pivot].re, 0.0);
    v
}

impl HermitianEigen {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    /// `V diag(f(λ)) V^dagger`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let n = self.dim();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            let fj = f(self.values[j]);
            for i in 0..n {
                scaled[(i, j)] *= fj;
            }
        }
        scaled.matmul(&self.vectors.dagger())
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.reconstruct_with(|x| Complex64::new(x, 0.0))
    }

    /// `exp(-i h t)`.
    pub fn propagator(&self, t: f64) -> ComplexMatrix {
        self.reconstruct_with(|e| Complex64::from_polar(1.0, -e * t))
    }
}

/// `U(t) = exp(-i h t)` through the Hermitian eigendecomposition of `h`.
pub fn evolve_unitary(h: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    Ok(eigh(h)?.propagator(t))
}

/// Applies a real function to a Hermitian matrix through its spectrum.
pub fn hermitian_function(h: &ComplexMatrix, f: impl Fn(f64) -> f64) -> Result<ComplexMatrix> {
    Ok(eigh(h)?.reconstruct_with(|x| Complex64::new(f(x), 0.0)))
}
