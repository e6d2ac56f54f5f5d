use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::density::DensityMatrix;
use super::matrix::ComplexMatrix;

/// Deterministic random source for disorder draws and test states.
///
/// Backed by ChaCha8, whose output is identical on every platform. Independent
/// work units (e.g. disorder realizations) use [`SeededRng::for_stream`],
/// which selects a disjoint ChaCha stream for the same seed.
#[derive(Debug, Clone)]
pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn for_stream(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        Self { inner }
    }

    pub fn stream(&self) -> u64 {
        self.inner.get_stream()
    }

    pub fn word_pos(&self) -> u128 {
        self.inner.get_word_pos()
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.inner.random_range(0..n)
    }

    pub fn gaussian(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    /// Complex normal with `E|z|^2 = 1`.
    pub fn complex_gaussian(&mut self) -> Complex64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        Complex64::new(self.gaussian() * s, self.gaussian() * s)
    }

    pub fn ginibre(&mut self, rows: usize, cols: usize) -> ComplexMatrix {
        let data = (0..rows * cols).map(|_| self.complex_gaussian()).collect();
        ComplexMatrix::from_row_major(rows, cols, data).expect("finite gaussian entries")
    }

    /// Haar-random unitary from the QR decomposition of a Ginibre matrix,
    /// with the phases of `diag(R)` absorbed into `Q`.
    pub fn haar_unitary(&mut self, d: usize) -> ComplexMatrix {
        let g = self.ginibre(d, d);
        let qr = DMatrix::from_row_slice(d, d, g.as_slice()).qr();
        let q = qr.q();
        let r = qr.r();
        let mut u = ComplexMatrix::zeros(d, d);
        for j in 0..d {
            let rjj = r[(j, j)];
            let phase = if rjj.norm() > 0.0 {
                rjj / rjj.norm()
            } else {
                Complex64::new(1.0, 0.0)
            };
            for i in 0..d {
                u[(i, j)] = q[(i, j)] * phase;
            }
        }
        u
    }

    /// Haar-random normalized state vector.
    pub fn haar_state(&mut self, d: usize) -> Vec<Complex64> {
        let mut v: Vec<Complex64> = (0..d).map(|_| self.complex_gaussian()).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut v {
            *z /= norm;
        }
        v
    }

    /// GUE-like Hermitian matrix `(G + G^dagger)/2`.
    pub fn hermitian(&mut self, d: usize) -> ComplexMatrix {
        self.ginibre(d, d).hermitian_part()
    }

    /// Full-rank mixed state `G G^dagger / tr(G G^dagger)` (Hilbert–Schmidt measure).
    pub fn mixed_state(&mut self, d: usize) -> DensityMatrix {
        let g = self.ginibre(d, d);
        let m = g.matmul(&g.dagger());
        let tr = m.trace().re;
        DensityMatrix::new(m.scale_real(1.0 / tr).hermitian_part())
            .expect("Ginibre construction yields a valid state")
    }
}
