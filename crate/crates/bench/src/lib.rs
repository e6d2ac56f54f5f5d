//! Fixed inputs shared by the benchmarks.

use scramble_core::models::SykConfig;
use scramble_core::{ComplexMatrix, SeededRng};

/// SYK ensemble with N = 10, q = 4, J² = 2 on a single realization.
pub fn syk_config() -> SykConfig {
    SykConfig {
        n_majorana: 10,
        q: 4,
        j_squared: 2.0,
        seed: 2020,
        realizations: 1,
        time_grid: vec![0.0],
    }
}

/// Haar-random unitary of dimension `d` from a fixed seed.
pub fn unitary(d: usize) -> ComplexMatrix {
    SeededRng::new(1).haar_unitary(d)
}

/// Random Hermitian matrix of dimension `d` from a fixed seed.
pub fn hermitian(d: usize) -> ComplexMatrix {
    SeededRng::new(2).hermitian(d)
}
