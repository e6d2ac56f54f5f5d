//! Dense complex linear algebra for Hilbert-space dimensions up to a few hundred.

mod density;
mod linalg;
mod matrix;
mod rng;

pub use density::{
    partial_trace, partial_trace_matrix, reduced_from_vector, Bipartition, DensityMatrix, Keep,
    STATE_TOL,
};
pub use linalg::{
    check_hermitian, eigh, evolve_unitary, hermitian_function, HermitianEigen, HERMITIAN_TOL,
};
pub use matrix::{gates, kron, kron_all, ComplexMatrix};
pub use rng::SeededRng;
