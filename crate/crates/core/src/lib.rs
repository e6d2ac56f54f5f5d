//! Numerical diagnostics for information scrambling in small, exactly
//! diagonalizable qubit systems.
//!
//! The crate is organised bottom-up:
//!
//! - [`qdense`]: dense complex matrices, density matrices, partial traces,
//!   Hermitian eigendecomposition and a seeded random source.
//! - [`entropy`]: von Neumann / Rényi-2 entropies and mutual informations.
//! - [`pauli`] and [`scrambling`]: Pauli-string enumeration, OTOCs, the
//!   Pauli-averaged OTOC and the mutual-information lower bound report.
//! - [`models`]: SYK Hamiltonians through the Jordan–Wigner mapping and
//!   gate-list circuits.
//! - [`liouville`]: vectorized (Fock–Liouville) dynamics, the analytic rate of
//!   mutual information and the entropy-production upper bound.
//!
//! All energies and times are dimensionless with ħ = 1. Entropies are in nats.

pub mod entropy;
pub mod error;
pub mod liouville;
pub mod models;
pub mod pauli;
pub mod qdense;
pub mod scrambling;

pub use error::{Error, Result};
pub use qdense::{Bipartition, ComplexMatrix, DensityMatrix, Keep, SeededRng};

pub use num_complex::Complex64;
