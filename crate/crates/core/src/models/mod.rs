//! Concrete scrambling dynamics: SYK Hamiltonians and gate-list circuits.

mod circuit;
mod jw;
mod syk;

pub use circuit::{
    embed_gate, realize_circuit, scrambler_preset, CircuitSpec, Gate, GateSpec, PlacedGate,
    ScheduledCircuit, GATE_UNITARITY_TOL,
};
pub use jw::{jordan_wigner_majorana, majorana_string};
pub use syk::{
    build_syk_hamiltonian, syk_hamiltonian_from_couplings, syk_trajectory, SykConfig,
    SykTrajectory,
};
