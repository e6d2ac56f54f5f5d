use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};
use crate::qdense::ComplexMatrix;

/// Pauli string of the Majorana operator `ψ_i` (1-based) without the `1/√2` factor.
///
/// With `j = ⌈i/2⌉`, `ψ_{2j-1} ∝ Z_1 ⋯ Z_{j-1} X_j` and `ψ_{2j} ∝ Z_1 ⋯ Z_{j-1} Y_j`.
pub fn majorana_string(i: usize, n_qubits: usize) -> Result<PauliString> {
    let n = 2 * n_qubits;
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let site = (i - 1) / 2;
    let mut labels = vec![Pauli::I; n_qubits];
    for l in labels.iter_mut().take(site) {
        *l = Pauli::Z;
    }
    labels[site] = if i % 2 == 1 { Pauli::X } else { Pauli::Y };
    Ok(PauliString::new(labels))
}

/// Majorana operator `ψ_i` on `n_qubits` qubits, normalized to `{ψ_i, ψ_j} = δ_ij`.
pub fn jordan_wigner_majorana(i: usize, n_qubits: usize) -> Result<ComplexMatrix> {
    Ok(majorana_string(i, n_qubits)?
        .matrix()
        .scale_real(std::f64::consts::FRAC_1_SQRT_2))
}
