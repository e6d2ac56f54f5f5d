//! Pauli strings and their fast action as signed permutations.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qdense::{gates, kron_all, ComplexMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> ComplexMatrix {
        match self {
            Pauli::I => ComplexMatrix::identity(2),
            Pauli::X => gates::pauli_x(),
            Pauli::Y => gates::pauli_y(),
            Pauli::Z => gates::pauli_z(),
        }
    }

    fn flips(self) -> bool {
        matches!(self, Pauli::X | Pauli::Y)
    }

    fn signs(self) -> bool {
        matches!(self, Pauli::Y | Pauli::Z)
    }

    fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Tensor product of single-qubit Paulis; qubit 0 is the leading tensor factor.
///
/// Acting on a computational basis state, `P|b> = i^{#Y} (-1)^{|b & z|} |b ^ x>`,
/// so products with a Pauli string cost O(d) per column instead of a matmul.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    labels: Vec<Pauli>,
    x_mask: usize,
    z_mask: usize,
    n_y: u8,
}

impl PauliString {
    pub fn new(labels: Vec<Pauli>) -> Self {
        let n = labels.len();
        let mut x_mask = 0;
        let mut z_mask = 0;
        let mut n_y = 0;
        for (q, &p) in labels.iter().enumerate() {
            let bit = 1 << (n - 1 - q);
            if p.flips() {
                x_mask |= bit;
            }
            if p.signs() {
                z_mask |= bit;
            }
            if p == Pauli::Y {
                n_y += 1;
            }
        }
        Self {
            labels,
            x_mask,
            z_mask,
            n_y: (n_y % 4) as u8,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(vec![Pauli::I; n])
    }

    /// The `index`-th string of [`enumerate`] order (base-4 digits, qubit 0 most significant).
    pub fn from_index(n: usize, mut index: u64) -> Self {
        let mut labels = vec![Pauli::I; n];
        for q in (0..n).rev() {
            labels[q] = Pauli::ALL[(index % 4) as usize];
            index /= 4;
        }
        Self::new(labels)
    }

    pub fn labels(&self) -> &[Pauli] {
        &self.labels
    }

    pub fn n_qubits(&self) -> usize {
        self.labels.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.labels.len()
    }

    pub fn is_identity(&self) -> bool {
        self.labels.iter().all(|&p| p == Pauli::I)
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &PauliString) -> PauliString {
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Self::new(labels)
    }

    /// Embeds a string on the leading `n_a` qubits into `n_a + n_b` qubits.
    pub fn on_a(&self, n_b: usize) -> PauliString {
        self.tensor(&Self::identity(n_b))
    }

    /// Embeds a string on the trailing `n_b` qubits into `n_a + n_b` qubits.
    pub fn on_b(&self, n_a: usize) -> PauliString {
        Self::identity(n_a).tensor(self)
    }

    #[inline]
    fn phase(&self, b: usize) -> Complex64 {
        let k = (self.n_y as u32 + 2 * (b & self.z_mask).count_ones()) % 4;
        match k {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    pub fn matrix(&self) -> ComplexMatrix {
        let factors: Vec<ComplexMatrix> = self.labels.iter().map(|p| p.matrix()).collect();
        kron_all(factors.iter())
    }

    /// `P v`.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
        self.apply_into(v, &mut out);
        out
    }

    pub fn apply_into(&self, v: &[Complex64], out: &mut [Complex64]) {
        debug_assert_eq!(v.len(), self.dim());
        for (b, &x) in v.iter().enumerate() {
            out[b ^ self.x_mask] = self.phase(b) * x;
        }
    }

    /// `P M`.
    pub fn left_mul(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let d = self.dim();
        assert_eq!(m.rows(), d, "Pauli string dimension mismatch");
        let cols = m.cols();
        let mut out = ComplexMatrix::zeros(d, cols);
        let src = m.as_slice();
        let dst = out.as_mut_slice();
        for b in 0..d {
            let ph = self.phase(b);
            let r = b ^ self.x_mask;
            for (o, &x) in dst[r * cols..(r + 1) * cols]
                .iter_mut()
                .zip(&src[b * cols..(b + 1) * cols])
            {
                *o = ph * x;
            }
        }
        out
    }

    /// `M P`.
    pub fn right_mul(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let d = self.dim();
        assert_eq!(m.cols(), d, "Pauli string dimension mismatch");
        let rows = m.rows();
        let mut out = ComplexMatrix::zeros(rows, d);
        let src = m.as_slice();
        let dst = out.as_mut_slice();
        for i in 0..rows {
            for b in 0..d {
                dst[i * d + b] = src[i * d + (b ^ self.x_mask)] * self.phase(b);
            }
        }
        out
    }

    /// `P M P`, used for Pauli twirls and OTOC insertions.
    pub fn conjugate(&self, m: &ComplexMatrix) -> ComplexMatrix {
        self.right_mul(&self.left_mul(m))
    }

    /// Heisenberg-evolved string `U^dagger P U`.
    pub fn heisenberg(&self, u: &ComplexMatrix) -> ComplexMatrix {
        u.adjoint_matmul(&self.left_mul(u))
    }
}

/// All `4^n` strings on `n` qubits in canonical order (identity first).
pub fn enumerate(n: usize) -> impl Iterator<Item = PauliString> {
    (0..4u64.pow(n as u32)).map(move |k| PauliString::from_index(n, k))
}

pub fn count(n: usize) -> u64 {
    4u64.pow(n as u32)
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.labels {
            write!(f, "{}", p.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                other => Err(Error::Parse(format!("unknown Pauli label '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(labels))
    }
}
