use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qdense::{gates, ComplexMatrix};
use crate::scrambling::Propagator;

/// Unitarity tolerance for individual gates.
pub const GATE_UNITARITY_TOL: f64 = 1e-12;

/// One entry of a circuit file: `{"name": "RZZ", "targets": [0, 1], "angle": 1.57}`.
///
/// `matrix` is only used by `CUSTOM` gates: rows of `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateSpec {
    pub name: String,
    pub targets: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<[f64; 2]>>>,
}

impl GateSpec {
    pub fn new(name: &str, targets: &[usize], angle: Option<f64>) -> Self {
        Self {
            name: name.to_string(),
            targets: targets.to_vec(),
            angle,
            matrix: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitSpec {
    pub n_qubits: usize,
    pub gates: Vec<GateSpec>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    H,
    X,
    Y,
    Z,
    S,
    Cz,
    Cnot,
    Rzz(f64),
    Rx(f64),
    Custom(ComplexMatrix),
}

impl Gate {
    pub fn arity(&self) -> usize {
        match self {
            Gate::Cz | Gate::Cnot | Gate::Rzz(_) => 2,
            Gate::Custom(m) => m.rows().trailing_zeros() as usize,
            _ => 1,
        }
    }

    pub fn is_parametrized(&self) -> bool {
        matches!(self, Gate::Rzz(_) | Gate::Rx(_))
    }

    /// Same gate with its angle multiplied by `s` (fixed gates unchanged).
    pub fn scaled(&self, s: f64) -> Gate {
        match self {
            Gate::Rzz(a) => Gate::Rzz(a * s),
            Gate::Rx(a) => Gate::Rx(a * s),
            other => other.clone(),
        }
    }

    /// Local matrix on the gate's own qubits (first target = leading factor).
    pub fn matrix(&self) -> ComplexMatrix {
        let c = Complex64::new;
        let z = c(0.0, 0.0);
        let o = c(1.0, 0.0);
        match self {
            Gate::H => gates::hadamard(),
            Gate::X => gates::pauli_x(),
            Gate::Y => gates::pauli_y(),
            Gate::Z => gates::pauli_z(),
            Gate::S => ComplexMatrix::from_diagonal(&[o, c(0.0, 1.0)]),
            Gate::Cz => ComplexMatrix::from_real_diagonal(&[1.0, 1.0, 1.0, -1.0]),
            Gate::Cnot => ComplexMatrix::from_rows(&[
                &[o, z, z, z],
                &[z, o, z, z],
                &[z, z, z, o],
                &[z, z, o, z],
            ]),
            Gate::Rzz(theta) => {
                let m = Complex64::from_polar(1.0, -theta / 2.0);
                let p = Complex64::from_polar(1.0, theta / 2.0);
                ComplexMatrix::from_diagonal(&[m, p, p, m])
            }
            Gate::Rx(theta) => {
                let (s, co) = (theta / 2.0).sin_cos();
                ComplexMatrix::from_rows(&[&[c(co, 0.0), c(0.0, -s)], &[c(0.0, -s), c(co, 0.0)]])
            }
            Gate::Custom(m) => m.clone(),
        }
    }
}

/// A gate bound to its target qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PlacedGate {
    pub gate: Gate,
    pub targets: Vec<usize>,
}

fn parse_gate(index: usize, spec: &GateSpec, n_qubits: usize) -> Result<PlacedGate> {
    let bad = |reason: String| Error::MalformedGate { index, reason };
    let angle = || {
        spec.angle
            .filter(|a| a.is_finite())
            .ok_or_else(|| bad(format!("{} needs a finite `angle`", spec.name)))
    };
    let gate = match spec.name.to_ascii_uppercase().as_str() {
        "H" => Gate::H,
        "X" => Gate::X,
        "Y" => Gate::Y,
        "Z" => Gate::Z,
        "S" => Gate::S,
        "CZ" => Gate::Cz,
        "CNOT" | "CX" => Gate::Cnot,
        "RZZ" => Gate::Rzz(angle()?),
        "RX" => Gate::Rx(angle()?),
        "CUSTOM" => {
            let rows = spec
                .matrix
                .as_ref()
                .ok_or_else(|| bad("CUSTOM gate needs a `matrix`".into()))?;
            let dim = 1usize << spec.targets.len();
            if spec.targets.len() != 2 || rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                return Err(bad(format!(
                    "CUSTOM gate must be a 4x4 matrix on two targets (got {} targets, {} rows)",
                    spec.targets.len(),
                    rows.len()
                )));
            }
            let data = rows
                .iter()
                .flatten()
                .map(|&[re, im]| Complex64::new(re, im))
                .collect();
            let m = ComplexMatrix::from_row_major(dim, dim, data).map_err(|e| bad(e.to_string()))?;
            Gate::Custom(m)
        }
        other => return Err(bad(format!("unknown gate name '{other}'"))),
    };
    if spec.angle.is_some() && !gate.is_parametrized() {
        return Err(bad(format!("gate {} takes no angle", spec.name)));
    }
    if spec.targets.len() != gate.arity() {
        return Err(bad(format!(
            "{} acts on {} qubit(s), got {} target(s)",
            spec.name,
            gate.arity(),
            spec.targets.len()
        )));
    }
    for (k, &t) in spec.targets.iter().enumerate() {
        if t >= n_qubits {
            return Err(bad(format!("target {t} outside register of {n_qubits} qubits")));
        }
        if spec.targets[..k].contains(&t) {
            return Err(bad(format!("repeated target {t}")));
        }
    }
    let err = gate.matrix().unitarity_error();
    if err > GATE_UNITARITY_TOL {
        return Err(bad(format!("matrix is not unitary (deviation {err:.3e})")));
    }
    Ok(PlacedGate {
        gate,
        targets: spec.targets.clone(),
    })
}

impl CircuitSpec {
    pub fn parse_gates(&self) -> Result<Vec<PlacedGate>> {
        if self.n_qubits == 0 || self.n_qubits > 12 {
            return Err(Error::InvalidConfig(format!(
                "n_qubits must be in 1..=12 (got {})",
                self.n_qubits
            )));
        }
        self.gates
            .iter()
            .enumerate()
            .map(|(i, g)| parse_gate(i, g, self.n_qubits))
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        self.parse_gates().map(|_| ())
    }

    /// Parses a circuit file, reporting line/column for syntax errors and
    /// the offending gate for semantic ones.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: CircuitSpec = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
        })?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("circuit serializes")
    }
}

/// Full-register matrix of a gate acting on `targets`.
pub fn embed_gate(local: &ComplexMatrix, targets: &[usize], n_qubits: usize) -> ComplexMatrix {
    let d = 1usize << n_qubits;
    let k = targets.len();
    let bits: Vec<usize> = targets.iter().map(|&t| n_qubits - 1 - t).collect();
    let target_mask: usize = bits.iter().map(|&b| 1 << b).sum();
    let sub = |x: usize| -> usize {
        bits.iter()
            .enumerate()
            .map(|(pos, &b)| ((x >> b) & 1) << (k - 1 - pos))
            .sum()
    };
    let mut out = ComplexMatrix::zeros(d, d);
    for r in 0..d {
        let rs = sub(r);
        for c in 0..d {
            if (r & !target_mask) != (c & !target_mask) {
                continue;
            }
            out[(r, c)] = local[(rs, sub(c))];
        }
    }
    out
}

fn product(gates: &[PlacedGate], n_qubits: usize, scale: Option<f64>) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(1 << n_qubits);
    for g in gates {
        let gate = match scale {
            Some(s) => g.gate.scaled(s),
            None => g.gate.clone(),
        };
        u = embed_gate(&gate.matrix(), &g.targets, n_qubits).matmul(&u);
    }
    u
}

/// Unitary of the gate list, first gate applied first (`U = G_k ⋯ G_1`).
pub fn realize_circuit(spec: &CircuitSpec, n_qubits: usize) -> Result<ComplexMatrix> {
    if spec.n_qubits != n_qubits {
        return Err(Error::DimensionMismatch(format!(
            "circuit declares {} qubits, caller expects {n_qubits}",
            spec.n_qubits
        )));
    }
    let gates = spec.parse_gates()?;
    Ok(product(&gates, n_qubits, None))
}

/// Circuit whose parametrized angles are scaled linearly with time:
/// `U(t)` uses `θ·t` for every `RZZ`/`RX`, fixed gates unchanged.
#[derive(Debug, Clone)]
pub struct ScheduledCircuit {
    n_qubits: usize,
    gates: Vec<PlacedGate>,
}

impl ScheduledCircuit {
    pub fn new(spec: &CircuitSpec) -> Result<Self> {
        Ok(Self {
            n_qubits: spec.n_qubits,
            gates: spec.parse_gates()?,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }
}

impl Propagator for ScheduledCircuit {
    fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    fn unitary(&self, t: f64) -> Result<ComplexMatrix> {
        Ok(product(&self.gates, self.n_qubits, Some(t)))
    }
}

/// Built-in three-qubit scrambler: `H⊗H⊗H`, `RZZ(π/2)` on every pair,
/// `H⊗H⊗H`, `RZZ(π/2)` on every pair. With angles scaled by `t ∈ [0, 1]`
/// the Hadamard layers cancel at `t = 0` and the full circuit maximally
/// entangles the first qubit with the other two.
pub fn scrambler_preset() -> CircuitSpec {
    let mut gates = Vec::new();
    for _ in 0..2 {
        for q in 0..3 {
            gates.push(GateSpec::new("H", &[q], None));
        }
        for pair in [[0, 1], [1, 2], [0, 2]] {
            gates.push(GateSpec::new("RZZ", &pair, Some(FRAC_PI_2)));
        }
    }
    CircuitSpec { n_qubits: 3, gates }
}
