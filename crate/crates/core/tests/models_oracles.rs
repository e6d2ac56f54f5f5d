mod common;

use std::collections::HashSet;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use scramble_core::models::{
    build_syk_hamiltonian, jordan_wigner_majorana, realize_circuit, syk_trajectory, CircuitSpec,
    GateSpec, SykConfig,
};
use scramble_core::qdense::evolve_unitary;
use scramble_core::scrambling::OtocConfig;
use scramble_core::{Bipartition, ComplexMatrix, DensityMatrix, SeededRng};

fn syk(n_majorana: usize, realizations: usize) -> SykConfig {
    SykConfig {
        n_majorana,
        q: 4,
        j_squared: 2.0,
        seed: 7,
        realizations,
        time_grid: vec![0.0, 0.5, 1.5],
    }
}

#[test]
fn majoranas_satisfy_the_clifford_algebra_exhaustively() {
    for n_majorana in [2usize, 4, 6, 8, 10] {
        let nq = n_majorana / 2;
        let d = 1usize << nq;
        let psis: Vec<ComplexMatrix> = (1..=n_majorana)
            .map(|i| jordan_wigner_majorana(i, nq).unwrap())
            .collect();
        for (i, a) in psis.iter().enumerate() {
            for (j, b) in psis.iter().enumerate() {
                let anti = &a.matmul(b) + &b.matmul(a);
                let want = if i == j {
                    ComplexMatrix::identity(d)
                } else {
                    ComplexMatrix::zeros(d, d)
                };
                assert!(anti.max_abs_diff(&want) <= 1e-12, "N={n_majorana} ({i},{j})");
            }
        }
    }
}

#[test]
fn syk_hamiltonian_conserves_parity() {
    let cfg = syk(10, 1);
    let d = 32;
    let parity: Vec<f64> = (0..d)
        .map(|k: usize| if k.count_ones().is_multiple_of(2) { 1.0 } else { -1.0 })
        .collect();
    let p = ComplexMatrix::from_real_diagonal(&parity);
    for k in 0..3 {
        let h = build_syk_hamiltonian(&cfg, k).unwrap();
        assert!(h.commutator(&p).max_abs() <= 1e-10);
    }
}

#[test]
fn syk_hamiltonian_matches_direct_majorana_products() {
    let cfg = SykConfig {
        n_majorana: 6,
        q: 4,
        j_squared: 1.3,
        seed: 11,
        realizations: 1,
        time_grid: vec![0.0],
    };
    let h = build_syk_hamiltonian(&cfg, 0).unwrap();
    let couplings = cfg.couplings(0);
    let psis: Vec<Mat> = (1..=6)
        .map(|i| from_lib(&jordan_wigner_majorana(i, 3).unwrap()))
        .collect();
    let mut oracle = zeros(8);
    let mut k = 0;
    for a in 0..6 {
        for b in (a + 1)..6 {
            for cc in (b + 1)..6 {
                for dd in (cc + 1)..6 {
                    let prod = mul(&mul(&psis[a], &psis[b]), &mul(&psis[cc], &psis[dd]));
                    // i^{q/2} = i^2 = -1
                    oracle = add(&oracle, &scale(&prod, c(-couplings[k], 0.0)));
                    k += 1;
                }
            }
        }
    }
    assert_eq!(k, couplings.len());
    assert!(max_diff(&from_lib(&h), &oracle) < 1e-13);
}

#[test]
fn coupling_variance_matches_over_many_draws() {
    let cfg = syk(10, 1);
    let target = cfg.coupling_variance();
    assert!((target - 0.012).abs() < 1e-15);
    let n = 100_000;
    let draws: Vec<f64> = (0..)
        .flat_map(|k| cfg.couplings(k))
        .take(n)
        .collect();
    let mean = draws.iter().sum::<f64>() / n as f64;
    let var = draws.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n as f64 - 1.0);
    let se = target * (2.0 / (n as f64 - 1.0)).sqrt();
    assert!((var - target).abs() <= 3.0 * se, "var {var} target {target} se {se}");
    assert!(mean.abs() <= 3.0 * (target / n as f64).sqrt());
}

#[test]
fn realization_streams_do_not_collide() {
    let cfg = syk(10, 1);
    let mut seen = HashSet::new();
    for k in 0..200 {
        for x in cfg.couplings(k) {
            assert!(seen.insert(x.to_bits()), "repeated draw in realization {k}");
        }
    }
}

#[test]
fn invalid_ensembles_are_rejected() {
    let mut c = syk(10, 1);
    c.n_majorana = 11;
    assert!(build_syk_hamiltonian(&c, 0).is_err());
    let mut c = syk(10, 1);
    c.q = 12;
    assert!(build_syk_hamiltonian(&c, 0).is_err());
}

#[test]
fn trajectories_are_bitwise_reproducible() {
    let cfg = syk(8, 3);
    let part = Bipartition::new(1, 3).unwrap();
    let init = DensityMatrix::zero_state(4);
    let a = syk_trajectory(&cfg, &part, &init, &OtocConfig::default()).unwrap();
    let b = syk_trajectory(&cfg, &part, &init, &OtocConfig::default()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.average.mutual_info[0], 0.0);
    let n = a.realizations.len() as f64;
    for k in 0..cfg.time_grid.len() {
        let mean = a.realizations.iter().map(|r| r.mutual_info[k]).sum::<f64>() / n;
        assert!((a.average.mutual_info[k] - mean).abs() < 1e-15);
    }
}

#[test]
fn syk_evolution_keeps_valid_states() {
    let cfg = syk(8, 1);
    let h = build_syk_hamiltonian(&cfg, 0).unwrap();
    let rho = DensityMatrix::zero_state(4);
    for t in [0.1, 1.0, 5.0, 25.0] {
        let out = rho.evolve(&evolve_unitary(&h, t).unwrap()).unwrap();
        assert!(DensityMatrix::new(out.matrix().clone()).is_ok());
    }
}

/// Local gate matrix for the state-vector oracle.
fn oracle_gate(name: &str, angle: f64) -> Mat {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    match name {
        "H" => vec![vec![c(s, 0.0), c(s, 0.0)], vec![c(s, 0.0), c(-s, 0.0)]],
        "X" => vec![vec![z, o], vec![o, z]],
        "S" => vec![vec![o, z], vec![z, c(0.0, 1.0)]],
        "RX" => {
            let (sn, cs) = (angle / 2.0).sin_cos();
            vec![vec![c(cs, 0.0), c(0.0, -sn)], vec![c(0.0, -sn), c(cs, 0.0)]]
        }
        "CNOT" => {
            let mut m = zeros(4);
            m[0][0] = o;
            m[1][1] = o;
            m[2][3] = o;
            m[3][2] = o;
            m
        }
        "CZ" => {
            let mut m = eye(4);
            m[3][3] = -o;
            m
        }
        "RZZ" => {
            let mut m = zeros(4);
            for (k, sign) in [1.0, -1.0, -1.0, 1.0].iter().enumerate() {
                m[k][k] = Complex64::from_polar(1.0, -sign * angle / 2.0);
            }
            m
        }
        _ => unreachable!(),
    }
}

/// Applies a gate to a state vector by direct bit manipulation (qubit 0 is the most significant bit).
fn apply_gate(state: &[Complex64], local: &Mat, targets: &[usize], n: usize) -> Vec<Complex64> {
    let k = targets.len();
    let mut out = vec![c(0.0, 0.0); state.len()];
    for (idx, amp) in state.iter().enumerate() {
        if amp.norm() == 0.0 {
            continue;
        }
        let mut col = 0;
        for &t in targets {
            col = (col << 1) | ((idx >> (n - 1 - t)) & 1);
        }
        for row in 0..(1 << k) {
            let mut j = idx;
            for (pos, &t) in targets.iter().enumerate() {
                let bit = (row >> (k - 1 - pos)) & 1;
                let shift = n - 1 - t;
                j = (j & !(1 << shift)) | (bit << shift);
            }
            out[j] += local[row][col] * amp;
        }
    }
    out
}

fn random_gate(rng: &mut SeededRng) -> GateSpec {
    let names = ["H", "X", "S", "RX", "CNOT", "CZ", "RZZ"];
    let name = names[rng.below(names.len() as u64) as usize];
    let two = matches!(name, "CNOT" | "CZ" | "RZZ");
    let a = rng.below(3) as usize;
    let targets = if two {
        let b = (a + 1 + rng.below(2) as usize) % 3;
        vec![a, b]
    } else {
        vec![a]
    };
    let angle = matches!(name, "RX" | "RZZ").then(|| 4.0 * rng.uniform() - 2.0);
    GateSpec::new(name, &targets, angle)
}

#[test]
fn random_circuits_match_state_vector_simulation() {
    let mut rng = SeededRng::new(123);
    for _ in 0..10 {
        let gates: Vec<GateSpec> = (0..12).map(|_| random_gate(&mut rng)).collect();
        let spec = CircuitSpec { n_qubits: 3, gates: gates.clone() };
        let u = realize_circuit(&spec, 3).unwrap();
        assert!(u.unitarity_error() <= 1e-10);
        for basis in 0..8 {
            let mut psi = vec![c(0.0, 0.0); 8];
            psi[basis] = c(1.0, 0.0);
            for g in &gates {
                psi = apply_gate(&psi, &oracle_gate(&g.name, g.angle.unwrap_or(0.0)), &g.targets, 3);
            }
            for row in 0..8 {
                assert!((u[(row, basis)] - psi[row]).norm() < 1e-12);
            }
        }
    }
}

#[test]
fn malformed_gates_report_their_index() {
    let text = r#"{"n_qubits": 2, "gates": [{"name": "H", "targets": [0]}, {"name": "RZZ", "targets": [0, 1]}]}"#;
    let err = CircuitSpec::from_json(text).unwrap_err();
    assert!(matches!(err, scramble_core::Error::MalformedGate { index: 1, .. }));
    let spec = CircuitSpec {
        n_qubits: 2,
        gates: vec![GateSpec::new("H", &[0], None), GateSpec::new("CNOT", &[0, 2], None)],
    };
    let err = realize_circuit(&spec, 2).unwrap_err();
    assert!(matches!(err, scramble_core::Error::MalformedGate { index: 1, .. }));
    let bad_json = "{\"n_qubits\": 2,\n \"gates\": [ {\"name\": \"H\", \"targetz\": [0]} ]}";
    let msg = CircuitSpec::from_json(bad_json).unwrap_err().to_string();
    assert!(msg.contains("line 2"), "{msg}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn syk_hamiltonians_are_hermitian(seed in any::<u64>(), k in 0usize..1000) {
        let mut cfg = syk(8, 1);
        cfg.seed = seed;
        let h = build_syk_hamiltonian(&cfg, k).unwrap();
        prop_assert!(h.hermiticity_error() <= 1e-10);
    }

    #[test]
    fn circuit_unitaries_are_unitary(seed in any::<u64>(), len in 0usize..20) {
        let mut rng = SeededRng::new(seed);
        let gates = (0..len).map(|_| random_gate(&mut rng)).collect();
        let u = realize_circuit(&CircuitSpec { n_qubits: 3, gates }, 3).unwrap();
        prop_assert!(u.unitarity_error() <= 1e-10);
    }
}
