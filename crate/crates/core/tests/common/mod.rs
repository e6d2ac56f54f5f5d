//! Small, self-contained reference routines on nested `Vec`s. They share no
//! code with the library so that comparisons against them are independent.
#![allow(dead_code)]

use num_complex::Complex64;
use scramble_core::ComplexMatrix;

pub type Mat = Vec<Vec<Complex64>>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn zeros(n: usize) -> Mat {
    vec![vec![c(0.0, 0.0); n]; n]
}

pub fn eye(n: usize) -> Mat {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c(1.0, 0.0);
    }
    m
}

pub fn from_lib(m: &ComplexMatrix) -> Mat {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)]).collect())
        .collect()
}

pub fn to_lib(m: &Mat) -> ComplexMatrix {
    let n = m.len();
    ComplexMatrix::from_row_major(n, n, m.iter().flatten().copied().collect()).unwrap()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let p = b[0].len();
    let mut out = vec![vec![c(0.0, 0.0); p]; n];
    for i in 0..n {
        for j in 0..p {
            let mut s = c(0.0, 0.0);
            for (k, bk) in b.iter().enumerate() {
                s += a[i][k] * bk[j];
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn scale(a: &Mat, s: Complex64) -> Mat {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn dagger(a: &Mat) -> Mat {
    let n = a.len();
    let m = a[0].len();
    (0..m).map(|j| (0..n).map(|i| a[i][j].conj()).collect()).collect()
}

pub fn trace(a: &Mat) -> Complex64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn max_diff(a: &Mat, b: &Mat) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn norm1(a: &Mat) -> f64 {
    let n = a.len();
    (0..n)
        .map(|j| (0..n).map(|i| a[i][j].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(A)` by scaling and squaring with a truncated Taylor series.
pub fn expm(a: &Mat) -> Mat {
    let n = a.len();
    let nrm = norm1(a);
    let mut s = 0;
    while nrm / f64::from(1u32 << s) > 0.25 {
        s += 1;
    }
    let a_s = scale(a, c(1.0 / f64::from(1u32 << s), 0.0));
    let mut term = eye(n);
    let mut sum = eye(n);
    for k in 1..=24 {
        term = scale(&mul(&term, &a_s), c(1.0 / k as f64, 0.0));
        sum = add(&sum, &term);
    }
    for _ in 0..s {
        sum = mul(&sum, &sum);
    }
    sum
}

/// `exp(-i H t)`.
pub fn propagator(h: &Mat, t: f64) -> Mat {
    expm(&scale(h, c(0.0, -t)))
}

pub fn pauli(k: usize) -> Mat {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    match k {
        0 => vec![vec![o, z], vec![z, o]],
        1 => vec![vec![z, o], vec![o, z]],
        2 => vec![vec![z, c(0.0, -1.0)], vec![c(0.0, 1.0), z]],
        3 => vec![vec![o, z], vec![z, -o]],
        _ => unreachable!(),
    }
}

/// Tensor product of single-qubit Paulis given by base-4 digits, first qubit leading.
pub fn pauli_string(labels: &[usize]) -> Mat {
    labels
        .iter()
        .fold(eye(1), |acc, &k| kron(&acc, &pauli(k)))
}

/// Reduced matrix on the first `da` levels of a `da * db` system.
pub fn trace_out_b(rho: &Mat, da: usize, db: usize) -> Mat {
    let mut out = zeros(da);
    for i in 0..da {
        for j in 0..da {
            for k in 0..db {
                out[i][j] += rho[i * db + k][j * db + k];
            }
        }
    }
    out
}

pub fn trace_out_a(rho: &Mat, da: usize, db: usize) -> Mat {
    let mut out = zeros(db);
    for i in 0..db {
        for j in 0..db {
            for k in 0..da {
                out[i][j] += rho[k * db + i][k * db + j];
            }
        }
    }
    out
}

/// Eigenvalues of a 2x2 Hermitian matrix in closed form.
pub fn eig2(m: &Mat) -> [f64; 2] {
    let a = m[0][0].re;
    let d = m[1][1].re;
    let b = m[0][1].norm();
    let mean = 0.5 * (a + d);
    let r = (0.25 * (a - d) * (a - d) + b * b).sqrt();
    [mean - r, mean + r]
}

pub fn shannon(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.ln()).sum()
}

pub fn outer(psi: &[Complex64]) -> Mat {
    psi.iter()
        .map(|a| psi.iter().map(|b| a * b.conj()).collect())
        .collect()
}

pub fn apply(m: &Mat, v: &[Complex64]) -> Vec<Complex64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Mutual information of a two-qubit state from closed-form 2x2 spectra and
/// the 4x4 spectrum supplied by the caller (zero for pure states).
pub fn two_qubit_mutual_information(rho: &Mat, joint_entropy: f64) -> f64 {
    let sa = shannon(&eig2(&trace_out_b(rho, 2, 2)));
    let sb = shannon(&eig2(&trace_out_a(rho, 2, 2)));
    sa + sb - joint_entropy
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
pub fn jacobi_eigenvalues(m: &Mat) -> Vec<f64> {
    let n = m.len();
    let mut a = m.clone();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j].norm_sqr())
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.norm() < 1e-300 {
                    continue;
                }
                let app = a[p][p].re;
                let aqq = a[q][q].re;
                let phase = apq / apq.norm();
                let theta = 0.5 * (2.0 * apq.norm()).atan2(aqq - app);
                let (s, co) = theta.sin_cos();
                // Rotation J acting on columns p, q.
                let jpp = c(co, 0.0);
                let jpq = phase * s;
                let jqp = -phase.conj() * s;
                let jqq = c(co, 0.0);
                for row in a.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = x * jpp + y * jqp;
                    row[q] = x * jpq + y * jqq;
                }
                for k in 0..n {
                    let (x, y) = (a[p][k], a[q][k]);
                    a[p][k] = jpp.conj() * x + jqp.conj() * y;
                    a[q][k] = jpq.conj() * x + jqq.conj() * y;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i].re).collect();
    ev.sort_by(f64::total_cmp);
    ev
}
