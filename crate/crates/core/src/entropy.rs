//! Entropy functionals on density matrices. All values are in nats.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qdense::{reduced_from_vector, Bipartition, DensityMatrix, Keep, STATE_TOL};

/// Round-off allowance for entropies below zero or above `ln d`.
pub const ENTROPY_TOL: f64 = 1e-9;

/// Minimum purity accepted as a pure global state.
pub const PURITY_TOL: f64 = 1e-8;

/// Shannon entropy of a spectrum, `-Σ λ ln λ` with `0 ln 0 = 0`.
///
/// Eigenvalues in `[-STATE_TOL, 0]` count as zero.
pub fn spectrum_entropy(eigenvalues: &[f64]) -> f64 {
    let s: f64 = eigenvalues
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln())
        .sum();
    s.max(0.0)
}

fn clamp_entropy(s: f64, d: usize) -> f64 {
    s.clamp(0.0, (d as f64).ln())
}

pub fn von_neumann(rho: &DensityMatrix) -> Result<f64> {
    let evs = rho.eigenvalues()?;
    if let Some(&min) = evs.first() {
        if min < -STATE_TOL {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:.3e}")));
        }
    }
    Ok(clamp_entropy(spectrum_entropy(&evs), rho.dim()))
}

/// Rényi-2 entropy `-ln tr ρ²`.
pub fn renyi2(rho: &DensityMatrix) -> Result<f64> {
    let p = rho.purity();
    if !(p > 0.0 && p <= 1.0 + STATE_TOL) {
        return Err(Error::InvalidState(format!("purity {p} outside (0, 1]")));
    }
    Ok(clamp_entropy(-p.ln(), rho.dim()))
}

/// `S_A + S_B - S_AB`, clamped at zero.
pub fn mutual_information(rho: &DensityMatrix, part: &Bipartition) -> Result<f64> {
    part.check_dim(rho.dim())?;
    let sa = von_neumann(&rho.partial_trace(part, Keep::A)?)?;
    let sb = von_neumann(&rho.partial_trace(part, Keep::B)?)?;
    let s = von_neumann(rho)?;
    Ok((sa + sb - s).max(0.0))
}

/// Rényi-2 mutual information `S2_A + S2_B` of a pure global state.
pub fn renyi2_mutual_information(rho: &DensityMatrix, part: &Bipartition) -> Result<f64> {
    part.check_dim(rho.dim())?;
    let p = rho.purity();
    if p < 1.0 - PURITY_TOL {
        return Err(Error::NotPure(p));
    }
    let sa = renyi2(&rho.partial_trace(part, Keep::A)?)?;
    let sb = renyi2(&rho.partial_trace(part, Keep::B)?)?;
    Ok(sa + sb)
}

/// Mutual information and Rényi-2 mutual information of a pure state vector.
///
/// For a pure state both sides share one spectrum, so `I = 2 S_A` and
/// `I2 = 2 S2_A`; the smaller side is diagonalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureStateInformation {
    pub mutual: f64,
    pub renyi2_mutual: f64,
}

pub fn pure_state_information(psi: &[Complex64], part: &Bipartition) -> Result<PureStateInformation> {
    part.check_dim(psi.len())?;
    let keep = if part.n_a <= part.n_b { Keep::A } else { Keep::B };
    let reduced = reduced_from_vector(psi, part.dim_a(), part.dim_b(), keep);
    let d = reduced.rows();
    let rho = DensityMatrix::new(reduced)?;
    let s = clamp_entropy(spectrum_entropy(&rho.eigenvalues()?), d);
    let s2 = clamp_entropy(-rho.purity().ln(), d);
    Ok(PureStateInformation {
        mutual: 2.0 * s,
        renyi2_mutual: 2.0 * s2,
    })
}

/// Largest mutual information a pure state can carry across `part`.
pub fn max_pure_mutual_information(part: &Bipartition) -> f64 {
    2.0 * (part.dim_a().min(part.dim_b()) as f64).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdense::{ComplexMatrix, SeededRng};

    fn bell() -> DensityMatrix {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let z = Complex64::new(0.0, 0.0);
        let a = Complex64::new(s, 0.0);
        DensityMatrix::pure(&[a, z, z, a]).unwrap()
    }

    #[test]
    fn pure_state_has_zero_entropy() {
        let rho = DensityMatrix::zero_state(3);
        assert_eq!(von_neumann(&rho).unwrap(), 0.0);
        assert_eq!(renyi2(&rho).unwrap(), 0.0);
    }

    #[test]
    fn maximally_mixed_entropy() {
        for d in [2usize, 4, 8] {
            let rho = DensityMatrix::maximally_mixed(d);
            assert!((von_neumann(&rho).unwrap() - (d as f64).ln()).abs() < 1e-12);
        }
        let half = DensityMatrix::maximally_mixed(2);
        assert!((renyi2(&half).unwrap() - 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn diagonal_quarter_three_quarters() {
        let rho = DensityMatrix::new(ComplexMatrix::from_real_diagonal(&[0.25, 0.75])).unwrap();
        let expected = -0.25 * 0.25f64.ln() - 0.75 * 0.75f64.ln();
        assert!((von_neumann(&rho).unwrap() - expected).abs() < 1e-14);
    }

    #[test]
    fn product_state_has_no_mutual_information() {
        let a = DensityMatrix::new(ComplexMatrix::from_real_diagonal(&[0.4, 0.6])).unwrap();
        let b = DensityMatrix::zero_state(1);
        let part = Bipartition::new(1, 1).unwrap();
        let ab = DensityMatrix::product(&a, &b);
        assert!(mutual_information(&ab, &part).unwrap().abs() < 1e-12);
        let pure = DensityMatrix::zero_state(2);
        assert_eq!(renyi2_mutual_information(&pure, &part).unwrap(), 0.0);
    }

    #[test]
    fn bell_state_is_maximal() {
        let part = Bipartition::new(1, 1).unwrap();
        let two_ln2 = 2.0 * 2f64.ln();
        assert!((mutual_information(&bell(), &part).unwrap() - two_ln2).abs() < 1e-12);
        assert!((renyi2_mutual_information(&bell(), &part).unwrap() - two_ln2).abs() < 1e-12);
    }

    #[test]
    fn renyi2_mutual_information_requires_purity() {
        let part = Bipartition::new(1, 1).unwrap();
        let mixed = DensityMatrix::maximally_mixed(4);
        assert!(matches!(
            renyi2_mutual_information(&mixed, &part),
            Err(Error::NotPure(_))
        ));
    }

    #[test]
    fn random_pure_state_mutual_information_is_twice_marginal_entropy() {
        let mut rng = SeededRng::new(11);
        let part = Bipartition::new(2, 2).unwrap();
        let psi = rng.haar_state(16);
        let rho = DensityMatrix::pure(&psi).unwrap();
        let i = mutual_information(&rho, &part).unwrap();
        let sa = von_neumann(&rho.partial_trace(&part, Keep::A).unwrap()).unwrap();
        assert!((i - 2.0 * sa).abs() < 1e-10);
        let fast = pure_state_information(&psi, &part).unwrap();
        assert!((fast.mutual - i).abs() < 1e-10);
    }

    #[test]
    fn renyi2_below_von_neumann_for_random_qubits() {
        let mut rng = SeededRng::new(5);
        for _ in 0..200 {
            let rho = rng.mixed_state(2);
            assert!(renyi2(&rho).unwrap() <= von_neumann(&rho).unwrap() + 1e-10);
        }
    }
}
