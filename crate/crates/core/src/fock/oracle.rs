// SPDX-License-Identifier: Apache-2.0

//! Markers from their definitions:
//!
//! ```text
//! Γ = Tr[U_Y ρ U_{Y′}†]
//! B = (Tr √(√σ τ √σ))²,   σ = U_{Y′} ρ U_{Y′}†,   τ = U_Y ρ U_Y†
//! ```

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::{propagate_converged, thermal_state, DrivenBranch, FockOperator, OracleError};
use crate::model::Ensemble;

/// Eigenvalues above `−CLAMP_THRESHOLD` are clamped to zero; lower ones are
/// rejected.
pub const CLAMP_THRESHOLD: f64 = 1e-10;

fn same_dim(ops: &[&FockOperator]) -> Result<usize, OracleError> {
    let dim = ops[0].dim();
    match ops.iter().find(|op| op.dim() != dim) {
        Some(op) => Err(OracleError::DimensionMismatch(dim, op.dim())),
        None => Ok(dim),
    }
}

fn hermitian_part(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    (m + m.adjoint()) * Complex64::new(0.5, 0.0)
}

fn clamped_eigen(op: &FockOperator) -> Result<SymmetricEigen<Complex64, nalgebra::Dyn>, OracleError> {
    let mut eig = SymmetricEigen::new(hermitian_part(op.matrix()));
    for ev in eig.eigenvalues.iter_mut() {
        if *ev < -CLAMP_THRESHOLD {
            return Err(OracleError::NonPositiveDensity(*ev));
        }
        *ev = ev.max(0.0);
    }
    Ok(eig)
}

/// Positive square root of a positive semidefinite operator.
pub fn hermitian_sqrt(op: &FockOperator) -> Result<FockOperator, OracleError> {
    let eig = clamped_eigen(op)?;
    let v = &eig.eigenvectors;
    let roots = DMatrix::from_diagonal(&eig.eigenvalues.map(|ev| Complex64::new(ev.sqrt(), 0.0)));
    Ok(FockOperator::from_matrix(v * roots * v.adjoint()))
}

pub fn gamma_oracle(u_y: &FockOperator, u_yp: &FockOperator, rho: &FockOperator) -> Result<Complex64, OracleError> {
    same_dim(&[u_y, u_yp, rho])?;
    Ok((&(u_y * rho) * &u_yp.adjoint()).trace())
}

pub fn overlap_oracle(u_y: &FockOperator, u_yp: &FockOperator, rho: &FockOperator) -> Result<f64, OracleError> {
    same_dim(&[u_y, u_yp, rho])?;
    let tau = &(u_y * rho) * &u_y.adjoint();
    let sigma = &(u_yp * rho) * &u_yp.adjoint();
    let root_sigma = hermitian_sqrt(&sigma)?;
    let inner = &(&root_sigma * &tau) * &root_sigma;
    let fidelity_root: f64 = clamped_eigen(&inner)?.eigenvalues.iter().map(|ev| ev.sqrt()).sum();
    Ok(fidelity_root * fidelity_root)
}

/// Oracle values for one oscillator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleMarkers {
    pub gamma: Complex64,
    pub gamma_sq: f64,
    pub overlap: f64,
}

/// Both markers of oscillator `k` at time `t`, from time-ordered propagation
/// of each branch on `dim` Fock levels.
pub fn oracle_markers(ens: &Ensemble, k: usize, t: f64, dim: usize) -> Result<OracleMarkers, OracleError> {
    let (branch_y, branch_yp) = DrivenBranch::pair(ens, k);
    let u_y = propagate_converged(&branch_y, t, dim)?;
    let u_yp = propagate_converged(&branch_yp, t, dim)?;
    let rho = thermal_state(ens.bath.lambda(ens.oscillators[k].omega), dim);
    let gamma = gamma_oracle(&u_y, &u_yp, &rho)?;
    Ok(OracleMarkers {
        gamma,
        gamma_sq: gamma.norm_sqr(),
        overlap: overlap_oracle(&u_y, &u_yp, &rho)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::displacement;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn pure(dim: usize, n: usize) -> FockOperator {
        FockOperator::from_diagonal((0..dim).map(|k| c(if k == n { 1.0 } else { 0.0 })))
    }

    #[test]
    fn identical_evolutions() {
        let rho = thermal_state(0.8, 12);
        let u = displacement(Complex64::new(0.4, -0.1), 12).unwrap();
        assert!((gamma_oracle(&u, &u, &rho).unwrap() - c(1.0)).norm() < 1e-13);
        assert!((overlap_oracle(&u, &u, &rho).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn orthogonal_pure_states() {
        let id = FockOperator::identity(6);
        let mut swap = DMatrix::<Complex64>::identity(6, 6);
        swap.swap_columns(0, 3);
        let swap = FockOperator::from_matrix(swap);
        let f = overlap_oracle(&id, &swap, &pure(6, 0)).unwrap();
        assert!(f.abs() < 1e-10);
    }

    #[test]
    fn fidelity_is_symmetric_and_bounded() {
        let rho = thermal_state(0.6, 20);
        let u = displacement(Complex64::new(0.3, 0.2), 20).unwrap();
        let v = displacement(Complex64::new(-0.1, 0.5), 20).unwrap();
        let f_uv = overlap_oracle(&u, &v, &rho).unwrap();
        let f_vu = overlap_oracle(&v, &u, &rho).unwrap();
        assert!((f_uv - f_vu).abs() < 1e-10);
        assert!((0.0..=1.0 + 1e-9).contains(&f_uv));
        assert!(f_uv >= gamma_oracle(&u, &v, &rho).unwrap().norm_sqr() - 1e-8);
    }

    #[test]
    fn square_root_squares_back() {
        let rho = thermal_state(0.5, 10);
        let u = displacement(Complex64::new(0.2, 0.3), 10).unwrap();
        let sigma = &(&u * &rho) * &u.adjoint();
        let root = hermitian_sqrt(&sigma).unwrap();
        assert!((&root * &root - sigma).operator_norm() < 1e-12);
    }

    #[test]
    fn indefinite_input_is_rejected() {
        let bad = FockOperator::from_diagonal([c(0.5), c(-0.1)]);
        assert!(matches!(hermitian_sqrt(&bad), Err(OracleError::NonPositiveDensity(_))));
        let tiny = FockOperator::from_diagonal([c(1.0), c(-1e-12)]);
        assert!(hermitian_sqrt(&tiny).is_ok());
    }

    #[test]
    fn mismatched_dimensions() {
        let a = FockOperator::identity(4);
        let b = FockOperator::identity(5);
        assert_eq!(gamma_oracle(&a, &b, &a), Err(OracleError::DimensionMismatch(4, 5)));
    }
}
