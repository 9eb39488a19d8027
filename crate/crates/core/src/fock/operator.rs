// SPDX-License-Identifier: Apache-2.0

use std::ops::{Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::OracleError;

/// Dense complex matrix on the Fock levels `0..dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    entries: DMatrix<Complex64>,
}

impl FockOperator {
    pub fn from_matrix(entries: DMatrix<Complex64>) -> Self {
        assert!(entries.is_square(), "Fock operators are square");
        FockOperator { entries }
    }

    pub fn identity(dim: usize) -> Self {
        FockOperator::from_matrix(DMatrix::identity(dim, dim))
    }

    pub fn from_diagonal(diag: impl IntoIterator<Item = Complex64>) -> Self {
        let diag: Vec<Complex64> = diag.into_iter().collect();
        FockOperator::from_matrix(DMatrix::from_diagonal(&nalgebra::DVector::from_vec(diag)))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.entries
    }

    pub fn adjoint(&self) -> Self {
        FockOperator::from_matrix(self.entries.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        FockOperator::from_matrix(&self.entries * factor)
    }

    /// Leading `k × k` block (levels `0..k`).
    pub fn block(&self, k: usize) -> Self {
        let k = k.min(self.dim());
        FockOperator::from_matrix(self.entries.view((0, 0), (k, k)).into_owned())
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        if self.dim() == 0 {
            return 0.0;
        }
        self.entries
            .clone()
            .svd(false, false)
            .singular_values
            .max()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `‖U†U − I‖` on the leading `k × k` block of `U†U`.
    pub fn unitarity_defect(&self, k: usize) -> f64 {
        let gram = self.adjoint() * self.clone();
        (gram.block(k) - FockOperator::identity(k.min(self.dim()))).operator_norm()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        (self.clone() - self.adjoint()).operator_norm()
    }
}

impl Mul for FockOperator {
    type Output = FockOperator;

    fn mul(self, rhs: FockOperator) -> FockOperator {
        FockOperator::from_matrix(self.entries * rhs.entries)
    }
}

impl<'a> Mul<&'a FockOperator> for &'a FockOperator {
    type Output = FockOperator;

    fn mul(self, rhs: &FockOperator) -> FockOperator {
        FockOperator::from_matrix(&self.entries * &rhs.entries)
    }
}

impl Sub for FockOperator {
    type Output = FockOperator;

    fn sub(self, rhs: FockOperator) -> FockOperator {
        FockOperator::from_matrix(self.entries - rhs.entries)
    }
}

/// Ladder, position and momentum operators of one oscillator.
#[derive(Debug, Clone)]
pub struct LadderOperators {
    pub a: FockOperator,
    pub a_dag: FockOperator,
    pub x: FockOperator,
    pub p: FockOperator,
}

fn annihilation(dim: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(dim, dim, |r, c| {
        if c == r + 1 {
            Complex64::new((c as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// `a` with `√n` on the first superdiagonal, `x = (a + a†)/√(2mω)` and
/// `p = i√(mω/2)(a† − a)`.
pub fn build_operators(dim: usize, mass: f64, omega: f64) -> Result<LadderOperators, OracleError> {
    if dim < 2 {
        return Err(OracleError::DimensionTooSmall(dim));
    }
    let a = annihilation(dim);
    let a_dag = a.adjoint();
    let x = (&a + &a_dag) / Complex64::new((2.0 * mass * omega).sqrt(), 0.0);
    let p = (&a_dag - &a) * Complex64::new(0.0, (mass * omega / 2.0).sqrt());
    Ok(LadderOperators {
        a: FockOperator::from_matrix(a),
        a_dag: FockOperator::from_matrix(a_dag),
        x: FockOperator::from_matrix(x),
        p: FockOperator::from_matrix(p),
    })
}

/// Thermal populations `(1 − e^{−λ}) e^{−λn}`, renormalized on `0..dim`.
pub fn thermal_populations(lambda: f64, dim: usize) -> Vec<f64> {
    let mut weights: Vec<f64> = (0..dim)
        .map(|n| if n == 0 { 1.0 } else { (-lambda * n as f64).exp() })
        .collect();
    let norm: f64 = weights.iter().sum();
    weights.iter_mut().for_each(|w| *w /= norm);
    weights
}

pub fn thermal_state(lambda: f64, dim: usize) -> FockOperator {
    FockOperator::from_diagonal(
        thermal_populations(lambda, dim)
            .into_iter()
            .map(|p| Complex64::new(p, 0.0)),
    )
}

/// `D(α) = exp(α a† − α* a)` by dense matrix exponential.
pub fn displacement(alpha: Complex64, dim: usize) -> Result<FockOperator, OracleError> {
    if dim < 2 {
        return Err(OracleError::DimensionTooSmall(dim));
    }
    if alpha.norm_sqr() > dim as f64 / 4.0 {
        return Err(OracleError::TruncationWarning { alpha, dim });
    }
    let a = annihilation(dim);
    let generator = a.adjoint() * alpha - a * alpha.conj();
    Ok(FockOperator::from_matrix(generator.exp()))
}

/// `exp(−i(ω(n + ½) + shift) t)` on the number basis.
pub fn free_propagator(omega: f64, shift: f64, t: f64, dim: usize) -> FockOperator {
    FockOperator::from_diagonal(
        (0..dim).map(|n| Complex64::from_polar(1.0, -(omega * (n as f64 + 0.5) + shift) * t)),
    )
}
