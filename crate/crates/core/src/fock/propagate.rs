// SPDX-License-Identifier: Apache-2.0

//! Time-ordered solution of `dU/ds = −i H(s) U` for
//! `H(s) = p²/2m + ½mω²x² − Y g x cos(Ωs + φ)`.
//!
//! The free part is diagonal, so the ODE is integrated for `U_I` in the
//! interaction picture, `U = e^{−iH₀t} U_I`, with
//!
//! ```text
//! dU_I/ds = i f(s) (e^{−iωs} a + e^{iωs} a†) U_I,   f(s) = Y g cos(Ωs+φ) / √(2mω)
//! ```
//!
//! by classical fixed-step RK4. The ladder action is applied row-wise, so one
//! right-hand side costs `O(dim²)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{free_propagator, DrivenBranch, FockOperator, OracleError};

/// Largest change tolerated on the retained block when the step is halved.
pub const STEP_HALVING_TOL: f64 = 1e-8;

const MAX_STEPS: usize = 1 << 20;

/// `out = i f (e^{−iωs} a + e^{iωs} a†) u`.
fn drive_rhs(out: &mut DMatrix<Complex64>, u: &DMatrix<Complex64>, lowering: Complex64, raising: Complex64, sqrt_n: &[f64]) {
    let dim = u.nrows();
    // Column-major storage: each chunk is one column.
    for (col_out, col_in) in out.as_mut_slice().chunks_mut(dim).zip(u.as_slice().chunks(dim)) {
        for n in 0..dim {
            let mut acc = Complex64::new(0.0, 0.0);
            if n + 1 < dim {
                acc += lowering * (sqrt_n[n + 1] * col_in[n + 1]);
            }
            if n > 0 {
                acc += raising * (sqrt_n[n] * col_in[n - 1]);
            }
            col_out[n] = acc;
        }
    }
}

/// `y += a·x`.
fn add_scaled(y: &mut DMatrix<Complex64>, a: f64, x: &DMatrix<Complex64>) {
    for (yi, xi) in y.as_mut_slice().iter_mut().zip(x.as_slice()) {
        *yi += xi * a;
    }
}

fn interaction_picture(branch: &DrivenBranch, t: f64, dim: usize, steps: usize) -> DMatrix<Complex64> {
    let osc = &branch.oscillator;
    let amplitude = branch.y * osc.coupling_g / (2.0 * osc.mass_m * osc.omega).sqrt();
    let sqrt_n: Vec<f64> = (0..dim).map(|n| (n as f64).sqrt()).collect();
    let h = t / steps as f64;
    let coefficients = |s: f64| {
        let f = amplitude * (branch.omega_big * s + branch.phi).cos();
        let i_f = Complex64::new(0.0, f);
        let rot = Complex64::from_polar(1.0, osc.omega * s);
        (i_f * rot.conj(), i_f * rot)
    };

    let mut u = DMatrix::<Complex64>::identity(dim, dim);
    let zeros = || DMatrix::<Complex64>::zeros(dim, dim);
    let (mut k1, mut k2, mut k3, mut k4, mut stage) = (zeros(), zeros(), zeros(), zeros(), zeros());
    for step in 0..steps {
        let s = step as f64 * h;
        let (lo, ra) = coefficients(s);
        drive_rhs(&mut k1, &u, lo, ra, &sqrt_n);

        let (lo, ra) = coefficients(s + 0.5 * h);
        stage.copy_from(&u);
        add_scaled(&mut stage, 0.5 * h, &k1);
        drive_rhs(&mut k2, &stage, lo, ra, &sqrt_n);
        stage.copy_from(&u);
        add_scaled(&mut stage, 0.5 * h, &k2);
        drive_rhs(&mut k3, &stage, lo, ra, &sqrt_n);

        let (lo, ra) = coefficients(s + h);
        stage.copy_from(&u);
        add_scaled(&mut stage, h, &k3);
        drive_rhs(&mut k4, &stage, lo, ra, &sqrt_n);

        let w = h / 6.0;
        add_scaled(&mut u, w, &k1);
        add_scaled(&mut u, 2.0 * w, &k2);
        add_scaled(&mut u, 2.0 * w, &k3);
        add_scaled(&mut u, w, &k4);
    }
    u
}

fn to_schrodinger(branch: &DrivenBranch, u_i: DMatrix<Complex64>, t: f64) -> FockOperator {
    let dim = u_i.nrows();
    &free_propagator(branch.oscillator.omega, 0.0, t, dim) * &FockOperator::from_matrix(u_i)
}

/// A step count that usually passes the halving test on the first try.
pub fn suggested_steps(branch: &DrivenBranch, t: f64, dim: usize) -> usize {
    let osc = &branch.oscillator;
    let drive = (branch.y * osc.coupling_g).abs() / (2.0 * osc.mass_m * osc.omega).sqrt();
    let rate = osc.omega + branch.omega_big + 2.0 * drive * (dim as f64).sqrt();
    ((t.abs() * rate / 0.05).ceil() as usize).max(16)
}

/// Integrates with `steps` and `2·steps`; the finer result is returned when
/// the two agree to [`STEP_HALVING_TOL`] on the leading `dim/2` block.
pub fn propagate(branch: &DrivenBranch, t: f64, dim: usize, steps: usize) -> Result<FockOperator, OracleError> {
    if dim < 2 {
        return Err(OracleError::DimensionTooSmall(dim));
    }
    if t == 0.0 {
        return Ok(FockOperator::identity(dim));
    }
    let steps = steps.max(1);
    let coarse = interaction_picture(branch, t, dim, steps);
    let fine = interaction_picture(branch, t, dim, 2 * steps);
    let keep = (dim / 2).max(1);
    let change = FockOperator::from_matrix((&fine - &coarse).view((0, 0), (keep, keep)).into_owned()).operator_norm();
    if change >= STEP_HALVING_TOL {
        return Err(OracleError::NonConvergedStepSize { steps, change });
    }
    Ok(to_schrodinger(branch, fine, t))
}

/// [`propagate`] starting from [`suggested_steps`] and doubling on failure.
pub fn propagate_converged(branch: &DrivenBranch, t: f64, dim: usize) -> Result<FockOperator, OracleError> {
    let mut steps = suggested_steps(branch, t, dim);
    loop {
        match propagate(branch, t, dim, steps) {
            Err(OracleError::NonConvergedStepSize { .. }) if steps < MAX_STEPS => steps *= 2,
            other => return other,
        }
    }
}
