// SPDX-License-Identifier: Apache-2.0

use super::ReducedFraction;

/// Best continued-fraction convergent of `ratio` with denominator at most
/// `max_den`, kept only if it lies within `eps` of `ratio`.
///
/// Absence means the ratio is treated as non-fractional at this resolution.
pub fn rationalize(ratio: f64, max_den: u64, eps: f64) -> Option<ReducedFraction> {
    if !(ratio.is_finite() && ratio > 0.0) || max_den == 0 || !(eps > 0.0) {
        return None;
    }
    // Convergents p_k/q_k from the recurrences p_k = a_k p_{k-1} + p_{k-2}.
    let (mut p_prev, mut q_prev) = (1u64, 0u64);
    let (mut p, mut q) = (ratio.floor() as u64, 1u64);
    let mut rem = ratio - ratio.floor();
    loop {
        if (ratio - p as f64 / q as f64).abs() <= f64::EPSILON * ratio || rem < 1e-15 {
            break;
        }
        let x = 1.0 / rem;
        let a = x.floor();
        if a > u64::MAX as f64 / 2.0 {
            break;
        }
        let a = a as u64;
        let next_q = match a.checked_mul(q).and_then(|v| v.checked_add(q_prev)) {
            Some(v) if v <= max_den => v,
            _ => break,
        };
        let next_p = match a.checked_mul(p).and_then(|v| v.checked_add(p_prev)) {
            Some(v) => v,
            None => break,
        };
        (p_prev, q_prev, p, q) = (p, q, next_p, next_q);
        rem = x - x.floor();
    }
    if p == 0 || (ratio - p as f64 / q as f64).abs() > eps {
        return None;
    }
    ReducedFraction::new(p, q).ok()
}
