// SPDX-License-Identifier: Apache-2.0

//! Rational frequency relations and the non-objectivity time lattice.
//!
//! With `ω/Ω = m/n` in lowest terms, `η` vanishes exactly when `Ωt` and `ωt`
//! are simultaneously even, or simultaneously odd, multiples of `π`. Writing
//! `Ωt = kπ`, this forces `k = jn` with `jn ≡ jm (mod 2)`:
//!
//! - both `m` and `n` odd: every `j` works, `t_min = nπ/Ω`;
//! - otherwise only even `j` works, `t_min = 2nπ/Ω`.
//!
//! Lattice times are kept as integer multiples of `π/Ω` and only converted to
//! reals at the end.

mod rational;

use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

pub use rational::rationalize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FractionError {
    #[error("frequency ratio terms must be positive, got {0}/{1}")]
    NonPositiveInput(u64, u64),
    #[error("empty set of frequency relations")]
    EmptyInput,
    #[error("n_min must be at least 1 for the even class")]
    InvalidFamilyIndex,
    #[error("lattice multiple overflows u64")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// Exactly one of numerator and denominator is even.
    EvenClass,
    /// Both odd.
    OddOdd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::EvenClass => "EvenClass",
            Parity::OddOdd => "OddOdd",
        })
    }
}

/// `ω/Ω = num/den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReducedFraction {
    num: u64,
    den: u64,
}

impl ReducedFraction {
    pub fn new(num: u64, den: u64) -> Result<Self, FractionError> {
        reduce_ratio(num, den)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn parity_class(&self) -> Parity {
        if self.num.is_odd() && self.den.is_odd() {
            Parity::OddOdd
        } else {
            Parity::EvenClass
        }
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `t_min` as a multiple of `π/Ω`.
    pub fn t_min_multiple(&self) -> u64 {
        match self.parity_class() {
            Parity::OddOdd => self.den,
            Parity::EvenClass => 2 * self.den,
        }
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Reduces `ω:Ω = omega_num:omega_den`.
pub fn reduce_ratio(omega_num: u64, omega_den: u64) -> Result<ReducedFraction, FractionError> {
    if omega_num == 0 || omega_den == 0 {
        return Err(FractionError::NonPositiveInput(omega_num, omega_den));
    }
    let g = omega_num.gcd(&omega_den);
    Ok(ReducedFraction {
        num: omega_num / g,
        den: omega_den / g,
    })
}

/// A point `k π/Ω` of the time lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeTime {
    pub pi_multiple: u64,
    pub omega_big: f64,
}

impl LatticeTime {
    pub fn seconds(&self) -> f64 {
        self.pi_multiple as f64 * PI / self.omega_big
    }
}

/// A fractional relation with its earliest non-objectivity time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyRelation {
    pub fraction: ReducedFraction,
    pub omega_big: f64,
}

impl FrequencyRelation {
    pub fn new(omega_big: f64, fraction: ReducedFraction) -> Self {
        FrequencyRelation { fraction, omega_big }
    }

    pub fn t_min(&self) -> f64 {
        t_min(self.omega_big, self.fraction)
    }

    /// The lattice `p · t_min`, `p = 1, 2, …`, generated lazily.
    pub fn recurrence(&self) -> impl Iterator<Item = f64> {
        let k = self.fraction.t_min_multiple();
        let omega_big = self.omega_big;
        (1u64..).map(move |p| (p * k) as f64 * PI / omega_big)
    }
}

pub fn t_min(omega_big: f64, fraction: ReducedFraction) -> f64 {
    fraction.t_min_multiple() as f64 * PI / omega_big
}

pub fn non_objectivity_times(omega_big: f64, fraction: ReducedFraction, count: usize) -> Vec<f64> {
    FrequencyRelation::new(omega_big, fraction)
        .recurrence()
        .take(count)
        .collect()
}

/// One member of a frequency family sharing a recurrence lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyMember {
    pub omega: f64,
    /// `ω_p/Ω` in lowest terms.
    pub fraction: ReducedFraction,
    /// The family's `t_min`, as a multiple of `π/Ω`.
    pub family_t_min_multiple: u64,
    /// False when the member reduces to a relation with a shorter `t_min`;
    /// its lattice then strictly contains the family lattice.
    pub shares_family_t_min: bool,
}

/// Frequencies `ω_p = (2p / 2n_min) Ω` (even class, `p ≥ 1`) or
/// `ω_p = ((2p+1)/(2n_min+1)) Ω` (odd class, `p ≥ 0`), returned verbatim.
pub fn frequency_family(
    omega_big: f64,
    n_min: u64,
    parity: Parity,
    count: usize,
) -> Result<Vec<FamilyMember>, FractionError> {
    if parity == Parity::EvenClass && n_min == 0 {
        return Err(FractionError::InvalidFamilyIndex);
    }
    let family_k = match parity {
        Parity::EvenClass => 2 * n_min,
        Parity::OddOdd => 2 * n_min + 1,
    };
    (0..count as u64)
        .map(|p| {
            let num = match parity {
                Parity::EvenClass => 2 * (p + 1),
                Parity::OddOdd => 2 * p + 1,
            };
            let den = family_k;
            let fraction = reduce_ratio(num, den)?;
            Ok(FamilyMember {
                omega: num as f64 / den as f64 * omega_big,
                fraction,
                family_t_min_multiple: family_k,
                shares_family_t_min: fraction.t_min_multiple() == family_k,
            })
        })
        .collect()
}

/// Least common multiple of the `t_min` multiples of `π/Ω`.
pub fn common_recurrence_multiple(fractions: &[ReducedFraction]) -> Result<u64, FractionError> {
    let mut iter = fractions.iter();
    let first = iter.next().ok_or(FractionError::EmptyInput)?;
    iter.try_fold(first.t_min_multiple(), |acc, f| {
        let k = f.t_min_multiple();
        let g = acc.gcd(&k);
        (acc / g).checked_mul(k).ok_or(FractionError::Overflow)
    })
}

/// Smallest `t > 0` on every oscillator's recurrence lattice.
pub fn common_recurrence(omega_big: f64, fractions: &[ReducedFraction]) -> Result<f64, FractionError> {
    let k = common_recurrence_multiple(fractions)?;
    Ok(LatticeTime {
        pi_multiple: k,
        omega_big,
    }
    .seconds())
}
