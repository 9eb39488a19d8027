// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write;

use qbm_core::fraction::{common_recurrence_multiple, rationalize, reduce_ratio};
use qbm_core::ReducedFraction;

use super::load;
use crate::output::format_value;
use crate::{CliError, FractionArgs};

/// `k π/Ω` written out, e.g. `π`, `2π`, `7π/2`; symbolic only when `Ω` is exact.
fn pi_multiple(k: u64, omega_big: Option<(u64, u64)>) -> String {
    let Some((num, den)) = omega_big else {
        return format!("{k}π/Ω");
    };
    let f = reduce_ratio(k * den, num).expect("positive");
    match (f.num(), f.den()) {
        (1, 1) => "π".to_string(),
        (n, 1) => format!("{n}π"),
        (1, d) => format!("π/{d}"),
        (n, d) => format!("{n}π/{d}"),
    }
}

pub fn run(args: &FractionArgs) -> Result<u8, CliError> {
    if !(args.eps > 0.0) || args.max_den == 0 {
        return Err(CliError::Usage("--eps must be positive and --max-den at least 1".into()));
    }
    let (config, ens) = load(&args.config)?;
    let omega_big = ens.central.omega_big;
    let big_exact = config.central.omega_big.exact();

    let mut text = String::new();
    let mut csv = String::from("k,omega,ratio,fraction,parity,t_min,status\n");
    let mut fractions: Vec<ReducedFraction> = Vec::new();
    let mut non_fractional = Vec::new();
    for (k, (osc_cfg, osc)) in config.oscillators.iter().zip(&ens.oscillators).enumerate() {
        let k = k + 1;
        let ratio = osc.omega / omega_big;
        let fraction = match (osc_cfg.omega.exact(), big_exact) {
            (Some((wn, wd)), Some((bn, bd))) => {
                let num = wn.checked_mul(bd);
                let den = wd.checked_mul(bn);
                match (num, den) {
                    (Some(n), Some(d)) => Some(reduce_ratio(n, d).map_err(|e| CliError::Usage(e.to_string()))?),
                    _ => return Err(CliError::Usage(format!("oscillator {k}: frequency ratio overflows"))),
                }
            }
            _ => rationalize(ratio, args.max_den, args.eps),
        };
        match fraction {
            Some(f) => {
                let t_min = f.t_min_multiple() as f64 * std::f64::consts::PI / omega_big;
                writeln!(
                    text,
                    "k={k} omega={} {f} {} t_min={} ({})",
                    osc_cfg.omega,
                    f.parity_class(),
                    pi_multiple(f.t_min_multiple(), big_exact),
                    format_value(t_min)
                )
                .unwrap();
                writeln!(
                    csv,
                    "{k},{},{},{f},{},{},fractional",
                    format_value(osc.omega),
                    format_value(ratio),
                    f.parity_class(),
                    format_value(t_min)
                )
                .unwrap();
                fractions.push(f);
            }
            None => {
                writeln!(
                    text,
                    "k={k} omega={} non-fractional within eps={:e} (max_den={})",
                    osc_cfg.omega, args.eps, args.max_den
                )
                .unwrap();
                writeln!(csv, "{k},{},{},,,,non-fractional", format_value(osc.omega), format_value(ratio)).unwrap();
                non_fractional.push(k);
            }
        }
    }
    if non_fractional.is_empty() {
        let multiple = common_recurrence_multiple(&fractions).map_err(|e| CliError::Numerical(e.to_string()))?;
        writeln!(
            text,
            "common recurrence: {} ({})",
            pi_multiple(multiple, big_exact),
            format_value(multiple as f64 * std::f64::consts::PI / omega_big)
        )
        .unwrap();
    } else {
        let list: Vec<String> = non_fractional.iter().map(|k| k.to_string()).collect();
        writeln!(text, "common recurrence: none (non-fractional oscillators: {})", list.join(", ")).unwrap();
    }
    print!("{text}");
    if let Some(out) = &args.out {
        std::fs::write(out, csv)?;
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_times() {
        assert_eq!(pi_multiple(7, Some((7, 1))), "π");
        assert_eq!(pi_multiple(14, Some((7, 1))), "2π");
        assert_eq!(pi_multiple(3, Some((2, 1))), "3π/2");
        assert_eq!(pi_multiple(1, Some((3, 1))), "π/3");
        assert_eq!(pi_multiple(7, None), "7π/Ω");
    }
}
