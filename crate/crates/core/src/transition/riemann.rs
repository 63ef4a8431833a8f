//! Riemann's function f(x) = (2/π) Σ_{k>=1} sin(π k² x) / k².

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::EvalConfig;
use crate::error::{invalid, Error, Result};

const BLOCK: u64 = 1024;

/// `x` in `[0, 2)` written exactly as `mantissa * 2^-shift`.
#[derive(Debug, Clone, Copy)]
struct Dyadic {
    mantissa: u64,
    shift: u32,
}

impl Dyadic {
    fn new(x: f64) -> Self {
        debug_assert!((0.0..2.0).contains(&x));
        let bits = x.to_bits();
        let exp = ((bits >> 52) & 0x7ff) as i32;
        let frac = bits & ((1u64 << 52) - 1);
        let (mut mantissa, mut shift) = if exp == 0 {
            (frac, 1074u32)
        } else {
            (frac | 1 << 52, (1075 - exp) as u32)
        };
        if mantissa == 0 {
            return Dyadic {
                mantissa: 0,
                shift: 0,
            };
        }
        let tz = mantissa.trailing_zeros().min(shift);
        mantissa >>= tz;
        shift -= tz;
        Dyadic { mantissa, shift }
    }

    /// `(j * x) mod 2`, exact before the final rounding to f64.
    fn times_mod2(&self, j: u64) -> f64 {
        let prod = j as u128 * self.mantissa as u128;
        if self.shift + 1 < 128 {
            let reduced = prod & ((1u128 << (self.shift + 1)) - 1);
            reduced as f64 * (-(self.shift as f64)).exp2()
        } else {
            // the product is already below 2^(shift+1)
            prod as f64 * (-(self.shift as f64)).exp2()
        }
    }
}

fn unit(phase_mod2: f64) -> Complex64 {
    let (s, c) = (PI * phase_mod2).sin_cos();
    Complex64::new(c, s)
}

/// Σ_{k=start}^{end-1} sin(π k² x) / k², with exact phases at the block start
/// and rotation by e^{iπ(2k+1)x} inside the block.
fn block_sum(x: &Dyadic, start: u64, end: u64) -> f64 {
    let mut z = unit(x.times_mod2(start * start));
    let mut w = unit(x.times_mod2(2 * start + 1));
    let v = unit(x.times_mod2(2));
    let mut acc = 0.0;
    for k in start..end {
        let kf = k as f64;
        acc += z.im / (kf * kf);
        z *= w;
        w *= v;
    }
    acc
}

/// f(x) to absolute error `cfg.tolerance`.
///
/// The tail after `K` terms is at most `2/(πK)`, so `K = ceil(2/(π tol))`.
/// `x` is reduced mod 2 first and the phases `k² x mod 2` are computed
/// exactly from the binary expansion of `x`. Blocks of terms are summed
/// independently and combined in ascending order, so the result does not
/// depend on the thread count.
pub fn riemann_f(x: f64, cfg: &EvalConfig) -> Result<f64> {
    if !x.is_finite() {
        return invalid(format!("x must be finite, got {x}"));
    }
    cfg.validate()?;
    let terms = (2.0 / (PI * cfg.tolerance)).ceil();
    if terms > cfg.k_max_cap as f64 {
        return Err(Error::NonConvergence(format!(
            "f needs {terms} terms, cap is {}",
            cfg.k_max_cap
        )));
    }
    let terms = terms as u64;
    let reduced = x.rem_euclid(2.0);
    if reduced == 0.0 {
        return Ok(0.0);
    }
    let dyadic = Dyadic::new(reduced);
    let blocks = terms.div_ceil(BLOCK);
    let partials: Vec<f64> = (0..blocks)
        .into_par_iter()
        .map(|b| block_sum(&dyadic, 1 + b * BLOCK, (1 + (b + 1) * BLOCK).min(terms + 1)))
        .collect();
    Ok(2.0 / PI * partials.iter().sum::<f64>())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Term-by-term evaluation with an exact rational phase `k² p / q mod 2`.
    fn rational_oracle(p: u64, q: u64, terms: u64) -> f64 {
        let mut acc = 0.0;
        for k in 1..=terms {
            let r = (k as u128 * k as u128 * p as u128) % (2 * q as u128);
            acc += (PI * r as f64 / q as f64).sin() / (k as f64 * k as f64);
        }
        2.0 / PI * acc
    }

    #[test]
    fn dyadic_phases_are_exact() {
        let d = Dyadic::new(0.375);
        assert_eq!(d.times_mod2(3), 1.125);
        assert_eq!(
            d.times_mod2(1_000_001),
            (1_000_001u64 * 3 % 16) as f64 / 8.0
        );
        let tiny = Dyadic::new(1e-300);
        assert!((tiny.times_mod2(4) - 4e-300).abs() < 1e-310);
        assert_eq!(Dyadic::new(1.5).times_mod2(7), 0.5);
    }

    #[test]
    fn simple_values() {
        let cfg = EvalConfig::with_tolerance(1e-7);
        assert_eq!(riemann_f(0.0, &cfg).unwrap(), 0.0);
        assert!(riemann_f(1.0, &cfg).unwrap().abs() < 1e-12);
        assert!(riemann_f(f64::NAN, &cfg).is_err());
        assert!(riemann_f(0.5, &EvalConfig::with_tolerance(1e-12)).is_err());
    }

    #[test]
    fn half_matches_tighter_self_and_rational_phase() {
        let loose = riemann_f(0.5, &EvalConfig::with_tolerance(1e-6)).unwrap();
        let tight = riemann_f(0.5, &EvalConfig::with_tolerance(1e-7)).unwrap();
        assert!((loose - tight).abs() <= 1.1e-6);
        let oracle = rational_oracle(1, 2, 6_366_198);
        assert!((tight - oracle).abs() < 1e-9, "{tight} vs {oracle}");
    }

    #[test]
    fn matches_rational_phase_at_thirds() {
        let cfg = EvalConfig::with_tolerance(1e-6);
        // 1/3 is not dyadic: compare at the nearest double, within the tail bound
        let got = riemann_f(1.0 / 3.0, &cfg).unwrap();
        let want = rational_oracle(1, 3, 2_000_000);
        assert!((got - want).abs() < 2e-6, "{got} vs {want}");
    }
}
