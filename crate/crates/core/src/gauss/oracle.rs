//! Brute-force evaluation of tau_k(n) and the G_k(n) it determines.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::arith::jacobi_odd;
use crate::error::{invalid, Error, Result};

/// Largest modulus accepted by the O(n) oracles.
pub const ORACLE_CAP: u64 = 1_000_000;

const IMAGINARY_RESIDUE: f64 = 1e-6;

fn check_modulus(n: u64) -> Result<()> {
    if n == 0 || n % 2 == 0 {
        return invalid(format!("modulus must be odd and positive, got {n}"));
    }
    if n > ORACLE_CAP {
        return invalid(format!("modulus {n} exceeds oracle cap {ORACLE_CAP}"));
    }
    Ok(())
}

/// tau_k(n) = sum over a mod n of (a/n) e(ak/n), summed directly.
pub fn tau_k_direct(k: i64, n: u64) -> Result<Complex64> {
    check_modulus(n)?;
    let step = k.rem_euclid(n as i64) as u64;
    let mut acc = Complex64::new(0.0, 0.0);
    for a in 0..n {
        let chi = jacobi_odd(a, n);
        if chi == 0 {
            continue;
        }
        let t = a * step % n;
        let (s, c) = (TAU * t as f64 / n as f64).sin_cos();
        acc += Complex64::new(c, s) * chi as f64;
    }
    Ok(acc)
}

/// G_k(n) recovered from [`tau_k_direct`] by dividing out the prefactor
/// `(1+i)/2 + (-1/n)(1-i)/2`, which is `1` for `n = 1 (mod 4)` and `i`
/// for `n = 3 (mod 4)`.
pub fn gauss_g_oracle(k: i64, n: u64) -> Result<f64> {
    let tau = tau_k_direct(k, n)?;
    let g = if n % 4 == 1 {
        tau
    } else {
        tau / Complex64::i()
    };
    if g.im.abs() > IMAGINARY_RESIDUE {
        return Err(Error::Inconsistent(format!(
            "tau_{k}({n}) leaves imaginary residue {} after removing the prefactor",
            g.im
        )));
    }
    Ok(g.re)
}
