use crate::error::{invalid, Result};

/// Jacobi symbol `(m/n)` for odd `n >= 1`.
///
/// Uses the binary algorithm: powers of two are stripped from the top
/// argument with the `(2/n)` rule and the arguments are swapped under
/// quadratic reciprocity, so neither argument is ever factored.
/// `(m/1) = 1` for every `m`, including `m = 0`.
pub fn jacobi_symbol(m: u64, n: u64) -> Result<i8> {
    if n == 0 || n % 2 == 0 {
        return invalid(format!(
            "jacobi symbol needs an odd positive modulus, got {n}"
        ));
    }
    Ok(jacobi_odd(m, n))
}

/// Same as [`jacobi_symbol`] without the modulus check. `n` must be odd.
///
/// The sign is tracked as a parity bit and the swap step is branch-free:
/// after stripping twos, `(a, n)` becomes `(|a - n|, min(a, n))`, flipping
/// the sign when `a < n` and both are `3 mod 4`.
#[inline]
pub fn jacobi_odd(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut t = 0u64;
    while a != 0 {
        let z = a.trailing_zeros() as u64;
        a >>= z;
        // (2/n) = -1 iff n = 3, 5 (mod 8)
        t ^= z & ((n >> 1) ^ (n >> 2));
        t ^= ((a < n) as u64) & ((a & n) >> 1);
        let d = a.abs_diff(n);
        n = a.min(n);
        a = d;
    }
    if n == 1 {
        1 - 2 * (t & 1) as i8
    } else {
        0
    }
}

/// Jacobi symbol with a signed top argument, `(m/n)` for odd `n >= 1`.
#[inline]
pub fn jacobi_signed(m: i64, n: u64) -> i8 {
    let r = m.rem_euclid(n as i64) as u64;
    jacobi_odd(r, n)
}
