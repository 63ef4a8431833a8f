//! Exact evaluation of G_k(n) from the prime-power case table.

use super::root::RootInteger;
use crate::arith::{factorize, jacobi_odd, valuation, Factorization};
use crate::error::{invalid, Result};

const K_LIMIT: u64 = 1 << 31;

/// G_k(p^b) for an odd prime `p`, `b >= 1` and `k >= 0`.
///
/// With `a` the exponent of `p` in `k` (infinite for `k = 0`):
/// `0` for odd `b <= a`, `φ(p^b)` for even `b <= a`, `-p^a` for even
/// `b = a + 1`, `((k/p^a)/p) p^a sqrt(p)` for odd `b = a + 1`, and `0`
/// once `b >= a + 2`.
pub fn gauss_g_prime_power(k: u64, p: u64, b: u32) -> RootInteger {
    debug_assert!(b >= 1 && p % 2 == 1);
    let phi = |b: u32| (p.pow(b - 1) * (p - 1)) as i64;
    match valuation(k, p) {
        None => {
            if b % 2 == 0 {
                RootInteger::integer(phi(b))
            } else {
                RootInteger::ZERO
            }
        }
        Some(a) if b <= a => {
            if b % 2 == 0 {
                RootInteger::integer(phi(b))
            } else {
                RootInteger::ZERO
            }
        }
        Some(a) if b == a + 1 => {
            let pa = p.pow(a) as i64;
            if b % 2 == 0 {
                RootInteger::integer(-pa)
            } else {
                let unit = k / pa as u64;
                let chi = jacobi_odd(unit % p, p) as i64;
                RootInteger::times_root_prime(chi * pa, p)
            }
        }
        Some(_) => RootInteger::ZERO,
    }
}

/// G_k(n) for odd `n` given its factorization.
///
/// Multiplicative over the prime powers of `n`; negative `k` uses
/// `G_k(n) = (-1/n) G_{-k}(n)`.
pub fn gauss_g_factored(k: i64, n: &Factorization) -> RootInteger {
    let kk = k.unsigned_abs();
    let mut acc = RootInteger::ONE;
    for &(p, b) in n.factors() {
        let local = gauss_g_prime_power(kk, p, b);
        if local.is_zero() {
            return RootInteger::ZERO;
        }
        acc = acc * local;
    }
    if k < 0 && jacobi_odd(n.n() - 1, n.n()) == -1 {
        -acc
    } else {
        acc
    }
}

/// Exact G_k(n) for odd `n >= 1` and `|k| <= 2^31`.
pub fn gauss_g(k: i64, n: u64) -> Result<RootInteger> {
    if n == 0 || n % 2 == 0 {
        return invalid(format!("G_k(n) needs odd positive n, got {n}"));
    }
    if k.unsigned_abs() > K_LIMIT {
        return invalid(format!("|k| = {} exceeds 2^31", k.unsigned_abs()));
    }
    Ok(gauss_g_factored(k, &factorize(n)?))
}
