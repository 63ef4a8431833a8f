//! Exact integer number theory: Jacobi symbols, factorization and the
//! classical multiplicative functions.

mod factor;
mod jacobi;
mod multiplicative;
mod sieve;

pub use factor::{factorize, is_prime, primes_up_to, Factorization};
pub use jacobi::{jacobi_odd, jacobi_signed, jacobi_symbol};
pub use multiplicative::{multiplicative_values, MultiplicativeBundle};
pub use sieve::FactorSieve;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|s| s > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= n) {
        r += 1;
    }
    r
}

pub fn is_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}

/// Exponent of the prime `p` in `k`; `None` for `k = 0` (infinite).
pub fn valuation(k: u64, p: u64) -> Option<u32> {
    if k == 0 {
        return None;
    }
    let mut k = k;
    let mut a = 0;
    while k % p == 0 {
        k /= p;
        a += 1;
    }
    Some(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn isqrt_edges() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(15), 3);
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
        assert_eq!(valuation(0, 3), None);
        assert_eq!(valuation(54, 3), Some(3));
    }

    #[test]
    fn supplementary_laws() {
        for n in (3..20_001u64).step_by(2) {
            let two = if (n * n - 1) / 8 % 2 == 0 { 1 } else { -1 };
            assert_eq!(jacobi_odd(2, n), two);
            let minus_one = if (n - 1) / 2 % 2 == 0 { 1 } else { -1 };
            assert_eq!(jacobi_odd(n - 1, n), minus_one);
        }
    }

    #[test]
    fn numerator_multiplicativity_exhaustive_slice() {
        // full m1, m2 < 10^4 grid is 10^8 pairs per modulus; sweep moduli
        // densely and the numerators on a stride
        for n in (1..10_000u64).step_by(2).filter(|n| n % 11 == 1 || *n < 60) {
            for m1 in (0..10_000u64).step_by(97) {
                for m2 in (0..10_000u64).step_by(89) {
                    assert_eq!(
                        jacobi_odd(m1 * m2, n),
                        jacobi_odd(m1, n) * jacobi_odd(m2, n)
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn numerator_multiplicative(m1 in 0u64..10_000, m2 in 0u64..10_000, h in 0u64..5_000) {
            let n = 2 * h + 1;
            prop_assert_eq!(jacobi_odd(m1 * m2, n), jacobi_odd(m1, n) * jacobi_odd(m2, n));
        }

        #[test]
        fn denominator_multiplicative(m in 0u64..1_000_000, a in 0u64..5_000, b in 0u64..5_000) {
            let (n1, n2) = (2 * a + 1, 2 * b + 1);
            prop_assert_eq!(jacobi_odd(m, n1 * n2), jacobi_odd(m, n1) * jacobi_odd(m, n2));
        }

        #[test]
        fn periodic(m in 0u64..u64::MAX / 2, h in 0u64..1_000_000) {
            let n = 2 * h + 1;
            prop_assert_eq!(jacobi_odd(m, n), jacobi_odd(m % n, n));
        }

        #[test]
        fn reciprocity(a in 1u64..100_000, b in 1u64..100_000) {
            let (m, n) = (2 * a + 1, 2 * b + 1);
            prop_assume!(gcd(m, n) == 1);
            let sign = if (m - 1) / 2 * ((n - 1) / 2) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(jacobi_odd(m, n) * jacobi_odd(n, m), sign);
        }

        #[test]
        fn zero_iff_shared_factor(m in 0u64..100_000, h in 0u64..50_000) {
            let n = 2 * h + 1;
            prop_assert_eq!(jacobi_odd(m, n) == 0, gcd(m, n) > 1);
        }
    }
}
