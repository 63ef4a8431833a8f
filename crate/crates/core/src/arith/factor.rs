use std::sync::OnceLock;

use crate::error::{invalid, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from `(prime, exponent)` pairs that are already
    /// sorted, prime and non-zero. Only used by callers that produced the
    /// list themselves (e.g. a sieve).
    pub(crate) fn from_sorted(n: u64, factors: Vec<(u64, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        Factorization { n, factors }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_square(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e % 2 == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Product of the distinct primes.
    pub fn squarefree_kernel(&self) -> u64 {
        self.factors.iter().map(|&(p, _)| p).product()
    }

    /// Factorization of `self.n() * other.n()`.
    pub fn product(&self, other: &Factorization) -> Factorization {
        let n = self
            .n
            .checked_mul(other.n)
            .expect("factorization product overflows u64");
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            match (self.factors.get(i), other.factors.get(j)) {
                (Some(&(p, a)), Some(&(q, b))) if p == q => {
                    factors.push((p, a + b));
                    i += 1;
                    j += 1;
                }
                (Some(&(p, a)), Some(&(q, _))) if p < q => {
                    factors.push((p, a));
                    i += 1;
                }
                (Some(&(p, a)), None) => {
                    factors.push((p, a));
                    i += 1;
                }
                (_, Some(&(q, b))) => {
                    factors.push((q, b));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Factorization { n, factors }
    }

    /// Exponent of `p` in `n` (0 if `p` does not divide `n`).
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

fn prime_table() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_LIMIT as usize))
}

/// Primes `<= limit` by the sieve of Eratosthenes.
pub fn primes_up_to(limit: usize) -> Vec<u32> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's variant of Pollard rho; `n` must be an odd composite.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut ys = 2u64;
        let mut r = 1u64;
        let m = 128u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            g = 1;
            while g == 1 {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

/// Complete prime factorization of `1 <= n <= 2^63`.
///
/// Trial division by the primes below 10^6, then Pollard rho on whatever
/// cofactor is left.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return invalid("cannot factor 0");
    }
    if n > 1 << 63 {
        return invalid(format!("{n} exceeds 2^63"));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    for &p in prime_table() {
        let p = p as u64;
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if rest > 1 {
        if rest <= TRIAL_LIMIT * TRIAL_LIMIT {
            // no prime factor below 10^6 remains, so `rest` is prime
            factors.push((rest, 1));
        } else {
            let mut big = Vec::new();
            split_large(rest, &mut big);
            big.sort_unstable();
            for p in big {
                match factors.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
    }
    Ok(Factorization { n, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            if e > 0 {
                out.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    #[test]
    fn documented_values() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(45).unwrap().factors(), &[(3, 2), (5, 1)]);
        assert_eq!(
            factorize(9699690).unwrap().factors(),
            &[
                (2, 1),
                (3, 1),
                (5, 1),
                (7, 1),
                (11, 1),
                (13, 1),
                (17, 1),
                (19, 1)
            ]
        );
        assert!(factorize(0).is_err());
    }

    #[test]
    fn matches_trial_division() {
        for n in 1..20_000u64 {
            assert_eq!(
                factorize(n).unwrap().factors(),
                trial_division(n).as_slice()
            );
        }
    }

    #[test]
    fn large_inputs() {
        let p = 1_000_000_007u64;
        let q = 998_244_353u64;
        assert_eq!(factorize(p * q).unwrap().factors(), &[(q, 1), (p, 1)]);
        let f = factorize(1 << 63).unwrap();
        assert_eq!(f.factors(), &[(2, 63)]);
        let m = (1u64 << 61) - 1;
        assert_eq!(factorize(m).unwrap().factors(), &[(m, 1)]);
        // 3 * (2^61 - 1) exercises trial division followed by a large prime
        assert_eq!(factorize(3 * m).unwrap().factors(), &[(3, 1), (m, 1)]);
        let r = 2_147_483_647u64; // 2^31 - 1
        assert_eq!(factorize(r * r).unwrap().factors(), &[(r, 2)]);
        let n = 1_000_003u64 * 1_000_033 * 7;
        assert_eq!(
            factorize(n).unwrap().factors(),
            &[(7, 1), (1_000_003, 1), (1_000_033, 1)]
        );
        let f = factorize(n).unwrap();
        assert_eq!(
            f.factors().iter().map(|&(p, e)| p.pow(e)).product::<u64>(),
            n
        );
    }

    #[test]
    fn product_merges_exponents() {
        for a in 1..200u64 {
            for b in 1..200u64 {
                let fa = factorize(a).unwrap();
                let fb = factorize(b).unwrap();
                assert_eq!(fa.product(&fb), factorize(a * b).unwrap());
            }
        }
    }
}
