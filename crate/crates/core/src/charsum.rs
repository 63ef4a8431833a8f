//! Exact double sums of the Jacobi symbol and the partial sums of Gauss-type
//! sums that govern their main terms.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, isqrt, jacobi_odd, jacobi_symbol, FactorSieve, Factorization};
use crate::error::{invalid, Error, Result};
use crate::gauss::gauss_g_factored;

/// Largest `X * Y` accepted by [`double_sum`].
pub const PAIR_GUARD: u128 = 1_000_000_000_000;
/// Largest `x` for the O(x) partial sums over Gauss-type sums.
pub const PARTIAL_SUM_CAP: u64 = 1_000_000;
/// Largest `x` for [`phi_square_mean`].
pub const SQUARE_MEAN_CAP: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Every odd pair evaluated with the binary Jacobi algorithm.
    Direct,
    /// One period of prefix sums per modulus `ell * n`.
    Periodic,
    /// Periodic when `ell * Y < X / 8`, else direct.
    Auto,
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Algorithm::Direct),
            "periodic" => Ok(Algorithm::Periodic),
            "auto" => Ok(Algorithm::Auto),
            other => invalid(format!("unknown algorithm {other:?}")),
        }
    }
}

/// A request for `S_ell(X, Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumJob {
    pub x_limit: u64,
    pub y_limit: u64,
    pub ell: u64,
    pub algorithm: Algorithm,
    pub thread_count: usize,
}

impl SumJob {
    pub fn new(x_limit: u64, y_limit: u64) -> Self {
        SumJob {
            x_limit,
            y_limit,
            ell: 1,
            algorithm: Algorithm::Auto,
            thread_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }

    pub fn ell(mut self, ell: u64) -> Self {
        self.ell = ell;
        self
    }

    pub fn algorithm(mut self, algorithm: Algorithm) -> Self {
        self.algorithm = algorithm;
        self
    }

    pub fn threads(mut self, thread_count: usize) -> Self {
        self.thread_count = thread_count;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_limit == 0 || self.y_limit == 0 {
            return invalid("X and Y must be positive");
        }
        if self.x_limit as u128 * self.y_limit as u128 > PAIR_GUARD {
            return invalid(format!(
                "X*Y = {} exceeds the 10^12 guard",
                self.x_limit as u128 * self.y_limit as u128
            ));
        }
        check_odd_squarefree(self.ell)?;
        if self.thread_count == 0 {
            return invalid("thread count must be positive");
        }
        Ok(())
    }

    /// The concrete algorithm `Auto` resolves to.
    pub fn resolved_algorithm(&self) -> Algorithm {
        match self.algorithm {
            Algorithm::Auto => {
                let lhs = self.y_limit as u128 * self.ell as u128 * self.y_limit as u128;
                if lhs < self.x_limit as u128 * self.y_limit as u128 / 8 {
                    Algorithm::Periodic
                } else {
                    Algorithm::Direct
                }
            }
            other => other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SumResult {
    pub value: i64,
    pub pairs_evaluated: u64,
    pub algorithm_used: Algorithm,
    pub elapsed_seconds: f64,
}

pub(crate) fn check_odd_squarefree(ell: u64) -> Result<Factorization> {
    if ell == 0 || ell % 2 == 0 {
        return invalid(format!("ell must be odd and positive, got {ell}"));
    }
    let f = factorize(ell)?;
    if !f.is_squarefree() {
        return invalid(format!("ell = {ell} is not squarefree"));
    }
    Ok(f)
}

fn odd_count(limit: u64) -> u64 {
    limit.div_ceil(2)
}

/// Sum of `(m/q)` over the first `count` odd `m` (1, 3, 5, ...).
///
/// Over odd `m` the symbol has period `q` in the index, so at most one
/// period is evaluated.
fn odd_prefix_character_sum(q: u64, count: u64) -> i64 {
    let period = q.min(count);
    let rem = count % q;
    let mut running = 0i64;
    let mut at_rem = 0i64;
    for j in 0..period {
        if j == rem {
            at_rem = running;
        }
        running += jacobi_odd(2 * j + 1, q) as i64;
    }
    if count < q {
        return running;
    }
    if rem == period {
        at_rem = running;
    }
    (count / q) as i64 * running + at_rem
}

fn direct_sum(x: u64, y: u64, ell: u64) -> i64 {
    let ms = odd_count(x);
    let ns = odd_count(y);
    (0..ms)
        .into_par_iter()
        .map(|j| {
            let m = 2 * j + 1;
            (0..ns)
                .map(|i| jacobi_odd(m, ell * (2 * i + 1)) as i64)
                .sum::<i64>()
        })
        .sum()
}

fn periodic_sum(x: u64, y: u64, ell: u64) -> i64 {
    let ms = odd_count(x);
    (0..odd_count(y))
        .into_par_iter()
        .map(|i| odd_prefix_character_sum(ell * (2 * i + 1), ms))
        .sum()
}

/// Exact `S_ell(X, Y)`: the sum over odd `m <= X`, odd `n <= Y` of `(m / ell n)`.
///
/// The value does not depend on the algorithm or on `thread_count`; the
/// worker partial sums are exact integers.
pub fn double_sum(job: &SumJob) -> Result<SumResult> {
    job.validate()?;
    let start = Instant::now();
    let algorithm = job.resolved_algorithm();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(job.thread_count)
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot build thread pool: {e}")))?;
    let (x, y, ell) = (job.x_limit, job.y_limit, job.ell);
    let value = pool.install(|| match algorithm {
        Algorithm::Periodic => periodic_sum(x, y, ell),
        _ => direct_sum(x, y, ell),
    });
    Ok(SumResult {
        value,
        pairs_evaluated: odd_count(x) * odd_count(y),
        algorithm_used: algorithm,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Sum of `(m/n)` over odd `m <= X`.
pub fn inner_sum_m(n: u64, x_limit: u64) -> Result<i64> {
    jacobi_symbol(0, n)?;
    Ok(odd_prefix_character_sum(n, odd_count(x_limit)))
}

/// Sum of `(m/n)` over odd `n <= Y`, for odd `m`.
pub fn inner_sum_n(m: u64, y_limit: u64) -> Result<i64> {
    if m % 2 == 0 {
        return invalid(format!("m must be odd, got {m}"));
    }
    Ok((0..odd_count(y_limit))
        .map(|i| jacobi_odd(m, 2 * i + 1) as i64)
        .sum())
}

/// True when `k = 2 j^2` for some integer `j >= 0`.
pub fn is_twice_square(k: i64) -> bool {
    k >= 0 && k % 2 == 0 && {
        let h = (k / 2) as u64;
        let r = isqrt(h);
        r * r == h
    }
}

fn check_partial_cap(x_limit: u64) -> Result<()> {
    if x_limit == 0 || x_limit > PARTIAL_SUM_CAP {
        return invalid(format!(
            "x must lie in [1, {PARTIAL_SUM_CAP}], got {x_limit}"
        ));
    }
    Ok(())
}

fn square_of(k: u64) -> Result<i64> {
    k.checked_mul(k)
        .and_then(|s| i64::try_from(s).ok())
        .ok_or_else(|| Error::InvalidInput(format!("k = {k} too large to square")))
}

/// Sum over odd `n <= x` of `G_k(n) (2/n) / sqrt(n)`, for `k` not twice a square.
pub fn lemma2_partial(k: i64, x_limit: u64) -> Result<f64> {
    if is_twice_square(k) {
        return invalid(format!("k = {k} is twice a square"));
    }
    if k.unsigned_abs() > 1 << 31 {
        return invalid("|k| exceeds 2^31");
    }
    check_partial_cap(x_limit)?;
    let sieve = FactorSieve::new(x_limit);
    let mut acc = 0.0;
    for n in (1..=x_limit).step_by(2) {
        let g = gauss_g_factored(k, &sieve.factorize(n));
        if g.is_zero() {
            continue;
        }
        let chi = jacobi_odd(2, n) as f64;
        acc += chi * g.r() as f64 * (g.d() as f64 / n as f64).sqrt();
    }
    Ok(acc)
}

/// Sum over odd `n <= x` of `G_{k^2}(n) / sqrt(n)`.
pub fn gk2_mean_sqrt(k: u64, x_limit: u64) -> Result<f64> {
    check_partial_cap(x_limit)?;
    let k2 = square_of(k)?;
    let sieve = FactorSieve::new(x_limit);
    let mut acc = 0.0;
    for n in (1..=x_limit).step_by(2) {
        let g = gauss_g_factored(k2, &sieve.factorize(n));
        if !g.is_zero() {
            acc += g.r() as f64 * (g.d() as f64 / n as f64).sqrt();
        }
    }
    Ok(acc)
}

/// Sum over odd `n <= x` of `G_{k^2}(ell n)` for odd squarefree `ell`.
pub fn gk2_mean_twisted(k: u64, ell: u64, x_limit: u64) -> Result<f64> {
    let ell_f = check_odd_squarefree(ell)?;
    check_partial_cap(x_limit)?;
    let k2 = square_of(k)?;
    let sieve = FactorSieve::new(x_limit);
    let mut acc = 0.0;
    for n in (1..=x_limit).step_by(2) {
        let g = gauss_g_factored(k2, &ell_f.product(&sieve.factorize(n)));
        if !g.is_zero() {
            acc += g.to_f64();
        }
    }
    Ok(acc)
}

/// Sum of `φ(n)/n` over odd squares `n <= x`, i.e. of `φ(m)/m` over odd `m <= sqrt(x)`.
pub fn phi_square_mean(x_limit: u64) -> Result<f64> {
    if x_limit == 0 || x_limit > SQUARE_MEAN_CAP {
        return invalid(format!("x must lie in [1, 10^12], got {x_limit}"));
    }
    let root = isqrt(x_limit);
    let sieve = FactorSieve::new(root);
    let mut acc = 0.0;
    for m in (1..=root).step_by(2) {
        let phi = sieve.factorize(m).multiplicative().phi;
        acc += phi as f64 / m as f64;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::multiplicative_values;
    use crate::gauss::gauss_g;
    use proptest::prelude::*;

    /// Pair-by-pair enumeration straight from the definition.
    fn brute_force(x: u64, y: u64, ell: u64) -> i64 {
        let mut s = 0;
        for m in (1..=x).step_by(2) {
            for n in (1..=y).step_by(2) {
                s += jacobi_symbol(m, ell * n).unwrap() as i64;
            }
        }
        s
    }

    #[test]
    fn documented_double_sums() {
        let run = |x, y, ell| double_sum(&SumJob::new(x, y).ell(ell)).unwrap().value;
        assert_eq!(run(1, 1, 1), 1);
        assert_eq!(run(3, 3, 1), 3);
        assert_eq!(brute_force(3, 3, 1), 3);
        assert_eq!(run(5, 5, 1), 3);
        assert_eq!(brute_force(5, 5, 1), 3);
        assert_eq!(run(3, 1, 3), 1);
        assert_eq!(brute_force(3, 1, 3), 1);
    }

    #[test]
    fn rejects_bad_jobs() {
        assert!(double_sum(&SumJob::new(0, 3)).is_err());
        assert!(double_sum(&SumJob::new(2_000_000, 1_000_000)).is_err());
        assert!(double_sum(&SumJob::new(3, 3).ell(2)).is_err());
        assert!(double_sum(&SumJob::new(3, 3).ell(9)).is_err());
        assert!(double_sum(&SumJob::new(3, 3).threads(0)).is_err());
    }

    #[test]
    fn auto_picks_periodic_for_short_y() {
        assert_eq!(
            SumJob::new(1_000_000, 1000).resolved_algorithm(),
            Algorithm::Periodic
        );
        assert_eq!(
            SumJob::new(1000, 1_000_000).resolved_algorithm(),
            Algorithm::Direct
        );
        assert_eq!(
            SumJob::new(1000, 1000).resolved_algorithm(),
            Algorithm::Direct
        );
    }

    #[test]
    fn algorithms_agree_on_grid() {
        for ell in [1, 3, 15] {
            for x in (1..=2000).step_by(137).chain([2000]) {
                for y in (1..=2000).step_by(151).chain([2000]) {
                    let d = double_sum(&SumJob::new(x, y).ell(ell).algorithm(Algorithm::Direct))
                        .unwrap();
                    let p = double_sum(&SumJob::new(x, y).ell(ell).algorithm(Algorithm::Periodic))
                        .unwrap();
                    assert_eq!(d.value, p.value, "X={x} Y={y} ell={ell}");
                }
            }
        }
        assert_eq!(
            double_sum(&SumJob::new(301, 299).ell(15)).unwrap().value,
            brute_force(301, 299, 15)
        );
    }

    #[test]
    fn thread_count_does_not_change_value() {
        let values: Vec<i64> = [1, 2, 8]
            .iter()
            .map(|&t| {
                double_sum(
                    &SumJob::new(3001, 2999)
                        .threads(t)
                        .algorithm(Algorithm::Direct),
                )
                .unwrap()
                .value
            })
            .collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn documented_inner_sums() {
        assert_eq!(inner_sum_m(9, 18).unwrap(), 6);
        assert_eq!(inner_sum_m(3, 3).unwrap(), 1);
        assert_eq!(inner_sum_m(1, 10).unwrap(), 5);
        assert!(inner_sum_m(4, 10).is_err());
        assert_eq!(inner_sum_n(1, 7).unwrap(), 4);
        assert_eq!(inner_sum_n(9, 10).unwrap(), 3);
        assert_eq!(inner_sum_n(3, 5).unwrap(), 0);
        assert!(inner_sum_n(4, 10).is_err());
    }

    #[test]
    fn inner_sums_reassemble_double_sum() {
        for x in (1..=500).step_by(37) {
            for y in (1..=500).step_by(41) {
                let s = double_sum(&SumJob::new(x, y)).unwrap().value;
                let by_n: i64 = (1..=y).step_by(2).map(|n| inner_sum_m(n, x).unwrap()).sum();
                let by_m: i64 = (1..=x).step_by(2).map(|m| inner_sum_n(m, y).unwrap()).sum();
                assert_eq!((s, s), (by_n, by_m), "X={x} Y={y}");
            }
        }
    }

    #[test]
    fn square_modulus_inner_sums() {
        for r in (1..=44u64).step_by(2) {
            let n = r * r;
            let phi = multiplicative_values(n).unwrap().phi as f64;
            for x in [1u64, 10, 99, 1000, 12_345, 100_000] {
                let dev =
                    (inner_sum_m(n, x).unwrap() as f64 - x as f64 / 2.0 * phi / n as f64).abs();
                assert!(
                    dev <= 3.0 * (n as f64).sqrt() * (3.0 * n as f64).ln(),
                    "n={n} X={x} dev={dev}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn prefix_sum_matches_loop(h in 0u64..400, count in 0u64..3000) {
            let q = 2 * h + 1;
            let direct: i64 = (0..count).map(|j| jacobi_odd(2 * j + 1, q) as i64).sum();
            prop_assert_eq!(odd_prefix_character_sum(q, count), direct);
        }
    }

    #[test]
    fn twice_square_detection() {
        assert!(is_twice_square(0));
        assert!(is_twice_square(2));
        assert!(is_twice_square(8));
        assert!(is_twice_square(18));
        assert!(!is_twice_square(6));
        assert!(!is_twice_square(-2));
        assert!(!is_twice_square(4));
    }

    /// Term-by-term sum from exact values, accumulated the same way.
    fn lemma2_oracle(k: i64, x: u64) -> f64 {
        (1..=x)
            .step_by(2)
            .map(|n| gauss_g(k, n).unwrap().to_f64() * jacobi_odd(2, n) as f64 / (n as f64).sqrt())
            .sum()
    }

    #[test]
    fn documented_lemma2_partials() {
        assert_eq!(lemma2_partial(1, 1).unwrap(), 1.0);
        assert!(lemma2_partial(1, 3).unwrap().abs() < 1e-15);
        assert!((lemma2_partial(3, 9).unwrap() - lemma2_oracle(3, 9)).abs() < 1e-12);
        assert!((lemma2_partial(-7, 5000).unwrap() - lemma2_oracle(-7, 5000)).abs() < 1e-9);
        assert!(lemma2_partial(2, 10).is_err());
        assert!(lemma2_partial(0, 10).is_err());
        assert!(lemma2_partial(1, 0).is_err());
        assert!(lemma2_partial(1, 2_000_000).is_err());
    }

    #[test]
    fn documented_mean_values() {
        assert_eq!(gk2_mean_sqrt(1, 1).unwrap(), 1.0);
        assert!((gk2_mean_sqrt(1, 5).unwrap() - 3.0).abs() < 1e-12);
        assert_eq!(gk2_mean_twisted(0, 1, 1).unwrap(), 1.0);
        assert!((gk2_mean_twisted(1, 1, 3).unwrap() - (1.0 + 3f64.sqrt())).abs() < 1e-12);
        assert!(gk2_mean_twisted(1, 9, 3).is_err());
        assert_eq!(phi_square_mean(1).unwrap(), 1.0);
        assert!((phi_square_mean(9).unwrap() - (1.0 + 6.0 / 9.0)).abs() < 1e-12);
    }

    #[test]
    fn twisted_mean_matches_direct_terms() {
        for (k, ell) in [(0u64, 3u64), (1, 3), (2, 15), (3, 15)] {
            let direct: f64 = (1..=999u64)
                .step_by(2)
                .map(|n| gauss_g((k * k) as i64, ell * n).unwrap().to_f64())
                .sum();
            assert!(
                (gk2_mean_twisted(k, ell, 999).unwrap() - direct).abs()
                    < 1e-9 * direct.abs().max(1.0)
            );
        }
    }
}
