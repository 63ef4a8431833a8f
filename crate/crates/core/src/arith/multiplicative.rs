use serde::{Deserialize, Serialize};

use super::factor::{factorize, Factorization};
use crate::error::Result;

/// Classical multiplicative functions of a single integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativeBundle {
    /// Euler's totient.
    pub phi: u64,
    /// Sum of divisors. Can exceed `u64` near the top of the input range.
    pub sigma: u128,
    /// Möbius function.
    pub mu: i8,
    /// Number of divisors.
    pub tau: u64,
    pub is_square: bool,
    pub squarefree_kernel: u64,
}

impl Factorization {
    pub fn multiplicative(&self) -> MultiplicativeBundle {
        let mut phi = 1u64;
        let mut sigma = 1u128;
        let mut tau = 1u64;
        let mut mu = 1i8;
        for &(p, e) in self.factors() {
            let pe1 = p.pow(e - 1);
            phi *= pe1 * (p - 1);
            let mut s = 0u128;
            let mut pk = 1u128;
            for _ in 0..=e {
                s += pk;
                pk *= p as u128;
            }
            sigma *= s;
            tau *= e as u64 + 1;
            mu = if e > 1 { 0 } else { -mu };
        }
        MultiplicativeBundle {
            phi,
            sigma,
            mu,
            tau,
            is_square: self.is_square(),
            squarefree_kernel: self.squarefree_kernel(),
        }
    }
}

/// φ, σ, μ, d, squareness and squarefree kernel of `n >= 1`.
pub fn multiplicative_values(n: u64) -> Result<MultiplicativeBundle> {
    Ok(factorize(n)?.multiplicative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    /// O(n) enumeration of every field.
    fn enumerate(n: u64) -> MultiplicativeBundle {
        let phi = (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64;
        let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        let sigma = divisors.iter().map(|&d| d as u128).sum();
        let tau = divisors.len() as u64;
        let squarefree = (2..=n).take_while(|d| d * d <= n).all(|d| n % (d * d) != 0);
        let omega = divisors
            .iter()
            .filter(|&&d| d > 1 && (2..d).all(|e| d % e != 0))
            .count();
        let mu = if !squarefree {
            0
        } else if omega % 2 == 0 {
            1
        } else {
            -1
        };
        let root = (1..=n).take_while(|r| r * r <= n).last().unwrap_or(0);
        let kernel = divisors
            .iter()
            .filter(|&&d| d > 1 && (2..d).all(|e| d % e != 0))
            .product();
        MultiplicativeBundle {
            phi,
            sigma,
            mu,
            tau,
            is_square: root * root == n,
            squarefree_kernel: kernel,
        }
    }

    #[test]
    fn documented_values() {
        let one = multiplicative_values(1).unwrap();
        assert_eq!(
            (
                one.phi,
                one.sigma,
                one.mu,
                one.tau,
                one.is_square,
                one.squarefree_kernel
            ),
            (1, 1, 1, 1, true, 1)
        );
        let nine = multiplicative_values(9).unwrap();
        assert_eq!(
            (
                nine.phi,
                nine.sigma,
                nine.mu,
                nine.tau,
                nine.is_square,
                nine.squarefree_kernel
            ),
            (6, 13, 0, 3, true, 3)
        );
        let fifteen = multiplicative_values(15).unwrap();
        assert_eq!(
            (
                fifteen.phi,
                fifteen.sigma,
                fifteen.mu,
                fifteen.tau,
                fifteen.is_square,
                fifteen.squarefree_kernel
            ),
            (8, 24, 1, 4, false, 15)
        );
        assert!(multiplicative_values(0).is_err());
    }

    #[test]
    fn agrees_with_enumeration() {
        for n in (1..=10_000u64).filter(|n| n % 7 == 1 || *n < 600) {
            assert_eq!(multiplicative_values(n).unwrap(), enumerate(n), "n = {n}");
        }
    }

    #[test]
    fn totient_divisor_sum_and_squarefree() {
        for n in 1..=3000u64 {
            let s: u64 = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| multiplicative_values(d).unwrap().phi)
                .sum();
            assert_eq!(s, n);
            let b = multiplicative_values(n).unwrap();
            assert_eq!(b.mu != 0, b.squarefree_kernel == n);
            assert_eq!(b.phi == n, n == 1);
        }
    }
}
