use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd};
use crate::error::{invalid, Result};

/// Exact real number `r * sqrt(d)` with `d` squarefree.
///
/// Zero is always stored as `0 * sqrt(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootInteger {
    r: i64,
    d: u64,
}

impl RootInteger {
    pub const ZERO: RootInteger = RootInteger { r: 0, d: 1 };
    pub const ONE: RootInteger = RootInteger { r: 1, d: 1 };

    /// Checked constructor; rejects a radicand that is zero or not squarefree.
    pub fn new(r: i64, d: u64) -> Result<Self> {
        if d == 0 || !factorize(d)?.is_squarefree() {
            return invalid(format!("radicand {d} is not squarefree"));
        }
        Ok(Self::canonical(r, d))
    }

    pub fn integer(r: i64) -> Self {
        RootInteger { r, d: 1 }
    }

    /// `r * sqrt(p)` for a prime `p`.
    pub(crate) fn times_root_prime(r: i64, p: u64) -> Self {
        Self::canonical(r, p)
    }

    fn canonical(r: i64, d: u64) -> Self {
        if r == 0 {
            RootInteger::ZERO
        } else {
            RootInteger { r, d }
        }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.r as f64 * (self.d as f64).sqrt()
    }
}

impl Mul for RootInteger {
    type Output = RootInteger;

    fn mul(self, rhs: RootInteger) -> RootInteger {
        // (r1 sqrt(g a)) (r2 sqrt(g b)) = r1 r2 g sqrt(a b), with g, a, b pairwise coprime
        let g = gcd(self.d, rhs.d);
        let r = self.r as i128 * rhs.r as i128 * g as i128;
        let d = (self.d / g) as u128 * (rhs.d / g) as u128;
        let r = i64::try_from(r).expect("RootInteger coefficient overflow");
        let d = u64::try_from(d).expect("RootInteger radicand overflow");
        RootInteger::canonical(r, d)
    }
}

impl Neg for RootInteger {
    type Output = RootInteger;

    fn neg(self) -> RootInteger {
        RootInteger::canonical(-self.r, self.d)
    }
}

impl fmt::Display for RootInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "{}", self.r)
        } else {
            write!(f, "{}*sqrt({})", self.r, self.d)
        }
    }
}
