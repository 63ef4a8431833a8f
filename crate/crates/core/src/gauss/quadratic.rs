//! The quadratic Gauss sum G(p/q) = sum over v mod 2q of exp(i pi p v^2 / q).

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, jacobi_odd};
use crate::error::{invalid, Result};

/// Cap on `q` for the 2q-term direct sum.
pub const DIRECT_Q_CAP: u64 = 100_000;

/// Possible values of G(p/q) / (2 sqrt q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizedGauss {
    Zero,
    PlusOne,
    MinusOne,
    PlusI,
    MinusI,
    /// `(1 + i) / sqrt 2`
    PlusRootHalfOnePlusI,
    /// `-(1 + i) / sqrt 2`
    MinusRootHalfOnePlusI,
    /// `(1 - i) / sqrt 2`
    PlusRootHalfOneMinusI,
    /// `-(1 - i) / sqrt 2`
    MinusRootHalfOneMinusI,
}

impl NormalizedGauss {
    pub fn value(self) -> Complex64 {
        use NormalizedGauss::*;
        let h = FRAC_1_SQRT_2;
        match self {
            Zero => Complex64::new(0.0, 0.0),
            PlusOne => Complex64::new(1.0, 0.0),
            MinusOne => Complex64::new(-1.0, 0.0),
            PlusI => Complex64::new(0.0, 1.0),
            MinusI => Complex64::new(0.0, -1.0),
            PlusRootHalfOnePlusI => Complex64::new(h, h),
            MinusRootHalfOnePlusI => Complex64::new(-h, -h),
            PlusRootHalfOneMinusI => Complex64::new(h, -h),
            MinusRootHalfOneMinusI => Complex64::new(-h, h),
        }
    }

    fn signed(plus: Self, minus: Self, sign: i8) -> Self {
        if sign > 0 {
            plus
        } else {
            minus
        }
    }
}

/// A closed-form classification of G(p/q) with the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussTableEntry {
    pub normalized: NormalizedGauss,
    pub case_label: String,
}

impl GaussTableEntry {
    /// The full value `2 sqrt(q) * normalized`.
    pub fn value(&self, q: u64) -> Complex64 {
        self.normalized.value() * (2.0 * (q as f64).sqrt())
    }
}

fn check_pair(p: i64, q: u64) -> Result<()> {
    if q == 0 {
        return invalid("q must be positive");
    }
    if gcd(p.unsigned_abs(), q) != 1 {
        return invalid(format!("p = {p} and q = {q} are not coprime"));
    }
    Ok(())
}

/// G(p/q) by direct summation of the 2q terms.
pub fn gauss_quadratic_direct(p: i64, q: u64) -> Result<Complex64> {
    check_pair(p, q)?;
    if q > DIRECT_Q_CAP {
        return invalid(format!("q = {q} exceeds direct-sum cap {DIRECT_Q_CAP}"));
    }
    let m = 2 * q;
    let pr = p.rem_euclid(m as i64) as u128;
    let mut acc = Complex64::new(0.0, 0.0);
    for v in 0..m {
        let t = (pr * (v as u128 * v as u128) % m as u128) as f64;
        let (s, c) = (PI * t / q as f64).sin_cos();
        acc += Complex64::new(c, s);
    }
    Ok(acc)
}

/// Closed form of G(p/q) / (2 sqrt q) for coprime `p`, `q`.
///
/// * `p`, `q` both odd: zero.
/// * `q` even (so `p` odd): `(1+i)/sqrt2 * eps_p^{-1} * (2q/p)`, where
///   `eps_p` is `1` or `i` as `p` is `1` or `3 mod 4`.
/// * `q` odd, `p` even: `(p/2 / q) * eps_q`.
///
/// `p` is first reduced into `[0, 2q)`, which leaves G unchanged.
pub fn gauss_quadratic_closed(p: i64, q: u64) -> Result<GaussTableEntry> {
    use NormalizedGauss::*;
    check_pair(p, q)?;
    let m = 2 * q;
    let pr = p.rem_euclid(m as i64) as u64;
    let (normalized, case_label) = if pr % 2 == 1 && q % 2 == 1 {
        (Zero, "p, q odd".to_string())
    } else if q % 2 == 0 {
        let chi = jacobi_odd(m % pr, pr);
        if pr % 4 == 1 {
            (
                NormalizedGauss::signed(PlusRootHalfOnePlusI, MinusRootHalfOnePlusI, chi),
                format!("q even, p = 1 mod 4, (2q/p) = {chi}"),
            )
        } else {
            (
                NormalizedGauss::signed(PlusRootHalfOneMinusI, MinusRootHalfOneMinusI, chi),
                format!("q even, p = 3 mod 4, (2q/p) = {chi}"),
            )
        }
    } else {
        let chi = jacobi_odd(pr / 2, q);
        if q % 4 == 1 {
            (
                NormalizedGauss::signed(PlusOne, MinusOne, chi),
                format!("q = 1 mod 4, (p/2 / q) = {chi}"),
            )
        } else {
            (
                NormalizedGauss::signed(PlusI, MinusI, chi),
                format!("q = 3 mod 4, (p/2 / q) = {chi}"),
            )
        }
    };
    Ok(GaussTableEntry {
        normalized,
        case_label,
    })
}

fn is_square_mod(a: u64, m: u64) -> bool {
    let a = a % m;
    (0..m).any(|v| (v as u128 * v as u128 % m as u128) as u64 == a)
}

/// The seven-row residue table, read literally.
///
/// Residue conditions are decided by exhaustive search: "p is a square
/// mod 2q" for even `q` and "p/2 is a square mod q" for odd `q`. This
/// classification ignores `p mod 4` for even `q` and uses actual
/// squareness rather than the Jacobi symbol for odd `q`, so it is kept
/// only to be compared against [`gauss_quadratic_direct`].
pub fn residue_table_entry(p: i64, q: u64) -> Result<GaussTableEntry> {
    use NormalizedGauss::*;
    check_pair(p, q)?;
    let m = 2 * q;
    let pr = p.rem_euclid(m as i64) as u64;
    let (normalized, label) = if pr % 2 == 1 && q % 2 == 1 {
        (Zero, "p, q odd")
    } else if q % 2 == 0 {
        if is_square_mod(pr, m) {
            (PlusRootHalfOnePlusI, "q even, p square mod 2q")
        } else {
            (MinusRootHalfOnePlusI, "q even, p not square mod 2q")
        }
    } else {
        let square = is_square_mod(pr / 2, q);
        match (q % 4 == 1, square) {
            (true, true) => (PlusOne, "q = 1 mod 4, p/2 square mod q"),
            (true, false) => (MinusOne, "q = 1 mod 4, p/2 not square mod q"),
            (false, true) => (PlusI, "q = 3 mod 4, p/2 square mod q"),
            (false, false) => (MinusI, "q = 3 mod 4, p/2 not square mod q"),
        }
    };
    Ok(GaussTableEntry {
        normalized,
        case_label: label.to_string(),
    })
}
