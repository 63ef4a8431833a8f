//! The transition function C(alpha), Riemann's function f, and the
//! differentiability of f and C' at rationals.

mod cfunc;
mod local;
mod quad;
mod riemann;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{invalid, Result};

pub use cfunc::{c_asymptotic, c_expr1, c_expr2, c_prime, c_value, Regime, EXPRESSION_SEAM};
pub use local::{
    classify_c_prime, classify_f, f_local_expansion, LocalExpansion, Verdict, VerdictKind, Witness,
    LEFT_SIDE_SIGN, RIGHT_SIDE_SIGN,
};
pub use riemann::riemann_f;

/// Truncation and tolerance policy for the series and quadratures.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Target absolute error.
    pub tolerance: f64,
    /// Hard ceiling on the number of series terms.
    pub k_max_cap: u64,
    /// Bisection depth limit for adaptive quadrature.
    pub quad_max_depth: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            tolerance: 1e-8,
            k_max_cap: 100_000_000,
            quad_max_depth: 40,
        }
    }
}

impl EvalConfig {
    pub fn with_tolerance(tolerance: f64) -> Self {
        EvalConfig {
            tolerance,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance >= 1e-12 && self.tolerance.is_finite()) {
            return invalid(format!(
                "tolerance must be finite and >= 1e-12, got {}",
                self.tolerance
            ));
        }
        if self.k_max_cap == 0 || self.k_max_cap > 100_000_000 {
            return invalid(format!(
                "k_max_cap must lie in [1, 10^8], got {}",
                self.k_max_cap
            ));
        }
        if self.quad_max_depth == 0 {
            return invalid("quad_max_depth must be positive");
        }
        Ok(())
    }
}

/// A reduced fraction `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rational {
    num: i64,
    den: u64,
}

impl Rational {
    /// Reduces `num / den`; rejects a zero denominator.
    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return invalid("denominator must be positive");
        }
        let g = gcd(num.unsigned_abs(), den).max(1);
        Ok(Rational {
            num: num / g as i64,
            den: den / g,
        })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
