//! Local behaviour of f at rationals and the resulting differentiability
//! verdicts for f and C'.
//!
//! Near a reduced `p/q`,
//! `f(p/q + h) = f(p/q) - h + s·√(2|h|) + O(|h|^{3/2})` where the square-root
//! coefficient `s` depends on the side and on G(p/q).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::riemann::riemann_f;
use super::{EvalConfig, Rational};
use crate::error::{invalid, Result};
use crate::gauss::gauss_quadratic_direct;

/// Sign multiplying `sqrt_coeff_right·√(2h)` for `h > 0`.
pub const RIGHT_SIDE_SIGN: f64 = 1.0;
/// Sign multiplying `sqrt_coeff_left·√(2|h|)` for `h < 0`.
pub const LEFT_SIDE_SIGN: f64 = -1.0;

/// Normalized coefficients at or below this count as zero.
const VANISH: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LocalExpansion {
    pub center: Rational,
    pub value_at_center: f64,
    pub linear_coeff: f64,
    pub sqrt_coeff_right: f64,
    pub sqrt_coeff_left: f64,
}

impl LocalExpansion {
    /// Model value of `f(center + h)` without the `|h|^{3/2}` remainder.
    pub fn predict(&self, h: f64) -> f64 {
        let root = (2.0 * h.abs()).sqrt();
        let singular = if h > 0.0 {
            RIGHT_SIDE_SIGN * self.sqrt_coeff_right * root
        } else if h < 0.0 {
            LEFT_SIDE_SIGN * self.sqrt_coeff_left * root
        } else {
            0.0
        };
        self.value_at_center + self.linear_coeff * h + singular
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Differentiable,
    RightOnly,
    LeftOnly,
    Neither,
}

/// The Gauss-sum data a verdict was read from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Point at which f was examined.
    pub center: Rational,
    pub gauss_re: f64,
    pub gauss_im: f64,
    /// `(Re G - Im G) / (2√q)`.
    pub right_test: f64,
    /// `(Re G + Im G) / (2√q)`.
    pub left_test: f64,
    pub right_vanishes: bool,
    pub left_vanishes: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub witness: Witness,
}

fn gauss_at(center: Rational) -> Result<Complex64> {
    if center.num() == 0 {
        return invalid("center numerator must be nonzero");
    }
    let g = gauss_quadratic_direct(center.num(), center.den())?;
    // the exact components are integers or zero; clear rounding residue
    let snap = |v: f64| {
        if v.abs() <= VANISH * center.den() as f64 {
            0.0
        } else {
            v
        }
    };
    Ok(Complex64::new(snap(g.re), snap(g.im)))
}

/// Expansion of f about `center`; `p = 0` is rejected.
pub fn f_local_expansion(center: Rational, cfg: &EvalConfig) -> Result<LocalExpansion> {
    let g = gauss_at(center)?;
    let q = center.den() as f64;
    let coeff = |v: f64| {
        if v.abs() <= VANISH * q.sqrt() {
            0.0
        } else {
            v / (2.0 * q)
        }
    };
    Ok(LocalExpansion {
        center,
        value_at_center: riemann_f(center.to_f64(), cfg)?,
        linear_coeff: -1.0,
        sqrt_coeff_right: coeff(g.re - g.im),
        sqrt_coeff_left: coeff(g.re + g.im),
    })
}

/// Differentiability of f at a reduced nonzero rational.
pub fn classify_f(center: Rational) -> Result<Verdict> {
    let g = gauss_at(center)?;
    let norm = 2.0 * (center.den() as f64).sqrt();
    let right_test = (g.re - g.im) / norm;
    let left_test = (g.re + g.im) / norm;
    let right_vanishes = right_test.abs() <= VANISH;
    let left_vanishes = left_test.abs() <= VANISH;
    let kind = match (right_vanishes, left_vanishes) {
        (true, true) => VerdictKind::Differentiable,
        (true, false) => VerdictKind::RightOnly,
        (false, true) => VerdictKind::LeftOnly,
        (false, false) => VerdictKind::Neither,
    };
    Ok(Verdict {
        kind,
        witness: Witness {
            center,
            gauss_re: g.re,
            gauss_im: g.im,
            right_test,
            left_test,
            right_vanishes,
            left_vanishes,
        },
    })
}

/// Differentiability of C' at a positive rational `a/b`.
///
/// C' differs from `-f(alpha/2)/alpha` by a C¹ function, so the verdict is
/// that of f at `alpha/2`. That is differentiable exactly when
/// `a ≡ 2 (mod 4)` and `b` is odd.
pub fn classify_c_prime(alpha: Rational) -> Result<Verdict> {
    if alpha.num() <= 0 {
        return invalid(format!("alpha must be positive, got {alpha}"));
    }
    let half = Rational::new(alpha.num(), 2 * alpha.den())?;
    let verdict = classify_f(half)?;
    debug_assert_eq!(
        verdict.kind == VerdictKind::Differentiable,
        alpha.num().rem_euclid(4) == 2 && alpha.den() % 2 == 1
    );
    Ok(verdict)
}
