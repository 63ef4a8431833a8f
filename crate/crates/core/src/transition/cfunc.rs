//! The transition function C(alpha), its two series expressions, its
//! limiting forms and its derivative.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::quad::oscillatory_tail;
use super::riemann::riemann_f;
use super::EvalConfig;
use crate::error::{invalid, Error, Result};

/// Inner oscillatory integrals decay like `u^{-5/2}`.
const DECAY: f64 = 2.5;

fn check_alpha(alpha: f64, allow_zero: bool) -> Result<()> {
    if !alpha.is_finite() || alpha < 0.0 || (!allow_zero && alpha == 0.0) {
        return invalid(format!(
            "alpha must be {}, got {alpha}",
            if allow_zero { ">= 0" } else { "> 0" }
        ));
    }
    Ok(())
}

/// Smallest `K` with `bound / K^3 <= budget`, checked against the cap.
fn truncation_point(bound: f64, budget: f64, cap: u64) -> Result<u64> {
    let k = (bound / budget).cbrt().ceil().max(1.0);
    if k > cap as f64 {
        return Err(Error::NonConvergence(format!(
            "series needs {k} terms, cap is {cap}"
        )));
    }
    Ok(k as u64)
}

/// C(alpha) from the first expression,
/// `sqrt(a) + (1/2π) Σ k^{-2} ∫_0^a sqrt(y) (1 - cos(2πk²/y) + sin(2πk²/y)) dy`.
///
/// The constant part of every integrand sums to `(π/18) a^{3/2}` exactly.
/// What remains is `(1/2π) Σ k J_k` with
/// `J_k = k^3 ∫_{k²/a}^∞ u^{-5/2} (sin 2πu - cos 2πu) du`, and
/// `|k^{-2} J_k| / 2π <= sqrt2 a^{5/2} / (2π² k^4)` fixes the truncation.
pub fn c_expr1(alpha: f64, cfg: &EvalConfig) -> Result<f64> {
    check_alpha(alpha, true)?;
    cfg.validate()?;
    if alpha == 0.0 {
        return Ok(0.0);
    }
    let tol = cfg.tolerance;
    let tail_bound = 2f64.sqrt() * alpha.powf(2.5) / (2.0 * PI * PI) / 3.0;
    let k_max = truncation_point(tail_bound, 0.5 * tol, cfg.k_max_cap)?;
    let mut corrections = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let kf = k as f64;
        let budget = PI * tol / (2f64.sqrt() * k_max as f64 * kf);
        let t = oscillatory_tail(DECAY, kf * kf / alpha, budget, cfg.quad_max_depth)?;
        corrections.push(kf * (t.im - t.re) / (2.0 * PI));
    }
    let series: f64 = corrections.iter().sum();
    Ok(alpha.sqrt() + PI / 18.0 * alpha.powf(1.5) + series)
}

/// C(alpha) from the second expression,
/// `a + a^{3/2} (2/π) Σ k^{-2} ∫_0^{1/a} sqrt(y) sin(πk²/2y) dy`.
///
/// With `u = k²/4y` the k-th integral is `(k³/8) Im T(a k²/4)`; the term
/// is bounded by `8/(π² a k^4)`.
pub fn c_expr2(alpha: f64, cfg: &EvalConfig) -> Result<f64> {
    check_alpha(alpha, false)?;
    cfg.validate()?;
    let tol = cfg.tolerance;
    let tail_bound = 8.0 / (3.0 * PI * PI * alpha);
    let k_max = truncation_point(tail_bound, 0.5 * tol, cfg.k_max_cap)?;
    let scale = alpha.powf(1.5) / (4.0 * PI);
    let mut corrections = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let kf = k as f64;
        let budget = 0.5 * tol / (k_max as f64 * scale * kf);
        let t = oscillatory_tail(DECAY, alpha * kf * kf / 4.0, budget, cfg.quad_max_depth)?;
        corrections.push(scale * kf * t.im);
    }
    let series: f64 = corrections.iter().sum();
    Ok(alpha + series)
}

/// Switch-over between the two expressions.
pub const EXPRESSION_SEAM: f64 = 1.0;

/// C(alpha): the first expression up to 1, the second beyond.
pub fn c_value(alpha: f64, cfg: &EvalConfig) -> Result<f64> {
    check_alpha(alpha, true)?;
    if alpha <= EXPRESSION_SEAM {
        c_expr1(alpha, cfg)
    } else {
        c_expr2(alpha, cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Small,
    Large,
}

/// Leading behaviour: `sqrt(a) + (π/18) a^{3/2}` near 0, `a` near infinity.
pub fn c_asymptotic(alpha: f64, regime: Regime) -> Result<f64> {
    check_alpha(alpha, false)?;
    Ok(match regime {
        Regime::Small => alpha.sqrt() + PI / 18.0 * alpha.powf(1.5),
        Regime::Large => alpha,
    })
}

/// C'(alpha) = (3 / 2a) C(a) - 1/2 - f(a/2) / a.
///
/// Follows from differentiating `a^{-3/2} C(a)` through the second
/// expression; no numerical differentiation of C is involved.
pub fn c_prime(alpha: f64, cfg: &EvalConfig) -> Result<f64> {
    check_alpha(alpha, false)?;
    let c = c_value(alpha, cfg)?;
    let f = riemann_f(0.5 * alpha, cfg)?;
    Ok(1.5 / alpha * c - 0.5 - f / alpha)
}
