//! Quadrature for the oscillatory integrals behind C(alpha).
//!
//! Everything reduces to `T(s, U) = ∫_U^∞ u^{-s} e^{2πiu} du` with `U > 0`.
//! The range up to a cut-off is split into unit cells of `u` (one period
//! each) integrated by adaptive Gauss-Kronrod; the rest is closed by
//! repeated integration by parts, which has an explicit remainder bound.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Beyond this point the integration-by-parts expansion takes over.
const TAIL_START: f64 = 16.0;
const MAX_TAIL_TERMS: usize = 60;

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
// Gauss weights for the embedded 7-point rule (nodes XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gauss_kronrod15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let kronrod = kronrod * half;
    let gauss = gauss * half;
    (kronrod, (kronrod - gauss).norm())
}

/// Adaptive bisection with a Gauss-Kronrod 7/15 pair, absolute tolerance.
pub(crate) fn adaptive<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    depth: u32,
) -> Result<Complex64> {
    let (value, err) = gauss_kronrod15(f, a, b);
    if err <= tol {
        return Ok(value);
    }
    if depth == 0 {
        return Err(Error::NonConvergence(format!(
            "quadrature on [{a}, {b}] stalled with error {err:e} > {tol:e}"
        )));
    }
    let mid = 0.5 * (a + b);
    Ok(adaptive(f, a, mid, 0.5 * tol, depth - 1)? + adaptive(f, mid, b, 0.5 * tol, depth - 1)?)
}

/// `∫_N^∞ u^{-s} e^{2πiu} du` by integration by parts, for `N >= TAIL_START`.
///
/// One step gives `T(s) = i e^{2πiN} N^{-s}/2π + s/(2πi) T(s+1)`, and
/// `|T(s)| <= 2 N^{-s}/2π` bounds what is left after the last step.
fn ibp_tail(s: f64, n: f64, tol: f64) -> Result<Complex64> {
    let omega = TAU;
    let phase = Complex64::from_polar(1.0, omega * n.fract());
    let mut factor = Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..MAX_TAIL_TERMS {
        let sigma = s + j as f64;
        let lead = Complex64::i() * phase * (n.powf(-sigma) / omega);
        acc += factor * lead;
        factor *= Complex64::new(0.0, -sigma / omega);
        let remainder = factor.norm() * 2.0 * n.powf(-(sigma + 1.0)) / omega;
        if remainder <= tol {
            return Ok(acc);
        }
    }
    Err(Error::NonConvergence(format!(
        "tail expansion at u = {n} did not reach {tol:e}"
    )))
}

/// `T(s, U) = ∫_U^∞ u^{-s} e^{2πiu} du` to absolute error `tol`.
pub(crate) fn oscillatory_tail(s: f64, lower: f64, tol: f64, max_depth: u32) -> Result<Complex64> {
    debug_assert!(lower > 0.0 && s > 1.0);
    if lower >= TAIL_START {
        return ibp_tail(s, lower, tol);
    }
    let f = |u: f64| Complex64::from_polar(u.powf(-s), TAU * u.fract());
    let mut edges = vec![lower];
    let mut cell = lower.floor() + 1.0;
    while cell <= TAIL_START {
        edges.push(cell);
        cell += 1.0;
    }
    let pieces = edges.len() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for w in edges.windows(2) {
        acc += adaptive(&f, w[0], w[1], tol / pieces, max_depth)?;
    }
    Ok(acc + ibp_tail(s, TAIL_START, tol / pieces)?)
}
