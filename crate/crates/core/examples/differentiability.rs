//! Verdicts for f and C' at small rationals, with local expansions.
use realchar::transition::{classify_c_prime, classify_f, f_local_expansion, EvalConfig, Rational};

fn main() -> realchar::Result<()> {
    let cfg = EvalConfig::with_tolerance(1e-7);
    for (p, q) in [(1, 1), (1, 2), (3, 2), (1, 3), (2, 5), (1, 4)] {
        let center = Rational::new(p, q)?;
        let verdict = classify_f(center)?;
        let e = f_local_expansion(center, &cfg)?;
        println!(
            "f at {center}: {:?}  sqrt coefficients right {:+.4} left {:+.4}",
            verdict.kind, e.sqrt_coeff_right, e.sqrt_coeff_left
        );
    }
    for (a, b) in [(2, 1), (1, 1), (6, 5), (10, 3), (4, 1)] {
        println!(
            "C' at {a}/{b}: {:?}",
            classify_c_prime(Rational::new(a, b)?)?.kind
        );
    }
    Ok(())
}
