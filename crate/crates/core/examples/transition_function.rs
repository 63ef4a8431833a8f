//! C(alpha) from both series, its limiting forms, and C'(alpha).
use realchar::transition::{c_asymptotic, c_expr1, c_expr2, c_prime, EvalConfig, Regime};

fn main() -> realchar::Result<()> {
    let cfg = EvalConfig::with_tolerance(1e-7);
    println!(
        "{:>6} {:>14} {:>14} {:>10} {:>12}",
        "alpha", "expr1", "expr2", "diff", "C'"
    );
    for alpha in [0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0] {
        let a = c_expr1(alpha, &cfg)?;
        let b = c_expr2(alpha, &cfg)?;
        println!(
            "{alpha:>6} {a:>14.9} {b:>14.9} {:>10.1e} {:>12.7}",
            a - b,
            c_prime(alpha, &cfg)?
        );
    }
    for alpha in [0.01, 0.04] {
        println!("small {alpha}: {:.8}", c_asymptotic(alpha, Regime::Small)?);
    }
    println!("large 50: {}", c_asymptotic(50.0, Regime::Large)?);
    Ok(())
}
