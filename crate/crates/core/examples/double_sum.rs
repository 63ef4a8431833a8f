//! S(X, Y) by both algorithms, compared with the asymptotic main term.
use std::f64::consts::PI;

use realchar::charsum::{double_sum, Algorithm, SumJob};
use realchar::transition::{c_value, EvalConfig};

fn main() -> realchar::Result<()> {
    let cfg = EvalConfig::with_tolerance(1e-6);
    for (x, y) in [(3_000u64, 3_000u64), (100_000, 300), (300, 100_000)] {
        let direct = double_sum(&SumJob::new(x, y).algorithm(Algorithm::Direct))?;
        let periodic = double_sum(&SumJob::new(x, y).algorithm(Algorithm::Periodic))?;
        assert_eq!(direct.value, periodic.value);
        let alpha = y as f64 / x as f64;
        let main = 2.0 / (PI * PI) * c_value(alpha, &cfg)? * (x as f64).powf(1.5);
        println!(
            "S({x}, {y}) = {}  main term {main:.1}  direct {:.3}s periodic {:.3}s",
            direct.value, direct.elapsed_seconds, periodic.elapsed_seconds
        );
    }
    let twisted = double_sum(&SumJob::new(5_000, 5_000).ell(15))?;
    println!("S_15(5000, 5000) = {}", twisted.value);
    Ok(())
}
