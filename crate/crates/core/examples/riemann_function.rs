//! Riemann's function f and its difference quotients near rationals.
use realchar::transition::{riemann_f, EvalConfig};

fn main() -> realchar::Result<()> {
    let cfg = EvalConfig::with_tolerance(1e-8);
    for x in [0.0, 0.25, 0.5, 1.0 / 3.0, 1.0, 1.5, 7.25] {
        println!("f({x:.6}) = {:.10}", riemann_f(x, &cfg)?);
    }
    let h = 1e-5;
    for (p, q) in [(1.0, 1.0), (1.0, 3.0), (1.0, 2.0)] {
        let c = p / q;
        let f0 = riemann_f(c, &cfg)?;
        let right = (riemann_f(c + h, &cfg)? - f0) / h;
        let left = (riemann_f(c - h, &cfg)? - f0) / -h;
        println!("at {p}/{q}: quotients {right:.4} (right) {left:.4} (left)");
    }
    Ok(())
}
