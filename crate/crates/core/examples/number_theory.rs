//! Jacobi symbols, factorizations and multiplicative functions.
use realchar::arith::{factorize, jacobi_symbol, multiplicative_values};

fn main() -> realchar::Result<()> {
    for (m, n) in [(2, 15), (3, 9), (1001, 9907), (5, 1)] {
        println!("({m}/{n}) = {}", jacobi_symbol(m, n)?);
    }
    for n in [45u64, 9_699_690, 1_000_000_007 * 3] {
        let f = factorize(n)?;
        let b = multiplicative_values(n)?;
        println!(
            "{n} = {:?}  phi={} sigma={} mu={} d={}",
            f.factors(),
            b.phi,
            b.sigma,
            b.mu,
            b.tau
        );
    }
    Ok(())
}
