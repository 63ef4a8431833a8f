//! Exact G_k(n) against the brute-force tau sum, and G(p/q) in closed form.
use realchar::gauss::{gauss_g, gauss_g_oracle, gauss_quadratic_closed, gauss_quadratic_direct};

fn main() -> realchar::Result<()> {
    for (k, n) in [(0, 9), (1, 3), (3, 9), (2, 3), (12, 225), (-7, 1155)] {
        let exact = gauss_g(k, n)?;
        println!(
            "G_{k}({n}) = {exact}  (tau oracle {:.6})",
            gauss_g_oracle(k, n)?
        );
    }
    for (p, q) in [(1, 2), (3, 2), (2, 5), (3, 5), (4, 9), (7, 12)] {
        let closed = gauss_quadratic_closed(p, q)?;
        let direct = gauss_quadratic_direct(p, q)?;
        println!(
            "G({p}/{q}) = {direct:.4}  normalized {:?} [{}]",
            closed.normalized, closed.case_label
        );
    }
    Ok(())
}
