//! Gauss-type sums: the real sums G_k(n) behind tau_k(n), and the quadratic
//! Gauss sum G(p/q) with its closed-form classification.

mod lemma;
mod oracle;
mod quadratic;
mod root;

pub use lemma::{gauss_g, gauss_g_factored, gauss_g_prime_power};
pub use oracle::{gauss_g_oracle, tau_k_direct, ORACLE_CAP};
pub use quadratic::{
    gauss_quadratic_closed, gauss_quadratic_direct, residue_table_entry, GaussTableEntry,
    NormalizedGauss, DIRECT_Q_CAP,
};
pub use root::RootInteger;

/// Complex value type used for tau_k(n) and G(p/q).
pub type ComplexValue = num_complex::Complex64;

#[cfg(test)]
mod tests;
