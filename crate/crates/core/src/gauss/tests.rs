use super::*;
use crate::arith::{gcd, jacobi_odd, multiplicative_values};
use num_complex::Complex64;
use proptest::prelude::*;

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

#[test]
fn gauss_g_documented_values() {
    assert_eq!(gauss_g(0, 9).unwrap(), RootInteger::integer(6));
    assert_eq!(gauss_g(1, 3).unwrap(), RootInteger::new(1, 3).unwrap());
    assert_eq!(gauss_g(3, 9).unwrap(), RootInteger::integer(-3));
    assert_eq!(gauss_g(1, 9).unwrap(), RootInteger::ZERO);
    assert_eq!(gauss_g(17, 1).unwrap(), RootInteger::ONE);
    assert!(gauss_g(1, 4).is_err());
    assert!(gauss_g(1 << 32, 3).is_err());
    // the oracle confirms the -p^a case
    assert!((gauss_g_oracle(3, 9).unwrap() + 3.0).abs() < 1e-9);
}

#[test]
fn tau_documented_values() {
    assert!(close(
        tau_k_direct(0, 9).unwrap(),
        Complex64::new(6.0, 0.0),
        1e-12
    ));
    assert!(close(
        tau_k_direct(1, 3).unwrap(),
        Complex64::new(0.0, 3f64.sqrt()),
        1e-12
    ));
    for k in [-5, 0, 7] {
        assert!(close(
            tau_k_direct(k, 1).unwrap(),
            Complex64::new(1.0, 0.0),
            1e-15
        ));
    }
    assert!(tau_k_direct(1, 2_000_001).is_err());
    assert!(tau_k_direct(1, 6).is_err());
}

#[test]
fn oracle_documented_values() {
    assert!((gauss_g_oracle(1, 3).unwrap() - 3f64.sqrt()).abs() < 1e-12);
    assert!((gauss_g_oracle(0, 9).unwrap() - 6.0).abs() < 1e-12);
    assert!((gauss_g_oracle(2, 3).unwrap() + 3f64.sqrt()).abs() < 1e-12);
}

#[test]
fn lemma_matches_oracle() {
    for n in (1..=2000u64).step_by(2).filter(|n| n % 5 == 0 || *n < 300) {
        for k in -50i64..=50 {
            let exact = gauss_g(k, n).unwrap().to_f64();
            let brute = gauss_g_oracle(k, n).unwrap();
            assert!(
                (exact - brute).abs() <= 1e-6 * (1.0 + (n as f64).sqrt()),
                "G_{k}({n}): {exact} vs {brute}"
            );
        }
    }
}

#[test]
fn shift_negation_and_principal() {
    for n in (1..3000u64).step_by(2) {
        for k in -40i64..=40 {
            let g = gauss_g(k, n).unwrap();
            let two = jacobi_odd(2, n) as i64;
            assert_eq!(
                gauss_g(2 * k, n).unwrap() * RootInteger::integer(two),
                g,
                "shift at k={k}, n={n}"
            );
            let minus_one = jacobi_odd(n - 1, n) as i64;
            assert_eq!(
                RootInteger::integer(minus_one) * gauss_g(-k, n).unwrap(),
                g,
                "negation at k={k}, n={n}"
            );
        }
        let b = multiplicative_values(n).unwrap();
        let expected = if b.is_square { b.phi as i64 } else { 0 };
        assert_eq!(gauss_g(0, n).unwrap(), RootInteger::integer(expected));
    }
}

proptest! {
    #[test]
    fn multiplicative_in_n(a in 0u64..600, b in 0u64..600, k in -200i64..200) {
        let (n1, n2) = (2 * a + 1, 2 * b + 1);
        prop_assume!(gcd(n1, n2) == 1);
        prop_assert_eq!(gauss_g(k, n1 * n2).unwrap(), gauss_g(k, n1).unwrap() * gauss_g(k, n2).unwrap());
    }
}

#[test]
fn quadratic_documented_values() {
    assert!(close(
        gauss_quadratic_direct(1, 1).unwrap(),
        Complex64::new(0.0, 0.0),
        1e-12
    ));
    assert!(close(
        gauss_quadratic_direct(1, 2).unwrap(),
        Complex64::new(2.0, 2.0),
        1e-12
    ));
    assert!(close(
        gauss_quadratic_direct(2, 1).unwrap(),
        Complex64::new(2.0, 0.0),
        1e-12
    ));
    assert!(gauss_quadratic_direct(2, 4).is_err());

    assert_eq!(
        gauss_quadratic_closed(3, 5).unwrap().normalized,
        NormalizedGauss::Zero
    );
    assert_eq!(
        gauss_quadratic_closed(1, 2).unwrap().normalized,
        NormalizedGauss::PlusRootHalfOnePlusI
    );
    let e = gauss_quadratic_closed(2, 5).unwrap();
    assert_eq!(e.normalized, NormalizedGauss::PlusOne);
    assert!(close(
        e.value(5),
        gauss_quadratic_direct(2, 5).unwrap(),
        1e-9
    ));
    assert!(gauss_quadratic_closed(6, 9).is_err());
}

#[test]
fn closed_form_matches_direct() {
    for q in 1..=50u64 {
        for p in -(2 * q as i64)..(4 * q as i64) {
            if gcd(p.unsigned_abs(), q) != 1 {
                continue;
            }
            let direct = gauss_quadratic_direct(p, q).unwrap();
            let closed = gauss_quadratic_closed(p, q).unwrap();
            assert!(
                close(direct, closed.value(q), 1e-8 * q as f64),
                "p={p} q={q}: {direct} vs {:?}",
                closed
            );
        }
    }
}

#[test]
fn vanishes_exactly_on_odd_pairs() {
    for q in 1..=50u64 {
        for p in 1..2 * q as i64 {
            if gcd(p as u64, q) != 1 {
                continue;
            }
            let vanishes = gauss_quadratic_direct(p, q).unwrap().norm() <= 1e-8 * q as f64;
            assert_eq!(vanishes, p % 2 == 1 && q % 2 == 1, "p={p} q={q}");
        }
    }
}

#[test]
fn residue_table_reading_has_known_gaps() {
    // even q with p = 3 mod 4 lands on (1-i)/sqrt2, outside the literal rows
    let g = gauss_quadratic_direct(3, 2).unwrap();
    assert!(close(g, Complex64::new(2.0, -2.0), 1e-12));
    assert_ne!(
        residue_table_entry(3, 2).unwrap().normalized,
        gauss_quadratic_closed(3, 2).unwrap().normalized
    );
    // 2 is a Jacobi residue mod 9 but not a square mod 9
    let g = gauss_quadratic_direct(4, 9).unwrap();
    assert!(close(g, Complex64::new(6.0, 0.0), 1e-9));
    assert_eq!(
        residue_table_entry(4, 9).unwrap().normalized,
        NormalizedGauss::MinusOne
    );
    // rows that agree
    assert_eq!(
        residue_table_entry(1, 2).unwrap().normalized,
        NormalizedGauss::PlusRootHalfOnePlusI
    );
    assert_eq!(
        residue_table_entry(2, 5).unwrap().normalized,
        NormalizedGauss::PlusOne
    );
    assert_eq!(
        residue_table_entry(3, 5).unwrap().normalized,
        NormalizedGauss::Zero
    );
}

#[test]
fn unit_circle_sum_has_right_magnitude() {
    // |G(p/q)| is 0 or 2 sqrt(q)
    for q in 1..=40u64 {
        for p in 1..2 * q as i64 {
            if gcd(p as u64, q) == 1 {
                let n = gauss_quadratic_direct(p, q).unwrap().norm();
                assert!(n < 1e-9 || (n - 2.0 * (q as f64).sqrt()).abs() < 1e-9);
            }
        }
    }
}
