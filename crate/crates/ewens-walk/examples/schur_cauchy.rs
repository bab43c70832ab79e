//! Schur principal specializations and dimension-sum estimates: the Cauchy
//! identity pins the sum of squared specializations to a single binomial,
//! and explicit chains bound the Plancherel mass of partitions with a long
//! first row.
//!
//! Run with: cargo run --example schur_cauchy

use ewens_walk::partitions::enumerate_partitions;
use ewens_walk::spectrum::{
    binomial, dimension_sum_bound_check, schur_principal, sum_schur_squares,
    tail_dimension_sums, Rational64, TailMode,
};
use num_traits::ToPrimitive;

fn main() -> ewens_walk::Result<()> {
    println!("Principal specializations s_lambda(1^3) for the partitions of 4:");
    for lam in enumerate_partitions(4)? {
        println!("  s_{}(1,1,1) = {}", lam, schur_principal(&lam, 3)?);
    }
    println!("A diagram with more than k rows specializes to zero.");
    println!();

    println!("Cauchy identity: sum of squares equals binom(n + k^2 - 1, n):");
    for (n, k) in [(4u32, 3u32), (8, 2), (10, 4)] {
        let total = sum_schur_squares(n, k)?;
        println!(
            "  n = {n:>2}, k = {k}: {total} = binom({}, {n})",
            n + k * k - 1
        );
        assert_eq!(total, binomial(n + k * k - 1, n));
    }
    println!();

    println!("Dimension mass by first row on S_12 (exact vs binomial chain):");
    println!(
        "{:>8} {:>16} {:>16} {:>8}",
        "row", "sum of d^2", "bound", "ratio"
    );
    for l1 in [4u32, 6, 8, 10, 12] {
        let (exact, bound) = dimension_sum_bound_check(12, l1)?;
        let ratio = exact.to_f64().unwrap() / bound.to_f64().unwrap();
        println!(
            "{:>8} {:>16} {:>16} {:>8.4}",
            l1,
            exact.to_string(),
            bound.to_string(),
            ratio
        );
    }
    println!();

    println!("Tail mass of long-first-row partitions against the finite-n chain:");
    for alpha in [Rational64::new(1, 3), Rational64::new(1, 2), Rational64::new(2, 3)] {
        for (mode, name) in [(TailMode::FirstRow, "first-row"), (TailMode::TwoRows, "two-row")] {
            let check = tail_dimension_sums(24, alpha, mode)?;
            println!(
                "  alpha = {alpha}, {name:>9}: ln(exact) = {:>8.2}, ln(bound) = {:>8.2}, holds: {}",
                ewens_walk::spectrum::ln_biguint(&check.exact),
                check.ln_bound,
                check.holds
            );
        }
    }
    Ok(())
}
