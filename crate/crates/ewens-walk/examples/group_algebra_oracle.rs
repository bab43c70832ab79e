//! The brute-force oracle: exact group-algebra computations on small
//! symmetric groups. Verifies that elementary symmetric polynomials in the
//! Jucys-Murphy elements expand to cycle-count class sums, and that the
//! t-fold convolution of the Ewens measure matches character inversion.
//!
//! Run with: cargo run --release --example group_algebra_oracle

use ewens_walk::mixing::walk_class_distribution;
use ewens_walk::oracle::{
    all_permutations, brute_force_tv, brute_force_walk_distribution, elementary_symmetric_yjm,
    verify_diaconis_green, verify_matching, yjm,
};
use ewens_walk::spectrum::ThetaValue;
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> ewens_walk::Result<()> {
    println!("Jucys-Murphy elements of S_4:");
    for i in 2..=4u32 {
        println!("  R_{i} has {} transpositions", yjm(i, 4)?.support_size());
    }
    let e2 = elementary_symmetric_yjm(2, 4)?;
    println!(
        "  e_2(R_2, R_3, R_4) is supported on {} permutations, each with
  coefficient 1: exactly the class sums with 4 - 2 = 2 cycles.",
        e2.support_size()
    );
    println!();

    for n in 3..=5u32 {
        let report = verify_diaconis_green(n.min(5))?;
        println!(
            "Diaconis-Green expansion on S_{n}: {}",
            if report.all_pass() { "all degrees PASS" } else { "FAIL" }
        );
    }
    println!();

    println!("Convolution oracle against character inversion on S_5, theta = 3/2:");
    let theta = BigRational::new(BigInt::from(3), BigInt::from(2));
    for t in 1..=3u32 {
        let brute = brute_force_walk_distribution(5, &theta, t)?;
        let inverted = walk_class_distribution(5, &ThetaValue::Fixed(theta.clone()), t)?;
        let agree = all_permutations(5)?
            .iter()
            .zip(&brute)
            .all(|(p, prob)| inverted.probability_exact(&p.cycle_type()).unwrap() == *prob);
        println!(
            "  t = {t}: {} over all 120 elements, TV = {}",
            if agree { "exact match" } else { "MISMATCH" },
            brute_force_tv(5, &theta, t)?
        );
    }
    println!();

    let report = verify_matching(7)?;
    println!(
        "Matching-problem tails on S_7 (fixed-point counts vs closed form): {}",
        if report.all_pass() { "all thresholds PASS" } else { "FAIL" }
    );
    Ok(())
}
