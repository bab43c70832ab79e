//! Exact mixing of the walk by character inversion: the t-step class
//! distribution and the total variation distance from uniform, as exact
//! rationals on a small group.
//!
//! Run with: cargo run --example exact_mixing

use ewens_walk::mixing::{total_variation_rational, walk_class_distribution};
use ewens_walk::spectrum::ThetaValue;
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> ewens_walk::Result<()> {
    let theta = ThetaValue::fixed_int(2);

    println!("Class distribution of the Ewens(2) walk on S_3:");
    for t in 0..=3u32 {
        let dist = walk_class_distribution(3, &theta, t)?;
        print!("  t = {t}:");
        for (mu, p) in dist.classes.iter().zip(dist.probabilities_exact.as_ref().unwrap()) {
            print!("  P({mu}) = {p}");
        }
        println!();
    }
    println!("At t = 0 the walk is a point mass at the identity; one step is");
    println!("the Ewens measure itself; each further step convolves it in.");
    println!();

    println!("Total variation distance to uniform on S_3 (exact):");
    let theta_rat = BigRational::from_integer(BigInt::from(2));
    for t in 0..=5u32 {
        let tv = total_variation_rational(3, &theta_rat, t)?;
        println!("  t = {t}: {tv}");
    }
    println!("The distance decays geometrically at rate 1/4, the second");
    println!("eigenvalue of the walk on S_3 at theta = 2.");
    println!();

    println!("A bigger exact run, S_8 at theta = 2:");
    for t in 1..=6u32 {
        let tv = total_variation_rational(8, &theta_rat, t)?;
        println!("  t = {t}: {:.10}", rational_to_f64(&tv));
    }
    Ok(())
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap()
}
