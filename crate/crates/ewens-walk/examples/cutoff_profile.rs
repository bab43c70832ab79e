//! The cutoff phenomenon at theta = n: exact total variation by characters,
//! the spectral upper bound, and the Chebyshev fixed-point lower bound, per
//! step. The distance stays near 1 until about log2(n) steps and then
//! collapses.
//!
//! Run with: cargo run --release --example cutoff_profile

use ewens_walk::mixing::{cutoff_lower_bound, cutoff_profile};
use ewens_walk::spectrum::ThetaValue;

fn main() -> ewens_walk::Result<()> {
    let n = 16u32;
    let report = cutoff_profile(n, &ThetaValue::LinkedToN, 8)?;

    println!("Mixing profile of the Ewens(n) walk on S_{n}:");
    println!("{:>3} {:>12} {:>12} {:>12}", "t", "lower", "exact TV", "upper");
    for r in &report.records {
        println!(
            "{:>3} {:>12.6} {:>12.6} {:>12.6}",
            r.t,
            r.lower_bound,
            r.exact_tv.unwrap(),
            r.upper_bound
        );
    }
    println!();
    println!(
        "Cutoff estimate: log2({n}) ~ {} steps; TV first drops below 1/2 at t = {}.",
        report.cutoff_estimate_steps(),
        report.t_at_tv_half().unwrap()
    );
    println!();

    println!("Pre-cutoff floor 1 - 2^(-gamma) at t = round(log2 n - gamma):");
    for gamma in [1.0f64, 2.0, 3.0] {
        let (value, t) = cutoff_lower_bound(n, gamma)?;
        let exact = report
            .records
            .iter()
            .find(|r| r.t == t)
            .and_then(|r| r.exact_tv);
        println!(
            "  gamma = {gamma}: floor {value:.4} at t = {t}, exact TV there = {}",
            exact.map(|v| format!("{v:.4}")).unwrap_or_else(|| "-".into())
        );
    }
    println!();
    println!("Summary: {}", report.summary_json());
    Ok(())
}
