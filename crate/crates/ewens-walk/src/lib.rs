//! Random walks on the symmetric group driven by the Ewens distribution.
//!
//! The walk on `S_n` picks a fresh permutation with probability proportional
//! to `theta^(number of cycles)` at each step and multiplies it onto the
//! current state. This crate computes its spectrum exactly (eigenvalues are
//! content polynomials over the rising factorial), the exact t-step
//! distribution and total variation distance through character inversion,
//! rigorous upper and lower mixing bounds, and seeded Monte Carlo simulation,
//! together with a brute-force oracle on small groups that cross-checks all
//! of it.
//!
//! Entry points:
//! - [`partitions`]: integer partitions, hooks, contents, dimensions.
//! - [`characters`]: Murnaghan-Nakayama characters and full tables.
//! - [`spectrum`]: eigenvalues, Schur specializations, dominance bounds.
//! - [`mixing`]: exact TV distance, upper/lower bounds, cutoff profiles.
//! - [`sampler`]: Ewens sampling and walk simulation.
//! - [`oracle`]: exact group-algebra ground truth for `n <= 7`.

pub mod characters;
pub mod cli;
mod error;
pub mod mixing;
pub mod oracle;
pub mod partitions;
pub mod permutation;
pub mod sampler;
pub mod spectrum;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use permutation::Permutation;
pub use spectrum::ThetaValue;

/// Size guards for the expensive code paths. All overridable, either directly
/// or through `EWENS_WALK_*` environment variables (see [`Caps::from_env`]).
#[derive(Debug, Clone)]
pub struct Caps {
    /// Largest `n` for [`partitions::enumerate_partitions`].
    pub enumeration_max: u32,
    /// Largest `n` for full character tables.
    pub character_table_max: u32,
    /// Largest `n` for which exact rational eigenvalues are kept alongside
    /// the signed-log form.
    pub exact_mode_max: u32,
    /// Largest `n` for the exact-rational mixing path; floats beyond.
    pub rational_mixing_max: u32,
    /// Hard limit of the brute-force oracle.
    pub oracle_max: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration_max: 60,
            character_table_max: 25,
            exact_mode_max: 20,
            rational_mixing_max: 12,
            oracle_max: 7,
        }
    }
}

impl Caps {
    /// Defaults with `EWENS_WALK_ENUMERATION_MAX`, `EWENS_WALK_CHARACTER_TABLE_MAX`,
    /// `EWENS_WALK_EXACT_MODE_MAX`, `EWENS_WALK_RATIONAL_MIXING_MAX` and
    /// `EWENS_WALK_ORACLE_MAX` applied on top when set.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        let read = |key: &str| std::env::var(key).ok().and_then(|v| v.parse::<u32>().ok());
        if let Some(v) = read("EWENS_WALK_ENUMERATION_MAX") {
            caps.enumeration_max = v;
        }
        if let Some(v) = read("EWENS_WALK_CHARACTER_TABLE_MAX") {
            caps.character_table_max = v;
        }
        if let Some(v) = read("EWENS_WALK_EXACT_MODE_MAX") {
            caps.exact_mode_max = v;
        }
        if let Some(v) = read("EWENS_WALK_RATIONAL_MIXING_MAX") {
            caps.rational_mixing_max = v;
        }
        if let Some(v) = read("EWENS_WALK_ORACLE_MAX") {
            caps.oracle_max = v;
        }
        caps
    }
}
