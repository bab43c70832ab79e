//! Seeded Ewens sampling, Monte Carlo walk simulation and empirical
//! statistics for cross-checking the exact machinery.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::mixing::matching_tail;
use crate::partitions::Partition;
use crate::permutation::Permutation;
use crate::spectrum::{stirling_first, ThetaValue};
use crate::{Error, Result};

/// Master seed plus stream index. A run of `samples` walks occupies streams
/// `stream .. stream + samples`, one per walk, so results are identical for
/// any thread count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedSpec {
    pub master: u64,
    pub stream: u64,
}

impl SeedSpec {
    pub fn new(master: u64, stream: u64) -> Self {
        SeedSpec { master, stream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.stream);
        rng
    }

    fn for_sample(&self, sample: u64) -> SeedSpec {
        SeedSpec {
            master: self.master,
            stream: self.stream.wrapping_add(sample),
        }
    }
}

/// One Ewens(theta) draw by the Chinese restaurant process: element `i`
/// (zero-based) opens a new cycle with probability `theta/(theta+i)`,
/// otherwise lands directly after a uniformly chosen earlier element.
pub fn sample_ewens(n: u32, theta: f64, rng: &mut impl Rng) -> Result<Permutation> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!("theta must be positive, got {theta}")));
    }
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    // next[j] is the successor of j in its cycle; cycles of the successor map
    // are exactly the cycles of the permutation.
    let mut next: Vec<u32> = vec![0];
    for i in 1..n {
        if rng.gen::<f64>() < theta / (theta + i as f64) {
            next.push(i);
        } else {
            let j = rng.gen_range(0..i) as usize;
            next.push(next[j]);
            next[j] = i;
        }
    }
    Permutation::new(next)
}

/// `t` steps of the walk from the identity: `sigma_t = tau_t ... tau_1` with
/// i.i.d. Ewens steps multiplied on the left.
pub fn simulate_walk(n: u32, theta: &ThetaValue, t: u32, seed: SeedSpec) -> Result<Permutation> {
    let theta = resolve_f64(theta, n)?;
    let mut rng = seed.rng();
    let mut sigma = Permutation::identity(n);
    for _ in 0..t {
        let tau = sample_ewens(n, theta, &mut rng)?;
        sigma = tau.compose(&sigma)?;
    }
    Ok(sigma)
}

fn resolve_f64(theta: &ThetaValue, n: u32) -> Result<f64> {
    theta
        .resolve(n)?
        .to_f64()
        .ok_or_else(|| Error::Domain("theta does not fit in f64".into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    FixedPoints,
    CycleCount,
    CycleType,
}

impl std::str::FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed-points" => Ok(Statistic::FixedPoints),
            "cycle-count" => Ok(Statistic::CycleCount),
            "cycle-type" => Ok(Statistic::CycleType),
            other => Err(Error::Domain(format!("unknown statistic {other:?}"))),
        }
    }
}

/// Observed value of a statistic: a count, or a whole cycle type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum StatValue {
    Count(u32),
    Class(Partition),
}

impl std::fmt::Display for StatValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StatValue::Count(c) => write!(f, "{c}"),
            StatValue::Class(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Histogram {
    pub counts: BTreeMap<StatValue, u64>,
    pub samples: u64,
}

impl Histogram {
    pub fn frequency(&self, value: &StatValue) -> f64 {
        *self.counts.get(value).unwrap_or(&0) as f64 / self.samples as f64
    }

    pub fn mean(&self) -> Result<f64> {
        let mut sum = 0.0;
        for (v, &c) in &self.counts {
            match v {
                StatValue::Count(k) => sum += *k as f64 * c as f64,
                StatValue::Class(_) => {
                    return Err(Error::Domain("mean of a cycle-type histogram".into()))
                }
            }
        }
        Ok(sum / self.samples as f64)
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["value", "count", "frequency"])
            .map_err(csv_err)?;
        for (v, &c) in &self.counts {
            w.write_record([
                v.to_string(),
                c.to_string(),
                format!("{:.6}", c as f64 / self.samples as f64),
            ])
            .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Domain(format!("csv write failed: {e}"))
}

fn observe(sigma: &Permutation, stat: Statistic) -> StatValue {
    match stat {
        Statistic::FixedPoints => StatValue::Count(sigma.fixed_points()),
        Statistic::CycleCount => StatValue::Count(sigma.num_cycles()),
        Statistic::CycleType => StatValue::Class(sigma.cycle_type()),
    }
}

/// Frequency table of a statistic over independent simulated walks. Walks
/// run in parallel, one RNG stream each; the result depends only on the
/// arguments, not the thread count.
pub fn empirical_statistic(
    n: u32,
    theta: &ThetaValue,
    t: u32,
    samples: u64,
    stat: Statistic,
    seed: SeedSpec,
) -> Result<Histogram> {
    if samples == 0 {
        return Err(Error::Domain("samples must be at least 1".into()));
    }
    resolve_f64(theta, n)?;
    let counts = (0..samples)
        .into_par_iter()
        .try_fold(BTreeMap::new, |mut acc: BTreeMap<StatValue, u64>, s| {
            let sigma = simulate_walk(n, theta, t, seed.for_sample(s))?;
            *acc.entry(observe(&sigma, stat)).or_insert(0) += 1;
            Ok::<_, Error>(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            Ok(a)
        })?;
    Ok(Histogram { counts, samples })
}

/// Exact probability that the statistic of a uniform permutation equals the
/// given value.
fn uniform_mass(n: u32, stat: Statistic, value: &StatValue) -> Result<f64> {
    let nfact = crate::partitions::factorial(n as u64);
    match (stat, value) {
        (Statistic::FixedPoints, StatValue::Count(k)) => {
            // Pr(fix = k) = tail(k) - tail(k+1).
            let tail = |k: u32| -> Result<f64> {
                if k == 0 {
                    return Ok(1.0);
                }
                if k > n {
                    return Ok(0.0);
                }
                Ok(matching_tail(n, k)?.to_f64().unwrap())
            };
            Ok(tail(*k)? - tail(k + 1)?)
        }
        (Statistic::CycleCount, StatValue::Count(c)) => {
            let s = stirling_first(n, *c);
            Ok(num_rational::BigRational::new(s.into(), nfact.into())
                .to_f64()
                .unwrap())
        }
        (Statistic::CycleType, StatValue::Class(mu)) => {
            Ok(num_rational::BigRational::new(mu.class_size().into(), nfact.into())
                .to_f64()
                .unwrap())
        }
        _ => Err(Error::Domain("statistic/value kind mismatch".into())),
    }
}

/// Conservative empirical lower bound on the total variation distance at
/// step `t`: the largest deviation between the empirical law of the statistic
/// and its exact uniform law over threshold events (or single classes for
/// cycle types), minus a 99% Dvoretzky-Kiefer-Wolfowitz correction.
pub fn empirical_tv_lower(
    n: u32,
    theta: &ThetaValue,
    t: u32,
    samples: u64,
    stat: Statistic,
    seed: SeedSpec,
) -> Result<f64> {
    if samples < 1000 {
        return Err(Error::Domain(format!(
            "empirical_tv_lower needs at least 1000 samples, got {samples}"
        )));
    }
    let hist = empirical_statistic(n, theta, t, samples, stat, seed)?;
    let epsilon = (f64::ln(2.0 / 0.01) / (2.0 * samples as f64)).sqrt();
    let mut best = 0.0f64;
    match stat {
        Statistic::CycleType => {
            // Events are single classes; scan every class of S_n.
            for mu in crate::partitions::enumerate_partitions(n)? {
                let value = StatValue::Class(mu);
                let exact = uniform_mass(n, stat, &value)?;
                best = best.max((hist.frequency(&value) - exact).abs());
            }
        }
        _ => {
            // Events are {stat <= s}; scan cumulative thresholds.
            let mut emp_cdf = 0.0;
            let mut exact_cdf = 0.0;
            for s in 0..=n {
                let value = StatValue::Count(s);
                emp_cdf += hist.frequency(&value);
                exact_cdf += uniform_mass(n, stat, &value)?;
                best = best.max((emp_cdf - exact_cdf).abs());
            }
        }
    }
    Ok((best - epsilon).max(0.0))
}
