//! Command-line front-end: analysis commands (`spectrum`, `tv-exact`,
//! `bounds`, `cutoff-profile`, `simulate`) and verification suites
//! (`verify`). Exit code 0 on success, 1 on a verification FAIL, 2 on usage
//! errors.

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::characters::{character_table_capped, verify_characters, VerifyReport};
use crate::mixing::{cutoff_profile, walk_class_distribution_with};
use crate::oracle::{verify_diaconis_green, verify_matching};
use crate::sampler::{empirical_statistic, SeedSpec, Statistic};
use crate::spectrum::{spectrum, ThetaValue};
use crate::{Caps, Error, Result};

/// Formats a float with 12 significant digits, plain decimal notation for
/// ordinary magnitudes and scientific for extremes; trailing zeros trimmed.
pub fn decimal(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-10..15).contains(&exp) {
        return format!("{x:.11e}");
    }
    let places = (11 - exp).max(0) as usize;
    let s = format!("{x:.places$}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

#[derive(Parser)]
#[command(
    name = "ewens-walk",
    about = "Random walks on the symmetric group driven by the Ewens distribution",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of the walk for every partition of n.
    Spectrum {
        #[arg(long)]
        n: u32,
        /// Rational p/q, decimal, or the token `n`.
        #[arg(long)]
        theta: String,
        /// Keep exact rational eigenvalues (requires small n).
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact total variation distance from uniform for t = 1..=t_max.
    TvExact {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        theta: String,
        #[arg(long)]
        t_max: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Upper and lower mixing bounds (and exact TV when available) over a
    /// step range A:B.
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        theta: String,
        #[arg(long)]
        t_range: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full bounds profile plus a JSON cutoff summary.
    CutoffProfile {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "n")]
        theta: String,
        #[arg(long)]
        t_max: Option<u32>,
        /// CSV destination; the JSON summary goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo walk simulation; emits a statistic histogram.
    Simulate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        theta: String,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value = "fixed-points")]
        stat: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        stream: u64,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verification suites; exit code 1 if any check fails.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Jucys-Murphy elementary symmetric sums against cycle-count class sums.
    Dg {
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },
    /// Character-inversion walk distribution against brute-force convolution.
    Convolution {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        theta: String,
        #[arg(long)]
        t: u32,
    },
    /// Fixed-point tail probabilities against the matching-problem formula.
    Matching {
        #[arg(long, default_value_t = 6)]
        n: u32,
    },
    /// Character-table orthogonality, symmetry and trace identities.
    Characters {
        #[arg(long, default_value_t = 6)]
        n: u32,
    },
}

/// Runs the CLI on the given argument list and returns the process exit
/// code. Output goes to stdout or `--out`.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, not usage errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn parse_theta(s: &str) -> Result<ThetaValue> {
    ThetaValue::parse(s)
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match out {
        Some(path) => Ok(Box::new(File::create(path)?)),
        None => Ok(Box::new(std::io::stdout())),
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Spectrum {
            n,
            theta,
            exact,
            format,
            out,
        } => {
            let theta = parse_theta(&theta)?;
            let caps = Caps::from_env();
            let entries = spectrum(n, &theta, exact, &caps)?;
            let mut w = sink(&out)?;
            match format {
                Format::Csv => {
                    writeln!(w, "partition,dimension,eigenvalue,ln_magnitude")?;
                    for e in &entries {
                        let value = match &e.eigenvalue_exact {
                            Some(r) => r.to_string(),
                            None => decimal(e.eigenvalue_log.to_f64()),
                        };
                        writeln!(
                            w,
                            "\"{}\",{},{},{}",
                            e.partition,
                            e.dimension,
                            value,
                            decimal(e.eigenvalue_log.ln_magnitude)
                        )?;
                    }
                }
                Format::Json => {
                    let rows: Vec<_> = entries
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "partition": e.partition.to_string(),
                                "dimension": e.dimension.to_string(),
                                "eigenvalue": e.eigenvalue_exact.as_ref().map(|r| r.to_string()),
                                "eigenvalue_float": e.eigenvalue_log.to_f64(),
                            })
                        })
                        .collect();
                    writeln!(w, "{}", serde_json::to_string_pretty(&rows).unwrap())?;
                }
            }
            Ok(0)
        }
        Command::TvExact {
            n,
            theta,
            t_max,
            format,
            out,
        } => {
            let theta = parse_theta(&theta)?;
            let caps = Caps::from_env();
            let table = character_table_capped(n, caps.character_table_max)?;
            let mut rows = Vec::new();
            for t in 1..=t_max {
                let dist = walk_class_distribution_with(&table, &theta, t, &caps)?;
                let rational = dist.total_variation_as_rational().map(|r| r.to_string());
                rows.push((t, dist.total_variation(), rational));
            }
            let mut w = sink(&out)?;
            match format {
                Format::Csv => {
                    writeln!(w, "t,tv_exact,tv_exact_rational")?;
                    for (t, tv, rational) in &rows {
                        writeln!(w, "{},{},{}", t, decimal(*tv), rational.clone().unwrap_or_default())?;
                    }
                }
                Format::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|(t, tv, rational)| {
                            serde_json::json!({
                                "t": t,
                                "tv_exact": tv,
                                "tv_exact_rational": rational,
                            })
                        })
                        .collect();
                    writeln!(w, "{}", serde_json::to_string_pretty(&rows).unwrap())?;
                }
            }
            Ok(0)
        }
        Command::Bounds {
            n,
            theta,
            t_range,
            out,
        } => {
            let theta = parse_theta(&theta)?;
            let (a, b) = t_range
                .split_once(':')
                .and_then(|(a, b)| Some((a.parse::<u32>().ok()?, b.parse::<u32>().ok()?)))
                .ok_or_else(|| Error::Domain(format!("malformed t-range {t_range:?}")))?;
            if a < 1 || b < a {
                return Err(Error::Domain(format!("invalid t-range {t_range:?}")));
            }
            let report = cutoff_profile(n, &theta, b)?;
            let mut w = sink(&out)?;
            writeln!(w, "t,upper,lower,exact")?;
            for r in report.records.iter().filter(|r| r.t >= a) {
                writeln!(
                    w,
                    "{},{},{},{}",
                    r.t,
                    decimal(r.upper_bound),
                    decimal(r.lower_bound),
                    r.exact_tv.map(decimal).unwrap_or_default()
                )?;
            }
            Ok(0)
        }
        Command::CutoffProfile { n, theta, t_max, out } => {
            let theta = parse_theta(&theta)?;
            let t_max = t_max.unwrap_or(((n as f64).log2().ceil() as u32) + 4);
            let report = cutoff_profile(n, &theta, t_max)?;
            let mut w = sink(&out)?;
            report.write_csv(&mut w)?;
            drop(w);
            println!("{}", report.summary_json());
            Ok(0)
        }
        Command::Simulate {
            n,
            theta,
            t,
            samples,
            stat,
            seed,
            stream,
            threads,
            format,
            out,
        } => {
            let theta = parse_theta(&theta)?;
            let stat: Statistic = stat.parse()?;
            if let Some(k) = threads {
                // Ignore failure: the global pool can only be set once.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
            let hist = empirical_statistic(n, &theta, t, samples, stat, SeedSpec::new(seed, stream))?;
            let mut w = sink(&out)?;
            match format {
                Format::Csv => hist.write_csv(&mut w)?,
                Format::Json => {
                    let rows: Vec<_> = hist
                        .counts
                        .iter()
                        .map(|(v, c)| {
                            serde_json::json!({
                                "value": v.to_string(),
                                "count": c,
                                "frequency": *c as f64 / hist.samples as f64,
                            })
                        })
                        .collect();
                    writeln!(w, "{}", serde_json::to_string_pretty(&rows).unwrap())?;
                }
            }
            Ok(0)
        }
        Command::Verify { suite } => {
            let reports = run_verify(suite)?;
            let pass = reports.iter().all(|r| r.all_pass());
            println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn run_verify(suite: VerifySuite) -> Result<Vec<VerifyReport>> {
    match suite {
        VerifySuite::Dg { n_max } => (2..=n_max).map(verify_diaconis_green).collect(),
        VerifySuite::Convolution { n, theta, t } => {
            let theta = parse_theta(&theta)?.resolve(n)?;
            let brute = crate::oracle::brute_force_walk_distribution(n, &theta, t)?;
            let inverted = crate::mixing::walk_class_distribution(
                n,
                &ThetaValue::Fixed(theta.clone()),
                t,
            )?;
            let perms = crate::oracle::all_permutations(n)?;
            let mut report = VerifyReport::new(format!("convolution n={n} theta={theta} t={t}"));
            let mut pass = true;
            for (p, prob) in perms.iter().zip(&brute) {
                if inverted.probability_exact(&p.cycle_type())? != *prob {
                    pass = false;
                    break;
                }
            }
            report.push("distribution equality", pass);
            let tv_pass = crate::oracle::brute_force_tv(n, &theta, t)?
                == crate::mixing::total_variation_rational(n, &theta, t)?;
            report.push("total variation equality", tv_pass);
            Ok(vec![report])
        }
        VerifySuite::Matching { n } => Ok(vec![verify_matching(n)?]),
        VerifySuite::Characters { n } => Ok(vec![verify_characters(n)?]),
    }
}
