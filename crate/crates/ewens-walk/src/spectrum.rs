//! The walk's spectrum and everything derived from it: eigenvalues as
//! content polynomials over the rising factorial, Schur principal
//! specializations, dominance monotonicity, dimension-sum bounds and the
//! region apparatus used in the theta = n cutoff analysis.

use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::partitions::{
    enumerate_partitions, enumerate_partitions_capped, factorial, for_each_partition, Partition,
};
use crate::{Caps, Error, Result};

pub type Rational64 = Ratio<i64>;

/// The walk parameter theta: either a fixed positive rational or the token
/// `n`, resolved per invocation.
#[derive(Debug, Clone, PartialEq)]
pub enum ThetaValue {
    Fixed(BigRational),
    LinkedToN,
}

impl ThetaValue {
    pub fn fixed_int(v: i64) -> Self {
        ThetaValue::Fixed(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn fixed_ratio(num: i64, den: i64) -> Self {
        ThetaValue::Fixed(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Accepts the token `n`, a rational `p/q`, a decimal (converted exactly
    /// to `digits/10^k`), or a plain integer.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "n" {
            return Ok(ThetaValue::LinkedToN);
        }
        let bad = |s: &str| Error::Domain(format!("cannot parse theta {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let num: BigInt = num.trim().parse().map_err(|_| bad(s))?;
            let den: BigInt = den.trim().parse().map_err(|_| bad(s))?;
            if den.is_zero() {
                return Err(bad(s));
            }
            return Ok(ThetaValue::Fixed(BigRational::new(num, den)));
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad(s));
            }
            let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad(s))?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            return Ok(ThetaValue::Fixed(BigRational::new(digits, scale)));
        }
        let v: BigInt = s.parse().map_err(|_| bad(s))?;
        Ok(ThetaValue::Fixed(BigRational::from_integer(v)))
    }

    /// Concrete positive rational value of theta at group size `n`.
    pub fn resolve(&self, n: u32) -> Result<BigRational> {
        let theta = match self {
            ThetaValue::Fixed(v) => v.clone(),
            ThetaValue::LinkedToN => BigRational::from_integer(BigInt::from(n)),
        };
        if theta <= BigRational::zero() {
            return Err(Error::Domain(format!("theta must be positive, got {theta}")));
        }
        Ok(theta)
    }

    pub fn describe(&self) -> String {
        match self {
            ThetaValue::Fixed(v) => v.to_string(),
            ThetaValue::LinkedToN => "n".to_string(),
        }
    }
}

impl std::fmt::Display for ThetaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// A sign together with the natural log of the magnitude; `sign == 0` means
/// exactly zero (with `ln_magnitude == -inf`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub sign: i8,
    pub ln_magnitude: f64,
}

impl SignedLog {
    pub fn zero() -> Self {
        SignedLog {
            sign: 0,
            ln_magnitude: f64::NEG_INFINITY,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.sign as f64 * self.ln_magnitude.exp()
    }

    pub fn log10_magnitude(self) -> f64 {
        self.ln_magnitude / std::f64::consts::LN_10
    }
}

/// One row of the walk's spectrum: a partition, its dimension (eigenvalue
/// multiplicity is the square of this) and the eigenvalue in exact and/or
/// signed-log form.
#[derive(Debug, Clone)]
pub struct SpectrumEntry {
    pub partition: Partition,
    pub dimension: BigUint,
    pub eigenvalue_exact: Option<BigRational>,
    pub eigenvalue_log: SignedLog,
}

/// `theta^(n) = theta (theta+1) ... (theta+n-1)`, the Ewens normalizer.
pub fn rising_factorial(theta: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..n as i64 {
        acc *= theta + BigRational::from_integer(BigInt::from(i));
    }
    acc
}

/// Unsigned Stirling numbers of the first kind, `s(n, i)`; counts
/// permutations of `n` elements with `i` cycles.
pub fn stirling_first(n: u32, i: u32) -> BigUint {
    if i > n {
        return BigUint::zero();
    }
    // s(n, i) = s(n-1, i-1) + (n-1) s(n-1, i)
    let mut row: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m as usize + 1];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] += v * BigUint::from(m as u64 - 1);
        }
        row = next;
    }
    row[i as usize].clone()
}

/// Content polynomial `c_lambda(theta) = prod over boxes of (theta + content)`.
pub fn content_polynomial(lambda: &Partition, theta: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    for c in lambda.contents_book_order() {
        acc *= theta + BigRational::from_integer(BigInt::from(c));
    }
    acc
}

/// Exact eigenvalue `beta_lambda = c_lambda(theta) / theta^(n)`.
pub fn eigenvalue_exact(lambda: &Partition, theta: &BigRational) -> BigRational {
    content_polynomial(lambda, theta) / rising_factorial(theta, lambda.n())
}

/// Signed-log eigenvalue; the sign is decided exactly from the rational
/// factors, only the magnitude goes through floats.
pub fn eigenvalue_signed_log(lambda: &Partition, theta: &BigRational) -> SignedLog {
    let theta_f = theta.to_f64().expect("theta fits in f64");
    let mut sign = 1i8;
    let mut ln_mag = 0.0f64;
    for c in lambda.contents_book_order() {
        let factor = theta + BigRational::from_integer(BigInt::from(c));
        if factor.is_zero() {
            return SignedLog::zero();
        }
        if factor.is_negative() {
            sign = -sign;
        }
        ln_mag += (theta_f + c as f64).abs().ln();
    }
    for i in 0..lambda.n() as i64 {
        ln_mag -= (theta_f + i as f64).ln();
    }
    SignedLog {
        sign,
        ln_magnitude: ln_mag,
    }
}

/// Full spectrum entry for one partition; the exact rational is included for
/// rational theta when `n` is within the exact-mode cap.
pub fn eigenvalue(lambda: &Partition, theta: &ThetaValue) -> Result<SpectrumEntry> {
    eigenvalue_capped(lambda, theta, Caps::default().exact_mode_max)
}

pub fn eigenvalue_capped(
    lambda: &Partition,
    theta: &ThetaValue,
    exact_cap: u32,
) -> Result<SpectrumEntry> {
    let theta = theta.resolve(lambda.n())?;
    let exact = if lambda.n() <= exact_cap {
        Some(eigenvalue_exact(lambda, &theta))
    } else {
        None
    };
    Ok(SpectrumEntry {
        dimension: lambda.dimension(),
        eigenvalue_exact: exact,
        eigenvalue_log: eigenvalue_signed_log(lambda, &theta),
        partition: lambda.clone(),
    })
}

/// The spectrum over all partitions of `n`, in enumeration order.
pub fn spectrum(n: u32, theta: &ThetaValue, exact: bool, caps: &Caps) -> Result<Vec<SpectrumEntry>> {
    let exact_cap = if exact { caps.exact_mode_max } else { 0 };
    if exact && n > caps.exact_mode_max {
        return Err(Error::SizeLimit(format!(
            "exact eigenvalues capped at n = {}, got {n}",
            caps.exact_mode_max
        )));
    }
    let parts = enumerate_partitions_capped(n, caps.enumeration_max)?;
    parts
        .iter()
        .map(|l| eigenvalue_capped(l, theta, exact_cap))
        .collect()
}

/// Second-largest eigenvalue `(theta - 1)/(theta + n - 1)`, attained at
/// `(n-1, 1)`. Maximality over all nontrivial partitions is re-checked
/// exhaustively for `n <= 12` when `theta > 1`; for `theta <= 1` the value
/// is returned without the maximality claim.
pub fn second_eigenvalue(n: u32, theta: &ThetaValue) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::Domain("second eigenvalue requires n >= 2".into()));
    }
    let theta = theta.resolve(n)?;
    let value = (&theta - BigRational::one())
        / (&theta + BigRational::from_integer(BigInt::from(n as i64 - 1)));
    if theta > BigRational::one() && n <= 12 {
        for lam in enumerate_partitions(n)? {
            if lam.parts().len() == 1 {
                continue;
            }
            let beta = eigenvalue_exact(&lam, &theta).abs();
            if beta > value {
                return Err(Error::Domain(format!(
                    "second eigenvalue not maximal: |beta_{lam}| exceeds it at theta={theta}"
                )));
            }
        }
    }
    Ok(value)
}

/// Bound on hook-shape eigenvalues: `((k-1)/(k+n-1))^(m-1)` dominates the
/// exact eigenvalue of `(n-m+1, 1^(m-1))` at integer theta = k. The
/// domination is re-checked on the exact value before returning.
pub fn hook_shape_bound(m: u32, k: u32, n: u32) -> Result<f64> {
    if m == 0 || m > n || k == 0 {
        return Err(Error::Domain(format!(
            "hook shape bound requires 1 <= m <= n and k >= 1, got m={m} k={k} n={n}"
        )));
    }
    let bound_rat = BigRational::new(BigInt::from(k as i64 - 1), BigInt::from((k + n - 1) as i64))
        .pow(m as i32 - 1);
    let theta = BigRational::from_integer(BigInt::from(k));
    let exact = eigenvalue_exact(&Partition::hook(n, m)?, &theta);
    if exact > bound_rat {
        return Err(Error::Domain(format!(
            "hook shape bound violated at m={m} k={k} n={n}"
        )));
    }
    Ok(bound_rat.to_f64().unwrap())
}

/// Principal specialization `s_lambda(1^k) = prod (k + content)/hook`; always
/// a non-negative integer, zero exactly when the diagram has more than `k`
/// rows.
pub fn schur_principal(lambda: &Partition, k: u32) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::Domain("schur principal requires k >= 1".into()));
    }
    if lambda.len() > k as usize {
        return Ok(BigUint::zero());
    }
    // All factors k + c are positive here since contents are > -k.
    let mut num = BigUint::one();
    for c in lambda.contents_book_order() {
        num *= BigUint::try_from(BigInt::from(k as i64 + c)).expect("positive factor");
    }
    let mut den = BigUint::one();
    for h in lambda.hook_lengths_book_order() {
        den *= BigUint::from(h);
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// `sum over lambda of n of s_lambda(1^k)^2`; equals `binom(n + k^2 - 1, n)`
/// by the Cauchy identity, and that equality is enforced before returning.
pub fn sum_schur_squares(n: u32, k: u32) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for lam in enumerate_partitions(n)? {
        let s = schur_principal(&lam, k)?;
        total += &s * &s;
    }
    let expected = binomial(n + k * k - 1, n);
    if total != expected {
        return Err(Error::Domain(format!(
            "Cauchy identity failed at n={n} k={k}: {total} != {expected}"
        )));
    }
    Ok(total)
}

pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k as u64 {
        acc = acc * BigUint::from(n as u64 - i) / BigUint::from(i + 1);
    }
    acc
}

/// Exact `sum of d_lambda^2` over partitions with first part exactly
/// `lambda1`, together with the bound `binom(n, lambda1)^2 (n - lambda1)!`.
/// Returns `(exact, bound)`; the inequality is enforced.
pub fn dimension_sum_bound_check(n: u32, lambda1: u32) -> Result<(BigUint, BigUint)> {
    if lambda1 == 0 || lambda1 > n {
        return Err(Error::Domain(format!(
            "dimension sum requires 1 <= lambda1 <= n, got {lambda1} and {n}"
        )));
    }
    let mut exact = BigUint::zero();
    for_each_partition(n, |parts| {
        if parts[0] == lambda1 {
            let lam = Partition::new(parts.to_vec()).unwrap();
            let d = lam.dimension();
            exact += &d * &d;
        }
    });
    let b = binomial(n, lambda1);
    let bound = &b * &b * factorial((n - lambda1) as u64);
    if exact > bound {
        return Err(Error::Domain(format!(
            "dimension sum bound violated at n={n} lambda1={lambda1}"
        )));
    }
    Ok((exact, bound))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMode {
    /// `lambda_1 >= alpha n`.
    FirstRow,
    /// `lambda_1 >= alpha n` and `lambda_1 / 2 <= lambda_2 <= lambda_1`.
    TwoRows,
}

#[derive(Debug, Clone)]
pub struct TailSumCheck {
    pub exact: BigUint,
    /// `ln` of the finite-n bound: `n 4^n n^((1-alpha)n)` for the first-row
    /// tail, `n^2 4^(2n) n^((1-3 alpha/2)n)` for the two-row tail.
    pub ln_bound: f64,
    pub holds: bool,
}

/// Exact tail dimension-square sums against the explicit finite-n chains
/// behind the asymptotic tail estimates.
pub fn tail_dimension_sums(n: u32, alpha: Rational64, mode: TailMode) -> Result<TailSumCheck> {
    if alpha <= Rational64::zero() || alpha > Rational64::one() {
        return Err(Error::Domain(format!("alpha must be in (0, 1], got {alpha}")));
    }
    // lambda_1 >= alpha n  <=>  lambda_1 * den >= num * n
    let num = *alpha.numer();
    let den = *alpha.denom();
    let mut exact = BigUint::zero();
    for_each_partition(n, |parts| {
        let l1 = parts[0] as i64;
        if l1 * den < num * n as i64 {
            return;
        }
        if mode == TailMode::TwoRows {
            let l2 = parts.get(1).copied().unwrap_or(0) as i64;
            if 2 * l2 < l1 {
                return;
            }
        }
        let lam = Partition::new(parts.to_vec()).unwrap();
        let d = lam.dimension();
        exact += &d * &d;
    });
    let nf = n as f64;
    let a = num as f64 / den as f64;
    let ln_bound = match mode {
        TailMode::FirstRow => nf.ln() + nf * 4f64.ln() + (1.0 - a) * nf * nf.ln(),
        TailMode::TwoRows => 2.0 * nf.ln() + 2.0 * nf * 4f64.ln() + (1.0 - 1.5 * a) * nf * nf.ln(),
    };
    let ln_exact = if exact.is_zero() {
        f64::NEG_INFINITY
    } else {
        ln_biguint(&exact)
    };
    Ok(TailSumCheck {
        exact,
        ln_bound,
        holds: ln_exact <= ln_bound,
    })
}

pub fn ln_biguint(v: &BigUint) -> f64 {
    // Split into f64-sized mantissa and a shift.
    let bits = v.bits();
    if bits <= 52 {
        return v.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let mantissa = (v >> shift).to_f64().unwrap();
    mantissa.ln() + shift as f64 * 2f64.ln()
}

/// Row fractions of the first family of region partitions: `q` rows of
/// `alpha` and one row of `r`, with `alpha q + r = 1` and `0 <= r < alpha`.
fn region1_fractions(alpha: Rational64) -> Result<Vec<Rational64>> {
    if alpha <= Rational64::zero() || alpha >= Rational64::one() {
        return Err(Error::Domain(format!("alpha must be in (0, 1), got {alpha}")));
    }
    let q = (Rational64::one() / alpha).floor().to_integer();
    let r = Rational64::one() - alpha * Rational64::from_integer(q);
    let mut f = vec![alpha; q as usize];
    if r > Rational64::zero() {
        f.push(r);
    }
    Ok(f)
}

/// Row fractions of the second family: a row of `alpha` followed by rows of
/// `alpha/2` (plus a remainder row) for `alpha <= 1/2`, or
/// `(alpha, (1-alpha)/2, (1-alpha)/2)` for `alpha > 1/2`.
fn region2_fractions(alpha: Rational64) -> Result<Vec<Rational64>> {
    if alpha <= Rational64::zero() || alpha >= Rational64::one() {
        return Err(Error::Domain(format!("alpha must be in (0, 1), got {alpha}")));
    }
    let half = Rational64::new(1, 2);
    if alpha > half {
        let side = (Rational64::one() - alpha) / Rational64::from_integer(2);
        return Ok(vec![alpha, side, side]);
    }
    let step = alpha / Rational64::from_integer(2);
    let s = ((Rational64::one() - alpha) / step).floor().to_integer();
    let rt = Rational64::one() - alpha - step * Rational64::from_integer(s);
    let mut f = vec![alpha];
    f.extend(std::iter::repeat(step).take(s as usize));
    if rt > Rational64::zero() {
        f.push(rt);
    }
    Ok(f)
}

fn fractions_to_partition(fractions: &[Rational64], n: u32) -> Result<Partition> {
    // Nearest-integer rounding per row, the last row absorbing the remainder
    // so the parts sum to n.
    let mut parts: Vec<i64> = fractions
        .iter()
        .map(|f| {
            let x = f * Rational64::from_integer(n as i64) + Rational64::new(1, 2);
            x.floor().to_integer()
        })
        .collect();
    let total: i64 = parts.iter().sum();
    let last = parts.len() - 1;
    parts[last] += n as i64 - total;
    let mut parts: Vec<u32> = parts
        .into_iter()
        .filter(|&p| p > 0)
        .map(|p| p as u32)
        .collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    if parts.iter().map(|&p| p as i64).sum::<i64>() != n as i64 {
        return Err(Error::Domain(format!(
            "degenerate rounding for region partition at n={n}"
        )));
    }
    Partition::new(parts)
}

/// The stacked region partition `(alpha n, ..., alpha n, r n)`.
pub fn region_partition_1(alpha: Rational64, n: u32) -> Result<Partition> {
    fractions_to_partition(&region1_fractions(alpha)?, n)
}

/// The second region family `(alpha n, (alpha/2) n, ...)` (or
/// `(alpha n, (1-alpha)/2 n, (1-alpha)/2 n)` past alpha = 1/2).
pub fn region_partition_2(alpha: Rational64, n: u32) -> Result<Partition> {
    fractions_to_partition(&region2_fractions(alpha)?, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    R1,
    R2,
    R3,
    R4,
}

impl std::fmt::Display for Region {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Region::R1 => "R1",
            Region::R2 => "R2",
            Region::R3 => "R3",
            Region::R4 => "R4",
        };
        write!(f, "{s}")
    }
}

/// Classifies a partition by its two largest parts: R1 for
/// `lambda_1 <= n/13`, R4 for `lambda_1 > n/3`, and in between R2 when
/// `lambda_2 >= min(lambda_1/2, (n - lambda_1)/2)`, otherwise R3.
pub fn region_classify(lambda: &Partition) -> Region {
    let n = lambda.n() as u64;
    let l1 = lambda.first() as u64;
    let l2 = lambda.second() as u64;
    if 13 * l1 <= n {
        return Region::R1;
    }
    if 3 * l1 > n {
        return Region::R4;
    }
    // lambda_2 >= min(lambda_1, n - lambda_1)/2, compared at twice scale.
    if 2 * l2 >= l1.min(n - l1) {
        Region::R2
    } else {
        Region::R3
    }
}

/// Limit of `(1/n) ln beta` for the region partitions at theta = n:
/// `sum over rows of (1 + f) ln(1 + f) - 2 ln 2` over the row fractions.
pub fn region_log_asymptote(alpha: Rational64, set: u8) -> Result<f64> {
    let fractions = match set {
        1 => region1_fractions(alpha)?,
        2 => region2_fractions(alpha)?,
        _ => return Err(Error::Domain(format!("region set must be 1 or 2, got {set}"))),
    };
    let mut s = -2.0 * 2f64.ln();
    for f in fractions {
        let x = *f.numer() as f64 / *f.denom() as f64;
        s += (1.0 + x) * (1.0 + x).ln();
    }
    Ok(s)
}

/// Two-row eigenvalue bound at theta = n: `((n+m)/(2n))^m` dominates the
/// exact eigenvalue of `(n-m, m)`; the domination is enforced.
pub fn two_row_eigenvalue_bound(n: u32, m: u32) -> Result<f64> {
    if 2 * m > n {
        return Err(Error::Domain(format!(
            "two-row bound requires m <= n/2, got m={m} n={n}"
        )));
    }
    if m == 0 {
        return Ok(1.0);
    }
    let bound = BigRational::new(BigInt::from((n + m) as i64), BigInt::from(2 * n as i64))
        .pow(m as i32);
    let theta = BigRational::from_integer(BigInt::from(n));
    let lam = Partition::new(vec![n - m, m])?;
    if eigenvalue_exact(&lam, &theta) > bound {
        return Err(Error::Domain(format!(
            "two-row bound violated at n={n} m={m}"
        )));
    }
    Ok(bound.to_f64().unwrap())
}

/// One dominating pair whose eigenvalues compare the wrong way.
#[derive(Debug, Clone)]
pub struct MonotonicityViolation {
    pub upper: Partition,
    pub lower: Partition,
    pub beta_upper: BigRational,
    pub beta_lower: BigRational,
    /// `|beta_upper / beta_lower|` when the lower eigenvalue is nonzero.
    pub abs_ratio: Option<BigRational>,
}

#[derive(Debug)]
pub struct MonotonicityReport {
    pub n: u32,
    pub theta: BigRational,
    pub pairs_checked: usize,
    /// Pairs failing `beta_upper >= beta_lower >= 0` (the integer-theta law).
    pub signed_violations: Vec<MonotonicityViolation>,
    /// Pairs failing `|beta_upper| >= |beta_lower|`.
    pub abs_violations: Vec<MonotonicityViolation>,
}

/// Exhaustive eigenvalue-monotonicity scan over all dominating pairs of
/// partitions of `n`. For integer theta the signed violation list must come
/// back empty; non-integer theta in (1, 3/2) reproduces the known failing
/// pair (2,2,1) over (2,1,1,1).
pub fn monotonicity_check(n: u32, theta: &ThetaValue) -> Result<MonotonicityReport> {
    if n > 12 {
        return Err(Error::SizeLimit(format!(
            "exhaustive pair scan capped at n = 12, got {n}"
        )));
    }
    let theta = theta.resolve(n)?;
    let parts = enumerate_partitions(n)?;
    let betas: Vec<BigRational> = parts.iter().map(|l| eigenvalue_exact(l, &theta)).collect();
    let mut report = MonotonicityReport {
        n,
        theta: theta.clone(),
        pairs_checked: 0,
        signed_violations: Vec::new(),
        abs_violations: Vec::new(),
    };
    for (i, upper) in parts.iter().enumerate() {
        for (j, lower) in parts.iter().enumerate() {
            if i == j || !upper.dominates(lower)? {
                continue;
            }
            report.pairs_checked += 1;
            let (bu, bl) = (&betas[i], &betas[j]);
            let violation = || MonotonicityViolation {
                upper: upper.clone(),
                lower: lower.clone(),
                beta_upper: bu.clone(),
                beta_lower: bl.clone(),
                abs_ratio: (!bl.is_zero()).then(|| (bu / bl).abs()),
            };
            if bu < bl || bl.is_negative() {
                report.signed_violations.push(violation());
            }
            if bu.abs() < bl.abs() {
                report.abs_violations.push(violation());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn theta_parsing() {
        assert_eq!(ThetaValue::parse("n").unwrap(), ThetaValue::LinkedToN);
        assert_eq!(
            ThetaValue::parse("3/2").unwrap(),
            ThetaValue::fixed_ratio(3, 2)
        );
        assert_eq!(
            ThetaValue::parse("1.2").unwrap(),
            ThetaValue::fixed_ratio(6, 5)
        );
        assert_eq!(ThetaValue::parse("2").unwrap(), ThetaValue::fixed_int(2));
        assert!(ThetaValue::parse("x").is_err());
        assert!(ThetaValue::parse("-1").unwrap().resolve(5).is_err());
        assert_eq!(
            ThetaValue::LinkedToN.resolve(7).unwrap(),
            rat(7, 1)
        );
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&rat(2, 1), 3), rat(24, 1));
        assert_eq!(rising_factorial(&rat(1, 1), 5), rat(120, 1));
    }

    #[test]
    fn rising_factorial_matches_stirling_expansion() {
        // theta^(n) = sum_i s(n,i) theta^i; brute-force cycle counts over S_3
        // give s(3,1)=2, s(3,2)=3, s(3,3)=1, so at theta=2: 4+12+8=24.
        for n in 1..=6u32 {
            for theta in [rat(2, 1), rat(3, 2), rat(5, 1)] {
                let mut sum = BigRational::zero();
                for i in 0..=n {
                    sum += BigRational::from_integer(BigInt::from(stirling_first(n, i)))
                        * theta.pow(i as i32);
                }
                assert_eq!(sum, rising_factorial(&theta, n));
            }
        }
    }

    #[test]
    fn stirling_examples() {
        for n in 1..=8u32 {
            assert_eq!(stirling_first(n, n), BigUint::one());
        }
        assert_eq!(stirling_first(3, 1), BigUint::from(2u32));
        assert_eq!(stirling_first(4, 2), BigUint::from(11u32));
    }

    #[test]
    fn eigenvalue_examples() {
        let theta = ThetaValue::fixed_int(2);
        for n in 1..=10u32 {
            let e = eigenvalue(&Partition::row(n).unwrap(), &theta).unwrap();
            assert_eq!(e.eigenvalue_exact.unwrap(), rat(1, 1));
        }
        let e = eigenvalue(&p(&[2, 1]), &theta).unwrap();
        assert_eq!(e.eigenvalue_exact.unwrap(), rat(1, 4));
        let e = eigenvalue(&p(&[1, 1, 1]), &theta).unwrap();
        assert_eq!(e.eigenvalue_exact.unwrap(), BigRational::zero());
        assert_eq!(e.eigenvalue_log.sign, 0);
    }

    #[test]
    fn content_polynomial_examples() {
        assert_eq!(content_polynomial(&p(&[2, 1]), &rat(2, 1)), rat(6, 1));
        assert_eq!(
            content_polynomial(&p(&[4]), &rat(3, 2)),
            rising_factorial(&rat(3, 2), 4)
        );
        assert_eq!(content_polynomial(&p(&[1, 1]), &rat(1, 1)), BigRational::zero());
    }

    #[test]
    fn eigenvalues_bounded_by_one_and_zero_rule() {
        for n in [4u32, 8, 15] {
            for theta in [rat(1, 2), rat(3, 2), rat(2, 1), rat(3, 1), rat(7, 1)] {
                let is_integer = theta.is_integer();
                let k = if is_integer {
                    theta.to_integer().to_u32().unwrap()
                } else {
                    0
                };
                for lam in enumerate_partitions(n).unwrap() {
                    let b = eigenvalue_exact(&lam, &theta);
                    assert!(b.abs() <= BigRational::one(), "|beta| <= 1 at {lam}");
                    if is_integer {
                        assert_eq!(
                            b.is_zero(),
                            lam.len() > k as usize,
                            "zero iff more than theta parts at {lam}, theta={theta}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn signed_log_agrees_with_exact() {
        for n in [5u32, 12, 20] {
            for theta in [rat(3, 2), rat(2, 1), rat(n as i64, 1)] {
                for lam in enumerate_partitions(n).unwrap() {
                    let exact = eigenvalue_exact(&lam, &theta);
                    let log = eigenvalue_signed_log(&lam, &theta);
                    if exact.is_zero() {
                        assert_eq!(log.sign, 0);
                        continue;
                    }
                    let e = exact.to_f64().unwrap();
                    let l = log.to_f64();
                    assert!(
                        ((e - l) / e).abs() < 1e-12,
                        "mismatch at {lam}: {e} vs {l}"
                    );
                }
            }
        }
    }

    #[test]
    fn second_eigenvalue_examples() {
        assert_eq!(
            second_eigenvalue(3, &ThetaValue::fixed_int(2)).unwrap(),
            rat(1, 4)
        );
        assert_eq!(
            second_eigenvalue(10, &ThetaValue::LinkedToN).unwrap(),
            rat(9, 19)
        );
        // theta = 1.2: the exhaustive maximality check inside must pass, and
        // the max is attained at (3,1).
        let theta = rat(6, 5);
        let v = second_eigenvalue(4, &ThetaValue::Fixed(theta.clone())).unwrap();
        let best = enumerate_partitions(4)
            .unwrap()
            .iter()
            .filter(|l| l.parts().len() > 1)
            .map(|l| eigenvalue_exact(l, &theta).abs())
            .max()
            .unwrap();
        assert_eq!(v, best);
        assert_eq!(v, eigenvalue_exact(&p(&[3, 1]), &theta));
    }

    #[test]
    fn hook_shape_bound_examples() {
        assert_eq!(hook_shape_bound(1, 3, 5).unwrap(), 1.0);
        assert!((hook_shape_bound(2, 2, 3).unwrap() - 0.25).abs() < 1e-15);
        // m=3, k=3, n=6: bound (2/8)^2 = 1/16 vs exact beta = 1/28.
        let b = hook_shape_bound(3, 3, 6).unwrap();
        assert!((b - 1.0 / 16.0).abs() < 1e-15);
        let exact = eigenvalue_exact(&p(&[4, 1, 1]), &rat(3, 1));
        assert_eq!(exact, rat(1, 28));
    }

    #[test]
    fn schur_principal_examples() {
        assert_eq!(schur_principal(&p(&[2]), 2).unwrap(), BigUint::from(3u32));
        assert_eq!(schur_principal(&p(&[1, 1]), 2).unwrap(), BigUint::one());
        assert_eq!(schur_principal(&p(&[1, 1, 1]), 2).unwrap(), BigUint::zero());
    }

    #[test]
    fn cauchy_identity_examples() {
        assert_eq!(sum_schur_squares(2, 2).unwrap(), BigUint::from(10u32));
        assert_eq!(sum_schur_squares(1, 4).unwrap(), BigUint::from(16u32));
        assert_eq!(sum_schur_squares(5, 3).unwrap(), BigUint::from(1287u32));
    }

    #[test]
    fn dimension_sum_examples() {
        let (exact, bound) = dimension_sum_bound_check(6, 6).unwrap();
        assert_eq!(exact, BigUint::one());
        assert_eq!(bound, BigUint::one());
        let (exact, bound) = dimension_sum_bound_check(6, 3).unwrap();
        assert_eq!(exact, BigUint::from(381u32));
        assert_eq!(bound, BigUint::from(2400u32));
        let (_, bound) = dimension_sum_bound_check(10, 5).unwrap();
        assert_eq!(bound, BigUint::from(7620480u64));
    }

    #[test]
    fn tail_sums_hold_at_12() {
        for mode in [TailMode::FirstRow, TailMode::TwoRows] {
            let check = tail_dimension_sums(12, Rational64::new(1, 2), mode).unwrap();
            assert!(check.holds);
        }
        let all = tail_dimension_sums(12, Rational64::new(1, 12), TailMode::FirstRow).unwrap();
        assert_eq!(all.exact, factorial(12)); // whole Plancherel mass
        let top = tail_dimension_sums(12, Rational64::one(), TailMode::FirstRow).unwrap();
        assert_eq!(top.exact, BigUint::one());
        assert!(top.holds);
    }

    #[test]
    fn region_partition_examples() {
        assert_eq!(region_partition_1(Rational64::new(1, 2), 6).unwrap(), p(&[3, 3]));
        assert_eq!(
            region_partition_1(Rational64::new(2, 5), 10).unwrap(),
            p(&[4, 4, 2])
        );
        assert_eq!(region_partition_1(Rational64::new(1, 3), 9).unwrap(), p(&[3, 3, 3]));
        assert_eq!(
            region_partition_2(Rational64::new(2, 3), 12).unwrap(),
            p(&[8, 2, 2])
        );
        assert_eq!(
            region_partition_2(Rational64::new(1, 2), 8).unwrap(),
            p(&[4, 2, 2])
        );
        assert_eq!(
            region_partition_2(Rational64::new(2, 5), 10).unwrap(),
            p(&[4, 2, 2, 2])
        );
    }

    #[test]
    fn region_classification_examples() {
        assert_eq!(region_classify(&p(&[9])), Region::R4);
        assert_eq!(region_classify(&p(&[2; 13])), Region::R1);
        let mut parts = vec![4, 2];
        parts.extend(vec![1; 6]);
        assert_eq!(region_classify(&Partition::new(parts).unwrap()), Region::R2);
        // Same first rows but a tiny second row drops to R3.
        let mut parts = vec![4, 1, 1, 1, 1, 1, 1, 1, 1];
        parts.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(region_classify(&Partition::new(parts).unwrap()), Region::R3);
    }

    #[test]
    fn region_asymptote_decimals() {
        let a1 = region_log_asymptote(Rational64::new(1, 2), 1).unwrap();
        assert!((a1 - (3.0 * 1.5f64.ln() - 2.0 * 2f64.ln())).abs() < 1e-12);
        assert!((a1 + 0.17).abs() < 0.005);
        let a0 = region_log_asymptote(Rational64::new(2, 3), 1).unwrap();
        assert!((a0 + 0.15).abs() < 0.005);
        let b1 = region_log_asymptote(Rational64::new(1, 2), 2).unwrap();
        assert!((b1 + 0.22).abs() < 0.005);
    }

    #[test]
    fn two_row_bound_examples() {
        assert!((two_row_eigenvalue_bound(10, 1).unwrap() - 0.55).abs() < 1e-15);
        assert!((two_row_eigenvalue_bound(10, 2).unwrap() - 0.36).abs() < 1e-15);
        assert_eq!(two_row_eigenvalue_bound(10, 0).unwrap(), 1.0);
        let exact = eigenvalue_exact(&p(&[9, 1]), &rat(10, 1));
        assert_eq!(exact, rat(9, 19));
        let exact = eigenvalue_exact(&p(&[8, 2]), &rat(10, 1));
        assert_eq!(exact, rat(90, 342));
    }

    #[test]
    fn monotonicity_holds_for_integer_theta() {
        let report = monotonicity_check(8, &ThetaValue::fixed_int(3)).unwrap();
        assert!(report.signed_violations.is_empty());
    }

    #[test]
    fn monotonicity_counterexample_at_six_fifths() {
        let report = monotonicity_check(5, &ThetaValue::fixed_ratio(6, 5)).unwrap();
        let hit = report
            .abs_violations
            .iter()
            .find(|v| v.upper == p(&[2, 2, 1]) && v.lower == p(&[2, 1, 1, 1]))
            .expect("known violating pair");
        assert_eq!(hit.abs_ratio.clone().unwrap(), rat(2, 3));
    }

    #[test]
    fn monotonicity_vacuous_at_theta_two() {
        let theta = rat(2, 1);
        assert!(eigenvalue_exact(&p(&[2, 2, 1]), &theta).is_zero());
        assert!(eigenvalue_exact(&p(&[2, 1, 1, 1]), &theta).is_zero());
        let report = monotonicity_check(5, &ThetaValue::fixed_int(2)).unwrap();
        assert!(report.signed_violations.is_empty());
    }
}
