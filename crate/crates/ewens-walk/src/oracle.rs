//! Brute-force ground truth on small symmetric groups: the full group
//! algebra with exact rational coefficients, Jucys-Murphy identities, exact
//! convolutions of the walk and exact distributions. Everything here is
//! independent of the character machinery it cross-checks.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::characters::VerifyReport;
use crate::mixing::{ewens_class_probability, matching_tail};
use crate::partitions::factorial;
use crate::permutation::Permutation;
use crate::{Caps, Error, Result};

fn check_oracle_size(n: u32) -> Result<()> {
    let cap = Caps::default().oracle_max;
    if n == 0 || n > cap {
        return Err(Error::SizeLimit(format!(
            "oracle requires 1 <= n <= {cap}, got {n}"
        )));
    }
    Ok(())
}

/// All `n!` permutations, indexed by Lehmer rank.
pub fn all_permutations(n: u32) -> Result<Vec<Permutation>> {
    check_oracle_size(n)?;
    let total = factorial(n as u64).to_u64().unwrap();
    (0..total).map(|r| Permutation::from_lehmer_rank(n, r)).collect()
}

/// A finitely supported element of the rational group algebra of `S_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    n: u32,
    coefficients: HashMap<Permutation, BigRational>,
}

impl AlgebraElement {
    pub fn zero(n: u32) -> Self {
        AlgebraElement {
            n,
            coefficients: HashMap::new(),
        }
    }

    /// The identity of the algebra: the identity permutation with
    /// coefficient one.
    pub fn one(n: u32) -> Self {
        AlgebraElement::basis(Permutation::identity(n))
    }

    pub fn basis(p: Permutation) -> Self {
        let n = p.n();
        let mut coefficients = HashMap::new();
        coefficients.insert(p, BigRational::one());
        AlgebraElement { n, coefficients }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coefficient(&self, p: &Permutation) -> BigRational {
        self.coefficients.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support_size(&self) -> usize {
        self.coefficients.len()
    }

    pub fn add_term(&mut self, p: Permutation, c: BigRational) {
        let entry = self
            .coefficients
            .entry(p.clone())
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.remove(&p);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same_group(other)?;
        let mut out = self.clone();
        for (p, c) in &other.coefficients {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    /// Group-algebra product: coefficients convolve along composition.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same_group(other)?;
        let mut out = AlgebraElement::zero(self.n);
        for (p, cp) in &self.coefficients {
            for (q, cq) in &other.coefficients {
                out.add_term(p.compose(q)?, cp * cq);
            }
        }
        Ok(out)
    }

    fn check_same_group(&self, other: &AlgebraElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Domain(format!(
                "algebra elements over different groups: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

/// Jucys-Murphy element `R_i = (1,i) + (2,i) + ... + (i-1,i)`, 1-based `i`.
pub fn yjm(i: u32, n: u32) -> Result<AlgebraElement> {
    check_oracle_size(n)?;
    if i < 2 || i > n {
        return Err(Error::Domain(format!(
            "Jucys-Murphy index must satisfy 2 <= i <= n, got {i}"
        )));
    }
    let mut out = AlgebraElement::zero(n);
    for j in 1..i {
        out.add_term(Permutation::transposition(n, j - 1, i - 1)?, BigRational::one());
    }
    Ok(out)
}

/// `e_k(R_2, ..., R_n)` expanded in the group algebra, by the one-variable-
/// at-a-time elementary-symmetric recurrence.
pub fn elementary_symmetric_yjm(k: u32, n: u32) -> Result<AlgebraElement> {
    check_oracle_size(n)?;
    if k > n - 1 {
        return Err(Error::Domain(format!(
            "elementary symmetric degree must satisfy 0 <= k <= n-1, got {k}"
        )));
    }
    let mut e: Vec<AlgebraElement> = vec![AlgebraElement::one(n)];
    for i in 2..=n {
        let r = yjm(i, n)?;
        if e.len() < k as usize + 1 {
            e.push(AlgebraElement::zero(n));
        }
        // e_j <- e_j + e_{j-1} R_i, descending j so each e_{j-1} is the
        // previous round's value.
        for j in (1..e.len()).rev() {
            let bump = e[j - 1].mul(&r)?;
            e[j] = e[j].add(&bump)?;
        }
    }
    Ok(e[k as usize].clone())
}

/// Checks, coefficient by coefficient, that `e_k(R_2, ..., R_n)` is the sum
/// of all permutations with exactly `n - k` cycles, for every `k`.
pub fn verify_diaconis_green(n: u32) -> Result<VerifyReport> {
    check_oracle_size(n)?;
    if n > 6 {
        return Err(Error::SizeLimit(format!(
            "Diaconis-Green verification capped at n = 6, got {n}"
        )));
    }
    let perms = all_permutations(n)?;
    let mut report = VerifyReport::new(format!("diaconis-green n={n}"));
    for k in 0..n {
        let e = elementary_symmetric_yjm(k, n)?;
        let pass = perms.iter().all(|p| {
            let expect = if p.num_cycles() == n - k {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            e.coefficient(p) == expect
        });
        report.push(format!("k={k}"), pass);
    }
    Ok(report)
}

/// Exact t-fold convolution of the one-step Ewens measure, as a dense vector
/// over Lehmer ranks.
pub fn brute_force_walk_distribution(
    n: u32,
    theta: &BigRational,
    t: u32,
) -> Result<Vec<BigRational>> {
    check_oracle_size(n)?;
    if t > 10 {
        return Err(Error::SizeLimit(format!(
            "oracle convolution budget is t <= 10, got {t}"
        )));
    }
    let perms = all_permutations(n)?;
    let step: Vec<BigRational> = perms
        .iter()
        .map(|p| ewens_class_probability(&p.cycle_type(), theta))
        .collect::<Result<_>>()?;
    let mut current = vec![BigRational::zero(); perms.len()];
    current[Permutation::identity(n).lehmer_rank() as usize] = BigRational::one();
    for _ in 0..t {
        let mut next = vec![BigRational::zero(); perms.len()];
        for (h, ch) in perms.iter().zip(&current) {
            if ch.is_zero() {
                continue;
            }
            for (tau, ct) in perms.iter().zip(&step) {
                let g = tau.compose(h)?;
                next[g.lehmer_rank() as usize] += ct * ch;
            }
        }
        current = next;
    }
    Ok(current)
}

/// Exact total variation of the brute-force walk distribution from uniform.
pub fn brute_force_tv(n: u32, theta: &BigRational, t: u32) -> Result<BigRational> {
    let dist = brute_force_walk_distribution(n, theta, t)?;
    let uniform = BigRational::new(BigInt::one(), BigInt::from(factorial(n as u64)));
    let mut total = BigRational::zero();
    for p in &dist {
        total += (p - &uniform).abs();
    }
    Ok(total / BigRational::from_integer(BigInt::from(2)))
}

/// Brute-force tail probabilities of fixed points under the uniform measure
/// against the exact matching-problem formula, for every threshold.
pub fn verify_matching(n: u32) -> Result<VerifyReport> {
    check_oracle_size(n)?;
    let perms = all_permutations(n)?;
    let total = BigInt::from(factorial(n as u64));
    let mut report = VerifyReport::new(format!("matching n={n}"));
    for k in 1..=n {
        let count = perms.iter().filter(|p| p.fixed_points() >= k).count();
        let brute = BigRational::new(BigInt::from(count), total.clone());
        report.push(format!("k={k}"), brute == matching_tail(n, k)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, Partition};
    use crate::spectrum::eigenvalue_exact;
    use rand::Rng;
    use rand::SeedableRng;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(all_permutations(1).unwrap().len(), 1);
        assert_eq!(all_permutations(3).unwrap().len(), 6);
        assert_eq!(all_permutations(7).unwrap().len(), 5040);
        assert!(all_permutations(8).is_err());
    }

    #[test]
    fn yjm_basics() {
        let r2 = yjm(2, 3).unwrap();
        assert_eq!(r2.support_size(), 1);
        assert_eq!(
            r2.coefficient(&Permutation::transposition(3, 0, 1).unwrap()),
            BigRational::one()
        );
        let r3 = yjm(3, 3).unwrap();
        assert_eq!(r3.support_size(), 2);
        assert!(yjm(1, 3).is_err());
        assert!(yjm(4, 3).is_err());
    }

    #[test]
    fn yjm_elements_commute() {
        let r2 = yjm(2, 4).unwrap();
        let r3 = yjm(3, 4).unwrap();
        let r4 = yjm(4, 4).unwrap();
        assert_eq!(r2.mul(&r3).unwrap(), r3.mul(&r2).unwrap());
        assert_eq!(r3.mul(&r4).unwrap(), r4.mul(&r3).unwrap());
    }

    #[test]
    fn elementary_symmetric_small_cases() {
        let e0 = elementary_symmetric_yjm(0, 3).unwrap();
        assert_eq!(e0, AlgebraElement::one(3));
        // e_1 = R_2 + R_3: all three transpositions.
        let e1 = elementary_symmetric_yjm(1, 3).unwrap();
        assert_eq!(e1.support_size(), 3);
        // e_2 = R_2 R_3: the two 3-cycles.
        let e2 = elementary_symmetric_yjm(2, 3).unwrap();
        assert_eq!(e2.support_size(), 2);
        for p in all_permutations(3).unwrap() {
            let expect = if p.cycle_type().parts() == [3] {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            assert_eq!(e2.coefficient(&p), expect);
        }
    }

    #[test]
    fn diaconis_green_small() {
        assert!(verify_diaconis_green(3).unwrap().all_pass());
        let report = verify_diaconis_green(4).unwrap();
        assert!(report.all_pass());
        // k=2 support is the 11 permutations of S_4 with 2 cycles.
        let e2 = elementary_symmetric_yjm(2, 4).unwrap();
        assert_eq!(e2.support_size(), 11);
    }

    #[test]
    fn algebra_associativity_random_triples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let perms = all_permutations(4).unwrap();
        for _ in 0..25 {
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut e = AlgebraElement::zero(4);
                for _ in 0..3 {
                    let p = perms[rng.gen_range(0..perms.len())].clone();
                    e.add_term(p, rat(rng.gen_range(-3..=3), rng.gen_range(1..=4)));
                }
                e
            };
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn elementary_symmetric_is_central() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let perms = all_permutations(5).unwrap();
        for k in 0..=2u32 {
            let e = elementary_symmetric_yjm(k, 5).unwrap();
            for _ in 0..20 {
                let g = AlgebraElement::basis(perms[rng.gen_range(0..perms.len())].clone());
                assert_eq!(e.mul(&g).unwrap(), g.mul(&e).unwrap());
            }
        }
    }

    #[test]
    fn convolution_base_cases() {
        let theta = rat(2, 1);
        let d0 = brute_force_walk_distribution(3, &theta, 0).unwrap();
        assert_eq!(d0[0], BigRational::one());
        assert!(d0[1..].iter().all(|p| p.is_zero()));
        let d1 = brute_force_walk_distribution(3, &theta, 1).unwrap();
        for (p, prob) in all_permutations(3).unwrap().iter().zip(&d1) {
            assert_eq!(
                prob,
                &ewens_class_probability(&p.cycle_type(), &theta).unwrap()
            );
        }
    }

    #[test]
    fn convolution_is_class_function_and_matches_inversion() {
        for theta in [rat(3, 2), rat(2, 1)] {
            for t in [2u32, 3] {
                let dist = brute_force_walk_distribution(5, &theta, t).unwrap();
                let inverted = crate::mixing::walk_class_distribution(
                    5,
                    &crate::spectrum::ThetaValue::Fixed(theta.clone()),
                    t,
                )
                .unwrap();
                for (p, prob) in all_permutations(5).unwrap().iter().zip(&dist) {
                    assert_eq!(
                        prob,
                        &inverted.probability_exact(&p.cycle_type()).unwrap(),
                        "mismatch at {p}, theta={theta}, t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn brute_force_tv_examples() {
        let theta = rat(2, 1);
        assert_eq!(brute_force_tv(3, &theta, 1).unwrap(), rat(1, 6));
        assert_eq!(brute_force_tv(3, &theta, 0).unwrap(), rat(5, 6));
        assert_eq!(brute_force_tv(5, &rat(1, 1), 1).unwrap(), rat(0, 1));
        assert_eq!(
            brute_force_tv(5, &theta, 2).unwrap(),
            crate::mixing::total_variation_rational(5, &theta, 2).unwrap()
        );
    }

    #[test]
    fn spectral_trace_identity() {
        // sum of d^2 beta^t equals n! times the return probability.
        for n in [3u32, 4, 5] {
            let theta = rat(2, 1);
            for t in [1u32, 2, 3] {
                let dist = brute_force_walk_distribution(n, &theta, t).unwrap();
                let mut trace = BigRational::zero();
                for lam in enumerate_partitions(n).unwrap() {
                    let d = BigRational::from_integer(BigInt::from(lam.dimension()));
                    trace += &d * &d * eigenvalue_exact(&lam, &theta).pow(t as i32);
                }
                let nfact = BigRational::from_integer(BigInt::from(factorial(n as u64)));
                assert_eq!(trace, dist[0].clone() * nfact);
            }
        }
    }

    #[test]
    fn matching_verified() {
        for n in [3u32, 4, 7] {
            assert!(verify_matching(n).unwrap().all_pass());
        }
    }

    #[test]
    fn fixed_point_moments_oracle_cross_check() {
        // The closed-form moments at n=5 against direct expectations under
        // the brute-force distribution.
        let theta = rat(2, 1);
        for t in [1u32, 2] {
            let dist = brute_force_walk_distribution(5, &theta, t).unwrap();
            let mut mean = BigRational::zero();
            let mut second = BigRational::zero();
            for (p, prob) in all_permutations(5).unwrap().iter().zip(&dist) {
                let fix = BigRational::from_integer(BigInt::from(p.fixed_points()));
                mean += prob * &fix;
                second += prob * &fix * &fix;
            }
            let (m, v) = crate::mixing::fixed_point_moments(
                5,
                &crate::spectrum::ThetaValue::fixed_int(2),
                t,
            )
            .unwrap();
            let var = &second - &mean * &mean;
            assert!((m - mean.to_f64().unwrap()).abs() < 1e-12);
            assert!((v - var.to_f64().unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn walk_distribution_constant_on_classes() {
        let dist = brute_force_walk_distribution(4, &rat(3, 2), 2).unwrap();
        let perms = all_permutations(4).unwrap();
        let mut by_class: std::collections::HashMap<Partition, BigRational> =
            std::collections::HashMap::new();
        for (p, prob) in perms.iter().zip(&dist) {
            let entry = by_class.entry(p.cycle_type()).or_insert_with(|| prob.clone());
            assert_eq!(entry, prob);
        }
        assert_eq!(by_class.len(), 5);
    }
}
