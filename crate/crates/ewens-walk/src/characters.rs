//! Irreducible characters of the symmetric group via the Murnaghan-Nakayama
//! border-strip rule, and full character tables with orthogonality
//! verification.

use std::collections::HashMap;
use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::partitions::{enumerate_partitions_capped, factorial, Partition};
use crate::{Caps, Error, Result};

/// Memoizing Murnaghan-Nakayama evaluator.
///
/// Cycle parts are consumed largest-first, so the memo key is the pair
/// (remaining shape, remaining cycle-part multiset); the removal order does
/// not change the value and largest-first maximizes cache hits.
#[derive(Default)]
pub struct CharEvaluator {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl CharEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Exact integer character value `chi^lambda(mu)`.
    pub fn character(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        if lambda.n() != mu.n() {
            return Err(Error::Domain(format!(
                "character requires |lambda| == |mu|, got {} and {}",
                lambda.n(),
                mu.n()
            )));
        }
        let mut cycles = mu.parts().to_vec();
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        Ok(self.eval(lambda.parts().to_vec(), cycles))
    }

    fn eval(&mut self, shape: Vec<u32>, cycles: Vec<u32>) -> i64 {
        if cycles.is_empty() {
            return 1;
        }
        let key = (shape, cycles);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (shape, cycles) = (&key.0, &key.1);
        let strip = cycles[0] as i64;
        let rest = cycles[1..].to_vec();
        // First-column hook lengths (beta numbers) of the shape; removing a
        // border strip of length r means lowering one beta number by r.
        let rows = shape.len() as i64;
        let beta: Vec<i64> = shape
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (rows - 1 - i as i64))
            .collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            let target = b - strip;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&x| target < x && x < b).count();
            let mut nb = beta.clone();
            nb[idx] = target;
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let new_shape: Vec<u32> = nb
                .iter()
                .enumerate()
                .map(|(i, &x)| (x - (rows - 1 - i as i64)) as u32)
                .filter(|&p| p > 0)
                .collect();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(new_shape, rest.clone());
        }
        self.memo.insert(key, total);
        total
    }
}

/// One-off character evaluation. Use [`CharEvaluator`] or
/// [`character_table`] when computing many values.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    CharEvaluator::new().character(lambda, mu)
}

/// Character of the defining (permutation-matrix) representation: the number
/// of fixed points of the class, i.e. the number of parts equal to 1.
pub fn fixed_point_character(mu: &Partition) -> i64 {
    mu.ones() as i64
}

/// Complete integer character table of `S_n`. Rows are representation labels
/// and columns are class labels, both in reverse-lexicographic enumeration
/// order.
pub struct CharacterTable {
    n: u32,
    labels: Vec<Partition>,
    /// values[row][col] = chi^{labels[row]}(labels[col])
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Row/column labels in enumeration order.
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn num_classes(&self) -> usize {
        self.labels.len()
    }

    pub fn value(&self, row: usize, col: usize) -> i64 {
        self.values[row][col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.values[row]
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(&mut w);
        out.write_record(["representation", "class", "value"])
            .map_err(csv_err)?;
        for (r, lam) in self.labels.iter().enumerate() {
            for (c, mu) in self.labels.iter().enumerate() {
                out.write_record([
                    lam.to_string(),
                    mu.to_string(),
                    self.values[r][c].to_string(),
                ])
                .map_err(csv_err)?;
            }
        }
        out.flush()?;
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Domain(format!("csv: {e}"))
}

/// Builds the table with the default size guard and verifies the two table
/// invariants (identity column = dimensions, row orthogonality) before
/// returning.
pub fn character_table(n: u32) -> Result<CharacterTable> {
    character_table_capped(n, Caps::default().character_table_max)
}

pub fn character_table_capped(n: u32, cap: u32) -> Result<CharacterTable> {
    if n == 0 || n > cap {
        return Err(Error::SizeLimit(format!(
            "character table requires 1 <= n <= {cap}, got {n}"
        )));
    }
    let labels = enumerate_partitions_capped(n, cap)?;
    let mut eval = CharEvaluator::new();
    let mut values = Vec::with_capacity(labels.len());
    for lam in &labels {
        let row: Result<Vec<i64>> = labels.iter().map(|mu| eval.character(lam, mu)).collect();
        values.push(row?);
    }
    let table = CharacterTable { n, labels, values };
    verify_identity_column(&table)?;
    verify_row_orthogonality(&table)?;
    Ok(table)
}

fn verify_identity_column(table: &CharacterTable) -> Result<()> {
    // The identity class (1^n) is last in reverse-lexicographic order.
    let id = table.labels.len() - 1;
    for (r, lam) in table.labels.iter().enumerate() {
        let d = lam.dimension().to_i64().ok_or_else(|| {
            Error::SizeLimit(format!("dimension of {lam} does not fit in i64"))
        })?;
        if table.values[r][id] != d {
            return Err(Error::Domain(format!(
                "character table failed chi^lambda(id) == d_lambda at {lam}"
            )));
        }
    }
    Ok(())
}

fn verify_row_orthogonality(table: &CharacterTable) -> Result<()> {
    let class_sizes: Vec<i128> = table
        .labels
        .iter()
        .map(|mu| {
            mu.class_size()
                .to_i128()
                .ok_or_else(|| Error::SizeLimit("class size does not fit in i128".into()))
        })
        .collect::<Result<_>>()?;
    let nfact = factorial(table.n as u64)
        .to_i128()
        .ok_or_else(|| Error::SizeLimit("n! does not fit in i128".into()))?;
    let k = table.labels.len();
    for a in 0..k {
        for b in a..k {
            // Partial sums stay within n! by Cauchy-Schwarz, so i128 is safe.
            let mut s: i128 = 0;
            for c in 0..k {
                s += class_sizes[c] * table.values[a][c] as i128 * table.values[b][c] as i128;
            }
            let expected = if a == b { nfact } else { 0 };
            if s != expected {
                return Err(Error::Domain(format!(
                    "character table failed row orthogonality at rows {} and {}",
                    table.labels[a], table.labels[b]
                )));
            }
        }
    }
    Ok(())
}

/// Exact elementary symmetric polynomial `e_k` of the given integer values.
pub fn elementary_symmetric(values: &[i64], k: usize) -> BigInt {
    // e_j updated one variable at a time.
    let mut e: Vec<BigInt> = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::from(1);
    for &v in values {
        for j in (1..=k.min(e.len() - 1)).rev() {
            let add = &e[j - 1] * BigInt::from(v);
            e[j] += add;
        }
    }
    e[k].clone()
}

/// Verification report used by the `verify` CLI subcommands.
#[derive(Debug, serde::Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub checks: Vec<VerifyCheck>,
}

#[derive(Debug, serde::Serialize)]
pub struct VerifyCheck {
    pub label: String,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerifyReport {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, pass: bool) {
        self.checks.push(VerifyCheck {
            label: label.into(),
            pass,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Character-level invariants as a PASS/FAIL report: identity column, row and
/// column orthogonality, conjugation symmetry.
pub fn verify_characters(n: u32) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(format!("characters n={n}"));
    let table = match character_table(n) {
        Ok(t) => {
            report.push("identity column equals dimensions", true);
            report.push("row orthogonality", true);
            t
        }
        Err(e) => {
            report.push(format!("table construction: {e}"), false);
            return Ok(report);
        }
    };
    report.push("column orthogonality", column_orthogonality_holds(&table));
    report.push(
        "conjugate symmetry chi^lambda'(mu) == sign(mu) chi^lambda(mu)",
        conjugate_symmetry_holds(&table),
    );
    Ok(report)
}

pub fn column_orthogonality_holds(table: &CharacterTable) -> bool {
    let k = table.num_classes();
    let nfact = factorial(table.n() as u64);
    for a in 0..k {
        let centralizer: BigUint = &nfact / table.labels()[a].class_size();
        let centralizer = match centralizer.to_i128() {
            Some(v) => v,
            None => return false,
        };
        for b in a..k {
            let mut s: i128 = 0;
            for r in 0..table.labels().len() {
                s += table.value(r, a) as i128 * table.value(r, b) as i128;
            }
            let expected = if a == b { centralizer } else { 0 };
            if s != expected {
                return false;
            }
        }
    }
    true
}

pub fn conjugate_symmetry_holds(table: &CharacterTable) -> bool {
    let index: HashMap<&Partition, usize> = table
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    for (r, lam) in table.labels().iter().enumerate() {
        let conj_row = index[&lam.conjugate()];
        for (c, mu) in table.labels().iter().enumerate() {
            if table.value(conj_row, c) != mu.sign() * table.value(r, c) {
                return false;
            }
        }
    }
    true
}
