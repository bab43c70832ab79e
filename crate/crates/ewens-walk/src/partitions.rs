//! Integer partitions and their combinatorics: enumeration in
//! reverse-lexicographic order, dominance order, hooks, contents, irreducible
//! dimensions and conjugacy class sizes.
//!
//! A [`Partition`] does double duty as a representation label and as a cycle
//! type (conjugacy class label) of `S_n`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A partition of a positive integer: strictly positive parts in
/// non-increasing order. The empty partition is rejected.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Domain("empty partition".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!(
                "partition parts must be non-increasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given positive parts into non-increasing order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Size of the partition, `n = sum of parts`.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// First part, `lambda_1`.
    pub fn first(&self) -> u32 {
        self.parts[0]
    }

    /// Second part, or 0 when there is only one part.
    pub fn second(&self) -> u32 {
        self.parts.get(1).copied().unwrap_or(0)
    }

    /// The single-row partition `(n)`.
    pub fn row(n: u32) -> Result<Self> {
        Partition::new(vec![n])
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: u32) -> Result<Self> {
        Partition::new(vec![1; n as usize])
    }

    /// The hook `(n - m + 1, 1^(m-1))`.
    pub fn hook(n: u32, m: u32) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::Domain(format!("hook with {m} parts out of 1..={n}")));
        }
        let mut parts = vec![1u32; m as usize];
        parts[0] = n - m + 1;
        Partition::new(parts)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Dominance order: true iff every prefix sum of `self` is >= the
    /// corresponding prefix sum of `other` (shorter side padded with zeros).
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::Domain(format!(
                "dominance compares partitions of equal size, got {} and {}",
                self.n(),
                other.n()
            )));
        }
        let len = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0u64, 0u64);
        for j in 0..len {
            a += self.parts.get(j).copied().unwrap_or(0) as u64;
            b += other.parts.get(j).copied().unwrap_or(0) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Contents in book order: boxes read row by row, left to right, the
    /// content of box (row i, col j) being `j - i` (zero-based).
    pub fn contents_book_order(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.n() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as i64 {
                out.push(j - i as i64);
            }
        }
        out
    }

    /// Hook lengths in book order.
    pub fn hook_lengths_book_order(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.n() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as u64 - (j as u64 + 1);
                let leg = conj.parts[j] as u64 - (i as u64 + 1);
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Dimension of the irreducible representation labelled by this
    /// partition: `n! / prod(hook lengths)`.
    pub fn dimension(&self) -> BigUint {
        let mut num = factorial(self.n() as u64);
        for h in self.hook_lengths_book_order() {
            num /= BigUint::from(h);
        }
        num
    }

    /// `ln` of the dimension, for bound scans past the exact-arithmetic
    /// comfort zone.
    pub fn ln_dimension(&self) -> f64 {
        let mut s = ln_factorial(self.n() as u64);
        for h in self.hook_lengths_book_order() {
            s -= (h as f64).ln();
        }
        s
    }

    /// Size of the conjugacy class with this cycle type: `n! / z` where
    /// `z = prod_i i^(m_i) m_i!` over part multiplicities `m_i`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.n() as u64) / self.centralizer_order()
    }

    /// `z_mu = prod_i i^(m_i) m_i!`, the centralizer order of the class.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0u64;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            z *= BigUint::from(part as u64).pow(mult as u32) * factorial(mult);
        }
        z
    }

    /// Number of parts equal to 1; as a cycle type this is the number of
    /// fixed points of the class.
    pub fn ones(&self) -> u32 {
        self.parts.iter().filter(|&&p| p == 1).count() as u32
    }

    /// Sign of the class: `(-1)^(n - number of parts)`.
    pub fn sign(&self) -> i64 {
        if (self.n() as usize - self.parts.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", joined.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|e| Error::Domain(format!("bad partition {s:?}: {e}")))?;
        Partition::new(parts)
    }
}

// Serialized as a plain JSON array of integers, e.g. [3,1].
impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Reverse-lexicographic order on partitions of the same size: `(n)` first,
/// `(1^n)` last. This is the enumeration order used everywhere.
pub fn rev_lex_cmp(a: &Partition, b: &Partition) -> Ordering {
    for (x, y) in a.parts.iter().zip(b.parts.iter()) {
        match y.cmp(x) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    a.parts.len().cmp(&b.parts.len())
}

/// All partitions of `n` in reverse-lexicographic order, checked against the
/// default enumeration cap.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    enumerate_partitions_capped(n, crate::Caps::default().enumeration_max)
}

pub fn enumerate_partitions_capped(n: u32, cap: u32) -> Result<Vec<Partition>> {
    if n == 0 || n > cap {
        return Err(Error::SizeLimit(format!(
            "partition enumeration requires 1 <= n <= {cap}, got {n}"
        )));
    }
    let mut out = Vec::new();
    for_each_partition(n, |parts| {
        out.push(Partition {
            parts: parts.to_vec(),
        })
    });
    Ok(out)
}

/// Streaming enumeration in reverse-lexicographic order without a cap; the
/// slice passed to the visitor is reused between calls. Intended for the
/// large spectrum scans where materializing every partition would hurt.
pub fn for_each_partition<F: FnMut(&[u32])>(n: u32, mut visit: F) {
    let mut buf: Vec<u32> = Vec::with_capacity(n as usize);
    descend(n, n, &mut buf, &mut visit);
}

fn descend<F: FnMut(&[u32])>(remaining: u32, max_part: u32, buf: &mut Vec<u32>, visit: &mut F) {
    if remaining == 0 {
        visit(buf);
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        buf.push(part);
        descend(remaining - part, part, buf, visit);
        buf.pop();
    }
}

pub fn factorial(n: u64) -> BigUint {
    let mut f = BigUint::one();
    for i in 2..=n {
        f *= BigUint::from(i);
    }
    f
}

/// `ln(n!)` by direct summation; exact enough for the bound scans used here.
pub fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}
