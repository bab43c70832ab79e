//! Permutations in one-line notation, with composition, cycle structure and
//! Lehmer ranking for dense indexing of small symmetric groups.

use crate::partitions::Partition;
use crate::{Error, Result};

/// A permutation of `{0, ..., n-1}` stored as its one-line image table:
/// `mapping[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    mapping: Vec<u32>,
}

impl Permutation {
    pub fn new(mapping: Vec<u32>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &v in &mapping {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err(Error::Domain(format!(
                    "not a bijection on 0..{n}: {mapping:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { mapping })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            mapping: (0..n).collect(),
        }
    }

    /// The transposition `(a b)` on `n` points, zero-based.
    pub fn transposition(n: u32, a: u32, b: u32) -> Result<Self> {
        if a >= n || b >= n || a == b {
            return Err(Error::Domain(format!(
                "transposition needs distinct points below {n}, got {a}, {b}"
            )));
        }
        let mut mapping: Vec<u32> = (0..n).collect();
        mapping.swap(a as usize, b as usize);
        Ok(Permutation { mapping })
    }

    pub fn n(&self) -> u32 {
        self.mapping.len() as u32
    }

    pub fn mapping(&self) -> &[u32] {
        &self.mapping
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.mapping[i as usize]
    }

    /// `self` after `other`: `(self * other)(i) = self(other(i))`. The walk
    /// multiplies each fresh step on the left, `sigma_{t+1} = tau * sigma_t`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::Domain(format!(
                "composing permutations of different sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            mapping: other.mapping.iter().map(|&i| self.mapping[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.mapping.len()];
        for (i, &v) in self.mapping.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { mapping: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Cycle lengths as a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let n = self.mapping.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.mapping[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths form a partition")
    }

    pub fn num_cycles(&self) -> u32 {
        self.cycle_type().len() as u32
    }

    pub fn fixed_points(&self) -> u32 {
        self.mapping
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i as u32 == v)
            .count() as u32
    }

    /// Rank in `0..n!` by the Lehmer code, lexicographic on one-line words.
    pub fn lehmer_rank(&self) -> u64 {
        let n = self.mapping.len();
        let mut rank = 0u64;
        for i in 0..n {
            let smaller = self.mapping[i + 1..]
                .iter()
                .filter(|&&v| v < self.mapping[i])
                .count() as u64;
            rank = rank * (n - i) as u64 + smaller;
        }
        rank
    }

    pub fn from_lehmer_rank(n: u32, mut rank: u64) -> Result<Permutation> {
        let mut digits = vec![0u64; n as usize];
        for i in (0..n as usize).rev() {
            let base = (n as usize - i) as u64;
            digits[i] = rank % base;
            rank /= base;
        }
        if rank != 0 {
            return Err(Error::Domain(format!("rank out of range for n = {n}")));
        }
        let mut pool: Vec<u32> = (0..n).collect();
        let mapping = digits
            .into_iter()
            .map(|d| pool.remove(d as usize))
            .collect();
        Ok(Permutation { mapping })
    }
}

impl std::fmt::Display for Permutation {
    /// Cycle notation on 1-based points, fixed points omitted; identity
    /// prints as `()`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.mapping.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.mapping[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.mapping[i] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
