//! Permutations of `[n] = {1, ..., n}` in one-line notation.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[i] = σ(i + 1) - 1
    images: Vec<usize>,
}

impl Permutation {
    /// Builds σ from its one-line notation `σ(1) σ(2) ... σ(n)` (1-based).
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &x in one_line {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a bijection on [{n}]"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Self {
            images: one_line.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// The transposition exchanging `a` and `b` (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!(
                "transposition ({a} {b}) outside [{n}]"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Ok(Self { images })
    }

    /// The canonical element of cycle type `μ`: the first part cycles
    /// `1..=μ_1`, the next part cycles the following block, and so on.
    pub fn class_representative(cycle_type: &Partition) -> Self {
        let mut images = Vec::with_capacity(cycle_type.size());
        let mut start = 0;
        for &len in cycle_type.parts() {
            for j in 0..len {
                images.push(start + (j + 1) % len);
            }
            start += len;
        }
        Self { images }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// σ(x) for 1-based `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::InvalidPermutation(format!(
                "cannot compose degrees {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Self { images }
    }

    /// Cycle lengths sorted decreasingly.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths form a partition")
    }

    /// +1 or -1.
    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        if (ct.size() - ct.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", words.join(" "))
    }
}

/// Sign of the permutation that sorts `values` (distinct) increasingly.
pub(crate) fn sorting_sign(values: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
