//! Integer partitions: shapes, conjugates, column lengths and irreducible
//! dimensions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest size accepted by [`syt_count_bruteforce`].
pub const SYT_BRUTEFORCE_MAX_N: usize = 12;

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The two-column shape `2^m 1^(n-m)`, whose columns have lengths `n` and `m`.
    pub fn two_column(n: usize, m: usize) -> Result<Self> {
        if m > n {
            return Err(Error::InvalidPartition(format!(
                "two-column shape needs m <= n, got n={n}, m={m}"
            )));
        }
        let mut parts = vec![2; m];
        parts.extend(std::iter::repeat(1).take(n - m));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of the first row, which is also the number of columns.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Lengths of the columns of the Young diagram, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.conjugate().parts
    }

    /// The shape condition exactly as stated for the max-Garnir presentation:
    /// `λ_i - λ_{i+1} <= 1` for `i = 2, ..., l-1`, and `λ_l = 1`.
    ///
    /// The empty partition satisfies it vacuously.
    pub fn condition_paper(&self) -> bool {
        let l = self.parts.len();
        if l == 0 {
            return true;
        }
        // 1-based i in 2..=l-1 compares parts[i-1] and parts[i].
        let middle = (2..l).all(|i| self.parts[i - 1] - self.parts[i] <= 1);
        middle && self.parts[l - 1] == 1
    }

    /// Every pair of adjacent columns of equal length has length 1.
    ///
    /// This is the two-column criterion (`m < n` or `m = n = 1`) applied to
    /// each adjacent column pair. It is sufficient for the max-Garnir
    /// relations to present the Specht module but not necessary: `(3,2)`
    /// fails it and is still presented.
    pub fn condition_columns(&self) -> bool {
        self.column_lengths()
            .windows(2)
            .all(|w| w[0] != w[1] || w[0] == 1)
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (conj.parts[j] - i - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Dimension of the irreducible representation, by the hook length formula.
    pub fn hook_dim(&self) -> u64 {
        let mut numerator: BigUint = One::one();
        for k in 2..=self.size() {
            numerator *= BigUint::from(k);
        }
        let mut denominator: BigUint = One::one();
        for h in self.hooks().into_iter().flatten() {
            denominator *= BigUint::from(h);
        }
        (numerator / denominator)
            .to_u64()
            .expect("irreducible dimension exceeds u64")
    }

    /// `n! / prod_c l_c!`, the number of column-strict tableaux of this shape.
    pub fn column_tabloid_count(&self) -> u128 {
        let mut count = factorial(self.size());
        for l in self.column_lengths() {
            count /= factorial(l);
        }
        count
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {tok:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Counts standard Young tableaux by placing `1, 2, ..., n` one at a time
/// into every addable corner, visiting each tableau once.
pub fn syt_count_bruteforce(shape: &Partition) -> Result<u64> {
    if shape.size() > SYT_BRUTEFORCE_MAX_N {
        return Err(Error::Guard(format!(
            "brute-force SYT count limited to n <= {SYT_BRUTEFORCE_MAX_N}, got {}",
            shape.size()
        )));
    }
    fn place(target: &[usize], filled: &mut Vec<usize>, remaining: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for row in 0..target.len() {
            let fits = filled[row] < target[row] && (row == 0 || filled[row - 1] > filled[row]);
            if fits {
                filled[row] += 1;
                total += place(target, filled, remaining - 1);
                filled[row] -= 1;
            }
        }
        total
    }
    let mut filled = vec![0; shape.len()];
    Ok(place(shape.parts(), &mut filled, shape.size()))
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
