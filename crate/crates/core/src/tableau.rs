//! Young tableaux stored column-major, column straightening and the ranking
//! of column-strict tableaux.
//!
//! Column-strict tableaux of a shape are ordered lexicographically on the
//! tuple of their columns, each column read top to bottom, columns compared
//! left to right. The rank of a tableau is its position in that order; for
//! a two-column shape the order only depends on the first column.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{binomial, Partition};
use crate::perm::{sorting_sign, Permutation};

/// Enumeration limits. `max_dim` bounds the number of tableaux any single
/// enumeration may produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_n: usize,
    pub max_dim: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Self {
            max_n: 12,
            max_dim: 2_000_000,
        }
    }
}

impl Guard {
    pub(crate) fn check(&self, n: usize, count: u128, what: &str) -> Result<()> {
        if n > self.max_n {
            return Err(Error::Guard(format!(
                "{what}: n = {n} exceeds max_n = {}",
                self.max_n
            )));
        }
        if count > self.max_dim as u128 {
            return Err(Error::Guard(format!(
                "{what}: {count} items exceed max_dim = {}",
                self.max_dim
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    columns: Vec<Vec<usize>>,
}

/// A column-strict tableau together with the sign picked up while sorting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedBasisTableau {
    pub sign: i64,
    pub tableau: Tableau,
}

impl Tableau {
    /// Builds a tableau from its columns, left to right, each top to bottom.
    pub fn from_columns(columns: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = columns.iter().map(Vec::len).collect();
        let col_shape = Partition::new(lengths)
            .map_err(|e| Error::InvalidTableau(format!("column lengths: {e}")))?;
        let shape = col_shape.conjugate();
        let t = Self { shape, columns };
        t.validate()?;
        Ok(t)
    }

    /// Builds a tableau of the given shape, checking that the column lengths match.
    pub fn with_shape(shape: &Partition, columns: Vec<Vec<usize>>) -> Result<Self> {
        let t = Self::from_columns(columns)?;
        if &t.shape != shape {
            return Err(Error::ShapeMismatch(format!(
                "tableau has shape ({}) but ({shape}) was expected",
                t.shape
            )));
        }
        Ok(t)
    }

    /// Builds a tableau from its rows, top to bottom.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("row lengths: {e}")))?;
        let columns = shape
            .column_lengths()
            .iter()
            .enumerate()
            .map(|(c, &len)| (0..len).map(|r| rows[r][c]).collect())
            .collect();
        let t = Self { shape, columns };
        t.validate()?;
        Ok(t)
    }

    /// Fills the shape column by column, top to bottom, from `word`.
    pub fn fill_column_major(shape: &Partition, word: &[usize]) -> Result<Self> {
        if word.len() != shape.size() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for a shape of size {}",
                word.len(),
                shape.size()
            )));
        }
        let mut columns = Vec::new();
        let mut start = 0;
        for len in shape.column_lengths() {
            columns.push(word[start..start + len].to_vec());
            start += len;
        }
        let t = Self {
            shape: shape.clone(),
            columns,
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let n = self.shape.size();
        let mut seen = vec![false; n];
        for &x in self.columns.iter().flatten() {
            if x == 0 || x > n {
                return Err(Error::InvalidTableau(format!("entry {x} outside [1, {n}]")));
            }
            if seen[x - 1] {
                return Err(Error::InvalidTableau(format!("entry {x} repeated")));
            }
            seen[x - 1] = true;
        }
        Ok(())
    }

    pub(crate) fn from_parts_unchecked(shape: Partition, columns: Vec<Vec<usize>>) -> Self {
        Self { shape, columns }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn column(&self, c: usize) -> &[usize] {
        &self.columns[c]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| self.columns[c][r]).collect())
            .collect()
    }

    pub fn is_column_strict(&self) -> bool {
        self.columns
            .iter()
            .all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    /// Sorts every column, returning the product of the sorting signs.
    pub fn straighten(&self) -> SignedBasisTableau {
        let mut sign = 1;
        let columns = self
            .columns
            .iter()
            .map(|col| {
                sign *= sorting_sign(col);
                let mut sorted = col.clone();
                sorted.sort_unstable();
                sorted
            })
            .collect();
        SignedBasisTableau {
            sign,
            tableau: Self {
                shape: self.shape.clone(),
                columns,
            },
        }
    }

    /// Replaces every entry `x` by `σ(x)`.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != self.shape.size() {
            return Err(Error::InvalidPermutation(format!(
                "permutation of degree {} applied to a tableau with {} entries",
                sigma.degree(),
                self.shape.size()
            )));
        }
        Ok(Self {
            shape: self.shape.clone(),
            columns: self
                .columns
                .iter()
                .map(|col| col.iter().map(|&x| sigma.apply(x)).collect())
                .collect(),
        })
    }

    /// Position of this column-strict tableau in the basis order.
    pub fn rank(&self) -> Result<usize> {
        if !self.is_column_strict() {
            return Err(Error::InvalidTableau(format!(
                "rank needs a column-strict tableau, got {self}"
            )));
        }
        Ok(ShapeIndex::new(&self.shape).rank_columns(&self.columns))
    }

    pub fn unrank(shape: &Partition, rank: usize) -> Result<Self> {
        ShapeIndex::new(shape).unrank(rank)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Parses the row format `"1 5 7/2 6/3/4"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad entry {tok:?} in {s:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Parse(format!("empty row in {s:?}")));
        }
        Self::from_rows(rows)
    }
}

/// Precomputed ranking data for one shape.
#[derive(Clone, Debug)]
pub struct ShapeIndex {
    shape: Partition,
    col_lengths: Vec<usize>,
    // weights[c] = number of ways to fill columns c+1.. from what is left.
    weights: Vec<usize>,
    dim: usize,
}

impl ShapeIndex {
    pub fn new(shape: &Partition) -> Self {
        let col_lengths = shape.column_lengths();
        let mut weights = vec![1usize; col_lengths.len()];
        let mut remaining = 0usize;
        let mut acc: u128 = 1;
        for c in (0..col_lengths.len()).rev() {
            weights[c] = acc as usize;
            remaining += col_lengths[c];
            acc *= binomial(remaining, col_lengths[c]);
        }
        Self {
            shape: shape.clone(),
            col_lengths,
            weights,
            dim: acc as usize,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of column-strict tableaux, `n! / prod_c l_c!`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rank of sorted columns. Each column must be strictly increasing.
    pub(crate) fn rank_columns(&self, columns: &[Vec<usize>]) -> usize {
        let n = self.shape.size();
        let mut used = vec![false; n + 1];
        let mut rank = 0usize;
        for (c, col) in columns.iter().enumerate() {
            let pool = n - used[1..].iter().filter(|&&u| u).count();
            let k = col.len();
            let mut sub_rank = 0usize;
            // Skipped values: for each chosen entry, every unused value
            // between the previous chosen entry and it.
            let mut prev = 0usize;
            let mut pos = 0usize; // pool position of the next unused value
            for (i, &x) in col.iter().enumerate() {
                for v in prev + 1..x {
                    if !used[v] {
                        sub_rank += binomial(pool - 1 - pos, k - 1 - i) as usize;
                        pos += 1;
                    }
                }
                pos += 1;
                prev = x;
            }
            for &x in col {
                used[x] = true;
            }
            rank += sub_rank * self.weights[c];
        }
        rank
    }

    pub fn unrank(&self, rank: usize) -> Result<Tableau> {
        if rank >= self.dim {
            return Err(Error::OutOfRange(format!(
                "rank {rank} out of range for shape ({}) of dimension {}",
                self.shape, self.dim
            )));
        }
        let n = self.shape.size();
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut rest = rank;
        let mut columns = Vec::with_capacity(self.col_lengths.len());
        for (c, &k) in self.col_lengths.iter().enumerate() {
            let mut sub = rest / self.weights[c];
            rest %= self.weights[c];
            let size = pool.len();
            let mut chosen = Vec::with_capacity(k);
            let mut v = 0usize;
            for i in 0..k {
                loop {
                    let count = binomial(size - 1 - v, k - 1 - i) as usize;
                    if sub < count {
                        break;
                    }
                    sub -= count;
                    v += 1;
                }
                chosen.push(v);
                v += 1;
            }
            let column: Vec<usize> = chosen.iter().map(|&i| pool[i]).collect();
            for &i in chosen.iter().rev() {
                pool.remove(i);
            }
            columns.push(column);
        }
        Ok(Tableau::from_parts_unchecked(self.shape.clone(), columns))
    }
}

/// Every column-strict tableau of the shape, in rank order.
pub fn enumerate_column_strict(shape: &Partition) -> Result<Vec<Tableau>> {
    enumerate_column_strict_guarded(shape, &Guard::default())
}

pub fn enumerate_column_strict_guarded(shape: &Partition, guard: &Guard) -> Result<Vec<Tableau>> {
    guard.check(shape.size(), shape.column_tabloid_count(), "column-strict enumeration")?;
    let index = ShapeIndex::new(shape);
    (0..index.dim()).map(|r| index.unrank(r)).collect()
}

/// Every tableau of the shape (all `n!` fillings), ordered by the
/// column-major reading word in lexicographic order.
pub fn enumerate_all(shape: &Partition, guard: &Guard) -> Result<Vec<Tableau>> {
    let n = shape.size();
    guard.check(n, crate::partition::factorial(n), "tableau enumeration")?;
    let mut word: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Tableau::fill_column_major(shape, &word)?);
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}
