//! Garnir relations `g^t_{c,k}` and the relation sets they generate.
//!
//! `g^t_{c,k} = t̄ - Σ s̄`, where `s` runs over the tableaux obtained from
//! `t` by moving `k` chosen entries of column `c` to the top `k` cells of
//! column `c+1` and the displaced top entries of column `c+1` into the
//! vacated cells of column `c`, both sets keeping their vertical order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::RationalMatrix;
use crate::partition::Partition;
use crate::tableau::{enumerate_all, Guard, ShapeIndex, Tableau};
use crate::tabloid::TabloidVector;

/// Which `k` values of `g^t_{c,k}` a relation set uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PolicyKind {
    /// Every `k` in `1..=l_{c+1}`.
    Full,
    /// `k = 1` only.
    Min,
    /// `k = l_{c+1}` only.
    Max,
    /// A single `k`, clamped to `l_{c+1}` on columns that are too short.
    Fixed(usize),
}

impl PolicyKind {
    /// The `k` values used between a column and a next column of length
    /// `next_len`, plus whether a `Fixed` value had to be clamped.
    pub fn ks_for(&self, next_len: usize) -> (Vec<usize>, bool) {
        match *self {
            PolicyKind::Full => ((1..=next_len).collect(), false),
            PolicyKind::Min => (vec![1], false),
            PolicyKind::Max => (vec![next_len], false),
            PolicyKind::Fixed(k) => (vec![k.min(next_len)], k > next_len),
        }
    }
}

impl fmt::Display for PolicyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolicyKind::Full => f.write_str("full"),
            PolicyKind::Min => f.write_str("min"),
            PolicyKind::Max => f.write_str("max"),
            PolicyKind::Fixed(k) => write!(f, "fixed:{k}"),
        }
    }
}

impl FromStr for PolicyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "full" => Ok(PolicyKind::Full),
            "min" => Ok(PolicyKind::Min),
            "max" => Ok(PolicyKind::Max),
            other => {
                let k = other
                    .strip_prefix("fixed:")
                    .ok_or_else(|| {
                        Error::Parse(format!(
                            "unknown policy {other:?}; expected full, min, max or fixed:<k>"
                        ))
                    })?
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad k in {other:?}: {e}")))?;
                if k == 0 {
                    return Err(Error::Parse("fixed:<k> needs k >= 1".into()));
                }
                Ok(PolicyKind::Fixed(k))
            }
        }
    }
}

impl TryFrom<String> for PolicyKind {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PolicyKind> for String {
    fn from(p: PolicyKind) -> Self {
        p.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarnirPolicy {
    pub kind: PolicyKind,
    /// Only use column-strict `t`.
    pub column_strict_only: bool,
}

impl GarnirPolicy {
    pub fn new(kind: PolicyKind) -> Self {
        Self {
            kind,
            column_strict_only: false,
        }
    }

    pub fn full() -> Self {
        Self::new(PolicyKind::Full)
    }

    pub fn min() -> Self {
        Self::new(PolicyKind::Min)
    }

    pub fn max() -> Self {
        Self::new(PolicyKind::Max)
    }

    pub fn fixed(k: usize) -> Self {
        Self::new(PolicyKind::Fixed(k))
    }

    pub fn column_strict(mut self) -> Self {
        self.column_strict_only = true;
        self
    }

    /// The `(c, k)` pairs admitted for a shape (`c` is 1-based), and
    /// whether any `Fixed` value was clamped.
    pub fn column_pairs(&self, shape: &Partition) -> (Vec<(usize, usize)>, bool) {
        let lengths = shape.column_lengths();
        let mut pairs = Vec::new();
        let mut clamped = false;
        for c in 1..lengths.len() {
            let (ks, cl) = self.kind.ks_for(lengths[c]);
            clamped |= cl;
            pairs.extend(ks.into_iter().map(|k| (c, k)));
        }
        (pairs, clamped)
    }
}

impl fmt::Display for GarnirPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.column_strict_only {
            f.write_str("+column-strict")?;
        }
        Ok(())
    }
}

fn check_column_and_k(t: &Tableau, c: usize, k: usize) -> Result<()> {
    let ncols = t.columns().len();
    if c == 0 || c >= ncols {
        return Err(Error::OutOfRange(format!(
            "column {c} must lie in 1..={} for shape ({})",
            ncols.saturating_sub(1),
            t.shape()
        )));
    }
    let next_len = t.column(c).len();
    if k == 0 || k > next_len {
        return Err(Error::OutOfRange(format!(
            "k = {k} must lie in 1..={next_len} (length of column {})",
            c + 1
        )));
    }
    Ok(())
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] != i + n - k) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// The unstraightened terms of `g^t_{c,k}` (`c` 1-based): `(+1, t)` first,
/// then `(-1, s)` for each choice of `k` cells of column `c`, choices in
/// lexicographic order of their positions.
pub fn garnir_terms_raw(t: &Tableau, c: usize, k: usize) -> Result<Vec<(i64, Tableau)>> {
    check_column_and_k(t, c, k)?;
    let left = t.column(c - 1);
    let right = t.column(c);
    let mut terms = vec![(1, t.clone())];
    for chosen in k_subsets(left.len(), k) {
        let mut new_left = left.to_vec();
        let mut new_right = right.to_vec();
        for (slot, &pos) in chosen.iter().enumerate() {
            new_right[slot] = left[pos];
            new_left[pos] = right[slot];
        }
        let mut columns = t.columns().to_vec();
        columns[c - 1] = new_left;
        columns[c] = new_right;
        terms.push((-1, Tableau::from_parts_unchecked(t.shape().clone(), columns)));
    }
    Ok(terms)
}

/// Straightened `g^t_{c,k}` as `(rank, coefficient)` pairs, unmerged.
pub(crate) fn garnir_integer_terms(
    index: &ShapeIndex,
    t: &Tableau,
    c: usize,
    k: usize,
) -> Result<Vec<(usize, i64)>> {
    Ok(garnir_terms_raw(t, c, k)?
        .into_iter()
        .map(|(sign, s)| {
            let st = s.straighten();
            (index.rank_columns(st.tableau.columns()), sign * st.sign)
        })
        .collect())
}

/// `g^t_{c,k}` in the column-strict basis of `M^λ` (`c` is 1-based).
pub fn garnir_element(t: &Tableau, c: usize, k: usize) -> Result<TabloidVector> {
    let index = ShapeIndex::new(t.shape());
    let terms = garnir_integer_terms(&index, t, c, k)?;
    TabloidVector::from_integer_terms(t.shape(), terms)
}

fn source_tableaux(shape: &Partition, policy: &GarnirPolicy, guard: &Guard) -> Result<Vec<Tableau>> {
    if policy.column_strict_only {
        crate::tableau::enumerate_column_strict_guarded(shape, guard)
    } else {
        enumerate_all(shape, guard)
    }
}

/// Sparse integer rows of every generator admitted by the policy, in the
/// order of [`generator_set`]. Duplicates are kept.
pub fn generator_rows(
    shape: &Partition,
    policy: &GarnirPolicy,
    guard: &Guard,
) -> Result<Vec<Vec<(usize, i64)>>> {
    let index = ShapeIndex::new(shape);
    let (pairs, _) = policy.column_pairs(shape);
    let mut rows = Vec::new();
    for t in source_tableaux(shape, policy, guard)? {
        for &(c, k) in &pairs {
            rows.push(garnir_integer_terms(&index, &t, c, k)?);
        }
    }
    Ok(rows)
}

/// Every `g^t_{c,k}` with `(c, k)` admitted by the policy, `t` ranging over
/// all tableaux of the shape (or only the column-strict ones). Ordered by
/// `t`, then `c`, then `k`.
pub fn generator_set(shape: &Partition, policy: &GarnirPolicy) -> Result<Vec<TabloidVector>> {
    generator_set_guarded(shape, policy, &Guard::default())
}

pub fn generator_set_guarded(
    shape: &Partition,
    policy: &GarnirPolicy,
    guard: &Guard,
) -> Result<Vec<TabloidVector>> {
    generator_rows(shape, policy, guard)?
        .into_iter()
        .map(|row| TabloidVector::from_integer_terms(shape, row))
        .collect()
}

/// One row per generator, one column per basis rank.
pub fn relation_matrix(shape: &Partition, gens: &[TabloidVector]) -> Result<RationalMatrix> {
    let dim = ShapeIndex::new(shape).dim();
    let mut rows = Vec::with_capacity(gens.len());
    for g in gens {
        if g.shape() != shape {
            return Err(Error::ShapeMismatch(format!(
                "generator of shape ({}) in a relation matrix for ({shape})",
                g.shape()
            )));
        }
        rows.push(g.to_dense());
    }
    RationalMatrix::from_rows(dim, rows)
}
