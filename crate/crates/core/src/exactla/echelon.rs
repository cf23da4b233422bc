//! Incremental fraction-free row echelon form over the integers.
//!
//! Rows are sparse, kept primitive (content 1, positive leading entry) and
//! pivoted on their leading column. Elimination of `r` against pivot row `p`
//! with leading entries `a` and `b` is `r <- (b/g) r - (a/g) p` where
//! `g = gcd(a, b)`, so no fractions ever appear and the rank over `Q` is
//! the number of pivot rows. Arithmetic starts in `i64` with overflow
//! checks and transparently restarts in `BigInt` if any product overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer coefficient type for the echelon engine.
pub(crate) trait Coeff: Clone + PartialEq + Sized {
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Coeff for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    // i64::MIN is treated as overflow so that gcd and negation stay total.
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other).filter(|&v| v != i64::MIN)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other).filter(|&v| v != i64::MIN)
    }
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
}

impl Coeff for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

type SparseRow<C> = Vec<(usize, C)>;

struct Overflow;

pub(crate) struct Echelon<C> {
    // pivot_of[col] = index into `rows` of the pivot row leading at `col`
    pivot_of: Vec<Option<usize>>,
    rows: Vec<SparseRow<C>>,
}

impl<C: Coeff> Echelon<C> {
    pub(crate) fn new(ncols: usize) -> Self {
        Self {
            pivot_of: vec![None; ncols],
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        cols.sort_unstable();
        cols
    }

    /// Reduces `row` (sorted by column, no zeros) and keeps it if it is
    /// independent of the rows seen so far. Returns whether the rank grew.
    fn insert(&mut self, mut row: SparseRow<C>) -> Result<bool, Overflow> {
        loop {
            let Some((lead, _)) = row.first() else {
                return Ok(false);
            };
            match self.pivot_of[*lead] {
                None => {
                    normalize(&mut row)?;
                    self.pivot_of[row[0].0] = Some(self.rows.len());
                    self.rows.push(row);
                    return Ok(true);
                }
                Some(p) => {
                    row = eliminate(&row, &self.rows[p])?;
                    normalize(&mut row)?;
                }
            }
        }
    }
}

/// `(b/g) r - (a/g) p` where `a`, `b` are the leading entries of `r`, `p`.
fn eliminate<C: Coeff>(r: &SparseRow<C>, p: &SparseRow<C>) -> Result<SparseRow<C>, Overflow> {
    let a = &r[0].1;
    let b = &p[0].1;
    let g = a.gcd(b);
    let fr = b.div_exact(&g);
    let fp = a.div_exact(&g);
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < p.len() {
        let take_r = j >= p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i >= r.len() || (j < p.len() && p[j].0 < r[i].0);
        if take_r {
            let v = r[i].1.checked_mul(&fr).ok_or(Overflow)?;
            out.push((r[i].0, v));
            i += 1;
        } else if take_p {
            let v = p[j].1.checked_mul(&fp).ok_or(Overflow)?.checked_neg().ok_or(Overflow)?;
            out.push((p[j].0, v));
            j += 1;
        } else {
            let x = r[i].1.checked_mul(&fr).ok_or(Overflow)?;
            let y = p[j].1.checked_mul(&fp).ok_or(Overflow)?;
            let v = x.checked_sub(&y).ok_or(Overflow)?;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Ok(out)
}

/// Divides by the content and makes the leading entry positive.
fn normalize<C: Coeff>(row: &mut SparseRow<C>) -> Result<(), Overflow> {
    if row.is_empty() {
        return Ok(());
    }
    let mut g = row[0].1.clone();
    for (_, c) in row.iter().skip(1) {
        if g.is_unit() {
            break;
        }
        g = g.gcd(c);
    }
    if g.is_negative() {
        g = g.checked_neg().ok_or(Overflow)?;
    }
    if !g.is_unit() {
        for (_, c) in row.iter_mut() {
            *c = c.div_exact(&g);
        }
    }
    if row[0].1.is_negative() {
        for (_, c) in row.iter_mut() {
            *c = c.checked_neg().ok_or(Overflow)?;
        }
    }
    Ok(())
}

fn clean_row(row: &[(usize, i64)]) -> SparseRow<i64> {
    let mut sorted: Vec<(usize, i64)> = row.to_vec();
    sorted.sort_unstable_by_key(|&(c, _)| c);
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(sorted.len());
    for (c, v) in sorted {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

/// Rank over `Q` of the integer matrix whose rows are given sparsely as
/// `(column, value)` pairs. Repeated columns within a row are summed.
pub fn sparse_rank(ncols: usize, rows: &[Vec<(usize, i64)>]) -> usize {
    sparse_echelon_pivots(ncols, rows).len()
}

/// Pivot columns of the echelon form, increasing.
pub fn sparse_echelon_pivots(ncols: usize, rows: &[Vec<(usize, i64)>]) -> Vec<usize> {
    let mut small: Echelon<i64> = Echelon::new(ncols);
    let mut overflowed = false;
    for row in rows {
        let row = clean_row(row);
        assert!(row.iter().all(|&(c, _)| c < ncols), "column index out of range");
        if small.insert(row).is_err() {
            overflowed = true;
            break;
        }
    }
    if !overflowed {
        return small.pivot_columns();
    }
    let mut big: Echelon<BigInt> = Echelon::new(ncols);
    for row in rows {
        let row = clean_row(row)
            .into_iter()
            .map(|(c, v)| (c, BigInt::from(v)))
            .collect();
        if big.insert(row).is_err() {
            unreachable!("BigInt arithmetic cannot overflow");
        }
    }
    big.pivot_columns()
}

/// Same as [`sparse_rank`] but always in `BigInt` arithmetic.
pub(crate) fn sparse_rank_bigint(ncols: usize, rows: &[Vec<(usize, BigInt)>]) -> usize {
    let mut big: Echelon<BigInt> = Echelon::new(ncols);
    for row in rows {
        let mut row: Vec<(usize, BigInt)> =
            row.iter().filter(|(_, v)| !Zero::is_zero(v)).cloned().collect();
        row.sort_by_key(|(c, _)| *c);
        if big.insert(row).is_err() {
            unreachable!("BigInt arithmetic cannot overflow");
        }
    }
    big.rank()
}
