//! Exact linear algebra over the rationals.
//!
//! [`RationalMatrix`] is a dense row-major matrix of `BigRational`s. Ranks
//! are computed without fractions: every row is scaled to a primitive
//! integer row and fed to the sparse echelon engine in [`echelon`]. The
//! classic dense Bareiss elimination is kept as an independent route
//! ([`RationalMatrix::rank_bareiss`]) and the tests hold the two against
//! each other.

pub mod echelon;
pub mod modular;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use echelon::{sparse_echelon_pivots, sparse_rank};

/// Largest number of rows or columns a dense matrix may have.
pub const MAX_DENSE_DIM: usize = 5000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

fn check_dims(rows: usize, cols: usize) -> Result<()> {
    if rows > MAX_DENSE_DIM || cols > MAX_DENSE_DIM {
        return Err(Error::Guard(format!(
            "dense {rows}x{cols} matrix exceeds the {MAX_DENSE_DIM}x{MAX_DENSE_DIM} limit"
        )));
    }
    Ok(())
}

pub(crate) fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        check_dims(rows, cols)?;
        Ok(Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        Ok(m)
    }

    /// `cols` is needed so that a matrix with no rows still has a width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        check_dims(rows.len(), cols)?;
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Self {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_integer_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(),
        )
    }

    /// Builds a matrix from sparse integer rows.
    pub fn from_sparse_rows(cols: usize, rows: &[Vec<(usize, i64)>]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols)?;
        for (i, row) in rows.iter().enumerate() {
            for &(j, v) in row {
                if j >= cols {
                    return Err(Error::OutOfRange(format!("column {j} >= {cols}")));
                }
                m.data[i * cols + j] += int(v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn matadd(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} plus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scalar_mul(&self, factor: &BigRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    /// `self - w I`.
    pub fn shift(&self, w: &BigRational) -> Result<Self> {
        self.require_square("shift")?;
        let mut out = self.clone();
        for i in 0..self.rows {
            out.data[i * self.cols + i] -= w;
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<BigRational> {
        self.require_square("trace")?;
        Ok((0..self.rows).fold(BigRational::zero(), |acc, i| acc + self.get(i, i)))
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<(usize, BigInt)>> = self
            .integer_rows()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let fits_i64: Option<Vec<Vec<(usize, i64)>>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(c, v)| i64::try_from(v).ok().map(|v| (*c, v)))
                    .collect()
            })
            .collect();
        match fits_i64 {
            Some(small) => sparse_rank(self.cols, &small),
            None => echelon::sparse_rank_bigint(self.cols, &rows),
        }
    }

    /// Exact rank by dense Bareiss elimination. Pivots are taken as the
    /// first nonzero entry in column order, scanning rows top-down.
    pub fn rank_bareiss(&self) -> usize {
        bareiss(self.integer_rows(), self.cols).0
    }

    /// Rank by ordinary Gaussian elimination over `Q`.
    pub fn rank_rational(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let delta = &f * m.get(r, j);
                    if !delta.is_zero() {
                        m.data[i * m.cols + j] -= delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// A basis of the right null space `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&free| !is_pivot[free])
            .map(|free| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[free] = BigRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, free).clone();
                }
                v
            })
            .collect()
    }

    /// Dimension of the `w`-eigenspace: `cols - rank(M - w I)`.
    pub fn nullity_at(&self, w: &BigRational) -> Result<usize> {
        let shifted = self.shift(w)?;
        Ok(self.cols - shifted.rank())
    }

    /// Plain-text dump: `"rows cols"` then one line per row of `p/q` entries.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let words: Vec<String> = self
                .row(i)
                .iter()
                .map(|x| format!("{}/{}", x.numer(), x.denom()))
                .collect();
            s.push_str(&words.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for RationalMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split_whitespace();
        let mut dim = |what: &str| -> Result<usize> {
            tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad {what}: {e}")))
        };
        let rows = dim("row count")?;
        let cols = dim("column count")?;
        let mut m = Self::zeros(rows, cols)?;
        let entries: Vec<&str> = tokens.collect();
        if entries.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {} entries, found {}",
                rows * cols,
                entries.len()
            )));
        }
        for (slot, tok) in m.data.iter_mut().zip(entries) {
            *slot = tok
                .parse::<BigRational>()
                .map_err(|e| Error::Parse(format!("bad entry {tok:?}: {e}")))?;
        }
        Ok(m)
    }
}

/// Fraction-free Gaussian elimination. Returns the rank and the final
/// integer matrix; after eliminating with pivot `k` every remaining entry is
/// a `(k+1)`-minor of the input, so each division by the previous pivot is
/// exact.
pub(crate) fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> (usize, Vec<Vec<BigInt>>) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in bottom.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let num = &pivot_row[c] * &row[j] - &f * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = top[r][c].clone();
        r += 1;
    }
    (r, a)
}
