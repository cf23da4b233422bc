//! Elements of the column-tabloid space `M^λ`: sparse exact linear
//! combinations of column-strict tableaux, with the symmetric group acting
//! by relabelling entries.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::tableau::{ShapeIndex, Tableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabloidVector {
    shape: Partition,
    // basis rank -> nonzero coefficient
    coeffs: BTreeMap<usize, BigRational>,
}

impl TabloidVector {
    pub fn zero(shape: &Partition) -> Self {
        Self {
            shape: shape.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The class of `t` written in the column-strict basis.
    pub fn basis_vector(t: &Tableau) -> Self {
        let s = t.straighten();
        let rank = ShapeIndex::new(t.shape()).rank_columns(s.tableau.columns());
        let mut v = Self::zero(t.shape());
        v.coeffs.insert(rank, BigRational::from_integer(BigInt::from(s.sign)));
        v
    }

    /// Builds `Σ c_r · basis[r]` from integer coefficients, merging repeated ranks.
    pub fn from_integer_terms(
        shape: &Partition,
        terms: impl IntoIterator<Item = (usize, i64)>,
    ) -> Result<Self> {
        let dim = ShapeIndex::new(shape).dim();
        let mut v = Self::zero(shape);
        for (rank, c) in terms {
            if rank >= dim {
                return Err(Error::OutOfRange(format!(
                    "basis rank {rank} >= dim {dim} for shape ({shape})"
                )));
            }
            v.add_term(rank, BigRational::from_integer(BigInt::from(c)));
        }
        Ok(v)
    }

    fn add_term(&mut self, rank: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(rank).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&rank);
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Nonzero terms in increasing rank order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(&r, c)| (r, c))
    }

    /// Coefficient of the basis element with the given rank.
    pub fn coefficient(&self, rank: usize) -> BigRational {
        self.coeffs.get(&rank).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the class of a column-strict tableau.
    pub fn coefficient_of(&self, t: &Tableau) -> Result<BigRational> {
        if t.shape() != &self.shape {
            return Err(shape_mismatch(&self.shape, t.shape()));
        }
        Ok(self.coefficient(t.rank()?))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape != other.shape {
            return Err(shape_mismatch(&self.shape, &other.shape));
        }
        let mut out = self.clone();
        for (&r, c) in &other.coeffs {
            out.add_term(r, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.shape);
        }
        Self {
            shape: self.shape.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(&r, c)| (r, c * factor))
                .collect(),
        }
    }

    /// `σ · v`: relabel every basis tableau by `σ` and straighten.
    pub fn act(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != self.shape.size() {
            return Err(Error::InvalidPermutation(format!(
                "permutation of degree {} acting on M^({})",
                sigma.degree(),
                self.shape
            )));
        }
        let index = ShapeIndex::new(&self.shape);
        let mut out = Self::zero(&self.shape);
        for (&r, c) in &self.coeffs {
            let image = index.unrank(r)?.apply_permutation(sigma)?.straighten();
            let rank = index.rank_columns(image.tableau.columns());
            let c = if image.sign < 0 { -c.clone() } else { c.clone() };
            out.add_term(rank, c);
        }
        Ok(out)
    }

    /// Dense coefficient row of length `dim M^λ`.
    pub fn to_dense(&self) -> Vec<BigRational> {
        let dim = ShapeIndex::new(&self.shape).dim();
        let mut row = vec![BigRational::zero(); dim];
        for (&r, c) in &self.coeffs {
            row[r] = c.clone();
        }
        row
    }
}

fn shape_mismatch(a: &Partition, b: &Partition) -> Error {
    Error::ShapeMismatch(format!("({a}) vs ({b})"))
}

impl fmt::Display for TabloidVector {
    /// Renders as a signed sum such as `[1 2/3 4/5] - 2*[1 3/2 4/5]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let index = ShapeIndex::new(&self.shape);
        for (i, (&r, c)) in self.coeffs.iter().enumerate() {
            let t = index.unrank(r).map_err(|_| fmt::Error)?;
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "[{t}]")?;
        }
        Ok(())
    }
}
