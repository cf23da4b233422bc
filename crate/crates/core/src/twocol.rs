//! The two-column space `V_{n,m} = M^{2^m 1^{n-m}}`, its Garnir operator
//! `φ(v_S) = g_S`, and the spectrum of `φ`.
//!
//! Basis vectors `v_S` are indexed by the `n`-subsets `S` of `[n+m]` (the
//! first column of the tableau `t_S`), ranked lexicographically. This is
//! the same order the tableau module uses for the shape `2^m 1^(n-m)`, and
//! [`SubsetIndex::check_tableau_alignment`] verifies it before any operator
//! is assembled.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::modular::{rank_mod_p, PRIMES};
use crate::exactla::{int, sparse_rank, RationalMatrix};
use crate::garnir::{garnir_element, k_subsets};
use crate::partition::{binomial, Partition};
use crate::perm::{sorting_sign, Permutation};
use crate::tableau::{ShapeIndex, Tableau};
use crate::tabloid::TabloidVector;

/// Largest `n + m` for which `φ` is assembled (`C(14, 7) = 3432`).
pub const MAX_TWO_COLUMN_SIZE: usize = 14;

/// Lexicographic ranking of the `n`-subsets of `[n+m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetIndex {
    n: usize,
    m: usize,
    dim: usize,
}

impl SubsetIndex {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if m > n {
            return Err(Error::OutOfRange(format!(
                "two-column spaces use m <= n, got n={n}, m={m}"
            )));
        }
        if n == 0 {
            return Err(Error::OutOfRange("two-column spaces need n >= 1".into()));
        }
        Ok(Self {
            n,
            m,
            dim: binomial(n + m, n) as usize,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn total(&self) -> usize {
        self.n + self.m
    }

    /// `C(n+m, n)`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn shape(&self) -> Partition {
        Partition::two_column(self.n, self.m).expect("m <= n checked in new")
    }

    /// Checks that `s` is an increasing `n`-subset of `[n+m]`.
    pub fn validate(&self, s: &[usize]) -> Result<()> {
        if s.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "subset {s:?} has {} elements, expected {}",
                s.len(),
                self.n
            )));
        }
        if s.iter().any(|&x| x == 0 || x > self.total()) || s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange(format!(
                "{s:?} is not an increasing subset of [{}]",
                self.total()
            )));
        }
        Ok(())
    }

    pub fn rank(&self, s: &[usize]) -> Result<usize> {
        self.validate(s)?;
        Ok(self.rank_unchecked(s))
    }

    fn rank_unchecked(&self, s: &[usize]) -> usize {
        let total = self.total();
        let k = self.n;
        let mut rank = 0usize;
        let mut prev = 0usize;
        for (i, &x) in s.iter().enumerate() {
            for v in prev + 1..x {
                rank += binomial(total - v, k - 1 - i) as usize;
            }
            prev = x;
        }
        rank
    }

    pub fn unrank(&self, rank: usize) -> Result<Vec<usize>> {
        if rank >= self.dim {
            return Err(Error::OutOfRange(format!(
                "subset rank {rank} >= {}",
                self.dim
            )));
        }
        let total = self.total();
        let k = self.n;
        let mut rest = rank;
        let mut out = Vec::with_capacity(k);
        let mut v = 1usize;
        for i in 0..k {
            loop {
                let count = binomial(total - v, k - 1 - i) as usize;
                if rest < count {
                    break;
                }
                rest -= count;
                v += 1;
            }
            out.push(v);
            v += 1;
        }
        Ok(out)
    }

    pub fn subsets(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.dim).map(move |r| self.unrank(r).expect("rank in range"))
    }

    pub fn complement(&self, s: &[usize]) -> Vec<usize> {
        (1..=self.total()).filter(|x| !s.contains(x)).collect()
    }

    /// The column-strict tableau whose first column is `S`.
    pub fn tableau(&self, s: &[usize]) -> Result<Tableau> {
        self.validate(s)?;
        let mut columns = vec![s.to_vec()];
        if self.m > 0 {
            columns.push(self.complement(s));
        }
        Tableau::with_shape(&self.shape(), columns)
    }

    pub fn basis_vector(&self, s: &[usize]) -> Result<TabloidVector> {
        Ok(TabloidVector::basis_vector(&self.tableau(s)?))
    }

    /// Confirms index by index that `rank(S)` equals the tableau rank of `t_S`.
    pub fn check_tableau_alignment(&self) -> Result<()> {
        let index = ShapeIndex::new(&self.shape());
        if index.dim() != self.dim {
            return Err(Error::Inconsistent(format!(
                "dim M = {} but C(n+m, n) = {}",
                index.dim(),
                self.dim
            )));
        }
        for r in 0..self.dim {
            let s = self.unrank(r)?;
            let t = self.tableau(&s)?;
            if t.rank()? != r || self.rank_unchecked(&s) != r {
                return Err(Error::Inconsistent(format!(
                    "subset {s:?} has rank {r} but tableau rank {}",
                    t.rank()?
                )));
            }
        }
        Ok(())
    }

    /// `σ · v_S = ε v_{σ(S)}`; returns `(rank of σ(S), ε)` for every basis index.
    pub fn signed_action(&self, sigma: &Permutation) -> Result<Vec<(usize, i64)>> {
        if sigma.degree() != self.total() {
            return Err(Error::InvalidPermutation(format!(
                "degree {} acting on V_({},{})",
                sigma.degree(),
                self.n,
                self.m
            )));
        }
        self.subsets()
            .map(|s| {
                let image: Vec<usize> = s.iter().map(|&x| sigma.apply(x)).collect();
                let comp_image: Vec<usize> =
                    self.complement(&s).iter().map(|&x| sigma.apply(x)).collect();
                let sign = sorting_sign(&image) * sorting_sign(&comp_image);
                let mut sorted = image;
                sorted.sort_unstable();
                Ok((self.rank_unchecked(&sorted), sign))
            })
            .collect()
    }
}

fn check_size(n: usize, m: usize) -> Result<SubsetIndex> {
    let idx = SubsetIndex::new(n, m)?;
    if n + m > MAX_TWO_COLUMN_SIZE {
        return Err(Error::Guard(format!(
            "n + m = {} exceeds the two-column limit {MAX_TWO_COLUMN_SIZE}",
            n + m
        )));
    }
    Ok(idx)
}

/// Nonzero coefficients of `g_S` by the closed form: `1` at `T = S`, and
/// `(-1)^(ΣD + C(p+1, 2) + 1)` at `T = D ∪ ([n+m] \ S)` for every
/// `p`-subset `D` of `S`, where `p = n - m`.
fn closed_form_terms(idx: &SubsetIndex, s: &[usize]) -> Vec<(usize, i64)> {
    let p = idx.n - idx.m;
    let comp = idx.complement(s);
    let base = binomial(p + 1, 2) as usize + 1;
    let mut terms = vec![(idx.rank_unchecked(s), 1)];
    for positions in k_subsets(idx.n, p) {
        let d: Vec<usize> = positions.iter().map(|&i| s[i]).collect();
        let exponent = d.iter().sum::<usize>() + base;
        let mut t: Vec<usize> = d.into_iter().chain(comp.iter().copied()).collect();
        t.sort_unstable();
        let sign = if exponent % 2 == 0 { 1 } else { -1 };
        terms.push((idx.rank_unchecked(&t), sign));
    }
    terms
}

/// `g_S` from its closed-form coefficients.
pub fn g_closed_form(s: &[usize], n: usize, m: usize) -> Result<TabloidVector> {
    let idx = SubsetIndex::new(n, m)?;
    if m == 0 {
        return Err(Error::OutOfRange("g_S needs a second column (m >= 1)".into()));
    }
    idx.validate(s)?;
    TabloidVector::from_integer_terms(&idx.shape(), closed_form_terms(&idx, s))
}

/// Whether the closed form of `g_S` equals the straightened Garnir relation
/// `g^{t_S}_{1,m}` term by term.
pub fn cross_check_gs(s: &[usize], n: usize, m: usize) -> Result<bool> {
    let idx = SubsetIndex::new(n, m)?;
    let closed = g_closed_form(s, n, m)?;
    let garnir = garnir_element(&idx.tableau(s)?, 1, m)?;
    Ok(closed == garnir)
}

/// Column `j` holds the coefficients of `g_{S_j}`.
#[derive(Clone, Debug)]
pub struct SparseOperator {
    dim: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseOperator {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn columns(&self) -> &[Vec<(usize, i64)>] {
        &self.columns
    }

    pub fn to_dense(&self) -> Result<RationalMatrix> {
        let mut m = RationalMatrix::zeros(self.dim, self.dim)?;
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, m.get(i, j) + int(v));
            }
        }
        Ok(m)
    }

    fn shifted_columns(&self, w: i64) -> Vec<Vec<(usize, i64)>> {
        self.columns
            .iter()
            .enumerate()
            .map(|(j, col)| {
                let mut c = col.clone();
                c.push((j, -w));
                c
            })
            .collect()
    }

    /// `rank(φ - w I)`, computed exactly on the columns.
    pub fn rank_shifted(&self, w: i64) -> usize {
        sparse_rank(self.dim, &self.shifted_columns(w))
    }

    pub fn nullity_at(&self, w: i64) -> usize {
        self.dim - self.rank_shifted(w)
    }

    /// `nullity(φ - w I)` over `F_p`; never below the nullity over `Q`.
    pub fn nullity_mod_p(&self, w: i64, p: u64) -> usize {
        self.dim - rank_mod_p(self.dim, &self.shifted_columns(w), p)
    }

    /// Exact nullities of `φ - w I` for distinct `w`.
    ///
    /// If `Π (φ - w I) = 0` then `φ` is diagonalisable with spectrum inside
    /// `roots`, so the nullities over `Q` sum to `dim`. Each is bounded above
    /// by its value mod `p`; when those bounds also sum to `dim` they are
    /// all attained. Otherwise this falls back to exact elimination.
    pub fn certified_nullities(&self, roots: &[i64]) -> Vec<usize> {
        if self.annihilated_by(roots) {
            for p in PRIMES {
                let bounds: Vec<usize> = roots.iter().map(|&w| self.nullity_mod_p(w, p)).collect();
                if bounds.iter().sum::<usize>() == self.dim {
                    return bounds;
                }
            }
        }
        roots.iter().map(|&w| self.nullity_at(w)).collect()
    }

    /// `(φ - w I) x`.
    fn apply_shifted(&self, x: &[BigInt], w: i64) -> Vec<BigInt> {
        let mut y: Vec<BigInt> = x.iter().map(|v| -(v * w)).collect();
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for &(i, v) in &self.columns[j] {
                y[i] += xj * v;
            }
        }
        y
    }

    /// `Π_w (φ - w I) e_j` for the given roots.
    fn apply_product(&self, j: usize, roots: &[i64]) -> Vec<BigInt> {
        let mut x = vec![BigInt::zero(); self.dim];
        x[j] = BigInt::from(1);
        for &w in roots {
            x = self.apply_shifted(&x, w);
        }
        x
    }

    /// `apply_product` in checked `i64`; `None` on overflow.
    fn apply_product_small(&self, j: usize, roots: &[i64]) -> Option<Vec<i64>> {
        let mut x = vec![0i64; self.dim];
        x[j] = 1;
        for &w in roots {
            let mut y = x.iter().map(|&v| v.checked_mul(w)?.checked_neg()).collect::<Option<Vec<i64>>>()?;
            for (j, &xj) in x.iter().enumerate() {
                if xj == 0 {
                    continue;
                }
                for &(i, v) in &self.columns[j] {
                    y[i] = y[i].checked_add(xj.checked_mul(v)?)?;
                }
            }
            x = y;
        }
        Some(x)
    }

    /// Whether `Π_w (φ - w I) = 0`.
    pub fn annihilated_by(&self, roots: &[i64]) -> bool {
        (0..self.dim).all(|j| match self.apply_product_small(j, roots) {
            Some(x) => x.iter().all(|&v| v == 0),
            None => self.apply_product(j, roots).iter().all(Zero::is_zero),
        })
    }
}

/// `φ` on `V_{n,m}` in sparse column form.
pub fn phi_operator(n: usize, m: usize) -> Result<SparseOperator> {
    let idx = check_size(n, m)?;
    if m == 0 {
        return Err(Error::OutOfRange("φ needs a second column (m >= 1)".into()));
    }
    idx.check_tableau_alignment()?;
    let columns = idx
        .subsets()
        .map(|s| closed_form_terms(&idx, &s))
        .collect();
    Ok(SparseOperator {
        dim: idx.dim(),
        columns,
    })
}

/// `φ` as a dense `C(n+m, n)` square matrix.
pub fn phi_matrix(n: usize, m: usize) -> Result<RationalMatrix> {
    phi_operator(n, m)?.to_dense()
}

/// `w_i = 1 - C(n-i, m-i) (-1)^(m-i)`.
pub fn eigenvalue_w(n: usize, m: usize, i: usize) -> Result<i64> {
    if m > n || i > m {
        return Err(Error::OutOfRange(format!(
            "eigenvalue index needs 0 <= i <= m <= n, got n={n}, m={m}, i={i}"
        )));
    }
    let c = binomial(n - i, m - i) as i64;
    let sign = if (m - i) % 2 == 0 { 1 } else { -1 };
    Ok(1 - c * sign)
}

/// The shape `2^i 1^(total - 2i)` of the `i`-th eigenspace.
pub fn level_shape(n: usize, m: usize, i: usize) -> Partition {
    Partition::two_column(n + m - i, i).expect("i <= m <= n")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumLevel {
    pub i: usize,
    pub eigenvalue: i64,
    pub shape: Partition,
    /// `dim S^{2^i 1^(n+m-2i)}`.
    pub expected_dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenspace {
    pub eigenvalue: i64,
    /// Levels `i` with `w_i` equal to this eigenvalue.
    pub levels: Vec<usize>,
    /// Sum of the expected dimensions of those levels.
    pub expected_dim: u64,
    /// `nullity(φ - w I)`.
    pub computed_mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub n: usize,
    pub m: usize,
    pub dim: u64,
    pub levels: Vec<SpectrumLevel>,
    /// One entry per distinct eigenvalue, in order of first appearance.
    pub eigenspaces: Vec<Eigenspace>,
}

impl Spectrum {
    pub fn distinct_eigenvalues(&self) -> Vec<i64> {
        self.eigenspaces.iter().map(|e| e.eigenvalue).collect()
    }

    /// Every way the computed spectrum departs from the predicted one.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let total: u64 = self.eigenspaces.iter().map(|e| e.computed_mult).sum();
        if total != self.dim {
            out.push(format!("multiplicities sum to {total}, not dim {}", self.dim));
        }
        if self.m < self.n && self.eigenspaces.len() != self.m + 1 {
            out.push(format!(
                "{} distinct eigenvalues, expected m + 1 = {}",
                self.eigenspaces.len(),
                self.m + 1
            ));
        }
        if self.m == self.n {
            let mut values = self.distinct_eigenvalues();
            values.sort_unstable();
            let want: Vec<i64> = if self.n == 0 { vec![] } else { vec![0, 2] };
            if values != want {
                out.push(format!("eigenvalues {values:?}, expected {want:?}"));
            }
        }
        for e in &self.eigenspaces {
            if e.computed_mult != e.expected_dim {
                out.push(format!(
                    "eigenvalue {}: multiplicity {} but expected {}",
                    e.eigenvalue, e.computed_mult, e.expected_dim
                ));
            }
        }
        out
    }

    pub fn is_consistent(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Predicted eigenvalues with their multiplicities measured as nullities.
pub fn spectrum(n: usize, m: usize) -> Result<Spectrum> {
    let phi = phi_operator(n, m)?;
    spectrum_of(&phi, n, m)
}

pub(crate) fn spectrum_of(phi: &SparseOperator, n: usize, m: usize) -> Result<Spectrum> {
    let levels: Vec<SpectrumLevel> = (0..=m)
        .map(|i| {
            let shape = level_shape(n, m, i);
            Ok(SpectrumLevel {
                i,
                eigenvalue: eigenvalue_w(n, m, i)?,
                expected_dim: shape.hook_dim(),
                shape,
            })
        })
        .collect::<Result<_>>()?;
    let mut eigenspaces: Vec<Eigenspace> = Vec::new();
    for level in &levels {
        match eigenspaces.iter_mut().find(|e| e.eigenvalue == level.eigenvalue) {
            Some(e) => {
                e.levels.push(level.i);
                e.expected_dim += level.expected_dim;
            }
            None => eigenspaces.push(Eigenspace {
                eigenvalue: level.eigenvalue,
                levels: vec![level.i],
                expected_dim: level.expected_dim,
                computed_mult: 0,
            }),
        }
    }
    let roots: Vec<i64> = eigenspaces.iter().map(|e| e.eigenvalue).collect();
    for (e, k) in eigenspaces.iter_mut().zip(phi.certified_nullities(&roots)) {
        e.computed_mult = k as u64;
    }
    Ok(Spectrum {
        n,
        m,
        dim: phi.dim() as u64,
        levels,
        eigenspaces,
    })
}

/// Distinct eigenvalues `w_0, ..., w_m` in order of first appearance.
pub fn distinct_eigenvalues(n: usize, m: usize) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..=m {
        let w = eigenvalue_w(n, m, i)?;
        if !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Spectral projector onto the `w_i`-eigenspace by Lagrange interpolation
/// over the distinct eigenvalues:
/// `P = Π_{w ≠ w_i} (φ - w I) / (w_i - w)`.
pub fn projector(n: usize, m: usize, i: usize) -> Result<RationalMatrix> {
    let phi = phi_operator(n, m)?;
    projector_of(&phi, n, m, i)
}

pub(crate) fn projector_of(phi: &SparseOperator, n: usize, m: usize, i: usize) -> Result<RationalMatrix> {
    let target = eigenvalue_w(n, m, i)?;
    let others: Vec<i64> = distinct_eigenvalues(n, m)?
        .into_iter()
        .filter(|&w| w != target)
        .collect();
    let denom: BigInt = others.iter().map(|&w| BigInt::from(target - w)).product();
    let dim = phi.dim();
    let mut p = RationalMatrix::zeros(dim, dim)?;
    for j in 0..dim {
        let col = phi.apply_product(j, &others);
        for (row, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                p.set(row, j, BigRational::new(v, denom.clone()));
            }
        }
    }
    Ok(p)
}

/// `trace(A_σ P)` where `A_σ` is the signed permutation matrix of `σ` on `V_{n,m}`.
pub fn trace_with_action(idx: &SubsetIndex, p: &RationalMatrix, sigma: &Permutation) -> Result<BigRational> {
    // (A P)_{SS} = Σ_T A_{S,T} P_{T,S}; A_{σ(T),T} = ε_T, so the trace is Σ_T ε_T P_{T,σ(T)}.
    let action = idx.signed_action(sigma)?;
    let mut acc = BigRational::zero();
    for (t, &(image, sign)) in action.iter().enumerate() {
        let entry = p.get(t, image);
        if !entry.is_zero() {
            if sign > 0 {
                acc += entry;
            } else {
                acc -= entry;
            }
        }
    }
    Ok(acc)
}

/// Whether `φ(σ v_S) = σ φ(v_S)`.
pub fn equivariant_at(n: usize, m: usize, sigma: &Permutation, s: &[usize]) -> Result<bool> {
    let idx = SubsetIndex::new(n, m)?;
    let v = idx.basis_vector(s)?;
    let moved = v.act(sigma)?;
    // σ v_S = ε v_{σ(S)}; apply φ linearly.
    let mut lhs = TabloidVector::zero(&idx.shape());
    for (rank, c) in moved.terms() {
        let g = g_closed_form(&idx.unrank(rank)?, n, m)?;
        lhs = lhs.add(&g.scale(c))?;
    }
    let rhs = g_closed_form(s, n, m)?.act(sigma)?;
    Ok(lhs == rhs)
}

pub(crate) fn rational_to_i64(x: &BigRational) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}
