//! Characters of the symmetric group: class sizes, Murnaghan–Nakayama
//! values, the character of `V_{n,m}` and of the eigenspaces of `φ`, and
//! decomposition of class functions into irreducibles.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_of, Partition};
use crate::perm::Permutation;
use crate::twocol::{phi_operator, projector_of, rational_to_i64, trace_with_action, SubsetIndex};

/// `z_μ = Π_k k^{a_k} a_k!` where `a_k` counts the parts equal to `k`.
pub fn centralizer_order(mu: &Partition) -> u128 {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(k, a)| (k as u128).pow(a as u32) * factorial(a))
        .product()
}

/// Number of permutations of cycle type `μ`.
pub fn class_size(mu: &Partition) -> u128 {
    factorial(mu.size()) / centralizer_order(mu)
}

thread_local! {
    static MN_CACHE: RefCell<HashMap<(Vec<usize>, Vec<usize>), i64>> = RefCell::new(HashMap::new());
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule, removing a border strip of
/// length `μ_1` at each step. Results are memoised per thread.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::ShapeMismatch(format!(
            "χ^({lambda}) evaluated on a class of S_{}",
            mu.size()
        )));
    }
    Ok(mn_rec(lambda.parts(), mu.parts()))
}

fn mn_rec(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = MN_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    let l = lambda.len();
    // beta numbers, strictly decreasing
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&shape, rest);
    }
    MN_CACHE.with(|c| c.borrow_mut().insert(key, total));
    total
}

/// A rational-valued function on the conjugacy classes of `S_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    degree: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    /// Evaluates `f` on every class of `S_degree`.
    pub fn from_fn(degree: usize, mut f: impl FnMut(&Partition) -> Result<BigRational>) -> Result<Self> {
        let values = partitions_of(degree)
            .into_iter()
            .map(|mu| {
                let v = f(&mu)?;
                Ok((mu, v))
            })
            .collect::<Result<_>>()?;
        Ok(Self { degree, values })
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        Self::from_fn(lambda.size(), |mu| {
            Ok(BigRational::from_integer(BigInt::from(mn_character(lambda, mu)?)))
        })
        .expect("sizes agree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, mu: &Partition) -> Option<&BigRational> {
        self.values.get(mu)
    }

    pub fn values(&self) -> &BTreeMap<Partition, BigRational> {
        &self.values
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::ShapeMismatch(format!(
                "class functions of S_{} and S_{}",
                self.degree, other.degree
            )));
        }
        Ok(Self {
            degree: self.degree,
            values: self
                .values
                .iter()
                .map(|(mu, v)| (mu.clone(), v + &other.values[mu]))
                .collect(),
        })
    }

    /// `(1/N!) Σ_μ |C_μ| f(μ) g(μ)`; characters are real, so no conjugation.
    pub fn inner_product(&self, other: &Self) -> Result<BigRational> {
        if self.degree != other.degree {
            return Err(Error::ShapeMismatch(format!(
                "class functions of S_{} and S_{}",
                self.degree, other.degree
            )));
        }
        let mut acc = BigRational::zero();
        for (mu, v) in &self.values {
            let size = BigRational::from_integer(BigInt::from(class_size(mu)));
            acc += size * v * &other.values[mu];
        }
        Ok(acc / BigRational::from_integer(BigInt::from(factorial(self.degree))))
    }

    pub fn is_integer_valued(&self) -> bool {
        self.values.values().all(|v| v.is_integer())
    }
}

/// Multiplicity of every irreducible in `f`; irreducibles with multiplicity
/// zero are omitted. Fails unless every multiplicity is a non-negative
/// integer.
pub fn decompose(f: &ClassFunction) -> Result<BTreeMap<Partition, u64>> {
    let mut out = BTreeMap::new();
    for lambda in partitions_of(f.degree()) {
        let mult = f.inner_product(&ClassFunction::irreducible(&lambda))?;
        if !mult.is_integer() || mult.is_negative() {
            return Err(Error::NotAModuleCharacter(format!(
                "multiplicity of ({lambda}) is {mult}"
            )));
        }
        let mult = mult.to_integer().to_u64().expect("multiplicity fits u64");
        if mult > 0 {
            out.insert(lambda, mult);
        }
    }
    Ok(out)
}

/// Trace of the class representative on `V_{n,m}`, read off the straightened
/// action on each basis tabloid.
pub fn v_character_by_trace(n: usize, m: usize, mu: &Partition) -> Result<i64> {
    let idx = SubsetIndex::new(n, m)?;
    check_degree(&idx, mu)?;
    let sigma = Permutation::class_representative(mu);
    let mut trace = BigRational::zero();
    for (r, s) in idx.subsets().enumerate() {
        trace += idx.basis_vector(&s)?.act(&sigma)?.coefficient(r);
    }
    rational_to_i64(&trace)
        .ok_or_else(|| Error::Inconsistent(format!("non-integral trace {trace} on ({mu})")))
}

/// `sgn(σ) · #{S : σ(S) = S}` for the class representative.
pub fn v_character_by_fixed_subsets(n: usize, m: usize, mu: &Partition) -> Result<i64> {
    let idx = SubsetIndex::new(n, m)?;
    check_degree(&idx, mu)?;
    let sigma = Permutation::class_representative(mu);
    let fixed = idx
        .subsets()
        .filter(|s| {
            let mut image: Vec<usize> = s.iter().map(|&x| sigma.apply(x)).collect();
            image.sort_unstable();
            &image == s
        })
        .count() as i64;
    Ok(sigma.sign() * fixed)
}

/// The character of `V_{n,m}` on the class `μ`, computed both ways; an
/// error if the two disagree.
pub fn v_character(n: usize, m: usize, mu: &Partition) -> Result<i64> {
    let a = v_character_by_trace(n, m, mu)?;
    let b = v_character_by_fixed_subsets(n, m, mu)?;
    if a != b {
        return Err(Error::Inconsistent(format!(
            "V_({n},{m}) character on ({mu}): trace {a} but fixed-subset count {b}"
        )));
    }
    Ok(a)
}

pub fn v_class_function(n: usize, m: usize) -> Result<ClassFunction> {
    ClassFunction::from_fn(n + m, |mu| Ok(BigRational::from_integer(BigInt::from(v_character(n, m, mu)?))))
}

fn check_degree(idx: &SubsetIndex, mu: &Partition) -> Result<()> {
    if mu.size() != idx.total() {
        return Err(Error::ShapeMismatch(format!(
            "class ({mu}) is not a class of S_{}",
            idx.total()
        )));
    }
    Ok(())
}

/// Character of the `w_i`-eigenspace of `φ`: `μ ↦ trace(σ_μ P_i)`.
pub fn eigenspace_class_function(n: usize, m: usize, i: usize) -> Result<ClassFunction> {
    let idx = SubsetIndex::new(n, m)?;
    let phi = phi_operator(n, m)?;
    let p = projector_of(&phi, n, m, i)?;
    ClassFunction::from_fn(n + m, |mu| {
        trace_with_action(&idx, &p, &Permutation::class_representative(mu))
    })
}

pub fn eigenspace_character(n: usize, m: usize, i: usize, mu: &Partition) -> Result<BigRational> {
    let idx = SubsetIndex::new(n, m)?;
    check_degree(&idx, mu)?;
    let phi = phi_operator(n, m)?;
    let p = projector_of(&phi, n, m, i)?;
    trace_with_action(&idx, &p, &Permutation::class_representative(mu))
}
