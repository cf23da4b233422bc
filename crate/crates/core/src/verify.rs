//! End-to-end audits: presentation verdicts per shape, exhaustive scans
//! over all shapes of a given size, and pass/fail suites for the worked
//! examples and the two-column spectrum.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chars::{decompose, eigenspace_class_function, mn_character, v_character, ClassFunction};
use crate::error::{Error, Result};
use crate::exactla::sparse_rank;
use crate::garnir::{garnir_element, garnir_terms_raw, generator_rows, GarnirPolicy, PolicyKind};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::tableau::{Guard, ShapeIndex, Tableau};
use crate::tabloid::TabloidVector;
use crate::twocol::{cross_check_gs, equivariant_at, level_shape, phi_operator, spectrum_of, SubsetIndex};

/// Largest `n` a scan accepts by default.
pub const MAX_SCAN_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationVerdict {
    pub shape: Partition,
    pub policy: GarnirPolicy,
    pub dim_m: u64,
    pub dim_s: u64,
    pub rank_relations: u64,
    /// `dim_m - rank_relations == dim_s`.
    pub isomorphic: bool,
    pub condition_paper: bool,
    pub condition_columns: bool,
    /// A `Fixed(k)` policy had to shrink `k` on some column.
    pub fixed_k_clamped: bool,
}

pub fn check_presentation(shape: &Partition, policy: &GarnirPolicy) -> Result<PresentationVerdict> {
    check_presentation_guarded(shape, policy, &Guard::default())
}

pub fn check_presentation_guarded(
    shape: &Partition,
    policy: &GarnirPolicy,
    guard: &Guard,
) -> Result<PresentationVerdict> {
    let index = ShapeIndex::new(shape);
    let dim_m = index.dim() as u64;
    let rows = generator_rows(shape, policy, guard)?;
    let rank = sparse_rank(index.dim(), &rows) as u64;
    let dim_s = shape.hook_dim();
    let (_, clamped) = policy.column_pairs(shape);
    Ok(PresentationVerdict {
        shape: shape.clone(),
        policy: *policy,
        dim_m,
        dim_s,
        rank_relations: rank,
        isomorphic: dim_m - rank == dim_s,
        condition_paper: shape.condition_paper(),
        condition_columns: shape.condition_columns(),
        fixed_k_clamped: clamped,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub n_max: usize,
    pub policy: GarnirPolicy,
    /// One verdict per shape, by size and then in [`partitions_of`] order.
    pub verdicts: Vec<PresentationVerdict>,
    /// Max policy only: shapes whose verdict differs from `condition_columns`.
    /// Not empty in general: `(3,2)` is presented by its max relations.
    pub column_condition_mismatches: Vec<Partition>,
    /// Max policy only: shapes whose verdict differs from `condition_paper`.
    pub paper_condition_disagreements: Vec<Partition>,
}

impl ScanReport {
    /// For the Max policy: the verdict always matches `condition_columns`.
    /// Other policies make no prediction and always hold.
    pub fn holds(&self) -> bool {
        self.column_condition_mismatches.is_empty()
    }
}

pub fn scan(n_max: usize, policy: &GarnirPolicy) -> Result<ScanReport> {
    let guard = Guard {
        max_n: MAX_SCAN_N,
        ..Guard::default()
    };
    scan_guarded(n_max, policy, &guard)
}

/// Verdicts for every shape of size `1..=n_max`. Shapes are checked in
/// parallel; results keep partition order.
pub fn scan_guarded(n_max: usize, policy: &GarnirPolicy, guard: &Guard) -> Result<ScanReport> {
    if n_max > guard.max_n {
        return Err(Error::Guard(format!(
            "scan up to n = {n_max} exceeds max_n = {}",
            guard.max_n
        )));
    }
    let shapes: Vec<Partition> = (1..=n_max).flat_map(partitions_of).collect();
    let verdicts = shapes
        .par_iter()
        .map(|shape| check_presentation_guarded(shape, policy, guard))
        .collect::<Result<Vec<_>>>()?;
    let (mut mismatches, mut disagreements) = (Vec::new(), Vec::new());
    if policy.kind == PolicyKind::Max {
        for v in &verdicts {
            if v.isomorphic != v.condition_columns {
                mismatches.push(v.shape.clone());
            }
            if v.isomorphic != v.condition_paper {
                disagreements.push(v.shape.clone());
            }
        }
    }
    Ok(ScanReport {
        n_max,
        policy: *policy,
        verdicts,
        column_condition_mismatches: mismatches,
        paper_condition_disagreements: disagreements,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            checks: Vec::new(),
        }
    }

    fn record(&mut self, name: impl Into<String>, outcome: Result<()>) {
        let (passed, detail) = match outcome {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e.to_string()),
        };
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Inconsistent(msg()))
    }
}

fn tab(s: &str) -> Result<Tableau> {
    s.parse()
}

fn raw_matches(t: &str, c: usize, k: usize, expected: &[(i64, &str)]) -> Result<()> {
    let got: Vec<(i64, String)> = garnir_terms_raw(&tab(t)?, c, k)?
        .into_iter()
        .map(|(s, x)| (s, x.to_string()))
        .collect();
    let want: Vec<(i64, String)> = expected.iter().map(|&(s, x)| (s, x.to_string())).collect();
    ensure(got == want, || format!("got {got:?}, expected {want:?}"))
}

/// The worked examples: a straightening chain, two Garnir relations on a
/// shape `(3,2,1,1)` tableau, and one two-column generator `g_S`.
pub fn paper_examples_suite() -> SuiteReport {
    let mut report = SuiteReport::new("examples");

    report.record("straightening chain", (|| {
        let chain = ["3 5/1 4/2", "1 5/3 4/2", "1 5/2 4/3", "1 4/2 5/3"];
        let signs = [1, -1, 1, -1];
        let first = TabloidVector::basis_vector(&tab(chain[0])?);
        for (t, s) in chain.iter().zip(signs) {
            let v = TabloidVector::basis_vector(&tab(t)?).scale(&crate::exactla::int(s));
            ensure(v == first, || format!("[{}] is not {s} * [{t}]", chain[0]))?;
        }
        let st = tab(chain[0])?.straighten();
        ensure(st.sign == -1 && st.tableau.to_string() == chain[3], || {
            format!("[{}] straightens to {} * [{}]", chain[0], st.sign, st.tableau)
        })
    })());

    report.record("g^t_{1,1} five terms", raw_matches(
        "1 5 7/2 6/3/4",
        1,
        1,
        &[
            (1, "1 5 7/2 6/3/4"),
            (-1, "5 1 7/2 6/3/4"),
            (-1, "1 2 7/5 6/3/4"),
            (-1, "1 3 7/2 6/5/4"),
            (-1, "1 4 7/2 6/3/5"),
        ],
    ));

    report.record("g^t_{1,2} seven terms", raw_matches(
        "1 5 7/2 6/3/4",
        1,
        2,
        &[
            (1, "1 5 7/2 6/3/4"),
            (-1, "5 1 7/6 2/3/4"),
            (-1, "5 1 7/2 3/6/4"),
            (-1, "5 1 7/2 4/3/6"),
            (-1, "1 2 7/5 3/6/4"),
            (-1, "1 2 7/5 4/3/6"),
            (-1, "1 3 7/2 4/5/6"),
        ],
    ));

    report.record("g_{2,4,5} raw terms", raw_matches(
        "2 1/4 3/5",
        1,
        2,
        &[(1, "2 1/4 3/5"), (-1, "1 2/3 4/5"), (-1, "1 2/4 5/3"), (-1, "2 4/1 5/3")],
    ));

    report.record("g_{2,4,5} straightened", (|| {
        let idx = SubsetIndex::new(3, 2)?;
        let g = garnir_element(&idx.tableau(&[2, 4, 5])?, 1, 2)?;
        let v = |s: &[usize]| idx.basis_vector(s);
        let expected = v(&[2, 4, 5])?
            .sub(&v(&[1, 3, 5])?)?
            .add(&v(&[1, 3, 4])?)?
            .add(&v(&[1, 2, 3])?)?;
        ensure(g == expected, || format!("got {g}, expected {expected}"))?;
        let closed = crate::twocol::g_closed_form(&[2, 4, 5], 3, 2)?;
        ensure(closed == expected, || format!("closed form gives {closed}"))
    })());

    report
}

/// Number of random `(σ, S)` pairs drawn per `(n, m)` for equivariance.
pub const EQUIVARIANCE_SAMPLES: usize = 100;

/// Largest `n + m` for which the suite also matches eigenspace characters.
pub const CHARACTER_NM_MAX: usize = 8;

/// For every `1 <= m <= n` with `n + m <= nm_max`: the predicted spectrum,
/// the minimal polynomial, equivariance on random samples, closed form vs.
/// Garnir for every `S`, and (for `n + m <= 8`) the eigenspace characters.
pub fn spectrum_suite(nm_max: usize) -> SuiteReport {
    let mut report = SuiteReport::new("spectrum");
    for total in 2..=nm_max {
        for m in 1..=total / 2 {
            let n = total - m;
            let tag = format!("({n},{m})");
            let phi = match phi_operator(n, m) {
                Ok(phi) => phi,
                Err(e) => {
                    report.record(format!("{tag} operator"), Err(e));
                    continue;
                }
            };
            report.record(format!("{tag} spectrum"), (|| {
                let s = spectrum_of(&phi, n, m)?;
                let failures = s.failures();
                ensure(failures.is_empty(), || failures.join("; "))
            })());
            report.record(format!("{tag} minimal polynomial"), (|| {
                let roots = crate::twocol::distinct_eigenvalues(n, m)?;
                ensure(phi.annihilated_by(&roots), || format!("Π(φ - w) ≠ 0 for roots {roots:?}"))
            })());
            report.record(format!("{tag} equivariance"), check_equivariance(n, m, EQUIVARIANCE_SAMPLES));
            report.record(format!("{tag} closed form"), (|| {
                let idx = SubsetIndex::new(n, m)?;
                for s in idx.subsets() {
                    ensure(cross_check_gs(&s, n, m)?, || format!("g_S differs at S = {s:?}"))?;
                }
                Ok(())
            })());
            if total <= CHARACTER_NM_MAX {
                report.record(format!("{tag} eigenspace characters"), check_eigenspace_characters(n, m));
                report.record(format!("{tag} Pieri"), check_pieri(n, m));
            }
        }
    }
    report
}

/// `φ(σ v_S) = σ φ(v_S)` on `samples` random pairs, seeded by `(n, m)`.
pub fn check_equivariance(n: usize, m: usize, samples: usize) -> Result<()> {
    let idx = SubsetIndex::new(n, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(((n as u64) << 32) | m as u64);
    for _ in 0..samples {
        let sigma = Permutation::random(n + m, &mut rng);
        let s = idx.unrank(rand::Rng::gen_range(&mut rng, 0..idx.dim()))?;
        ensure(equivariant_at(n, m, &sigma, &s)?, || {
            format!("σ = {sigma}, S = {s:?}")
        })?;
    }
    Ok(())
}

/// For `m < n` every eigenspace character is the irreducible of its level;
/// for `m = n` the two eigenspaces carry the parity sums of levels.
pub fn check_eigenspace_characters(n: usize, m: usize) -> Result<()> {
    let levels: Vec<usize> = (0..=m).collect();
    let eigen = crate::twocol::distinct_eigenvalues(n, m)?;
    for w in eigen {
        let members: Vec<usize> = levels
            .iter()
            .copied()
            .filter(|&i| crate::twocol::eigenvalue_w(n, m, i).map(|x| x == w).unwrap_or(false))
            .collect();
        let chi = eigenspace_class_function(n, m, members[0])?;
        let mut expected = ClassFunction::irreducible(&level_shape(n, m, members[0]));
        for &i in &members[1..] {
            expected = expected.add(&ClassFunction::irreducible(&level_shape(n, m, i)))?;
        }
        ensure(chi == expected, || {
            format!("eigenvalue {w}: character differs from levels {members:?}")
        })?;
        let parts = decompose(&chi)?;
        ensure(parts.len() == members.len() && parts.values().all(|&c| c == 1), || {
            format!("eigenvalue {w}: decomposition {parts:?}")
        })?;
    }
    Ok(())
}

/// `χ_V(μ) = Σ_i χ^{2^i 1^{n+m-2i}}(μ)` on every class.
pub fn check_pieri(n: usize, m: usize) -> Result<()> {
    for mu in partitions_of(n + m) {
        let lhs = v_character(n, m, &mu)?;
        let rhs: i64 = (0..=m)
            .map(|i| mn_character(&level_shape(n, m, i), &mu))
            .sum::<Result<i64>>()?;
        ensure(lhs == rhs, || format!("class ({mu}): {lhs} vs {rhs}"))?;
    }
    Ok(())
}
