//! One function per subcommand, each producing a [`Report`].

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use specht::chars::{decompose as decompose_fn, eigenspace_class_function, v_class_function};
use specht::garnir::garnir_terms_raw;
use specht::tableau::ShapeIndex;
use specht::twocol::{distinct_eigenvalues, eigenvalue_w, level_shape, spectrum as spectrum_fn};
use specht::verify::{self, check_presentation_guarded, scan_guarded, MAX_SCAN_N};
use specht::{GarnirPolicy, Guard, Partition, PolicyKind, Tableau};

use crate::report::{EigenspaceDecomposition, Report, Results, Status, Term};

/// Why a command produced no report.
#[derive(Debug)]
pub enum CliError {
    /// Bad input or a guard; exit code 1.
    Usage(String),
    /// An internal consistency check failed; exit code 2.
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Math(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Math(s) => f.write_str(s),
        }
    }
}

impl From<specht::Error> for CliError {
    fn from(e: specht::Error) -> Self {
        match e {
            specht::Error::Inconsistent(_) | specht::Error::NotAModuleCharacter(_) => CliError::Math(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<Report, CliError>;

fn report(command: &str, parameters: BTreeMap<String, String>, results: Results, status: Status, start: Instant) -> Report {
    Report {
        command: command.to_string(),
        parameters,
        results,
        status,
        timings: BTreeMap::from([("total_us".to_string(), start.elapsed().as_micros() as u64)]),
    }
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn guard_with(max_dim: Option<usize>) -> Guard {
    let mut guard = Guard::default();
    if let Some(d) = max_dim {
        guard.max_dim = d;
    }
    guard
}

fn two_column_args(n: usize, m: usize) -> Result<(), CliError> {
    if m > n {
        return Err(CliError::Usage(format!(
            "m = {m} exceeds n = {n}; two-column shapes 2^m 1^(n-m) use the convention m <= n"
        )));
    }
    if m == 0 {
        return Err(CliError::Usage("m must be at least 1".to_string()));
    }
    Ok(())
}

pub fn check(shape: &Partition, policy: &GarnirPolicy, guard: &Guard) -> CmdResult {
    let start = Instant::now();
    let v = check_presentation_guarded(shape, policy, guard)?;
    let parameters = params([("shape", shape.to_string()), ("policy", policy.to_string())]);
    let results = Results::Verdicts {
        verdicts: vec![v],
        column_condition_mismatches: Vec::new(),
        paper_condition_disagreements: Vec::new(),
    };
    Ok(report("check", parameters, results, Status::Pass, start))
}

pub fn scan(n_max: usize, policy: &GarnirPolicy, guard: &Guard) -> CmdResult {
    let start = Instant::now();
    let guard = Guard {
        max_n: guard.max_n.min(MAX_SCAN_N),
        ..*guard
    };
    let r = scan_guarded(n_max, policy, &guard)?;
    // Max asserts condition_columns; Full and Min assert that every shape is
    // presented; anything else is only observed.
    let status = match (policy.kind, policy.column_strict_only) {
        (PolicyKind::Max, _) if r.holds() => Status::Pass,
        (PolicyKind::Max, _) => Status::Fail,
        (PolicyKind::Full | PolicyKind::Min, false) => {
            if r.verdicts.iter().all(|v| v.isomorphic) {
                Status::Pass
            } else {
                Status::Fail
            }
        }
        _ => Status::Observation,
    };
    let parameters = params([("n_max", n_max.to_string()), ("policy", policy.to_string())]);
    let results = Results::Verdicts {
        verdicts: r.verdicts,
        column_condition_mismatches: r.column_condition_mismatches.iter().map(|p| p.to_string()).collect(),
        paper_condition_disagreements: r.paper_condition_disagreements.iter().map(|p| p.to_string()).collect(),
    };
    Ok(report("scan", parameters, results, status, start))
}

pub fn spectrum(n: usize, m: usize) -> CmdResult {
    two_column_args(n, m)?;
    let start = Instant::now();
    let s = spectrum_fn(n, m)?;
    let failures = s.failures();
    let status = if failures.is_empty() { Status::Pass } else { Status::Fail };
    let parameters = params([("n", n.to_string()), ("m", m.to_string())]);
    Ok(report("spectrum", parameters, Results::Spectrum { spectrum: s, failures }, status, start))
}

fn string_keys(map: BTreeMap<Partition, u64>) -> BTreeMap<String, u64> {
    map.into_iter().map(|(p, c)| (p.to_string(), c)).collect()
}

pub fn decompose(n: usize, m: usize) -> CmdResult {
    two_column_args(n, m)?;
    let start = Instant::now();
    let module = string_keys(decompose_fn(&v_class_function(n, m)?)?);
    let mut eigenspaces = Vec::new();
    for w in distinct_eigenvalues(n, m)? {
        let mut levels = Vec::new();
        for i in 0..=m {
            if eigenvalue_w(n, m, i)? == w {
                levels.push(i);
            }
        }
        let chi = eigenspace_class_function(n, m, levels[0])?;
        let multiplicities = string_keys(decompose_fn(&chi)?);
        let expected: BTreeMap<String, u64> = levels.iter().map(|&i| (level_shape(n, m, i).to_string(), 1)).collect();
        eigenspaces.push(EigenspaceDecomposition {
            eigenvalue: w,
            matches: multiplicities == expected,
            levels,
            multiplicities,
            expected,
        });
    }
    let status = if eigenspaces.iter().all(|e| e.matches) { Status::Pass } else { Status::Fail };
    let parameters = params([("n", n.to_string()), ("m", m.to_string())]);
    let results = Results::Decomposition { n, m, module, eigenspaces };
    Ok(report("decompose", parameters, results, status, start))
}

/// `k` defaults to the length of column `c + 1`.
pub fn garnir(shape: Option<&Partition>, tableau: &Tableau, column: usize, k: Option<usize>) -> CmdResult {
    if let Some(shape) = shape {
        if shape != tableau.shape() {
            return Err(CliError::Usage(format!(
                "tableau has shape ({}), not ({shape})",
                tableau.shape()
            )));
        }
    }
    let start = Instant::now();
    let k = match k {
        Some(k) => k,
        None => tableau.columns().get(column).map(|c| c.len()).unwrap_or(0),
    };
    let raw = garnir_terms_raw(tableau, column, k)?;
    let index = ShapeIndex::new(tableau.shape());
    let mut merged: BTreeMap<usize, i64> = BTreeMap::new();
    for (sign, s) in &raw {
        let st = s.straighten();
        *merged.entry(st.tableau.rank()?).or_default() += sign * st.sign;
    }
    let mut straightened = Vec::new();
    for (rank, c) in merged {
        if c != 0 {
            straightened.push(Term {
                coefficient: c,
                tableau: index.unrank(rank)?.to_string(),
            });
        }
    }
    let raw = raw
        .into_iter()
        .map(|(c, t)| Term {
            coefficient: c,
            tableau: t.to_string(),
        })
        .collect();
    let parameters = params([
        ("shape", tableau.shape().to_string()),
        ("tableau", tableau.to_string()),
        ("column", column.to_string()),
        ("k", k.to_string()),
    ]);
    let results = Results::Garnir {
        tableau: tableau.to_string(),
        column,
        k,
        raw,
        straightened,
    };
    Ok(report("garnir", parameters, results, Status::Pass, start))
}

pub fn selftest(nm_max: usize) -> CmdResult {
    let start = Instant::now();
    let suites = vec![verify::paper_examples_suite(), verify::spectrum_suite(nm_max)];
    let status = if suites.iter().all(|s| s.passed()) { Status::Pass } else { Status::Fail };
    let parameters = params([("nm_max", nm_max.to_string())]);
    Ok(report("selftest", parameters, Results::Selftest { suites }, status, start))
}
