//! The report every subcommand produces, and its text/CSV/JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use specht::twocol::Spectrum;
use specht::verify::{PresentationVerdict, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Nothing was asserted; the numbers are reported as found.
    Observation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Results,
    pub status: Status,
    /// Wall-clock microseconds per phase. Not part of the determinism contract.
    pub timings: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Verdicts {
        verdicts: Vec<PresentationVerdict>,
        column_condition_mismatches: Vec<String>,
        paper_condition_disagreements: Vec<String>,
    },
    Spectrum {
        spectrum: Spectrum,
        failures: Vec<String>,
    },
    Decomposition {
        n: usize,
        m: usize,
        /// `V_{n,m}` itself.
        module: BTreeMap<String, u64>,
        eigenspaces: Vec<EigenspaceDecomposition>,
    },
    Garnir {
        tableau: String,
        column: usize,
        k: usize,
        raw: Vec<Term>,
        straightened: Vec<Term>,
    },
    Selftest {
        suites: Vec<SuiteReport>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenspaceDecomposition {
    pub eigenvalue: i64,
    pub levels: Vec<usize>,
    /// Partition string to multiplicity.
    pub multiplicities: BTreeMap<String, u64>,
    pub expected: BTreeMap<String, u64>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coefficient: i64,
    pub tableau: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format '{s}' (expected json, csv or text)")),
        }
    }
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut write = |fields: &[String]| w.write_record(fields).expect("in-memory csv");
        match &self.results {
            Results::Verdicts { verdicts, .. } => {
                write(&strings(&[
                    "shape",
                    "policy",
                    "dim_M",
                    "dim_S",
                    "rank",
                    "isomorphic",
                    "condition_paper",
                    "condition_columns",
                ]));
                for v in verdicts {
                    write(&[
                        v.shape.to_string(),
                        v.policy.to_string(),
                        v.dim_m.to_string(),
                        v.dim_s.to_string(),
                        v.rank_relations.to_string(),
                        v.isomorphic.to_string(),
                        v.condition_paper.to_string(),
                        v.condition_columns.to_string(),
                    ]);
                }
            }
            Results::Spectrum { spectrum, .. } => {
                write(&strings(&["i", "w_i", "shape", "dim_S", "expected_dim", "computed_mult", "match"]));
                for level in &spectrum.levels {
                    let space = spectrum
                        .eigenspaces
                        .iter()
                        .find(|e| e.eigenvalue == level.eigenvalue)
                        .expect("every level has an eigenspace");
                    write(&[
                        level.i.to_string(),
                        level.eigenvalue.to_string(),
                        level.shape.to_string(),
                        level.expected_dim.to_string(),
                        space.expected_dim.to_string(),
                        space.computed_mult.to_string(),
                        (space.computed_mult == space.expected_dim).to_string(),
                    ]);
                }
            }
            Results::Decomposition { module, eigenspaces, .. } => {
                write(&strings(&["component", "partition", "multiplicity"]));
                for (p, c) in module {
                    write(&["V".to_string(), p.clone(), c.to_string()]);
                }
                for e in eigenspaces {
                    for (p, c) in &e.multiplicities {
                        write(&[format!("w={}", e.eigenvalue), p.clone(), c.to_string()]);
                    }
                }
            }
            Results::Garnir { raw, straightened, .. } => {
                write(&strings(&["form", "coefficient", "tableau"]));
                for (form, terms) in [("raw", raw), ("straightened", straightened)] {
                    for t in terms {
                        write(&[form.to_string(), t.coefficient.to_string(), t.tableau.clone()]);
                    }
                }
            }
            Results::Selftest { suites } => {
                write(&strings(&["suite", "check", "passed", "detail"]));
                for s in suites {
                    for c in &s.checks {
                        write(&[s.name.clone(), c.name.clone(), c.passed.to_string(), c.detail.clone()]);
                    }
                }
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.results {
            Results::Verdicts {
                verdicts,
                column_condition_mismatches,
                paper_condition_disagreements,
            } => {
                if let [v] = verdicts.as_slice() {
                    let _ = writeln!(out, "shape ({}), policy {}", v.shape, v.policy);
                    let _ = writeln!(
                        out,
                        "dim M = {}, rank of relations = {}, dim S = {}",
                        v.dim_m, v.rank_relations, v.dim_s
                    );
                    let _ = writeln!(out, "isomorphic: {}", v.isomorphic);
                    let _ = writeln!(
                        out,
                        "condition_paper: {}, condition_columns: {}",
                        v.condition_paper, v.condition_columns
                    );
                    if v.fixed_k_clamped {
                        let _ = writeln!(out, "note: k was clamped on some column");
                    }
                } else {
                    let _ = writeln!(
                        out,
                        "{:<14} {:>6} {:>6} {:>6} {:>5} {:>6} {:>7}",
                        "shape", "dim_M", "rank", "dim_S", "iso", "paper", "columns"
                    );
                    for v in verdicts {
                        let _ = writeln!(
                            out,
                            "{:<14} {:>6} {:>6} {:>6} {:>5} {:>6} {:>7}",
                            v.shape.to_string(),
                            v.dim_m,
                            v.rank_relations,
                            v.dim_s,
                            yn(v.isomorphic),
                            yn(v.condition_paper),
                            yn(v.condition_columns)
                        );
                    }
                    if !column_condition_mismatches.is_empty() {
                        let _ = writeln!(
                            out,
                            "verdict differs from condition_columns: {}",
                            paren_list(column_condition_mismatches)
                        );
                    }
                    if !paper_condition_disagreements.is_empty() {
                        let _ = writeln!(
                            out,
                            "verdict differs from condition_paper: {}",
                            paren_list(paper_condition_disagreements)
                        );
                    }
                }
            }
            Results::Spectrum { spectrum, failures } => {
                let _ = writeln!(out, "V_({},{}) of dimension {}", spectrum.n, spectrum.m, spectrum.dim);
                let _ = writeln!(
                    out,
                    "{:>3} {:>6} {:<16} {:>6} {:>12} {:>13} {:>6}",
                    "i", "w_i", "shape", "dim_S", "expected_dim", "computed_mult", "match"
                );
                for level in &spectrum.levels {
                    let space = spectrum
                        .eigenspaces
                        .iter()
                        .find(|e| e.eigenvalue == level.eigenvalue)
                        .expect("every level has an eigenspace");
                    let _ = writeln!(
                        out,
                        "{:>3} {:>6} {:<16} {:>6} {:>12} {:>13} {:>6}",
                        level.i,
                        level.eigenvalue,
                        format!("({})", level.shape),
                        level.expected_dim,
                        space.expected_dim,
                        space.computed_mult,
                        yn(space.computed_mult == space.expected_dim)
                    );
                }
                if spectrum.eigenspaces.len() < spectrum.levels.len() {
                    for e in &spectrum.eigenspaces {
                        let _ = writeln!(
                            out,
                            "eigenvalue {}: levels {:?}, multiplicity {} (expected {})",
                            e.eigenvalue, e.levels, e.computed_mult, e.expected_dim
                        );
                    }
                }
                for f in failures {
                    let _ = writeln!(out, "FAIL: {f}");
                }
            }
            Results::Decomposition { n, m, module, eigenspaces } => {
                let _ = writeln!(out, "V_({n},{m}) = {}", sum_of(module));
                for e in eigenspaces {
                    let _ = writeln!(
                        out,
                        "eigenvalue {} (levels {:?}): {}{}",
                        e.eigenvalue,
                        e.levels,
                        sum_of(&e.multiplicities),
                        if e.matches { "" } else { "  [expected differs]" }
                    );
                }
            }
            Results::Garnir {
                tableau,
                column,
                k,
                raw,
                straightened,
            } => {
                let _ = writeln!(out, "g^t_{{{column},{k}}} for t = [{tableau}]");
                let _ = writeln!(out, "  {}", signed_sum(raw));
                let _ = writeln!(out, "= {}", signed_sum(straightened));
            }
            Results::Selftest { suites } => {
                for s in suites {
                    for c in &s.checks {
                        let mark = if c.passed { "ok  " } else { "FAIL" };
                        let _ = write!(out, "{mark} {}: {}", s.name, c.name);
                        if !c.detail.is_empty() {
                            let _ = write!(out, " ({})", c.detail);
                        }
                        out.push('\n');
                    }
                }
            }
        }
        let _ = writeln!(out, "status: {}", status_word(self.status));
        out
    }
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Observation => "observation",
    }
}

fn paren_list(shapes: &[String]) -> String {
    shapes.iter().map(|s| format!("({s})")).collect::<Vec<_>>().join(" ")
}

fn sum_of(parts: &BTreeMap<String, u64>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    parts
        .iter()
        .map(|(p, c)| if *c == 1 { format!("S^({p})") } else { format!("{c} S^({p})") })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `[1 2/3] - [2 1/3] + 2*[...]`
pub fn signed_sum(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let sign = match (i, t.coefficient < 0) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sign);
        let mag = t.coefficient.unsigned_abs();
        if mag != 1 {
            let _ = write!(out, "{mag}*");
        }
        let _ = write!(out, "[{}]", t.tableau);
    }
    out
}
