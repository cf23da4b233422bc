use std::process::{Command, Output};

use specht_cli::{Report, Results, Status};

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Report, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = specht(&full);
    let report: Report = serde_json::from_str(&stdout(&out)).expect("valid report json");
    (report, out.status.code().unwrap())
}

fn isomorphic(report: &Report) -> bool {
    match &report.results {
        Results::Verdicts { verdicts, .. } => verdicts[0].isomorphic,
        other => panic!("unexpected results {other:?}"),
    }
}

#[test]
fn check_verdicts() {
    let (r, code) = json(&["check", "--shape", "2,2,1", "--policy", "max"]);
    assert_eq!(code, 0);
    assert!(isomorphic(&r));

    // a negative verdict is a result, not an error
    let (r, code) = json(&["check", "--shape", "2,2", "--policy", "max"]);
    assert_eq!(code, 0);
    assert!(!isomorphic(&r));

    let (r, _) = json(&["check", "--shape", "2,2", "--policy", "min"]);
    assert!(isomorphic(&r));

    let out = specht(&["check", "--shape", "2,2,1", "--policy", "max"]);
    assert!(stdout(&out).contains("isomorphic: true"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["check", "--shape", "2,x"],
        vec!["check", "--shape", "1,2"],
        vec!["check", "--shape", "2,1", "--policy", "medium"],
        vec!["spectrum", "--n", "2", "--m", "3"],
        vec!["garnir", "--tableau", "1 3/2", "--column", "2"],
        vec!["bogus"],
    ] {
        let out = specht(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = specht(&["spectrum", "--n", "2", "--m", "3"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("m <= n"));
}

#[test]
fn spectrum_tables() {
    let (r, code) = json(&["spectrum", "--n", "3", "--m", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r.status, Status::Pass);
    let Results::Spectrum { spectrum, .. } = &r.results else { panic!() };
    assert_eq!(spectrum.levels.len(), 3);
    assert_eq!(spectrum.distinct_eigenvalues(), vec![-2, 3, 0]);

    let (r, _) = json(&["spectrum", "--n", "2", "--m", "2"]);
    let Results::Spectrum { spectrum, .. } = &r.results else { panic!() };
    let mut w = spectrum.distinct_eigenvalues();
    w.sort();
    assert_eq!(w, vec![0, 2]);

    let out = specht(&["spectrum", "--n", "1", "--m", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn scan_csv_has_one_row_per_shape() {
    let out = specht(&["scan", "--n-max", "5", "--policy", "max", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "shape,policy,dim_M,dim_S,rank,isomorphic,condition_paper,condition_columns"
    );
    assert_eq!(lines.count(), 18);
    // (3,2) is presented although condition_columns rejects it
    assert!(text.contains("\"3,2\",max,30,5,25,true,false,false"));
    assert_eq!(out.status.code(), Some(2));

    let out = specht(&["scan", "--n-max", "5", "--policy", "min", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 19);

    let out = specht(&["scan", "--n-max", "4", "--policy", "max"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn scan_respects_thread_setting() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_specht"))
            .args(["scan", "--n-max", "5", "--policy", "min", "--format", "csv"])
            .env("SPECHT_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert_eq!(one.stdout, run("0").stdout);
    assert_eq!(one.stdout, run("3").stdout);
    assert_eq!(run("many").status.code(), Some(1));
}

#[test]
fn garnir_seven_terms() {
    let out = specht(&[
        "garnir",
        "--shape",
        "3,2,1,1",
        "--tableau",
        "1 5 7/2 6/3/4",
        "--column",
        "1",
        "--k",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains(
        "[1 5 7/2 6/3/4] - [5 1 7/6 2/3/4] - [5 1 7/2 3/6/4] - [5 1 7/2 4/3/6] \
         - [1 2 7/5 3/6/4] - [1 2 7/5 4/3/6] - [1 3 7/2 4/5/6]"
    ));

    let (r, _) = json(&["garnir", "--tableau", "1 5 7/2 6/3/4", "--column", "1", "--k", "1"]);
    let Results::Garnir { raw, .. } = &r.results else { panic!() };
    assert_eq!(raw.len(), 5);

    // k defaults to the length of the next column
    let (r, _) = json(&["garnir", "--tableau", "2 1/4 3/5", "--column", "1"]);
    let Results::Garnir { k, straightened, .. } = &r.results else { panic!() };
    assert_eq!(*k, 2);
    assert_eq!(straightened.len(), 4);

    let out = specht(&["garnir", "--shape", "2,2", "--tableau", "2 1/4 3/5", "--column", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn decompose_eigenspaces() {
    let (r, code) = json(&["decompose", "--n", "2", "--m", "2"]);
    assert_eq!(code, 0);
    let Results::Decomposition { module, eigenspaces, .. } = &r.results else { panic!() };
    assert_eq!(module.len(), 3);
    let kernel = eigenspaces.iter().find(|e| e.eigenvalue == 0).unwrap();
    assert_eq!(kernel.multiplicities.keys().collect::<Vec<_>>(), vec!["1,1,1,1", "2,2"]);
    assert!(eigenspaces.iter().all(|e| e.matches));
}

#[test]
fn selftest_passes() {
    let out = specht(&["selftest", "--nm-max", "9"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("status: pass\n"));
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["check", "--shape", "3,2,1", "--policy", "fixed:2", "--column-strict-only"],
        vec!["spectrum", "--n", "4", "--m", "2"],
        vec!["scan", "--n-max", "4", "--policy", "full"],
        vec!["decompose", "--n", "3", "--m", "1"],
        vec!["garnir", "--tableau", "1 5 7/2 6/3/4", "--column", "2"],
        vec!["selftest", "--nm-max", "4"],
    ] {
        let (report, _) = json(&args);
        let again: Report = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(again, report, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let strip = |args: &[&str]| {
        let (mut r, _) = json(args);
        r.timings.clear();
        serde_json::to_string(&r).unwrap()
    };
    for args in [
        vec!["scan", "--n-max", "5", "--policy", "max"],
        vec!["decompose", "--n", "3", "--m", "2"],
    ] {
        assert_eq!(strip(&args), strip(&args));
        assert_eq!(specht(&args).stdout, specht(&args).stdout);
    }
}
