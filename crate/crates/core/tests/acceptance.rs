//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Expected values come from oracles written here
//! (brute-force tableau counts, direct Garnir exchanges, explicit operator
//! products), not from the code under test.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specht::chars::{
    class_size, eigenspace_class_function, mn_character, v_character, v_character_by_fixed_subsets,
    v_character_by_trace, ClassFunction,
};
use specht::exactla::sparse_rank;
use specht::garnir::{garnir_element, garnir_terms_raw};
use specht::partition::partitions_of;
use specht::twocol::{
    equivariant_at, g_closed_form, phi_operator, spectrum, SparseOperator, SubsetIndex,
};
use specht::verify::{check_presentation, paper_examples_suite, scan};
use specht::{GarnirPolicy, Partition, Permutation, Tableau, TabloidVector};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------- oracles

fn two_column(n: usize, m: usize) -> Partition {
    Partition::two_column(n, m).unwrap()
}

/// `2^i 1^(total - 2i)`
fn level(total: usize, i: usize) -> Partition {
    let mut parts = vec![2; i];
    parts.extend(std::iter::repeat(1).take(total - 2 * i));
    Partition::new(parts).unwrap()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn column_lengths(shape: &Partition) -> Vec<usize> {
    let first = shape.parts().first().copied().unwrap_or(0);
    (0..first).map(|j| shape.parts().iter().filter(|&&p| p > j).count()).collect()
}

/// Standard Young tableaux counted by removing the largest entry from a
/// corner, recursively.
fn syt_count(parts: &[usize], memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
    if parts.iter().sum::<usize>() <= 1 {
        return 1;
    }
    if let Some(&v) = memo.get(parts) {
        return v;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            if smaller[i] == 0 {
                smaller.pop();
            }
            total += syt_count(&smaller, memo);
        }
    }
    memo.insert(parts.to_vec(), total);
    total
}

fn syt(shape: &Partition) -> u64 {
    syt_count(shape.parts(), &mut HashMap::new())
}

fn dim_m(shape: &Partition) -> u64 {
    let denom: u128 = column_lengths(shape).iter().map(|&l| factorial(l)).product();
    (factorial(shape.size()) / denom) as u64
}

/// No two adjacent columns share a length greater than one.
fn columns_condition(shape: &Partition) -> bool {
    column_lengths(shape).windows(2).all(|w| w[0] != w[1] || w[0] == 1)
}

fn sort_sign(v: &mut [usize]) -> i64 {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// `g_S` by exchanging every choice of `m` entries of the first column of
/// `t_S` with the second column and sorting, keyed by the first column.
fn oracle_gs(s: &[usize], n: usize, m: usize) -> BTreeMap<Vec<usize>, i64> {
    let comp: Vec<usize> = (1..=n + m).filter(|x| !s.contains(x)).collect();
    let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    *out.entry(s.to_vec()).or_default() += 1;
    for chosen in subsets(n, m) {
        let mut left = s.to_vec();
        let mut right = comp.clone();
        for (slot, &pos) in chosen.iter().enumerate() {
            right[slot] = s[pos];
            left[pos] = comp[slot];
        }
        let sign = sort_sign(&mut left) * sort_sign(&mut right);
        *out.entry(left).or_default() -= sign;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Whether `Π_w (φ - w I)` kills every basis vector, in `i128`.
fn product_vanishes(phi: &SparseOperator, roots: &[i64]) -> bool {
    let dim = phi.dim();
    (0..dim).all(|j| {
        let mut x = vec![0i128; dim];
        x[j] = 1;
        for &w in roots {
            let mut y: Vec<i128> = x.iter().map(|v| -v * w as i128).collect();
            for (col, &xc) in x.iter().enumerate() {
                if xc != 0 {
                    for &(i, v) in &phi.columns()[col] {
                        y[i] += xc * v as i128;
                    }
                }
            }
            x = y;
        }
        x.iter().all(|&v| v == 0)
    })
}

fn z(mu: &Partition) -> u128 {
    let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.iter().map(|(&k, &a)| (k as u128).pow(a) * factorial(a as usize)).product()
}

fn eigen(n: usize, m: usize, i: usize) -> i64 {
    let sign = if (m - i) % 2 == 0 { 1 } else { -1 };
    1 - sign * binom(n - i, m - i) as i64
}

fn pairs(total_max: usize, strict: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in 2..=total_max {
        for m in 1..=total / 2 {
            let n = total - m;
            if !strict || m < n {
                out.push((n, m));
            }
        }
    }
    out
}

// -------------------------------------------------------------- criteria

fn criterion_1() -> Outcome {
    let t: Tableau = "1 5 7/2 6/3/4".parse().unwrap();
    let raw = |c, k| -> Vec<(i64, String)> {
        garnir_terms_raw(&t, c, k).unwrap().into_iter().map(|(s, x)| (s, x.to_string())).collect()
    };
    let expect = |terms: &[&str]| -> Vec<(i64, String)> {
        terms.iter().enumerate().map(|(i, s)| (if i == 0 { 1 } else { -1 }, s.to_string())).collect()
    };
    ensure!(
        raw(1, 1)
            == expect(&["1 5 7/2 6/3/4", "5 1 7/2 6/3/4", "1 2 7/5 6/3/4", "1 3 7/2 6/5/4", "1 4 7/2 6/3/5"]),
        "g^t_{{1,1}} = {:?}",
        raw(1, 1)
    );
    ensure!(
        raw(1, 2)
            == expect(&[
                "1 5 7/2 6/3/4",
                "5 1 7/6 2/3/4",
                "5 1 7/2 3/6/4",
                "5 1 7/2 4/3/6",
                "1 2 7/5 3/6/4",
                "1 2 7/5 4/3/6",
                "1 3 7/2 4/5/6",
            ]),
        "g^t_{{1,2}} = {:?}",
        raw(1, 2)
    );

    // straightening chain: each displayed tabloid is ± the next
    let chain = ["3 5/1 4/2", "1 5/3 4/2", "1 5/2 4/3", "1 4/2 5/3"];
    let mut signs = Vec::new();
    for s in chain {
        let mut cols: Vec<Vec<usize>> = s.parse::<Tableau>().unwrap().columns().to_vec();
        signs.push(cols.iter_mut().map(|c| sort_sign(c)).product::<i64>());
    }
    ensure!(
        signs.windows(2).all(|w| w[0] * w[1] == -1) && signs[0] * signs[3] == -1,
        "chain signs {signs:?}"
    );
    let st = chain[0].parse::<Tableau>().unwrap().straighten();
    ensure!(st.sign == -1 && st.tableau.to_string() == chain[3], "straighten gives {} [{}]", st.sign, st.tableau);

    let idx = SubsetIndex::new(3, 2).unwrap();
    let g = garnir_element(&idx.tableau(&[2, 4, 5]).unwrap(), 1, 2).unwrap();
    let v = |s: &[usize]| idx.basis_vector(s).unwrap();
    let want = v(&[2, 4, 5]).sub(&v(&[1, 3, 5])).unwrap().add(&v(&[1, 3, 4])).unwrap().add(&v(&[1, 2, 3])).unwrap();
    ensure!(g == want, "g_{{2,4,5}} = {g}");
    ensure!(g_closed_form(&[2, 4, 5], 3, 2).unwrap() == want, "closed form of g_{{2,4,5}}");
    let suite = paper_examples_suite();
    ensure!(suite.passed(), "example suite: {:?}", suite.failures());
    Ok("chain sign -1, 5- and 7-term relations, g_{2,4,5}".into())
}

fn criterion_2() -> Outcome {
    let mut shapes = 0;
    for n in 1..=7 {
        for shape in partitions_of(n) {
            let v = check_presentation(&shape, &GarnirPolicy::min()).map_err(|e| e.to_string())?;
            ensure!(v.dim_m == dim_m(&shape), "({shape}) dim M {} vs {}", v.dim_m, dim_m(&shape));
            ensure!(
                v.dim_m - v.rank_relations == syt(&shape),
                "({shape}) dim M - rank = {} but {} standard tableaux",
                v.dim_m - v.rank_relations,
                syt(&shape)
            );
            shapes += 1;
        }
    }
    Ok(format!("{shapes} shapes"))
}

fn criterion_3() -> Outcome {
    let report = scan(7, &GarnirPolicy::max()).map_err(|e| e.to_string())?;
    let mut mismatches = Vec::new();
    let mut flagged = Vec::new();
    for v in &report.verdicts {
        ensure!(v.condition_columns == columns_condition(&v.shape), "({}) condition_columns", v.shape);
        let truth = v.dim_m - v.rank_relations == syt(&v.shape);
        ensure!(v.isomorphic == truth, "({}) verdict", v.shape);
        if truth != columns_condition(&v.shape) {
            mismatches.push(format!("({})", v.shape));
        }
        if truth != v.condition_paper {
            flagged.push(v.shape.clone());
        }
    }
    let single_rows: Vec<Partition> = (2..=7).map(|k| Partition::new(vec![k]).unwrap()).collect();
    let extra: Vec<String> = flagged.iter().filter(|p| p.len() > 1).map(|p| format!("({p})")).collect();
    ensure!(
        mismatches.is_empty(),
        "max verdict differs from condition_columns on {}; condition_paper also disagrees beyond single rows on {}",
        mismatches.join(" "),
        extra.join(" ")
    );
    ensure!(flagged == single_rows, "condition_paper disagreements {flagged:?}");
    Ok(format!("{} shapes; single rows flagged", report.verdicts.len()))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        for shape in partitions_of(n).into_iter().filter(columns_condition) {
            let all = check_presentation(&shape, &GarnirPolicy::max()).map_err(|e| e.to_string())?;
            let strict = check_presentation(&shape, &GarnirPolicy::max().column_strict()).map_err(|e| e.to_string())?;
            ensure!(
                all.rank_relations == strict.rank_relations,
                "({shape}): rank {} vs {} restricted",
                all.rank_relations,
                strict.rank_relations
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} shapes"))
}

fn criterion_5() -> Outcome {
    let mut cases = 0;
    for (n, m) in pairs(10, true) {
        let ws: Vec<i64> = (0..=m).map(|i| eigen(n, m, i)).collect();
        let mut sorted = ws.clone();
        sorted.sort_unstable();
        sorted.dedup();
        ensure!(sorted.len() == m + 1, "({n},{m}) eigenvalues {ws:?} not distinct");
        let s = spectrum(n, m).map_err(|e| e.to_string())?;
        let mut total = 0;
        for (i, &w) in ws.iter().enumerate() {
            let e = s.eigenspaces.iter().find(|e| e.eigenvalue == w).ok_or(format!("({n},{m}) w={w} missing"))?;
            let want = syt(&level(n + m, i));
            ensure!(e.computed_mult == want, "({n},{m}) nullity at {w} is {} not {want}", e.computed_mult);
            total += e.computed_mult;
        }
        ensure!(total as u128 == binom(n + m, n), "({n},{m}) multiplicities sum to {total}");
        let phi = phi_operator(n, m).map_err(|e| e.to_string())?;
        ensure!(product_vanishes(&phi, &ws), "({n},{m}) product of (φ - w_i) is not zero");
        cases += 1;
    }
    Ok(format!("{cases} (n,m) pairs"))
}

fn criterion_6() -> Outcome {
    for n in 1..=6 {
        let s = spectrum(n, n).map_err(|e| e.to_string())?;
        let mut w = s.distinct_eigenvalues();
        w.sort_unstable();
        ensure!(w == vec![0, 2], "n={n}: eigenvalues {w:?}");
        let (mut even, mut odd) = (0, 0);
        for i in 0..=n {
            let d = syt(&level(2 * n, i));
            if (n - i) % 2 == 0 {
                even += d;
            } else {
                odd += d;
            }
        }
        let mult = |w| s.eigenspaces.iter().find(|e| e.eigenvalue == w).unwrap().computed_mult;
        ensure!(mult(0) == even && mult(2) == odd, "n={n}: multiplicities {} {} vs {even} {odd}", mult(0), mult(2));
        let phi = phi_operator(n, n).map_err(|e| e.to_string())?;
        ensure!(product_vanishes(&phi, &[0, 2]), "n={n}: φ(φ - 2) ≠ 0");
    }
    Ok("n = 1..6".into())
}

fn criterion_7() -> Outcome {
    for (n, m) in pairs(10, false) {
        let shape = two_column(n, m);
        let idx = SubsetIndex::new(n, m).unwrap();
        // rows g_S straight from the oracle, one per n-subset S
        let rows: Vec<Vec<(usize, i64)>> = idx
            .subsets()
            .map(|s| oracle_gs(&s, n, m).into_iter().map(|(t, c)| (idx.rank(&t).unwrap(), c)).collect())
            .collect();
        let quotient = idx.dim() - sparse_rank(idx.dim(), &rows);
        let holds = quotient as u64 == syt(&shape);
        ensure!(holds == (m < n || n == 1), "({n},{m}): dim V/G = {quotient}, dim S = {}", syt(&shape));
    }
    Ok("n + m <= 10".into())
}

fn criterion_8() -> Outcome {
    for (n, m) in pairs(8, false) {
        let total = n + m;
        let irr = |i| ClassFunction::irreducible(&level(total, i));
        if m < n {
            for i in 0..=m {
                let chi = eigenspace_class_function(n, m, i).map_err(|e| e.to_string())?;
                ensure!(chi == irr(i), "({n},{m}) level {i}");
            }
        } else {
            let chi = eigenspace_class_function(n, m, m).map_err(|e| e.to_string())?;
            let mut want = irr(m);
            for i in (0..m).filter(|i| (n - i) % 2 == 0) {
                want = want.add(&irr(i)).unwrap();
            }
            ensure!(chi == want, "({n},{n}) kernel character");
        }
        for mu in partitions_of(total) {
            let v = v_character(n, m, &mu).map_err(|e| e.to_string())?;
            let sum: i64 = (0..=m).map(|i| mn_character(&level(total, i), &mu).unwrap()).sum();
            ensure!(v == sum, "({n},{m}) Pieri at ({mu}): {v} vs {sum}");
        }
    }
    Ok("n + m <= 8".into())
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    for (n, m) in pairs(9, false) {
        let idx = SubsetIndex::new(n, m).unwrap();
        for s in idx.subsets() {
            let closed = g_closed_form(&s, n, m).map_err(|e| e.to_string())?;
            let garnir = garnir_element(&idx.tableau(&s).unwrap(), 1, m).map_err(|e| e.to_string())?;
            let oracle = TabloidVector::from_integer_terms(
                &idx.shape(),
                oracle_gs(&s, n, m).into_iter().map(|(t, c)| (idx.rank(&t).unwrap(), c)),
            )
            .unwrap();
            ensure!(closed == garnir && garnir == oracle, "({n},{m}) S = {s:?}");
            count += 1;
        }
    }
    Ok(format!("{count} generators"))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut samples = 0;
    for (n, m) in pairs(10, false) {
        let idx = SubsetIndex::new(n, m).unwrap();
        for _ in 0..100 {
            let sigma = Permutation::random(n + m, &mut rng);
            let s = idx.unrank(rng.gen_range(0..idx.dim())).unwrap();
            ensure!(equivariant_at(n, m, &sigma, &s).map_err(|e| e.to_string())?, "({n},{m}) σ = {sigma}, S = {s:?}");
            samples += 1;
        }
    }
    Ok(format!("{samples} samples"))
}

fn criterion_11() -> Outcome {
    for n in 1..=8 {
        let mut square_sum = 0u128;
        for shape in partitions_of(n) {
            ensure!(shape.hook_dim() == syt(&shape), "({shape}) hook formula {} vs {}", shape.hook_dim(), syt(&shape));
            square_sum += (syt(&shape) as u128).pow(2);
        }
        ensure!(square_sum == factorial(n), "n={n}: Σ dim² = {square_sum}");
    }
    for n in 1..=7 {
        let classes = partitions_of(n);
        for mu in &classes {
            ensure!(class_size(mu) == factorial(n) / z(mu), "class size of ({mu})");
        }
        for a in &classes {
            for b in &classes {
                let ip: i128 = classes
                    .iter()
                    .map(|mu| {
                        (factorial(n) / z(mu)) as i128
                            * mn_character(a, mu).unwrap() as i128
                            * mn_character(b, mu).unwrap() as i128
                    })
                    .sum();
                let want = if a == b { factorial(n) as i128 } else { 0 };
                ensure!(ip == want, "<χ^({a}), χ^({b})> · N! = {ip}");
            }
        }
    }
    for (n, m) in pairs(9, false) {
        for mu in partitions_of(n + m) {
            let a = v_character_by_trace(n, m, &mu).map_err(|e| e.to_string())?;
            let b = v_character_by_fixed_subsets(n, m, &mu).map_err(|e| e.to_string())?;
            ensure!(a == b, "({n},{m}) class ({mu}): {a} vs {b}");
        }
    }
    Ok("hook formula n <= 8, orthonormality N <= 7, both V characters n + m <= 9".into())
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome, Option<Duration>); 11] = [
        (1, "worked examples", criterion_1, Some(Duration::from_secs(1))),
        (2, "min presentation, n <= 7", criterion_2, Some(Duration::from_secs(600))),
        (3, "max verdict = condition_columns, n <= 7", criterion_3, None),
        (4, "column-strict max rank, n <= 6", criterion_4, None),
        (5, "spectrum for m < n, n + m <= 10", criterion_5, Some(Duration::from_secs(300))),
        (6, "spectrum {0, 2} for m = n <= 6", criterion_6, None),
        (7, "two-column presentation, n + m <= 10", criterion_7, None),
        (8, "eigenspace characters and Pieri, n + m <= 8", criterion_8, None),
        (9, "closed form = Garnir, n + m <= 9", criterion_9, None),
        (10, "equivariance, n + m <= 10", criterion_10, None),
        (11, "oracles", criterion_11, None),
    ];
    let mut failed = Vec::new();
    for (id, title, run, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (o, _) => o,
        };
        match &outcome {
            Ok(detail) => println!("PASS criterion {id:>2}: {title} [{elapsed:.2?}] {detail}"),
            Err(why) => {
                println!("FAIL criterion {id:>2}: {title} [{elapsed:.2?}] {why}");
                failed.push(id);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
