//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::{Command, ExitCode};

use permstat::catalog::{self, gf_canonical_pairs, is_finite_class, Catalog, GfFamily};
use permstat::perm::all_permutations;
use permstat::stats::{mna, mnd};
use permstat::verify::{self, Scope, VerifyReport};
use permstat::{enumerate_class, MultiPoly, PatternPair};

type Criterion = fn() -> Result<String, String>;

fn all_pass(reports: &[VerifyReport]) -> Result<String, String> {
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(r.to_string()),
        None => Ok(format!("{} checks", reports.len())),
    }
}

fn counting() -> Result<String, String> {
    let reports = verify::run_suite(Scope::Counts, Some(12));
    // Brute distributions at all markers = 1 recover the counts as well.
    for pair in PatternPair::all_length_3() {
        for n in 0..=12 {
            for fam in GfFamily::BOTH {
                let total = verify::brute_distribution(&pair, n, fam).eval_ones();
                if total != catalog::class_count(&pair, n).into() {
                    return Err(format!("{pair} {fam} n={n}: distribution sums to {total}"));
                }
            }
        }
    }
    all_pass(&reports)
}

fn family(scope: Scope, n_max: usize) -> Result<String, String> {
    let reports = verify::run_suite(scope, Some(n_max));
    if reports.len() != 14 {
        return Err(format!("expected 14 pairs, got {}", reports.len()));
    }
    all_pass(&reports)
}

fn single_statistic() -> Result<String, String> {
    let reports = verify::run_suite(Scope::Single, Some(12));
    if reports.len() != 40 {
        return Err(format!("expected 40 forms, got {}", reports.len()));
    }
    all_pass(&reports)?;
    // The corrected entries: printed form is off by exactly the constant 1,
    // and the corrected form matches enumeration.
    let mut corrected = Vec::new();
    for e in Catalog::get().single_entries().filter(|e| e.oracle_corrected) {
        let stat = e.stat.expect("single-statistic entry");
        let printed = e.printed.expand(12).map_err(|err| err.to_string())?;
        let used = e.gf.expand(12).map_err(|err| err.to_string())?;
        for n in 0..=12 {
            let want = verify::brute_single(&e.pair, n, stat);
            if used.coeff(n) != &want {
                return Err(format!("corrected {} {stat} wrong at n={n}", e.pair));
            }
            let gap = &want - printed.coeff(n);
            let expected_gap = if n == 0 { MultiPoly::one() } else { MultiPoly::zero() };
            if gap != expected_gap {
                return Err(format!("printed {} {stat} differs by {gap} at n={n}", e.pair));
            }
        }
        corrected.push(format!("{} {stat} ({:?})", e.pair, e.correction));
    }
    if corrected.len() != 2 {
        return Err(format!("expected two corrected forms, got {corrected:?}"));
    }
    Ok(format!("{} forms; constant term restored for {}", reports.len(), corrected.join(", ")))
}

fn symmetry() -> Result<String, String> {
    let reports = verify::run_suite(Scope::Symmetry, None);
    if reports.len() != gf_canonical_pairs().len() * 3 * 2 {
        return Err(format!("unexpected report count {}", reports.len()));
    }
    all_pass(&reports)
}

fn bijections() -> Result<String, String> {
    all_pass(&verify::check_bijections(12))
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_permstat"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {}", out.status));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn micro_examples() -> Result<String, String> {
    let cases: &[(&[&str], &str)] = &[
        (&["stats", "--perm", "34152"], "asc=2 des=2 lrmax=3 rlmax=2 lrmin=2 rlmin=2 mna=2 mnd=2\n"),
        (&["stats", "--perm", "3 4 1 5 2"], "asc=2 des=2 lrmax=3 rlmax=2 lrmin=2 rlmin=2 mna=2 mnd=2\n"),
        (&["stats", "--perm", "13254"], "asc=2 des=2 lrmax=3 rlmax=2 lrmin=1 rlmin=3 mna=2 mnd=2\n"),
        (&["stats", "--perm", "32154"], "asc=1 des=3 lrmax=2 rlmax=2 lrmin=3 rlmin=2 mna=1 mnd=2\n"),
        (
            &["map", "--which", "f", "--perm", "1 2 4 3 5 8 7 6 9 14 13 12 11 10"],
            "3 2 1 6 5 4 7 10 9 8 11 12 13 14\n",
        ),
        (
            &["map", "--which", "g", "--perm", "1 2 4 3 5 8 7 6 9 14 13 12 11 10"],
            "1 2 3 4 14 13 5 6 12 11 7 10 9 8\n",
        ),
        (&["map", "--which", "g", "--perm", "1 2"], "2 1\n"),
        (&["count", "--pair", "123,132", "--n", "10"], "512\n"),
        (
            &["table", "--pair", "231,312", "--family", "G", "--n", "3", "--format", "plain"],
            "p^2 y + 2 p q y z + q^2 z\n",
        ),
    ];
    for (args, want) in cases {
        let got = cli(args)?;
        if &got != want {
            return Err(format!("{args:?}: expected {want:?}, got {got:?}"));
        }
    }
    Ok(format!("{} invocations", cases.len()))
}

// Exhaustive search over subsets of the qualifying adjacent pairs.
fn best_disjoint(v: &[usize], hit: fn(usize, usize) -> bool) -> usize {
    let cands: Vec<usize> = (0..v.len().saturating_sub(1)).filter(|&i| hit(v[i], v[i + 1])).collect();
    (0u32..1 << cands.len())
        .filter(|mask| {
            let picked: Vec<usize> = (0..cands.len()).filter(|b| mask >> b & 1 == 1).map(|b| cands[b]).collect();
            picked.windows(2).all(|w| w[1] >= w[0] + 2)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn greedy_optimality() -> Result<String, String> {
    let mut checked = 0;
    for n in 0..=8 {
        for p in all_permutations(n) {
            let v = p.values();
            if mna(&p) != best_disjoint(v, |a, b| a < b) || mnd(&p) != best_disjoint(v, |a, b| a > b) {
                return Err(format!("greedy is not optimal on {p}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} permutations"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 counting, all pairs, n <= 12", counting),
        ("2 G family, 14 pairs, n <= 10", || family(Scope::G, 10)),
        ("3 F family, 14 pairs, n <= 9", || family(Scope::F, 9)),
        ("4 single-statistic forms vs joint, n <= 12", single_statistic),
        ("5 symmetry transforms vs image classes", symmetry),
        ("6 bijections f, g, g after f, n <= 12", bijections),
        ("7 worked examples through the CLI", micro_examples),
        ("8 greedy MNA/MND optimal, n <= 8", greedy_optimality),
    ];
    // Sanity: the one finite class really is finite.
    assert!(is_finite_class(&"123,321".parse().unwrap()));
    assert!(enumerate_class(&"123,321".parse().unwrap(), 5).is_empty());

    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(info) => println!("PASS criterion {name}: {info}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
