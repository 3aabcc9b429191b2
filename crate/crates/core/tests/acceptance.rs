//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use tree_backbones::enumeration::{all_trees, DEFAULT_ENUMERATION_CAP};
use tree_backbones::kernel::{kernel_check, DEFAULT_KERNEL_CAP};
use tree_backbones::series::{
    color_series, cover_series, matching_series, solve_color_system, tree_function, DEFAULT_ORDER,
};
use tree_backbones::{
    asymptotic_constants, bcolor, closed_form_color_total, enumerate_parallel, enumerate_totals, monte_carlo_fractions,
    sample_random_tree, summarize, verify_condition_iii, Color, EnumerationTotals, LabeledTree, Oracle, Series,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

const BROWN: [u64; 10] = [0, 0, 3, 4, 185, 1026, 30457, 362664, 10245825, 195060070];
const RED: [u64; 10] = [0, 2, 0, 48, 120, 4560, 35700, 1048992, 15514128, 456726240];
const GREEN: [u64; 10] = [1, 0, 6, 12, 320, 2190, 51492, 685496, 17286768, 348213690];
const COVERS: [u64; 10] = [1, 2, 3, 40, 185, 3936, 35917, 978160, 14301513, 464105440];
const MATCHINGS: [u64; 10] = [1, 1, 6, 24, 320, 3270, 55482, 999656, 21718440, 544829130];

const EXHAUSTIVE_N: usize = 8;

fn sequences() -> [(&'static str, &'static [u64; 10]); 5] {
    [("brown", &BROWN), ("red", &RED), ("green", &GREEN), ("vc", &COVERS), ("mm", &MATCHINGS)]
}

fn column<'a>(t: &'a EnumerationTotals, name: &str) -> &'a BigUint {
    match name {
        "brown" => &t.total_brown,
        "red" => &t.total_red,
        "green" => &t.total_green,
        "vc" => &t.total_vc_count,
        _ => &t.total_mm_count,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sequence_reproduction(totals: &[EnumerationTotals]) -> Outcome {
    for t in totals {
        for (name, expected) in sequences() {
            let got = column(t, name);
            ensure(*got == BigUint::from(expected[t.n - 1]), || {
                format!("n={} {name}: got {got}, expected {}", t.n, expected[t.n - 1])
            })?;
        }
    }
    Ok(format!("n=1..{EXHAUSTIVE_N}, five sequences"))
}

fn coloring_equivalence() -> Outcome {
    let oracle = Oracle::default();
    let mut trees = 0usize;
    for n in 1..=EXHAUSTIVE_N {
        for tree in all_trees(n) {
            let c = bcolor(&tree);
            let violations = verify_condition_iii(&tree, &c);
            ensure(violations.is_empty(), || format!("{tree:?}: {violations:?}"))?;
            let from_covers = oracle.coloring_from_covers(&tree).map_err(|e| e.to_string())?;
            let from_matchings = oracle.coloring_from_matchings(&tree).map_err(|e| e.to_string())?;
            ensure(c == from_covers && c == from_matchings, || format!("colorings differ on {tree:?}"))?;
            trees += 1;
        }
    }
    Ok(format!("{trees} trees"))
}

fn size_identity(tree: &LabeledTree) -> Result<(), String> {
    let s = summarize(tree).map_err(|e| e.to_string())?;
    ensure(s.vc_size == s.mm_size && s.vc_size == s.n_brown + s.n_red / 2, || format!("{tree:?}: {s:?}"))
}

fn cover_matching_identity() -> Outcome {
    let mut trees = 0usize;
    for n in 1..=EXHAUSTIVE_N {
        for tree in all_trees(n) {
            size_identity(&tree)?;
            trees += 1;
        }
    }
    for seed in 0..10_000u64 {
        let n = 2 + (seed as usize * 7919) % 999;
        size_identity(&sample_random_tree(n, seed).map_err(|e| e.to_string())?)?;
    }
    Ok(format!("{trees} enumerated trees, 10000 random trees with n <= 1000"))
}

fn count_list(series: &Series, upto: usize) -> Result<Vec<BigInt>, String> {
    let counts = series.egf_counts().map_err(|e| e.to_string())?;
    Ok(counts[1..=upto].to_vec())
}

fn generating_functions(totals: &[EnumerationTotals]) -> Outcome {
    let order = DEFAULT_ORDER;
    let all = [
        ("brown", color_series(Color::Brown, order)),
        ("red", color_series(Color::Red, order)),
        ("green", color_series(Color::Green, order)),
        ("vc", cover_series(order)),
        ("mm", matching_series(order)),
    ];
    for ((name, series), (_, expected)) in all.into_iter().zip(sequences()) {
        let series = series.map_err(|e| e.to_string())?;
        let got = count_list(&series, 10)?;
        let want: Vec<BigInt> = expected.iter().map(|&v| BigInt::from(v)).collect();
        ensure(got == want, || format!("{name}: series gives {got:?}"))?;
        for t in totals {
            let enumerated = BigInt::from(column(t, name).clone());
            ensure(got[t.n - 1] == enumerated, || format!("{name} n={}: series vs enumeration", t.n))?;
        }
    }
    Ok(format!("order {order}, ten terms and enumeration n <= {EXHAUSTIVE_N}"))
}

fn closed_forms(totals: &[EnumerationTotals]) -> Outcome {
    for (color, name, expected) in
        [(Color::Brown, "brown", &BROWN), (Color::Red, "red", &RED), (Color::Green, "green", &GREEN)]
    {
        for n in 1..=10 {
            let got = closed_form_color_total(color, n).map_err(|e| e.to_string())?;
            ensure(got == BigUint::from(expected[n - 1]), || format!("{name} n={n}: closed form {got}"))?;
            if let Some(t) = totals.get(n - 1) {
                ensure(&got == column(t, name), || format!("{name} n={n}: closed form vs enumeration"))?;
            }
        }
    }
    Ok("n <= 10".into())
}

fn unrooted_consistency() -> Outcome {
    let order = DEFAULT_ORDER;
    let sys = solve_color_system(order).map_err(|e| e.to_string())?;
    let t = tree_function(order);
    let half = BigRational::new(1.into(), 2.into());
    let expected = &t - &(&t * &t).scale(&half);
    ensure(sys.get("F") == &expected, || "F(x,x,x) differs from T - T^2/2".into())?;
    Ok(format!("order {order}"))
}

fn asymptotic_fractions() -> Outcome {
    let c = asymptotic_constants(1e-15).map_err(|e| e.to_string())?;
    let checks = [
        ("brown", c.brown_frac, 0.2276096757),
        ("red", c.red_frac, 0.4104940676),
        ("green", c.green_frac, 0.3618962567),
        ("cover", c.cover_frac, 0.4328567095),
    ];
    let report: Vec<String> = checks
        .iter()
        .map(|(name, got, want)| format!("{name} {got:.15} vs {want} (diff {:.2e})", (got - want).abs()))
        .collect();
    let report = report.join("; ");
    if checks.iter().all(|(_, got, want)| (got - want).abs() <= 1e-10) {
        Ok(report)
    } else {
        Err(report)
    }
}

fn kernel(tree: &LabeledTree) -> Result<(), String> {
    let check = kernel_check(tree, DEFAULT_KERNEL_CAP).map_err(|e| e.to_string())?;
    ensure(check.pass, || format!("{tree:?}: {check:?}"))
}

fn kernel_support() -> Outcome {
    let mut trees = 0usize;
    for n in 1..=EXHAUSTIVE_N {
        for tree in all_trees(n) {
            kernel(&tree)?;
            trees += 1;
        }
    }
    for seed in 0..1_000u64 {
        let n = 2 + (seed as usize * 7919) % 99;
        kernel(&sample_random_tree(n, seed).map_err(|e| e.to_string())?)?;
    }
    Ok(format!("{trees} enumerated trees, 1000 random trees with n <= 100"))
}

fn monte_carlo() -> Outcome {
    let c = asymptotic_constants(1e-15).map_err(|e| e.to_string())?;
    let f = monte_carlo_fractions(10_000, 1_000, 2024).map_err(|e| e.to_string())?;
    let checks = [("brown", f.brown, c.brown_frac), ("red", f.red, c.red_frac), ("green", f.green, c.green_frac)];
    let report: Vec<String> = checks
        .iter()
        .map(|(name, e, target)| {
            format!("{name} {:.5}±{:.5} ({:+.2}σ)", e.mean, e.std_err, (e.mean - target) / e.std_err)
        })
        .collect();
    let report = report.join("; ");
    if checks.iter().all(|(_, e, target)| e.within(*target, 3.0)) {
        Ok(report)
    } else {
        Err(report)
    }
}

fn determinism() -> Outcome {
    let n = 7;
    let csv = |workers| -> Result<String, String> {
        Ok(enumerate_parallel(n, workers, DEFAULT_ENUMERATION_CAP, |_| {}).map_err(|e| e.to_string())?.csv_row())
    };
    let sequential = enumerate_totals(n, DEFAULT_ENUMERATION_CAP).map_err(|e| e.to_string())?.csv_row();
    for workers in [1, 2, 3, 8] {
        let row = csv(workers)?;
        ensure(row == sequential, || format!("{workers} workers: {row} vs {sequential}"))?;
    }
    let sample = || -> Result<String, String> {
        let tree = sample_random_tree(50, 7).map_err(|e| e.to_string())?;
        let fractions = monte_carlo_fractions(200, 20, 7).map_err(|e| e.to_string())?;
        Ok(format!("{}{fractions:?}", tree.to_edge_text()))
    };
    ensure(sample()? == sample()?, || "sampling differs between runs".into())?;
    Ok(format!("n={n} with 1, 2, 3, 8 workers; fixed-seed sampling"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let totals: Vec<EnumerationTotals> = (1..=EXHAUSTIVE_N)
        .map(|n| enumerate_totals(n, DEFAULT_ENUMERATION_CAP).expect("enumeration within cap"))
        .collect();
    let enumeration_time = start.elapsed();

    let criteria: Vec<Criterion> = vec![
        ("sequence reproduction", Box::new(|| sequence_reproduction(&totals))),
        ("coloring equivalence", Box::new(coloring_equivalence)),
        ("cover/matching size identity", Box::new(cover_matching_identity)),
        ("generating functions", Box::new(|| generating_functions(&totals))),
        ("closed forms", Box::new(|| closed_forms(&totals))),
        ("unrooted consistency", Box::new(unrooted_consistency)),
        ("asymptotic constants", Box::new(asymptotic_fractions)),
        ("kernel support", Box::new(kernel_support)),
        ("monte carlo concentration", Box::new(monte_carlo)),
        ("determinism", Box::new(determinism)),
    ];

    println!("acceptance: shared enumeration n=1..{EXHAUSTIVE_N} took {:.1?}", enumeration_time);
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name} ({elapsed:.1?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2} {name} ({elapsed:.1?}): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
