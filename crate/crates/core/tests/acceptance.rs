//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use listcolor::bounds::{fit_constant, predicted_work, GENERAL_FIT, TRIANGLE_FREE_FIT};
use listcolor::dp::{build_tables, preprocess_long_lists, LongListRule};
use listcolor::oracle::{brute_force_colorable, brute_force_mis};
use listcolor::{
    count_mis, enumerate_mis, is_triangle_free, solve, validate_coloring, Color, ColorList, Graph,
    Instance, SolveResult, VertexSubset,
};
use rand::Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    };
}

const RELATIVE_TOLERANCE: f64 = 1e-9;
const PERF_LIMIT: Duration = Duration::from_secs(60);
const MEMORY_LIMIT_BYTES: u64 = 1 << 30;

fn full_oracle(inst: &Instance) -> bool {
    brute_force_colorable(inst, inst.graph().vertices(), inst.lists()).unwrap()
}

fn check_solution(inst: &Instance, result: &SolveResult) -> Result<(), String> {
    let expected = full_oracle(inst);
    ensure!(
        result.is_sat() == expected,
        "decision {} but oracle says {} on {:?}",
        result.is_sat(),
        expected,
        inst
    );
    if let Some(f) = result.coloring() {
        let report = validate_coloring(inst, f).map_err(|e| e.to_string())?;
        ensure!(report.is_ok(), "invalid coloring {:?} for {:?}", report.violations, inst);
    }
    Ok(())
}

fn small_graphs() -> Vec<Graph> {
    (0..=6).flat_map(common::nonisomorphic_graphs).collect()
}

fn decision_correctness() -> Verdict {
    let mut rng = common::rng(1);
    let graphs = small_graphs();
    let mut checked = 0;
    let mut sat = 0;
    for g in &graphs {
        let n = g.order();
        let mut variants: Vec<Instance> = (1..=4)
            .map(|kappa| Instance::with_full_lists(g.clone(), kappa))
            .collect();
        for _ in 0..8 {
            let kappa = rng.gen_range(1..=4);
            let keep = rng.gen_range(0.3..0.9);
            let lists = common::random_lists(&mut rng, n, kappa, keep);
            variants.push(Instance::new(g.clone(), kappa, lists).unwrap());
        }
        for inst in variants {
            let result = solve(&inst).map_err(|e| e.to_string())?;
            check_solution(&inst, &result)?;
            checked += 1;
            sat += result.is_sat() as usize;
        }
    }
    let mut random = 0;
    while random < 600 {
        let n = rng.gen_range(7..=9);
        let density = rng.gen_range(0.1..0.7);
        let kappa = rng.gen_range(1..=4);
        let inst = common::random_instance(&mut rng, n, density, kappa);
        let result = solve(&inst).map_err(|e| e.to_string())?;
        check_solution(&inst, &result)?;
        sat += result.is_sat() as usize;
        random += 1;
    }
    Ok(format!(
        "{} non-isomorphic graphs (n<=6) x {} list variants + {random} random n in 7..=9; {sat} SAT, all decisions match the oracle",
        graphs.len(),
        checked / graphs.len()
    ))
}

fn table_semantics() -> Verdict {
    let mut rng = common::rng(2);
    let instances = 150;
    let mut entries = 0u64;
    for _ in 0..instances {
        let n = rng.gen_range(1..=7);
        let kappa = rng.gen_range(1..=4);
        let density = rng.gen_range(0.1..0.8);
        let inst = common::random_instance(&mut rng, n, density, kappa);
        let tables = build_tables(&inst);
        ensure!(tables.tables.len() == kappa as usize, "expected {kappa} tables");
        for (i, table) in tables.tables.iter().enumerate() {
            let level = i as Color + 1;
            let lists: Vec<ColorList> = inst.lists().iter().map(|l| l.truncated(level)).collect();
            for bits in 1..1u32 << n {
                let w = VertexSubset::from_bits(bits);
                let expected = brute_force_colorable(&inst, w, &lists).unwrap();
                ensure!(
                    table.get(w) == expected,
                    "level {level}, W = {w:?}: table {} vs oracle {expected} on {inst:?}",
                    table.get(w)
                );
                entries += 1;
            }
        }
    }
    Ok(format!("{instances} instances, {entries} (level, W) entries equal to the oracle"))
}

fn mis_enumeration() -> Verdict {
    let mut rng = common::rng(3);
    let mut graphs = small_graphs();
    for _ in 0..400 {
        let n = rng.gen_range(7..=10);
        let density = rng.gen_range(0.05..0.9);
        graphs.push(common::random_graph(&mut rng, n, density));
    }
    for n in 3..=10 {
        graphs.push(common::cycle(n));
        graphs.push(common::complete(n));
    }
    let mut subsets = 0;
    for g in &graphs {
        let mut targets = vec![g.vertices()];
        for _ in 0..3 {
            targets.push(VertexSubset::from_bits(rng.gen::<u32>() & g.vertices().bits()));
        }
        for w in targets {
            let listed: Vec<VertexSubset> = enumerate_mis(g, w).collect();
            let distinct: BTreeSet<VertexSubset> = listed.iter().copied().collect();
            ensure!(distinct.len() == listed.len(), "duplicate MIS for {g:?} on {w:?}");
            let oracle = brute_force_mis(g, w).unwrap();
            ensure!(distinct == oracle, "MIS mismatch for {g:?} on {w:?}");
            subsets += 1;
        }
        let n = g.order() as u32;
        let count = count_mis(g, g.vertices()) as u128;
        ensure!(count.pow(3) <= 3u128.pow(n), "count {count} breaks 3^(n/3) on {g:?}");
        if is_triangle_free(g) {
            ensure!(count.pow(2) <= 2u128.pow(n), "count {count} breaks 2^(n/2) on {g:?}");
        }
    }
    for k in 1..=3u32 {
        let g = common::disjoint_triangles(k as usize);
        let count = count_mis(&g, g.vertices());
        ensure!(count == 3u64.pow(k), "{k} triangles: {count} MIS");
        ensure!(
            enumerate_mis(&g, g.vertices()).collect::<BTreeSet<_>>() == brute_force_mis(&g, g.vertices()).unwrap(),
            "{k} triangles: set mismatch"
        );
    }
    for k in 1..=5u32 {
        let g = common::perfect_matching(k as usize);
        let count = count_mis(&g, g.vertices());
        ensure!(count == 2u64.pow(k), "matching of {k} edges: {count} MIS");
    }
    Ok(format!(
        "{} graphs (n<=10), {subsets} vertex subsets match the oracle; bounds hold, extremal families attain them",
        graphs.len()
    ))
}

fn binomial_work(n: usize, t: f64) -> f64 {
    let mut binom = 1.0;
    let mut sum = 0.0;
    for k in 1..=n {
        binom = binom * (n - k + 1) as f64 / k as f64;
        sum += binom * t.powi(k as i32);
    }
    sum
}

fn work_bound() -> Verdict {
    let mut rng = common::rng(4);
    let mut solved = 0;
    let mut worst = 0.0f64;
    for i in 0..300 {
        let n = rng.gen_range(1..=14);
        let density = rng.gen_range(0.1..0.8);
        let kappa = rng.gen_range(1..=5);
        let inst = if i % 5 == 0 {
            Instance::with_full_lists(common::random_graph(&mut rng, n, density), kappa)
        } else {
            common::random_instance(&mut rng, n, density, kappa)
        };
        let result = solve(&inst).map_err(|e| e.to_string())?;
        let reduced = preprocess_long_lists(&inst, LongListRule::Order).reduced;
        let fit = fit_constant(reduced.graph());
        let bound = predicted_work(reduced.order(), fit.t);
        ensure!(
            result.stats.reduced_order == reduced.order() && result.stats.fit.t == fit.t,
            "stats disagree with an independent preprocessing run"
        );
        for (round, &scans) in result.stats.scans_per_round.iter().enumerate() {
            ensure!(
                scans as f64 <= bound,
                "round {} scanned {scans} pairs, bound {bound} (n'={}, t={})",
                round + 1,
                reduced.order(),
                fit.t
            );
            if bound > 0.0 {
                worst = worst.max(scans as f64 / bound);
            }
        }
        solved += 1;
    }
    for n in 0..=20 {
        for t in [1.0, TRIANGLE_FREE_FIT, GENERAL_FIT] {
            let closed = predicted_work(n, t);
            let sum = binomial_work(n, t);
            let scale = sum.abs().max(f64::MIN_POSITIVE);
            ensure!(
                closed == sum || (closed - sum).abs() <= RELATIVE_TOLERANCE * scale,
                "predicted_work({n}, {t}) = {closed} vs binomial sum {sum}"
            );
        }
    }
    Ok(format!(
        "{solved} solves with n<=14 within (1+t)^n'-1 per round (max ratio {worst:.4}); closed form matches binomial sum for n<=20 at rel {RELATIVE_TOLERANCE:e}"
    ))
}

fn invariants() -> Verdict {
    let mut rng = common::rng(5);
    let instances = 150;
    for _ in 0..instances {
        let n = rng.gen_range(1..=9);
        let kappa = rng.gen_range(1..=4);
        let density = rng.gen_range(0.1..0.8);
        let inst = common::random_instance(&mut rng, n, density, kappa);
        let tables = build_tables(&inst);
        for (i, table) in tables.tables.iter().enumerate() {
            let bad = table.pip_violations();
            ensure!(bad.is_empty(), "PIP fails at level {}: {:?}", i + 1, &bad[..bad.len().min(3)]);
            if i > 0 {
                let prev = &tables.tables[i - 1];
                for bits in 0..1u32 << n {
                    let w = VertexSubset::from_bits(bits);
                    ensure!(!prev.get(w) || table.get(w), "level {} drops {w:?}", i + 1);
                }
            }
        }
    }
    let pairs = 150;
    let mut sat = 0;
    for _ in 0..pairs {
        let n = rng.gen_range(1..=10);
        let kappa = rng.gen_range(1..=4);
        let density = rng.gen_range(0.1..0.8);
        let inst = common::random_instance(&mut rng, n, density, kappa);
        let vertices = common::shuffled(&mut rng, n);
        let colors: Vec<Color> = common::shuffled(&mut rng, kappa as usize)
            .into_iter()
            .map(|c| c as Color + 1)
            .collect();
        let other = common::relabel(&inst, &vertices, &colors);
        let a = solve(&inst).map_err(|e| e.to_string())?;
        let b = solve(&other).map_err(|e| e.to_string())?;
        ensure!(a.is_sat() == b.is_sat(), "relabeling flips the decision of {inst:?}");
        sat += a.is_sat() as usize;
    }
    Ok(format!(
        "PIP and monotonicity hold on {instances} instances; {pairs} relabeled pairs agree ({sat} SAT)"
    ))
}

fn peak_rss_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kib: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kib * 1024)
}

fn desk_scale() -> Verdict {
    let mut rng = common::rng(6);
    let g = common::random_graph(&mut rng, 18, 0.3);
    let lists = common::random_lists(&mut rng, 18, 5, 0.6);
    let inst = Instance::new(g, 5, lists).unwrap();
    let start = Instant::now();
    let result = solve(&inst).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(elapsed < PERF_LIMIT, "n=18 took {elapsed:?}");
    if let Some(f) = result.coloring() {
        ensure!(validate_coloring(&inst, f).unwrap().is_ok(), "invalid n=18 coloring");
    }

    let g = common::random_graph(&mut rng, 22, 0.3);
    let big = Instance::with_full_lists(g, 5);
    let start22 = Instant::now();
    let result22 = solve(&big).map_err(|e| e.to_string())?;
    let elapsed22 = start22.elapsed();
    let tables = result22.stats.table_bytes as u64;
    ensure!(tables < MEMORY_LIMIT_BYTES, "n=22 tables hold {tables} bytes");
    let rss = peak_rss_bytes();
    if let Some(rss) = rss {
        ensure!(rss < MEMORY_LIMIT_BYTES, "peak RSS {rss} bytes at n=22");
    }
    Ok(format!(
        "n=18 d=0.3 k=5 {} in {:.2?}; n=22 {} in {:.2?}, tables {} KiB, peak RSS {}",
        if result.is_sat() { "SAT" } else { "UNSAT" },
        elapsed,
        if result22.is_sat() { "SAT" } else { "UNSAT" },
        elapsed22,
        tables / 1024,
        rss.map_or("unavailable".to_string(), |b| format!("{} MiB", b >> 20))
    ))
}

fn preprocessing() -> Verdict {
    let mut rng = common::rng(7);
    let mut cases = 0;
    for n in 1..=12 {
        let mut graphs = vec![common::complete(n), Graph::empty(n).unwrap()];
        for _ in 0..4 {
            let density = rng.gen_range(0.1..0.9);
            graphs.push(common::random_graph(&mut rng, n, density));
        }
        for g in graphs {
            for kappa in n as Color..=n as Color + 2 {
                let inst = Instance::with_full_lists(g.clone(), kappa);
                let pre = preprocess_long_lists(&inst, LongListRule::Order);
                ensure!(pre.set_aside.len() == n, "n={n} kappa={kappa}: {} set aside", pre.set_aside.len());
                ensure!(pre.reduced.order() == 0, "reduced instance not empty");
                let result = solve(&inst).map_err(|e| e.to_string())?;
                ensure!(result.stats.total_scans == 0, "table rounds ran");
                let f = result.coloring().ok_or("UNSAT with kappa >= n")?;
                ensure!(validate_coloring(&inst, f).unwrap().is_ok(), "greedy coloring invalid");
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} full-list instances with kappa>=n colored by the greedy finish alone"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("decision correctness", decision_correctness),
        ("table semantics", table_semantics),
        ("MIS enumeration", mis_enumeration),
        ("work bound", work_bound),
        ("invariant suite", invariants),
        ("desk-scale performance", desk_scale),
        ("preprocessing", preprocessing),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let took = start.elapsed();
        match verdict {
            Ok(detail) => println!("[PASS] {}. {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {}. {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
