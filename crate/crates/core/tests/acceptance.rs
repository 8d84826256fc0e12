//! Acceptance suite. Runs every criterion in order, prints one PASS/FAIL line
//! for each and exits non-zero if any failed.

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ipierce::bounds::{lb_piercing, lb_union};
use ipierce::coverage::{gen_chain, oracle_coverage, solve_coverage, CoverageVerdict};
use ipierce::generate::{random_coverage, random_piercing};
use ipierce::piercing::{
    check_minimality, gen_staircase_literal, gen_staircase_minimal, oracle_piercing, piercing_grid_points,
    solve_piercing,
};
use ipierce::sorting::merge_sort_counted;
use ipierce::{CoverageInstance, Cross, Interval, Permutation, PiercingInstance, QueryCounter, Rank};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Arms = ((Rank, Rank), (Rank, Rank));

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("coverage solver agrees with the cell oracle", coverage_equivalence),
        ("piercing solver agrees with the grid oracle", piercing_equivalence),
        ("chains are covered and minimal under deletion and flips", chain_family),
        ("staircase families are minimal non-pierceable", staircase_family),
        ("literal 8-cross staircase has the single grid point (a_0, c_0)", literal_staircase),
        ("merge sort stays within nN comparisons", sort_budget),
        ("lower bound values", bound_values),
        ("piercing comparisons scale like N log N", piercing_scaling),
        ("CLI generate and bench are byte-identical across runs", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {}: {name} ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {}: {name} ({detail}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn within(started: Instant, limit: Duration, detail: String) -> Outcome {
    let took = started.elapsed();
    if took < limit {
        Ok(detail)
    } else {
        Err(format!("{detail}, but took {took:.1?} against a limit of {limit:?}"))
    }
}

fn same_coverage(solver: &CoverageVerdict, oracle: &CoverageVerdict) -> bool {
    solver.covered == oracle.covered && solver.gap_witness == oracle.gap_witness
}

fn check_coverage(inst: &CoverageInstance) -> Result<(), String> {
    let mut counter = QueryCounter::new();
    let s = solve_coverage(inst, &mut counter);
    let o = oracle_coverage(inst);
    if same_coverage(&s, &o) && s.witness_is_sound(inst) && s.queries_used == counter.comparisons() {
        Ok(())
    } else {
        Err(format!("disagreement on {inst:?}: solver {s:?}, oracle {o:?}"))
    }
}

/// Visits every family of at most `max_n` intervals drawn from `pool`, as
/// multisets (`repeat`) or as sets, in non-decreasing pool order.
fn each_family(
    inst: &mut CoverageInstance,
    pool: &[Interval],
    from: usize,
    max_n: usize,
    repeat: bool,
    visit: &mut dyn FnMut(&CoverageInstance) -> Result<(), String>,
) -> Result<u64, String> {
    visit(inst)?;
    let mut seen = 1;
    if inst.intervals.len() == max_n {
        return Ok(seen);
    }
    for j in from..pool.len() {
        inst.intervals.push(pool[j]);
        let next = if repeat { j } else { j + 1 };
        let r = each_family(inst, pool, next, max_n, repeat, visit);
        inst.intervals.pop();
        seen += r?;
    }
    Ok(seen)
}

fn exhaustive_coverage(top: Rank, repeat: bool) -> Result<u64, String> {
    let pool: Vec<Interval> =
        (0..=top).flat_map(|lo| (lo..=top).map(move |hi| Interval::of(lo, hi))).collect();
    let mut inst = CoverageInstance::new(Interval::of(0, top), Vec::with_capacity(8));
    each_family(&mut inst, &pool, 0, 8, repeat, &mut check_coverage)
}

fn random_coverage_instance(rng: &mut ChaCha8Rng) -> CoverageInstance {
    let n = rng.gen_range(0..=200usize);
    match rng.gen_range(0..3) {
        0 => random_coverage(n, rng),
        1 => {
            // long intervals over a span that makes covering plausible
            let top = rng.gen_range(1..=(n as Rank + 2));
            let intervals = (0..n)
                .map(|_| {
                    let lo = rng.gen_range(0..=top);
                    let len = rng.gen_range(0..=top / 4 + 1);
                    Interval::of(lo, (lo + len).min(top))
                })
                .collect();
            CoverageInstance::new(Interval::of(0, top), intervals)
        }
        _ => {
            // a chain with a few links removed or broken
            let n = n.max(2);
            let chain = gen_chain(&Permutation::random(n, rng)).unwrap();
            let mut inst = chain.instance().clone();
            for _ in 0..rng.gen_range(0..3) {
                if inst.intervals.len() > 1 {
                    let i = rng.gen_range(0..inst.intervals.len());
                    inst = inst.without(i);
                }
            }
            inst
        }
    }
}

/// Exhaustive: every set of distinct intervals with N <= 8 over 8 rank
/// values, and every multiset with N <= 8 over up to 6 rank values.
fn coverage_equivalence() -> Outcome {
    let started = Instant::now();
    let mut checked = 0;
    for top in 1..=7 {
        checked += exhaustive_coverage(top, false)?;
    }
    for top in 1..=5 {
        checked += exhaustive_coverage(top, true)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10_000 {
        check_coverage(&random_coverage_instance(&mut rng))?;
    }
    within(started, Duration::from_secs(60), format!("{checked} exhaustive families and 10000 random"))
}

fn check_piercing(inst: &PiercingInstance) -> Result<(), String> {
    let mut counter = QueryCounter::new();
    let s = solve_piercing(inst, &mut counter);
    let o = oracle_piercing(inst);
    let pointwise = |w: Option<(Rank, Rank)>| match w {
        Some((x, y)) => inst.crosses.iter().all(|c| c.h.contains(x) || c.v.contains(y)),
        None => true,
    };
    if s.pierceable == o.pierceable
        && s.witness.is_some() == s.pierceable
        && pointwise(s.witness)
        && pointwise(o.witness)
        && s.queries_used == counter.comparisons()
    {
        Ok(())
    } else {
        Err(format!("disagreement on {inst:?}: solver {s:?}, oracle {o:?}"))
    }
}

fn random_piercing_instance(rng: &mut ChaCha8Rng) -> PiercingInstance {
    let n = rng.gen_range(0..=60usize);
    if rng.gen_bool(0.5) {
        return random_piercing(n, rng);
    }
    // narrow arms on a small grid: infeasible families are common here
    let (xt, yt) = (rng.gen_range(1..=(n as Rank + 1)), rng.gen_range(1..=(n as Rank + 1)));
    let arm = |rng: &mut ChaCha8Rng, top: Rank| {
        let lo = rng.gen_range(0..=top);
        Interval::of(lo, (lo + rng.gen_range(0..=2)).min(top))
    };
    let crosses = (0..n).map(|_| Cross::new(arm(rng, xt), arm(rng, yt))).collect();
    PiercingInstance::new(Interval::of(0, xt), Interval::of(0, yt), crosses)
}

/// Exhaustive: every sequence of at most 3 crosses on the 4 x 4 rank grid.
fn piercing_equivalence() -> Outcome {
    let started = Instant::now();
    let arms: Vec<Interval> = (0..4).flat_map(|lo| (lo..4).map(move |hi| Interval::of(lo, hi))).collect();
    let pool: Vec<Cross> = arms.iter().flat_map(|&h| arms.iter().map(move |&v| Cross::new(h, v))).collect();
    let dom = Interval::of(0, 3);
    let mut checked = 0u64;
    let mut inst = PiercingInstance::new(dom, dom, Vec::new());
    check_piercing(&inst)?;
    checked += 1;
    for &p in &pool {
        inst.crosses = vec![p];
        check_piercing(&inst)?;
        checked += 1;
        for &q in &pool {
            inst.crosses = vec![p, q];
            check_piercing(&inst)?;
            checked += 1;
            for &r in &pool {
                inst.crosses = vec![p, q, r];
                check_piercing(&inst)?;
                checked += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10_000 {
        check_piercing(&random_piercing_instance(&mut rng))?;
    }
    within(started, Duration::from_secs(120), format!("{checked} exhaustive families and 10000 random"))
}

fn chain_family() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let covered = |inst: &CoverageInstance| solve_coverage(inst, &mut QueryCounter::new()).covered;
    let mut chains = 0;
    for n in 2..=100 {
        for _ in 0..20 {
            let perm = Permutation::random(n, &mut rng);
            let chain = gen_chain(&perm).map_err(|e| e.to_string())?;
            let inst = chain.instance();
            if !covered(inst) {
                return Err(format!("chain {perm:?} not covered"));
            }
            if let Some(i) = (0..n).find(|&i| covered(&inst.without(i))) {
                return Err(format!("chain {perm:?} still covered without interval {i}"));
            }
            for k in 2..=n {
                let flipped = chain.flip_link(k).map_err(|e| e.to_string())?;
                if covered(&flipped) {
                    return Err(format!("chain {perm:?} still covered after flipping link {k}"));
                }
            }
            chains += 1;
        }
    }
    Ok(format!("{chains} chains"))
}

fn block(top: Rank, crosses: &[Arms]) -> PiercingInstance {
    let dom = Interval::of(0, top);
    PiercingInstance::new(dom, dom, crosses.iter().map(|&(h, v)| Cross::of(h, v)).collect())
}

fn staircase_family() -> Outcome {
    for n in 3..=12 {
        let inst = gen_staircase_minimal(n).map_err(|e| e.to_string())?;
        let report = check_minimality(&inst);
        if report.full_family_pierceable || !report.each_deletion_pierceable.iter().all(|&b| b) {
            return Err(format!("n = {n}: {report:?}"));
        }
        if report.each_deletion_pierceable.len() != n {
            return Err(format!("n = {n}: {} deletions checked", report.each_deletion_pierceable.len()));
        }
    }
    let four = block(3, &[((0, 1), (0, 1)), ((2, 3), (2, 3)), ((0, 1), (2, 3)), ((2, 3), (0, 1))]);
    let six = block(
        8,
        &[((2, 8), (2, 8)), ((3, 8), (0, 1)), ((0, 1), (4, 8)), ((6, 8), (0, 3)), ((0, 4), (0, 5)), ((0, 5), (6, 8))],
    );
    for (n, expected) in [(4, four), (6, six)] {
        let got = gen_staircase_minimal(n).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("n = {n}: generated {got:?}"));
        }
    }
    Ok("sizes 3 to 12; fixed vectors for 4 and 6 match".into())
}

fn literal_staircase() -> Outcome {
    let inst = gen_staircase_literal(8, &Permutation::identity(8)).map_err(|e| e.to_string())?;
    let points = piercing_grid_points(&inst);
    let corner = (inst.xdomain.lo(), inst.ydomain.lo());
    if points == [corner] {
        Ok(format!("only {corner:?}"))
    } else {
        Err(format!("piercing grid points {points:?}, expected only {corner:?}"))
    }
}

fn sort_budget() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut sorts = 0;
    for n in 1..=14u32 {
        let len = 1usize << n;
        let budget = u64::from(n) * len as u64;
        let ascending: Vec<u64> = (0..len as u64).collect();
        let mut inputs = vec![ascending.clone(), ascending.iter().rev().copied().collect()];
        for _ in 0..100 {
            let mut keys = ascending.clone();
            keys.shuffle(&mut rng);
            inputs.push(keys);
        }
        for keys in &inputs {
            let mut counter = QueryCounter::new();
            let sorted = merge_sort_counted(keys, &mut counter);
            if counter.comparisons() > budget || !sorted.apply(keys).is_sorted() {
                return Err(format!("N = {len}: {} comparisons, budget {budget}", counter.comparisons()));
            }
            sorts += 1;
        }
    }
    Ok(format!("{sorts} sorts"))
}

fn bound_values() -> Outcome {
    let checks = [
        ("lb_union(8)", lb_union(8), 5.9186, 1e-3),
        ("lb_piercing(9)", lb_piercing(9), 2.7738, 1e-3),
    ];
    for (name, got, want, tol) in checks {
        if (got - want).abs() > tol {
            return Err(format!("{name} = {got}, expected {want} +- {tol}"));
        }
    }
    if lb_union(3) != 1.0 {
        return Err(format!("lb_union(3) = {:?}, expected exactly 1", lb_union(3)));
    }
    if let Some(n) = (1..=10_000u64).find(|&n| lb_union(n) < lb_union(n - 1)) {
        return Err(format!("lb_union decreases at {n}"));
    }
    Ok(format!("lb_union(8) = {:.4}, lb_piercing(9) = {:.4}", lb_union(8), lb_piercing(9)))
}

fn piercing_scaling() -> Outcome {
    const TRIALS: u64 = 20;
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut means = Vec::new();
    for n in (10..=16).map(|p| 1usize << p) {
        let mut total = 0;
        for _ in 0..TRIALS {
            let inst = random_piercing(n, &mut rng);
            let mut counter = QueryCounter::new();
            solve_piercing(&inst, &mut counter);
            total += counter.comparisons();
        }
        means.push((n, total as f64 / TRIALS as f64));
    }
    let ratios: Vec<f64> = means.windows(2).map(|w| w[1].1 / w[0].1).collect();
    let detail = format!(
        "ratios {}",
        ratios.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>().join(", ")
    );
    if let Some((i, r)) = ratios.iter().enumerate().find(|(_, &r)| r > 2.6) {
        return Err(format!("count({})/count({}) = {r:.3} exceeds 2.6", means[i + 1].0, means[i].0));
    }
    within(started, Duration::from_secs(300), detail)
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ipierce")).args(args).output().map_err(|e| e.to_string())?;
    if out.status.success() {
        Ok(out.stdout)
    } else {
        Err(format!("{args:?} exited with {}: {}", out.status, String::from_utf8_lossy(&out.stderr)))
    }
}

fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let read = |p: &str| std::fs::read(Path::new(p)).map_err(|e| e.to_string());
    let mut compared = 0;
    for (family, n) in [("chain", "40"), ("random-coverage", "50"), ("random-piercing", "50"), ("staircase-literal", "9")] {
        let first = run_cli(&["generate", "--family", family, "--n", n, "--seed", "17"])?;
        let second = run_cli(&["generate", "--family", family, "--n", n, "--seed", "17"])?;
        let (f1, f2) = (path("g1.json"), path("g2.json"));
        run_cli(&["generate", "--family", family, "--n", n, "--seed", "17", "--out", &f1])?;
        run_cli(&["generate", "--family", family, "--n", n, "--seed", "17", "--out", &f2])?;
        if first != second || read(&f1)? != read(&f2)? || read(&f1)? != first {
            return Err(format!("generate --family {family} differs between runs"));
        }
        compared += 1;
    }
    let bench = |out: &str| {
        run_cli(&[
            "bench", "--family", "chain,random-coverage,random-piercing,staircase", "--n", "5..40", "--trials", "3",
            "--seed", "17", "--out", out,
        ])
    };
    let (b1, b2) = (path("b1.csv"), path("b2.csv"));
    bench(&b1)?;
    bench(&b2)?;
    if read(&b1)? != read(&b2)? {
        return Err("bench output differs between runs".into());
    }
    compared += 1;
    Ok(format!("{compared} output pairs identical"))
}
