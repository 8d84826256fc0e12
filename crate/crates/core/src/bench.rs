//! Benchmark sweep: measured query counts next to the matching lower bound.

use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::bounds::{lb_piercing, lb_union};
use crate::error::Result;
use crate::generate::{generate, Family};
use crate::query::QueryCounter;
use crate::verdict::solve;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub families: Vec<Family>,
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Record wall time per run. Off by default: timings are the only
    /// non-reproducible column.
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub family: String,
    pub n: usize,
    pub trial: usize,
    pub comparisons: u64,
    pub verdict: String,
    pub lower_bound: f64,
    pub wall_time_ns: u64,
}

/// Runs every `(family, n, trial)` cell in that order, each with a fresh
/// counter and its own derived seed.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::with_capacity(config.families.len() * config.sizes.len() * config.trials);
    for &family in &config.families {
        for &n in &config.sizes {
            let lower_bound = if family.is_coverage() { lb_union(n as u64) } else { lb_piercing(n as u64) };
            for trial in 0..config.trials {
                let instance = generate(family, n, family.cell_seed(config.seed, n, trial))?;
                let mut counter = QueryCounter::new();
                let started = Instant::now();
                let verdict = solve(&instance, &mut counter);
                let elapsed = started.elapsed().as_nanos() as u64;
                records.push(BenchRecord {
                    family: family.as_str().to_string(),
                    n,
                    trial,
                    comparisons: counter.comparisons(),
                    verdict: verdict.label().to_string(),
                    lower_bound,
                    wall_time_ns: if config.timing { elapsed } else { 0 },
                });
            }
        }
    }
    Ok(records)
}

/// CSV with header `family,n,trial,comparisons,verdict,lower_bound,wall_time_ns`.
pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(["family", "n", "trial", "comparisons", "verdict", "lower_bound", "wall_time_ns"])?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
