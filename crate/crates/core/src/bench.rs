//! Scaling measurements of the homology pipeline.

use std::time::{Duration, Instant};

use crate::algebra::{MonomialOrder, PolyRing, Rationals};
use crate::homology::{compute, HomologyError, HomologyOptions, StageTimings};
use crate::random::bench_bifiltration;

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub size: usize,
    pub fundamentals: usize,
    /// Stage timings summed over all dimensions.
    pub stages: StageTimings,
    /// Wall time of the whole pipeline.
    pub wall: Duration,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub seed: u64,
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of `log wall` against `log size`.
    pub slope: Option<f64>,
}

/// Runs the pipeline over the rationals on `bench_bifiltration(size, seed)`
/// for every size.
pub fn run_bench(sizes: &[usize], seed: u64, threads: Option<usize>) -> Result<BenchReport, HomologyError> {
    let ring = PolyRing::new(Rationals, 2, MonomialOrder::default());
    let options = HomologyOptions {
        threads,
        ..HomologyOptions::default()
    };
    let mut rows = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let mf = bench_bifiltration(size, seed);
        let start = Instant::now();
        let result = compute(&ring, &mf, &options)?;
        let wall = start.elapsed();
        let mut stages = StageTimings::default();
        for d in &result.dimensions {
            let t = &d.stats.timings;
            stages.presentation += t.presentation;
            stages.boundaries += t.boundaries;
            stages.syzygies += t.syzygies;
            stages.cycles += t.cycles;
            stages.homology += t.homology;
        }
        rows.push(BenchRow {
            size,
            fundamentals: result.dimensions.iter().map(|d| d.fundamentals).sum(),
            stages,
            wall,
        });
    }
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.size as f64, r.wall.as_secs_f64().max(1e-6)))
        .collect();
    Ok(BenchReport {
        seed,
        slope: log_log_slope(&points),
        rows,
    })
}

/// Slope of the least-squares line through `(ln x, ln y)`; `None` with
/// fewer than two distinct `x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if logs.len() < 2 || sxx <= 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
