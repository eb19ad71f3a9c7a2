//! Batch runs over seeded random geometric instances.
//!
//! Rows come back in `(n, seed)` order whatever the worker scheduling.
//! Everything except the `*_us` timing fields is deterministic.

use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::connectivity::is_m_connected;
use crate::oracle::{brute_force_min_mcds, MAX_ORACLE_NODES};
use crate::pipeline::{run_plutus_timed, PlutusConfig};
use crate::udg::random_geometric;
use crate::verify::{backbone_stretch, is_m_connected_k_dominating};

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub ns: Vec<usize>,
    pub radius: f64,
    pub seeds: Vec<u64>,
    pub plutus: PlutusConfig,
    /// Also run the exhaustive oracle on instances small enough for it.
    pub oracle: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseSize {
    pub phase: &'static str,
    pub size: usize,
    pub time_us: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub seed: u64,
    /// Why the instance was not solved; `None` for solved rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub phases: Vec<PhaseSize>,
    pub size: Option<usize>,
    pub verified: Option<bool>,
    pub max_stretch: Option<f64>,
    pub optimum: Option<usize>,
    pub ratio: Option<f64>,
}

impl BenchRow {
    fn skipped(n: usize, seed: u64, reason: String) -> Self {
        BenchRow {
            n,
            seed,
            skipped: Some(reason),
            phases: Vec::new(),
            size: None,
            verified: None,
            max_stretch: None,
            optimum: None,
            ratio: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchAggregate {
    pub rows: usize,
    pub solved: usize,
    pub skipped: usize,
    pub verified: usize,
    pub mean_size: Option<f64>,
    pub mean_max_stretch: Option<f64>,
    pub mean_ratio: Option<f64>,
    pub max_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchSummary {
    pub k: usize,
    pub m: u8,
    pub radius: f64,
    pub rows: Vec<BenchRow>,
    pub aggregate: BenchAggregate,
}

pub fn bench_row(n: usize, radius: f64, seed: u64, cfg: &PlutusConfig, oracle: bool) -> BenchRow {
    let instance = match random_geometric(n, radius, seed) {
        Ok(inst) => inst,
        Err(err) => return BenchRow::skipped(n, seed, err.to_string()),
    };
    let g = instance.graph();
    if !g.is_connected() {
        return BenchRow::skipped(n, seed, "disconnected".into());
    }
    if cfg.m >= 2 && !is_m_connected(&g, &g.nodes().collect(), cfg.m) {
        return BenchRow::skipped(n, seed, format!("not {}-connected", cfg.m));
    }
    let (result, timings) = match run_plutus_timed(&g, cfg) {
        Ok(out) => out,
        Err(err) => return BenchRow::skipped(n, seed, err.to_string()),
    };
    let phases = result
        .phase_trace
        .iter()
        .zip(&timings)
        .map(|(rec, (_, t))| PhaseSize {
            phase: rec.phase.as_str(),
            size: rec.size,
            time_us: t.as_micros() as u64,
        })
        .collect();
    let d = &result.dominating_set;
    let verified = is_m_connected_k_dominating(&g, d, cfg.k, cfg.m).overall;
    let optimum = (oracle && n <= MAX_ORACLE_NODES)
        .then(|| brute_force_min_mcds(&g, cfg.k, cfg.m, None).ok())
        .flatten()
        .and_then(|r| r.optimum_size);
    BenchRow {
        n,
        seed,
        skipped: None,
        phases,
        size: Some(d.len()),
        verified: Some(verified),
        max_stretch: Some(backbone_stretch(&g, d).max),
        optimum,
        ratio: optimum.map(|opt| d.len() as f64 / opt as f64),
    }
}

fn mean(values: &[f64]) -> Option<f64> {
    (!values.is_empty()).then(|| values.iter().sum::<f64>() / values.len() as f64)
}

pub fn aggregate(rows: &[BenchRow]) -> BenchAggregate {
    let sizes: Vec<f64> = rows
        .iter()
        .filter_map(|r| r.size)
        .map(|s| s as f64)
        .collect();
    let stretches: Vec<f64> = rows.iter().filter_map(|r| r.max_stretch).collect();
    let ratios: Vec<f64> = rows.iter().filter_map(|r| r.ratio).collect();
    BenchAggregate {
        rows: rows.len(),
        solved: sizes.len(),
        skipped: rows.iter().filter(|r| r.skipped.is_some()).count(),
        verified: rows.iter().filter(|r| r.verified == Some(true)).count(),
        mean_size: mean(&sizes),
        mean_max_stretch: mean(&stretches),
        mean_ratio: mean(&ratios),
        max_ratio: ratios.iter().copied().reduce(f64::max),
    }
}

pub fn run_bench(cfg: &BenchConfig) -> BenchSummary {
    let jobs: Vec<(usize, u64)> = cfg
        .ns
        .iter()
        .flat_map(|&n| cfg.seeds.iter().map(move |&s| (n, s)))
        .collect();
    let rows: Vec<BenchRow> = jobs
        .par_iter()
        .map(|&(n, seed)| bench_row(n, cfg.radius, seed, &cfg.plutus, cfg.oracle))
        .collect();
    BenchSummary {
        k: cfg.plutus.k,
        m: cfg.plutus.m,
        radius: cfg.radius,
        aggregate: aggregate(&rows),
        rows,
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

fn opt_f(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), |x| format!("{x:.3}"))
}

/// Plain-text table, one line per row plus an aggregate footer.
pub fn render_table(summary: &BenchSummary) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>6} {:>6} {:>24} {:>6} {:>8} {:>8} {:>6} {:>10}",
        "n", "seed", "sizes", "|D|", "verified", "stretch", "opt", "total_us"
    )
    .unwrap();
    for row in &summary.rows {
        if let Some(reason) = &row.skipped {
            writeln!(out, "{:>6} {:>6} skipped: {reason}", row.n, row.seed).unwrap();
            continue;
        }
        let sizes: Vec<String> = row.phases.iter().map(|p| p.size.to_string()).collect();
        let total: u64 = row.phases.iter().map(|p| p.time_us).sum();
        writeln!(
            out,
            "{:>6} {:>6} {:>24} {:>6} {:>8} {:>8} {:>6} {:>10}",
            row.n,
            row.seed,
            sizes.join("/"),
            opt(row.size),
            opt(row.verified),
            opt_f(row.max_stretch),
            opt(row.optimum),
            total,
        )
        .unwrap();
    }
    let a = &summary.aggregate;
    writeln!(
        out,
        "rows {} solved {} skipped {} verified {} mean|D| {} mean_stretch {} mean_ratio {} max_ratio {}",
        a.rows,
        a.solved,
        a.skipped,
        a.verified,
        opt_f(a.mean_size),
        opt_f(a.mean_max_stretch),
        opt_f(a.mean_ratio),
        opt_f(a.max_ratio),
    )
    .unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(ns: Vec<usize>, seeds: Vec<u64>, radius: f64) -> BenchConfig {
        BenchConfig {
            ns,
            radius,
            seeds,
            plutus: PlutusConfig::new(1, 1),
            oracle: true,
        }
    }

    #[test]
    fn empty_seed_list() {
        let summary = run_bench(&config(vec![10], vec![], 0.5));
        assert!(summary.rows.is_empty());
        assert_eq!(summary.aggregate.mean_size, None);
    }

    #[test]
    fn rows_keep_input_order() {
        let summary = run_bench(&config(vec![12, 8], vec![3, 1, 2], 1.5));
        let keys: Vec<(usize, u64)> = summary.rows.iter().map(|r| (r.n, r.seed)).collect();
        assert_eq!(
            keys,
            vec![(12, 3), (12, 1), (12, 2), (8, 3), (8, 1), (8, 2)]
        );
        // r > sqrt(2) gives complete graphs, where one vertex is optimal
        for row in &summary.rows {
            assert_eq!(row.size, Some(1));
            assert_eq!(row.ratio, Some(1.0));
            assert_eq!(row.verified, Some(true));
        }
        assert_eq!(summary.aggregate.max_ratio, Some(1.0));
    }

    #[test]
    fn infeasible_rows_are_skipped() {
        let summary = run_bench(&config(vec![30], vec![1], 0.01));
        assert_eq!(summary.rows[0].skipped.as_deref(), Some("disconnected"));
        assert_eq!(summary.aggregate.skipped, 1);
        assert!(render_table(&summary).contains("skipped: disconnected"));
    }
}
