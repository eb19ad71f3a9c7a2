use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};

use plutus_core::bench::{render_table, run_bench, BenchConfig};
use plutus_core::dot::to_dot;
use plutus_core::io::{instance_to_json, parse_graph_json, parse_result_json, result_to_json};
use plutus_core::verify::{backbone_stretch, is_m_connected_k_dominating};
use plutus_core::{brute_force_min_mcds, random_geometric, Graph, PlutusConfig, PlutusError};

use crate::manifest::{manifest_path, Command, InstanceParams, RunManifest};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_PREFLIGHT: u8 = 3;
pub const EXIT_INFEASIBLE: u8 = 4;
pub const EXIT_ITERATION_CAP: u8 = 5;
pub const EXIT_VERIFICATION: u8 = 6;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            error: error.into(),
        }
    }

    fn io(error: impl Into<anyhow::Error>) -> Self {
        Failure::new(EXIT_FAILURE, error)
    }

    fn parse(error: impl Into<anyhow::Error>) -> Self {
        Failure::new(EXIT_PARSE, error)
    }

    pub fn usage_msg(msg: String) -> Self {
        Failure::new(EXIT_PARSE, anyhow!(msg))
    }
}

pub fn exit_code(err: &PlutusError) -> u8 {
    match err {
        PlutusError::InvalidConfig(_) => EXIT_PARSE,
        PlutusError::EmptyGraph
        | PlutusError::DisconnectedInput
        | PlutusError::GraphNotMConnected { .. } => EXIT_PREFLIGHT,
        PlutusError::InfeasibleKDominance { .. }
        | PlutusError::Infeasible2Connectivity { .. }
        | PlutusError::Infeasible3Connectivity { .. }
        | PlutusError::BackboneDisconnected { .. } => EXIT_INFEASIBLE,
        PlutusError::IterationCapExceeded { .. } => EXIT_ITERATION_CAP,
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let bytes = fs::read(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::io)?;
    parse_graph_json(&bytes)
        .with_context(|| format!("parsing {}", path.display()))
        .map(|input| input.graph)
        .map_err(Failure::parse)
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)
            .with_context(|| format!("creating {}", dir.display()))
            .map_err(Failure::io)?;
    }
    fs::write(path, body)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(Failure::io)
}

/// Writes `body` to `out` with its manifest, or prints it when there is no
/// output path.
fn emit(
    out: Option<&Path>,
    body: &str,
    manifest: impl FnOnce(PathBuf) -> RunManifest,
) -> Result<(), Failure> {
    match out {
        Some(path) => {
            write_file(path, &format!("{body}\n"))?;
            let manifest = manifest(path.to_path_buf());
            let json = serde_json::to_string_pretty(&manifest).expect("manifests serialize");
            write_file(&manifest_path(path), &format!("{json}\n"))
        }
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

pub fn generate(
    n: usize,
    radius: f64,
    seed: u64,
    count: u64,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    for i in 0..count {
        let s = seed.wrapping_add(i);
        let instance = random_geometric(n, radius, s).map_err(Failure::parse)?;
        let body = instance_to_json(&instance);
        let file = out.map(|dir| dir.join(format!("udg-n{n}-s{s}.json")));
        emit(file.as_deref(), &body, |output| {
            let mut m = RunManifest::new(Command::Generate, s, Vec::new(), output);
            m.instances = Some(InstanceParams {
                n: vec![n],
                radius,
                seeds: vec![s],
            });
            m
        })?;
    }
    Ok(EXIT_OK)
}

pub fn solve(
    input: &Path,
    cfg: &PlutusConfig,
    seed: u64,
    out: Option<&Path>,
    dot: bool,
) -> Result<u8, Failure> {
    cfg.validate().map_err(Failure::parse)?;
    let g = read_graph(input)?;
    let result = plutus_core::run_plutus(&g, cfg).map_err(|e| Failure::new(exit_code(&e), e))?;
    let manifest = |output| {
        let mut m = RunManifest::new(Command::Solve, seed, vec![input.to_path_buf()], output);
        m.config = Some(cfg.into());
        m
    };
    emit(out, &result_to_json(&result), manifest)?;
    if dot {
        let path = out.expect("--dot requires --out").with_extension("dot");
        write_file(&path, &to_dot(&g, &result))?;
    }
    Ok(EXIT_OK)
}

pub fn verify(
    graph: &Path,
    result: &Path,
    k: Option<usize>,
    m: Option<u8>,
    stretch_bound: f64,
    seed: u64,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let g = read_graph(graph)?;
    let bytes = fs::read(result)
        .with_context(|| format!("reading {}", result.display()))
        .map_err(Failure::io)?;
    let res = parse_result_json(&bytes)
        .with_context(|| format!("parsing {}", result.display()))
        .map_err(Failure::parse)?;
    let n = g.node_count();
    if res.roles.len() != n {
        return Err(Failure::parse(anyhow!(
            "result covers {} nodes, graph has {n}",
            res.roles.len()
        )));
    }
    if let Some(&v) = res.dominating_set.iter().find(|&&v| v >= n) {
        return Err(Failure::parse(anyhow!(
            "backbone node {v} is outside a graph of {n} nodes"
        )));
    }
    let k = k.unwrap_or(res.k);
    let m = m.unwrap_or(res.m);
    if k == 0 {
        return Err(Failure::usage_msg("k must be positive".into()));
    }
    let mut report = is_m_connected_k_dominating(&g, &res.dominating_set, k, m);
    let stretch = backbone_stretch(&g, &res.dominating_set);
    if let (true, Some((u, v))) = (stretch.max > stretch_bound, stretch.pair) {
        eprintln!(
            "warning: backbone stretch {:.3} between {u} and {v} exceeds {stretch_bound}",
            stretch.max
        );
    }
    report.stretch = Some(stretch);
    let body = serde_json::to_string(&report).expect("reports serialize");
    emit(out, &body, |output| {
        let mut manifest = RunManifest::new(
            Command::Verify,
            seed,
            vec![graph.to_path_buf(), result.to_path_buf()],
            output,
        );
        manifest.config = Some((&PlutusConfig::new(k, m)).into());
        manifest
    })?;
    Ok(if report.overall {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    })
}

pub fn oracle(
    graph: &Path,
    k: usize,
    m: u8,
    max_size: Option<usize>,
    seed: u64,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    let g = read_graph(graph)?;
    let found = brute_force_min_mcds(&g, k, m, max_size).map_err(Failure::parse)?;
    let body = serde_json::to_string(&found).expect("oracle results serialize");
    emit(out, &body, |output| {
        let mut manifest =
            RunManifest::new(Command::Oracle, seed, vec![graph.to_path_buf()], output);
        manifest.config = Some((&PlutusConfig::new(k, m)).into());
        manifest
    })?;
    Ok(EXIT_OK)
}

pub fn bench(
    ns: Vec<usize>,
    radius: f64,
    seeds: Vec<u64>,
    cfg: &PlutusConfig,
    oracle: bool,
    seed: u64,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    cfg.validate().map_err(Failure::parse)?;
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Failure::usage_msg(format!(
            "radius must be positive, got {radius}"
        )));
    }
    let params = InstanceParams {
        n: ns.clone(),
        radius,
        seeds: seeds.clone(),
    };
    let summary = run_bench(&BenchConfig {
        ns,
        radius,
        seeds,
        plutus: *cfg,
        oracle,
    });
    print!("{}", render_table(&summary));
    if let Some(path) = out {
        let body = serde_json::to_string_pretty(&summary).expect("summaries serialize");
        emit(Some(path), &body, |output| {
            let mut manifest = RunManifest::new(Command::Bench, seed, Vec::new(), output);
            manifest.config = Some(cfg.into());
            manifest.instances = Some(params);
            manifest
        })?;
    }
    Ok(EXIT_OK)
}
