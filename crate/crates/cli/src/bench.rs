//! Benchmark matrix: every (graph, k, algorithm) combination becomes one CSV
//! row. A failing row records its error and the matrix keeps going.

use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use kclique::listing::Scheme;
use kclique::{list, Algorithm, CliqueSink, EtPolicy, Graph, Result};
use serde::Serialize;

use crate::{list_config, read_graph, GenSpec, Rules};

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Generator spec; repeatable.
    #[arg(long = "gen", value_name = "SPEC")]
    pub generators: Vec<String>,
    /// Edge-list file; repeatable.
    #[arg(long = "input", value_name = "PATH")]
    pub inputs: Vec<PathBuf>,
    /// Clique sizes, e.g. `-k 4,5`.
    #[arg(short = 'k', required = true, value_delimiter = ',')]
    pub k: Vec<usize>,
    /// Algorithms to run; all four by default.
    #[arg(long = "algo", value_delimiter = ',', value_parser = crate::parse_algo)]
    pub algos: Vec<Algorithm>,
    #[arg(long, value_enum, default_value_t = Rules::R1r2)]
    pub rules: Rules,
    #[arg(long, default_value = "auto", value_parser = crate::parse_et)]
    pub et: EtPolicy,
    #[arg(long, default_value = "np", value_parser = crate::parse_scheme)]
    pub scheme: Scheme,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Per-row limit in seconds.
    #[arg(long, value_name = "SECONDS")]
    pub time_limit: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BenchRow {
    pub graph: String,
    pub k: usize,
    pub algo: String,
    pub count: Option<u64>,
    pub t_order: Option<f64>,
    pub t_list: Option<f64>,
    pub t_total: Option<f64>,
    pub pruned_r1: Option<u64>,
    pub pruned_r2: Option<u64>,
    pub et_fired: Option<u64>,
    pub error: String,
}

impl BenchRow {
    fn failed(graph: &str, k: usize, algo: Algorithm, error: String) -> Self {
        BenchRow {
            graph: graph.to_string(),
            k,
            algo: algo.to_string(),
            count: None,
            t_order: None,
            t_list: None,
            t_total: None,
            pruned_r1: None,
            pruned_r2: None,
            et_fired: None,
            error,
        }
    }
}

fn one_row(g: &Graph, label: &str, k: usize, algo: Algorithm, args: &BenchArgs) -> BenchRow {
    let cfg = match list_config(args.rules, args.et, args.scheme, args.threads, args.time_limit) {
        Ok(cfg) => cfg,
        Err(e) => return BenchRow::failed(label, k, algo, e.to_string()),
    };
    match list(g, k, algo, &cfg, &mut CliqueSink::counter()) {
        Ok(r) => BenchRow {
            graph: label.to_string(),
            k,
            algo: algo.to_string(),
            count: Some(r.count),
            t_order: Some(r.t_order.as_secs_f64()),
            t_list: Some(r.t_list.as_secs_f64()),
            t_total: Some(r.t_total().as_secs_f64()),
            pruned_r1: Some(r.stats.pruned_r1),
            pruned_r2: Some(r.stats.pruned_r2),
            et_fired: Some(r.stats.et_fired),
            error: String::new(),
        },
        Err(e) => BenchRow::failed(label, k, algo, e.to_string()),
    }
}

/// Runs the whole matrix. Graphs are visited in the order given, generators
/// first.
pub fn bench_rows(args: &BenchArgs) -> Vec<BenchRow> {
    let algos: Vec<Algorithm> = if args.algos.is_empty() {
        Algorithm::ALL.to_vec()
    } else {
        args.algos.clone()
    };
    let mut sources: Vec<(String, Result<Graph>)> = Vec::new();
    for spec in &args.generators {
        let g = spec.parse::<GenSpec>().map(|s| s.build(args.seed));
        sources.push((spec.clone(), g));
    }
    for path in &args.inputs {
        sources.push((path.display().to_string(), read_graph(path)));
    }

    let mut rows = Vec::new();
    for (label, graph) in &sources {
        for &k in &args.k {
            for &algo in &algos {
                rows.push(match graph {
                    Ok(g) => one_row(g, label, k, algo, args),
                    Err(e) => BenchRow::failed(label, k, algo, e.to_string()),
                });
            }
        }
    }
    rows
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}
