//! Command-line front end: graph loading, generator specs, single runs and
//! benchmark matrices.

pub mod bench;

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use kclique::listing::Scheme;
use kclique::stats::{graph_stats, GraphStats};
use kclique::{
    build_graph, generate, list, parse_edge_list, Algorithm, CliqueSink, Error, EtPolicy, Graph, ListConfig,
    ListReport, PruneConfig, Result,
};
use serde::Serialize;

pub const REPORT_SCHEMA: &str = "kclique.run/1";

#[derive(Debug, Parser)]
#[command(name = "kclique", version, about = "List or count k-cliques of a graph")]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a (graph x k x algorithm) matrix and print CSV rows.
    Bench(bench::BenchArgs),
}

/// Where the graph comes from.
#[derive(Debug, Clone, Args)]
#[group(multiple = false)]
pub struct SourceArgs {
    /// Edge-list file, one `u v` pair per line.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Synthetic graph: complete:N | bipartite:P[,Q] | gnp:N,P[,seed=S] | planted:N,P,K[,seed=S].
    #[arg(long = "gen", value_name = "SPEC")]
    pub generator: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Rules {
    None,
    R1,
    #[default]
    R1r2,
}

impl Rules {
    fn apply(self, prune: &mut PruneConfig) {
        prune.rule1 = self != Rules::None;
        prune.rule2 = self == Rules::R1r2;
    }

    pub fn name(self) -> &'static str {
        match self {
            Rules::None => "none",
            Rules::R1 => "r1",
            Rules::R1r2 => "r1r2",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub source: Option<SourceArgs>,
    #[arg(short = 'k')]
    pub k: Option<usize>,
    #[arg(long, default_value = "ebbkc-h", value_parser = parse_algo)]
    pub algo: Algorithm,
    /// Top-level work items of vbbkc: vertices (np) or edges (ep).
    #[arg(long, default_value = "np", value_parser = parse_scheme)]
    pub scheme: Scheme,
    #[arg(long, value_enum, default_value_t = Rules::R1r2)]
    pub rules: Rules,
    /// Early termination: none, auto or t=N.
    #[arg(long, default_value = "auto", value_parser = parse_et)]
    pub et: EtPolicy,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Count without materializing cliques.
    #[arg(long, conflicts_with = "output")]
    pub count_only: bool,
    /// Write each clique as one line of ascending vertex ids.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Print graph statistics as CSV instead of listing.
    #[arg(long)]
    pub stats: bool,
    #[arg(long, value_name = "SECONDS")]
    pub time_limit: Option<f64>,
    /// Seed for generators whose spec has none.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn parse_algo(s: &str) -> Result<Algorithm> {
    s.parse()
}

fn parse_scheme(s: &str) -> Result<Scheme> {
    s.parse()
}

fn parse_et(s: &str) -> Result<EtPolicy> {
    s.parse()
}

/// Parsed generator spec.
#[derive(Debug, Clone, PartialEq)]
pub enum GenSpec {
    Complete(usize),
    Bipartite(usize, usize),
    Gnp {
        n: usize,
        p: f64,
        seed: Option<u64>,
    },
    Planted {
        n: usize,
        p: f64,
        k: usize,
        seed: Option<u64>,
    },
}

impl GenSpec {
    pub fn build(&self, default_seed: u64) -> Graph {
        match *self {
            GenSpec::Complete(n) => generate::complete(n),
            GenSpec::Bipartite(p, q) => generate::bipartite(p, q),
            GenSpec::Gnp { n, p, seed } => generate::gnp(n, p, seed.unwrap_or(default_seed)),
            GenSpec::Planted { n, p, k, seed } => generate::planted_clique(n, p, k, seed.unwrap_or(default_seed)),
        }
    }
}

impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidArgument(format!("generator spec {spec:?}: {why}"));
        let (kind, rest) = spec.split_once(':').ok_or_else(|| bad("expected KIND:ARGS"))?;
        let mut seed = None;
        let mut args = Vec::new();
        for part in rest.split(',').map(str::trim) {
            match part.strip_prefix("seed=") {
                Some(s) => seed = Some(s.parse::<u64>().map_err(|_| bad("seed must be an integer"))?),
                None => args.push(part),
            }
        }
        let int = |s: &str| s.parse::<usize>().map_err(|_| bad("expected an integer"));
        let prob = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|p| (0.0..=1.0).contains(p))
                .ok_or_else(|| bad("probability must lie in [0, 1]"))
        };
        let spec = match (kind, args.as_slice()) {
            ("complete", [n]) => GenSpec::Complete(int(n)?),
            ("bipartite", [p]) => GenSpec::Bipartite(int(p)?, int(p)?),
            ("bipartite", [p, q]) => GenSpec::Bipartite(int(p)?, int(q)?),
            ("gnp", [n, p]) => GenSpec::Gnp {
                n: int(n)?,
                p: prob(p)?,
                seed,
            },
            ("planted", [n, p, k]) => GenSpec::Planted {
                n: int(n)?,
                p: prob(p)?,
                k: int(k)?,
                seed,
            },
            _ => return Err(bad("unknown kind or wrong number of arguments")),
        };
        if seed.is_some() && !matches!(spec, GenSpec::Gnp { .. } | GenSpec::Planted { .. }) {
            return Err(bad("this generator takes no seed"));
        }
        Ok(spec)
    }
}

pub fn read_graph(path: &std::path::Path) -> Result<Graph> {
    let file = File::open(path)?;
    Ok(build_graph(&parse_edge_list(BufReader::new(file))?))
}

/// Loads a graph from a file or generator spec; returns it with a label.
pub fn load_graph(source: &SourceArgs, default_seed: u64) -> Result<(Graph, String)> {
    match (&source.input, &source.generator) {
        (Some(path), _) => Ok((read_graph(path)?, path.display().to_string())),
        (None, Some(spec)) => Ok((spec.parse::<GenSpec>()?.build(default_seed), spec.clone())),
        (None, None) => Err(Error::InvalidArgument("either --input or --gen is required".into())),
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BranchStats {
    pub top_branches: u64,
    pub max_top_candidates: u64,
    pub pruned_size: u64,
    pub pruned_r1: u64,
    pub pruned_r2: u64,
    pub et_fired: u64,
}

/// One run, as printed on standard output.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RunReport {
    pub schema: &'static str,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub algorithm: String,
    pub scheme: &'static str,
    pub rules: &'static str,
    pub et: String,
    pub et_threshold: Option<u32>,
    pub threads: usize,
    pub count: u64,
    /// Seconds spent computing orderings and successor sets.
    pub t_order: f64,
    pub t_list: f64,
    pub t_total: f64,
    pub tau: Option<u32>,
    pub degeneracy: Option<u32>,
    pub stats: BranchStats,
}

impl RunReport {
    fn new(graph: String, g: &Graph, args: &RunArgs, r: &ListReport) -> Self {
        RunReport {
            schema: REPORT_SCHEMA,
            graph,
            n: g.n(),
            m: g.m(),
            k: r.k,
            algorithm: r.algorithm.to_string(),
            scheme: match args.scheme {
                Scheme::NodeParallel => "np",
                Scheme::EdgeParallel => "ep",
            },
            rules: args.rules.name(),
            et: match args.et {
                EtPolicy::Disabled => "none".into(),
                EtPolicy::Auto => "auto".into(),
                EtPolicy::Threshold(t) => format!("t={t}"),
            },
            et_threshold: r.et_threshold,
            threads: r.threads,
            count: r.count,
            t_order: r.t_order.as_secs_f64(),
            t_list: r.t_list.as_secs_f64(),
            t_total: r.t_total().as_secs_f64(),
            tau: r.tau,
            degeneracy: r.degeneracy,
            stats: BranchStats {
                top_branches: r.stats.top_branches,
                max_top_candidates: r.stats.max_top_candidates,
                pruned_size: r.stats.pruned_size,
                pruned_r1: r.stats.pruned_r1,
                pruned_r2: r.stats.pruned_r2,
                et_fired: r.stats.et_fired,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn list_config(
    rules: Rules,
    et: EtPolicy,
    scheme: Scheme,
    threads: usize,
    time_limit: Option<f64>,
) -> Result<ListConfig> {
    let mut prune = PruneConfig {
        et,
        ..PruneConfig::default()
    };
    rules.apply(&mut prune);
    let time_limit = match time_limit {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(Error::InvalidArgument(format!("bad time limit {s}")));
        }
        Some(s) => Some(Duration::from_secs_f64(s)),
        None => None,
    };
    Ok(ListConfig {
        prune,
        scheme,
        threads,
        time_limit,
        ..ListConfig::default()
    })
}

/// Loads the graph, lists its k-cliques and returns the report.
pub fn run(args: &RunArgs) -> Result<RunReport> {
    let source = args
        .source
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("either --input or --gen is required".into()))?;
    let k = args.k.ok_or_else(|| Error::InvalidArgument("-k is required".into()))?;
    let (g, label) = load_graph(source, args.seed)?;
    let cfg = list_config(args.rules, args.et, args.scheme, args.threads, args.time_limit)?;

    let mut sink = match &args.output {
        Some(path) => {
            let labels: Option<Arc<[u64]>> = g.raw_ids().map(Arc::from);
            CliqueSink::stream(Box::new(BufWriter::new(File::create(path)?)), labels)
        }
        None => CliqueSink::counter(),
    };
    let report = list(&g, k, args.algo, &cfg, &mut sink)?;
    sink.finish()?;
    Ok(RunReport::new(label, &g, args, &report))
}

/// Statistics of the selected graph; the clique number is searched within
/// `omega_budget` candidate checks and left empty when that runs out.
pub fn stats(args: &RunArgs, omega_budget: u64) -> Result<GraphStats> {
    let source = args
        .source
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("either --input or --gen is required".into()))?;
    let (g, _) = load_graph(source, args.seed)?;
    match graph_stats(&g, Some(omega_budget)) {
        Err(Error::BudgetExceeded { .. }) => graph_stats(&g, None),
        other => other,
    }
}
