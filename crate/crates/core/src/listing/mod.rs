//! Branch-and-bound k-clique listers.
//!
//! * `Vbbkc`: vertex-oriented branching over the degeneracy orientation.
//! * `EbbkcT`: edge-oriented branching in truss order at every level, using
//!   the precomputed successor sets.
//! * `EbbkcC`: edge-oriented branching over the color-ranked DAG with both
//!   color pruning rules.
//! * `EbbkcH`: truss order for the first step, then each child is colored
//!   locally and handled like `EbbkcC`.
//!
//! Every top-level sub-branch is an independent work item, which is what the
//! parallel driver distributes.

mod branch;
mod dag;
mod driver;
mod sink;
mod truss_rec;

use std::str::FromStr;
use std::time::{Duration, Instant};

pub use branch::{ebbkc_branch, generic_list, Branch};
pub use sink::CliqueSink;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::{
    core_decompose, greedy_color, orient_by_rank, truss_decompose, SuccessorSets, DEFAULT_SUCCESSOR_CAP,
};
use crate::plex::EtPolicy;

use dag::{ColorDagItems, GlobalDag, HybridItems, VertexDagItems};
use truss_rec::TrussItems;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Vbbkc,
    EbbkcT,
    EbbkcC,
    EbbkcH,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Vbbkc,
        Algorithm::EbbkcT,
        Algorithm::EbbkcC,
        Algorithm::EbbkcH,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Vbbkc => "vbbkc",
            Algorithm::EbbkcT => "ebbkc-t",
            Algorithm::EbbkcC => "ebbkc-c",
            Algorithm::EbbkcH => "ebbkc-h",
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown algorithm {s:?}")))
    }
}

/// Top-level work decomposition for the vertex-oriented lister.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scheme {
    /// One work item per vertex.
    #[default]
    NodeParallel,
    /// The first two vertex steps fused: one work item per edge.
    EdgeParallel,
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "np" => Ok(Scheme::NodeParallel),
            "ep" => Ok(Scheme::EdgeParallel),
            _ => Err(Error::InvalidArgument(format!("unknown scheme {s:?}"))),
        }
    }
}

/// Pruning switches. None of them changes the listed cliques.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PruneConfig {
    /// Drop branches with fewer candidates than the remaining clique size.
    pub size: bool,
    /// Color rule on the branching edge's endpoints.
    pub rule1: bool,
    /// Distinct-color count of the child's candidates.
    pub rule2: bool,
    pub et: EtPolicy,
    /// Re-run every pruned or early-terminated branch through a plain
    /// counter and record disagreements in [`ListStats::audit_violations`].
    pub audit: bool,
}

impl Default for PruneConfig {
    fn default() -> Self {
        PruneConfig {
            size: true,
            rule1: true,
            rule2: true,
            et: EtPolicy::Auto,
            audit: false,
        }
    }
}

impl PruneConfig {
    pub fn none() -> Self {
        PruneConfig {
            size: false,
            rule1: false,
            rule2: false,
            et: EtPolicy::Disabled,
            audit: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListConfig {
    pub prune: PruneConfig,
    pub scheme: Scheme,
    pub threads: usize,
    pub time_limit: Option<Duration>,
    /// Materialization cap for the successor sets used by `EbbkcT`.
    pub successor_cap: usize,
}

impl Default for ListConfig {
    fn default() -> Self {
        ListConfig {
            prune: PruneConfig::default(),
            scheme: Scheme::default(),
            threads: 1,
            time_limit: None,
            successor_cap: DEFAULT_SUCCESSOR_CAP,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ListStats {
    pub top_branches: u64,
    /// Largest candidate set among top-level sub-branches.
    pub max_top_candidates: u64,
    pub pruned_size: u64,
    pub pruned_r1: u64,
    pub pruned_r2: u64,
    pub et_fired: u64,
    pub audit_violations: u64,
    /// Bit `p` set when an edge-branching step ran with `l % 2 == p`.
    pub edge_branch_parities: u8,
}

impl ListStats {
    pub fn merge(&mut self, o: &ListStats) {
        self.top_branches += o.top_branches;
        self.max_top_candidates = self.max_top_candidates.max(o.max_top_candidates);
        self.pruned_size += o.pruned_size;
        self.pruned_r1 += o.pruned_r1;
        self.pruned_r2 += o.pruned_r2;
        self.et_fired += o.et_fired;
        self.audit_violations += o.audit_violations;
        self.edge_branch_parities |= o.edge_branch_parities;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ListReport {
    pub algorithm: Algorithm,
    pub k: usize,
    pub count: u64,
    pub stats: ListStats,
    /// Ordering and preprocessing time.
    pub t_order: Duration,
    pub t_list: Duration,
    pub tau: Option<u32>,
    pub degeneracy: Option<u32>,
    pub et_threshold: Option<u32>,
    pub threads: usize,
}

impl ListReport {
    pub fn t_total(&self) -> Duration {
        self.t_order + self.t_list
    }
}

/// Lists every k-clique of `g` into `sink`.
pub fn list(g: &Graph, k: usize, algo: Algorithm, cfg: &ListConfig, sink: &mut CliqueSink) -> Result<ListReport> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    if cfg.threads == 0 {
        return Err(Error::InvalidArgument("threads must be at least 1".into()));
    }
    let deadline = cfg.time_limit.map(|d| Instant::now() + d);
    let start = Instant::now();
    let mut tau = None;
    let mut degeneracy = None;

    let prepared: Box<dyn driver::TopLevel + '_> = match algo {
        Algorithm::Vbbkc => {
            let d = core_decompose(g);
            degeneracy = Some(d.degeneracy);
            let dag = orient_by_rank(g, &d.rank);
            Box::new(VertexDagItems {
                dag: GlobalDag::new(dag, None),
                scheme: cfg.scheme,
            })
        }
        Algorithm::EbbkcC => {
            let c = greedy_color(g);
            let dag = orient_by_rank(g, &c.rank);
            let colors = c.order.iter().map(|&v| c.colors[v as usize]).collect();
            Box::new(ColorDagItems {
                dag: GlobalDag::new(dag, Some(colors)),
            })
        }
        Algorithm::EbbkcT | Algorithm::EbbkcH => {
            let t = truss_decompose(g);
            tau = Some(t.tau);
            if algo == Algorithm::EbbkcT {
                let succ = SuccessorSets::build(g, &t, cfg.successor_cap);
                Box::new(TrussItems { g, truss: t, succ })
            } else {
                // each successor set is read once, by its own top-level item
                let succ = SuccessorSets::OnDemand;
                Box::new(HybridItems { g, truss: t, succ })
            }
        }
    };
    let et_threshold = match tau {
        Some(t) => cfg.prune.et.threshold(k, t),
        None if cfg.prune.et.needs_tau() => {
            // tau < degeneracy, so a small degeneracy settles the choice
            let delta = *degeneracy.get_or_insert_with(|| core_decompose(g).degeneracy);
            if 2 * k as u64 >= delta as u64 {
                cfg.prune.et.threshold(k, delta.saturating_sub(1))
            } else {
                let t = truss_decompose(g).tau;
                tau = Some(t);
                cfg.prune.et.threshold(k, t)
            }
        }
        None => cfg.prune.et.threshold(k, 0),
    };
    let t_order = start.elapsed();

    let shared = driver::Shared {
        k,
        prune: cfg.prune,
        et_threshold,
        n: g.n(),
        deadline,
        time_limit: cfg.time_limit,
    };
    let list_start = Instant::now();
    let stats = driver::execute(prepared.as_ref(), &shared, cfg.threads, sink)?;
    let t_list = list_start.elapsed();

    Ok(ListReport {
        algorithm: algo,
        k,
        count: sink.count(),
        stats,
        t_order,
        t_list,
        tau,
        degeneracy,
        et_threshold,
        threads: cfg.threads,
    })
}

/// Convenience: number of k-cliques with default settings.
pub fn count_cliques(g: &Graph, k: usize, algo: Algorithm) -> Result<u64> {
    let mut sink = CliqueSink::counter();
    list(g, k, algo, &ListConfig::default(), &mut sink).map(|r| r.count)
}

#[cfg(test)]
mod tests;
