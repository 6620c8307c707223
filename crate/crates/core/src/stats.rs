//! Summary statistics of a graph.

use crate::error::Result;
use crate::graph::Graph;
use crate::oracle;
use crate::ordering::{core_decompose, truss_decompose};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub degeneracy: u32,
    pub tau: u32,
    /// Clique number, when it was asked for and fit the budget.
    pub omega: Option<usize>,
}

impl GraphStats {
    pub const CSV_HEADER: &'static str = "n,m,dmax,delta,tau,omega";

    pub fn csv_row(&self) -> String {
        let omega = self.omega.map(|w| w.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{}",
            self.n, self.m, self.max_degree, self.degeneracy, self.tau, omega
        )
    }
}

/// Computes the statistics; `omega_budget` bounds the clique-number search.
pub fn graph_stats(g: &Graph, omega_budget: Option<u64>) -> Result<GraphStats> {
    let omega = match omega_budget {
        Some(b) => Some(oracle::max_clique_size(g, b)?),
        None => None,
    };
    Ok(GraphStats {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        degeneracy: core_decompose(g).degeneracy,
        tau: truss_decompose(g).tau,
        omega,
    })
}
