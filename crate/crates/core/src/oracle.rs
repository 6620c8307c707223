//! Exhaustive k-clique enumeration used as ground truth.
//!
//! Extends cliques in ascending vertex order, keeping the candidates that are
//! adjacent to everything chosen so far. It shares nothing with the listing
//! frameworks beyond the [`Graph`] accessors.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Canonical set of cliques, each a sorted vertex list.
pub type CliqueSet = BTreeSet<Vec<Vertex>>;

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    budget: u64,
    spent: u64,
    stack: Vec<Vertex>,
    found: CliqueSet,
    count_only: bool,
    count: u64,
}

impl Search<'_> {
    fn charge(&mut self, work: usize) -> Result<()> {
        self.spent += work as u64;
        if self.spent > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    fn extend(&mut self, candidates: &[Vertex]) -> Result<()> {
        if self.stack.len() == self.k {
            self.count += 1;
            if !self.count_only {
                self.found.insert(self.stack.clone());
            }
            return Ok(());
        }
        let need = self.k - self.stack.len();
        for (i, &v) in candidates.iter().enumerate() {
            if candidates.len() - i < need {
                break;
            }
            let rest = &candidates[i + 1..];
            self.charge(rest.len() + 1)?;
            let next: Vec<Vertex> = rest.iter().copied().filter(|&w| self.g.has_edge(v, w)).collect();
            self.stack.push(v);
            self.extend(&next)?;
            self.stack.pop();
        }
        Ok(())
    }
}

fn run(g: &Graph, k: usize, budget: u64, count_only: bool) -> Result<(u64, CliqueSet)> {
    let mut s = Search {
        g,
        k,
        budget,
        spent: 0,
        stack: Vec::with_capacity(k),
        found: CliqueSet::new(),
        count_only,
        count: 0,
    };
    let all: Vec<Vertex> = (0..g.n() as Vertex).collect();
    s.extend(&all)?;
    Ok((s.count, s.found))
}

/// Every k-clique of `g`, refusing once `budget` candidate checks are spent.
pub fn brute_force_list(g: &Graph, k: usize, budget: u64) -> Result<CliqueSet> {
    run(g, k, budget, false).map(|(_, set)| set)
}

pub fn brute_force_count(g: &Graph, k: usize, budget: u64) -> Result<u64> {
    run(g, k, budget, true).map(|(c, _)| c)
}

/// Size of a largest clique, probing k = 3, 4, ... until none exists.
pub fn max_clique_size(g: &Graph, budget: u64) -> Result<usize> {
    if g.m() == 0 {
        return Ok(g.n().min(1));
    }
    let mut best = 2;
    loop {
        let k = best + 1;
        if brute_force_count(g, k, budget)? == 0 {
            return Ok(best);
        }
        best = k;
    }
}
