//! Edge branching in truss order at every level. A branch is a vertex set
//! (ascending ids) and an edge set (ascending truss positions).

use super::driver::{Shared, TopLevel, Worker};
use super::CliqueSink;
use crate::graph::{intersect_sorted, Graph, LocalGraph, Vertex};
use crate::ordering::{SuccessorSets, TrussOrdering};
use crate::plex;

pub(crate) struct TrussItems<'g> {
    pub g: &'g Graph,
    pub truss: TrussOrdering,
    pub succ: SuccessorSets,
}

impl TrussItems<'_> {
    fn endpoints(&self, rank: u32) -> (Vertex, Vertex) {
        self.g.edge(self.truss.order[rank as usize])
    }
}

impl TopLevel for TrussItems<'_> {
    fn items(&self) -> usize {
        self.g.m()
    }

    fn run_item(&self, pos: usize, sh: &Shared, w: &mut Worker, sink: &mut CliqueSink) {
        w.stats.top_branches += 1;
        w.reserve_depth(0);
        let mut scratch = std::mem::take(&mut w.succ[0]);
        let (vs, es) = self.succ.get(self.g, &self.truss, pos, &mut scratch);
        w.stats.max_top_candidates = w.stats.max_top_candidates.max(vs.len() as u64);
        w.vsets[0].clear();
        w.vsets[0].extend_from_slice(vs);
        w.esets[0].clear();
        w.esets[0].extend_from_slice(es);
        w.succ[0] = scratch;

        let (u, v) = self.endpoints(pos as u32);
        w.stack.push(u);
        w.stack.push(v);
        w.solve_truss(self, sh, 0, sh.k - 2, sink);
        w.stack.truncate(w.stack.len() - 2);
    }
}

/// Plain l-clique count of a local graph, used to audit early termination.
fn count_local(g: &LocalGraph, l: usize) -> u64 {
    fn rec(g: &LocalGraph, cand: &[u32], l: usize) -> u64 {
        if l == 0 {
            return 1;
        }
        let mut total = 0;
        for (i, &a) in cand.iter().enumerate() {
            let mut next = Vec::new();
            intersect_sorted(&cand[i + 1..], g.neighbors(a as usize), &mut next);
            total += rec(g, &next, l - 1);
        }
        total
    }
    let all: Vec<u32> = (0..g.len() as u32).collect();
    rec(g, &all, l)
}

impl Worker {
    pub(crate) fn solve_truss(
        &mut self,
        ctx: &TrussItems<'_>,
        sh: &Shared,
        depth: usize,
        l: usize,
        sink: &mut CliqueSink,
    ) {
        let vset = std::mem::take(&mut self.vsets[depth]);
        let eset = std::mem::take(&mut self.esets[depth]);
        self.truss_on(ctx, sh, depth, &vset, &eset, l, sink);
        self.vsets[depth] = vset;
        self.esets[depth] = eset;
    }

    fn local_of(&self, ctx: &TrussItems<'_>, vset: &[Vertex], eset: &[u32]) -> LocalGraph {
        let pairs: Vec<(u32, u32)> = eset
            .iter()
            .map(|&rk| {
                let (x, y) = ctx.endpoints(rk);
                (
                    vset.binary_search(&x).expect("edge endpoint outside branch") as u32,
                    vset.binary_search(&y).expect("edge endpoint outside branch") as u32,
                )
            })
            .collect();
        LocalGraph::from_local_edges(vset.to_vec(), &pairs)
    }

    fn truss_terminate(
        &mut self,
        ctx: &TrussItems<'_>,
        sh: &Shared,
        vset: &[Vertex],
        eset: &[u32],
        l: usize,
        sink: &mut CliqueSink,
    ) -> bool {
        let Some(t) = sh.et_threshold else {
            return false;
        };
        if l < 3 || vset.is_empty() {
            return false;
        }
        let n = vset.len();
        // a (t)-plex needs at least n(n-t)/2 edges
        if 2 * eset.len() < n * n.saturating_sub(t as usize) {
            return false;
        }
        self.deg.clear();
        self.deg.resize(n, 0);
        for &rk in eset {
            let (x, y) = ctx.endpoints(rk);
            self.deg[vset.binary_search(&x).unwrap()] += 1;
            self.deg[vset.binary_search(&y).unwrap()] += 1;
        }
        let min_deg = self.deg.iter().copied().min().unwrap_or(0) as usize;
        let gap = (n - min_deg) as u32;
        if gap > t {
            return false;
        }
        self.stats.et_fired += 1;
        let local = self.local_of(ctx, vset, eset);
        let got = plex::terminate(&self.stack, &local, gap, l, sink);
        if sh.prune.audit && got != count_local(&local, l) {
            self.stats.audit_violations += 1;
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn truss_on(
        &mut self,
        ctx: &TrussItems<'_>,
        sh: &Shared,
        depth: usize,
        vset: &[Vertex],
        eset: &[u32],
        l: usize,
        sink: &mut CliqueSink,
    ) {
        if sh.prune.size && vset.len() < l {
            self.stats.pruned_size += 1;
            return;
        }
        match l {
            1 => {
                if sink.materializes() {
                    for &v in vset {
                        sink.emit_with(&mut self.stack, &[v]);
                    }
                } else {
                    sink.add_bulk(vset.len() as u64);
                }
                return;
            }
            2 => {
                if sink.materializes() {
                    for &rk in eset {
                        let (x, y) = ctx.endpoints(rk);
                        sink.emit_with(&mut self.stack, &[x, y]);
                    }
                } else {
                    sink.add_bulk(eset.len() as u64);
                }
                return;
            }
            _ => {}
        }
        if self.truss_terminate(ctx, sh, vset, eset, l, sink) {
            return;
        }
        self.stats.edge_branch_parities |= 1 << (l % 2);
        self.reserve_depth(depth + 1);
        let need = l - 2;
        for (i, &r) in eset.iter().enumerate() {
            let mut scratch = std::mem::take(&mut self.succ[depth]);
            let (vs, es) = ctx.succ.get(ctx.g, &ctx.truss, r as usize, &mut scratch);
            let child_v = &mut self.vsets[depth + 1];
            child_v.clear();
            intersect_sorted(vset, vs, child_v);
            if sh.prune.size && child_v.len() < need {
                self.stats.pruned_size += 1;
                self.succ[depth] = scratch;
                continue;
            }
            let child_e = &mut self.esets[depth + 1];
            child_e.clear();
            if need >= 2 {
                intersect_sorted(&eset[i + 1..], es, child_e);
            }
            self.succ[depth] = scratch;

            let (u, v) = ctx.endpoints(r);
            self.stack.push(u);
            self.stack.push(v);
            self.solve_truss(ctx, sh, depth + 1, need, sink);
            self.stack.truncate(self.stack.len() - 2);
        }
    }
}
