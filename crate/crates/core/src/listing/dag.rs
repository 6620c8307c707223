//! Branching over rank-oriented DAGs: vertex steps for the degeneracy-based
//! lister, edge steps with color pruning for the color and hybrid listers.

use super::driver::{Shared, TopLevel, Worker};
use super::CliqueSink;
use crate::graph::{intersect_sorted, Graph, LocalGraph, Vertex};
use crate::ordering::{OrientedGraph, SuccessorSets, TrussOrdering};
use crate::plex;

/// Branch-local DAG. Local index order is rank order, so every arc points
/// from a smaller to a larger index and out-lists are ascending.
#[derive(Debug, Default, Clone)]
pub(crate) struct DagLevel {
    pub verts: Vec<Vertex>,
    pub colors: Vec<u32>,
    offs: Vec<u32>,
    out: Vec<u32>,
    indeg: Vec<u32>,
}

pub(crate) trait OutLists {
    fn out(&self, i: usize) -> &[u32];
    fn vertex(&self, i: usize) -> Vertex;
    fn color(&self, i: usize) -> u32;
}

impl DagLevel {
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn arcs(&self) -> usize {
        self.out.len()
    }

    fn clear(&mut self) {
        self.verts.clear();
        self.colors.clear();
        self.offs.clear();
        self.out.clear();
        self.indeg.clear();
    }

    fn to_local(&self) -> LocalGraph {
        let mut pairs = Vec::with_capacity(self.out.len());
        for a in 0..self.len() {
            pairs.extend(self.out(a).iter().map(|&b| (a as u32, b)));
        }
        LocalGraph::from_local_edges(self.verts.clone(), &pairs)
    }

    fn min_degree(&self) -> usize {
        (0..self.len())
            .map(|i| self.out(i).len() + self.indeg[i] as usize)
            .min()
            .unwrap_or(0)
    }
}

impl OutLists for DagLevel {
    #[inline]
    fn out(&self, i: usize) -> &[u32] {
        &self.out[self.offs[i] as usize..self.offs[i + 1] as usize]
    }

    #[inline]
    fn vertex(&self, i: usize) -> Vertex {
        self.verts[i]
    }

    #[inline]
    fn color(&self, i: usize) -> u32 {
        self.colors.get(i).copied().unwrap_or(0)
    }
}

/// Reusable buffers for coloring a top-level branch and orienting it.
#[derive(Debug, Default)]
pub(crate) struct LocalColoring {
    /// Local index pairs of the branch's edges; filled by the caller.
    pub pairs: Vec<(u32, u32)>,
    offs: Vec<u32>,
    adj: Vec<u32>,
    fill: Vec<u32>,
    by_degree: Vec<u32>,
    colors: Vec<u32>,
    taken: Vec<u32>,
    order: Vec<u32>,
    rank: Vec<u32>,
}

impl LocalColoring {
    /// Loads `level` with the graph on `labels` and `self.pairs`, greedily
    /// colored in non-increasing degree order and ranked by non-increasing
    /// color (ties by local index in both steps).
    pub fn load(&mut self, labels: &[Vertex], level: &mut DagLevel) {
        let n = labels.len();
        self.offs.clear();
        self.offs.resize(n + 1, 0);
        for &(a, b) in &self.pairs {
            self.offs[a as usize + 1] += 1;
            self.offs[b as usize + 1] += 1;
        }
        for i in 0..n {
            self.offs[i + 1] += self.offs[i];
        }
        self.adj.resize(self.offs[n] as usize, 0);
        self.fill.clear();
        self.fill.extend_from_slice(&self.offs[..n]);
        for &(a, b) in &self.pairs {
            let (fa, fb) = (self.fill[a as usize] as usize, self.fill[b as usize] as usize);
            self.adj[fa] = b;
            self.adj[fb] = a;
            self.fill[a as usize] += 1;
            self.fill[b as usize] += 1;
        }
        let offs = &self.offs;
        let deg = |v: u32| offs[v as usize + 1] - offs[v as usize];

        self.by_degree.clear();
        self.by_degree.extend(0..n as u32);
        self.by_degree.sort_unstable_by_key(|&v| (std::cmp::Reverse(deg(v)), v));
        self.colors.clear();
        self.colors.resize(n, 0);
        self.taken.clear();
        self.taken.resize(n + 2, u32::MAX);
        for &v in &self.by_degree {
            for &w in &self.adj[offs[v as usize] as usize..offs[v as usize + 1] as usize] {
                self.taken[self.colors[w as usize] as usize] = v;
            }
            let mut c = 1;
            while self.taken[c] == v {
                c += 1;
            }
            self.colors[v as usize] = c as u32;
        }

        self.order.clear();
        self.order.extend(0..n as u32);
        let colors = &self.colors;
        self.order
            .sort_unstable_by_key(|&v| (std::cmp::Reverse(colors[v as usize]), v));
        self.rank.resize(n, 0);
        for (r, &v) in self.order.iter().enumerate() {
            self.rank[v as usize] = r as u32;
        }

        level.clear();
        level.indeg.resize(n, 0);
        level.offs.push(0);
        for r in 0..n {
            let v = self.order[r] as usize;
            level.verts.push(labels[v]);
            level.colors.push(self.colors[v]);
            let start = level.out.len();
            for &w in &self.adj[offs[v] as usize..offs[v + 1] as usize] {
                let rw = self.rank[w as usize];
                if rw as usize > r {
                    level.out.push(rw);
                    level.indeg[rw as usize] += 1;
                }
            }
            level.out[start..].sort_unstable();
            level.offs.push(level.out.len() as u32);
        }
    }
}

/// Whole-graph DAG in rank space, with optional colors by rank.
pub(crate) struct GlobalDag {
    pub dag: OrientedGraph,
    colors: Vec<u32>,
}

impl GlobalDag {
    pub fn new(dag: OrientedGraph, colors: Option<Vec<u32>>) -> Self {
        GlobalDag {
            dag,
            colors: colors.unwrap_or_default(),
        }
    }
}

impl OutLists for GlobalDag {
    #[inline]
    fn out(&self, i: usize) -> &[u32] {
        self.dag.out_by_rank(i)
    }

    #[inline]
    fn vertex(&self, i: usize) -> Vertex {
        self.dag.order[i]
    }

    #[inline]
    fn color(&self, i: usize) -> u32 {
        self.colors.get(i).copied().unwrap_or(0)
    }
}

/// Child DAG induced by the ascending index list `cand` of `parent`.
/// `pos` must be all `-1` on entry and is left that way.
pub(crate) fn build_child<P: OutLists>(parent: &P, cand: &[u32], pos: &mut [i32], child: &mut DagLevel) {
    child.clear();
    for (ci, &p) in cand.iter().enumerate() {
        pos[p as usize] = ci as i32;
        child.verts.push(parent.vertex(p as usize));
        child.colors.push(parent.color(p as usize));
    }
    child.indeg.resize(cand.len(), 0);
    child.offs.push(0);
    for &p in cand {
        for &q in parent.out(p as usize) {
            let c = pos[q as usize];
            if c >= 0 {
                child.out.push(c as u32);
                child.indeg[c as usize] += 1;
            }
        }
        child.offs.push(child.out.len() as u32);
    }
    for &p in cand {
        pos[p as usize] = -1;
    }
}

/// Plain l-clique count of a DAG level, used to audit pruning decisions.
pub(crate) fn count_in_level(level: &DagLevel, l: usize) -> u64 {
    fn rec(level: &DagLevel, cand: &[u32], l: usize) -> u64 {
        if l == 0 {
            return 1;
        }
        let mut total = 0;
        for (i, &a) in cand.iter().enumerate() {
            let out = level.out(a as usize);
            let next: Vec<u32> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|b| out.binary_search(b).is_ok())
                .collect();
            total += rec(level, &next, l - 1);
        }
        total
    }
    let all: Vec<u32> = (0..level.len() as u32).collect();
    rec(level, &all, l)
}

impl Worker {
    fn emit_level_vertices(&mut self, level: &DagLevel, sink: &mut CliqueSink) {
        if !sink.materializes() {
            sink.add_bulk(level.len() as u64);
            return;
        }
        for &v in &level.verts {
            sink.emit_with(&mut self.stack, &[v]);
        }
    }

    fn emit_level_arcs(&mut self, level: &DagLevel, sink: &mut CliqueSink) {
        if !sink.materializes() {
            sink.add_bulk(level.arcs() as u64);
            return;
        }
        for a in 0..level.len() {
            for &b in level.out(a) {
                sink.emit_with(&mut self.stack, &[level.verts[a], level.verts[b as usize]]);
            }
        }
    }

    /// Lists the branch combinatorially when its graph is dense enough.
    fn try_terminate(&mut self, level: &DagLevel, sh: &Shared, l: usize, sink: &mut CliqueSink) -> bool {
        let Some(t) = sh.et_threshold else {
            return false;
        };
        if l < 3 || level.len() == 0 {
            return false;
        }
        let gap = (level.len() - level.min_degree()) as u32;
        if gap > t {
            return false;
        }
        self.stats.et_fired += 1;
        let local = level.to_local();
        let got = plex::terminate(&self.stack, &local, gap, l, sink);
        if sh.prune.audit && got != count_in_level(level, l) {
            self.stats.audit_violations += 1;
        }
        true
    }

    fn audit_pruned<P: OutLists>(&mut self, parent: &P, cand: &[u32], depth: usize, l: usize) {
        self.reserve_depth(depth);
        build_child(parent, cand, &mut self.pos, &mut self.levels[depth]);
        if count_in_level(&self.levels[depth], l) > 0 {
            self.stats.audit_violations += 1;
        }
    }

    /// Edge-oriented branching on `levels[depth]` with `l` vertices to go.
    pub(crate) fn solve_edges(&mut self, sh: &Shared, depth: usize, l: usize, sink: &mut CliqueSink) {
        let level = std::mem::take(&mut self.levels[depth]);
        self.edges_on(&level, sh, depth, l, sink);
        self.levels[depth] = level;
    }

    fn edges_on(&mut self, level: &DagLevel, sh: &Shared, depth: usize, l: usize, sink: &mut CliqueSink) {
        let n = level.len();
        if sh.prune.size && n < l {
            self.stats.pruned_size += 1;
            return;
        }
        match l {
            1 => return self.emit_level_vertices(level, sink),
            2 => return self.emit_level_arcs(level, sink),
            _ => {}
        }
        if self.try_terminate(level, sh, l, sink) {
            return;
        }
        self.stats.edge_branch_parities |= 1 << (l % 2);
        self.reserve_depth(depth + 1);
        let mut cand = std::mem::take(&mut self.cands[depth]);
        let need = l - 2;
        for a in 0..n {
            let out_a = level.out(a);
            for &b in out_a {
                let b = b as usize;
                let (ca, cb) = (level.colors[a], level.colors[b]);
                if sh.prune.rule1 && (ca < l as u32 || cb < (l - 1) as u32) {
                    self.stats.pruned_r1 += 1;
                    if sh.prune.audit {
                        cand.clear();
                        intersect_sorted(out_a, level.out(b), &mut cand);
                        self.audit_pruned(level, &cand, depth + 1, need);
                    }
                    continue;
                }
                cand.clear();
                intersect_sorted(out_a, level.out(b), &mut cand);
                if sh.prune.rule2 {
                    let distinct = self.distinct_colors(cand.iter().map(|&c| level.colors[c as usize]), need);
                    if distinct < need {
                        self.stats.pruned_r2 += 1;
                        if sh.prune.audit {
                            self.audit_pruned(level, &cand, depth + 1, need);
                        }
                        continue;
                    }
                }
                if sh.prune.size && cand.len() < need {
                    self.stats.pruned_size += 1;
                    continue;
                }
                build_child(level, &cand, &mut self.pos, &mut self.levels[depth + 1]);
                self.stack.push(level.verts[a]);
                self.stack.push(level.verts[b]);
                self.solve_edges(sh, depth + 1, need, sink);
                self.stack.truncate(self.stack.len() - 2);
            }
        }
        self.cands[depth] = cand;
    }

    /// Vertex-oriented branching on `levels[depth]`.
    pub(crate) fn solve_vertices(&mut self, sh: &Shared, depth: usize, l: usize, sink: &mut CliqueSink) {
        let level = std::mem::take(&mut self.levels[depth]);
        self.vertices_on(&level, sh, depth, l, sink);
        self.levels[depth] = level;
    }

    fn vertices_on(&mut self, level: &DagLevel, sh: &Shared, depth: usize, l: usize, sink: &mut CliqueSink) {
        let n = level.len();
        if sh.prune.size && n < l {
            self.stats.pruned_size += 1;
            return;
        }
        match l {
            1 => return self.emit_level_vertices(level, sink),
            2 => return self.emit_level_arcs(level, sink),
            _ => {}
        }
        if self.try_terminate(level, sh, l, sink) {
            return;
        }
        self.reserve_depth(depth + 1);
        for a in 0..n {
            let out_a = level.out(a);
            if sh.prune.size && out_a.len() < l - 1 {
                self.stats.pruned_size += 1;
                continue;
            }
            build_child(level, out_a, &mut self.pos, &mut self.levels[depth + 1]);
            self.stack.push(level.verts[a]);
            self.solve_vertices(sh, depth + 1, l - 1, sink);
            self.stack.pop();
        }
    }
}

/// Degeneracy-ordered vertex branching; items are vertices (NP) or arcs (EP).
pub(crate) struct VertexDagItems {
    pub dag: GlobalDag,
    pub scheme: super::Scheme,
}

impl TopLevel for VertexDagItems {
    fn items(&self) -> usize {
        match self.scheme {
            super::Scheme::NodeParallel => self.dag.dag.len(),
            super::Scheme::EdgeParallel => self.dag.dag.edge_count(),
        }
    }

    fn run_item(&self, item: usize, sh: &Shared, w: &mut Worker, sink: &mut CliqueSink) {
        w.stats.top_branches += 1;
        w.reserve_depth(0);
        let k = sh.k;
        match self.scheme {
            super::Scheme::NodeParallel => {
                let out = self.dag.out(item);
                w.stats.max_top_candidates = w.stats.max_top_candidates.max(out.len() as u64);
                if sh.prune.size && out.len() < k - 1 {
                    w.stats.pruned_size += 1;
                    return;
                }
                build_child(&self.dag, out, &mut w.pos, &mut w.levels[0]);
                w.stack.push(self.dag.vertex(item));
                w.solve_vertices(sh, 0, k - 1, sink);
                w.stack.pop();
            }
            super::Scheme::EdgeParallel => {
                let (a, b) = self.dag.dag.arc(item);
                let mut cand = std::mem::take(&mut w.cands[0]);
                cand.clear();
                intersect_sorted(self.dag.out(a as usize), self.dag.out(b as usize), &mut cand);
                w.stats.max_top_candidates = w.stats.max_top_candidates.max(cand.len() as u64);
                if !(sh.prune.size && cand.len() < k - 2) {
                    build_child(&self.dag, &cand, &mut w.pos, &mut w.levels[0]);
                    w.stack.push(self.dag.vertex(a as usize));
                    w.stack.push(self.dag.vertex(b as usize));
                    w.solve_vertices(sh, 0, k - 2, sink);
                    w.stack.truncate(w.stack.len() - 2);
                } else {
                    w.stats.pruned_size += 1;
                }
                w.cands[0] = cand;
            }
        }
    }
}

/// Color-ranked DAG of the whole graph; one item per arc.
pub(crate) struct ColorDagItems {
    pub dag: GlobalDag,
}

impl TopLevel for ColorDagItems {
    fn items(&self) -> usize {
        self.dag.dag.edge_count()
    }

    fn run_item(&self, item: usize, sh: &Shared, w: &mut Worker, sink: &mut CliqueSink) {
        w.stats.top_branches += 1;
        w.reserve_depth(0);
        let (k, need) = (sh.k, sh.k - 2);
        let (a, b) = self.dag.dag.arc(item);
        let (a, b) = (a as usize, b as usize);
        let mut cand = std::mem::take(&mut w.cands[0]);
        cand.clear();
        intersect_sorted(self.dag.out(a), self.dag.out(b), &mut cand);
        w.stats.max_top_candidates = w.stats.max_top_candidates.max(cand.len() as u64);

        let (ca, cb) = (self.dag.color(a), self.dag.color(b));
        let pruned = if sh.prune.rule1 && (ca < k as u32 || cb < (k - 1) as u32) {
            w.stats.pruned_r1 += 1;
            true
        } else if sh.prune.rule2 && w.distinct_colors(cand.iter().map(|&c| self.dag.color(c as usize)), need) < need {
            w.stats.pruned_r2 += 1;
            true
        } else {
            false
        };
        if pruned {
            if sh.prune.audit {
                w.audit_pruned(&self.dag, &cand, 0, need);
            }
        } else if sh.prune.size && cand.len() < need {
            w.stats.pruned_size += 1;
        } else {
            build_child(&self.dag, &cand, &mut w.pos, &mut w.levels[0]);
            w.stack.push(self.dag.vertex(a));
            w.stack.push(self.dag.vertex(b));
            w.solve_edges(sh, 0, need, sink);
            w.stack.truncate(w.stack.len() - 2);
        }
        w.cands[0] = cand;
    }
}

/// Truss order at the top, local coloring below; one item per edge.
pub(crate) struct HybridItems<'g> {
    pub g: &'g Graph,
    pub truss: TrussOrdering,
    pub succ: SuccessorSets,
}

impl TopLevel for HybridItems<'_> {
    fn items(&self) -> usize {
        self.g.m()
    }

    fn run_item(&self, pos: usize, sh: &Shared, w: &mut Worker, sink: &mut CliqueSink) {
        w.stats.top_branches += 1;
        w.reserve_depth(0);
        let need = sh.k - 2;
        let mut scratch = std::mem::take(&mut w.succ[0]);
        let min = if sh.prune.size { need } else { 0 };
        let Some((vs, es)) = self.succ.get_sized(self.g, &self.truss, pos, min, &mut scratch) else {
            w.stats.pruned_size += 1;
            w.succ[0] = scratch;
            return;
        };
        w.stats.max_top_candidates = w.stats.max_top_candidates.max(vs.len() as u64);
        for (i, &x) in vs.iter().enumerate() {
            w.pos[x as usize] = i as i32;
        }
        w.local.pairs.clear();
        for &rk in es {
            let (x, y) = self.g.edge(self.truss.order[rk as usize]);
            w.local.pairs.push((w.pos[x as usize] as u32, w.pos[y as usize] as u32));
        }
        for &x in vs {
            w.pos[x as usize] = -1;
        }
        w.local.load(vs, &mut w.levels[0]);
        w.succ[0] = scratch;

        let (u, v) = self.g.edge(self.truss.order[pos]);
        w.stack.push(u);
        w.stack.push(v);
        w.solve_edges(sh, 0, need, sink);
        w.stack.truncate(w.stack.len() - 2);
    }
}
