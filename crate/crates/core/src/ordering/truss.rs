//! Support peeling: the truss-based edge ordering.
//!
//! Edges are removed one at a time, always taking a remaining edge whose
//! endpoints have the fewest common neighbors in the residual graph (ties go
//! to the smaller edge id). The removal sequence is the edge ordering; the
//! largest support seen at removal time is `tau`.
//!
//! Each edge `e` at position `r` also owns two successor sets, both taken in
//! the residual graph right before `e` is removed:
//! * `VSet(e)`: common neighbors `w` of `e`'s endpoints, i.e. both `(u, w)`
//!   and `(v, w)` sit after position `r`.
//! * `ESet(e)`: positions of the edges among `VSet(e)` that sit after `r`.

use super::heap::MinHeap;
use crate::graph::{EdgeId, Graph, Vertex};

/// Default limit on materialized `ESet` entries before falling back to
/// per-edge recomputation.
pub const DEFAULT_SUCCESSOR_CAP: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrussOrdering {
    /// Edge ids in peel order.
    pub order: Vec<EdgeId>,
    /// Position of each edge id in `order`.
    pub rank: Vec<u32>,
    /// Support of `order[i]` at the moment it was removed.
    pub support: Vec<u32>,
    pub tau: u32,
}

impl TrussOrdering {
    /// Largest truss number, `tau + 2`.
    pub fn max_truss(&self) -> u32 {
        self.tau + 2
    }
}

pub fn truss_decompose(g: &Graph) -> TrussOrdering {
    let m = g.m();
    let mut support = vec![0u32; m];
    let mut mark = vec![0u32; g.n()];
    // edge ids are grouped by their smaller endpoint
    for u in 0..g.n() as Vertex {
        let (nu, eu) = (g.neighbors(u), g.neighbor_edges(u));
        let upper = nu.partition_point(|&w| w <= u);
        if upper == nu.len() {
            continue;
        }
        for &w in nu {
            mark[w as usize] = 1;
        }
        for (&v, &e) in nu[upper..].iter().zip(&eu[upper..]) {
            support[e as usize] = g.neighbors(v).iter().filter(|&&w| mark[w as usize] != 0).count() as u32;
        }
        for &w in nu {
            mark[w as usize] = 0;
        }
    }
    let mut heap = MinHeap::new(support);
    let mut order = Vec::with_capacity(m);
    let mut removed_support = Vec::with_capacity(m);
    let mut tau = 0;
    while let Some((e, s)) = heap.pop() {
        order.push(e);
        removed_support.push(s);
        tau = tau.max(s);
        if s == 0 {
            continue;
        }
        let (u, v) = g.edge(e);
        for_each_common(g, u, v, &mut mark, |a, b| {
            if heap.contains(a) && heap.contains(b) {
                heap.decrement(a);
                heap.decrement(b);
            }
        });
    }

    let mut rank = vec![0u32; m];
    for (pos, &e) in order.iter().enumerate() {
        rank[e as usize] = pos as u32;
    }
    TrussOrdering {
        order,
        rank,
        support: removed_support,
        tau,
    }
}

/// `VSet`/`ESet` for every position of a [`TrussOrdering`].
#[derive(Debug, Clone)]
pub enum SuccessorSets {
    /// CSR storage indexed by edge position.
    Materialized {
        vset_offsets: Vec<usize>,
        vset: Vec<Vertex>,
        eset_offsets: Vec<usize>,
        eset: Vec<u32>,
    },
    /// Recomputed from the ranks whenever asked.
    OnDemand,
}

impl SuccessorSets {
    /// Materializes all sets unless the total `ESet` size would pass `cap`.
    pub fn build(g: &Graph, truss: &TrussOrdering, cap: usize) -> SuccessorSets {
        let m = g.m();
        let mut vset_offsets = Vec::with_capacity(m + 1);
        let mut eset_offsets = Vec::with_capacity(m + 1);
        vset_offsets.push(0);
        eset_offsets.push(0);
        let mut vset = Vec::new();
        let mut eset = Vec::new();
        let mut scratch = SuccessorScratch::default();
        for pos in 0..m {
            scratch.fill(g, truss, pos);
            if eset.len() + scratch.eset.len() > cap {
                return SuccessorSets::OnDemand;
            }
            vset.extend_from_slice(&scratch.vset);
            eset.extend_from_slice(&scratch.eset);
            vset_offsets.push(vset.len());
            eset_offsets.push(eset.len());
        }
        SuccessorSets::Materialized {
            vset_offsets,
            vset,
            eset_offsets,
            eset,
        }
    }

    pub fn is_materialized(&self) -> bool {
        matches!(self, SuccessorSets::Materialized { .. })
    }

    /// Like [`SuccessorSets::get`], but returns `None` without building
    /// `ESet` when `VSet` has fewer than `min_vertices` vertices.
    pub fn get_sized<'a>(
        &'a self,
        g: &Graph,
        truss: &TrussOrdering,
        pos: usize,
        min_vertices: usize,
        scratch: &'a mut SuccessorScratch,
    ) -> Option<(&'a [Vertex], &'a [u32])> {
        if let SuccessorSets::OnDemand = self {
            scratch.prepare(g);
            let (u, v) = g.edge(truss.order[pos]);
            fill_vset(g, truss, pos, u, v, &mut scratch.vset, &mut scratch.mark);
            if scratch.vset.len() < min_vertices {
                return None;
            }
            fill_eset(g, truss, pos, &scratch.vset, &mut scratch.eset, &mut scratch.mark);
            return Some((&scratch.vset, &scratch.eset));
        }
        let (vs, es) = self.get(g, truss, pos, scratch);
        (vs.len() >= min_vertices).then_some((vs, es))
    }

    /// Returns `(VSet, ESet)` of the edge at position `pos`. `VSet` is
    /// ascending by vertex id, `ESet` ascending by position.
    pub fn get<'a>(
        &'a self,
        g: &Graph,
        truss: &TrussOrdering,
        pos: usize,
        scratch: &'a mut SuccessorScratch,
    ) -> (&'a [Vertex], &'a [u32]) {
        match self {
            SuccessorSets::Materialized {
                vset_offsets,
                vset,
                eset_offsets,
                eset,
            } => (
                &vset[vset_offsets[pos]..vset_offsets[pos + 1]],
                &eset[eset_offsets[pos]..eset_offsets[pos + 1]],
            ),
            SuccessorSets::OnDemand => {
                scratch.fill(g, truss, pos);
                (&scratch.vset, &scratch.eset)
            }
        }
    }
}

/// Buffers for recomputing successor sets.
#[derive(Debug, Clone, Default)]
pub struct SuccessorScratch {
    vset: Vec<Vertex>,
    eset: Vec<u32>,
    mark: Vec<u32>,
}

impl SuccessorScratch {
    fn prepare(&mut self, g: &Graph) {
        if self.mark.len() < g.n() {
            self.mark.resize(g.n(), 0);
        }
    }

    fn fill(&mut self, g: &Graph, truss: &TrussOrdering, pos: usize) {
        self.prepare(g);
        let (u, v) = g.edge(truss.order[pos]);
        fill_vset(g, truss, pos, u, v, &mut self.vset, &mut self.mark);
        fill_eset(g, truss, pos, &self.vset, &mut self.eset, &mut self.mark);
    }
}

/// Calls `f(edge(u, w), edge(v, w))` for every common neighbor `w` of `u`
/// and `v`. `mark` must be zero on entry and is left zeroed.
fn for_each_common<F: FnMut(EdgeId, EdgeId)>(g: &Graph, u: Vertex, v: Vertex, mark: &mut [u32], mut f: F) {
    for (&w, &e) in g.neighbors(u).iter().zip(g.neighbor_edges(u)) {
        mark[w as usize] = e + 1;
    }
    for (&w, &e) in g.neighbors(v).iter().zip(g.neighbor_edges(v)) {
        let a = mark[w as usize];
        if a != 0 {
            f(a - 1, e);
        }
    }
    for &w in g.neighbors(u) {
        mark[w as usize] = 0;
    }
}

fn fill_vset(
    g: &Graph,
    truss: &TrussOrdering,
    pos: usize,
    u: Vertex,
    v: Vertex,
    vset: &mut Vec<Vertex>,
    mark: &mut [u32],
) {
    vset.clear();
    let r = pos as u32;
    for_each_common(g, u, v, mark, |a, b| {
        if truss.rank[a as usize] > r && truss.rank[b as usize] > r {
            // the common neighbor is the far endpoint of edge `a`
            let (x, y) = g.edge(a);
            vset.push(if x == u { y } else { x });
        }
    });
    vset.sort_unstable();
}

fn fill_eset(g: &Graph, truss: &TrussOrdering, pos: usize, vset: &[Vertex], eset: &mut Vec<u32>, mark: &mut [u32]) {
    eset.clear();
    let r = pos as u32;
    for &w in vset {
        mark[w as usize] = 1;
    }
    for &w in vset {
        let (nw, ew) = (g.neighbors(w), g.neighbor_edges(w));
        let start = nw.partition_point(|&x| x <= w);
        for (&x, &e) in nw[start..].iter().zip(&ew[start..]) {
            if mark[x as usize] != 0 {
                let rk = truss.rank[e as usize];
                if rk > r {
                    eset.push(rk);
                }
            }
        }
    }
    for &w in vset {
        mark[w as usize] = 0;
    }
    eset.sort_unstable();
}
