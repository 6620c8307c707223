//! Explicit edge-oriented branching on `(S, g, l)` triples. Slow but direct;
//! the optimized listers are checked against it.

use std::collections::HashSet;

use super::CliqueSink;
use crate::graph::{EdgeId, Graph, Vertex};

/// A branch: partial clique, candidate graph with its edges in branching
/// order, and the number of vertices still to add.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub clique: Vec<Vertex>,
    /// Ascending.
    pub vertices: Vec<Vertex>,
    /// Each pair has `u < v`; the order is the branching order.
    pub edges: Vec<(Vertex, Vertex)>,
    pub remaining: usize,
}

impl Branch {
    /// Root branch over all of `g`, branching on edges in `order`.
    pub fn root(g: &Graph, k: usize, order: &[EdgeId]) -> Branch {
        Branch {
            clique: Vec::new(),
            vertices: (0..g.n() as Vertex).collect(),
            edges: order.iter().map(|&e| g.edge(e)).collect(),
            remaining: k,
        }
    }

    pub fn child(&self, i: usize) -> Branch {
        ebbkc_branch(self, i)
    }
}

/// Sub-branch for the `i`-th edge: the edges before it are removed, then the
/// graph is restricted to the common neighbors of its endpoints.
///
/// Panics if `i` is out of range.
pub fn ebbkc_branch(parent: &Branch, i: usize) -> Branch {
    let (u, v) = parent.edges[i];
    let kept = &parent.edges[i..];
    let present: HashSet<(Vertex, Vertex)> = kept.iter().copied().collect();
    let adjacent = |a: Vertex, b: Vertex| present.contains(&(a.min(b), a.max(b)));
    let vertices: Vec<Vertex> = parent
        .vertices
        .iter()
        .copied()
        .filter(|&w| w != u && w != v && adjacent(u, w) && adjacent(v, w))
        .collect();
    let edges = kept[1..]
        .iter()
        .copied()
        .filter(|&(a, b)| vertices.binary_search(&a).is_ok() && vertices.binary_search(&b).is_ok())
        .collect();
    let mut clique = parent.clique.clone();
    clique.extend([u, v]);
    Branch {
        clique,
        vertices,
        edges,
        remaining: parent.remaining.saturating_sub(2),
    }
}

/// Edge-oriented listing with explicit branches in the given edge order.
pub fn generic_list(g: &Graph, k: usize, order: &[EdgeId], sink: &mut CliqueSink) -> u64 {
    fn rec(b: &Branch, sink: &mut CliqueSink) -> u64 {
        if b.vertices.len() < b.remaining {
            return 0;
        }
        let mut scratch = b.clique.clone();
        match b.remaining {
            0 => {
                sink.emit(&b.clique);
                1
            }
            1 => {
                for &w in &b.vertices {
                    sink.emit_with(&mut scratch, &[w]);
                }
                b.vertices.len() as u64
            }
            2 => {
                for &(x, y) in &b.edges {
                    sink.emit_with(&mut scratch, &[x, y]);
                }
                b.edges.len() as u64
            }
            _ => (0..b.edges.len()).map(|i| rec(&ebbkc_branch(b, i), sink)).sum(),
        }
    }
    rec(&Branch::root(g, k, order), sink)
}
