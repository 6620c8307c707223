use super::heap::MinHeap;
use crate::graph::{Graph, Vertex};

/// Result of minimum-degree peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    /// Vertices in removal order.
    pub order: Vec<Vertex>,
    /// Position of each vertex in `order`.
    pub rank: Vec<u32>,
    pub core: Vec<u32>,
    pub degeneracy: u32,
}

/// Minimum-degree peeling; among vertices of equal remaining degree the
/// smallest id goes first.
pub fn core_decompose(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut heap = MinHeap::new((0..n as Vertex).map(|v| g.degree(v) as u32).collect());
    let mut order = Vec::with_capacity(n);
    let mut core = vec![0u32; n];
    let mut level = 0u32;
    while let Some((v, d)) = heap.pop() {
        level = level.max(d);
        core[v as usize] = level;
        order.push(v);
        for &w in g.neighbors(v) {
            if heap.contains(w) {
                heap.decrement(w);
            }
        }
    }
    let mut rank = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v as usize] = i as u32;
    }
    DegeneracyOrdering {
        order,
        rank,
        core,
        degeneracy: level,
    }
}
