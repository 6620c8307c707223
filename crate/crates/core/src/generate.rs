//! Deterministic synthetic graphs for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};

pub fn complete(n: usize) -> Graph {
    let n32 = n as Vertex;
    Graph::from_edges(n, (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))))
}

/// Complete bipartite graph K_{p,q}; the left side is `0..p`.
pub fn bipartite(p: usize, q: usize) -> Graph {
    let (p32, q32) = (p as Vertex, q as Vertex);
    Graph::from_edges(p + q, (0..p32).flat_map(|u| (0..q32).map(move |j| (u, p32 + j))))
}

/// Erdős–Rényi G(n, p).
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_edges(n, gnp_pairs(n, p, &mut rng))
}

/// G(n, p) with a clique on `k` randomly chosen vertices added on top.
pub fn planted_clique(n: usize, p: f64, k: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = gnp_pairs(n, p, &mut rng);
    let mut ids: Vec<Vertex> = (0..n as Vertex).collect();
    ids.shuffle(&mut rng);
    let planted = &ids[..k.min(n)];
    for (i, &u) in planted.iter().enumerate() {
        for &v in &planted[i + 1..] {
            pairs.push((u, v));
        }
    }
    Graph::from_edges(n, pairs)
}

/// Complete graph on `n` vertices with the listed pairs removed.
pub fn complete_minus(n: usize, missing: &[(Vertex, Vertex)]) -> Graph {
    let mut gone: Vec<(Vertex, Vertex)> = missing.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    gone.sort_unstable();
    let n32 = n as Vertex;
    Graph::from_edges(
        n,
        (0..n32)
            .flat_map(|u| (u + 1..n32).map(move |v| (u, v)))
            .filter(|e| gone.binary_search(e).is_err()),
    )
}

fn gnp_pairs(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let p = p.clamp(0.0, 1.0);
    let mut pairs = Vec::new();
    if p == 0.0 {
        return pairs;
    }
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            if p >= 1.0 || rng.gen::<f64>() < p {
                pairs.push((u, v));
            }
        }
    }
    pairs
}
