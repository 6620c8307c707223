use crate::graph::{AdjacencyView, Vertex};

/// Greedy proper coloring plus the color-based vertex ranking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// Color of each vertex, starting at 1.
    pub colors: Vec<u32>,
    pub num_colors: u32,
    /// Vertices sorted by non-increasing color, ties by index.
    pub order: Vec<Vertex>,
    /// Position of each vertex in `order`.
    pub rank: Vec<u32>,
}

/// Colors vertices in non-increasing degree order (ties by index), giving each
/// the smallest positive color not used by an already colored neighbor.
pub fn greedy_color<G: AdjacencyView + ?Sized>(g: &G) -> Coloring {
    let n = g.vertex_count();
    let mut by_degree: Vec<Vertex> = (0..n as Vertex).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v as usize)), v));

    let mut colors = vec![0u32; n];
    // stamp[c] == v + 1 marks color c as taken while coloring v
    let mut stamp = vec![0u32; n + 2];
    let mut num_colors = 0;
    for &v in &by_degree {
        for &w in g.neighbors(v as usize) {
            let c = colors[w as usize] as usize;
            if c != 0 {
                stamp[c] = v + 1;
            }
        }
        let mut c = 1;
        while stamp[c] == v + 1 {
            c += 1;
        }
        colors[v as usize] = c as u32;
        num_colors = num_colors.max(c as u32);
    }

    let mut order: Vec<Vertex> = (0..n as Vertex).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(colors[v as usize]), v));
    let mut rank = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v as usize] = i as u32;
    }
    Coloring {
        colors,
        num_colors,
        order,
        rank,
    }
}

/// Acyclic orientation `u -> v` iff `rank[u] < rank[v]`.
///
/// Vertices are stored in rank space: slot `r` holds `order[r]`, and each
/// out-list holds ranks in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    pub order: Vec<Vertex>,
    pub rank: Vec<u32>,
    offsets: Vec<usize>,
    out: Vec<u32>,
}

impl OrientedGraph {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.out.len()
    }

    /// Out-neighbors of the vertex at rank `r`, as ranks.
    #[inline]
    pub fn out_by_rank(&self, r: usize) -> &[u32] {
        &self.out[self.offsets[r]..self.offsets[r + 1]]
    }

    /// Out-neighbors of vertex `v`, as vertex ids in rank order.
    pub fn out_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.out_by_rank(self.rank[v as usize] as usize)
            .iter()
            .map(|&r| self.order[r as usize])
            .collect()
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_by_rank(self.rank[v as usize] as usize).len()
    }

    /// Source rank of the `j`-th stored arc.
    pub fn arc(&self, j: usize) -> (u32, u32) {
        let src = self.offsets.partition_point(|&o| o <= j) - 1;
        (src as u32, self.out[j])
    }
}

pub fn orient_by_rank<G: AdjacencyView + ?Sized>(g: &G, rank: &[u32]) -> OrientedGraph {
    let n = g.vertex_count();
    assert_eq!(rank.len(), n, "rank must cover every vertex");
    let mut order = vec![0 as Vertex; n];
    for (v, &r) in rank.iter().enumerate() {
        order[r as usize] = v as Vertex;
    }
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    let mut out = Vec::new();
    for &v in &order {
        let r = rank[v as usize];
        let start = out.len();
        out.extend(
            g.neighbors(v as usize)
                .iter()
                .map(|&w| rank[w as usize])
                .filter(|&rw| rw > r),
        );
        out[start..].sort_unstable();
        offsets.push(out.len());
    }
    OrientedGraph {
        order,
        rank: rank.to_vec(),
        offsets,
        out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Graph;

    fn proper(g: &Graph, c: &Coloring) -> bool {
        g.edges()
            .iter()
            .all(|&(u, v)| c.colors[u as usize] != c.colors[v as usize])
    }

    #[test]
    fn clique_needs_all_colors() {
        let c = greedy_color(&generate::complete(4));
        assert_eq!(c.num_colors, 4);
    }

    #[test]
    fn path_uses_two_colors() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let c = greedy_color(&g);
        assert_eq!(c.num_colors, 2);
        // vertex 1 has the largest degree and is colored first
        assert_eq!(c.colors, vec![2, 1, 2]);
        assert_eq!(c.order, vec![0, 2, 1]);
    }

    #[test]
    fn random_colorings_are_proper_and_ranked() {
        for seed in 0..20 {
            let g = generate::gnp(50, 0.25, seed);
            let c = greedy_color(&g);
            assert!(proper(&g, &c));
            assert!(c.colors.iter().all(|&x| x >= 1 && x <= c.num_colors));
            for w in c.order.windows(2) {
                let (a, b) = (c.colors[w[0] as usize], c.colors[w[1] as usize]);
                assert!(a > b || (a == b && w[0] < w[1]));
            }
        }
    }

    #[test]
    fn triangle_orientation() {
        let g = generate::complete(3);
        let d = orient_by_rank(&g, &[0, 1, 2]);
        assert_eq!((0..3).map(|v| d.out_degree(v)).collect::<Vec<_>>(), vec![2, 1, 0]);
        let d = orient_by_rank(&g, &[2, 0, 1]);
        assert_eq!(d.out_neighbors(1), vec![2, 0]);
    }

    #[test]
    fn orientation_partitions_edges() {
        let g = generate::gnp(40, 0.3, 5);
        let c = greedy_color(&g);
        let d = orient_by_rank(&g, &c.rank);
        assert_eq!(d.edge_count(), g.m());
        let mut seen = Vec::new();
        for r in 0..d.len() {
            for &s in d.out_by_rank(r) {
                assert!(s as usize > r, "arc must point forward in rank");
                let (a, b) = (d.order[r], d.order[s as usize]);
                seen.push((a.min(b), a.max(b)));
            }
        }
        seen.sort_unstable();
        assert_eq!(seen, g.edges());
        for j in 0..d.edge_count() {
            let (src, dst) = d.arc(j);
            assert!(d.out_by_rank(src as usize).contains(&dst));
        }
    }
}
