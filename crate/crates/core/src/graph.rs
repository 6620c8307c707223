//! Compact undirected graph storage.
//!
//! Vertices are dense `u32` ids in `[0, n)`. Every neighbor list is strictly
//! ascending, and each adjacency slot carries the dense id of the edge it
//! belongs to. Edge ids follow the lexicographic order of `(u, v)` with
//! `u < v`.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};

pub type Vertex = u32;
pub type EdgeId = u32;

/// Read-only adjacency access shared by the global graph and branch-local
/// subgraphs.
pub trait AdjacencyView {
    fn vertex_count(&self) -> usize;
    /// Sorted neighbor list of `v`, in the view's own index space.
    fn neighbors(&self, v: usize) -> &[Vertex];

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }
}

/// Raw pairs as read from an edge-list file, plus the dense id table.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeListSource {
    pub pairs: Vec<(u64, u64)>,
    /// Sorted distinct raw ids; position is the dense id.
    pub raw_ids: Vec<u64>,
}

impl EdgeListSource {
    pub fn from_pairs(pairs: Vec<(u64, u64)>) -> Self {
        let mut raw_ids: Vec<u64> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        raw_ids.sort_unstable();
        raw_ids.dedup();
        EdgeListSource { pairs, raw_ids }
    }

    pub fn dense_id(&self, raw: u64) -> Option<Vertex> {
        self.raw_ids.binary_search(&raw).ok().map(|i| i as Vertex)
    }
}

/// Parses whitespace-separated edge lists. Lines starting with `#` or `%` are
/// comments, blank lines are skipped and columns past the second are ignored.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<EdgeListSource> {
    let mut pairs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut field = |name: &str| -> Result<u64> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: format!("missing {name} endpoint"),
            })?;
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid vertex id {tok:?}"),
            })
        };
        let u = field("first")?;
        let v = field("second")?;
        pairs.push((u, v));
    }
    Ok(EdgeListSource::from_pairs(pairs))
}

pub fn parse_edge_list_str(text: &str) -> Result<EdgeListSource> {
    parse_edge_list(text.as_bytes())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    adj: Vec<Vertex>,
    adj_edge: Vec<EdgeId>,
    edges: Vec<(Vertex, Vertex)>,
    raw_ids: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a simple graph on `n` vertices. Self-loops are dropped and
    /// parallel or reversed pairs collapse to one edge.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, pairs: I) -> Graph
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges: Vec<(Vertex, Vertex)> = pairs
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| {
                assert!(
                    (u as usize) < n && (v as usize) < n,
                    "edge ({u}, {v}) out of range for n = {n}"
                );
                (u.min(v), u.max(v))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();

        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adj = vec![0; 2 * edges.len()];
        let mut adj_edge = vec![0; 2 * edges.len()];
        // Edges are lexicographic: for a fixed x, every (w, x) with w < x
        // precedes every (x, y), and each group is ascending on its own.
        for (id, &(u, v)) in edges.iter().enumerate() {
            let (u, v) = (u as usize, v as usize);
            adj[fill[u]] = v as Vertex;
            adj_edge[fill[u]] = id as EdgeId;
            fill[u] += 1;
            adj[fill[v]] = u as Vertex;
            adj_edge[fill[v]] = id as EdgeId;
            fill[v] += 1;
        }
        Graph {
            offsets,
            adj,
            adj_edge,
            edges,
            raw_ids: None,
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        let v = v as usize;
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edge ids aligned with [`Graph::neighbors`].
    #[inline]
    pub fn neighbor_edges(&self, v: Vertex) -> &[EdgeId] {
        let v = v as usize;
        &self.adj_edge[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n() as Vertex).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id as usize]
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a)
            .binary_search(&b)
            .ok()
            .map(|pos| self.neighbor_edges(a)[pos])
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.edge_id(u, v).is_some()
    }

    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        intersect_sorted(self.neighbors(u), self.neighbors(v), &mut out);
        out
    }

    /// Original id of a dense vertex, when the graph came from a file.
    pub fn raw_id(&self, v: Vertex) -> u64 {
        match &self.raw_ids {
            Some(ids) => ids[v as usize],
            None => v as u64,
        }
    }

    pub fn raw_ids(&self) -> Option<&[u64]> {
        self.raw_ids.as_deref()
    }

    /// Writes one `u v` line per edge, `u < v`, ascending.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}")?;
        }
        Ok(())
    }
}

impl AdjacencyView for Graph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn neighbors(&self, v: usize) -> &[Vertex] {
        Graph::neighbors(self, v as Vertex)
    }
}

/// Normalizes a parsed edge list into a [`Graph`]. Every raw id that was
/// observed becomes a vertex, including ids seen only on self-loops.
pub fn build_graph(src: &EdgeListSource) -> Graph {
    let pairs = src.pairs.iter().map(|&(u, v)| {
        (
            src.dense_id(u).expect("raw id missing from remap"),
            src.dense_id(v).expect("raw id missing from remap"),
        )
    });
    let mut g = Graph::from_edges(src.raw_ids.len(), pairs);
    let identity = src.raw_ids.iter().enumerate().all(|(i, &r)| i as u64 == r);
    if !identity {
        g.raw_ids = Some(src.raw_ids.clone());
    }
    g
}

/// Appends the sorted intersection of two ascending lists to `out`.
#[inline]
pub fn intersect_sorted(a: &[Vertex], b: &[Vertex], out: &mut Vec<Vertex>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// Undirected graph over local indices `0..len`, each carrying a label
/// (usually the global vertex id).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LocalGraph {
    pub labels: Vec<Vertex>,
    offsets: Vec<usize>,
    adj: Vec<Vertex>,
}

impl LocalGraph {
    /// `pairs` are local index pairs; duplicates and self-loops are dropped.
    pub fn from_local_edges(labels: Vec<Vertex>, pairs: &[(Vertex, Vertex)]) -> LocalGraph {
        let n = labels.len();
        let mut lists: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for &(a, b) in pairs {
            if a != b {
                lists[a as usize].push(b);
                lists[b as usize].push(a);
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut adj = Vec::new();
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
            adj.extend_from_slice(list);
            offsets.push(adj.len());
        }
        LocalGraph { labels, offsets, adj }
    }

    /// Induced subgraph of `g` on the ascending vertex list `vertices`.
    pub fn induced(g: &Graph, vertices: &[Vertex]) -> LocalGraph {
        let mut offsets = Vec::with_capacity(vertices.len() + 1);
        offsets.push(0);
        let mut adj = Vec::new();
        let mut common = Vec::new();
        for &v in vertices {
            common.clear();
            intersect_sorted(g.neighbors(v), vertices, &mut common);
            adj.extend(common.iter().map(|w| vertices.binary_search(w).unwrap() as Vertex));
            offsets.push(adj.len());
        }
        LocalGraph {
            labels: vertices.to_vec(),
            offsets,
            adj,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.neighbors(a).binary_search(&(b as Vertex)).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[Vertex] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }
}

impl AdjacencyView for LocalGraph {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn neighbors(&self, v: usize) -> &[Vertex] {
        LocalGraph::neighbors(self, v)
    }
}
