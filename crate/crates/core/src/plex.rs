//! Early termination on dense branches.
//!
//! A graph is a t-plex when every vertex misses at most `t` vertices,
//! counting itself. Branches whose local graph is a 1- or 2-plex are listed
//! combinatorially from an F/L/R split; sparser plexes switch to branching
//! over the complement graph.

use std::str::FromStr;

use crate::combinatorics::{binomial, Combinations};
use crate::error::{Error, Result};
use crate::graph::{LocalGraph, Vertex};
use crate::listing::CliqueSink;

/// Smallest `t` for which `g` is a t-plex: `|V| - min degree`. Zero for the
/// empty graph.
pub fn detect_plex(g: &LocalGraph) -> u32 {
    let n = g.len();
    (0..n).map(|v| (n - g.neighbors(v).len()) as u32).max().unwrap_or(0)
}

/// F holds universal vertices; `left[i]` and `right[i]` are the only
/// non-adjacent pair involving either of them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlexPartition {
    pub full: Vec<u32>,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

/// Splits a 1- or 2-plex. Within each non-adjacent pair the vertex with the
/// smaller label goes to `left`.
pub fn partition_2plex(g: &LocalGraph) -> Result<PlexPartition> {
    let n = g.len();
    let mut part = PlexPartition::default();
    for v in 0..n {
        let nb = g.neighbors(v);
        if nb.len() + 1 == n {
            part.full.push(v as u32);
            continue;
        }
        if nb.len() + 2 != n {
            return Err(Error::NotAPlex {
                expected: 2,
                detail: format!("local vertex {v} misses {} vertices", n - nb.len()),
            });
        }
        // the single index other than v absent from the sorted list
        let mut partner = None;
        let mut it = nb.iter().peekable();
        for w in 0..n as u32 {
            if w as usize == v {
                continue;
            }
            if it.peek() == Some(&&w) {
                it.next();
            } else {
                partner = Some(w);
                break;
            }
        }
        let w = partner.expect("degree n-2 implies one non-neighbor");
        if g.labels[v] < g.labels[w as usize] {
            part.left.push(v as u32);
            part.right.push(w);
        }
    }
    Ok(part)
}

/// Moves `right[j]` for every `j` in `picked` (ascending) to the tail and
/// returns how many entries remain in front.
pub(crate) fn exclude_aligned(right: &mut [u32], picked: &[usize]) -> usize {
    let mut tail = right.len();
    for &j in picked.iter().rev() {
        tail -= 1;
        right.swap(j, tail);
    }
    tail
}

pub(crate) fn restore_aligned(right: &mut [u32], picked: &[usize]) {
    let start = right.len() - picked.len();
    for (tail, &j) in (start..).zip(picked) {
        right.swap(j, tail);
    }
}

/// Number of `l`-cliques of a 2-plex with the given part sizes.
fn count_2plex(f: usize, pairs: usize, l: usize) -> u64 {
    if f + pairs < l {
        return 0;
    }
    let mut total = 0u64;
    for c1 in l.saturating_sub(pairs)..=l.min(f) {
        let from_f = binomial(f, c1);
        for c2 in 0..=(l - c1).min(pairs) {
            let c3 = l - c1 - c2;
            let term = from_f
                .saturating_mul(binomial(pairs, c2))
                .saturating_mul(binomial(pairs - c2, c3));
            total = total.saturating_add(term);
        }
    }
    total
}

/// Lists every `l`-clique of the 2-plex `g`, each joined with `prefix`.
/// Returns the number of cliques listed.
pub fn kc2plex_list(prefix: &[Vertex], g: &LocalGraph, l: usize, sink: &mut CliqueSink) -> Result<u64> {
    let part = partition_2plex(g)?;
    let (f, pairs) = (part.full.len(), part.left.len());
    if f + pairs < l {
        return Ok(0);
    }
    if !sink.materializes() {
        let c = count_2plex(f, pairs, l);
        sink.add_bulk(c);
        return Ok(c);
    }

    let mut clique: Vec<Vertex> = prefix.to_vec();
    let base = clique.len();
    let mut right = part.right.clone();
    let (mut fc, mut lc, mut rc) = (
        Combinations::default(),
        Combinations::default(),
        Combinations::default(),
    );
    let mut emitted = 0u64;
    for c1 in l.saturating_sub(pairs)..=l.min(f) {
        fc.reset(f, c1);
        while let Some(fsub) = fc.next() {
            clique.truncate(base);
            clique.extend(fsub.iter().map(|&i| g.labels[part.full[i] as usize]));
            let after_f = clique.len();
            for c2 in 0..=(l - c1).min(pairs) {
                let c3 = l - c1 - c2;
                if c3 > pairs - c2 {
                    continue;
                }
                lc.reset(pairs, c2);
                while let Some(lsub) = lc.next() {
                    clique.truncate(after_f);
                    clique.extend(lsub.iter().map(|&i| g.labels[part.left[i] as usize]));
                    let after_l = clique.len();
                    let avail = exclude_aligned(&mut right, lsub);
                    #[cfg(test)]
                    check_exclusion(&part, &right[..avail], lsub);
                    rc.reset(avail, c3);
                    while let Some(rsub) = rc.next() {
                        clique.truncate(after_l);
                        clique.extend(rsub.iter().map(|&i| g.labels[right[i] as usize]));
                        sink.emit(&clique);
                        emitted += 1;
                    }
                    restore_aligned(&mut right, lsub);
                }
            }
        }
    }
    Ok(emitted)
}

#[cfg(test)]
fn check_exclusion(part: &PlexPartition, kept: &[u32], lsub: &[usize]) {
    let banned: Vec<u32> = lsub.iter().map(|&i| part.right[i]).collect();
    let mut expect: Vec<u32> = part.right.iter().copied().filter(|r| !banned.contains(r)).collect();
    let mut got = kept.to_vec();
    expect.sort_unstable();
    got.sort_unstable();
    assert_eq!(got, expect, "aligned exclusion disagrees with set difference");
}

/// Complement of a local graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseGraph {
    n: usize,
    matrix: Vec<bool>,
    lists: Vec<Vec<u32>>,
    /// Vertices adjacent to everything in the original graph.
    pub isolated: Vec<u32>,
}

impl InverseGraph {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.matrix[a * self.n + b]
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn edge_count(&self) -> usize {
        self.lists.iter().map(Vec::len).sum::<usize>() / 2
    }
}

pub fn build_inverse(g: &LocalGraph) -> InverseGraph {
    let n = g.len();
    let mut matrix = vec![true; n * n];
    for v in 0..n {
        matrix[v * n + v] = false;
        for &w in g.neighbors(v) {
            matrix[v * n + w as usize] = false;
        }
    }
    let lists: Vec<Vec<u32>> = (0..n)
        .map(|v| (0..n as u32).filter(|&w| matrix[v * n + w as usize]).collect())
        .collect();
    let isolated = (0..n as u32).filter(|&v| lists[v as usize].is_empty()).collect();
    InverseGraph {
        n,
        matrix,
        lists,
        isolated,
    }
}

struct TPlexSearch<'a, 'b> {
    g: &'a LocalGraph,
    inv: &'a InverseGraph,
    sink: &'b mut CliqueSink,
    clique: Vec<Vertex>,
    combos: Combinations,
    emitted: u64,
}

impl TPlexSearch<'_, '_> {
    fn recurse(&mut self, cand: &[u32], l: usize) {
        if l == 0 {
            self.sink.emit(&self.clique);
            self.emitted += 1;
            return;
        }
        let iso = &self.inv.isolated;
        if iso.len() >= l {
            if self.sink.materializes() {
                let base = self.clique.len();
                self.combos.reset(iso.len(), l);
                while let Some(sub) = self.combos.next() {
                    self.clique.truncate(base);
                    self.clique.extend(sub.iter().map(|&i| self.g.labels[iso[i] as usize]));
                    self.sink.emit(&self.clique);
                    self.emitted += 1;
                }
                self.clique.truncate(base);
            } else {
                let c = binomial(iso.len(), l);
                self.sink.add_bulk(c);
                self.emitted += c;
            }
        }
        let mut next = Vec::with_capacity(cand.len());
        for (i, &v) in cand.iter().enumerate() {
            next.clear();
            next.extend(
                cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| !self.inv.has_edge(v as usize, w as usize)),
            );
            if next.len() + iso.len() >= l - 1 {
                self.clique.push(self.g.labels[v as usize]);
                let child = std::mem::take(&mut next);
                self.recurse(&child, l - 1);
                next = child;
                self.clique.pop();
            }
        }
    }
}

/// Lists every `l`-clique of `g` by branching over its complement; meant for
/// t-plexes with `t >= 3` but correct on any graph.
pub fn kctplex_list(prefix: &[Vertex], g: &LocalGraph, l: usize, sink: &mut CliqueSink) -> u64 {
    let inv = build_inverse(g);
    let cand: Vec<u32> = (0..g.len() as u32)
        .filter(|&v| !inv.neighbors(v as usize).is_empty())
        .collect();
    if cand.len() + inv.isolated.len() < l {
        return 0;
    }
    let mut search = TPlexSearch {
        g,
        inv: &inv,
        sink,
        clique: prefix.to_vec(),
        combos: Combinations::default(),
        emitted: 0,
    };
    search.recurse(&cand, l);
    search.emitted
}

/// Plex threshold for early termination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EtPolicy {
    Disabled,
    /// `t = 2` when `k <= tau / 2`, otherwise `t = 3`.
    #[default]
    Auto,
    Threshold(u32),
}

impl EtPolicy {
    pub fn threshold(self, k: usize, tau: u32) -> Option<u32> {
        match self {
            EtPolicy::Disabled => None,
            EtPolicy::Auto => Some(if 2 * k as u64 <= tau as u64 { 2 } else { 3 }),
            EtPolicy::Threshold(t) => Some(t),
        }
    }

    pub fn needs_tau(self) -> bool {
        self == EtPolicy::Auto
    }
}

impl FromStr for EtPolicy {
    type Err = Error;

    /// Accepts `none`, `auto` or `t=N` with `N >= 1`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(EtPolicy::Disabled),
            "auto" => Ok(EtPolicy::Auto),
            _ => {
                let t = s
                    .strip_prefix("t=")
                    .and_then(|v| v.parse::<u32>().ok())
                    .filter(|&t| t >= 1)
                    .ok_or_else(|| Error::InvalidArgument(format!("bad early-termination policy {s:?}")))?;
                Ok(EtPolicy::Threshold(t))
            }
        }
    }
}

/// Dispatches a branch whose local graph is a `gap`-plex.
pub(crate) fn terminate(prefix: &[Vertex], g: &LocalGraph, gap: u32, l: usize, sink: &mut CliqueSink) -> u64 {
    if gap <= 2 {
        kc2plex_list(prefix, g, l, sink).expect("gap <= 2 guarantees a 2-plex")
    } else {
        kctplex_list(prefix, g, l, sink)
    }
}
