//! Runs top-level work items sequentially or on a pool of scoped threads.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use super::dag::{DagLevel, LocalColoring};
use super::{CliqueSink, ListStats, PruneConfig};
use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::ordering::SuccessorScratch;

/// Read-only state common to every work item of one run.
pub(crate) struct Shared {
    pub k: usize,
    pub prune: PruneConfig,
    pub et_threshold: Option<u32>,
    pub n: usize,
    pub deadline: Option<Instant>,
    pub time_limit: Option<Duration>,
}

impl Shared {
    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn limit_error(&self) -> Error {
        Error::TimeLimit(self.time_limit.unwrap_or_default().as_secs_f64())
    }
}

pub(crate) trait TopLevel: Sync {
    fn items(&self) -> usize;
    fn run_item(&self, item: usize, shared: &Shared, w: &mut Worker, sink: &mut CliqueSink);
}

/// Per-thread scratch. Buffers are indexed by recursion depth and reused.
#[derive(Default)]
pub(crate) struct Worker {
    pub stats: ListStats,
    /// Partial clique of the current branch.
    pub stack: Vec<Vertex>,
    pub levels: Vec<DagLevel>,
    pub local: LocalColoring,
    pub cands: Vec<Vec<u32>>,
    pub vsets: Vec<Vec<Vertex>>,
    pub esets: Vec<Vec<u32>>,
    pub succ: Vec<SuccessorScratch>,
    /// Position map used while building children; all `-1` between uses.
    pub pos: Vec<i32>,
    pub stamp: Vec<u32>,
    pub stamp_id: u32,
    pub deg: Vec<u32>,
}

impl Worker {
    pub fn new(n: usize) -> Self {
        Worker {
            pos: vec![-1; n],
            stamp: vec![0; n + 2],
            ..Default::default()
        }
    }

    /// Makes every depth-indexed buffer at least `depth + 1` long.
    pub fn reserve_depth(&mut self, depth: usize) {
        let want = depth + 1;
        if self.levels.len() < want {
            self.levels.resize_with(want, Default::default);
            self.cands.resize_with(want, Default::default);
            self.vsets.resize_with(want, Default::default);
            self.esets.resize_with(want, Default::default);
            self.succ.resize_with(want, Default::default);
        }
    }

    /// Number of distinct values in `colors`, stopping once `enough` is hit.
    pub fn distinct_colors(&mut self, colors: impl Iterator<Item = u32>, enough: usize) -> usize {
        self.stamp_id = self.stamp_id.wrapping_add(1);
        if self.stamp_id == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.stamp_id = 1;
        }
        let mut distinct = 0;
        for c in colors {
            let c = c as usize;
            if c >= self.stamp.len() {
                self.stamp.resize(c + 1, 0);
            }
            if self.stamp[c] != self.stamp_id {
                self.stamp[c] = self.stamp_id;
                distinct += 1;
                if distinct >= enough {
                    break;
                }
            }
        }
        distinct
    }
}

pub(crate) fn execute(top: &dyn TopLevel, shared: &Shared, threads: usize, sink: &mut CliqueSink) -> Result<ListStats> {
    let items = top.items();
    if threads <= 1 {
        let mut w = Worker::new(shared.n);
        for item in 0..items {
            if shared.expired() {
                return Err(shared.limit_error());
            }
            top.run_item(item, shared, &mut w, sink);
        }
        return Ok(w.stats);
    }

    let cursor = AtomicUsize::new(0);
    let timed_out = AtomicBool::new(false);
    let results: Vec<(ListStats, CliqueSink)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|_| {
                let mut local = sink.fork();
                let (cursor, timed_out) = (&cursor, &timed_out);
                scope.spawn(move || {
                    let mut w = Worker::new(shared.n);
                    loop {
                        if timed_out.load(Ordering::Relaxed) {
                            break;
                        }
                        if shared.expired() {
                            timed_out.store(true, Ordering::Relaxed);
                            break;
                        }
                        let item = cursor.fetch_add(1, Ordering::Relaxed);
                        if item >= items {
                            break;
                        }
                        top.run_item(item, shared, &mut w, &mut local);
                    }
                    (w.stats, local)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    if timed_out.load(Ordering::Relaxed) {
        return Err(shared.limit_error());
    }
    let mut stats = ListStats::default();
    for (s, local) in results {
        stats.merge(&s);
        sink.absorb(local);
    }
    Ok(stats)
}
