use std::io::Write;
use std::sync::Arc;

use crate::graph::Vertex;

enum Mode {
    Count,
    Collect(Vec<Vec<Vertex>>),
    Stream(Box<dyn Write + Send>),
    /// Worker-private byte buffer, merged into a stream sink later.
    Buffer(Vec<u8>),
}

/// Receives cliques from the listers.
///
/// In counting mode the listers may add whole batches through
/// [`CliqueSink::add_bulk`] instead of emitting one clique at a time.
pub struct CliqueSink {
    mode: Mode,
    count: u64,
    labels: Option<Arc<[u64]>>,
    scratch: Vec<Vertex>,
    line: Vec<u8>,
    error: Option<std::io::Error>,
}

impl CliqueSink {
    fn with_mode(mode: Mode) -> Self {
        CliqueSink {
            mode,
            count: 0,
            labels: None,
            scratch: Vec::new(),
            line: Vec::new(),
            error: None,
        }
    }

    pub fn counter() -> Self {
        Self::with_mode(Mode::Count)
    }

    pub fn collector() -> Self {
        Self::with_mode(Mode::Collect(Vec::new()))
    }

    /// Writes one clique per line, vertices ascending and space separated.
    /// When `labels` is given, vertex `v` is printed as `labels[v]`.
    pub fn stream(writer: Box<dyn Write + Send>, labels: Option<Arc<[u64]>>) -> Self {
        let mut s = Self::with_mode(Mode::Stream(writer));
        s.labels = labels;
        s
    }

    /// True when each clique has to be materialized.
    #[inline]
    pub fn materializes(&self) -> bool {
        !matches!(self.mode, Mode::Count)
    }

    #[inline]
    pub fn count(&self) -> u64 {
        self.count
    }

    #[inline]
    pub fn add_bulk(&mut self, n: u64) {
        debug_assert!(!self.materializes(), "bulk counts only in counting mode");
        self.count += n;
    }

    pub fn emit(&mut self, clique: &[Vertex]) {
        self.count += 1;
        if !self.materializes() {
            return;
        }
        self.scratch.clear();
        self.scratch.extend_from_slice(clique);
        self.scratch.sort_unstable();
        match &mut self.mode {
            Mode::Count => {}
            Mode::Collect(out) => out.push(self.scratch.clone()),
            Mode::Stream(_) | Mode::Buffer(_) => {
                self.line.clear();
                for (i, &v) in self.scratch.iter().enumerate() {
                    if i > 0 {
                        self.line.push(b' ');
                    }
                    let id = match &self.labels {
                        Some(l) => l[v as usize],
                        None => v as u64,
                    };
                    write!(self.line, "{id}").unwrap();
                }
                self.line.push(b'\n');
                match &mut self.mode {
                    Mode::Buffer(buf) => buf.extend_from_slice(&self.line),
                    Mode::Stream(w) => {
                        if self.error.is_none() {
                            if let Err(e) = w.write_all(&self.line) {
                                self.error = Some(e);
                            }
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
    }

    /// Emits `prefix` followed by `extra`.
    pub fn emit_with(&mut self, prefix: &mut Vec<Vertex>, extra: &[Vertex]) {
        let len = prefix.len();
        prefix.extend_from_slice(extra);
        self.emit(prefix);
        prefix.truncate(len);
    }

    /// A sink of the same kind for a worker thread.
    pub fn fork(&self) -> CliqueSink {
        let mut s = match self.mode {
            Mode::Count => Self::counter(),
            Mode::Collect(_) => Self::collector(),
            Mode::Stream(_) | Mode::Buffer(_) => Self::with_mode(Mode::Buffer(Vec::new())),
        };
        s.labels = self.labels.clone();
        s
    }

    /// Merges a forked sink back.
    pub fn absorb(&mut self, other: CliqueSink) {
        self.count += other.count;
        if self.error.is_none() {
            self.error = other.error;
        }
        match (&mut self.mode, other.mode) {
            (Mode::Collect(a), Mode::Collect(b)) => a.extend(b),
            (Mode::Stream(w), Mode::Buffer(b)) => {
                if self.error.is_none() {
                    if let Err(e) = w.write_all(&b) {
                        self.error = Some(e);
                    }
                }
            }
            (Mode::Buffer(a), Mode::Buffer(b)) => a.extend(b),
            _ => {}
        }
    }

    /// Collected cliques, each sorted; empty for other modes.
    pub fn take_cliques(&mut self) -> Vec<Vec<Vertex>> {
        match &mut self.mode {
            Mode::Collect(out) => std::mem::take(out),
            _ => Vec::new(),
        }
    }

    /// Flushes a stream sink and reports the first write error, if any.
    pub fn finish(&mut self) -> std::io::Result<()> {
        if let Some(e) = self.error.take() {
            return Err(e);
        }
        if let Mode::Stream(w) = &mut self.mode {
            w.flush()?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for CliqueSink {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mode = match self.mode {
            Mode::Count => "count",
            Mode::Collect(_) => "collect",
            Mode::Stream(_) => "stream",
            Mode::Buffer(_) => "buffer",
        };
        f.debug_struct("CliqueSink")
            .field("mode", &mode)
            .field("count", &self.count)
            .finish()
    }
}
