/// Indexed binary min-heap over items `0..n` keyed by `(key, item)`, so ties
/// go to the smaller item. Keys may only decrease.
#[derive(Debug, Clone)]
pub(crate) struct MinHeap {
    heap: Vec<u32>,
    /// Position of each item in `heap`, `u32::MAX` once popped.
    pos: Vec<u32>,
    key: Vec<u32>,
}

impl MinHeap {
    pub fn new(keys: Vec<u32>) -> Self {
        let n = keys.len();
        let mut h = MinHeap {
            heap: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            key: keys,
        };
        for i in (0..n / 2).rev() {
            h.sift_down(i);
        }
        h
    }

    #[inline]
    fn less(&self, a: u32, b: u32) -> bool {
        (self.key[a as usize], a) < (self.key[b as usize], b)
    }

    #[inline]
    fn place(&mut self, i: usize, item: u32) {
        self.heap[i] = item;
        self.pos[item as usize] = i as u32;
    }

    fn sift_up(&mut self, mut i: usize) {
        let item = self.heap[i];
        while i > 0 {
            let parent = (i - 1) / 2;
            let p = self.heap[parent];
            if !self.less(item, p) {
                break;
            }
            self.place(i, p);
            i = parent;
        }
        self.place(i, item);
    }

    fn sift_down(&mut self, mut i: usize) {
        let n = self.heap.len();
        let item = self.heap[i];
        loop {
            let mut c = 2 * i + 1;
            if c >= n {
                break;
            }
            if c + 1 < n && self.less(self.heap[c + 1], self.heap[c]) {
                c += 1;
            }
            if !self.less(self.heap[c], item) {
                break;
            }
            self.place(i, self.heap[c]);
            i = c;
        }
        self.place(i, item);
    }

    pub fn contains(&self, item: u32) -> bool {
        self.pos[item as usize] != u32::MAX
    }

    /// Removes and returns `(item, key)` with the smallest key.
    pub fn pop(&mut self) -> Option<(u32, u32)> {
        let top = *self.heap.first()?;
        let last = self.heap.pop().unwrap();
        if !self.heap.is_empty() {
            self.place(0, last);
            self.sift_down(0);
        }
        self.pos[top as usize] = u32::MAX;
        Some((top, self.key[top as usize]))
    }

    /// Lowers the key of a queued item by one.
    pub fn decrement(&mut self, item: u32) {
        debug_assert!(self.contains(item));
        self.key[item as usize] -= 1;
        self.sift_up(self.pos[item as usize] as usize);
    }
}
