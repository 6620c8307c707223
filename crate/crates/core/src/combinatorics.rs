/// Binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Lexicographic r-subsets of `0..n`, reusing one index buffer.
#[derive(Debug, Default)]
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    state: State,
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
enum State {
    #[default]
    Fresh,
    Running,
    Done,
}

impl Combinations {
    pub fn new(n: usize, r: usize) -> Self {
        let mut c = Combinations::default();
        c.reset(n, r);
        c
    }

    pub fn reset(&mut self, n: usize, r: usize) {
        self.n = n;
        self.idx.clear();
        self.idx.extend(0..r);
        self.state = if r > n { State::Done } else { State::Fresh };
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[usize]> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                return Some(&self.idx);
            }
            State::Running => {}
        }
        let r = self.idx.len();
        let mut i = r;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - r + i {
                self.idx[i] += 1;
                for j in i + 1..r {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        self.state = State::Done;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(52, 5), 2_598_960);
        assert_eq!(binomial(200, 100), u64::MAX);
    }

    #[test]
    fn enumerates_every_subset_once() {
        for n in 0..8 {
            for r in 0..=n + 1 {
                let mut c = Combinations::new(n, r);
                let mut seen = Vec::new();
                while let Some(s) = c.next() {
                    assert!(s.windows(2).all(|w| w[0] < w[1]));
                    seen.push(s.to_vec());
                }
                assert_eq!(seen.len() as u64, binomial(n, r));
                let mut sorted = seen.clone();
                sorted.sort();
                assert_eq!(sorted, seen, "lexicographic order");
            }
        }
    }
}
