//! Binomial coefficients and lexicographic k-subset enumeration.

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// All `k`-subsets of `0..n` as ascending index vectors, in lexicographic order.
#[derive(Debug, Clone)]
pub struct LexSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl LexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        LexSubsets { n, current }
    }
}

impl Iterator for LexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        // rightmost position that can still advance
        let mut i = k;
        while i > 0 && next[i - 1] == self.n - k + i - 1 {
            i -= 1;
        }
        if i > 0 {
            next[i - 1] += 1;
            for j in i..k {
                next[j] = next[j - 1] + 1;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}
