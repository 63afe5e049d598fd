//! Fixed-width bit rows used for adjacency storage.
//!
//! Rows are plain `u64` slices so that intersecting `q` rows over `n` bits
//! costs `q * ceil(n / 64)` word operations.

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

#[inline]
pub(crate) fn get(row: &[u64], i: usize) -> bool {
    row[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] |= 1 << (i % WORD_BITS);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
}

/// A row with the low `bits` bits set.
pub(crate) fn full(bits: usize) -> Vec<u64> {
    let mut row = vec![u64::MAX; words_for(bits)];
    let tail = bits % WORD_BITS;
    if tail != 0 {
        if let Some(last) = row.last_mut() {
            *last = (1u64 << tail) - 1;
        }
    }
    row
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// `dst = a & b`, returning the population count of the result.
#[inline]
pub(crate) fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) -> usize {
    let mut total = 0;
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
        total += d.count_ones() as usize;
    }
    total
}

/// Ascending indices of set bits.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut word = w;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(wi * WORD_BITS + bit)
            }
        })
    })
}
