//! Word-slice bitset helpers shared by the graph and search code.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn test(row: &[u64], v: usize) -> bool {
    (row[v >> 6] >> (v & 63)) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], v: usize) {
    row[v >> 6] |= 1u64 << (v & 63);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], v: usize) {
    row[v >> 6] &= !(1u64 << (v & 63));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

/// Iterates the set bits of a word slice in increasing order.
pub(crate) fn iter(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

/// Iterates the set bits of a single word.
pub(crate) fn iter_word(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
