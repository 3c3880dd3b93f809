//! Word-level helpers shared by the packed vector and matrix types.

#[inline]
pub const fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// Mask of the valid bits in the last word of a `len`-bit buffer.
#[inline]
pub const fn tail_mask(len: usize) -> u64 {
    match len % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

#[inline]
pub fn get(words: &[u64], i: usize) -> bool {
    (words[i / 64] >> (i % 64)) & 1 == 1
}

#[inline]
pub fn set(words: &mut [u64], i: usize, value: bool) {
    let mask = 1u64 << (i % 64);
    if value {
        words[i / 64] |= mask;
    } else {
        words[i / 64] &= !mask;
    }
}

#[inline]
pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

#[inline]
pub fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn dot(a: &[u64], b: &[u64]) -> bool {
    let mut acc = 0u64;
    for (x, y) in a.iter().zip(b) {
        acc ^= x & y;
    }
    acc.count_ones() & 1 == 1
}

/// Iterator over set bit positions, ascending.
pub fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            }
        })
    })
}

/// Copies `len` bits of `src` (starting at bit 0) into `dst` starting at bit `offset`,
/// XOR-ing them in.
pub fn xor_shifted(dst: &mut [u64], src: &[u64], len: usize, offset: usize) {
    if len == 0 {
        return;
    }
    let shift = offset % 64;
    let base = offset / 64;
    let n = words_for(len);
    for (i, &w) in src[..n].iter().enumerate() {
        let w = if i == n - 1 { w & tail_mask(len) } else { w };
        if w == 0 {
            continue;
        }
        dst[base + i] ^= w << shift;
        if shift != 0 && base + i + 1 < dst.len() {
            dst[base + i + 1] ^= w >> (64 - shift);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_iterates_in_order() {
        let w = [0b1010u64, 1 << 63];
        assert_eq!(ones(&w).collect::<Vec<_>>(), vec![1, 3, 127]);
    }

    #[test]
    fn shifted_copy_crosses_words() {
        let mut dst = [0u64; 3];
        xor_shifted(&mut dst, &[0b111], 3, 62);
        assert_eq!(dst[0], 0b11 << 62);
        assert_eq!(dst[1], 0b1);
    }
}
