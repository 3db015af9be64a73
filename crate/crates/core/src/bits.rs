//! Word-level helpers shared by the lattice code.

#[inline]
pub fn subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Bit positions set in `word`, lowest first.
pub fn ones(mut word: u64) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let p = word.trailing_zeros();
            word &= word - 1;
            Some(p)
        }
    })
}

/// Every submask of `mask` in ascending numeric order, `0` and `mask` included.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur | !mask).wrapping_add(1) & mask)
        };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_ascend() {
        let got: Vec<u64> = submasks(0b1010).collect();
        assert_eq!(got, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(submasks(0xff).count(), 256);
    }

    #[test]
    fn ones_lists_positions() {
        assert_eq!(ones(0b1001_0100).collect::<Vec<_>>(), vec![2, 4, 7]);
        assert_eq!(ones(0).count(), 0);
    }
}
