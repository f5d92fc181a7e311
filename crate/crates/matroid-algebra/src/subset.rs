//! Bitmask subsets of a ground set `{1, ..., n}`.
//!
//! Bit `i - 1` of the mask corresponds to element `i`.

/// A subset of the ground set, encoded as a bitmask.
pub type Subset = u32;

/// The full set `{1, ..., n}`.
pub fn full_set(n: usize) -> Subset {
    debug_assert!(n <= 31);
    (1u32 << n) - 1
}

/// Mask containing the single element `e` (1-indexed).
pub fn singleton(e: usize) -> Subset {
    debug_assert!(e >= 1);
    1u32 << (e - 1)
}

pub fn contains(mask: Subset, e: usize) -> bool {
    mask & singleton(e) != 0
}

pub fn size(mask: Subset) -> usize {
    mask.count_ones() as usize
}

/// Elements of `mask` in ascending order, 1-indexed.
pub fn elements(mask: Subset) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let e = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            Some(e)
        }
    })
}

pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Subset {
    elems.into_iter().map(singleton).fold(0, |m, b| m | b)
}

/// All subsets of `mask`, in ascending numeric order.
pub fn subsets_of(mask: Subset) -> impl Iterator<Item = Subset> {
    let mut cur: Option<Subset> = Some(0);
    std::iter::from_fn(move || {
        let out = cur?;
        cur = if out == mask {
            None
        } else {
            Some((out.wrapping_sub(mask)) & mask)
        };
        Some(out)
    })
}

/// Relabels a subset of `within` to `{1, ..., |within|}`: the i-th smallest
/// element of `within` becomes element i.  `sub` must be contained in `within`.
pub fn compress(sub: Subset, within: Subset) -> Subset {
    debug_assert_eq!(sub & !within, 0);
    let mut out = 0;
    let mut bit = 1u32;
    for e in elements(within) {
        if contains(sub, e) {
            out |= bit;
        }
        bit <<= 1;
    }
    out
}

/// Inverse of [`compress`]: maps a subset of `{1, ..., |within|}` back into
/// the elements of `within`.
pub fn expand(sub: Subset, within: Subset) -> Subset {
    let mut out = 0;
    let mut bit = 1u32;
    for e in elements(within) {
        if sub & bit != 0 {
            out |= singleton(e);
        }
        bit <<= 1;
    }
    out
}

/// `{1, 3, 4}` style display, ascending.
pub fn format_set(mask: Subset) -> String {
    let elems: Vec<String> = elements(mask).map(|e| e.to_string()).collect();
    format!("{{{}}}", elems.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_round_trip() {
        let mask = from_elements([3, 5, 6, 9]);
        assert_eq!(elements(mask).collect::<Vec<_>>(), vec![3, 5, 6, 9]);
        assert_eq!(size(mask), 4);
        assert_eq!(format_set(mask), "{3, 5, 6, 9}");
    }

    #[test]
    fn subsets_of_enumerates_all_in_order() {
        let mask = from_elements([1, 3]);
        let subs: Vec<_> = subsets_of(mask).collect();
        assert_eq!(subs, vec![0b000, 0b001, 0b100, 0b101]);
        assert_eq!(subsets_of(full_set(4)).count(), 16);
    }

    #[test]
    fn compress_expand_are_inverse() {
        let within = from_elements([2, 4, 5, 7]);
        let sub = from_elements([2, 5]);
        let small = compress(sub, within);
        assert_eq!(small, from_elements([1, 3]));
        assert_eq!(expand(small, within), sub);
    }
}
