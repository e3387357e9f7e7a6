//! Bitmask subsets over ground sets of at most 64 elements.

/// A subset of a ground set, one bit per element.
pub type Mask = u64;

pub const fn full_mask(n: usize) -> Mask {
    debug_assert!(n <= 64);
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

pub const fn bit(i: usize) -> Mask {
    1u64 << i
}

pub const fn contains(mask: Mask, i: usize) -> bool {
    mask & bit(i) != 0
}

pub fn count(mask: Mask) -> usize {
    mask.count_ones() as usize
}

/// Indices of the set bits, ascending.
pub fn elements(mask: Mask) -> ElementIter {
    ElementIter { rest: mask }
}

pub struct ElementIter {
    rest: Mask,
}

impl Iterator for ElementIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.rest == 0 {
            return None;
        }
        let i = self.rest.trailing_zeros() as usize;
        self.rest &= self.rest - 1;
        Some(i)
    }
}

/// All submasks of `mask`, descending from `mask` down to 0 inclusive.
pub fn submasks(mask: Mask) -> SubmaskIter {
    SubmaskIter {
        mask,
        cur: mask,
        done: false,
    }
}

pub struct SubmaskIter {
    mask: Mask,
    cur: Mask,
    done: bool,
}

impl Iterator for SubmaskIter {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if self.cur == 0 {
            self.done = true;
        } else {
            self.cur = (self.cur - 1) & self.mask;
        }
        Some(out)
    }
}

/// Sum of `values[i]` over the set bits of `mask`.
pub fn mask_sum(values: &[i64], mask: Mask) -> i64 {
    elements(mask).map(|i| values[i]).sum()
}

pub fn mask_to_indices(mask: Mask) -> alloc::vec::Vec<usize> {
    elements(mask).collect()
}

pub fn indices_to_mask(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | bit(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_iteration_covers_powerset() {
        let mask = 0b1011;
        let subs: alloc::vec::Vec<Mask> = submasks(mask).collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&0));
        assert!(subs.contains(&mask));
        for s in subs {
            assert_eq!(s & !mask, 0);
        }
    }

    #[test]
    fn element_iteration_ascending() {
        let v: alloc::vec::Vec<usize> = elements(0b10110).collect();
        assert_eq!(v, [1, 2, 4]);
    }

    #[test]
    fn full_mask_bounds() {
        assert_eq!(full_mask(0), 0);
        assert_eq!(full_mask(3), 0b111);
        assert_eq!(full_mask(64), !0u64);
    }
}
