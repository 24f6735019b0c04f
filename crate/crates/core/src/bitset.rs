//! Subsets of a ground set of at most 64 elements.

use std::fmt;

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1u64 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Keeps the elements selected by `labels` (ascending old indices) and
    /// renumbers them densely in that order.
    pub fn relabel(self, labels: &[usize]) -> Self {
        labels
            .iter()
            .enumerate()
            .filter(|&(_, &old)| self.contains(old))
            .map(|(new, _)| new)
            .collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// All `k`-subsets of `{0, .., n-1}` in colexicographic order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    let limit_ok = move |x: u64| n == MAX_ELEMENTS || x >> n == 0;
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                limit_ok(nxt).then_some(nxt)
            }
        };
        Some(ElementSet(cur))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_counted_correctly() {
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(5, 5).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert!(k_subsets(6, 3).all(|s| s.len() == 3 && s.is_subset(ElementSet::full(6))));
    }

    #[test]
    fn relabel_is_dense() {
        let s: ElementSet = [1, 4, 5].into_iter().collect();
        assert_eq!(s.relabel(&[0, 1, 4, 5]).to_vec(), vec![1, 2, 3]);
        assert_eq!(s.relabel(&[0, 2, 3]).to_vec(), Vec::<usize>::new());
    }

    #[test]
    fn iteration_is_ascending() {
        let s: ElementSet = [7, 0, 3].into_iter().collect();
        assert_eq!(s.to_vec(), vec![0, 3, 7]);
        assert_eq!(format!("{s:?}"), "{0, 3, 7}");
    }
}
