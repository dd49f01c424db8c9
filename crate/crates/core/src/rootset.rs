//! Sets of positive roots as bitsets over the root index space.

use core::fmt;

use crate::root_system::RootId;

/// Largest number of positive roots a [`RootSet`] can index (E8 has 120).
pub const MAX_ROOTS: usize = 128;

/// A subset of the positive roots of one root system.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet(u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    /// The set `{0, .., len - 1}`.
    pub fn full(len: usize) -> RootSet {
        assert!(len <= MAX_ROOTS);
        if len == MAX_ROOTS {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << len) - 1)
        }
    }

    pub fn from_bits(bits: u128) -> RootSet {
        RootSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(id: RootId) -> RootSet {
        RootSet(1u128 << id.0)
    }

    #[inline]
    pub fn contains(self, id: RootId) -> bool {
        self.0 >> id.0 & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, id: RootId) {
        self.0 |= 1u128 << id.0;
    }

    #[inline]
    pub fn remove(&mut self, id: RootId) {
        self.0 &= !(1u128 << id.0);
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn difference(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Iterates in increasing root index.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<RootId> for RootSet {
    fn from_iter<T: IntoIterator<Item = RootId>>(iter: T) -> Self {
        let mut s = RootSet::EMPTY;
        for id in iter {
            s.insert(id);
        }
        s
    }
}

impl IntoIterator for RootSet {
    type Item = RootId;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = RootId;

    fn next(&mut self) -> Option<RootId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(RootId(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|r| r.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn basic_ops() {
        let a: RootSet = [0, 2, 5].into_iter().map(RootId).collect();
        let b: RootSet = [2, 3].into_iter().map(RootId).collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(RootId(5)));
        assert!(!a.contains(RootId(1)));
        assert_eq!(a.intersection(b), RootSet::singleton(RootId(2)));
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.difference(b).iter().map(|r| r.0).collect::<Vec<_>>(), [0, 5]);
        assert!(RootSet::singleton(RootId(2)).is_subset(b));
        assert!(!a.is_subset(b));
    }

    #[test]
    fn full_edges() {
        assert_eq!(RootSet::full(0), RootSet::EMPTY);
        assert_eq!(RootSet::full(3).len(), 3);
        assert_eq!(RootSet::full(MAX_ROOTS).len(), MAX_ROOTS);
        let mut s = RootSet::full(MAX_ROOTS);
        s.remove(RootId(127));
        assert_eq!(s.iter().last(), Some(RootId(126)));
    }
}
