//! Sets of reflections as 128-bit masks over reflection indices.

use std::fmt;

/// A set of reflections of one group, indexed like
/// [`GroupContext::reflections`](crate::GroupContext::reflections).
///
/// The largest supported group, `E_8`, has 120 reflections.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ReflectionSet(u128);

impl ReflectionSet {
    pub const EMPTY: ReflectionSet = ReflectionSet(0);

    pub fn from_bits(bits: u128) -> Self {
        ReflectionSet(bits)
    }

    pub fn bits(&self) -> u128 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        ReflectionSet(1u128 << i)
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        ReflectionSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        ReflectionSet(self.0 & o.0)
    }

    pub fn is_subset(&self, o: &Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }
}

impl FromIterator<usize> for ReflectionSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ReflectionSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for ReflectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a: ReflectionSet = [0, 5, 119].into_iter().collect();
        let b: ReflectionSet = [5, 7].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 5, 119]);
        assert_eq!(a.intersection(b).iter().collect::<Vec<_>>(), vec![5]);
        assert!(ReflectionSet::singleton(7).is_subset(&b));
        assert!(!a.is_subset(&b));
        assert_eq!(a.union(b).len(), 4);
    }
}
