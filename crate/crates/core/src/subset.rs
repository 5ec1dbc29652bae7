//! Fixed-width subsets of a finite carrier.

use std::fmt;

/// Largest carrier a [`Subset`] can index.
pub const MAX_CARRIER: usize = 64;

/// A subset of a carrier of at most [`MAX_CARRIER`] elements, stored as a
/// bit vector keyed by carrier index.
///
/// Iteration always yields indices in ascending carrier order, so two equal
/// subsets render identically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < MAX_CARRIER);
        Subset(1 << index)
    }

    /// The whole carrier `{0, .., len - 1}`.
    pub fn full(len: usize) -> Self {
        debug_assert!(len <= MAX_CARRIER);
        if len == MAX_CARRIER {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << len) - 1)
        }
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_CARRIER && self.0 & (1 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1 << index);
    }

    pub fn with(mut self, index: usize) -> Self {
        self.insert(index);
        self
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// The unique member, if this is a singleton.
    pub fn as_singleton(self) -> Option<usize> {
        if self.0.count_ones() == 1 {
            Some(self.0.trailing_zeros() as usize)
        } else {
            None
        }
    }

    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Renders with carrier names; singletons print as their element.
    pub fn display<'a>(self, names: &'a [String]) -> SubsetDisplay<'a> {
        SubsetDisplay {
            subset: self,
            names,
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct SubsetDisplay<'a> {
    subset: Subset,
    names: &'a [String],
}

impl fmt::Display for SubsetDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(x) = self.subset.as_singleton() {
            return f.write_str(&self.names[x]);
        }
        f.write_str("{")?;
        for (k, i) in self.subset.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&self.names[i])?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_in_carrier_order() {
        let s: Subset = [5, 1, 3].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.first(), Some(1));
    }

    #[test]
    fn singleton_detection() {
        assert_eq!(Subset::singleton(7).as_singleton(), Some(7));
        assert_eq!(Subset::EMPTY.as_singleton(), None);
        assert_eq!(Subset::singleton(1).with(2).as_singleton(), None);
    }

    #[test]
    fn full_carrier_edges() {
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::full(3).bits(), 0b111);
    }

    #[test]
    fn display_identifies_singletons() {
        let names: Vec<String> = ["0", "a", "b"].iter().map(|s| s.to_string()).collect();
        assert_eq!(Subset::singleton(1).display(&names).to_string(), "a");
        assert_eq!(Subset::full(3).display(&names).to_string(), "{0, a, b}");
        assert_eq!(Subset::EMPTY.display(&names).to_string(), "{}");
    }
}
