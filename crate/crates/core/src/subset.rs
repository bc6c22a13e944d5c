use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// A finite subset of a base of at most 64 elements, stored as a bitmask.
///
/// The owning base is implicit; callers keep members below the base size.
/// `Ord` is the canonical order used for every listing and witness: smaller
/// sets first, then lexicographic on the ascending member sequence.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All elements `0..n`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub const fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    pub const fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub const fn with(self, i: usize) -> Self {
        Subset(self.0 | (1u64 << i))
    }

    pub const fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub const fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub const fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Least member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Every subset of a base of size `n`, in bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        debug_assert!(n < 64);
        (0..1u64 << n).map(Subset)
    }

    /// Every subset of `self`, in bitmask order (starting from the empty set).
    pub fn subsets(self) -> SubMasks {
        SubMasks {
            whole: self.0,
            next: Some(0),
        }
    }

    /// Renders the subset as `{a,b,c}` using the given element names.
    pub fn display<'a, S: AsRef<str>>(self, labels: &'a [S]) -> SubsetDisplay<'a, S> {
        SubsetDisplay {
            subset: self,
            labels,
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let lowest = diff & diff.wrapping_neg();
        if self.0 & lowest != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

pub struct Members(u64);

impl Iterator for Members {
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

impl ExactSizeIterator for Members {}

pub struct SubMasks {
    whole: u64,
    next: Option<u64>,
}

impl Iterator for SubMasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let current = self.next?;
        self.next = if current == self.whole {
            None
        } else {
            // next submask in increasing numeric order
            Some((current.wrapping_sub(self.whole)) & self.whole)
        };
        Some(Subset(current))
    }
}

pub struct SubsetDisplay<'a, S> {
    subset: Subset,
    labels: &'a [S],
}

impl<S: AsRef<str>> fmt::Display for SubsetDisplay<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.subset.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            match self.labels.get(i) {
                Some(label) => f.write_str(label.as_ref())?,
                None => write!(f, "#{i}")?,
            }
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_order_is_size_then_lexicographic() {
        let a = Subset::from_indices([0, 3]);
        let b = Subset::from_indices([1, 2]);
        let c = Subset::singleton(5);
        let mut v = vec![a, b, c, Subset::EMPTY];
        v.sort();
        assert_eq!(v, vec![Subset::EMPTY, c, a, b]);
    }

    #[test]
    fn submasks_enumerate_every_subset_once() {
        let s = Subset::from_indices([1, 4, 6]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|x| x.is_subset(s)));
        assert_eq!(subs[0], Subset::EMPTY);
        assert_eq!(*subs.last().unwrap(), s);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn display_uses_labels() {
        let labels = ["0", "h", "1"];
        assert_eq!(Subset::from_indices([0, 2]).display(&labels).to_string(), "{0,1}");
        assert_eq!(Subset::EMPTY.display(&labels).to_string(), "{}");
    }

    proptest! {
        #[test]
        fn order_is_total_and_consistent_with_eq(a in 0u64..4096, b in 0u64..4096) {
            let (x, y) = (Subset::from_bits(a), Subset::from_bits(b));
            prop_assert_eq!(x.cmp(&y) == Ordering::Equal, a == b);
            prop_assert_eq!(x.cmp(&y), y.cmp(&x).reverse());
        }

        #[test]
        fn members_round_trip(a in any::<u64>()) {
            let s = Subset::from_bits(a);
            prop_assert_eq!(s.iter().collect::<Subset>(), s);
            prop_assert_eq!(s.iter().count(), s.len());
        }
    }
}
