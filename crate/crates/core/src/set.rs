//! Fixed-capacity element sets.
//!
//! Ground sets are dense integer ranges `0..n` with `n <= 64`, so an element
//! set is a single machine word. Ordering is lexicographic on the ascending
//! element sequence (`{} < {0} < {0,1} < {0,1,2} < {0,2} < {1}`), which is the
//! order every "lexicographically first" choice in this crate refers to.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub, SubAssign};

use alloc::vec::Vec;

/// An element of a ground set.
pub type Element = usize;

/// Largest supported ground set size.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(from = "Vec<Element>", into = "Vec<Element>"))]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full ground set `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(e: Element) -> Self {
        ElementSet(1u64 << e)
    }

    #[inline]
    pub const fn contains(self, e: Element) -> bool {
        e < 64 && self.0 & (1u64 << e) != 0
    }

    #[inline]
    pub fn insert(&mut self, e: Element) {
        self.0 |= 1u64 << e;
    }

    #[inline]
    pub fn remove(&mut self, e: Element) {
        self.0 &= !(1u64 << e);
    }

    #[inline]
    #[must_use]
    pub const fn with(self, e: Element) -> Self {
        ElementSet(self.0 | (1u64 << e))
    }

    #[inline]
    #[must_use]
    pub const fn without(self, e: Element) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Least element, if any.
    #[inline]
    pub const fn min(self) -> Option<Element> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as Element)
        }
    }

    /// Greatest element, if any.
    #[inline]
    pub const fn max(self) -> Option<Element> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as Element)
        }
    }

    /// Smallest element that is `>= e`.
    pub fn next_at_or_after(self, e: Element) -> Option<Element> {
        if e >= 64 {
            return None;
        }
        ElementSet(self.0 & (u64::MAX << e)).min()
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<Element> {
        self.iter().collect()
    }

    /// Re-index the elements of `self` that lie in `kept` onto `0..kept.len()`,
    /// preserving order. Elements outside `kept` are dropped.
    pub fn compress(self, kept: ElementSet) -> ElementSet {
        let mut out = 0u64;
        for (i, e) in kept.iter().enumerate() {
            if self.contains(e) {
                out |= 1u64 << i;
            }
        }
        ElementSet(out)
    }

    /// Inverse of [`ElementSet::compress`]: element `i` maps to the `i`-th
    /// element of `kept`.
    pub fn expand(self, kept: ElementSet) -> ElementSet {
        let mut out = 0u64;
        for (i, e) in kept.iter().enumerate() {
            if self.contains(i) {
                out |= 1u64 << e;
            }
        }
        ElementSet(out)
    }

    /// All subsets of `self`, in increasing bit-pattern order (not
    /// lexicographic; sort the result when order matters).
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        // Both sequences agree below `d`. The one holding `d` continues with
        // `d`; the other continues with something larger, or has ended.
        let (holder, other_bits) = if self.0 & (1u64 << d) != 0 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        let beyond = if d == 63 { 0 } else { other_bits >> (d + 1) };
        if beyond != 0 {
            holder
        } else {
            holder.reverse()
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for ElementSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for ElementSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl BitXor for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn bitxor(self, rhs: Self) -> Self {
        ElementSet(self.0 ^ rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl SubAssign for ElementSet {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        self.0 &= !rhs.0;
    }
}

impl Not for ElementSet {
    type Output = ElementSet;
    #[inline]
    fn not(self) -> Self {
        ElementSet(!self.0)
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<T: IntoIterator<Item = Element>>(iter: T) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl<const N: usize> From<[Element; N]> for ElementSet {
    fn from(elements: [Element; N]) -> Self {
        elements.into_iter().collect()
    }
}

impl From<Vec<Element>> for ElementSet {
    fn from(elements: Vec<Element>) -> Self {
        elements.into_iter().collect()
    }
}

impl From<ElementSet> for Vec<Element> {
    fn from(set: ElementSet) -> Self {
        set.to_vec()
    }
}

impl IntoIterator for ElementSet {
    type Item = Element;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the elements of a set.
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = Element;
    #[inline]
    fn next(&mut self) -> Option<Element> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as Element;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Iterator over all submasks of a mask.
#[derive(Clone)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;
    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        // Standard submask enumeration in increasing order.
        let nxt = (cur.wrapping_sub(self.mask)) & self.mask;
        self.next = if nxt == 0 { None } else { Some(nxt) };
        Some(ElementSet(cur))
    }
}
