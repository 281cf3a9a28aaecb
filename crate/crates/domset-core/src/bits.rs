//! Fixed-width bit-vectors over vertex indices.
//!
//! [`VertexSet`] is the currency of every solver and constructor in this
//! crate: dominating sets, packings, coverage masks, partitions, and
//! exclusion sets are all `VertexSet`s. The backing store is a fixed
//! `[u64; 16]` (1024 bits, the maximum supported graph order), but every
//! operation loops only over the words a set's width actually occupies, so
//! graphs with at most 64 vertices touch a single word.

/// Maximum supported graph order.
pub const MAX_ORDER: usize = 1024;

/// Number of 64-bit words backing a [`VertexSet`].
const WORDS: usize = MAX_ORDER / 64;

/// A set of vertex indices drawn from `[0, width)`.
///
/// Two sets compare equal only if they have the same width and the same
/// members. All bits at positions `>= width` are kept clear as an internal
/// invariant.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: [u64; WORDS],
    width: u16,
}

impl VertexSet {
    /// The empty set over `[0, width)`.
    ///
    /// # Panics
    /// Panics if `width > MAX_ORDER`.
    #[must_use]
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_ORDER, "width {width} exceeds {MAX_ORDER}");
        VertexSet {
            words: [0; WORDS],
            width: width as u16,
        }
    }

    /// The full set `[0, width)`.
    #[must_use]
    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for w in 0..s.word_count() {
            s.words[w] = !0;
        }
        s.trim();
        s
    }

    /// Builds a set from an iterator of vertex indices.
    ///
    /// # Panics
    /// Panics if any index is `>= width`.
    #[must_use]
    pub fn from_indices<I: IntoIterator<Item = u16>>(width: usize, indices: I) -> Self {
        let mut s = Self::empty(width);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// The width of the universe this set draws from.
    #[inline]
    #[must_use]
    pub fn width(&self) -> usize {
        self.width as usize
    }

    #[inline]
    fn word_count(&self) -> usize {
        (self.width as usize + 63) / 64
    }

    /// Clears any bits at positions `>= width` in the last occupied word.
    #[inline]
    fn trim(&mut self) {
        let rem = self.width as usize % 64;
        if rem != 0 {
            self.words[self.word_count() - 1] &= (1u64 << rem) - 1;
        }
    }

    /// Membership test.
    #[inline]
    #[must_use]
    pub fn contains(&self, v: u16) -> bool {
        debug_assert!((v as usize) < self.width());
        self.words[(v / 64) as usize] >> (v % 64) & 1 != 0
    }

    /// Inserts a vertex.
    ///
    /// # Panics
    /// Panics if `v >= width`.
    #[inline]
    pub fn insert(&mut self, v: u16) {
        assert!((v as usize) < self.width(), "vertex {v} out of range");
        self.words[(v / 64) as usize] |= 1u64 << (v % 64);
    }

    /// Removes a vertex.
    #[inline]
    pub fn remove(&mut self, v: u16) {
        debug_assert!((v as usize) < self.width());
        self.words[(v / 64) as usize] &= !(1u64 << (v % 64));
    }

    /// Number of members.
    #[inline]
    #[must_use]
    pub fn count(&self) -> usize {
        let mut c = 0u32;
        for w in 0..self.word_count() {
            c += self.words[w].count_ones();
        }
        c as usize
    }

    /// True when the set has no members.
    #[inline]
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.words[..self.word_count()].iter().all(|&w| w == 0)
    }

    /// Lowest member, if any.
    #[inline]
    #[must_use]
    pub fn first(&self) -> Option<u16> {
        for w in 0..self.word_count() {
            if self.words[w] != 0 {
                return Some((w * 64 + self.words[w].trailing_zeros() as usize) as u16);
            }
        }
        None
    }

    /// In-place union.
    #[inline]
    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.width, other.width);
        for w in 0..self.word_count() {
            self.words[w] |= other.words[w];
        }
    }

    /// In-place intersection.
    #[inline]
    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.width, other.width);
        for w in 0..self.word_count() {
            self.words[w] &= other.words[w];
        }
    }

    /// In-place set difference (`self \ other`).
    #[inline]
    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.width, other.width);
        for w in 0..self.word_count() {
            self.words[w] &= !other.words[w];
        }
    }

    /// Union as a new set.
    #[inline]
    #[must_use]
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = *self;
        s.union_with(other);
        s
    }

    /// Intersection as a new set.
    #[inline]
    #[must_use]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = *self;
        s.intersect_with(other);
        s
    }

    /// Set difference as a new set.
    #[inline]
    #[must_use]
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = *self;
        s.difference_with(other);
        s
    }

    /// Complement within `[0, width)`.
    #[inline]
    #[must_use]
    pub fn complement(&self) -> VertexSet {
        let mut s = *self;
        for w in 0..s.word_count() {
            s.words[w] = !s.words[w];
        }
        s.trim();
        s
    }

    /// Size of the intersection, without materializing it.
    #[inline]
    #[must_use]
    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.width, other.width);
        let mut c = 0u32;
        for w in 0..self.word_count() {
            c += (self.words[w] & other.words[w]).count_ones();
        }
        c as usize
    }

    /// True when the two sets share a member.
    #[inline]
    #[must_use]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        for w in 0..self.word_count() {
            if self.words[w] & other.words[w] != 0 {
                return true;
            }
        }
        false
    }

    /// Subset test (`self ⊆ other`).
    #[inline]
    #[must_use]
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        for w in 0..self.word_count() {
            if self.words[w] & !other.words[w] != 0 {
                return false;
            }
        }
        true
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        (0..self.word_count()).flat_map(move |w| {
            let mut bits = self.words[w];
            core::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some((w * 64 + tz as usize) as u16)
                }
            })
        })
    }
}

impl core::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("{")?;
        let mut sep = "";
        for v in self.iter() {
            write!(f, "{sep}{v}")?;
            sep = ", ";
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_count() {
        let mut s = VertexSet::empty(100);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(99);
        assert_eq!(s.count(), 4);
        assert!(s.contains(63) && s.contains(64));
        assert!(!s.contains(1));
        s.remove(63);
        assert_eq!(s.count(), 3);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn complement_respects_width() {
        let s = VertexSet::from_indices(70, [0u16, 69]);
        let c = s.complement();
        assert_eq!(c.count(), 68);
        assert!(!c.contains(0) && !c.contains(69));
        assert!(c.contains(1) && c.contains(68));
        assert_eq!(s.union(&c), VertexSet::full(70));
        assert!(!s.intersects(&c));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_indices(10, [1u16, 2, 3]);
        let b = VertexSet::from_indices(10, [3u16, 4]);
        assert_eq!(a.union(&b).count(), 4);
        assert_eq!(a.intersection(&b), VertexSet::from_indices(10, [3u16]));
        assert_eq!(a.difference(&b), VertexSet::from_indices(10, [1u16, 2]));
        assert_eq!(a.intersection_count(&b), 1);
        assert!(VertexSet::from_indices(10, [1u16]).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
    }

    #[test]
    fn iter_collects_in_order() {
        let s = VertexSet::from_indices(200, [150u16, 3, 64, 7]);
        let got: Vec<u16> = s.iter().collect();
        assert_eq!(got, vec![3, 7, 64, 150]);
    }

    #[test]
    fn widths_distinguish_sets() {
        let a = VertexSet::empty(5);
        let b = VertexSet::empty(6);
        assert_ne!(a, b);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn insert_out_of_range_panics() {
        let mut s = VertexSet::empty(4);
        s.insert(4);
    }
}
