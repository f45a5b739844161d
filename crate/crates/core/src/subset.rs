//! Characteristic-vector subsets of a fixed finite universe `0..n`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A set of element indices of an `n`-element semigroup.
///
/// Two subsets are equal iff they have the same universe size and the same
/// members. The ordering is by universe size, then by the sorted member
/// list, which gives a canonical order for enumeration output.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset {
            n,
            words: vec![0; n.div_ceil(WORD)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (w, word) in s.words.iter_mut().enumerate() {
            let bits = (n - w * WORD).min(WORD);
            *word = if bits == WORD { !0 } else { (1u64 << bits) - 1 };
        }
        s
    }

    pub fn singleton(n: usize, a: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(a);
        s
    }

    /// Builds a subset from indices, rejecting any index `>= n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for i in items {
            if i >= n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    order: n,
                    context: "subset member".into(),
                });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// The subset whose members are the set bits of `mask`. Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD, "from_mask needs n <= 64");
        let mut s = Self::empty(n);
        if n > 0 {
            let keep = if n == WORD { !0 } else { (1u64 << n) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut s = Self::empty(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                s.insert(i);
            }
        }
        s
    }

    /// Size of the universe, i.e. the order of the parent semigroup.
    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        a < self.n && self.words[a / WORD] >> (a % WORD) & 1 == 1
    }

    /// Inserts `a`, returning true when it was not yet present.
    #[inline]
    pub fn insert(&mut self, a: usize) -> bool {
        assert!(a < self.n, "index {a} out of range for universe {}", self.n);
        let (w, b) = (a / WORD, a % WORD);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, a: usize) -> bool {
        if a >= self.n {
            return false;
        }
        let (w, b) = (a / WORD, a % WORD);
        let present = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_same(&self, other: &Subset) {
        assert_eq!(
            self.n, other.n,
            "subsets over different universes ({} vs {})",
            self.n, other.n
        );
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.check_same(other);
        Subset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        self.check_same(other);
        Subset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.check_same(other);
        Subset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn complement(&self) -> Subset {
        Subset::full(self.n).difference(self)
    }

    pub fn union_with(&mut self, other: &Subset) -> bool {
        self.check_same(other);
        let mut changed = false;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            let next = *a | b;
            changed |= next != *a;
            *a = next;
        }
        changed
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &Subset) -> bool {
        self.is_subset(other) && self != other
    }

    /// Smallest member of `self` that is not in `other`.
    pub fn first_not_in(&self, other: &Subset) -> Option<usize> {
        self.difference(other).first()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a Subset {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_empty_across_word_boundary() {
        for n in [0, 1, 63, 64, 65, 130] {
            assert_eq!(Subset::full(n).len(), n);
            assert!(Subset::empty(n).is_empty());
            assert_eq!(Subset::full(n).complement(), Subset::empty(n));
        }
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert!(matches!(
            Subset::from_indices(3, [0, 3]),
            Err(Error::IndexOutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn display_lists_sorted_members() {
        let s = Subset::from_indices(10, [7, 2, 5]).unwrap();
        assert_eq!(s.to_string(), "{2,5,7}");
        assert_eq!(s.first(), Some(2));
    }

    proptest! {
        #[test]
        fn set_algebra_matches_bool_vectors(
            a in prop::collection::vec(any::<bool>(), 70),
            b in prop::collection::vec(any::<bool>(), 70),
        ) {
            let (sa, sb) = (Subset::from_bools(&a), Subset::from_bools(&b));
            let expect = |f: fn(bool, bool) -> bool| {
                Subset::from_bools(&a.iter().zip(&b).map(|(&x, &y)| f(x, y)).collect::<Vec<_>>())
            };
            prop_assert_eq!(sa.union(&sb), expect(|x, y| x || y));
            prop_assert_eq!(sa.intersection(&sb), expect(|x, y| x && y));
            prop_assert_eq!(sa.difference(&sb), expect(|x, y| x && !y));
            prop_assert_eq!(sa.is_subset(&sb), a.iter().zip(&b).all(|(&x, &y)| !x || y));
            prop_assert_eq!(sa.len(), a.iter().filter(|&&x| x).count());
        }
    }
}
