//! Subsets of a ground set `[n] = {1, ..., n}` with `n <= 64`, stored as a
//! single machine word. Element `e` lives in bit `e - 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported ground-set size.
pub const MAX_GROUND: usize = 64;

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

    /// The whole ground set `[n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set larger than {MAX_GROUND}");
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    /// The interval `[a, b]`; empty when `a > b`.
    pub fn interval(a: usize, b: usize) -> Self {
        if a > b || b == 0 {
            return Subset::EMPTY;
        }
        let a = a.max(1);
        Subset::full(b) - Subset::full(a - 1)
    }

    pub fn singleton(e: usize) -> Self {
        assert!((1..=MAX_GROUND).contains(&e), "element {e} out of range");
        Subset(1u64 << (e - 1))
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        elems
            .into_iter()
            .fold(Subset::EMPTY, |acc, e| acc | Subset::singleton(e))
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_GROUND).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        self | Subset::singleton(e)
    }

    pub fn without(self, e: usize) -> Self {
        self - Subset::singleton(e)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Subset) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// True when every element is at most `n`.
    pub fn within(self, n: usize) -> bool {
        n >= MAX_GROUND || self.0 >> n == 0
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under `map`, where `map[e - 1]` is the image of `e`.
    pub fn map(self, map: &[usize]) -> Subset {
        Subset::from_elems(self.iter().map(|e| map[e - 1]))
    }

    /// Lexicographic comparison of the ascending element lists.
    pub fn lex_cmp(self, other: Subset) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        // Elements strictly above the first difference.
        let above = !(low | (low - 1));
        if self.0 & low != 0 {
            // `self` has the first differing element; `other` is smaller only
            // if it ends before that point.
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Order by size, then lexicographically. Used for every canonical listing
    /// of flats.
    pub fn size_lex_cmp(self, other: Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(*other)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elems(iter)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

impl fmt::Display for Subset {
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

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let elems = Vec::<usize>::deserialize(d)?;
        let mut set = Subset::EMPTY;
        for e in elems {
            if !(1..=MAX_GROUND).contains(&e) {
                return Err(serde::de::Error::custom(format!(
                    "element {e} outside 1..={MAX_GROUND}"
                )));
            }
            if set.contains(e) {
                return Err(serde::de::Error::custom(format!("repeated element {e}")));
            }
            set = set.with(e);
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn intervals_and_display() {
        assert_eq!(Subset::interval(4, 9).to_vec(), vec![4, 5, 6, 7, 8, 9]);
        assert_eq!(Subset::interval(3, 2), Subset::EMPTY);
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::from_elems([3, 1, 2]).to_string(), "{1,2,3}");
        assert_eq!(Subset::EMPTY.to_string(), "{}");
    }

    #[test]
    fn lex_order_examples() {
        let s = |v: &[usize]| Subset::from_elems(v.iter().copied());
        assert_eq!(s(&[1, 2]).lex_cmp(s(&[1, 2, 3])), Ordering::Less);
        assert_eq!(s(&[1, 3]).lex_cmp(s(&[1, 2, 9])), Ordering::Greater);
        assert_eq!(s(&[]).lex_cmp(s(&[5])), Ordering::Less);
        assert_eq!(s(&[2]).lex_cmp(s(&[1, 5])), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn lex_cmp_matches_vec_order(a in any::<u64>(), b in any::<u64>()) {
            let (x, y) = (Subset::from_bits(a), Subset::from_bits(b));
            prop_assert_eq!(x.lex_cmp(y), x.to_vec().cmp(&y.to_vec()));
        }

        #[test]
        fn json_round_trip(a in any::<u64>()) {
            let x = Subset::from_bits(a);
            let text = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<Subset>(&text).unwrap(), x);
        }
    }
}
