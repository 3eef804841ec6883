//! Finite sets of positive integers and the Schreier / Zeckendorf predicates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A finite set of positive integers, stored in strictly increasing order.
///
/// Text form is `{2,3,5}` (empty set `{}`); serde form is a plain array.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct FiniteSet {
    elements: Vec<u64>,
}

/// Consecutive differences of a set with at least two elements.
///
/// Repeated gaps are kept, so `{1,3,5}` gives `[2, 2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapList(Vec<u64>);

impl GapList {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }
}

impl FiniteSet {
    /// Builds a set from elements in any order. Zero and duplicates are errors.
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        if elements.first() == Some(&0) {
            return Err(Error::NonPositiveElement);
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        Ok(Self { elements })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Caller guarantees `elements` is strictly increasing and positive.
    pub(crate) fn from_sorted(elements: Vec<u64>) -> Self {
        debug_assert!(elements.first().is_none_or(|&m| m >= 1));
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { elements }
    }

    /// Set whose elements are the positions (1-based) of the set bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut elements = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            elements.push(u64::from(rest.trailing_zeros()) + 1);
            rest &= rest - 1;
        }
        Self { elements }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn min_element(&self) -> Option<u64> {
        self.elements.first().copied()
    }

    pub fn max_element(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    fn len_u64(&self) -> u64 {
        self.elements.len() as u64
    }

    /// `min S >= |S|`. The empty set qualifies.
    pub fn is_weak_schreier(&self) -> bool {
        self.min_element().is_none_or(|m| m >= self.len_u64())
    }

    /// `min S > |S|`. The empty set qualifies.
    pub fn is_strong_schreier(&self) -> bool {
        self.min_element().is_none_or(|m| m > self.len_u64())
    }

    /// `min S = |S|`. The empty set does not qualify: it has no minimum.
    pub fn is_maximal_schreier(&self) -> bool {
        self.min_element().is_some_and(|m| m == self.len_u64())
    }

    /// Every two elements differ by at least `k`. Requires `k >= 1`.
    pub fn is_k_zeckendorf(&self, k: u64) -> Result<bool> {
        if k == 0 {
            return Err(Error::Domain { name: "k", min: 1, got: 0 });
        }
        Ok(self.elements.windows(2).all(|w| w[1] - w[0] >= k))
    }

    /// No two consecutive integers.
    pub fn is_zeckendorf(&self) -> bool {
        self.elements.windows(2).all(|w| w[1] - w[0] >= 2)
    }

    /// `None` for sets with fewer than two elements.
    pub fn gap_list(&self) -> Option<GapList> {
        if self.elements.len() < 2 {
            return None;
        }
        Some(GapList(self.elements.windows(2).map(|w| w[1] - w[0]).collect()))
    }

    /// Every consecutive gap is odd; vacuously true below two elements.
    pub fn has_odd_gaps(&self) -> bool {
        self.elements.windows(2).all(|w| (w[1] - w[0]) % 2 == 1)
    }

    /// Bitmask with bit `e - 1` set for each element `e`, if all fit in 64 bits.
    pub fn to_mask(&self) -> Option<u64> {
        self.elements.iter().try_fold(0u64, |acc, &e| {
            (e <= 64).then(|| acc | (1u64 << (e - 1)))
        })
    }
}

impl TryFrom<Vec<u64>> for FiniteSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<FiniteSet> for Vec<u64> {
    fn from(s: FiniteSet) -> Self {
        s.elements
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for FiniteSet {
    type Err = Error;

    /// Accepts `{2,3,5}`, tolerating whitespace around elements.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected braces around `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let elements = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u64>()
                    .map_err(|_| Error::Parse(format!("`{tok}` is not a nonnegative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> FiniteSet {
        FiniteSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn minimum() {
        assert_eq!(set(&[2, 5]).min_element(), Some(2));
        assert_eq!(set(&[]).min_element(), None);
        assert_eq!(set(&[7]).min_element(), Some(7));
    }

    #[test]
    fn weak_schreier() {
        assert!(set(&[2, 3]).is_weak_schreier());
        assert!(!set(&[1, 2]).is_weak_schreier());
        assert!(set(&[]).is_weak_schreier());
    }

    #[test]
    fn strong_schreier() {
        assert!(set(&[3, 4]).is_strong_schreier());
        assert!(!set(&[2, 3]).is_strong_schreier());
        assert!(set(&[]).is_strong_schreier());
    }

    #[test]
    fn maximal_schreier() {
        assert!(set(&[1]).is_maximal_schreier());
        assert!(set(&[2, 3]).is_maximal_schreier());
        assert!(!set(&[3]).is_maximal_schreier());
        assert!(!set(&[]).is_maximal_schreier());
    }

    #[test]
    fn k_zeckendorf() {
        assert!(set(&[1, 3]).is_k_zeckendorf(2).unwrap());
        assert!(!set(&[1, 2]).is_k_zeckendorf(2).unwrap());
        assert!(set(&[5]).is_k_zeckendorf(9).unwrap());
        assert!(set(&[]).is_k_zeckendorf(3).unwrap());
        assert!(matches!(set(&[1]).is_k_zeckendorf(0), Err(Error::Domain { .. })));
    }

    #[test]
    fn gaps() {
        assert_eq!(set(&[1, 4, 5]).gap_list().unwrap().as_slice(), &[3, 1]);
        assert_eq!(set(&[1, 3, 5]).gap_list().unwrap().as_slice(), &[2, 2]);
        assert_eq!(set(&[7]).gap_list(), None);
        assert_eq!(set(&[]).gap_list(), None);
    }

    #[test]
    fn odd_gaps() {
        assert!(set(&[1, 2, 3]).has_odd_gaps());
        assert!(!set(&[1, 3]).has_odd_gaps());
        assert!(set(&[]).has_odd_gaps());
        assert!(set(&[4]).has_odd_gaps());
    }

    #[test]
    fn construction_sorts_and_rejects() {
        assert_eq!(set(&[5, 2, 3]).elements(), &[2, 3, 5]);
        assert_eq!(FiniteSet::new(vec![3, 1, 3]), Err(Error::DuplicateElement(3)));
        assert_eq!(FiniteSet::new(vec![0, 1]), Err(Error::NonPositiveElement));
    }

    #[test]
    fn text_form() {
        assert_eq!(set(&[2, 3, 5]).to_string(), "{2,3,5}");
        assert_eq!(FiniteSet::empty().to_string(), "{}");
        assert_eq!("{ 5, 2 }".parse::<FiniteSet>().unwrap(), set(&[2, 5]));
        assert_eq!("{}".parse::<FiniteSet>().unwrap(), FiniteSet::empty());
        assert!(matches!("2,3".parse::<FiniteSet>(), Err(Error::Parse(_))));
        assert!(matches!("{2,x}".parse::<FiniteSet>(), Err(Error::Parse(_))));
        assert!(matches!("{2,-1}".parse::<FiniteSet>(), Err(Error::Parse(_))));
        assert_eq!("{0}".parse::<FiniteSet>(), Err(Error::NonPositiveElement));
        assert_eq!("{2,2}".parse::<FiniteSet>(), Err(Error::DuplicateElement(2)));
    }

    #[test]
    fn json_is_a_plain_array() {
        let s = set(&[2, 3, 5]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,3,5]");
        let back: FiniteSet = serde_json::from_str("[5,3,2]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<FiniteSet>("[1,1]").is_err());
    }

    #[test]
    fn masks() {
        assert_eq!(FiniteSet::from_mask(0b10110), set(&[2, 3, 5]));
        assert_eq!(set(&[2, 3, 5]).to_mask(), Some(0b10110));
        assert_eq!(set(&[65]).to_mask(), None);
    }
}
