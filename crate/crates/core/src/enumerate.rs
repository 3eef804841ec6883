//! Brute-force enumeration of subsets of `{1, ..., n}`.
//!
//! Subsets are walked as `u64` bitmasks (bit `i` stands for element `i + 1`)
//! in ascending mask order. Filtering works on the mask directly; a
//! [`FiniteSet`] is only materialized for subsets that are yielded.

use std::env;

use crate::{Count, Error, FiniteSet, Result};

/// Default largest ambient `n` the oracle will enumerate.
pub const DEFAULT_CEILING: u32 = 30;

/// Environment variable that overrides [`DEFAULT_CEILING`].
pub const CEILING_ENV: &str = "SZ_ORACLE_CEILING";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SchreierKind {
    #[default]
    Any,
    Weak,
    Strong,
    Maximal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MaxConstraint {
    #[default]
    None,
    /// `max S = n`.
    MaxEqualsN,
    /// `n ∈ S`. Same sets as [`MaxConstraint::MaxEqualsN`] inside `{1, ..., n}`.
    ContainsN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MaxParity {
    #[default]
    Any,
    Even,
    Odd,
}

/// Declarative subset filter.
///
/// The empty set has no maximum: it passes the parity filter, but fails any
/// [`MaxConstraint`] other than `None`, and is only admitted when
/// `include_empty` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PredicateSpec {
    pub schreier: SchreierKind,
    pub zeckendorf_gap: Option<u64>,
    pub odd_gaps_only: bool,
    pub max_constraint: MaxConstraint,
    pub max_parity: MaxParity,
    pub include_empty: bool,
}

impl PredicateSpec {
    /// Accepts every nonempty subset.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn schreier(mut self, kind: SchreierKind) -> Self {
        self.schreier = kind;
        self
    }

    pub fn zeckendorf(mut self, k: u64) -> Self {
        self.zeckendorf_gap = Some(k);
        self
    }

    pub fn odd_gaps(mut self) -> Self {
        self.odd_gaps_only = true;
        self
    }

    pub fn max_equals_n(mut self) -> Self {
        self.max_constraint = MaxConstraint::MaxEqualsN;
        self
    }

    pub fn contains_n(mut self) -> Self {
        self.max_constraint = MaxConstraint::ContainsN;
        self
    }

    pub fn parity(mut self, parity: MaxParity) -> Self {
        self.max_parity = parity;
        self
    }

    pub fn with_empty(mut self) -> Self {
        self.include_empty = true;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.zeckendorf_gap == Some(0) {
            return Err(Error::Domain { name: "zeckendorf gap", min: 1, got: 0 });
        }
        Ok(())
    }

    /// Whether the subset encoded by `mask` (inside `{1, ..., n}`) passes.
    pub fn accepts_mask(&self, n: u32, mask: u64) -> bool {
        if mask == 0 {
            return self.include_empty
                && self.max_constraint == MaxConstraint::None
                && self.schreier != SchreierKind::Maximal;
        }
        let max = 64 - mask.leading_zeros();
        if self.max_constraint != MaxConstraint::None && max != n {
            return false;
        }
        match self.max_parity {
            MaxParity::Any => {}
            MaxParity::Even if !max.is_multiple_of(2) => return false,
            MaxParity::Odd if max % 2 != 1 => return false,
            _ => {}
        }
        let min = mask.trailing_zeros() + 1;
        let len = mask.count_ones();
        let schreier_ok = match self.schreier {
            SchreierKind::Any => true,
            SchreierKind::Weak => min >= len,
            SchreierKind::Strong => min > len,
            SchreierKind::Maximal => min == len,
        };
        if !schreier_ok {
            return false;
        }
        if let Some(k) = self.zeckendorf_gap {
            // Two elements closer than k show up as an overlap of the mask
            // with itself shifted by some d < k.
            let too_close = (1..k.min(64)).any(|d| mask & (mask >> d) != 0);
            if too_close {
                return false;
            }
        }
        if self.odd_gaps_only && !mask_has_odd_gaps(mask) {
            return false;
        }
        true
    }
}

fn mask_has_odd_gaps(mask: u64) -> bool {
    let mut rest = mask;
    let mut prev = rest.trailing_zeros();
    rest &= rest - 1;
    while rest != 0 {
        let cur = rest.trailing_zeros();
        if (cur - prev).is_multiple_of(2) {
            return false;
        }
        prev = cur;
        rest &= rest - 1;
    }
    true
}

/// Exhaustive subset enumerator with a hard ceiling on `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    ceiling: u32,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { ceiling: DEFAULT_CEILING }
    }
}

impl Oracle {
    /// Ceilings must lie in `1..=63` so every mask fits in a `u64`.
    pub fn with_ceiling(ceiling: u64) -> Result<Self> {
        if !(1..=63).contains(&ceiling) {
            return Err(Error::InvalidCeiling(ceiling));
        }
        Ok(Self { ceiling: ceiling as u32 })
    }

    /// Reads the ceiling from `SZ_ORACLE_CEILING`, falling back to the default.
    pub fn from_env() -> Result<Self> {
        match env::var(CEILING_ENV) {
            Ok(raw) => {
                let v = raw
                    .trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("{CEILING_ENV}={raw} is not an integer")))?;
                Self::with_ceiling(v)
            }
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn ceiling(&self) -> u32 {
        self.ceiling
    }

    fn check(&self, n: u64, spec: &PredicateSpec) -> Result<u32> {
        if n == 0 {
            return Err(Error::Domain { name: "n", min: 1, got: 0 });
        }
        if n > u64::from(self.ceiling) {
            return Err(Error::CeilingExceeded { n, ceiling: self.ceiling });
        }
        spec.validate()?;
        Ok(n as u32)
    }

    /// Subsets of `{1, ..., n}` that pass `spec`, in ascending bitmask order.
    pub fn enumerate_matching(&self, n: u64, spec: &PredicateSpec) -> Result<Matching> {
        let n = self.check(n, spec)?;
        let (next, end) = mask_range(n, spec);
        Ok(Matching { n, spec: *spec, next, end })
    }

    /// Number of subsets `enumerate_matching` would yield.
    pub fn count_matching(&self, n: u64, spec: &PredicateSpec) -> Result<Count> {
        let n = self.check(n, spec)?;
        let (start, end) = mask_range(n, spec);
        let hits = (start..end).filter(|&m| spec.accepts_mask(n, m)).count();
        Ok(Count::from(hits))
    }
}

// With a max constraint only masks that have bit n-1 set can pass; they form
// the contiguous range [2^(n-1), 2^n).
fn mask_range(n: u32, spec: &PredicateSpec) -> (u64, u64) {
    let end = 1u64 << n;
    match spec.max_constraint {
        MaxConstraint::None => (0, end),
        _ => (1u64 << (n - 1), end),
    }
}

/// Iterator returned by [`Oracle::enumerate_matching`].
#[derive(Debug, Clone)]
pub struct Matching {
    n: u32,
    spec: PredicateSpec,
    next: u64,
    end: u64,
}

impl Iterator for Matching {
    type Item = FiniteSet;

    fn next(&mut self) -> Option<FiniteSet> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.spec.accepts_mask(self.n, mask) {
                return Some(FiniteSet::from_mask(mask));
            }
        }
        None
    }
}

/// [`Oracle::enumerate_matching`] with the default ceiling.
pub fn enumerate_matching(n: u64, spec: &PredicateSpec) -> Result<Matching> {
    Oracle::default().enumerate_matching(n, spec)
}

/// [`Oracle::count_matching`] with the default ceiling.
pub fn count_matching(n: u64, spec: &PredicateSpec) -> Result<Count> {
    Oracle::default().count_matching(n, spec)
}
