use serde::Serialize;

use super::Gap;
use crate::{Count, CountScalar, Result};

/// `C(top, bottom)`, zero whenever `bottom < 0` or `bottom > top`.
///
/// Computed multiplicatively; every intermediate is itself a binomial
/// coefficient so the division is always exact.
pub fn binomial<T: CountScalar>(top: i64, bottom: i64) -> Result<T> {
    if bottom < 0 || top < 0 || bottom > top {
        return Ok(T::zero());
    }
    let bottom = bottom.min(top - bottom);
    let mut acc = T::one();
    for i in 0..bottom {
        let num = T::from_count((top - i) as u64)?;
        let den = T::from_count((i + 1) as u64)?;
        acc = acc.try_mul(&num)?;
        acc = acc.checked_div(&den).expect("nonzero divisor");
    }
    Ok(acc)
}

/// Solutions of `y_1 + ... + y_p = n` with `y_i >= lower_bounds[i]`,
/// i.e. `C(n - Σc + p - 1, p - 1)`.
///
/// An empty bound list gives 0, as does any total below the bound sum.
pub fn compositions<T: CountScalar>(n: u64, lower_bounds: &[u64]) -> Result<T> {
    let p = lower_bounds.len() as i64;
    let floor: i64 = lower_bounds.iter().map(|&c| c as i64).sum();
    binomial(n as i64 - floor + p - 1, p - 1)
}

/// Exact-count version of [`compositions`].
pub fn count_compositions(n: u64, lower_bounds: &[u64]) -> Count {
    compositions(n, lower_bounds).expect("big integers do not overflow")
}

/// One claim of the floor proposition: whether its hypothesis applies for
/// the given `(n, k)` and, if so, whether the conclusion holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub applicable: bool,
    pub holds: bool,
}

impl Claim {
    fn check(applicable: bool, conclusion: impl FnOnce() -> bool) -> Self {
        Self {
            applicable,
            holds: !applicable || conclusion(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FloorClaims {
    pub same_floor_steps_up: Claim,
    pub larger_floor_caps: Claim,
    pub same_floor_is_exact: Claim,
}

impl FloorClaims {
    /// Each flag is true when the claim holds or its hypothesis does not apply.
    pub fn as_tuple(&self) -> (bool, bool, bool) {
        (
            self.same_floor_steps_up.holds,
            self.larger_floor_caps.holds,
            self.same_floor_is_exact.holds,
        )
    }

    pub fn all_hold(&self) -> bool {
        let (a, b, c) = self.as_tuple();
        a && b && c
    }
}

/// Checks the three floor relations between `⌊(n-1)/(k+1)⌋`, `⌊(n-2)/(k+1)⌋`
/// and `⌊(n-k-2)/(k+1)⌋` that the H recurrence relies on.
///
/// Division floors toward negative infinity, which matters for small `n`.
pub fn check_floor_claims(n: i64, gap: Gap) -> FloorClaims {
    let k = gap.get() as i64;
    let d = k + 1;
    let fl = |x: i64| x.div_euclid(d);
    let upper = fl(n - 1);
    let mid = fl(n - 2);
    let lower = fl(n - k - 2);

    FloorClaims {
        same_floor_steps_up: Claim::check(mid == lower, || upper == mid + 1),
        larger_floor_caps: Claim::check(mid > lower, || upper < mid + 1),
        // (n-k-2)/(k+1) equals the integer `mid` exactly.
        same_floor_is_exact: Claim::check(lower == mid, || n - k - 2 == d * mid),
    }
}
