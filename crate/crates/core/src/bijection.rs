//! Bijection between weak-Schreier subsets of `{1..n}` and Zeckendorf
//! subsets of `{1..n}`.
//!
//! For `a_1 < ... < a_k` the forward map sends `a_i` to `a_i - (k - i)`: the
//! last element stays put and every gap grows by one. The inverse adds the
//! same offsets back.

use std::collections::BTreeSet;

use crate::{Count, Error, FiniteSet, Oracle, Precondition, PredicateSpec, Result, SchreierKind};

fn check_ambient(s: &FiniteSet, n: u64) -> Result<()> {
    match s.max_element() {
        Some(max) if max > n => Err(Precondition::ExceedsAmbient { max, n }.into()),
        _ => Ok(()),
    }
}

/// Maps a weak-Schreier subset of `{1..n}` to a Zeckendorf subset of `{1..n}`.
pub fn forward(a: &FiniteSet, n: u64) -> Result<FiniteSet> {
    if let Some(min) = a.min_element() {
        if !a.is_weak_schreier() {
            return Err(Precondition::NotWeakSchreier { min, len: a.len() }.into());
        }
    }
    check_ambient(a, n)?;
    let k = a.len() as u64;
    let image = a
        .elements()
        .iter()
        .zip((0..k).rev())
        .map(|(&e, shift)| e - shift)
        .collect();
    Ok(FiniteSet::from_sorted(image))
}

/// Maps a Zeckendorf subset of `{1..n}` back to a weak-Schreier subset.
pub fn inverse(c: &FiniteSet, n: u64) -> Result<FiniteSet> {
    if let Some(w) = c.elements().windows(2).find(|w| w[1] - w[0] < 2) {
        return Err(Precondition::NotZeckendorf(w[0], w[1]).into());
    }
    check_ambient(c, n)?;
    let k = c.len() as u64;
    let preimage = c
        .elements()
        .iter()
        .zip((0..k).rev())
        .map(|(&e, shift)| e + shift)
        .collect();
    Ok(FiniteSet::from_sorted(preimage))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionCheckReport {
    pub n: u64,
    /// Number of weak-Schreier subsets of `{1..n}`.
    pub domain_size: Count,
    /// Number of distinct images.
    pub image_size: Count,
    /// Number of Zeckendorf subsets of `{1..n}`, enumerated independently.
    pub codomain_size: Count,
    pub all_images_in_y: bool,
    pub round_trip_ok: bool,
    pub is_bijection: bool,
}

/// Exhaustive check at a single `n` with the default oracle ceiling.
pub fn verify_bijection(n: u64) -> Result<BijectionCheckReport> {
    verify_bijection_with(&Oracle::default(), n)
}

pub fn verify_bijection_with(oracle: &Oracle, n: u64) -> Result<BijectionCheckReport> {
    let weak = PredicateSpec::new().schreier(SchreierKind::Weak).with_empty();
    let zeck = PredicateSpec::new().zeckendorf(2).with_empty();

    let codomain: BTreeSet<FiniteSet> = oracle.enumerate_matching(n, &zeck)?.collect();
    let mut images = BTreeSet::new();
    let mut domain_size = 0usize;
    let mut all_images_in_y = true;
    let mut round_trip_ok = true;

    for a in oracle.enumerate_matching(n, &weak)? {
        domain_size += 1;
        let image = forward(&a, n)?;
        all_images_in_y &= codomain.contains(&image);
        match inverse(&image, n) {
            Ok(back) => round_trip_ok &= back == a,
            Err(Error::Precondition(_)) => round_trip_ok = false,
            Err(e) => return Err(e),
        }
        images.insert(image);
    }

    let is_bijection = domain_size == images.len()
        && images.len() == codomain.len()
        && all_images_in_y
        && round_trip_ok
        && images == codomain;

    Ok(BijectionCheckReport {
        n,
        domain_size: Count::from(domain_size),
        image_size: Count::from(images.len()),
        codomain_size: Count::from(codomain.len()),
        all_images_in_y,
        round_trip_ok,
        is_bijection,
    })
}
