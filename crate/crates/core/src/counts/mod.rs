//! Closed forms and recurrences for the counted set families.
//!
//! | tag | counts subsets of `{1..n}` that are ... | value |
//! |-----|------------------------------------------|-------|
//! | M   | weak-Schreier with max `n`               | `F(n)` |
//! | A   | strong-Schreier with max `n`             | `F(n-1)` |
//! | B   | maximal with max `n`                     | `F(n-2)` |
//! | C   | weak-Schreier (incl. `{}`)               | `F(n+2)` |
//! | D   | strong-Schreier (incl. `{}`)             | `F(n+1)` |
//! | E   | Zeckendorf (incl. `{}`)                  | `F(n+2)` |
//! | Lw  | weak-Schreier, even max, or `{}`         | `F(n)` / `F(n+1)` for odd / even `n` |
//! | Ls  | strong-Schreier, odd max, or `{}`        | `F(n)` / `F(n-1)` for odd / even `n` |
//! | H   | weak-Schreier, k-Zeckendorf, contain `n` | recurrence |
//! | I   | strong-Schreier, k-Zeckendorf, contain `n` | recurrence |
//! | J   | maximal, k-Zeckendorf, contain `n`       | recurrence |
//! | P   | odd gaps, contain `n`                    | `F(n+1)` |
//! | Q   | odd gaps (incl. `{}`)                    | `F(n+3) - 1` |

mod lemma;
mod verify;

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use crate::error::at_least;
use crate::fib::Fibonacci;
use crate::{Count, CountScalar, Error, MaxParity, PredicateSpec, Result, SchreierKind};

pub use lemma::{
    binomial, check_floor_claims, compositions, count_compositions, Claim, FloorClaims,
};
pub use verify::{verify_family, verify_family_with, VerificationReport, VerificationRow};

/// Minimum distance `k` between elements for the H, I and J families.
///
/// `k >= 2` normally; [`Gap::extended`] also admits `k = 1`, where the
/// Zeckendorf filter is vacuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gap(u64);

impl Gap {
    pub fn new(k: u64) -> Result<Self> {
        at_least("k", 2, k as i64)?;
        Ok(Self(k))
    }

    pub fn extended(k: u64) -> Result<Self> {
        at_least("k", 1, k as i64)?;
        Ok(Self(k))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceFamily {
    M,
    A,
    /// A evaluated through its double binomial sum.
    ABinomial,
    B,
    C,
    D,
    E,
    Lw,
    Ls,
    H(Gap),
    I(Gap),
    J(Gap),
    P,
    Q,
}

impl SequenceFamily {
    /// Every family without a gap parameter.
    pub const UNPARAMETERIZED: [SequenceFamily; 11] = [
        Self::M,
        Self::A,
        Self::ABinomial,
        Self::B,
        Self::C,
        Self::D,
        Self::E,
        Self::Lw,
        Self::Ls,
        Self::P,
        Self::Q,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Self::M => "M",
            Self::A => "A",
            Self::ABinomial => "A_binomial",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
            Self::E => "E",
            Self::Lw => "Lw",
            Self::Ls => "Ls",
            Self::H(_) => "H",
            Self::I(_) => "I",
            Self::J(_) => "J",
            Self::P => "P",
            Self::Q => "Q",
        }
    }

    pub fn gap(&self) -> Option<Gap> {
        match self {
            Self::H(g) | Self::I(g) | Self::J(g) => Some(*g),
            _ => None,
        }
    }

    /// Builds a family from its tag. `k` is required for H, I, J and
    /// rejected otherwise; `allow_unit_gap` admits `k = 1`.
    pub fn from_tag(tag: &str, k: Option<u64>, allow_unit_gap: bool) -> Result<Self> {
        let gap = |name| {
            let k = k.ok_or(Error::MissingGap(name))?;
            if allow_unit_gap {
                Gap::extended(k)
            } else {
                Gap::new(k)
            }
        };
        let family = match tag.to_ascii_lowercase().as_str() {
            "h" => return gap("H").map(Self::H),
            "i" => return gap("I").map(Self::I),
            "j" => return gap("J").map(Self::J),
            "m" => Self::M,
            "a" => Self::A,
            "a_binomial" | "abinomial" => Self::ABinomial,
            "b" => Self::B,
            "c" => Self::C,
            "d" => Self::D,
            "e" => Self::E,
            "lw" => Self::Lw,
            "ls" => Self::Ls,
            "p" => Self::P,
            "q" => Self::Q,
            _ => return Err(Error::UnknownFamily(tag.to_string())),
        };
        if k.is_some() {
            return Err(Error::UnexpectedGap(family.tag()));
        }
        Ok(family)
    }

    /// Filter whose brute-force count should reproduce this family.
    pub fn oracle_spec(&self) -> PredicateSpec {
        let base = PredicateSpec::new();
        match *self {
            Self::M => base.schreier(SchreierKind::Weak).max_equals_n(),
            Self::A | Self::ABinomial => base.schreier(SchreierKind::Strong).max_equals_n(),
            Self::B => base.schreier(SchreierKind::Maximal).max_equals_n(),
            Self::C => base.schreier(SchreierKind::Weak).with_empty(),
            Self::D => base.schreier(SchreierKind::Strong).with_empty(),
            Self::E => base.zeckendorf(2).with_empty(),
            Self::Lw => base
                .schreier(SchreierKind::Weak)
                .parity(MaxParity::Even)
                .with_empty(),
            Self::Ls => base
                .schreier(SchreierKind::Strong)
                .parity(MaxParity::Odd)
                .with_empty(),
            Self::H(g) => base.schreier(SchreierKind::Weak).zeckendorf(g.0).contains_n(),
            Self::I(g) => base.schreier(SchreierKind::Strong).zeckendorf(g.0).contains_n(),
            Self::J(g) => base.schreier(SchreierKind::Maximal).zeckendorf(g.0).contains_n(),
            Self::P => base.odd_gaps().contains_n(),
            Self::Q => base.odd_gaps().with_empty(),
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gap() {
            Some(g) => write!(f, "{}(k={})", self.tag(), g.0),
            None => f.write_str(self.tag()),
        }
    }
}

impl FromStr for SequenceFamily {
    type Err = Error;

    /// Parses tags without a gap parameter.
    fn from_str(s: &str) -> Result<Self> {
        Self::from_tag(s, None, false)
    }
}

fn positive(n: u64) -> Result<i64> {
    at_least("n", 1, n as i64)?;
    Ok(n as i64)
}

/// Evaluates every family over a scalar type `T`, sharing one Fibonacci table.
#[derive(Debug)]
pub struct Sequences<T> {
    fib: Fibonacci<T>,
}

impl<T: CountScalar> Default for Sequences<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: CountScalar> Sequences<T> {
    pub fn new() -> Self {
        Self { fib: Fibonacci::new() }
    }

    pub fn fibonacci(&self) -> &Fibonacci<T> {
        &self.fib
    }

    pub fn m(&self, n: u64) -> Result<T> {
        self.fib.get(positive(n)?)
    }

    pub fn a(&self, n: u64) -> Result<T> {
        self.fib.get(positive(n)? - 1)
    }

    /// `Σ_{k=1}^{n-1} Σ_{j=0}^{k-3} C(n-k-1, j) + 1`, valid for `n >= 2`.
    pub fn a_binomial(&self, n: u64) -> Result<T> {
        at_least("n", 2, n as i64)?;
        let n = n as i64;
        let mut total = T::one();
        for k in 3..n {
            for j in 0..=k - 3 {
                total = total.try_add(&binomial(n - k - 1, j)?)?;
            }
        }
        Ok(total)
    }

    pub fn b(&self, n: u64) -> Result<T> {
        self.fib.get(positive(n)? - 2)
    }

    pub fn c(&self, n: u64) -> Result<T> {
        self.fib.get(positive(n)? + 2)
    }

    pub fn d(&self, n: u64) -> Result<T> {
        self.fib.get(positive(n)? + 1)
    }

    pub fn e(&self, n: u64) -> Result<T> {
        self.fib.get(positive(n)? + 2)
    }

    pub fn lw(&self, n: u64) -> Result<T> {
        let n = positive(n)?;
        self.fib.get(if n % 2 == 1 { n } else { n + 1 })
    }

    pub fn ls(&self, n: u64) -> Result<T> {
        let n = positive(n)?;
        self.fib.get(if n % 2 == 1 { n } else { n - 1 })
    }

    /// `H(k, n) = 1` for `n <= k+1`, else `H(k, n-1) + H(k, n-k-1)`.
    pub fn h(&self, gap: Gap, n: u64) -> Result<T> {
        positive(n)?;
        let k = gap.0;
        gap_recurrence(n, k, k + 1, |_| 1)
    }

    /// `Σ_{l=1}^{⌊(n-1)/(k+1)⌋} C(n-kl-1, l) + 1`.
    pub fn h_binomial(&self, gap: Gap, n: u64) -> Result<T> {
        let n = positive(n)?;
        let k = gap.0 as i64;
        let upper = (n - 1).div_euclid(k + 1);
        let mut total = T::one();
        for l in 1..=upper {
            total = total.try_add(&binomial(n - k * l - 1, l)?)?;
        }
        Ok(total)
    }

    /// `I(k, 1) = 0`, `1` for `2 <= n <= k+2`, then the same recurrence as H.
    pub fn i(&self, gap: Gap, n: u64) -> Result<T> {
        positive(n)?;
        let k = gap.0;
        gap_recurrence(n, k, k + 2, |m| u64::from(m != 1))
    }

    /// `J(k, 1) = 1`, `0` for `2 <= n <= k+1`, `1` up to `2k+2`, then the
    /// same recurrence as H.
    pub fn j(&self, gap: Gap, n: u64) -> Result<T> {
        positive(n)?;
        let k = gap.0;
        gap_recurrence(n, k, 2 * k + 2, |m| u64::from(m == 1 || m > k + 1))
    }

    pub fn p(&self, n: u64) -> Result<T> {
        self.fib.get(positive(n)? + 1)
    }

    pub fn q(&self, n: u64) -> Result<T> {
        self.fib.get(positive(n)? + 3)?.try_sub(&T::one())
    }

    /// The family's primary value. `A_binomial` at `n = 1`, outside the
    /// binomial sum's range, is answered by `A`.
    pub fn value(&self, family: SequenceFamily, n: u64) -> Result<T> {
        use SequenceFamily::*;
        match family {
            M => self.m(n),
            A => self.a(n),
            ABinomial if n == 1 => self.a(n),
            ABinomial => self.a_binomial(n),
            B => self.b(n),
            C => self.c(n),
            D => self.d(n),
            E => self.e(n),
            Lw => self.lw(n),
            Ls => self.ls(n),
            H(g) => self.h(g, n),
            I(g) => self.i(g, n),
            J(g) => self.j(g, n),
            P => self.p(n),
            Q => self.q(n),
        }
    }

    /// Closed-form value: the binomial sum for H, the recurrence for I and J
    /// (which have no closed form), [`Self::value`] otherwise.
    pub fn formula(&self, family: SequenceFamily, n: u64) -> Result<T> {
        match family {
            SequenceFamily::H(g) => self.h_binomial(g, n),
            other => self.value(other, n),
        }
    }

    /// Value obtained without the Fibonacci table: a second-order recurrence
    /// from the family's first two terms, or a sum of such values.
    ///
    /// `None` for I and J, whose formula already is the recurrence.
    pub fn recurrence(&self, family: SequenceFamily, n: u64) -> Result<Option<T>> {
        use SequenceFamily::*;
        positive(n)?;
        let plus_one = |terms: Vec<T>, keep: fn(usize) -> bool| -> Result<T> {
            terms
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(i + 1))
                .try_fold(T::one(), |acc, (_, v)| acc.try_add(v))
        };
        let v = match family {
            M => last(second_order(n, 1, 1)?),
            A | ABinomial => last(second_order(n, 0, 1)?),
            E => last(second_order(n, 2, 3)?),
            P => last(second_order(n, 1, 2)?),
            B => last(second_order::<T>(n, 1, 1)?).try_sub(&last(second_order(n, 0, 1)?))?,
            C => plus_one(second_order(n, 1, 1)?, |_| true)?,
            D => plus_one(second_order(n, 0, 1)?, |_| true)?,
            Lw => plus_one(second_order(n, 1, 1)?, |k| k % 2 == 0)?,
            Ls => plus_one(second_order(n, 0, 1)?, |k| k % 2 == 1)?,
            Q => plus_one(second_order(n, 1, 2)?, |_| true)?,
            H(g) => self.h(g, n)?,
            I(_) | J(_) => return Ok(None),
        };
        Ok(Some(v))
    }
}

fn last<T>(mut v: Vec<T>) -> T {
    v.pop().expect("n >= 1")
}

/// Terms 1..=n of `x(m) = x(m-1) + x(m-2)` with the given first two terms.
fn second_order<T: CountScalar>(n: u64, first: u64, second: u64) -> Result<Vec<T>> {
    let mut terms = Vec::with_capacity(n as usize);
    terms.push(T::from_count(first)?);
    if n >= 2 {
        terms.push(T::from_count(second)?);
    }
    while (terms.len() as u64) < n {
        let len = terms.len();
        let next = terms[len - 1].try_add(&terms[len - 2])?;
        terms.push(next);
    }
    Ok(terms)
}

/// Linear DP for `x(m) = x(m-1) + x(m-(k+1))` when `m > threshold`, and
/// `x(m) = base(m)` otherwise. Requires `threshold >= k + 1`.
fn gap_recurrence<T: CountScalar>(
    n: u64,
    k: u64,
    threshold: u64,
    base: impl Fn(u64) -> u64,
) -> Result<T> {
    debug_assert!(threshold > k);
    let mut terms: Vec<T> = Vec::with_capacity(n as usize);
    for m in 1..=n {
        let v = if m <= threshold {
            T::from_count(base(m))?
        } else {
            terms[(m - 2) as usize].try_add(&terms[(m - k - 2) as usize])?
        };
        terms.push(v);
    }
    Ok(last(terms))
}

static SHARED: LazyLock<Sequences<Count>> = LazyLock::new(Sequences::new);

pub(crate) fn shared() -> &'static Sequences<Count> {
    &SHARED
}

pub fn count_m(n: u64) -> Result<Count> {
    SHARED.m(n)
}

pub fn count_a(n: u64) -> Result<Count> {
    SHARED.a(n)
}

pub fn count_a_binomial(n: u64) -> Result<Count> {
    SHARED.a_binomial(n)
}

pub fn count_b(n: u64) -> Result<Count> {
    SHARED.b(n)
}

pub fn count_c(n: u64) -> Result<Count> {
    SHARED.c(n)
}

pub fn count_d(n: u64) -> Result<Count> {
    SHARED.d(n)
}

pub fn count_e(n: u64) -> Result<Count> {
    SHARED.e(n)
}

pub fn count_lw(n: u64) -> Result<Count> {
    SHARED.lw(n)
}

pub fn count_ls(n: u64) -> Result<Count> {
    SHARED.ls(n)
}

pub fn count_h(k: u64, n: u64) -> Result<Count> {
    SHARED.h(Gap::new(k)?, n)
}

pub fn count_h_binomial(k: u64, n: u64) -> Result<Count> {
    SHARED.h_binomial(Gap::new(k)?, n)
}

pub fn count_i(k: u64, n: u64) -> Result<Count> {
    SHARED.i(Gap::new(k)?, n)
}

pub fn count_j(k: u64, n: u64) -> Result<Count> {
    SHARED.j(Gap::new(k)?, n)
}

pub fn count_p(n: u64) -> Result<Count> {
    SHARED.p(n)
}

pub fn count_q(n: u64) -> Result<Count> {
    SHARED.q(n)
}

/// Primary value of `family` at `n`.
pub fn count(family: SequenceFamily, n: u64) -> Result<Count> {
    SHARED.value(family, n)
}
