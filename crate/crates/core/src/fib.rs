//! Fibonacci numbers indexed from `-1`, with `F(-1) = 1`, `F(0) = 0`.

use std::sync::{LazyLock, RwLock};

use crate::error::at_least;
use crate::{Count, CountScalar, Error, Result};

/// Memoized Fibonacci table that grows on demand.
///
/// Slot `i + 1` holds `F(i)`. Growth is iterative, so large indices never
/// recurse, and the table is shared behind a lock so one instance can serve
/// many threads.
#[derive(Debug)]
pub struct Fibonacci<T> {
    table: RwLock<Vec<T>>,
}

impl<T: CountScalar> Default for Fibonacci<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: CountScalar> Fibonacci<T> {
    pub fn new() -> Self {
        Self {
            table: RwLock::new(vec![T::one(), T::zero()]),
        }
    }

    /// Returns `F(i)`.
    pub fn get(&self, i: i64) -> Result<T> {
        if i < -1 {
            return Err(Error::FibIndexBelowRange(i));
        }
        let slot = (i + 1) as usize;
        {
            let table = self.table.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = table.get(slot) {
                return Ok(v.clone());
            }
        }
        let mut table = self.table.write().unwrap_or_else(|e| e.into_inner());
        while table.len() <= slot {
            let len = table.len();
            let next = table[len - 1].try_add(&table[len - 2])?;
            table.push(next);
        }
        Ok(table[slot].clone())
    }

    /// `F(1) + ... + F(n)`, evaluated as `F(n + 2) - 1`.
    pub fn prefix_sum(&self, n: i64) -> Result<T> {
        at_least("n", 1, n)?;
        self.get(n + 2)?.try_sub(&T::one())
    }

    /// Number of entries currently memoized.
    pub fn cached(&self) -> usize {
        self.table.read().unwrap_or_else(|e| e.into_inner()).len()
    }
}

static SHARED: LazyLock<Fibonacci<Count>> = LazyLock::new(Fibonacci::new);

/// `F(i)` as an exact count, from a process-wide table.
pub fn fib(i: i64) -> Result<Count> {
    SHARED.get(i)
}

/// `F(1) + ... + F(n)` for `n >= 1`.
pub fn fib_prefix_sum(n: i64) -> Result<Count> {
    SHARED.prefix_sum(n)
}
