use num_integer::Integer;

use super::Lattice;
use crate::error::{Error, Result};

/// `gcd` with `gcd(0, x) = x`.
#[inline]
pub fn gcd(u: u64, v: u64) -> u64 {
    u.gcd(&v)
}

/// `lcm` with `lcm(0, x) = 0`; overflow is reported, never wrapped.
#[inline]
pub fn checked_lcm(u: u64, v: u64) -> Result<u64> {
    if u == 0 || v == 0 {
        return Ok(0);
    }
    (u / gcd(u, v)).checked_mul(v).ok_or(Error::Overflow {
        op: "lcm",
        lhs: u,
        rhs: v,
    })
}

/// The non-negative integers ordered by reverse divisibility:
/// meet is `lcm`, join is `gcd`, `0` is the bottom and `1` the top.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Arithmetic;

impl Lattice for Arithmetic {
    type Elem = u64;

    #[inline]
    fn meet(&self, u: &u64, v: &u64) -> Result<u64> {
        checked_lcm(*u, *v)
    }

    #[inline]
    fn join(&self, u: &u64, v: &u64) -> Result<u64> {
        Ok(gcd(*u, *v))
    }

    #[inline]
    fn leq(&self, u: &u64, v: &u64) -> Result<bool> {
        // v | u, with 0 divisible by everything
        Ok(if *v == 0 { *u == 0 } else { *u % *v == 0 })
    }

    fn bounds(&self) -> Option<(u64, u64)> {
        Some((0, 1))
    }

    fn enumerate(&self) -> Result<Vec<u64>> {
        Err(Error::Infinite(self.name()))
    }

    fn contains(&self, _: &u64) -> bool {
        true
    }

    fn name(&self) -> String {
        "arithmetic".into()
    }

    fn format(&self, e: &u64) -> String {
        e.to_string()
    }
}
