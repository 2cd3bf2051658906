use super::natural::{checked_lcm, gcd};
use super::Lattice;
use crate::arithmetic::divisors;
use crate::error::{Error, Result};

/// The interval `[K, N] = { d : K | d, d | N }` of the divisibility order.
///
/// Unlike [`super::Arithmetic`], the order here is plain divisibility
/// (meet = gcd, join = lcm), so `K` is the bottom and `N` the top. This is
/// the lattice carrying the anti-automorphism `d -> KN/d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorInterval {
    k: u64,
    n: u64,
    carrier: Vec<u64>,
}

impl DivisorInterval {
    pub fn new(k: u64, n: u64) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidSpec("divisor interval bounds must be positive".into()));
        }
        if n % k != 0 {
            return Err(Error::NotDivisor(k, n));
        }
        let carrier = divisors(n / k).into_iter().map(|d| d * k).collect();
        Ok(DivisorInterval { k, n, carrier })
    }

    pub fn lower(&self) -> u64 {
        self.k
    }

    pub fn upper(&self) -> u64 {
        self.n
    }

    pub fn carrier(&self) -> &[u64] {
        &self.carrier
    }

    /// `d -> KN/d`, the order-reversing involution.
    pub fn dual(&self, d: u64) -> Result<u64> {
        if !self.contains(&d) {
            return Err(Error::NotAnElement(d.to_string()));
        }
        Ok(self.k * (self.n / d))
    }

    fn check(&self, d: u64) -> Result<()> {
        if self.contains(&d) {
            Ok(())
        } else {
            Err(Error::NotAnElement(format!("{d} not in [{}, {}]", self.k, self.n)))
        }
    }
}

impl Lattice for DivisorInterval {
    type Elem = u64;

    #[inline]
    fn meet(&self, u: &u64, v: &u64) -> Result<u64> {
        debug_assert!(self.check(*u).is_ok() && self.check(*v).is_ok());
        Ok(gcd(*u, *v))
    }

    #[inline]
    fn join(&self, u: &u64, v: &u64) -> Result<u64> {
        debug_assert!(self.check(*u).is_ok() && self.check(*v).is_ok());
        checked_lcm(*u, *v)
    }

    #[inline]
    fn leq(&self, u: &u64, v: &u64) -> Result<bool> {
        Ok(v % u == 0)
    }

    fn bounds(&self) -> Option<(u64, u64)> {
        Some((self.k, self.n))
    }

    fn enumerate(&self) -> Result<Vec<u64>> {
        Ok(self.carrier.clone())
    }

    fn contains(&self, e: &u64) -> bool {
        *e != 0 && e % self.k == 0 && self.n % e == 0
    }

    fn name(&self) -> String {
        format!("divisors:{}:{}", self.k, self.n)
    }

    fn format(&self, e: &u64) -> String {
        e.to_string()
    }
}
