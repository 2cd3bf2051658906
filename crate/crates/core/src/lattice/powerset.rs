use super::Lattice;
use crate::error::{Error, Result};

/// Subsets of `{0, .., n-1}` as bit masks, `n <= 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerSet {
    n: u32,
}

impl PowerSet {
    pub const MAX_UNIVERSE: u32 = 64;

    pub fn new(n: u32) -> Result<Self> {
        if n > Self::MAX_UNIVERSE {
            return Err(Error::InvalidSpec(format!(
                "power set universe {n} exceeds {}",
                Self::MAX_UNIVERSE
            )));
        }
        Ok(PowerSet { n })
    }

    pub fn universe_size(&self) -> u32 {
        self.n
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn complement(&self, u: u64) -> u64 {
        !u & self.full()
    }

    /// Builds a mask from point indices.
    pub fn set<I: IntoIterator<Item = u32>>(&self, points: I) -> Result<u64> {
        points.into_iter().try_fold(0u64, |acc, p| {
            if p >= self.n {
                Err(Error::NotAnElement(format!("point {p} outside universe of size {}", self.n)))
            } else {
                Ok(acc | (1u64 << p))
            }
        })
    }

    pub fn points(&self, u: u64) -> Vec<u32> {
        (0..self.n).filter(|&i| u >> i & 1 == 1).collect()
    }
}

impl Lattice for PowerSet {
    type Elem = u64;

    #[inline]
    fn meet(&self, u: &u64, v: &u64) -> Result<u64> {
        Ok(u & v)
    }

    #[inline]
    fn join(&self, u: &u64, v: &u64) -> Result<u64> {
        Ok(u | v)
    }

    #[inline]
    fn leq(&self, u: &u64, v: &u64) -> Result<bool> {
        Ok(u & !v == 0)
    }

    fn bounds(&self) -> Option<(u64, u64)> {
        Some((0, self.full()))
    }

    fn enumerate(&self) -> Result<Vec<u64>> {
        if self.n > 24 {
            return Err(Error::BudgetExceeded {
                needed: 1u64 << self.n.min(63),
                budget: 1 << 24,
            });
        }
        Ok((0..=self.full()).collect())
    }

    fn contains(&self, e: &u64) -> bool {
        e & !self.full() == 0
    }

    fn name(&self) -> String {
        format!("powerset:{}", self.n)
    }

    fn format(&self, e: &u64) -> String {
        let pts: Vec<String> = self.points(*e).iter().map(u32::to_string).collect();
        format!("{{{}}}", pts.join(","))
    }
}
