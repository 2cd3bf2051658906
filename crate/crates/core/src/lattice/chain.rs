use super::Lattice;
use crate::error::{Error, Result};

/// Integers under `min`/`max`. Unbounded unless built with [`Chain::bounded`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Chain {
    range: Option<(i64, i64)>,
}

impl Chain {
    pub fn unbounded() -> Self {
        Chain { range: None }
    }

    /// The finite chain `lo <= ... <= hi`.
    pub fn bounded(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidSpec(format!("empty chain {lo}..{hi}")));
        }
        Ok(Chain {
            range: Some((lo, hi)),
        })
    }

    /// The chain `0 < 1 < ... < len - 1`.
    pub fn of_len(len: u32) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidSpec("chain of length 0".into()));
        }
        Chain::bounded(0, i64::from(len) - 1)
    }

    pub fn range(&self) -> Option<(i64, i64)> {
        self.range
    }
}

impl Lattice for Chain {
    type Elem = i64;

    #[inline]
    fn meet(&self, u: &i64, v: &i64) -> Result<i64> {
        Ok(*u.min(v))
    }

    #[inline]
    fn join(&self, u: &i64, v: &i64) -> Result<i64> {
        Ok(*u.max(v))
    }

    #[inline]
    fn leq(&self, u: &i64, v: &i64) -> Result<bool> {
        Ok(u <= v)
    }

    fn bounds(&self) -> Option<(i64, i64)> {
        self.range
    }

    fn enumerate(&self) -> Result<Vec<i64>> {
        match self.range {
            Some((lo, hi)) => Ok((lo..=hi).collect()),
            None => Err(Error::Infinite(self.name())),
        }
    }

    fn contains(&self, e: &i64) -> bool {
        self.range.map_or(true, |(lo, hi)| (lo..=hi).contains(e))
    }

    fn name(&self) -> String {
        match self.range {
            Some((lo, hi)) => format!("chain[{lo}..{hi}]"),
            None => "chain".into(),
        }
    }

    fn format(&self, e: &i64) -> String {
        e.to_string()
    }
}
