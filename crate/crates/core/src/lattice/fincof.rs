use serde::Serialize;

use super::Lattice;
use crate::arithmetic::is_prime_power_or_one;
use crate::error::{Error, Result};

/// A finite or cofinite subset of the prime powers (with 1 counted as one).
///
/// `members` is the set itself when finite and its complement when cofinite;
/// always sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinCofSet {
    cofinite: bool,
    members: Vec<u64>,
}

impl FinCofSet {
    pub fn empty() -> Self {
        FinCofSet {
            cofinite: false,
            members: Vec::new(),
        }
    }

    /// All of the prime powers.
    pub fn everything() -> Self {
        FinCofSet {
            cofinite: true,
            members: Vec::new(),
        }
    }

    pub fn finite<I: IntoIterator<Item = u64>>(members: I) -> Result<Self> {
        Self::build(false, members)
    }

    /// The complement of the given finite set.
    pub fn cofinite<I: IntoIterator<Item = u64>>(excluded: I) -> Result<Self> {
        Self::build(true, excluded)
    }

    fn build<I: IntoIterator<Item = u64>>(cofinite: bool, items: I) -> Result<Self> {
        let mut members: Vec<u64> = items.into_iter().collect();
        if let Some(bad) = members.iter().find(|&&m| !is_prime_power_or_one(m)) {
            return Err(Error::NotAnElement(format!("{bad} is not a prime power")));
        }
        members.sort_unstable();
        members.dedup();
        Ok(FinCofSet { cofinite, members })
    }

    pub fn is_cofinite(&self) -> bool {
        self.cofinite
    }

    /// The finite set, or the complement of a cofinite one.
    pub fn listed(&self) -> &[u64] {
        &self.members
    }

    pub fn contains_member(&self, m: u64) -> bool {
        self.members.binary_search(&m).is_ok() != self.cofinite
    }

    pub fn complement(&self) -> Self {
        FinCofSet {
            cofinite: !self.cofinite,
            members: self.members.clone(),
        }
    }
}

fn union(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn intersection(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().copied().filter(|m| b.binary_search(m).is_ok()).collect()
}

fn difference(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().copied().filter(|m| b.binary_search(m).is_err()).collect()
}

/// The finite–cofinite Boolean algebra of the prime powers, ordered by inclusion.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FinCof;

impl FinCof {
    pub fn complement(&self, u: &FinCofSet) -> FinCofSet {
        u.complement()
    }
}

impl Lattice for FinCof {
    type Elem = FinCofSet;

    fn meet(&self, u: &FinCofSet, v: &FinCofSet) -> Result<FinCofSet> {
        let (cofinite, members) = match (u.cofinite, v.cofinite) {
            (false, false) => (false, intersection(&u.members, &v.members)),
            (false, true) => (false, difference(&u.members, &v.members)),
            (true, false) => (false, difference(&v.members, &u.members)),
            (true, true) => (true, union(&u.members, &v.members)),
        };
        Ok(FinCofSet { cofinite, members })
    }

    fn join(&self, u: &FinCofSet, v: &FinCofSet) -> Result<FinCofSet> {
        let (cofinite, members) = match (u.cofinite, v.cofinite) {
            (false, false) => (false, union(&u.members, &v.members)),
            (false, true) => (true, difference(&v.members, &u.members)),
            (true, false) => (true, difference(&u.members, &v.members)),
            (true, true) => (true, intersection(&u.members, &v.members)),
        };
        Ok(FinCofSet { cofinite, members })
    }

    fn bounds(&self) -> Option<(FinCofSet, FinCofSet)> {
        Some((FinCofSet::empty(), FinCofSet::everything()))
    }

    fn enumerate(&self) -> Result<Vec<FinCofSet>> {
        Err(Error::Infinite(self.name()))
    }

    fn contains(&self, e: &FinCofSet) -> bool {
        e.members.windows(2).all(|w| w[0] < w[1])
            && e.members.iter().all(|&m| is_prime_power_or_one(m))
    }

    fn name(&self) -> String {
        "fincof".into()
    }

    fn format(&self, e: &FinCofSet) -> String {
        let list: Vec<String> = e.members.iter().map(u64::to_string).collect();
        if e.cofinite {
            format!("P\\{{{}}}", list.join(","))
        } else {
            format!("{{{}}}", list.join(","))
        }
    }
}
