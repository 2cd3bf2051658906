//! The lattice abstraction and its backends.
//!
//! Every other module computes exclusively through [`Lattice`]: meet, join
//! and the induced order. Backends are plain values; elements are plain
//! values; all operations are pure.

mod chain;
mod descriptor;
mod divisor;
mod fincof;
mod natural;
mod powerset;
mod table;

use std::fmt::Debug;

pub use chain::Chain;
pub use descriptor::{Element, LatticeDescriptor};
pub use divisor::DivisorInterval;
pub use fincof::{FinCof, FinCofSet};
pub use natural::{checked_lcm, gcd, Arithmetic};
pub use powerset::PowerSet;
pub use table::FiniteTable;

use crate::error::Result;

pub trait Lattice: Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn meet(&self, u: &Self::Elem, v: &Self::Elem) -> Result<Self::Elem>;

    fn join(&self, u: &Self::Elem, v: &Self::Elem) -> Result<Self::Elem>;

    /// `u <= v` iff `u v v = v`.
    fn leq(&self, u: &Self::Elem, v: &Self::Elem) -> Result<bool> {
        Ok(self.join(u, v)? == *v)
    }

    /// `(bottom, top)` when the lattice is bounded.
    fn bounds(&self) -> Option<(Self::Elem, Self::Elem)>;

    /// All elements in the backend's fixed order. Fails on infinite lattices.
    fn enumerate(&self) -> Result<Vec<Self::Elem>>;

    fn contains(&self, e: &Self::Elem) -> bool;

    fn name(&self) -> String;

    fn format(&self, e: &Self::Elem) -> String {
        format!("{e:?}")
    }
}

/// Argument of `L` and `U`, in the order `(x, a, y, b, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Quintuple<E> {
    pub x: E,
    pub a: E,
    pub y: E,
    pub b: E,
    pub z: E,
}

impl<E> Quintuple<E> {
    pub fn new(x: E, a: E, y: E, b: E, z: E) -> Self {
        Quintuple { x, a, y, b, z }
    }

    pub fn from_array([x, a, y, b, z]: [E; 5]) -> Self {
        Quintuple { x, a, y, b, z }
    }

    pub fn into_array(self) -> [E; 5] {
        [self.x, self.a, self.y, self.b, self.z]
    }

    pub fn as_refs(&self) -> [&E; 5] {
        [&self.x, &self.a, &self.y, &self.b, &self.z]
    }

    pub fn map<F, T>(&self, mut f: F) -> Quintuple<T>
    where
        F: FnMut(&E) -> T,
    {
        Quintuple {
            x: f(&self.x),
            a: f(&self.a),
            y: f(&self.y),
            b: f(&self.b),
            z: f(&self.z),
        }
    }

    pub fn try_map<F, T, Err>(&self, mut f: F) -> std::result::Result<Quintuple<T>, Err>
    where
        F: FnMut(&E) -> std::result::Result<T, Err>,
    {
        Ok(Quintuple {
            x: f(&self.x)?,
            a: f(&self.a)?,
            y: f(&self.y)?,
            b: f(&self.b)?,
            z: f(&self.z)?,
        })
    }
}

/// Meet of a non-empty list.
pub fn meet_all<L: Lattice>(lat: &L, items: &[&L::Elem]) -> Result<L::Elem> {
    let (first, rest) = items.split_first().expect("meet_all of an empty list");
    rest.iter()
        .try_fold((*first).clone(), |acc, e| lat.meet(&acc, e))
}

/// Join of a non-empty list.
pub fn join_all<L: Lattice>(lat: &L, items: &[&L::Elem]) -> Result<L::Elem> {
    let (first, rest) = items.split_first().expect("join_all of an empty list");
    rest.iter()
        .try_fold((*first).clone(), |acc, e| lat.join(&acc, e))
}

pub fn format_quintuple<L: Lattice>(lat: &L, q: &Quintuple<L::Elem>) -> String {
    format!(
        "(x={}, a={}, y={}, b={}, z={})",
        lat.format(&q.x),
        lat.format(&q.a),
        lat.format(&q.y),
        lat.format(&q.b),
        lat.format(&q.z)
    )
}
