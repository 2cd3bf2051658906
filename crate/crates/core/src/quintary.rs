//! The quintary maps `L` and `U`, their named subterms, slot symmetries and
//! closed forms.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{join_all, meet_all, Chain, Lattice, Quintuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TermId {
    L1,
    L2,
    L3,
    L4,
    U1,
    U2,
    U3,
    U4,
    /// `(b ^ a) v (z ^ x)`
    L5_1,
    /// `(b ^ x) v (a ^ z)`
    L5_2,
    /// `(b ^ z) v (a ^ x)`, the plain `L5`.
    L5_3,
    /// `(a v b) ^ (z v x)`
    U5_1,
    /// `(a v z) ^ (b v x)`, the plain `U5`.
    U5_2,
    /// `(a v x) ^ (b v z)`
    U5_3,
    L,
    U,
    LDistClosed,
    UDistClosed,
    /// `L5_3 v (L5_1 ^ y)`
    LFactored,
    /// `U5_2 ^ (U5_1 v y)`
    UFactored,
    /// Median of `(x, y, z)`.
    Median,
}

impl TermId {
    pub const ALL: [TermId; 21] = [
        TermId::L1,
        TermId::L2,
        TermId::L3,
        TermId::L4,
        TermId::U1,
        TermId::U2,
        TermId::U3,
        TermId::U4,
        TermId::L5_1,
        TermId::L5_2,
        TermId::L5_3,
        TermId::U5_1,
        TermId::U5_2,
        TermId::U5_3,
        TermId::L,
        TermId::U,
        TermId::LDistClosed,
        TermId::UDistClosed,
        TermId::LFactored,
        TermId::UFactored,
        TermId::Median,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TermId::L1 => "L1",
            TermId::L2 => "L2",
            TermId::L3 => "L3",
            TermId::L4 => "L4",
            TermId::U1 => "U1",
            TermId::U2 => "U2",
            TermId::U3 => "U3",
            TermId::U4 => "U4",
            TermId::L5_1 => "L5_1",
            TermId::L5_2 => "L5_2",
            TermId::L5_3 => "L5_3",
            TermId::U5_1 => "U5_1",
            TermId::U5_2 => "U5_2",
            TermId::U5_3 => "U5_3",
            TermId::L => "L",
            TermId::U => "U",
            TermId::LDistClosed => "LDistClosed",
            TermId::UDistClosed => "UDistClosed",
            TermId::LFactored => "LFactored",
            TermId::UFactored => "UFactored",
            TermId::Median => "Median",
        }
    }
}

impl fmt::Display for TermId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "L5" => Some(TermId::L5_3),
            "U5" => Some(TermId::U5_2),
            _ => None,
        };
        alias
            .or_else(|| TermId::ALL.iter().copied().find(|t| t.name().eq_ignore_ascii_case(s)))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown term {s:?}")))
    }
}

pub fn eval_term<L: Lattice>(lat: &L, q: &Quintuple<L::Elem>, t: TermId) -> Result<L::Elem> {
    let Quintuple { x, a, y, b, z } = q;
    let m = |u: &L::Elem, v: &L::Elem| lat.meet(u, v);
    let j = |u: &L::Elem, v: &L::Elem| lat.join(u, v);
    match t {
        TermId::L1 => m(b, &j(z, &m(a, y)?)?),
        TermId::L2 => m(z, &j(b, &m(x, y)?)?),
        TermId::L3 => m(x, &j(a, &m(z, y)?)?),
        TermId::L4 => m(a, &j(x, &m(b, y)?)?),
        TermId::U1 => j(a, &m(z, &j(b, y)?)?),
        TermId::U2 => j(x, &m(b, &j(z, y)?)?),
        TermId::U3 => j(z, &m(a, &j(x, y)?)?),
        TermId::U4 => j(b, &m(x, &j(a, y)?)?),
        TermId::L5_1 => j(&m(b, a)?, &m(z, x)?),
        TermId::L5_2 => j(&m(b, x)?, &m(a, z)?),
        TermId::L5_3 => j(&m(b, z)?, &m(a, x)?),
        TermId::U5_1 => m(&j(a, b)?, &j(z, x)?),
        TermId::U5_2 => m(&j(a, z)?, &j(b, x)?),
        TermId::U5_3 => m(&j(a, x)?, &j(b, z)?),
        TermId::L => eval_l(lat, q),
        TermId::U => eval_u(lat, q),
        TermId::LDistClosed => eval_distributive_closed(lat, q, Bound::L),
        TermId::UDistClosed => eval_distributive_closed(lat, q, Bound::U),
        TermId::LFactored => {
            let inner = m(&eval_term(lat, q, TermId::L5_1)?, y)?;
            j(&eval_term(lat, q, TermId::L5_3)?, &inner)
        }
        TermId::UFactored => {
            let inner = j(&eval_term(lat, q, TermId::U5_1)?, y)?;
            m(&eval_term(lat, q, TermId::U5_2)?, &inner)
        }
        TermId::Median => median(lat, x, y, z),
    }
}

/// `[L1, L2, L3, L4]`
pub fn l_list<L: Lattice>(lat: &L, q: &Quintuple<L::Elem>) -> Result<[L::Elem; 4]> {
    Ok([
        eval_term(lat, q, TermId::L1)?,
        eval_term(lat, q, TermId::L2)?,
        eval_term(lat, q, TermId::L3)?,
        eval_term(lat, q, TermId::L4)?,
    ])
}

/// `[U1, U2, U3, U4]`
pub fn u_list<L: Lattice>(lat: &L, q: &Quintuple<L::Elem>) -> Result<[L::Elem; 4]> {
    Ok([
        eval_term(lat, q, TermId::U1)?,
        eval_term(lat, q, TermId::U2)?,
        eval_term(lat, q, TermId::U3)?,
        eval_term(lat, q, TermId::U4)?,
    ])
}

pub fn eval_l<L: Lattice>(lat: &L, q: &Quintuple<L::Elem>) -> Result<L::Elem> {
    let [l1, l2, l3, l4] = l_list(lat, q)?;
    join_all(lat, &[&l1, &l2, &l3, &l4])
}

pub fn eval_u<L: Lattice>(lat: &L, q: &Quintuple<L::Elem>) -> Result<L::Elem> {
    let [u1, u2, u3, u4] = u_list(lat, q)?;
    meet_all(lat, &[&u1, &u2, &u3, &u4])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bound {
    L,
    U,
}

/// The four-term normal forms
/// `(a ^ x) v (b ^ z) v (a ^ b ^ y) v (x ^ y ^ z)` and
/// `(a v z) ^ (x v b) ^ (a v b v y) ^ (x v y v z)`.
///
/// They agree with `L` and `U` exactly on distributive lattices.
pub fn eval_distributive_closed<L: Lattice>(
    lat: &L,
    q: &Quintuple<L::Elem>,
    which: Bound,
) -> Result<L::Elem> {
    let Quintuple { x, a, y, b, z } = q;
    match which {
        Bound::L => {
            let t1 = meet_all(lat, &[a, x])?;
            let t2 = meet_all(lat, &[b, z])?;
            let t3 = meet_all(lat, &[a, b, y])?;
            let t4 = meet_all(lat, &[x, y, z])?;
            join_all(lat, &[&t1, &t2, &t3, &t4])
        }
        Bound::U => {
            let t1 = join_all(lat, &[a, z])?;
            let t2 = join_all(lat, &[x, b])?;
            let t3 = join_all(lat, &[a, b, y])?;
            let t4 = join_all(lat, &[x, y, z])?;
            meet_all(lat, &[&t1, &t2, &t3, &t4])
        }
    }
}

/// Closed form of `L = U` on a chain, with the number of the first matching
/// case. `None` only if no case applies, which cannot happen on a chain.
///
/// Cases 7 and 8 use `U5` and `L5` respectively; the crossed assignment
/// fails on e.g. `(0, 1, 2, 1, 0)`.
pub fn eval_chain_closed(q: &Quintuple<i64>) -> Option<(i64, u8)> {
    let &Quintuple { x, a, y, b, z } = q;
    let cases: [(bool, fn(i64, i64, i64, i64, i64) -> i64); 8] = [
        (a <= y && y <= b, |_, a, _, b, z| a.max(z.min(b))),
        (b <= y && y <= a, |x, a, _, b, _| a.min(x.max(b))),
        (x <= y && y <= z, |x, _, _, b, z| x.max(b.min(z))),
        (z <= y && y <= x, |x, a, _, _, z| x.min(a.max(z))),
        (a.max(b) <= y && y <= x.min(z), |_, _, y, _, _| y),
        (x.max(z) <= y && y <= a.min(b), |_, _, y, _, _| y),
        (a.max(x).max(b).max(z) <= y, |x, a, _, b, z| a.max(z).min(b.max(x))),
        (y <= a.min(x).min(b).min(z), |x, a, _, b, z| b.min(z).max(a.min(x))),
    ];
    cases
        .iter()
        .zip(1u8..)
        .find(|((hit, _), _)| *hit)
        .map(|((_, f), id)| (f(x, a, y, b, z), id))
}

/// Chain-valued wrapper checking that the quintuple lies in `chain`.
pub fn eval_chain_closed_in(chain: &Chain, q: &Quintuple<i64>) -> Result<Option<(i64, u8)>> {
    for e in q.as_refs() {
        if !chain.contains(e) {
            return Err(Error::NotAnElement(e.to_string()));
        }
    }
    Ok(eval_chain_closed(q))
}

/// `(x v y) ^ (y v z) ^ (z v x)`
pub fn median<L: Lattice>(lat: &L, x: &L::Elem, y: &L::Elem, z: &L::Elem) -> Result<L::Elem> {
    let xy = lat.join(x, y)?;
    let yz = lat.join(y, z)?;
    let zx = lat.join(z, x)?;
    meet_all(lat, &[&xy, &yz, &zx])
}

/// `(x ^ y) v (y ^ z) v (z ^ x)`, the dual median.
pub fn median_dual<L: Lattice>(lat: &L, x: &L::Elem, y: &L::Elem, z: &L::Elem) -> Result<L::Elem> {
    let xy = lat.meet(x, y)?;
    let yz = lat.meet(y, z)?;
    let zx = lat.meet(z, x)?;
    join_all(lat, &[&xy, &yz, &zx])
}

/// A permutation of the four outer slots `(x, a, b, z)`; `y` never moves.
///
/// Applying `s` moves the entry of slot `perm[i]` into slot `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    perm: [u8; 4],
}

pub const SLOT_NAMES: [char; 4] = ['x', 'a', 'b', 'z'];

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry { perm: [0, 1, 2, 3] };

    pub fn new(perm: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &p in &perm {
            if p > 3 || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::InvalidSpec(format!("{perm:?} is not a permutation of 4 slots")));
            }
        }
        Ok(Symmetry { perm })
    }

    /// The Klein four-group `{id, (x a)(b z), (x b)(a z), (x z)(a b)}`.
    pub fn klein() -> [Symmetry; 4] {
        [
            Symmetry::IDENTITY,
            Symmetry { perm: [1, 0, 3, 2] },
            Symmetry { perm: [2, 3, 0, 1] },
            Symmetry { perm: [3, 2, 1, 0] },
        ]
    }

    /// All 24 permutations, lexicographic.
    pub fn all() -> Vec<Symmetry> {
        let mut out = Vec::with_capacity(24);
        for p0 in 0..4u8 {
            for p1 in 0..4u8 {
                for p2 in 0..4u8 {
                    let Some(p3) = 6u8.checked_sub(p0 + p1 + p2) else {
                        continue;
                    };
                    if let Ok(s) = Symmetry::new([p0, p1, p2, p3]) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }

    pub fn perm(&self) -> [u8; 4] {
        self.perm
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Symmetry) -> Symmetry {
        Symmetry {
            perm: other.perm.map(|i| self.perm[i as usize]),
        }
    }

    pub fn apply<E: Clone>(&self, q: &Quintuple<E>) -> Quintuple<E> {
        let outer = [&q.x, &q.a, &q.b, &q.z];
        let [x, a, b, z] = self.perm.map(|i| outer[i as usize].clone());
        Quintuple::new(x, a, q.y.clone(), b, z)
    }

    /// The class of `self` modulo the Klein group, named by the unique
    /// coset member that fixes `z`.
    pub fn coset_label(&self) -> Vertex {
        let rep = Symmetry::klein()
            .iter()
            .map(|k| self.then(k))
            .find(|s| s.perm[3] == 3)
            .expect("every Klein coset has a member fixing z");
        Vertex::from_perm([rep.perm[0], rep.perm[1], rep.perm[2]])
            .expect("fixing z leaves a permutation of x, a, b")
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.perm.iter().map(|&i| SLOT_NAMES[i as usize]).collect();
        write!(f, "[{s}]")
    }
}

pub fn apply_symmetry<E: Clone>(q: &Quintuple<E>, s: &Symmetry) -> Quintuple<E> {
    s.apply(q)
}

/// A vertex of the hexad: an element of `S3` acting on the slots
/// `x = 1, a = 2, b = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Vertex {
    #[serde(rename = "e")]
    E,
    #[serde(rename = "(12)")]
    T12,
    #[serde(rename = "(13)")]
    T13,
    #[serde(rename = "(23)")]
    T23,
    #[serde(rename = "(123)")]
    C123,
    #[serde(rename = "(132)")]
    C132,
}

impl Vertex {
    pub const ALL: [Vertex; 6] = [
        Vertex::E,
        Vertex::T12,
        Vertex::T13,
        Vertex::T23,
        Vertex::C123,
        Vertex::C132,
    ];

    /// Slot action on `(x, a, b)`: entry `perm[i]` moves to slot `i`.
    pub fn perm(self) -> [u8; 3] {
        match self {
            Vertex::E => [0, 1, 2],
            Vertex::T12 => [1, 0, 2],
            Vertex::T13 => [2, 1, 0],
            Vertex::T23 => [0, 2, 1],
            Vertex::C123 => [2, 0, 1],
            Vertex::C132 => [1, 2, 0],
        }
    }

    pub fn from_perm(p: [u8; 3]) -> Option<Vertex> {
        Vertex::ALL.into_iter().find(|v| v.perm() == p)
    }

    pub fn symmetry(self) -> Symmetry {
        let [p0, p1, p2] = self.perm();
        Symmetry {
            perm: [p0, p1, p2, 3],
        }
    }

    /// `(23)` first, then `self`.
    pub fn opposite(self) -> Vertex {
        Vertex::T23.symmetry().then(&self.symmetry()).coset_label()
    }

    pub fn label(self) -> &'static str {
        match self {
            Vertex::E => "e",
            Vertex::T12 => "(12)",
            Vertex::T13 => "(13)",
            Vertex::T23 => "(23)",
            Vertex::C123 => "(123)",
            Vertex::C132 => "(132)",
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        Vertex::ALL
            .into_iter()
            .find(|v| v.label() == t || (t == "id" && *v == Vertex::E))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown hexad vertex {s:?}")))
    }
}
