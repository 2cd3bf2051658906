use std::path::Path;

use super::{Arithmetic, Chain, DivisorInterval, FinCof, FinCofSet, FiniteTable, Lattice, PowerSet};
use crate::error::{Error, Result};
use crate::grassmannian::{Grassmannian, SubspaceBasis};

/// A lattice chosen at run time. Dispatches to the concrete backends.
#[derive(Debug, Clone, PartialEq)]
pub enum LatticeDescriptor {
    Arithmetic(Arithmetic),
    Chain(Chain),
    PowerSet(PowerSet),
    FiniteTable(FiniteTable),
    DivisorInterval(DivisorInterval),
    FinCof(FinCof),
    Grassmannian(Grassmannian),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Natural(u64),
    Integer(i64),
    Set(u64),
    Index(usize),
    Divisor(u64),
    FinCof(FinCofSet),
    Subspace(SubspaceBasis),
}

impl LatticeDescriptor {
    /// Parses a lattice specification.
    ///
    /// Accepted forms: `arithmetic`, `chain`, `chain:N`, `M3`, `N5`,
    /// `powerset:N`, `divisors:K:N` (also `divisor-interval K=.. N=..`),
    /// `fincof`, `gf:P:D` (also `gf(P)^D`), or a path to a JSON table file.
    pub fn parse(spec: &str) -> Result<Self> {
        let s = spec.trim();
        let bad = || Error::InvalidSpec(format!("unrecognised lattice `{spec}`"));
        let num = |t: &str| -> Result<u64> {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidSpec(format!("bad number `{t}` in `{spec}`")))
        };
        let lower = s.to_ascii_lowercase();
        let parts: Vec<&str> = lower.split(':').collect();
        let d = match parts.as_slice() {
            ["arithmetic"] | ["natural"] => LatticeDescriptor::Arithmetic(Arithmetic),
            ["chain"] => LatticeDescriptor::Chain(Chain::unbounded()),
            ["chain", n] => LatticeDescriptor::Chain(Chain::of_len(num(n)? as u32)?),
            ["m3"] => LatticeDescriptor::FiniteTable(FiniteTable::m3()),
            ["n5"] => LatticeDescriptor::FiniteTable(FiniteTable::n5()),
            ["powerset", n] => LatticeDescriptor::PowerSet(PowerSet::new(num(n)? as u32)?),
            ["divisors", k, n] => {
                LatticeDescriptor::DivisorInterval(DivisorInterval::new(num(k)?, num(n)?)?)
            }
            ["fincof"] => LatticeDescriptor::FinCof(FinCof),
            ["gf", p, d] => LatticeDescriptor::Grassmannian(Grassmannian::new(num(p)?, num(d)? as usize)?),
            _ => {
                if let Some(rest) = lower.strip_prefix("gf(") {
                    let (p, d) = rest.split_once(")^").ok_or_else(bad)?;
                    LatticeDescriptor::Grassmannian(Grassmannian::new(num(p)?, num(d)? as usize)?)
                } else if let Some(rest) = lower.strip_prefix("divisor-interval") {
                    let mut k = None;
                    let mut n = None;
                    for tok in rest.split_whitespace() {
                        match tok.split_once('=') {
                            Some(("k", v)) => k = Some(num(v)?),
                            Some(("n", v)) => n = Some(num(v)?),
                            _ => return Err(bad()),
                        }
                    }
                    let (k, n) = k.zip(n).ok_or_else(bad)?;
                    LatticeDescriptor::DivisorInterval(DivisorInterval::new(k, n)?)
                } else if Path::new(s).is_file() {
                    let text = std::fs::read_to_string(s)
                        .map_err(|e| Error::InvalidSpec(format!("{s}: {e}")))?;
                    LatticeDescriptor::FiniteTable(FiniteTable::from_json(&text)?)
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(d)
    }

    pub fn is_finite(&self) -> bool {
        match self {
            LatticeDescriptor::Arithmetic(_) | LatticeDescriptor::FinCof(_) => false,
            LatticeDescriptor::Chain(c) => c.range().is_some(),
            _ => true,
        }
    }

    /// Parses an element written the way [`Lattice::format`] prints it
    /// (numbers, `{0,2}` sets, element names). Subspaces and cofinite sets
    /// are not parseable.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        let bad = || Error::NotAnElement(format!("`{t}` in {}", self.name()));
        let e = match self {
            LatticeDescriptor::Arithmetic(_) => Element::Natural(t.parse().map_err(|_| bad())?),
            LatticeDescriptor::Chain(_) => Element::Integer(t.parse().map_err(|_| bad())?),
            LatticeDescriptor::DivisorInterval(_) => Element::Divisor(t.parse().map_err(|_| bad())?),
            LatticeDescriptor::PowerSet(p) => {
                let inner = t.trim_start_matches('{').trim_end_matches('}');
                let pts = inner
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                Element::Set(p.set(pts)?)
            }
            LatticeDescriptor::FiniteTable(ft) => Element::Index(ft.index_of(t).ok_or_else(bad)?),
            LatticeDescriptor::FinCof(_) => {
                let inner = t.trim_start_matches('{').trim_end_matches('}');
                let items = inner
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.trim().parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                Element::FinCof(FinCofSet::finite(items)?)
            }
            LatticeDescriptor::Grassmannian(_) => return Err(bad()),
        };
        if !self.contains(&e) {
            return Err(bad());
        }
        Ok(e)
    }
}

fn mismatch(lat: &LatticeDescriptor, u: &Element, v: &Element) -> Error {
    Error::LatticeMismatch {
        left: format!("{u:?}"),
        right: format!("{v:?} in {}", lat.name()),
    }
}

macro_rules! dispatch2 {
    ($self:ident, $u:ident, $v:ident, $method:ident) => {
        match ($self, $u, $v) {
            (LatticeDescriptor::Arithmetic(l), Element::Natural(a), Element::Natural(b)) => {
                l.$method(a, b).map(Element::Natural)
            }
            (LatticeDescriptor::Chain(l), Element::Integer(a), Element::Integer(b)) => {
                l.$method(a, b).map(Element::Integer)
            }
            (LatticeDescriptor::PowerSet(l), Element::Set(a), Element::Set(b)) => {
                l.$method(a, b).map(Element::Set)
            }
            (LatticeDescriptor::FiniteTable(l), Element::Index(a), Element::Index(b)) => {
                l.$method(a, b).map(Element::Index)
            }
            (LatticeDescriptor::DivisorInterval(l), Element::Divisor(a), Element::Divisor(b)) => {
                l.$method(a, b).map(Element::Divisor)
            }
            (LatticeDescriptor::FinCof(l), Element::FinCof(a), Element::FinCof(b)) => {
                l.$method(a, b).map(Element::FinCof)
            }
            (LatticeDescriptor::Grassmannian(l), Element::Subspace(a), Element::Subspace(b)) => {
                l.$method(a, b).map(Element::Subspace)
            }
            _ => Err(mismatch($self, $u, $v)),
        }
    };
}

macro_rules! lift {
    ($self:ident, $l:ident => $body:expr) => {
        match $self {
            LatticeDescriptor::Arithmetic($l) => $body.map(|v| v.into_iter().map(Element::Natural).collect()),
            LatticeDescriptor::Chain($l) => $body.map(|v| v.into_iter().map(Element::Integer).collect()),
            LatticeDescriptor::PowerSet($l) => $body.map(|v| v.into_iter().map(Element::Set).collect()),
            LatticeDescriptor::FiniteTable($l) => $body.map(|v| v.into_iter().map(Element::Index).collect()),
            LatticeDescriptor::DivisorInterval($l) => {
                $body.map(|v| v.into_iter().map(Element::Divisor).collect())
            }
            LatticeDescriptor::FinCof($l) => $body.map(|v| v.into_iter().map(Element::FinCof).collect()),
            LatticeDescriptor::Grassmannian($l) => {
                $body.map(|v| v.into_iter().map(Element::Subspace).collect())
            }
        }
    };
}

impl Lattice for LatticeDescriptor {
    type Elem = Element;

    fn meet(&self, u: &Element, v: &Element) -> Result<Element> {
        dispatch2!(self, u, v, meet)
    }

    fn join(&self, u: &Element, v: &Element) -> Result<Element> {
        dispatch2!(self, u, v, join)
    }

    fn leq(&self, u: &Element, v: &Element) -> Result<bool> {
        match (self, u, v) {
            (LatticeDescriptor::Arithmetic(l), Element::Natural(a), Element::Natural(b)) => l.leq(a, b),
            (LatticeDescriptor::Chain(l), Element::Integer(a), Element::Integer(b)) => l.leq(a, b),
            (LatticeDescriptor::PowerSet(l), Element::Set(a), Element::Set(b)) => l.leq(a, b),
            (LatticeDescriptor::DivisorInterval(l), Element::Divisor(a), Element::Divisor(b)) => l.leq(a, b),
            _ => Ok(self.join(u, v)? == *v),
        }
    }

    fn bounds(&self) -> Option<(Element, Element)> {
        match self {
            LatticeDescriptor::Arithmetic(l) => l.bounds().map(|(a, b)| (Element::Natural(a), Element::Natural(b))),
            LatticeDescriptor::Chain(l) => l.bounds().map(|(a, b)| (Element::Integer(a), Element::Integer(b))),
            LatticeDescriptor::PowerSet(l) => l.bounds().map(|(a, b)| (Element::Set(a), Element::Set(b))),
            LatticeDescriptor::FiniteTable(l) => l.bounds().map(|(a, b)| (Element::Index(a), Element::Index(b))),
            LatticeDescriptor::DivisorInterval(l) => {
                l.bounds().map(|(a, b)| (Element::Divisor(a), Element::Divisor(b)))
            }
            LatticeDescriptor::FinCof(l) => l.bounds().map(|(a, b)| (Element::FinCof(a), Element::FinCof(b))),
            LatticeDescriptor::Grassmannian(l) => {
                l.bounds().map(|(a, b)| (Element::Subspace(a), Element::Subspace(b)))
            }
        }
    }

    fn enumerate(&self) -> Result<Vec<Element>> {
        lift!(self, l => l.enumerate())
    }

    fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (LatticeDescriptor::Arithmetic(l), Element::Natural(a)) => l.contains(a),
            (LatticeDescriptor::Chain(l), Element::Integer(a)) => l.contains(a),
            (LatticeDescriptor::PowerSet(l), Element::Set(a)) => l.contains(a),
            (LatticeDescriptor::FiniteTable(l), Element::Index(a)) => l.contains(a),
            (LatticeDescriptor::DivisorInterval(l), Element::Divisor(a)) => l.contains(a),
            (LatticeDescriptor::FinCof(l), Element::FinCof(a)) => l.contains(a),
            (LatticeDescriptor::Grassmannian(l), Element::Subspace(a)) => l.contains(a),
            _ => false,
        }
    }

    fn name(&self) -> String {
        match self {
            LatticeDescriptor::Arithmetic(l) => l.name(),
            LatticeDescriptor::Chain(l) => l.name(),
            LatticeDescriptor::PowerSet(l) => l.name(),
            LatticeDescriptor::FiniteTable(l) => l.name(),
            LatticeDescriptor::DivisorInterval(l) => l.name(),
            LatticeDescriptor::FinCof(l) => l.name(),
            LatticeDescriptor::Grassmannian(l) => l.name(),
        }
    }

    fn format(&self, e: &Element) -> String {
        match (self, e) {
            (LatticeDescriptor::Arithmetic(l), Element::Natural(a)) => l.format(a),
            (LatticeDescriptor::Chain(l), Element::Integer(a)) => l.format(a),
            (LatticeDescriptor::PowerSet(l), Element::Set(a)) => l.format(a),
            (LatticeDescriptor::FiniteTable(l), Element::Index(a)) => l.format(a),
            (LatticeDescriptor::DivisorInterval(l), Element::Divisor(a)) => l.format(a),
            (LatticeDescriptor::FinCof(l), Element::FinCof(a)) => l.format(a),
            (LatticeDescriptor::Grassmannian(l), Element::Subspace(a)) => l.format(a),
            _ => format!("{e:?}"),
        }
    }
}
