//! Pointwise structure of `L` on power sets: the six regions cut out by a
//! triple `(a, y, b)`, their connectors, and the 32-row truth table.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, PowerSet, Quintuple};
use crate::products::ProductSpec;
use crate::quintary::{eval_l, eval_term, l_list, u_list, TermId, Vertex};
use crate::search::{self, Carrier, CheckOptions, CheckReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionLabel {
    True,
    False,
    Right,
    Left,
    Or,
    And,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 6] = [
        RegionLabel::True,
        RegionLabel::False,
        RegionLabel::Right,
        RegionLabel::Left,
        RegionLabel::Or,
        RegionLabel::And,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionLabel::True => "true",
            RegionLabel::False => "false",
            RegionLabel::Right => "right",
            RegionLabel::Left => "left",
            RegionLabel::Or => "or",
            RegionLabel::And => "and",
        }
    }

    pub fn connector(self) -> Connector {
        match self {
            RegionLabel::True => Connector::Const1,
            RegionLabel::False => Connector::Const0,
            RegionLabel::Right => Connector::Second,
            RegionLabel::Left => Connector::First,
            RegionLabel::Or => Connector::Or,
            RegionLabel::And => Connector::And,
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The six non-group semigroup laws on `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Connector {
    Const1,
    Const0,
    Second,
    First,
    Or,
    And,
}

impl Connector {
    pub const ALL: [Connector; 6] = [
        Connector::Const1,
        Connector::Const0,
        Connector::Second,
        Connector::First,
        Connector::Or,
        Connector::And,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Connector::Const1 => "const-1",
            Connector::Const0 => "const-0",
            Connector::Second => "second",
            Connector::First => "first",
            Connector::Or => "or",
            Connector::And => "and",
        }
    }
}

impl FromStr for Connector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Connector::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown connector {s:?}")))
    }
}

pub fn eval_connector(c: Connector, x: bool, z: bool) -> bool {
    match c {
        Connector::Const1 => true,
        Connector::Const0 => false,
        Connector::Second => z,
        Connector::First => x,
        Connector::Or => x || z,
        Connector::And => x && z,
    }
}

/// Region of a point from its memberships in `(a, y, b)`.
pub fn classify_point(in_a: bool, in_y: bool, in_b: bool) -> RegionLabel {
    match (in_a, in_y, in_b) {
        (true, true, true) => RegionLabel::True,
        (false, false, false) => RegionLabel::False,
        (false, _, true) => RegionLabel::Right,
        (true, _, false) => RegionLabel::Left,
        (true, false, true) => RegionLabel::Or,
        (false, true, false) => RegionLabel::And,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionPartition {
    pub universe: u32,
    pub labels: Vec<RegionLabel>,
}

impl RegionPartition {
    /// The points with the given label, as a set.
    pub fn region(&self, label: RegionLabel) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn render_text(&self) -> String {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{i}: {l}\n"))
            .collect()
    }
}

fn check_member(m: &PowerSet, sets: &[u64]) -> Result<()> {
    match sets.iter().find(|s| !m.contains(s)) {
        Some(s) => Err(Error::NotAnElement(format!("{s:#b}"))),
        None => Ok(()),
    }
}

#[inline]
fn bit(s: u64, i: u32) -> bool {
    s >> i & 1 == 1
}

pub fn partition(m: &PowerSet, a: u64, y: u64, b: u64) -> Result<RegionPartition> {
    check_member(m, &[a, y, b])?;
    let labels = (0..m.universe_size())
        .map(|i| classify_point(bit(a, i), bit(y, i), bit(b, i)))
        .collect();
    Ok(RegionPartition {
        universe: m.universe_size(),
        labels,
    })
}

/// `x • z` assembled point by point from the region connectors.
pub fn product_via_partition(m: &PowerSet, a: u64, y: u64, b: u64, x: u64, z: u64) -> Result<u64> {
    check_member(m, &[x, z])?;
    let p = partition(m, a, y, b)?;
    Ok(p.labels.iter().enumerate().fold(0, |acc, (i, l)| {
        let i = i as u32;
        if eval_connector(l.connector(), bit(x, i), bit(z, i)) {
            acc | 1 << i
        } else {
            acc
        }
    }))
}

/// Pointwise form of the ternary product `(xyz)_ab` from the `(a, b)` bits.
pub fn ternary_pointwise(in_a: bool, in_b: bool, x: bool, y: bool, z: bool) -> bool {
    match (in_a, in_b) {
        (false, false) => x && y && z,
        (true, true) => x || y || z,
        (false, true) => z,
        (true, false) => x,
    }
}

/// `(bottom, complement of top)` of a hexad product on a power set: the
/// points where the product is constantly 1, resp. constantly 0.
pub fn bottom_top(m: &PowerSet, vertex: Vertex, fixed: [u64; 3]) -> Result<(u64, u64)> {
    check_member(m, &fixed)?;
    let s = ProductSpec::new(*m, vertex, fixed);
    let (bottom, top) = s.bottom_top()?.expect("power sets are bounded");
    Ok((bottom, m.complement(top)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TruthRow {
    /// `(x, a, y, b, z)`
    pub bits: [u8; 5],
    pub l_list: [u8; 4],
    pub l: u8,
    pub u_list: [u8; 4],
    pub u: u8,
    pub l5: u8,
    pub u5: u8,
    pub region: RegionLabel,
}

impl TruthRow {
    pub fn of(bits: [u8; 5]) -> TruthRow {
        let two = PowerSet::new(1).expect("one point");
        let q = Quintuple::from_array(bits.map(u64::from));
        let eval = |t| eval_term(&two, &q, t).expect("no overflow on sets") as u8;
        let [_, a, y, b, _] = bits;
        TruthRow {
            bits,
            l_list: l_list(&two, &q).expect("sets").map(|v| v as u8),
            l: eval(TermId::L),
            u_list: u_list(&two, &q).expect("sets").map(|v| v as u8),
            u: eval(TermId::U),
            l5: eval(TermId::L5_3),
            u5: eval(TermId::U5_2),
            region: classify_point(a == 1, y == 1, b == 1),
        }
    }

    pub fn l23(&self) -> u8 {
        self.l_list[1] | self.l_list[2]
    }

    pub fn l14(&self) -> u8 {
        self.l_list[0] | self.l_list[3]
    }

    pub fn u14(&self) -> u8 {
        self.u_list[0] & self.u_list[3]
    }

    pub fn u23(&self) -> u8 {
        self.u_list[1] & self.u_list[2]
    }

    /// Value predicted by "in at least three of the five sets".
    pub fn majority(&self) -> u8 {
        (self.bits.iter().sum::<u8>() >= 3) as u8
    }
}

/// All 32 rows over the two-element lattice, grouped by region in the
/// order true, false, right, left, or, and; within a region ordered by
/// `(y, x, z)` and then `(a, b)`.
pub fn truth_table() -> Vec<TruthRow> {
    let mut rows: Vec<TruthRow> = (0..32u8)
        .map(|i| TruthRow::of(std::array::from_fn(|k| i >> (4 - k) & 1)))
        .collect();
    rows.sort_by_key(|r| {
        let [x, a, y, b, z] = r.bits;
        (r.region, y, x, z, a, b)
    });
    rows
}

const CSV_HEADER: &str = "x,a,y,b,z,L1,L2,L3,L4,L,U1,U2,U3,U4,U,L5,U5,region";

pub fn render_truth_csv(rows: &[TruthRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let cells: Vec<String> = r
            .bits
            .iter()
            .chain(&r.l_list)
            .chain(std::iter::once(&r.l))
            .chain(&r.u_list)
            .chain([&r.u, &r.l5, &r.u5])
            .map(u8::to_string)
            .collect();
        let _ = writeln!(out, "{},{}", cells.join(","), r.region);
    }
    out
}

pub fn render_truth_text(rows: &[TruthRow]) -> String {
    let list = |v: &[u8; 4]| format!("({}, {}, {}, {})", v[0], v[1], v[2], v[3]);
    let mut out = String::new();
    let mut current = None;
    for r in rows {
        if current != Some(r.region) {
            if current.is_some() {
                out.push('\n');
            }
            current = Some(r.region);
            let _ = writeln!(out, "region {}", r.region);
            let _ = writeln!(out, "x a y b z  list L        L  list U        U  L5 U5");
        }
        let [x, a, y, b, z] = r.bits;
        let _ = writeln!(
            out,
            "{x} {a} {y} {b} {z}  {}  {}  {}  {}  {}  {}",
            list(&r.l_list),
            r.l,
            list(&r.u_list),
            r.u,
            r.l5,
            r.u5
        );
    }
    out
}

/// Which periodicity statement to test for the principal product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PeriodicityForm {
    /// `(x v (b ^ y)) • z = x • z` and `x • (z v (a ^ y)) = x • z`.
    Corrected,
    /// `(x v (a ^ y)) • z = x • z` and `x • (z v (b ^ y)) = x • z`.
    Literal,
}

pub fn periodicity_holds(
    m: &PowerSet,
    form: PeriodicityForm,
    [x, a, y, b, z]: [u64; 5],
) -> Result<bool> {
    let s = ProductSpec::principal(*m, a, y, b);
    let (shift_x, shift_z) = match form {
        PeriodicityForm::Corrected => (b & y, a & y),
        PeriodicityForm::Literal => (a & y, b & y),
    };
    let v = s.eval(&x, &z)?;
    Ok(s.eval(&(x | shift_x), &z)? == v && s.eval(&x, &(z | shift_z))? == v)
}

/// Sweeps `(x, a, y, b, z)` over the power set, exhaustive within budget.
pub fn check_periodicity(
    m: &PowerSet,
    form: PeriodicityForm,
    opts: &CheckOptions,
) -> Result<CheckReport<[u64; 5]>> {
    let full = m.full();
    let carrier = Carrier::from_fn(full + 1, |i| i);
    search::sweep::<5, _, _, _>(&carrier, opts, |q| {
        Ok((!periodicity_holds(m, form, q)?).then_some(q))
    })
}

/// Pointwise decomposition agrees with `L` on one instance.
pub fn decomposition_agrees(m: &PowerSet, [x, a, y, b, z]: [u64; 5]) -> Result<bool> {
    let direct = eval_l(m, &Quintuple::new(x, a, y, b, z))?;
    Ok(product_via_partition(m, a, y, b, x, z)? == direct)
}
