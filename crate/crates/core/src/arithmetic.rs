//! The gcd/lcm semigroups on the non-negative integers.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{checked_lcm, gcd, Arithmetic, FinCofSet, Quintuple};
use crate::products::ProductSpec;
use crate::quintary::{eval_l, eval_term, TermId, Vertex};
use crate::search::{self, Carrier, CheckOptions, CheckReport};

/// Prime factorization by trial division, primes ascending. `n >= 1`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Divisors of `n`, ascending. Empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut divs = vec![1u64];
    for (p, k) in factorize(n) {
        let base = divs.clone();
        let mut pk = 1;
        for _ in 0..k {
            pk *= p;
            divs.extend(base.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// `1` or `p^k` with `p` prime and `k >= 1`.
pub fn is_prime_power_or_one(n: u64) -> bool {
    n == 1 || (n >= 2 && factorize(n).len() == 1)
}

/// `v_p(x)`; `v_p(0)` is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    /// As a chain element, infinity mapped to `i64::MAX`.
    pub fn as_chain(self) -> i64 {
        match self {
            Valuation::Finite(k) => k as i64,
            Valuation::Infinite => i64::MAX,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(k) => write!(f, "{k}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

pub fn valuation(p: u64, x: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x == 0 {
        return Ok(Valuation::Infinite);
    }
    let (mut x, mut k) = (x, 0);
    while x % p == 0 {
        x /= p;
        k += 1;
    }
    Ok(Valuation::Finite(k))
}

/// `n -> { m prime power or 1 : m | n }`, with `0 -> all prime powers`.
pub fn lambda_embed(x: u64) -> FinCofSet {
    if x == 0 {
        return FinCofSet::everything();
    }
    let members = std::iter::once(1).chain(factorize(x).into_iter().flat_map(|(p, k)| {
        (1..=k).map(move |i| p.pow(i))
    }));
    FinCofSet::finite(members).expect("prime powers are members")
}

/// `x •_{a,y,b} z = L(x, a, y, b, z)`.
#[inline]
pub fn product(a: u64, y: u64, b: u64, x: u64, z: u64) -> Result<u64> {
    eval_l(&Arithmetic, &Quintuple::new(x, a, y, b, z))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeriodData {
    /// `lcm(y, b)`, period in `x`.
    pub n: u64,
    /// `lcm(y, a)`, period in `z`.
    pub m: u64,
    /// `lcm(a, y, b)`, square period and `0 • 0`.
    #[serde(rename = "N")]
    pub big_n: u64,
    /// `gcd(a, y, b)`, base frequency and `1 • 1`.
    #[serde(rename = "K")]
    pub k: u64,
}

pub fn periods(a: u64, y: u64, b: u64) -> Result<PeriodData> {
    Ok(PeriodData {
        n: checked_lcm(y, b)?,
        m: checked_lcm(y, a)?,
        big_n: checked_lcm(checked_lcm(a, y)?, b)?,
        k: gcd(gcd(a, y), b),
    })
}

/// Closed forms for triples with a zero entry.
pub fn degenerate_eval(a: u64, y: u64, b: u64, x: u64, z: u64) -> Result<u64> {
    let term = match (a, y, b) {
        (_, 0, _) => TermId::L5_3,
        (0, _, _) => TermId::L2,
        (_, _, 0) => TermId::L3,
        _ => {
            return Err(Error::Precondition(format!(
                "triple ({a},{y},{b}) has no zero entry"
            )))
        }
    };
    eval_term(&Arithmetic, &Quintuple::new(x, a, y, b, z), term)
}

/// Subscripts `(b', y', a')` of the conjugate product, with `d' = KN/d`.
pub fn conjugate_triple(a: u64, y: u64, b: u64) -> Result<(u64, u64, u64)> {
    if a == 0 || y == 0 || b == 0 {
        return Err(Error::Precondition("conjugation needs a, y, b >= 1".into()));
    }
    let p = periods(a, y, b)?;
    let kn = kn(&p)?;
    Ok((kn / b, kn / y, kn / a))
}

fn kn(p: &PeriodData) -> Result<u64> {
    p.k.checked_mul(p.big_n).ok_or(Error::Overflow {
        op: "mul",
        lhs: p.k,
        rhs: p.big_n,
    })
}

/// `d -> KN/d` on the divisors of `kn`.
pub fn gamma(kn: u64, d: u64) -> Result<u64> {
    if d == 0 || kn % d != 0 {
        return Err(Error::NotDivisor(d, kn));
    }
    Ok(kn / d)
}

/// `gamma(u • v) = gamma(u) •' gamma(v)` for all divisors `u, v` of `KN`,
/// and `gamma` maps `[K, N]` onto itself.
pub fn check_conjugation_iso(
    a: u64,
    y: u64,
    b: u64,
    opts: &CheckOptions,
) -> Result<CheckReport<(u64, u64)>> {
    let (ca, cy, cb) = conjugate_triple(a, y, b)?;
    let p = periods(a, y, b)?;
    let kn = kn(&p)?;
    let divs = divisors(kn);
    let carrier = Carrier::listed(divs.clone());
    let iso = search::exhaustive::<2, _, _, _>(&carrier, opts.exec, |[u, v]| {
        let lhs = gamma(kn, product(a, y, b, u, v)?)?;
        let rhs = product(ca, cy, cb, gamma(kn, u)?, gamma(kn, v)?)?;
        Ok((lhs != rhs).then_some((u, v)))
    })?;
    let inner: Vec<u64> = divs.into_iter().filter(|d| d % p.k == 0 && p.big_n % d == 0).collect();
    let restricted = search::exhaustive::<1, _, _, _>(&Carrier::listed(inner), opts.exec, |[d]| {
        let g = gamma(kn, d)?;
        Ok((g % p.k != 0 || p.big_n % g != 0).then_some((d, g)))
    })?;
    Ok(search::merge_reports(vec![iso, restricted]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum TableKind {
    Window,
    Residues { modulus: u64 },
    Divisors { of: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCarrier {
    pub rows: Vec<u64>,
    pub cols: Vec<u64>,
}

/// Multiplication table of one hexad product over integers: rows index the
/// first argument, columns the second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyTable {
    /// `(f1, y, f2)`; `(a, y, b)` for the principal product.
    pub triple: [u64; 3],
    pub vertex: Vertex,
    #[serde(flatten)]
    pub kind: TableKind,
    pub carrier: TableCarrier,
    pub values: Vec<Vec<u64>>,
}

pub const SCHEMA_VERSION: u32 = 1;

impl CayleyTable {
    fn spec(&self) -> ProductSpec<Arithmetic> {
        let [f1, y, f2] = self.triple;
        ProductSpec::new(Arithmetic, self.vertex, [f1, y, f2])
    }

    pub fn rows(&self) -> &[u64] {
        &self.carrier.rows
    }

    pub fn cols(&self) -> &[u64] {
        &self.carrier.cols
    }

    pub fn get(&self, row: u64, col: u64) -> Option<u64> {
        let i = self.carrier.rows.iter().position(|&r| r == row)?;
        let j = self.carrier.cols.iter().position(|&c| c == col)?;
        Some(self.values[i][j])
    }

    /// Aligned grid; the corner names the two varying slots.
    pub fn render_text(&self) -> String {
        let (r, c) = self.spec().varying_names();
        let corner = format!("{r}\\{c}");
        let width = self
            .values
            .iter()
            .flatten()
            .chain(self.carrier.rows.iter())
            .chain(self.carrier.cols.iter())
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(corner.len());
        let mut out = String::new();
        let _ = write!(out, "{corner:<width$}");
        for c in &self.carrier.cols {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
        for (row, vals) in self.carrier.rows.iter().zip(&self.values) {
            let _ = write!(out, "{row:<width$}");
            for v in vals {
                let _ = write!(out, " {v:>width$}");
            }
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let (r, c) = self.spec().varying_names();
        let mut out = format!("{r}\\{c}");
        for col in &self.carrier.cols {
            let _ = write!(out, ",{col}");
        }
        out.push('\n');
        for (row, vals) in self.carrier.rows.iter().zip(&self.values) {
            let _ = write!(out, "{row}");
            for v in vals {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            #[serde(rename = "schemaVersion")]
            schema_version: u32,
            #[serde(flatten)]
            table: &'a CayleyTable,
        }
        serde_json::to_string_pretty(&Doc {
            schema_version: SCHEMA_VERSION,
            table: self,
        })
        .expect("tables serialize")
    }

    /// Index of a product value in the square carrier, reducing mod `N`
    /// for residue tables.
    fn locate(&self, v: u64) -> Option<usize> {
        let v = match self.kind {
            TableKind::Residues { modulus } => v % modulus,
            _ => v,
        };
        self.carrier.rows.iter().position(|&r| r == v)
    }

    fn square(&self) -> Result<()> {
        if self.carrier.rows != self.carrier.cols {
            return Err(Error::Precondition("law checks need a square table".into()));
        }
        Ok(())
    }

    /// First `(u, v)` whose product leaves the carrier.
    pub fn check_closed(&self) -> Result<CheckReport<(u64, u64)>> {
        self.square()?;
        let n = self.carrier.rows.len() as u64;
        let carrier = Carrier::window(0, n.saturating_sub(1));
        search::exhaustive::<2, _, _, _>(&carrier, search::Exec::Sequential, |[i, j]| {
            let v = self.values[i as usize][j as usize];
            Ok(self
                .locate(v)
                .is_none()
                .then_some((self.carrier.rows[i as usize], self.carrier.rows[j as usize])))
        })
    }

    fn mul(&self, i: usize, j: usize) -> Result<usize> {
        let v = self.values[i][j];
        self.locate(v)
            .ok_or_else(|| Error::Precondition(format!("table not closed: value {v}")))
    }

    /// `(u v) w = u (v w)` over the carrier, through the table.
    pub fn check_associative(&self, opts: &CheckOptions) -> Result<CheckReport<(u64, u64, u64)>> {
        self.square()?;
        let n = self.carrier.rows.len() as u64;
        let idx = Carrier::window(0, n.saturating_sub(1));
        let names = &self.carrier.rows;
        search::exhaustive::<3, _, _, _>(&idx, opts.exec, |[u, v, w]| {
            let (u, v, w) = (u as usize, v as usize, w as usize);
            let lhs = self.mul(self.mul(u, v)?, w)?;
            let rhs = self.mul(u, self.mul(v, w)?)?;
            Ok((lhs != rhs).then_some((names[u], names[v], names[w])))
        })
    }

    /// `(u u) v = u v = (u v) v` over the carrier.
    pub fn check_weak_band(&self, opts: &CheckOptions) -> Result<CheckReport<(u64, u64)>> {
        self.square()?;
        let n = self.carrier.rows.len() as u64;
        let idx = Carrier::window(0, n.saturating_sub(1));
        let names = &self.carrier.rows;
        search::exhaustive::<2, _, _, _>(&idx, opts.exec, |[u, v]| {
            let (u, v) = (u as usize, v as usize);
            let uv = self.mul(u, v)?;
            let ok = self.mul(self.mul(u, u)?, v)? == uv && self.mul(uv, v)? == uv;
            Ok((!ok).then_some((names[u], names[v])))
        })
    }
}

fn tabulate(
    spec: &ProductSpec<Arithmetic>,
    kind: TableKind,
    rows: Vec<u64>,
    cols: Vec<u64>,
) -> Result<CayleyTable> {
    let row = |&r: &u64| cols.iter().map(|&c| spec.eval(&r, &c)).collect::<Result<Vec<_>>>();
    #[cfg(feature = "parallel")]
    let values = {
        use rayon::prelude::*;
        rows.par_iter().map(row).collect::<Result<Vec<_>>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let values = rows.iter().map(row).collect::<Result<Vec<_>>>()?;
    let [f1, y, f2] = spec.fixed().clone();
    Ok(CayleyTable {
        triple: [f1, y, f2],
        vertex: spec.vertex(),
        kind,
        carrier: TableCarrier { rows, cols },
        values,
    })
}

/// Rows are values of `x`, columns values of `z`.
pub fn build_table(a: u64, y: u64, b: u64, rows: &[u64], cols: &[u64]) -> Result<CayleyTable> {
    build_vertex_table(Vertex::E, [a, y, b], rows, cols)
}

/// Table of any hexad vertex with fixed data `(f1, y, f2)`.
pub fn build_vertex_table(
    vertex: Vertex,
    fixed: [u64; 3],
    rows: &[u64],
    cols: &[u64],
) -> Result<CayleyTable> {
    let spec = ProductSpec::new(Arithmetic, vertex, fixed);
    tabulate(&spec, TableKind::Window, rows.to_vec(), cols.to_vec())
}

/// The product on `Z/NZ`, values stored unreduced. Fails if the `(n, m)`
/// periodicity that makes it well defined does not hold.
pub fn quotient_table(a: u64, y: u64, b: u64) -> Result<CayleyTable> {
    let p = periods(a, y, b)?;
    if p.big_n == 0 {
        return Err(Error::Precondition(format!(
            "triple ({a},{y},{b}) has N = 0, no quotient exists"
        )));
    }
    let carrier: Vec<u64> = (0..p.big_n).collect();
    let spec = ProductSpec::new(Arithmetic, Vertex::E, [a, y, b]);
    let t = tabulate(
        &spec,
        TableKind::Residues { modulus: p.big_n },
        carrier.clone(),
        carrier,
    )?;
    for x in 0..p.big_n {
        for z in 0..p.big_n {
            let v = t.values[x as usize][z as usize];
            if product(a, y, b, x + p.n, z)? != v || product(a, y, b, x, z + p.m)? != v {
                return Err(Error::Precondition(format!(
                    "representatives of ({x},{z}) disagree"
                )));
            }
        }
    }
    Ok(t)
}

/// The product restricted to the divisors of `d`, ascending.
pub fn divisor_table(a: u64, y: u64, b: u64, d: u64) -> Result<CayleyTable> {
    if d == 0 {
        return Err(Error::Precondition("divisor table of 0".into()));
    }
    let divs = divisors(d);
    let spec = ProductSpec::new(Arithmetic, Vertex::E, [a, y, b]);
    tabulate(&spec, TableKind::Divisors { of: d }, divs.clone(), divs)
}

/// Least row and column periods, scanned over divisors of `n` and `m`
/// on the window `[0, N)^2`.
pub fn effective_periods(a: u64, y: u64, b: u64) -> Result<(u64, u64)> {
    let p = periods(a, y, b)?;
    if p.big_n == 0 {
        return Err(Error::Precondition("effective periods need N != 0".into()));
    }
    let big_n = p.big_n;
    let table = |x: u64, z: u64| product(a, y, b, x, z);
    let mut px = p.n;
    for d in divisors(p.n) {
        if rows_agree(big_n, |x, z| Ok(table(x + d, z)? == table(x, z)?))? {
            px = d;
            break;
        }
    }
    let mut pz = p.m;
    for d in divisors(p.m) {
        if rows_agree(big_n, |x, z| Ok(table(x, z + d)? == table(x, z)?))? {
            pz = d;
            break;
        }
    }
    Ok((px, pz))
}

fn rows_agree<F: Fn(u64, u64) -> Result<bool>>(w: u64, same: F) -> Result<bool> {
    for x in 0..w {
        for z in 0..w {
            if !same(x, z)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `x ≡ x' (mod n)` and `z ≡ z' (mod m)` give equal products on
/// `[0, window)^2`.
pub fn check_periodicity(
    a: u64,
    y: u64,
    b: u64,
    window: u64,
    opts: &CheckOptions,
) -> Result<CheckReport<(u64, u64)>> {
    let p = periods(a, y, b)?;
    if p.big_n == 0 {
        return Err(Error::Precondition("periodicity needs N != 0".into()));
    }
    let carrier = Carrier::window(0, window.saturating_sub(1));
    search::exhaustive::<2, _, _, _>(&carrier, opts.exec, |[x, z]| {
        let v = product(a, y, b, x, z)?;
        let ok = product(a, y, b, x + p.n, z)? == v && product(a, y, b, x, z + p.m)? == v;
        Ok((!ok).then_some((x, z)))
    })
}

/// `[0•0, 0•1, 1•0, 1•1]`, which should be `[N, b, a, K]`.
pub fn corners(a: u64, y: u64, b: u64) -> Result<[u64; 4]> {
    Ok([
        product(a, y, b, 0, 0)?,
        product(a, y, b, 0, 1)?,
        product(a, y, b, 1, 0)?,
        product(a, y, b, 1, 1)?,
    ])
}

/// `K | x•z` and `x•z | N` on the corners and on `samples` seeded random
/// pairs from `[0, 10^6]`.
pub fn range_check(
    a: u64,
    y: u64,
    b: u64,
    samples: u64,
    seed: u64,
) -> Result<CheckReport<(u64, u64, u64)>> {
    let p = periods(a, y, b)?;
    if p.big_n == 0 {
        return Err(Error::Precondition("range check needs N != 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = [(0, 0), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .chain((0..samples).map(|_| (rng.gen_range(0..=1_000_000), rng.gen_range(0..=1_000_000))));
    let mut evaluations = 0;
    for (x, z) in pairs {
        evaluations += 1;
        let v = product(a, y, b, x, z)?;
        if v % p.k != 0 || p.big_n % v.max(1) != 0 || v == 0 {
            return Ok(CheckReport {
                verdict: search::Verdict::Fails,
                mode: search::Mode::Sampled {
                    seed,
                    count: samples,
                },
                evaluations,
                counterexample: Some((x, z, v)),
            });
        }
    }
    Ok(CheckReport {
        verdict: search::Verdict::Holds,
        mode: search::Mode::Sampled {
            seed,
            count: samples,
        },
        evaluations,
        counterexample: None,
    })
}
