//! Subspace lattices of `GF(p)^d`: meet is intersection, join is sum.
//!
//! Subspaces are stored in reduced row-echelon form, so structural equality
//! of [`SubspaceBasis`] values is equality of subspaces.

use std::fmt;

use crate::arithmetic::is_prime;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

pub const MAX_PRIME: u8 = 13;
pub const MAX_DIM: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceBasis {
    p: u8,
    d: u8,
    rank: u8,
    // rows beyond `rank` and columns beyond `d` are zero
    rows: [[u8; MAX_DIM]; MAX_DIM],
}

impl SubspaceBasis {
    pub fn zero(p: u8, d: u8) -> Self {
        SubspaceBasis {
            p,
            d,
            rank: 0,
            rows: [[0; MAX_DIM]; MAX_DIM],
        }
    }

    pub fn full(p: u8, d: u8) -> Self {
        let mut rows = [[0; MAX_DIM]; MAX_DIM];
        for (i, row) in rows.iter_mut().enumerate().take(d as usize) {
            row[i] = 1;
        }
        SubspaceBasis { p, d, rank: d, rows }
    }

    pub fn prime(&self) -> u8 {
        self.p
    }

    pub fn dim(&self) -> u8 {
        self.d
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.rows[..self.rank as usize]
            .iter()
            .map(move |r| &r[..self.d as usize])
    }
}

impl fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank == 0 {
            return write!(f, "0");
        }
        let rows: Vec<String> = self
            .rows()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(u8::to_string).collect();
                format!("({})", cells.join(","))
            })
            .collect();
        write!(f, "span[{}]", rows.join(","))
    }
}

fn inverse(a: u8, p: u8) -> u8 {
    // a^(p-2) mod p
    let (mut base, mut exp, mut acc) = (a as u32, p as u32 - 2, 1u32);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u32;
        }
        base = base * base % p as u32;
        exp >>= 1;
    }
    acc as u8
}

/// In-place RREF of `rows` restricted to the first `ncols` columns.
/// Returns the rank; the first `rank` rows hold the reduced basis.
fn rref<const W: usize>(rows: &mut [[u8; W]], ncols: usize, p: u8) -> usize {
    let pm = p as u16;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inverse(rows[rank][col], p) as u16;
        for c in 0..ncols {
            rows[rank][c] = (rows[rank][c] as u16 * inv % pm) as u8;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col] as u16;
                for c in 0..ncols {
                    let sub = factor * rows[rank][c] as u16 % pm;
                    rows[r][c] = ((rows[r][c] as u16 + pm - sub) % pm) as u8;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn check_field(p: u64, d: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > MAX_PRIME as u64 {
        return Err(Error::InvalidSpec(format!("field size {p} exceeds {MAX_PRIME}")));
    }
    if d > MAX_DIM {
        return Err(Error::InvalidSpec(format!("dimension {d} exceeds {MAX_DIM}")));
    }
    Ok(())
}

/// Canonical basis of the span of `generators` in `GF(p)^d`.
pub fn canonicalize(p: u64, d: usize, generators: &[Vec<u64>]) -> Result<SubspaceBasis> {
    check_field(p, d)?;
    let mut rows: Vec<[u8; MAX_DIM]> = Vec::with_capacity(generators.len());
    for g in generators {
        if g.len() != d {
            return Err(Error::InvalidSpec(format!(
                "vector of length {} in dimension {d}",
                g.len()
            )));
        }
        let mut row = [0u8; MAX_DIM];
        for (slot, &v) in row.iter_mut().zip(g) {
            *slot = (v % p) as u8;
        }
        rows.push(row);
    }
    Ok(from_rows(p as u8, d as u8, &mut rows))
}

fn from_rows(p: u8, d: u8, rows: &mut [[u8; MAX_DIM]]) -> SubspaceBasis {
    let rank = rref(rows, d as usize, p);
    let mut out = SubspaceBasis::zero(p, d);
    out.rank = rank as u8;
    out.rows[..rank].copy_from_slice(&rows[..rank]);
    out
}

fn same_space(u: &SubspaceBasis, v: &SubspaceBasis) -> Result<()> {
    if u.p != v.p || u.d != v.d {
        return Err(Error::LatticeMismatch {
            left: format!("GF({})^{}", u.p, u.d),
            right: format!("GF({})^{}", v.p, v.d),
        });
    }
    Ok(())
}

pub fn subspace_join(u: &SubspaceBasis, v: &SubspaceBasis) -> Result<SubspaceBasis> {
    same_space(u, v)?;
    let mut rows = [[0u8; MAX_DIM]; 2 * MAX_DIM];
    let (ru, rv) = (u.rank as usize, v.rank as usize);
    rows[..ru].copy_from_slice(&u.rows[..ru]);
    rows[ru..ru + rv].copy_from_slice(&v.rows[..rv]);
    Ok(from_rows(u.p, u.d, &mut rows[..ru + rv]))
}

/// Intersection via the Zassenhaus sum–intersection reduction: row-reduce
/// `[u | u ; v | 0]`; rows whose left half vanishes span `u ∩ v` on the right.
pub fn subspace_meet(u: &SubspaceBasis, v: &SubspaceBasis) -> Result<SubspaceBasis> {
    same_space(u, v)?;
    let d = u.d as usize;
    let (ru, rv) = (u.rank as usize, v.rank as usize);
    let mut rows = [[0u8; 2 * MAX_DIM]; 2 * MAX_DIM];
    for i in 0..ru {
        rows[i][..d].copy_from_slice(&u.rows[i][..d]);
        rows[i][d..2 * d].copy_from_slice(&u.rows[i][..d]);
    }
    for j in 0..rv {
        rows[ru + j][..d].copy_from_slice(&v.rows[j][..d]);
    }
    let n = ru + rv;
    let rank = rref(&mut rows[..n], 2 * d, u.p);
    let mut inter = [[0u8; MAX_DIM]; 2 * MAX_DIM];
    let mut k = 0;
    for row in &rows[..rank] {
        if row[..d].iter().all(|&c| c == 0) {
            inter[k][..d].copy_from_slice(&row[d..2 * d]);
            k += 1;
        }
    }
    Ok(from_rows(u.p, u.d, &mut inter[..k]))
}

/// Number of subspaces of `GF(p)^d` (sum of Gaussian binomials).
pub fn subspace_count(p: u64, d: usize) -> u64 {
    // g[k] = Gaussian binomial (d choose k)_p, by the q-Pascal rule
    let mut g = vec![1u64];
    for n in 1..=d {
        let mut next = vec![1u64; n + 1];
        for k in 1..n {
            next[k] = g[k - 1] + p.pow(k as u32) * g[k];
        }
        g = next;
    }
    g.iter().sum()
}

/// All subspaces of `GF(p)^d`, ordered by rank, then by RREF rows.
pub fn enumerate_subspaces(p: u64, d: usize, budget: u64) -> Result<Vec<SubspaceBasis>> {
    check_field(p, d)?;
    let needed = subspace_count(p, d);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let (p8, d8) = (p as u8, d as u8);
    let mut out = Vec::with_capacity(needed as usize);
    for mask in 0u32..(1 << d) {
        let pivots: Vec<usize> = (0..d).filter(|&c| mask >> c & 1 == 1).collect();
        // free positions: (row, col) right of the row's pivot, not a pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                ((pc + 1)..d)
                    .filter(|c| mask >> c & 1 == 0)
                    .map(move |c| (r, c))
            })
            .collect();
        let combos = p.pow(free.len() as u32);
        for mut code in 0..combos {
            let mut s = SubspaceBasis::zero(p8, d8);
            s.rank = pivots.len() as u8;
            for (r, &pc) in pivots.iter().enumerate() {
                s.rows[r][pc] = 1;
            }
            for &(r, c) in &free {
                s.rows[r][c] = (code % p) as u8;
                code /= p;
            }
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.rank.cmp(&b.rank).then(a.rows.cmp(&b.rows)));
    Ok(out)
}

/// The lattice of subspaces of `GF(p)^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grassmannian {
    p: u8,
    d: u8,
}

impl Grassmannian {
    pub fn new(p: u64, d: usize) -> Result<Self> {
        check_field(p, d)?;
        Ok(Grassmannian {
            p: p as u8,
            d: d as u8,
        })
    }

    pub fn prime(&self) -> u64 {
        self.p as u64
    }

    pub fn dim(&self) -> usize {
        self.d as usize
    }

    pub fn span(&self, generators: &[Vec<u64>]) -> Result<SubspaceBasis> {
        canonicalize(self.p as u64, self.d as usize, generators)
    }
}

impl Lattice for Grassmannian {
    type Elem = SubspaceBasis;

    fn meet(&self, u: &SubspaceBasis, v: &SubspaceBasis) -> Result<SubspaceBasis> {
        subspace_meet(u, v)
    }

    fn join(&self, u: &SubspaceBasis, v: &SubspaceBasis) -> Result<SubspaceBasis> {
        subspace_join(u, v)
    }

    fn bounds(&self) -> Option<(SubspaceBasis, SubspaceBasis)> {
        Some((SubspaceBasis::zero(self.p, self.d), SubspaceBasis::full(self.p, self.d)))
    }

    fn enumerate(&self) -> Result<Vec<SubspaceBasis>> {
        enumerate_subspaces(self.p as u64, self.d as usize, 1_000_000)
    }

    fn contains(&self, e: &SubspaceBasis) -> bool {
        e.p == self.p && e.d == self.d
    }

    fn name(&self) -> String {
        format!("gf:{}:{}", self.p, self.d)
    }
}
