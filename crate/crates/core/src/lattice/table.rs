use serde::{Deserialize, Serialize};

use super::Lattice;
use crate::error::{Error, Result};

/// A finite lattice given by explicit meet and join tables over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteTable {
    #[serde(rename = "elements")]
    names: Vec<String>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl FiniteTable {
    /// Validates the tables exhaustively: shape, range, commutativity,
    /// associativity, idempotence and both absorption laws.
    pub fn new(names: Vec<String>, meet: Vec<Vec<usize>>, join: Vec<Vec<usize>>) -> Result<Self> {
        let t = FiniteTable { names, meet, join };
        t.validate()?;
        Ok(t)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: FiniteTable =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        raw.validate()?;
        Ok(raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables serialize")
    }

    /// Builds the tables from an order relation `leq[i][j] = (i <= j)`,
    /// computing greatest lower and least upper bounds.
    pub fn from_order(names: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = names.len();
        let bound = |i: usize, j: usize, lower: bool| -> Result<usize> {
            let below = |k: usize, t: usize| if lower { leq[k][t] } else { leq[t][k] };
            let cands: Vec<usize> = (0..n).filter(|&k| below(k, i) && below(k, j)).collect();
            cands
                .iter()
                .copied()
                .find(|&c| cands.iter().all(|&d| below(d, c)))
                .ok_or(Error::AxiomViolation {
                    axiom: if lower { "existence of meets" } else { "existence of joins" },
                    witness: vec![i, j],
                })
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                meet[i][j] = bound(i, j, true)?;
                join[i][j] = bound(i, j, false)?;
            }
        }
        FiniteTable::new(names, meet, join)
    }

    /// Tabulates any finite lattice; element `i` of the result is the
    /// `i`-th element of `lat.enumerate()`.
    pub fn tabulate<L: Lattice>(lat: &L) -> Result<Self> {
        let elems = lat.enumerate()?;
        let index = |e: &L::Elem| -> Result<usize> {
            elems
                .iter()
                .position(|f| f == e)
                .ok_or_else(|| Error::NotAnElement(lat.format(e)))
        };
        let mut meet = Vec::with_capacity(elems.len());
        let mut join = Vec::with_capacity(elems.len());
        for u in &elems {
            let mut mrow = Vec::with_capacity(elems.len());
            let mut jrow = Vec::with_capacity(elems.len());
            for v in &elems {
                mrow.push(index(&lat.meet(u, v)?)?);
                jrow.push(index(&lat.join(u, v)?)?);
            }
            meet.push(mrow);
            join.push(jrow);
        }
        let names = elems.iter().map(|e| lat.format(e)).collect();
        FiniteTable::new(names, meet, join)
    }

    /// The diamond `{0, u, v, w, 1}` with three pairwise incomparable atoms.
    pub fn m3() -> Self {
        let leq = order_from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]);
        FiniteTable::from_order(names(&["0", "u", "v", "w", "1"]), &leq).expect("M3 is a lattice")
    }

    /// The pentagon `{0, u, v, w, 1}` with `0 < u < w < 1` and `0 < v < 1`.
    pub fn n5() -> Self {
        let leq = order_from_covers(5, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]);
        FiniteTable::from_order(names(&["0", "u", "v", "w", "1"]), &leq).expect("N5 is a lattice")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same tables up to the given relabelling `perm[i]` of element `i`.
    pub fn isomorphic_via(&self, other: &FiniteTable, perm: &[usize]) -> bool {
        let n = self.len();
        n == other.len()
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    perm[self.meet[i][j]] == other.meet[perm[i]][perm[j]]
                        && perm[self.join[i][j]] == other.join[perm[i]][perm[j]]
                })
            })
    }

    fn validate(&self) -> Result<()> {
        let n = self.names.len();
        if n == 0 {
            return Err(Error::InvalidSpec("a lattice needs at least one element".into()));
        }
        for (label, t) in [("meet", &self.meet), ("join", &self.join)] {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidSpec(format!("{label} table is not {n}x{n}")));
            }
            if let Some(bad) = t.iter().flatten().find(|&&v| v >= n) {
                return Err(Error::InvalidSpec(format!("{label} table entry {bad} out of range")));
            }
        }
        let (m, j) = (&self.meet, &self.join);
        let fail = |axiom, witness: Vec<usize>| Err(Error::AxiomViolation { axiom, witness });
        for a in 0..n {
            if m[a][a] != a {
                return fail("meet idempotence", vec![a]);
            }
            if j[a][a] != a {
                return fail("join idempotence", vec![a]);
            }
            for b in 0..n {
                if m[a][b] != m[b][a] {
                    return fail("meet commutativity", vec![a, b]);
                }
                if j[a][b] != j[b][a] {
                    return fail("join commutativity", vec![a, b]);
                }
                if j[a][m[a][b]] != a {
                    return fail("absorption a v (a ^ b) = a", vec![a, b]);
                }
                if m[a][j[a][b]] != a {
                    return fail("absorption a ^ (a v b) = a", vec![a, b]);
                }
                for c in 0..n {
                    if m[m[a][b]][c] != m[a][m[b][c]] {
                        return fail("meet associativity", vec![a, b, c]);
                    }
                    if j[j[a][b]][c] != j[a][j[b][c]] {
                        return fail("join associativity", vec![a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Reflexive-transitive closure of a cover relation.
fn order_from_covers(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(lo, hi) in covers {
        leq[lo][hi] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    leq
}

impl Lattice for FiniteTable {
    type Elem = usize;

    #[inline]
    fn meet(&self, u: &usize, v: &usize) -> Result<usize> {
        Ok(self.meet[*u][*v])
    }

    #[inline]
    fn join(&self, u: &usize, v: &usize) -> Result<usize> {
        Ok(self.join[*u][*v])
    }

    fn bounds(&self) -> Option<(usize, usize)> {
        let n = self.len();
        let bottom = (1..n).fold(0, |acc, i| self.meet[acc][i]);
        let top = (1..n).fold(0, |acc, i| self.join[acc][i]);
        Some((bottom, top))
    }

    fn enumerate(&self) -> Result<Vec<usize>> {
        Ok((0..self.len()).collect())
    }

    fn contains(&self, e: &usize) -> bool {
        *e < self.len()
    }

    fn name(&self) -> String {
        format!("table[{}]", self.names.join(","))
    }

    fn format(&self, e: &usize) -> String {
        self.names
            .get(*e)
            .cloned()
            .unwrap_or_else(|| format!("#{e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::laws;

    #[test]
    fn m3_atoms() {
        let m3 = FiniteTable::m3();
        assert_eq!(m3.enumerate().unwrap(), vec![0, 1, 2, 3, 4]);
        for a in 1..=3 {
            for b in 1..=3 {
                if a != b {
                    assert_eq!(m3.meet(&a, &b).unwrap(), 0);
                    assert_eq!(m3.join(&a, &b).unwrap(), 4);
                }
            }
        }
        assert_eq!(m3.bounds(), Some((0, 4)));
        assert_eq!(m3.format(&3), "w");
    }

    #[test]
    fn n5_shape() {
        let n5 = FiniteTable::n5();
        let (u, v, w) = (1, 2, 3);
        assert!(n5.leq(&u, &w).unwrap());
        assert_eq!(n5.join(&u, &v).unwrap(), 4);
        assert_eq!(n5.meet(&w, &v).unwrap(), 0);
        assert_eq!(n5.join(&w, &v).unwrap(), 4);
    }

    #[test]
    fn m3_and_n5_are_not_distributive() {
        for t in [FiniteTable::m3(), FiniteTable::n5()] {
            let c = t.enumerate().unwrap();
            laws::assert_lattice_axioms(&t, &c);
            assert!(laws::distributive_witness(&t, &c).is_some());
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let m3 = FiniteTable::m3();
        let back = FiniteTable::from_json(&m3.to_json()).unwrap();
        assert_eq!(back, m3);

        // swap one meet entry: breaks commutativity
        let bad = r#"{"elements":["0","1"],"meet":[[0,0],[1,1]],"join":[[0,1],[1,1]]}"#;
        match FiniteTable::from_json(bad) {
            Err(Error::AxiomViolation { axiom, witness }) => {
                assert_eq!(axiom, "meet commutativity");
                assert_eq!(witness, vec![0, 1]);
            }
            other => panic!("expected axiom violation, got {other:?}"),
        }
        let ragged = r#"{"elements":["0","1"],"meet":[[0],[0,1]],"join":[[0,1],[1,1]]}"#;
        assert!(matches!(FiniteTable::from_json(ragged), Err(Error::InvalidSpec(_))));
        assert!(FiniteTable::from_json("{").is_err());
    }

    #[test]
    fn non_lattice_order_is_rejected() {
        // two maximal elements: no join
        let leq = order_from_covers(3, &[(0, 1), (0, 2)]);
        assert!(FiniteTable::from_order(names(&["0", "a", "b"]), &leq).is_err());
    }
}
