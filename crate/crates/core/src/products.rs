//! The hexad of binary products obtained from `L` by fixing `y` and two
//! outer slots, and the ternary product `(xyz)_ab`.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::lattice::{Lattice, Quintuple};
use crate::quintary::{eval_l, eval_u, Vertex, SLOT_NAMES};
use crate::search::{self, Carrier, CheckOptions, CheckReport};

/// One hexad product `u · v`.
///
/// The base placement puts `u` in `x`, `f1` in `a`, `f2` in `b` and `v` in
/// `z`; the vertex then permutes the slots `(x, a, b)`. So `e` is the
/// principal product `L(u, f1, y, f2, v)` and `(12)` is `L(f1, u, y, f2, v)`.
#[derive(Debug, Clone)]
pub struct ProductSpec<L: Lattice> {
    lat: L,
    vertex: Vertex,
    fixed: [L::Elem; 3],
}

impl<L: Lattice> ProductSpec<L> {
    /// `fixed = [f1, y, f2]`.
    pub fn new(lat: L, vertex: Vertex, fixed: [L::Elem; 3]) -> Self {
        ProductSpec { lat, vertex, fixed }
    }

    /// Principal product `x •_{a,y,b} z`.
    pub fn principal(lat: L, a: L::Elem, y: L::Elem, b: L::Elem) -> Self {
        ProductSpec::new(lat, Vertex::E, [a, y, b])
    }

    pub fn lattice(&self) -> &L {
        &self.lat
    }

    pub fn vertex(&self) -> Vertex {
        self.vertex
    }

    pub fn fixed(&self) -> &[L::Elem; 3] {
        &self.fixed
    }

    /// The quintuple evaluated for `u · v`.
    pub fn placement(&self, u: &L::Elem, v: &L::Elem) -> Quintuple<L::Elem> {
        let [f1, y, f2] = &self.fixed;
        let base = [u, f1, f2];
        let [x, a, b] = self.vertex.perm().map(|i| base[i as usize].clone());
        Quintuple::new(x, a, y.clone(), b, v.clone())
    }

    pub fn eval(&self, u: &L::Elem, v: &L::Elem) -> Result<L::Elem> {
        eval_l(&self.lat, &self.placement(u, v))
    }

    /// The same placement evaluated with `U`.
    pub fn eval_upper(&self, u: &L::Elem, v: &L::Elem) -> Result<L::Elem> {
        eval_u(&self.lat, &self.placement(u, v))
    }

    /// Slot names of the two arguments, e.g. `('a', 'z')` for `(12)`.
    pub fn varying_names(&self) -> (char, char) {
        let p = self.vertex.perm();
        let slot = p.iter().position(|&i| i == 0).expect("u is placed");
        (SLOT_NAMES[slot], 'z')
    }

    /// Fixed slots with their values, in slot order `x, a, b` and then `y`.
    pub fn fixed_slots(&self) -> Vec<(char, L::Elem)> {
        let [f1, y, f2] = &self.fixed;
        let base = [None, Some(f1), Some(f2)];
        let mut out: Vec<(char, L::Elem)> = self
            .vertex
            .perm()
            .iter()
            .enumerate()
            .filter_map(|(slot, &i)| base[i as usize].map(|e| (SLOT_NAMES[slot], e.clone())))
            .collect();
        out.push(('y', y.clone()));
        out
    }

    /// `(bottom · bottom, top · top)` on bounded lattices.
    pub fn bottom_top(&self) -> Result<Option<(L::Elem, L::Elem)>> {
        match self.lat.bounds() {
            None => Ok(None),
            Some((lo, hi)) => Ok(Some((self.eval(&lo, &lo)?, self.eval(&hi, &hi)?))),
        }
    }
}

impl<L: Lattice + Clone> ProductSpec<L> {
    /// The product of the opposite vertex; `eval` of it is `eval` of `self`
    /// with arguments swapped.
    pub fn opposite(&self) -> Self {
        ProductSpec {
            lat: self.lat.clone(),
            vertex: self.vertex.opposite(),
            fixed: self.fixed.clone(),
        }
    }

    /// The six products sharing `self`'s fixed data.
    pub fn hexad(&self) -> [Self; 6] {
        Vertex::ALL.map(|v| ProductSpec {
            lat: self.lat.clone(),
            vertex: v,
            fixed: self.fixed.clone(),
        })
    }
}

impl<L: Lattice> fmt::Display for ProductSpec<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (u, v) = self.varying_names();
        let fixed: Vec<String> = self
            .fixed_slots()
            .iter()
            .map(|(s, e)| format!("{s}={}", self.lat.format(e)))
            .collect();
        write!(f, "{:<5} ({u},{v}) varying, {}", self.vertex.label(), fixed.join(" "))
    }
}

pub fn eval_product<L: Lattice>(s: &ProductSpec<L>, u: &L::Elem, v: &L::Elem) -> Result<L::Elem> {
    s.eval(u, v)
}

pub fn opposite<L: Lattice + Clone>(s: &ProductSpec<L>) -> ProductSpec<L> {
    s.opposite()
}

/// `(u v) w = u (v w)` over `domain^3`, exhaustive within budget.
pub fn check_associativity<L: Lattice>(
    s: &ProductSpec<L>,
    domain: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<[L::Elem; 3]>>
where
    L::Elem: 'static,
{
    search::sweep::<3, _, _, _>(domain, opts, |[u, v, w]| {
        let lhs = s.eval(&s.eval(&u, &v)?, &w)?;
        let rhs = s.eval(&u, &s.eval(&v, &w)?)?;
        Ok((lhs != rhs).then_some([u, v, w]))
    })
}

/// `(u u) v = u v = (u v) v` over `domain^2`.
pub fn check_weak_band<L: Lattice>(
    s: &ProductSpec<L>,
    domain: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<[L::Elem; 2]>>
where
    L::Elem: 'static,
{
    search::sweep::<2, _, _, _>(domain, opts, |[u, v]| {
        let uv = s.eval(&u, &v)?;
        let ok = s.eval(&s.eval(&u, &u)?, &v)? == uv && s.eval(&uv, &v)? == uv;
        Ok((!ok).then_some([u, v]))
    })
}

/// `eval(opposite)(u, v) = eval(v, u)` over `domain^2`.
pub fn check_opposite<L: Lattice + Clone>(
    s: &ProductSpec<L>,
    domain: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<[L::Elem; 2]>>
where
    L::Elem: 'static,
{
    let o = s.opposite();
    search::sweep::<2, _, _, _>(domain, opts, |[u, v]| {
        Ok((o.eval(&u, &v)? != s.eval(&v, &u)?).then_some([u, v]))
    })
}

/// `(xyz)_ab = L(x, a, y, b, z)`.
#[derive(Debug, Clone)]
pub struct TernarySpec<L: Lattice> {
    lat: L,
    a: L::Elem,
    b: L::Elem,
}

impl<L: Lattice> TernarySpec<L> {
    pub fn new(lat: L, a: L::Elem, b: L::Elem) -> Self {
        TernarySpec { lat, a, b }
    }

    pub fn eval(&self, x: &L::Elem, y: &L::Elem, z: &L::Elem) -> Result<L::Elem> {
        let q = Quintuple::new(x.clone(), self.a.clone(), y.clone(), self.b.clone(), z.clone());
        eval_l(&self.lat, &q)
    }
}

pub fn eval_ternary<L: Lattice>(
    t: &TernarySpec<L>,
    x: &L::Elem,
    y: &L::Elem,
    z: &L::Elem,
) -> Result<L::Elem> {
    t.eval(x, y, z)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TorsorWitness<E> {
    pub law: &'static str,
    pub args: Vec<E>,
}

/// The three para-associativity equalities over `domain^5` and the middle
/// operator identities over `domain^3`.
pub fn check_torsor_laws<L: Lattice>(
    t: &TernarySpec<L>,
    domain: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<TorsorWitness<L::Elem>>>
where
    L::Elem: 'static,
{
    let para = search::sweep::<5, _, _, _>(domain, opts, |[x, x1, y, z1, z]| {
        let first = t.eval(&t.eval(&x, &x1, &y)?, &z1, &z)?;
        let second = t.eval(&x, &t.eval(&x1, &y, &z1)?, &z)?;
        let third = t.eval(&x, &t.eval(&z1, &y, &x1)?, &z)?;
        let fourth = t.eval(&x, &x1, &t.eval(&y, &z1, &z)?)?;
        let law = if first != second {
            Some("((x x' y) z' z) = (x (x' y z') z)")
        } else if second != third {
            Some("(x (x' y z') z) = (x (z' y x') z)")
        } else if third != fourth {
            Some("(x (z' y x') z) = (x x' (y z' z))")
        } else {
            None
        };
        Ok(law.map(|law| TorsorWitness {
            law,
            args: vec![x, x1, y, z1, z],
        }))
    })?;
    let middle = search::sweep::<3, _, _, _>(domain, opts, |[x, y, z]| {
        let m = t.eval(&x, &y, &z)?;
        let law = if t.eval(&x, &m, &z)? != m {
            Some("M_xz M_xz = M_xz")
        } else if t.eval(&x, &t.eval(&z, &y, &x)?, &z)? != m {
            Some("M_xz M_zx = M_xz")
        } else {
            None
        };
        Ok(law.map(|law| TorsorWitness {
            law,
            args: vec![x, y, z],
        }))
    })?;
    Ok(search::merge_reports(vec![para, middle]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Arithmetic, PowerSet};
    use crate::search::Mode;

    fn principal(a: u64, y: u64, b: u64) -> ProductSpec<Arithmetic> {
        ProductSpec::principal(Arithmetic, a, y, b)
    }

    #[test]
    fn intro_products() {
        let s = principal(3, 2, 4);
        assert_eq!(s.eval(&5, &6).unwrap(), 3);
        assert_eq!(s.eval(&s.eval(&5, &6).unwrap(), &6).unwrap(), 3);
        assert_eq!(s.eval(&5, &s.eval(&6, &6).unwrap()).unwrap(), 3);
        let corners = [(0, 0, 12), (0, 1, 4), (1, 0, 3), (1, 1, 1)];
        for (u, v, want) in corners {
            assert_eq!(s.eval(&u, &v).unwrap(), want);
        }
        assert_eq!(s.bottom_top().unwrap(), Some((12, 1)));
        assert_eq!(s.eval(&s.eval(&5, &5).unwrap(), &6).unwrap(), 3);
    }

    #[test]
    fn vertex_placements() {
        let s = ProductSpec::new(Arithmetic, Vertex::T12, [8, 4, 2]);
        assert_eq!(s.placement(&5, &0), Quintuple::new(8, 5, 4, 2, 0));
        assert_eq!(s.eval(&5, &0).unwrap(), 20);
        assert_eq!(s.varying_names(), ('a', 'z'));
        let s = ProductSpec::new(Arithmetic, Vertex::C132, [8, 4, 2]);
        assert_eq!(s.placement(&3, &7), Quintuple::new(8, 2, 4, 3, 7));
        assert_eq!(s.varying_names(), ('b', 'z'));
        assert_eq!(s.fixed_slots(), vec![('x', 8), ('a', 2), ('y', 4)]);
        let p = principal(3, 2, 4);
        assert_eq!(p.to_string(), "e     (x,z) varying, a=3 b=4 y=2");
    }

    #[test]
    fn opposites() {
        let s = principal(3, 2, 4);
        let o = s.opposite();
        assert_eq!(o.placement(&1, &2), Quintuple::new(1, 4, 2, 3, 2));
        assert_eq!(o.opposite().vertex(), Vertex::E);
        let opts = CheckOptions::default();
        let domain = Carrier::window(0, 20);
        for v in s.hexad() {
            assert!(check_opposite(&v, &domain, &opts).unwrap().holds());
        }
        // a = b gives a commutative product
        let c = principal(6, 4, 6);
        assert!((0..30u64).all(|u| (0..30).all(|v| c.eval(&u, &v).unwrap() == c.eval(&v, &u).unwrap())));
    }

    #[test]
    fn semigroup_laws() {
        let opts = CheckOptions::default();
        let r = check_associativity(&principal(3, 2, 4), &Carrier::window(0, 11), &opts).unwrap();
        assert!(r.holds());
        assert_eq!(r.evaluations, 12u64.pow(3));
        assert_eq!(r.mode, Mode::Exhaustive);
        assert!(check_associativity(&principal(1, 2, 1), &Carrier::window(0, 11), &opts).unwrap().holds());
        for s in principal(8, 4, 2).hexad() {
            let d = Carrier::window(0, 8);
            assert!(check_associativity(&s, &d, &opts).unwrap().holds(), "{s}");
            assert!(check_weak_band(&s, &d, &opts).unwrap().holds(), "{s}");
        }
        let aaa = principal(5, 5, 5);
        assert!((0..20u64).all(|u| (0..20).all(|v| aaa.eval(&u, &v).unwrap() == 5)));
        let absorbing = principal(3, 2, 3);
        assert!((0..20u64).all(|v| absorbing.eval(&3, &v).unwrap() == 3 && absorbing.eval(&v, &3).unwrap() == 3));
    }

    #[test]
    fn ternary() {
        let t = TernarySpec::new(Arithmetic, 1, 1);
        assert_eq!(t.eval(&4, &6, &10).unwrap(), 2);
        assert_eq!(t.eval(&7, &7, &7).unwrap(), 7);
        assert_eq!(TernarySpec::new(Arithmetic, 3, 4).eval(&0, &2, &0).unwrap(), 12);
        let p = principal(3, 2, 4);
        let t = TernarySpec::new(Arithmetic, 3, 4);
        assert_eq!(t.eval(&5, &2, &6).unwrap(), p.eval(&5, &6).unwrap());
    }

    #[test]
    fn torsor_on_small_powerset() {
        let m = PowerSet::new(2).unwrap();
        let domain = Carrier::listed(m.enumerate().unwrap());
        let opts = CheckOptions::default();
        for a in 0..4u64 {
            for b in 0..4u64 {
                let r = check_torsor_laws(&TernarySpec::new(m, a, b), &domain, &opts).unwrap();
                assert!(r.holds());
                assert_eq!(r.evaluations, 4u64.pow(5) + 4u64.pow(3));
            }
        }
        // bottom pair gives a triple meet, top pair a triple join
        let t = TernarySpec::new(m, 0, 0);
        assert_eq!(t.eval(&0b11, &0b01, &0b11).unwrap(), 0b01);
        let t = TernarySpec::new(m, 0b11, 0b11);
        assert_eq!(t.eval(&0b01, &0b00, &0b10).unwrap(), 0b11);
    }
}
