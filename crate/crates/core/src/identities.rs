//! Law checkers: `L = U`, `L <= U`, the diagonal identities, the cube of
//! `L5`/`U5` terms, antitone transport, and the classical lattice laws.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{join_all, meet_all, Element, Lattice, LatticeDescriptor, Quintuple};
use crate::quintary::{eval_l, eval_term, eval_u, median, median_dual, TermId};
use crate::search::{self, Carrier, CheckOptions, CheckReport, Mode, Verdict};

/// A quintuple together with its `L` and `U` values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LuWitness<E> {
    pub q: Quintuple<E>,
    pub l: E,
    pub u: E,
}

pub fn finite_carrier<L: Lattice>(lat: &L) -> Result<Carrier<L::Elem>>
where
    L::Elem: 'static,
{
    Ok(Carrier::listed(lat.enumerate()?))
}

fn lu_sweep<L, F>(
    lat: &L,
    carrier: &Carrier<L::Elem>,
    opts: &CheckOptions,
    violated: F,
) -> Result<CheckReport<LuWitness<L::Elem>>>
where
    L: Lattice,
    L::Elem: 'static,
    F: Fn(&L::Elem, &L::Elem) -> Result<bool> + Sync,
{
    search::sweep::<5, _, _, _>(carrier, opts, |v| {
        let q = Quintuple::from_array(v);
        let l = eval_l(lat, &q)?;
        let u = eval_u(lat, &q)?;
        Ok(violated(&l, &u)?.then_some(LuWitness { q, l, u }))
    })
}

/// `L = U` on every quintuple of `carrier`; holds exactly on distributive
/// lattices.
pub fn check_lu_equality<L: Lattice>(
    lat: &L,
    carrier: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<LuWitness<L::Elem>>>
where
    L::Elem: 'static,
{
    lu_sweep(lat, carrier, opts, |l, u| Ok(l != u))
}

/// `L <= U` on every quintuple of `carrier`.
pub fn check_lu_inclusion<L: Lattice>(
    lat: &L,
    carrier: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<LuWitness<L::Elem>>>
where
    L::Elem: 'static,
{
    lu_sweep(lat, carrier, opts, |l, u| Ok(!lat.leq(l, u)?))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagonalWitness<E> {
    pub identity: &'static str,
    pub q: Quintuple<E>,
    pub l: E,
    pub u: E,
    pub expected: E,
}

/// The diagonal values where `L` and `U` agree for any lattice, built from
/// the components of `q`; the bottom/top lines only on bounded lattices.
pub fn verify_diagonal_identities<L: Lattice>(
    lat: &L,
    q: &Quintuple<L::Elem>,
) -> Result<CheckReport<DiagonalWitness<L::Elem>>> {
    let Quintuple { x, a, y, b, z } = q.clone();
    let mut cases: Vec<(&'static str, Quintuple<L::Elem>, Option<L::Elem>, Option<L::Elem>)> = vec![
        (
            "L(x,z,y,x,z) = z ^ x = U(x,z,y,x,z)",
            Quintuple::new(x.clone(), z.clone(), y.clone(), x.clone(), z.clone()),
            Some(lat.meet(&z, &x)?),
            Some(lat.meet(&z, &x)?),
        ),
        (
            "L(x,x,y,z,z) = x v z = U(x,x,y,z,z)",
            Quintuple::new(x.clone(), x.clone(), y.clone(), z.clone(), z.clone()),
            Some(lat.join(&x, &z)?),
            Some(lat.join(&x, &z)?),
        ),
        (
            "L(x,y,y,y,z) = y = U(x,y,y,y,z)",
            Quintuple::new(x.clone(), y.clone(), y.clone(), y.clone(), z.clone()),
            Some(y.clone()),
            Some(y.clone()),
        ),
    ];
    if let Some((lo, hi)) = lat.bounds() {
        let t = |x: &L::Elem, a: &L::Elem, y: &L::Elem, b: &L::Elem, z: &L::Elem| {
            Quintuple::new(x.clone(), a.clone(), y.clone(), b.clone(), z.clone())
        };
        let xz_join = lat.join(&x, &z)?;
        let xz_meet = lat.meet(&x, &z)?;
        let l5 = eval_term(lat, q, TermId::L5_3)?;
        let u5 = eval_term(lat, q, TermId::U5_2)?;
        let l2 = {
            let q0 = t(&x, &lo, &y, &b, &z);
            eval_term(lat, &q0, TermId::L2)?
        };
        let u2 = {
            let q1 = t(&x, &hi, &y, &b, &z);
            eval_term(lat, &q1, TermId::U2)?
        };
        cases.extend([
            ("L(x,1,0,1,z) = x v z = U(x,1,0,1,z)", t(&x, &hi, &lo, &hi, &z), Some(xz_join.clone()), Some(xz_join)),
            ("L(x,0,1,0,z) = x ^ z = U(x,0,1,0,z)", t(&x, &lo, &hi, &lo, &z), Some(xz_meet.clone()), Some(xz_meet)),
            ("L(x,1,1,0,z) = x = U(x,1,1,0,z)", t(&x, &hi, &hi, &lo, &z), Some(x.clone()), Some(x.clone())),
            ("L(x,0,0,1,z) = z = U(x,0,0,1,z)", t(&x, &lo, &lo, &hi, &z), Some(z.clone()), Some(z.clone())),
            ("L(x,a,0,b,z) = L5", t(&x, &a, &lo, &b, &z), Some(l5), None),
            ("U(x,a,1,b,z) = U5", t(&x, &a, &hi, &b, &z), None, Some(u5)),
            ("L(x,0,y,b,z) = L2 = z ^ (b v (x ^ y))", t(&x, &lo, &y, &b, &z), Some(l2), None),
            ("U(x,1,y,b,z) = U2 = x v (b ^ (z v y))", t(&x, &hi, &y, &b, &z), None, Some(u2)),
        ]);
    }
    let mut evaluations = 0;
    for (identity, case, want_l, want_u) in cases {
        evaluations += 1;
        let l = eval_l(lat, &case)?;
        let u = eval_u(lat, &case)?;
        let bad = |want: &Option<L::Elem>, got: &L::Elem| want.as_ref().is_some_and(|w| w != got);
        if bad(&want_l, &l) || bad(&want_u, &u) {
            let expected = want_l.or(want_u).expect("every identity names a value");
            return Ok(CheckReport {
                verdict: Verdict::Fails,
                mode: Mode::Exhaustive,
                evaluations,
                counterexample: Some(DiagonalWitness {
                    identity,
                    q: case,
                    l,
                    u,
                    expected,
                }),
            });
        }
    }
    Ok(CheckReport {
        verdict: Verdict::Holds,
        mode: Mode::Exhaustive,
        evaluations,
        counterexample: None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubeWitness<E> {
    pub relation: String,
    pub args: [E; 4],
}

/// The eight-node cube spanned by `L5^(i)` and `U5^(i)`: bottom, the three
/// `L5^(i)`, the three `U5^(i)`, top.
pub fn cube_nodes<L: Lattice>(lat: &L, [x, a, b, z]: &[L::Elem; 4]) -> Result<[L::Elem; 8]> {
    let q = Quintuple::new(x.clone(), a.clone(), x.clone(), b.clone(), z.clone());
    let ls = [TermId::L5_1, TermId::L5_2, TermId::L5_3].map(|t| eval_term(lat, &q, t));
    let us = [TermId::U5_1, TermId::U5_2, TermId::U5_3].map(|t| eval_term(lat, &q, t));
    let [l1, l2, l3] = ls;
    let [u1, u2, u3] = us;
    let (l1, l2, l3, u1, u2, u3) = (l1?, l2?, l3?, u1?, u2?, u3?);
    let bottom = meet_all(lat, &[&l1, &l2])?;
    let top = join_all(lat, &[&u1, &u2])?;
    Ok([bottom, l1, l2, l3, u1, u2, u3, top])
}

/// Relations between the `L5^(i)` and `U5^(i)` terms on one tuple, and
/// closure of the eight nodes under meet and join.
pub fn verify_cube<L: Lattice>(
    lat: &L,
    args: &[L::Elem; 4],
) -> Result<CheckReport<CubeWitness<L::Elem>>> {
    let nodes = cube_nodes(lat, args)?;
    let l = [&nodes[1], &nodes[2], &nodes[3]];
    let u = [&nodes[4], &nodes[5], &nodes[6]];
    let mut evaluations = 0;
    let mut fail = None;
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        evaluations += 4;
        if lat.meet(u[i], u[j])? != *l[k] {
            fail = Some(format!("U{} ^ U{} = L{}", i + 1, j + 1, k + 1));
        } else if lat.join(l[i], l[j])? != *u[k] {
            fail = Some(format!("L{} v L{} = U{}", i + 1, j + 1, k + 1));
        } else if lat.meet(l[i], l[j])? != nodes[0] {
            fail = Some(format!("L{} ^ L{} = bottom", i + 1, j + 1));
        } else if lat.join(u[i], u[j])? != nodes[7] {
            fail = Some(format!("U{} v U{} = top", i + 1, j + 1));
        }
        if fail.is_some() {
            break;
        }
    }
    if fail.is_none() {
        'closure: for p in &nodes {
            for q in &nodes {
                evaluations += 1;
                let m = lat.meet(p, q)?;
                let j = lat.join(p, q)?;
                if !nodes.contains(&m) || !nodes.contains(&j) {
                    fail = Some("nodes closed under meet and join".to_string());
                    break 'closure;
                }
            }
        }
    }
    Ok(CheckReport {
        verdict: if fail.is_some() { Verdict::Fails } else { Verdict::Holds },
        mode: Mode::Exhaustive,
        evaluations,
        counterexample: fail.map(|relation| CubeWitness {
            relation,
            args: args.clone(),
        }),
    })
}

/// [`verify_cube`] over `carrier^4`.
pub fn check_cube<L: Lattice>(
    lat: &L,
    carrier: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<CubeWitness<L::Elem>>>
where
    L::Elem: 'static,
{
    search::sweep::<4, _, _, _>(carrier, opts, |args| {
        Ok(verify_cube(lat, &args)?.counterexample)
    })
}

/// Errors with a witness pair unless `phi` swaps meet and join on
/// `carrier^2`.
pub fn check_antitone<L, F>(lat: &L, phi: &F, carrier: &Carrier<L::Elem>) -> Result<()>
where
    L: Lattice,
    L::Elem: 'static,
    F: Fn(&L::Elem) -> Result<L::Elem> + Sync,
{
    let r = search::exhaustive::<2, _, _, _>(carrier, search::Exec::Sequential, |[u, v]| {
        let join_ok = phi(&lat.join(&u, &v)?)? == lat.meet(&phi(&u)?, &phi(&v)?)?;
        let meet_ok = phi(&lat.meet(&u, &v)?)? == lat.join(&phi(&u)?, &phi(&v)?)?;
        Ok((!(join_ok && meet_ok)).then_some((u, v)))
    })?;
    match r.counterexample {
        Some((u, v)) => Err(Error::NotAntitone(lat.format(&u), lat.format(&v))),
        None => Ok(()),
    }
}

/// Whether `phi L(q) = U(phi x, phi b, phi y, phi a, phi z)` and the dual
/// hold at `q`.
pub fn transport_holds<L, F>(lat: &L, phi: &F, q: &Quintuple<L::Elem>) -> Result<bool>
where
    L: Lattice,
    F: Fn(&L::Elem) -> Result<L::Elem>,
{
    let p = q.try_map(phi)?;
    let swapped = Quintuple::new(p.x, p.b, p.y, p.a, p.z);
    Ok(phi(&eval_l(lat, q)?)? == eval_u(lat, &swapped)?
        && phi(&eval_u(lat, q)?)? == eval_l(lat, &swapped)?)
}

/// Antitone transport over `carrier^5`, after checking that `phi` is
/// antitone on `carrier^2`.
pub fn transport_antitone<L, F>(
    lat: &L,
    phi: &F,
    carrier: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<Quintuple<L::Elem>>>
where
    L: Lattice,
    L::Elem: 'static,
    F: Fn(&L::Elem) -> Result<L::Elem> + Sync,
{
    check_antitone(lat, phi, carrier)?;
    search::sweep::<5, _, _, _>(carrier, opts, |v| {
        let q = Quintuple::from_array(v);
        Ok((!transport_holds(lat, phi, &q)?).then_some(q))
    })
}

/// The built-in anti-automorphism of a backend: complement on power sets
/// and on the finite-cofinite algebra, `d -> KN/d` on divisor intervals.
pub fn builtin_antitone(
    desc: &LatticeDescriptor,
) -> Option<impl Fn(&Element) -> Result<Element> + Sync + '_> {
    match desc {
        LatticeDescriptor::PowerSet(_)
        | LatticeDescriptor::FinCof(_)
        | LatticeDescriptor::DivisorInterval(_) => Some(move |e: &Element| match (desc, e) {
            (LatticeDescriptor::PowerSet(p), Element::Set(s)) => Ok(Element::Set(p.complement(*s))),
            (LatticeDescriptor::FinCof(_), Element::FinCof(s)) => Ok(Element::FinCof(s.complement())),
            (LatticeDescriptor::DivisorInterval(d), Element::Divisor(v)) => {
                Ok(Element::Divisor(d.dual(*v)?))
            }
            _ => Err(Error::LatticeMismatch {
                left: desc.name(),
                right: format!("{e:?}"),
            }),
        }),
        _ => None,
    }
}

/// `u <= w  =>  u v (v ^ w) = (u v v) ^ w` over `carrier^3`.
pub fn check_modular_law<L: Lattice>(
    lat: &L,
    carrier: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<[L::Elem; 3]>>
where
    L::Elem: 'static,
{
    search::sweep::<3, _, _, _>(carrier, opts, |[u, v, w]| {
        if !lat.leq(&u, &w)? {
            return Ok(None);
        }
        let lhs = lat.join(&u, &lat.meet(&v, &w)?)?;
        let rhs = lat.meet(&lat.join(&u, &v)?, &w)?;
        Ok((lhs != rhs).then_some([u, v, w]))
    })
}

/// `u ^ (v v w) = (u ^ v) v (u ^ w)` over `carrier^3`.
pub fn check_distributive_law<L: Lattice>(
    lat: &L,
    carrier: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<[L::Elem; 3]>>
where
    L::Elem: 'static,
{
    search::sweep::<3, _, _, _>(carrier, opts, |[u, v, w]| {
        let lhs = lat.meet(&u, &lat.join(&v, &w)?)?;
        let rhs = lat.join(&lat.meet(&u, &v)?, &lat.meet(&u, &w)?)?;
        Ok((lhs != rhs).then_some([u, v, w]))
    })
}

/// `(x v y) ^ (y v z) ^ (z v x) = (x ^ y) v (y ^ z) v (z ^ x)` over
/// `carrier^3`.
pub fn check_median_law<L: Lattice>(
    lat: &L,
    carrier: &Carrier<L::Elem>,
    opts: &CheckOptions,
) -> Result<CheckReport<[L::Elem; 3]>>
where
    L::Elem: 'static,
{
    search::sweep::<3, _, _, _>(carrier, opts, |[x, y, z]| {
        let ok = median(lat, &x, &y, &z)? == median_dual(lat, &x, &y, &z)?;
        Ok((!ok).then_some([x, y, z]))
    })
}
