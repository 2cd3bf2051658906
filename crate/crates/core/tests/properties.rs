use hexad::arithmetic::{self, lambda_embed, periods, product, valuation};
use hexad::boolean::{product_via_partition, PeriodicityForm};
use hexad::lattice::{Arithmetic, FinCof, FiniteTable, PowerSet};
use hexad::products::{check_associativity, check_weak_band, ProductSpec, TernarySpec};
use hexad::quintary::{eval_chain_closed, eval_distributive_closed, Bound};
use hexad::search::Carrier;
use hexad::{eval_l, eval_u, CheckOptions, Lattice, Quintuple, Symmetry, Vertex};
use proptest::prelude::*;

fn quint<S: Strategy>(s: S) -> impl Strategy<Value = Quintuple<S::Value>>
where
    S: Clone,
{
    [s.clone(), s.clone(), s.clone(), s.clone(), s].prop_map(Quintuple::from_array)
}

fn small_opts() -> CheckOptions {
    CheckOptions::default().sequential()
}

proptest! {
    #[test]
    fn l_below_u_on_the_diamond(q in quint(0usize..5)) {
        let t = FiniteTable::m3();
        prop_assert!(t.leq(&eval_l(&t, &q).unwrap(), &eval_u(&t, &q).unwrap()).unwrap());
    }

    #[test]
    fn l_equals_u_on_arithmetic(q in quint(0u64..=1_000_000)) {
        let l = eval_l(&Arithmetic, &q).unwrap();
        prop_assert_eq!(l, eval_u(&Arithmetic, &q).unwrap());
        prop_assert_eq!(l, eval_distributive_closed(&Arithmetic, &q, Bound::L).unwrap());
        prop_assert_eq!(l, eval_distributive_closed(&Arithmetic, &q, Bound::U).unwrap());
    }

    #[test]
    fn sandwich_on_power_sets(q in quint(0u64..256)) {
        let p = PowerSet::new(8).unwrap();
        let l = eval_l(&p, &q).unwrap();
        let u = eval_u(&p, &q).unwrap();
        prop_assert_eq!(l, u);
        let lo = p.meet(&p.meet(&q.a, &q.y).unwrap(), &q.b).unwrap();
        let hi = p.join(&p.join(&q.a, &q.y).unwrap(), &q.b).unwrap();
        // bottom of the principal product sits below, its top above
        prop_assert!(p.leq(&lo, &l).unwrap());
        prop_assert!(p.leq(&l, &hi).unwrap());
    }

    #[test]
    fn monotone_in_each_argument(q in quint(0u64..64), slot in 0usize..5, extra in 0u64..64) {
        let p = PowerSet::new(6).unwrap();
        let mut bigger = q.into_array();
        bigger[slot] |= extra;
        let bigger = Quintuple::from_array(bigger);
        prop_assert!(p.leq(&eval_l(&p, &q).unwrap(), &eval_l(&p, &bigger).unwrap()).unwrap());
        prop_assert!(p.leq(&eval_u(&p, &q).unwrap(), &eval_u(&p, &bigger).unwrap()).unwrap());
    }

    #[test]
    fn klein_invariance_in_any_lattice(q in quint(0usize..5), which in 0..2u8) {
        let t = if which == 0 { FiniteTable::m3() } else { FiniteTable::n5() };
        let l = eval_l(&t, &q).unwrap();
        let u = eval_u(&t, &q).unwrap();
        for s in Symmetry::klein() {
            let moved = s.apply(&q);
            prop_assert_eq!(eval_l(&t, &moved).unwrap(), l.clone());
            prop_assert_eq!(eval_u(&t, &moved).unwrap(), u.clone());
        }
    }

    #[test]
    fn lambda_transports_l(q in quint(0u64..5_000)) {
        let fc = FinCof;
        let phi = q.map(|&v| lambda_embed(v));
        let swapped = Quintuple::new(phi.x.clone(), phi.b.clone(), phi.y.clone(), phi.a.clone(), phi.z.clone());
        let l = eval_l(&Arithmetic, &q).unwrap();
        prop_assert_eq!(lambda_embed(l), eval_u(&fc, &swapped).unwrap());
        prop_assert_eq!(eval_l(&fc, &swapped).unwrap(), eval_u(&fc, &swapped).unwrap());
    }

    #[test]
    fn lambda_is_antitone(u in 0u64..10_000, v in 0u64..10_000) {
        let fc = FinCof;
        let lcm = Arithmetic.meet(&u, &v).unwrap();
        let gcd = Arithmetic.join(&u, &v).unwrap();
        prop_assert_eq!(lambda_embed(lcm), fc.join(&lambda_embed(u), &lambda_embed(v)).unwrap());
        prop_assert_eq!(lambda_embed(gcd), fc.meet(&lambda_embed(u), &lambda_embed(v)).unwrap());
        if u != v {
            prop_assert_ne!(lambda_embed(u), lambda_embed(v));
        }
    }

    #[test]
    fn degenerate_closed_forms(t in 0u64..100, w in 0u64..100, zero in 0usize..3,
                               x in 0u64..=1_000_000, z in 0u64..=1_000_000) {
        let mut triple = [t, w, t + w];
        triple[zero] = 0;
        let [a, y, b] = triple;
        prop_assert_eq!(
            arithmetic::degenerate_eval(a, y, b, x, z).unwrap(),
            product(a, y, b, x, z).unwrap()
        );
    }

    #[test]
    fn periodic_in_each_argument(a in 1u64..40, y in 1u64..40, b in 1u64..40,
                                 x in 0u64..2_000, z in 0u64..2_000, k in 1u64..4) {
        let p = periods(a, y, b).unwrap();
        let v = product(a, y, b, x, z).unwrap();
        prop_assert_eq!(product(a, y, b, x + k * p.n, z).unwrap(), v);
        prop_assert_eq!(product(a, y, b, x, z + k * p.m).unwrap(), v);
        prop_assert_eq!(v % p.k, 0);
        prop_assert_eq!(p.big_n % v, 0);
    }

    #[test]
    fn prime_power_products_follow_valuations(
        p in prop::sample::select(vec![2u64, 3, 5]),
        k in 0u32..4, l in 0u32..4, m in 0u32..4,
        x in 0u64..2_000, z in 0u64..2_000,
    ) {
        let (a, y, b) = (p.pow(k), p.pow(l), p.pow(m));
        let v = |n: u64| valuation(p, n).unwrap().as_chain();
        let got = product(a, y, b, x, z).unwrap();
        let q = Quintuple::new(v(x), v(b), v(y), v(a), v(z));
        let (closed, _) = eval_chain_closed(&q).expect("some chain case applies");
        prop_assert_eq!(closed, v(got));
    }

    #[test]
    fn partition_product_matches_l(bits in 1u32..=12, seed in any::<[u64; 5]>()) {
        let m = PowerSet::new(bits).unwrap();
        let mask = (1u64 << bits) - 1;
        let [x, a, y, b, z] = seed.map(|s| s & mask);
        prop_assert_eq!(
            product_via_partition(&m, a, y, b, x, z).unwrap(),
            eval_l(&m, &Quintuple::new(x, a, y, b, z)).unwrap()
        );
        prop_assert!(hexad::boolean::periodicity_holds(&m, PeriodicityForm::Corrected, [x, a, y, b, z]).unwrap());
    }

    #[test]
    fn hexad_products_are_weak_band_semigroups(fixed in [0u64..16, 0u64..16, 0u64..16], v in 0usize..6) {
        let p = PowerSet::new(4).unwrap();
        let spec = ProductSpec::new(p, Vertex::ALL[v], fixed);
        let dom = Carrier::listed(p.enumerate().unwrap());
        prop_assert!(check_associativity(&spec, &dom, &small_opts()).unwrap().holds());
        prop_assert!(check_weak_band(&spec, &dom, &small_opts()).unwrap().holds());
    }

    #[test]
    fn ternary_middle_is_idempotent(a in 0u64..50, b in 0u64..50, x in 0u64..500, y in 0u64..500, z in 0u64..500) {
        let t = TernarySpec::new(Arithmetic, a, b);
        let m = t.eval(&x, &y, &z).unwrap();
        prop_assert_eq!(t.eval(&x, &m, &z).unwrap(), m);
        prop_assert_eq!(t.eval(&x, &t.eval(&z, &y, &x).unwrap(), &z).unwrap(), m);
    }
}
