//! One PASS/FAIL line per acceptance criterion; exits non-zero if any fail.

use std::process::Command;
use std::time::Instant;

use hexad::arithmetic::{self, check_conjugation_iso, effective_periods, quotient_table};
use hexad::boolean::{self, product_via_partition, truth_table, PeriodicityForm, TruthRow};
use hexad::grassmannian::Grassmannian;
use hexad::identities::{check_lu_equality, check_lu_inclusion, finite_carrier};
use hexad::lattice::{Arithmetic, Chain, DivisorInterval, FiniteTable, PowerSet};
use hexad::products::{check_associativity, check_torsor_laws, check_weak_band, ProductSpec, TernarySpec};
use hexad::quintary::eval_chain_closed_in;
use hexad::search::Carrier;
use hexad::{eval_l, eval_u, CheckOptions, Lattice, Quintuple, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn hexad(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hexad"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn bounds_reproduction() -> Outcome {
    let (c1, o1) = hexad(&["bounds", "425", "204", "1000", "200", "402"]);
    let (c2, o2) = hexad(&["bounds", "425", "200", "1000", "204", "402"]);
    ensure(c1 == 0 && c2 == 0, "nonzero exit")?;
    ensure(
        o1.trim() == "[600, 40200, 5100, 5100] / 300 / [12, 25, 6, 100] / 300",
        format!("got {o1:?}"),
    )?;
    ensure(
        o2.trim() == "[204, 13668, 3400, 3400] / 68 / [4, 17, 2, 68] / 68",
        format!("got {o2:?}"),
    )?;
    Ok("gcd 300 / lcm 300 and gcd 68 / lcm 68".into())
}

// Printed grids, tab-separated as typeset: header row of column values,
// then one row per line value.
const INTRO: &str = "x	0	1	2	3	4	5	6
0	12	4	4	12	4	4	12
1	3	1	1	3	1	1	3
2	6	2	2	6	2	2	6
3	3	1	1	3	1	1	3
4	12	4	4	12	4	4	12";
const JOIN_121: &str = "x	0	1	2	3	4	5
0	2	1	2	1	2	1
1	1	1	1	1	1	1
2	2	1	2	1	2	1";
const MIN_181: &str = "x	1	2	4	8
1	1	1	1	1
2	1	2	2	2
4	1	2	4	4
8	1	2	4	8";
const PP_842: &str = "x	0	1	2	3	4	5	6	7	8
0	8	2	2	2	4	2	2	2	8
1	8	2	2	2	4	2	2	2	8
2	8	2	2	2	4	2	2	2	8";
const PP_8116: &str = "x	1	2	4	8	16
1	1	2	4	8	8
2	2	2	4	8	8
4	4	4	4	8	8
8	8	8	8	8	8
16	16	16	16	16	16";
const PQ_513: &str = "x	0	1	2	3	4	5
0	15	3	3	3	3	15
1	5	1	1	1	1	5
2	5	1	1	1	1	5
3	15	3	3	3	3	15";
const PQ_513_D15: &str = "x	1	3	5	15
1	1	1	5	5
3	3	3	15	15
5	1	1	5	5
15	3	3	15	15";
const C_323: &str = "x	0	1	2	3	4	5	6
0	6	3	6	3	6	3	6
1	3	1	1	3	1	1	3
2	6	1	2	3	2	1	6
3	3	3	3	3	3	3	3
4	6	1	2	3	2	1	6
5	3	1	1	3	1	1	3
6	6	3	6	3	6	3	6";
const NC_325: &str = "x	0	1	2	3	4	5	6
0	30	5	10	15	10	5	30
1	3	1	1	3	1	1	3
2	6	1	2	3	2	1	6
3	3	1	1	3	1	1	3
4	6	1	2	3	2	1	6
5	15	5	5	15	5	5	15
6	6	1	2	3	2	1	6
7	3	1	1	3	1	1	3
8	6	1	2	3	2	1	6
9	3	1	1	3	1	1	3
10	30	5	10	15	10	5	30";
const NC_325_D30: &str = "x	1	2	3	5	6	10	15	30
1	1	1	3	1	3	1	3	3
2	1	2	3	1	6	2	3	6
3	1	1	3	1	3	1	3	3
5	5	5	15	5	15	5	15	15
6	1	2	3	1	6	2	3	6
10	5	10	15	5	30	10	15	30
15	5	5	15	5	15	5	15	15
30	5	10	15	5	30	10	15	30";
const CF_263: &str = "x	0	1	2	3	4	5
0	6	3	6	3	6	3
1	2	1	2	1	2	1
2	2	1	2	1	2	1
3	6	3	6	3	6	3
4	2	1	2	1	2	1
5	2	1	2	1	2	1";
const CF_263_D6: &str = "x	1	2	3	6
1	1	2	1	2
2	1	2	1	2
3	3	6	3	6
6	3	6	3	6";
const PARA_AZ: &str = "a	0	1	2	3	4	5	6	7	8
0	0	2	2	6	4	10	6	14	8
1	4	2	2	2	4	2	2	2	4
2	4	2	2	2	4	2	2	2	4
3	12	2	2	6	4	2	6	2	4
4	4	2	2	2	4	2	2	2	4
5	20	2	2	2	4	10	2	2	4
6	12	2	2	4	6	2	6	2	4
7	28	2	2	2	4	2	2	14	4";
const PARA_BZ: &str = "b	0	1	2	3	4	5	6	7	8
0	8	8	8	8	8	8	8	8	8
1	4	1	2	1	4	1	2	1	4
2	4	2	2	2	4	2	2	2	4
3	4	1	2	1	4	1	2	1	4
4	4	4	4	4	4	4	4	4	4
5	4	1	2	1	4	1	2	1	4
6	4	2	2	2	4	2	2	2	4
7	4	1	2	1	4	1	2	1	4
8	8	8	8	8	8	8	8	8	8";

type Grid = Vec<Vec<u64>>;

fn parse_grid(text: &str, sep: char) -> Result<Grid, String> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let cells: Vec<&str> = if sep == ' ' {
                line.split_whitespace().collect()
            } else {
                line.split(sep).collect()
            };
            cells[1..]
                .iter()
                .map(|c| c.trim().parse::<u64>().map_err(|err| format!("{c:?}: {err}")))
                .collect()
        })
        .collect()
}

fn cli_grid(args: &[&str]) -> Result<Grid, String> {
    let (code, out) = hexad(args);
    ensure(code == 0, format!("{args:?} exited {code}"))?;
    parse_grid(&out, ' ')
}

fn diff(printed: &Grid, got: &Grid) -> Vec<(usize, usize, u64, u64)> {
    let mut out = Vec::new();
    if printed.len() != got.len() {
        out.push((usize::MAX, usize::MAX, printed.len() as u64, got.len() as u64));
        return out;
    }
    for (i, (p, g)) in printed.iter().zip(got).enumerate() {
        if p.len() != g.len() {
            out.push((i, usize::MAX, p.len() as u64, g.len() as u64));
            continue;
        }
        for (j, (pv, gv)) in p.iter().zip(g).enumerate() {
            if pv != gv {
                out.push((i, j, *pv, *gv));
            }
        }
    }
    out
}

fn golden_tables() -> Outcome {
    let exact: &[(&str, &str, &[&str])] = &[
        ("intro (3,2,4)", INTRO, &["table", "--triple", "3,2,4", "--rows", "0..4", "--cols", "0..6"]),
        ("(1,2,1)", JOIN_121, &["table", "--triple", "1,2,1", "--rows", "0..2", "--cols", "0..5"]),
        ("(1,8,1) on D(8)", MIN_181, &["divisor-table", "--triple", "1,8,1", "--d", "8"]),
        ("(8,4,2)", PP_842, &["table", "--triple", "8,4,2", "--rows", "0..2", "--cols", "0..8"]),
        ("(8,1,16) on D(16)", PP_8116, &["divisor-table", "--triple", "8,1,16", "--d", "16"]),
        ("(5,1,3)", PQ_513, &["table", "--triple", "5,1,3", "--rows", "0..3", "--cols", "0..5"]),
        ("(5,1,3) on D(15)", PQ_513_D15, &["divisor-table", "--triple", "5,1,3", "--d", "15"]),
        ("(3,2,3)", C_323, &["table", "--triple", "3,2,3", "--rows", "0..6", "--cols", "0..6"]),
        ("(3,2,5)", NC_325, &["table", "--triple", "3,2,5", "--rows", "0..10", "--cols", "0..6"]),
        ("(3,2,5) on D(30)", NC_325_D30, &["divisor-table", "--triple", "3,2,5", "--d", "30"]),
        ("(2,6,3)", CF_263, &["table", "--triple", "2,6,3", "--rows", "0..5", "--cols", "0..5"]),
        ("(2,6,3) on D(6)", CF_263_D6, &["divisor-table", "--triple", "2,6,3", "--d", "6"]),
        ("L(8,2,4,b,z)", PARA_BZ, &["table", "--triple", "8,4,2", "--vertex", "(132)", "--rows", "0..8", "--cols", "0..8"]),
    ];
    let mut checked = 0;
    for (name, printed, args) in exact {
        let d = diff(&parse_grid(printed, '\t')?, &cli_grid(args)?);
        ensure(d.is_empty(), format!("{name}: {d:?}"))?;
        checked += 1;
    }
    let printed = parse_grid(PARA_AZ, '\t')?;
    let got = cli_grid(&["table", "--triple", "8,4,2", "--vertex", "(12)", "--rows", "0..7", "--cols", "0..8"])?;
    // grid row 0 is the header, so a=6 is row 7
    let d = diff(&printed, &got);
    ensure(
        d == vec![(7, 3, 4, 6), (7, 4, 6, 4)],
        format!("L(8,a,4,2,z): unexpected differences {d:?}"),
    )?;
    Ok(format!(
        "{} tables exact; L(8,a,4,2,z) exact except (a,z)=(6,3),(6,4): printed 4,6, evaluated 6,4",
        checked
    ))
}

fn counter_models() -> Outcome {
    let m3 = FiniteTable::m3();
    let (u, v, w) = (1usize, 2, 3);
    let q = Quintuple::new(u, w, v, w, u);
    let (l, up) = (eval_l(&m3, &q).map_err(e)?, eval_u(&m3, &q).map_err(e)?);
    ensure((l, up) == (0, 4), format!("M3: L={l} U={up}"))?;
    let n5 = FiniteTable::n5();
    for x in 0..5 {
        let q = Quintuple::new(x, u, u, w, v);
        let (l, up) = (eval_l(&n5, &q).map_err(e)?, eval_u(&n5, &q).map_err(e)?);
        ensure(!n5.leq(&l, &up).map_err(e)?, format!("N5: L <= U at x={x}"))?;
    }
    let (code, out) = hexad(&["check", "distributive", "--lattice", "M3"]);
    ensure(code == 1 && out.contains("L=0 U=1"), format!("cli: exit {code}, {out:?}"))?;
    Ok("M3 (u,w,v,w,u): L=0 U=1; N5 (x,u,u,w,v): L !<= U for all 5 x".into())
}

fn exhaustive_equality() -> Outcome {
    let opts = CheckOptions::default();
    let mut parts = Vec::new();
    let chain = Chain::of_len(6).map_err(e)?;
    let r = check_lu_equality(&chain, &finite_carrier(&chain).map_err(e)?, &opts).map_err(e)?;
    ensure(r.holds() && r.evaluations == 7_776, format!("chain: {r:?}"))?;
    parts.push(format!("chain6 {}", r.evaluations));
    for n in [3, 4] {
        let p = PowerSet::new(n).map_err(e)?;
        let r = check_lu_equality(&p, &finite_carrier(&p).map_err(e)?, &opts).map_err(e)?;
        ensure(r.holds() && r.evaluations == (1u64 << n).pow(5), format!("P({n}): {r:?}"))?;
        parts.push(format!("P({n}) {}", r.evaluations));
    }
    let d = DivisorInterval::new(1, 360).map_err(e)?;
    let r = check_lu_equality(&d, &finite_carrier(&d).map_err(e)?, &opts).map_err(e)?;
    ensure(r.holds() && r.evaluations == 24u64.pow(5), format!("D(360): {r:?}"))?;
    parts.push(format!("[1,360] {}", r.evaluations));
    let r = check_lu_equality(&Arithmetic, &Carrier::window(0, 1_000_000), &opts).map_err(e)?;
    ensure(r.holds() && r.evaluations == 10_000, format!("arithmetic: {r:?}"))?;
    parts.push(format!("arithmetic {}", r.mode));
    Ok(parts.join(", "))
}

fn grassmannian_inclusion() -> Outcome {
    let opts = CheckOptions::default();
    let mut parts = Vec::new();
    for (d, size) in [(2usize, 5u64), (3, 16)] {
        let g = Grassmannian::new(2, d).map_err(e)?;
        let c = finite_carrier(&g).map_err(e)?;
        ensure(c.len() == size, format!("GF(2)^{d} has {} subspaces", c.len()))?;
        let r = check_lu_inclusion(&g, &c, &opts).map_err(e)?;
        ensure(r.holds() && r.evaluations == size.pow(5), format!("GF(2)^{d}: {r:?}"))?;
        parts.push(format!("GF(2)^{d} {}", r.evaluations));
    }
    let g = Grassmannian::new(2, 2).map_err(e)?;
    let r = check_lu_equality(&g, &finite_carrier(&g).map_err(e)?, &opts).map_err(e)?;
    let w = r.counterexample.ok_or("no strict witness in GF(2)^2")?;
    ensure(g.leq(&w.l, &w.u).map_err(e)? && w.l != w.u, "witness is not strict")?;
    parts.push(format!("strict L < U at {}", hexad::lattice::format_quintuple(&g, &w.q)));
    Ok(parts.join(", "))
}

const TRIPLES: [(u64, u64, u64); 7] = [(3, 2, 4), (3, 2, 3), (3, 2, 5), (2, 6, 3), (8, 4, 2), (8, 1, 16), (5, 1, 3)];

fn semigroup_laws() -> Outcome {
    let opts = CheckOptions::default();
    for (a, y, b) in TRIPLES {
        let t = quotient_table(a, y, b).map_err(e)?;
        ensure(t.rows().len() <= 30, format!("({a},{y},{b}) carrier too large"))?;
        let assoc = t.check_associative(&opts).map_err(e)?;
        let band = t.check_weak_band(&opts).map_err(e)?;
        ensure(t.check_closed().map_err(e)?.holds(), format!("({a},{y},{b}) not closed"))?;
        ensure(assoc.holds(), format!("({a},{y},{b}) assoc {:?}", assoc.counterexample))?;
        ensure(band.holds(), format!("({a},{y},{b}) band {:?}", band.counterexample))?;
    }
    let dom = Carrier::window(0, 8);
    for v in Vertex::ALL {
        let spec = ProductSpec::new(Arithmetic, v, [8, 4, 2]);
        let assoc = check_associativity(&spec, &dom, &opts).map_err(e)?;
        let band = check_weak_band(&spec, &dom, &opts).map_err(e)?;
        ensure(assoc.holds() && assoc.evaluations == 729, format!("{v}: {assoc:?}"))?;
        ensure(band.holds(), format!("{v}: {band:?}"))?;
    }
    Ok("7 quotient semigroups associative and weak band; 6 vertices of (8,4,2) on [0,9)^3".into())
}

fn periodicity() -> Outcome {
    let opts = CheckOptions::default();
    for (a, y, b) in TRIPLES {
        let p = arithmetic::periods(a, y, b).map_err(e)?;
        let r = arithmetic::check_periodicity(a, y, b, 2 * p.big_n, &opts).map_err(e)?;
        ensure(
            r.holds() && r.evaluations == (2 * p.big_n).pow(2),
            format!("({a},{y},{b}): {:?}", r.counterexample),
        )?;
    }
    let e324 = effective_periods(3, 2, 4).map_err(e)?;
    let e325 = effective_periods(3, 2, 5).map_err(e)?;
    ensure(e324 == (4, 3), format!("(3,2,4) effective {e324:?}"))?;
    ensure(e325 == (10, 6), format!("(3,2,5) effective {e325:?}"))?;
    Ok("n/m-periodic on [0,2N)^2 for 7 triples; effective (4,3) and (10,6)".into())
}

fn conjugation() -> Outcome {
    let opts = CheckOptions::default();
    let mut parts = Vec::new();
    for (a, y, b) in [(3, 2, 4), (2, 6, 3), (8, 4, 2)] {
        let r = check_conjugation_iso(a, y, b, &opts).map_err(e)?;
        ensure(r.holds(), format!("({a},{y},{b}): {:?}", r.counterexample))?;
        let c = arithmetic::conjugate_triple(a, y, b).map_err(e)?;
        parts.push(format!("({a},{y},{b})->{c:?}"));
    }
    Ok(parts.join(" "))
}

// x a y b z | L-list | L | U-list | L5 U5, as printed (grouped by region)
const PRINTED_ROWS: &str = "
11111 1111 1 1111 11
11110 1011 1 1111 11
01111 1101 1 1111 11
01110 1001 1 1111 01
00000 0000 0 0000 00
00001 0000 0 0010 00
10000 0000 0 0100 00
10001 0000 0 0110 01
00010 0000 0 0001 00
00011 1100 1 1111 11
10010 0000 0 0101 00
10011 1100 1 1111 11
00110 0000 0 0101 00
00111 1100 1 1111 11
10110 0000 0 0101 00
10111 1100 1 1111 11
01000 0000 0 1000 00
01001 0000 0 1010 00
11000 0011 1 1111 11
11001 0011 1 1111 11
01100 0000 0 1000 00
01101 0000 0 1010 00
11100 0011 1 1111 11
11101 0111 1 1111 11
01010 0000 0 1001 01
01011 1100 1 1111 11
11010 0011 1 1111 11
11011 1111 1 1111 11
00100 0000 0 0000 00
00101 0000 0 1010 00
10100 0000 0 0101 00
10101 0110 1 1111 01";

fn truth_tables() -> Outcome {
    let bits = |s: &str| -> Vec<u8> { s.bytes().map(|c| c - b'0').collect() };
    let table = truth_table();
    let mut typos = Vec::new();
    let mut n = 0;
    for line in PRINTED_ROWS.lines().filter(|l| !l.is_empty()) {
        let f: Vec<&str> = line.split(' ').collect();
        let key: [u8; 5] = bits(f[0]).try_into().unwrap();
        let row = table.iter().find(|r| r.bits == key).ok_or("missing row")?;
        let (ll, l, ul, lu5) = (bits(f[1]), bits(f[2])[0], bits(f[3]), bits(f[4]));
        ensure(row.l == l && row.u == l, format!("{}: L/U", f[0]))?;
        ensure([row.l5, row.u5] == lu5[..], format!("{}: L5/U5", f[0]))?;
        if row.l_list[..] != ll[..] {
            typos.push(format!("{} L-list printed {} evaluated {:?}", f[0], f[1], row.l_list));
        }
        if row.u_list[..] != ul[..] {
            typos.push(format!("{} U-list printed {} evaluated {:?}", f[0], f[3], row.u_list));
        }
        n += 1;
    }
    ensure(n == 32, "expected 32 printed rows")?;
    ensure(
        typos.len() == 2 && typos[0].starts_with("10111 L-list") && typos[1].starts_with("01100 U-list"),
        format!("unexpected list mismatches {typos:?}"),
    )?;
    let count = |f: &dyn Fn(&TruthRow) -> bool| table.iter().filter(|r| f(r)).count();
    ensure(count(&|r| r.l == r.u) == 32, "L = U count")?;
    ensure(count(&|r| r.l != r.majority()) == 4, "majority violations")?;
    ensure(count(&|r| r.l == r.l23()) == 31 && count(&|r| r.u == r.u14()) == 31, "L23/U14 counts")?;
    ensure(count(&|r| r.l == r.l5) == 30 && count(&|r| r.u == r.u5) == 30, "L5/U5 counts")?;
    Ok(format!(
        "32 rows; L, U, L5, U5 exact; L=U 32/32; majority violated in 4; printed list typos: {}",
        typos.join("; ")
    ))
}

fn region_decomposition() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(hexad::search::DEFAULT_SEED);
    for _ in 0..1_000 {
        let n = rng.gen_range(1..=12u32);
        let m = PowerSet::new(n).map_err(e)?;
        let mask = m.full();
        let [x, a, y, b, z] = std::array::from_fn(|_| rng.gen::<u64>() & mask);
        let direct = eval_l(&m, &Quintuple::new(x, a, y, b, z)).map_err(e)?;
        ensure(
            product_via_partition(&m, a, y, b, x, z).map_err(e)? == direct,
            format!("|M|={n} {:?}", (x, a, y, b, z)),
        )?;
    }
    let one = PowerSet::new(1).map_err(e)?;
    for i in 0..32u64 {
        let [x, a, y, b, z] = std::array::from_fn(|k| i >> k & 1);
        ensure(boolean::decomposition_agrees(&one, [x, a, y, b, z]).map_err(e)?, format!("|M|=1 {i:05b}"))?;
    }
    Ok("1000 seeded instances with |M| <= 12, all 32 for |M| = 1".into())
}

fn chain_closed_forms() -> Outcome {
    let c = Chain::of_len(5).map_err(e)?;
    let elems = c.enumerate().map_err(e)?;
    ensure(elems.len() == 5, "5-chain")?;
    let mut matched = 0;
    let mut cases = [0u32; 8];
    for i in 0..3125usize {
        let q = Quintuple::from_array(std::array::from_fn(|k| elems[i / 5usize.pow(4 - k as u32) % 5]));
        let l = eval_l(&c, &q).map_err(e)?;
        ensure(l == eval_u(&c, &q).map_err(e)?, format!("L != U at {q:?}"))?;
        if let Some((v, case)) = eval_chain_closed_in(&c, &q).map_err(e)? {
            ensure(v == l, format!("case {case} at {q:?}: {v} vs {l}"))?;
            matched += 1;
            cases[case as usize - 1] += 1;
        }
    }
    ensure(matched == 3125, format!("only {matched} quintuples matched a case"))?;
    Ok(format!("3125 quintuples, per-case hits {cases:?}"))
}

fn torsor_laws() -> Outcome {
    let opts = CheckOptions::default();
    let m = PowerSet::new(2).map_err(e)?;
    let dom = Carrier::listed(m.enumerate().map_err(e)?);
    for a in 0..4u64 {
        for b in 0..4u64 {
            let r = check_torsor_laws(&TernarySpec::new(m, a, b), &dom, &opts).map_err(e)?;
            ensure(r.holds() && r.evaluations == 1024 + 64, format!("P(2) a={a} b={b}: {r:?}"))?;
        }
    }
    let sampled = CheckOptions::default().with_budget(1).with_samples(hexad::search::DEFAULT_SEED, 1_000);
    let r = check_torsor_laws(&TernarySpec::new(Arithmetic, 3, 4), &Carrier::window(0, 1_000_000), &sampled)
        .map_err(e)?;
    ensure(r.holds() && r.evaluations == 2_000, format!("arithmetic: {r:?}"))?;
    Ok(format!("P(2) all 16 pairs exhaustive; (a,b)=(3,4) {}", r.mode))
}

fn corrected_periodicity() -> Outcome {
    let one = PowerSet::new(1).map_err(e)?;
    let fixture = [0, 1, 1, 0, 0];
    ensure(
        !boolean::periodicity_holds(&one, PeriodicityForm::Literal, fixture).map_err(e)?,
        "literal form holds on the fixture",
    )?;
    ensure(
        boolean::periodicity_holds(&one, PeriodicityForm::Corrected, fixture).map_err(e)?,
        "corrected form fails on the fixture",
    )?;
    let m = PowerSet::new(8).map_err(e)?;
    let sampled = CheckOptions::default().with_budget(1).with_samples(hexad::search::DEFAULT_SEED, 1_000);
    let r = boolean::check_periodicity(&m, PeriodicityForm::Corrected, &sampled).map_err(e)?;
    ensure(r.holds() && r.evaluations == 1_000, format!("{r:?}"))?;
    Ok(format!(
        "literal form fails at (x,a,y,b,z)={fixture:?}; corrected form holds, {}",
        r.mode
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("bounds reproduction", bounds_reproduction),
        ("golden tables", golden_tables),
        ("counter-models", counter_models),
        ("exhaustive L = U", exhaustive_equality),
        ("Grassmannian L <= U", grassmannian_inclusion),
        ("associativity and weak band", semigroup_laws),
        ("periodicity", periodicity),
        ("conjugation", conjugation),
        ("truth tables", truth_tables),
        ("region decomposition", region_decomposition),
        ("chain closed forms", chain_closed_forms),
        ("torsor laws", torsor_laws),
        ("corrected periodicity", corrected_periodicity),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
