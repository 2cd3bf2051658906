use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hexad::arithmetic::{self, CayleyTable};
use hexad::boolean::{self, RegionLabel};
use hexad::lattice::{join_all, meet_all, Element, LatticeDescriptor, PowerSet};
use hexad::products::{self, ProductSpec};
use hexad::quintary::{l_list, u_list};
use hexad::search::{DEFAULT_BUDGET, DEFAULT_SAMPLES, DEFAULT_SEED};
use hexad::{CheckOptions, Error, Lattice, Quintuple, Result, Vertex};
use serde_json::{json, Value};

mod args;
mod check;
mod report;

use args::{carrier, parse_elements, parse_triple, parse_values, parse_values_arg, Values};
use report::{render_fields, render_outcomes, Format, Outcome};

#[derive(Debug, Parser)]
#[command(
    name = "hexad",
    version,
    about = "Quintary lattice terms L and U, their hexad products, and arithmetic semigroups"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// L-list, L, U-list and U of one quintuple
    Bounds {
        x: String,
        a: String,
        y: String,
        b: String,
        z: String,
        #[arg(long, default_value = "arithmetic")]
        lattice: String,
    },
    /// Multiplication table on a window (rows x, columns z)
    Table {
        /// a,y,b; for other vertices the fixed data f1,y,f2
        #[arg(long, value_parser = parse_triple)]
        triple: [u64; 3],
        /// LO..HI inclusive or a list; defaults to 0..n
        #[arg(long, value_parser = parse_values_arg)]
        rows: Option<Values>,
        /// LO..HI inclusive or a list; defaults to 0..m
        #[arg(long, value_parser = parse_values_arg)]
        cols: Option<Values>,
        #[arg(long, default_value = "e")]
        vertex: Vertex,
    },
    /// The product on Z/NZ
    Quotient {
        #[arg(long, value_parser = parse_triple)]
        triple: [u64; 3],
    },
    /// The product on the divisors of D
    DivisorTable {
        #[arg(long, value_parser = parse_triple)]
        triple: [u64; 3],
        #[arg(long = "d")]
        d: u64,
    },
    /// Periods, effective periods, corners and the range check
    Periods {
        #[arg(long, value_parser = parse_triple)]
        triple: [u64; 3],
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
    },
    /// Conjugate product and the conjugation isomorphism
    Conjugate {
        #[arg(long, value_parser = parse_triple)]
        triple: [u64; 3],
    },
    /// The six products sharing fixed data, with law checks
    Hexad {
        /// fixed data f1,y,f2
        #[arg(long)]
        triple: String,
        #[arg(long, default_value = "arithmetic")]
        lattice: String,
        /// carrier for infinite lattices, LO..HI inclusive
        #[arg(long, default_value = "0..8")]
        window: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Check a law exhaustively, or by seeded sampling past the budget
    Check(check::CheckArgs),
    /// Region of each point of a power set for fixed a, y, b
    Regions {
        /// size of the underlying set
        #[arg(long)]
        universe: u32,
        #[arg(long)]
        a: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        b: String,
    },
    /// All 32 membership patterns with L_i, U_i, L5, U5 and region
    TruthTable,
}

enum Output {
    Done(String),
    Checked(String, bool),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let (text, ok) = match out {
                Output::Done(t) => (t, true),
                Output::Checked(t, ok) => (t, ok),
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let f = cli.format;
    match &cli.command {
        Command::Bounds { x, a, y, b, z, lattice } => {
            let lat = LatticeDescriptor::parse(lattice)?;
            let q = [x, a, y, b, z]
                .map(|s| lat.parse_element(s))
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
            let q = Quintuple::from_array(<[Element; 5]>::try_from(q).expect("five elements"));
            bounds(&lat, &q, f).map(Output::Done)
        }
        Command::Table { triple, rows, cols, vertex } => {
            let p = arithmetic::periods(triple[0], triple[1], triple[2])?;
            let default = |period: u64| -> Result<Vec<u64>> {
                if period == 0 {
                    return Err(Error::InvalidSpec("period is 0; pass --rows and --cols".into()));
                }
                Ok((0..=period).collect())
            };
            let rows = match rows {
                Some(r) => r.0.clone(),
                None => default(p.n)?,
            };
            let cols = match cols {
                Some(c) => c.0.clone(),
                None => default(p.m)?,
            };
            let t = arithmetic::build_vertex_table(*vertex, *triple, &rows, &cols)?;
            Ok(Output::Done(table(&t, f)))
        }
        Command::Quotient { triple: [a, y, b] } => {
            let t = arithmetic::quotient_table(*a, *y, *b)?;
            Ok(Output::Done(table(&t, f)))
        }
        Command::DivisorTable { triple: [a, y, b], d } => {
            let t = arithmetic::divisor_table(*a, *y, *b, *d)?;
            Ok(Output::Done(table(&t, f)))
        }
        Command::Periods { triple: [a, y, b], seed, samples } => periods(*a, *y, *b, *seed, *samples, f),
        Command::Conjugate { triple: [a, y, b] } => conjugate(*a, *y, *b, f),
        Command::Hexad { triple, lattice, window, budget, seed } => {
            let lat = LatticeDescriptor::parse(lattice)?;
            let window = parse_values(window).map_err(Error::InvalidSpec)?;
            let opts = CheckOptions {
                budget: *budget,
                seed: *seed,
                ..CheckOptions::default()
            };
            hexad(&lat, triple, &window, &opts, f)
        }
        Command::Check(args) => {
            let o = check::run(args)?;
            let ok = o.holds();
            Ok(Output::Checked(render_outcomes(&[o], f), ok))
        }
        Command::Regions { universe, a, y, b } => {
            let lat = LatticeDescriptor::parse(&format!("powerset:{universe}"))?;
            let m = PowerSet::new(*universe)?;
            let set = |s: &str| match lat.parse_element(s)? {
                Element::Set(v) => Ok(v),
                other => Err(Error::NotAnElement(format!("{other:?}"))),
            };
            regions(&m, set(a)?, set(y)?, set(b)?, f).map(Output::Done)
        }
        Command::TruthTable => {
            let rows = boolean::truth_table();
            let text = match f {
                Format::Text => boolean::render_truth_text(&rows),
                Format::Csv => boolean::render_truth_csv(&rows),
                Format::Json => report::pretty(json!({
                    "schemaVersion": report::SCHEMA_VERSION,
                    "rows": rows,
                })),
            };
            Ok(Output::Done(text))
        }
    }
}

fn elem_json(lat: &LatticeDescriptor, e: &Element) -> Value {
    match e {
        Element::Natural(v) | Element::Divisor(v) => json!(v),
        Element::Integer(v) => json!(v),
        _ => json!(lat.format(e)),
    }
}

fn bounds(lat: &LatticeDescriptor, q: &Quintuple<Element>, f: Format) -> Result<String> {
    let ls = l_list(lat, q)?;
    let us = u_list(lat, q)?;
    let l = join_all(lat, &ls.iter().collect::<Vec<_>>())?;
    let u = meet_all(lat, &us.iter().collect::<Vec<_>>())?;
    let list = |v: &[Element; 4]| {
        let items: Vec<String> = v.iter().map(|e| lat.format(e)).collect();
        format!("[{}]", items.join(", "))
    };
    Ok(match f {
        Format::Text => format!(
            "{} / {} / {} / {}\n",
            list(&ls),
            lat.format(&l),
            list(&us),
            lat.format(&u)
        ),
        Format::Csv => {
            let cells: Vec<String> = ls
                .iter()
                .chain(std::iter::once(&l))
                .chain(&us)
                .chain(std::iter::once(&u))
                .map(|e| lat.format(e))
                .collect();
            format!("L1,L2,L3,L4,L,U1,U2,U3,U4,U\n{}\n", cells.join(","))
        }
        Format::Json => report::pretty(json!({
            "schemaVersion": report::SCHEMA_VERSION,
            "lattice": lat.name(),
            "lList": ls.iter().map(|e| elem_json(lat, e)).collect::<Vec<_>>(),
            "L": elem_json(lat, &l),
            "uList": us.iter().map(|e| elem_json(lat, e)).collect::<Vec<_>>(),
            "U": elem_json(lat, &u),
        })),
    })
}

fn table(t: &CayleyTable, f: Format) -> String {
    match f {
        Format::Text => t.render_text(),
        Format::Csv => t.render_csv(),
        Format::Json => {
            let mut s = t.render_json();
            s.push('\n');
            s
        }
    }
}

fn periods(a: u64, y: u64, b: u64, seed: u64, samples: u64, f: Format) -> Result<Output> {
    let p = arithmetic::periods(a, y, b)?;
    let (px, pz) = arithmetic::effective_periods(a, y, b)?;
    let c = arithmetic::corners(a, y, b)?;
    let r = arithmetic::range_check(a, y, b, samples, seed)?;
    let ok = r.holds();
    let mut fields = vec![
        ("triple", json!(format!("({a},{y},{b})"))),
        ("n", json!(p.n)),
        ("m", json!(p.m)),
        ("N", json!(p.big_n)),
        ("K", json!(p.k)),
        ("effective", json!(format!("{px} {pz}"))),
        ("corners", json!(format!("{} {} {} {}", c[0], c[1], c[2], c[3]))),
        ("range", json!(format!("{} ({}, {} evaluations)", verdict(ok), r.mode, r.evaluations))),
    ];
    if let Some((x, z, v)) = r.counterexample {
        fields.push(("counterexample", json!(format!("{x} * {z} = {v}"))));
    }
    Ok(Output::Checked(render_fields(&fields, f), ok))
}

fn conjugate(a: u64, y: u64, b: u64, f: Format) -> Result<Output> {
    let p = arithmetic::periods(a, y, b)?;
    let (ca, cy, cb) = arithmetic::conjugate_triple(a, y, b)?;
    let kn = p.k * p.big_n;
    let r = arithmetic::check_conjugation_iso(a, y, b, &CheckOptions::default())?;
    let ok = r.holds();
    let mut fields = vec![
        ("triple", json!(format!("({a},{y},{b})"))),
        ("K", json!(p.k)),
        ("N", json!(p.big_n)),
        ("conjugate", json!(format!("({ca},{cy},{cb})"))),
        ("gamma", json!(format!("d -> {kn}/d"))),
        ("iso", json!(format!("{} ({}, {} evaluations)", verdict(ok), r.mode, r.evaluations))),
    ];
    if let Some((u, v)) = r.counterexample {
        fields.push(("counterexample", json!(format!("u={u} v={v}"))));
    }
    Ok(Output::Checked(render_fields(&fields, f), ok))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

fn hexad(
    lat: &LatticeDescriptor,
    triple: &str,
    window: &[u64],
    opts: &CheckOptions,
    f: Format,
) -> Result<Output> {
    let fixed = parse_elements::<3>(lat, triple)?;
    let dom = carrier(lat, Some(window))?;
    let base = ProductSpec::new(lat.clone(), Vertex::E, fixed);
    let mut outcomes = Vec::new();
    let mut rows = Vec::new();
    for spec in base.hexad() {
        let assoc = products::check_associativity(&spec, &dom, opts)?;
        let band = products::check_weak_band(&spec, &dom, opts)?;
        let bt = spec.bottom_top()?;
        rows.push((spec.to_string(), spec.vertex().opposite(), bt, assoc.holds(), band.holds()));
        let fmt3 = |w: [Element; 3]| {
            ["u", "v", "w"]
                .iter()
                .zip(&w)
                .map(|(n, e)| (n.to_string(), lat.format(e)))
                .collect()
        };
        let fmt2 = |w: [Element; 2]| {
            ["u", "v"]
                .iter()
                .zip(&w)
                .map(|(n, e)| (n.to_string(), lat.format(e)))
                .collect()
        };
        outcomes.push(Outcome::new(&format!("associativity of {spec}"), lat.name(), assoc, fmt3));
        outcomes.push(Outcome::new(&format!("weak band of {spec}"), lat.name(), band, fmt2));
    }
    let ok = outcomes.iter().all(Outcome::holds);
    let text = match f {
        Format::Text => {
            let mut out = String::new();
            for (desc, opp, bt, assoc, band) in &rows {
                let bt = match bt {
                    Some((lo, hi)) => format!("bottom {} top {}", lat.format(lo), lat.format(hi)),
                    None => "unbounded".to_string(),
                };
                out.push_str(&format!(
                    "{desc:<34} opposite {:<5} {bt:<18} assoc {} band {}\n",
                    opp.label(),
                    verdict(*assoc),
                    verdict(*band)
                ));
            }
            out
        }
        Format::Csv | Format::Json => render_outcomes(&outcomes, f),
    };
    Ok(Output::Checked(text, ok))
}

fn regions(m: &PowerSet, a: u64, y: u64, b: u64, f: Format) -> Result<String> {
    let p = boolean::partition(m, a, y, b)?;
    Ok(match f {
        Format::Text => {
            let mut out = p.render_text();
            for label in RegionLabel::ALL {
                let set = p.region(label);
                out.push_str(&format!(
                    "{:<5} {:<7} {}\n",
                    label.name(),
                    label.connector().name(),
                    m.format(&set)
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("point,region,connector\n");
            for (i, l) in p.labels.iter().enumerate() {
                out.push_str(&format!("{i},{},{}\n", l.name(), l.connector().name()));
            }
            out
        }
        Format::Json => report::pretty(json!({
            "schemaVersion": report::SCHEMA_VERSION,
            "universe": p.universe,
            "labels": p.labels,
        })),
    })
}
