use clap::{Args, ValueEnum};
use hexad::arithmetic;
use hexad::boolean::{self, PeriodicityForm};
use hexad::identities::{self, LuWitness};
use hexad::lattice::{format_quintuple, Element, LatticeDescriptor};
use hexad::products::{self, ProductSpec, TernarySpec};
use hexad::search::{DEFAULT_BUDGET, DEFAULT_SAMPLES, DEFAULT_SEED};
use hexad::{CheckOptions, Error, Exec, Lattice, Result, Vertex};

use crate::args::{carrier, parse_elements, parse_triple, parse_values};
use crate::report::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Law {
    /// L = U on every quintuple
    Distributive,
    /// L <= U on every quintuple
    Inclusion,
    Modular,
    Median,
    /// associativity of a hexad product (needs --triple)
    Assoc,
    /// weak band law of a hexad product (needs --triple)
    Band,
    /// para-associativity and middle idempotency (needs --pair)
    Torsor,
    /// relations between the L5/U5 terms
    Cube,
    /// transport of L and U by the built-in anti-automorphism
    Antitone,
    /// x- and z-periodicity of a principal product
    Periodicity,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub law: Law,
    /// arithmetic, chain, chain:N, M3, N5, powerset:N, divisors:K:N, fincof,
    /// gf:P:D, or a JSON table file
    #[arg(long, default_value = "arithmetic")]
    pub lattice: String,
    /// carrier for infinite lattices, LO..HI inclusive
    #[arg(long)]
    pub window: Option<String>,
    /// fixed data (f1,y,f2) of a hexad product; (a,y,b) for periodicity
    #[arg(long)]
    pub triple: Option<String>,
    #[arg(long, default_value = "e")]
    pub vertex: Vertex,
    /// fixed (a,b) of the ternary product
    #[arg(long)]
    pub pair: Option<String>,
    /// check the periodicity form with a^y in x and b^y in z
    #[arg(long)]
    pub literal: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: u64,
    #[arg(long)]
    pub sequential: bool,
}

impl CheckArgs {
    fn opts(&self) -> CheckOptions {
        CheckOptions {
            budget: self.budget,
            seed: self.seed,
            samples: self.samples,
            exec: if self.sequential {
                Exec::Sequential
            } else {
                Exec::Parallel
            },
        }
    }
}

fn required<'a>(v: &'a Option<String>, flag: &str, law: Law) -> Result<&'a str> {
    v.as_deref()
        .ok_or_else(|| Error::InvalidSpec(format!("check {law:?} needs {flag}").to_lowercase()))
}

fn named(lat: &LatticeDescriptor, names: &[&str], items: &[Element]) -> Vec<(String, String)> {
    names
        .iter()
        .zip(items)
        .map(|(n, e)| (n.to_string(), lat.format(e)))
        .collect()
}

fn lu_fields(lat: &LatticeDescriptor, w: LuWitness<Element>) -> Vec<(String, String)> {
    let mut out = named(lat, &["x", "a", "y", "b", "z"], &w.q.into_array());
    out.push(("L".into(), lat.format(&w.l)));
    out.push(("U".into(), lat.format(&w.u)));
    out
}

pub fn run(args: &CheckArgs) -> Result<Outcome> {
    let lat = LatticeDescriptor::parse(&args.lattice)?;
    let opts = args.opts();
    let window = args
        .window
        .as_deref()
        .map(parse_values)
        .transpose()
        .map_err(Error::InvalidSpec)?;
    let name = lat.name();
    let law = args.law;
    if law == Law::Periodicity {
        return periodicity(args, &lat, window.as_deref(), &opts);
    }
    let dom = carrier(&lat, window.as_deref())?;
    let outcome = match law {
        Law::Distributive => {
            let r = identities::check_lu_equality(&lat, &dom, &opts)?;
            Outcome::new("distributive (L = U)", name, r, |w| lu_fields(&lat, w))
        }
        Law::Inclusion => {
            let r = identities::check_lu_inclusion(&lat, &dom, &opts)?;
            Outcome::new("inclusion (L <= U)", name, r, |w| lu_fields(&lat, w))
        }
        Law::Modular => {
            let r = identities::check_modular_law(&lat, &dom, &opts)?;
            Outcome::new("modular law", name, r, |w| named(&lat, &["u", "v", "w"], &w))
        }
        Law::Median => {
            let r = identities::check_median_law(&lat, &dom, &opts)?;
            Outcome::new("median law", name, r, |w| named(&lat, &["x", "y", "z"], &w))
        }
        Law::Assoc | Law::Band => {
            let fixed = parse_elements::<3>(&lat, required(&args.triple, "--triple", law)?)?;
            let spec = ProductSpec::new(lat.clone(), args.vertex, fixed);
            let title = format!(
                "{} of {spec}",
                if law == Law::Assoc { "associativity" } else { "weak band" }
            );
            if law == Law::Assoc {
                let r = products::check_associativity(&spec, &dom, &opts)?;
                Outcome::new(&title, name, r, |w| named(&lat, &["u", "v", "w"], &w))
            } else {
                let r = products::check_weak_band(&spec, &dom, &opts)?;
                Outcome::new(&title, name, r, |w| named(&lat, &["u", "v"], &w))
            }
        }
        Law::Torsor => {
            let [a, b] = parse_elements::<2>(&lat, required(&args.pair, "--pair", law)?)?;
            let title = format!("torsor laws of (xyz) with a={} b={}", lat.format(&a), lat.format(&b));
            let t = TernarySpec::new(lat.clone(), a, b);
            let r = products::check_torsor_laws(&t, &dom, &opts)?;
            Outcome::new(&title, name, r, |w| {
                let names: &[&str] = if w.args.len() == 5 {
                    &["x", "x'", "y", "z'", "z"]
                } else {
                    &["x", "y", "z"]
                };
                let mut out = vec![("law".to_string(), w.law.to_string())];
                out.extend(named(&lat, names, &w.args));
                out
            })
        }
        Law::Cube => {
            let r = identities::check_cube(&lat, &dom, &opts)?;
            Outcome::new("L5/U5 cube", name, r, |w| {
                let mut out = vec![("relation".to_string(), w.relation)];
                out.extend(named(&lat, &["x", "a", "b", "z"], &w.args));
                out
            })
        }
        Law::Antitone => {
            let phi = identities::builtin_antitone(&lat).ok_or_else(|| {
                Error::InvalidSpec(format!("{name} has no built-in anti-automorphism"))
            })?;
            let r = identities::transport_antitone(&lat, &phi, &dom, &opts)?;
            Outcome::new("antitone transport", name, r, |q| {
                vec![("q".to_string(), format_quintuple(&lat, &q))]
            })
        }
        Law::Periodicity => unreachable!("handled above"),
    };
    Ok(outcome)
}

fn periodicity(
    args: &CheckArgs,
    lat: &LatticeDescriptor,
    window: Option<&[u64]>,
    opts: &CheckOptions,
) -> Result<Outcome> {
    match lat {
        LatticeDescriptor::PowerSet(m) => {
            let form = if args.literal {
                PeriodicityForm::Literal
            } else {
                PeriodicityForm::Corrected
            };
            let r = boolean::check_periodicity(m, form, opts)?;
            let title = match form {
                PeriodicityForm::Corrected => "periodicity (x by b^y, z by a^y)",
                PeriodicityForm::Literal => "periodicity (x by a^y, z by b^y)",
            };
            Ok(Outcome::new(title, lat.name(), r, |bits| {
                ["x", "a", "y", "b", "z"]
                    .iter()
                    .zip(bits)
                    .map(|(n, s)| (n.to_string(), m.format(&s)))
                    .collect()
            }))
        }
        LatticeDescriptor::Arithmetic(_) => {
            let t = required(&args.triple, "--triple", Law::Periodicity)?;
            let [a, y, b] = parse_triple(t).map_err(Error::InvalidSpec)?;
            let p = arithmetic::periods(a, y, b)?;
            let w = match window {
                Some(w) => w.last().copied().unwrap_or(0) + 1,
                None => 2 * p.big_n,
            };
            let r = arithmetic::check_periodicity(a, y, b, w, opts)?;
            let title = format!("periodicity of ({a},{y},{b}) with n={} m={} on [0,{w})^2", p.n, p.m);
            Ok(Outcome::new(&title, lat.name(), r, |(x, z)| {
                vec![("x".into(), x.to_string()), ("z".into(), z.to_string())]
            }))
        }
        _ => Err(Error::InvalidSpec(
            "periodicity is checked on powerset:N or arithmetic".into(),
        )),
    }
}
