use std::fmt::Write;

use clap::ValueEnum;
use hexad::search::{CheckReport, Mode, Verdict};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// Result of one law check, with the witness already formatted.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub check: String,
    pub lattice: String,
    pub verdict: Verdict,
    pub mode: Mode,
    pub evaluations: u64,
    pub witness: Vec<(String, String)>,
}

impl Outcome {
    pub fn new<W, F>(check: &str, lattice: String, r: CheckReport<W>, fields: F) -> Outcome
    where
        F: FnOnce(W) -> Vec<(String, String)>,
    {
        Outcome {
            check: check.to_string(),
            lattice,
            verdict: r.verdict,
            mode: r.mode,
            evaluations: r.evaluations,
            witness: r.counterexample.map(fields).unwrap_or_default(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    fn verdict_name(&self) -> &'static str {
        match self.verdict {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        }
    }

    fn witness_line(&self) -> String {
        self.witness
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> Value {
        let witness: Map<String, Value> = self
            .witness
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({
            "check": self.check,
            "lattice": self.lattice,
            "verdict": self.verdict_name(),
            "mode": self.mode,
            "evaluations": self.evaluations,
            "counterexample": if self.witness.is_empty() { Value::Null } else { Value::Object(witness) },
        })
    }
}

pub fn render_outcomes(list: &[Outcome], format: Format) -> String {
    match format {
        Format::Json => {
            let checks: Vec<Value> = list.iter().map(Outcome::to_json).collect();
            pretty(json!({ "schemaVersion": SCHEMA_VERSION, "checks": checks }))
        }
        Format::Csv => {
            let mut out = String::from("check,lattice,mode,evaluations,verdict,counterexample\n");
            for o in list {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    csv_cell(&o.check),
                    csv_cell(&o.lattice),
                    csv_cell(&o.mode.to_string()),
                    o.evaluations,
                    o.verdict_name(),
                    csv_cell(&o.witness_line())
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (i, o) in list.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "check: {}", o.check);
                let _ = writeln!(out, "lattice: {}", o.lattice);
                let _ = writeln!(out, "mode: {}", o.mode);
                let _ = writeln!(out, "evaluations: {}", o.evaluations);
                let _ = writeln!(out, "verdict: {}", o.verdict_name());
                if !o.witness.is_empty() {
                    let _ = writeln!(out, "counterexample: {}", o.witness_line());
                }
            }
            out
        }
    }
}

/// Ordered key/value document for the informational subcommands.
pub fn render_fields(fields: &[(&str, Value)], format: Format) -> String {
    let plain = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("schemaVersion".into(), json!(SCHEMA_VERSION));
            for (k, v) in fields {
                m.insert((*k).to_string(), v.clone());
            }
            pretty(Value::Object(m))
        }
        Format::Csv => {
            let mut out = String::from("key,value\n");
            for (k, v) in fields {
                let _ = writeln!(out, "{k},{}", csv_cell(&plain(v)));
            }
            out
        }
        Format::Text => {
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (k, v) in fields {
                let _ = writeln!(out, "{k:<width$}  {}", plain(v));
            }
            out
        }
    }
}

pub fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
