use std::time::Duration;

use clap::ValueEnum;
use jetlct_core::fporacle::FpCountRecord;
use jetlct_core::lctlab::{LctReport, RulingResult, Verdict};
use jetlct_core::polyring::render_rational;
use jetlct_core::{Polynomial, Rational};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Ordered report fields plus wall-clock timings kept apart from them.
pub struct Doc {
    fields: Map<String, Value>,
    timings: Map<String, Value>,
}

fn rational(q: &Rational) -> Value {
    Value::String(render_rational(q))
}

fn opt_rational(q: Option<&Rational>) -> Value {
    q.map_or(Value::Null, rational)
}

fn millis(d: Duration) -> Value {
    json!((d.as_secs_f64() * 1000.0 * 1000.0).round() / 1000.0)
}

impl Doc {
    pub fn new() -> Self {
        Doc { fields: Map::new(), timings: Map::new() }
    }

    fn set(&mut self, key: &str, v: Value) {
        self.fields.insert(key.to_string(), v);
    }

    pub fn str(&mut self, key: &str, v: &str) {
        self.set(key, json!(v));
    }

    pub fn int(&mut self, key: &str, v: i64) {
        self.set(key, json!(v));
    }

    pub fn opt_int(&mut self, key: &str, v: Option<i64>) {
        self.set(key, v.map_or(Value::Null, |x| json!(x)));
    }

    pub fn str_list(&mut self, key: &str, v: Vec<String>) {
        self.set(key, json!(v));
    }

    pub fn timing(&mut self, key: &str, d: Duration) {
        self.timings.insert(key.to_string(), millis(d));
    }

    pub fn records(&mut self, records: &[FpCountRecord]) {
        let rows: Vec<Value> = records
            .iter()
            .map(|r| {
                json!({
                    "prime": r.prime,
                    "num_vars": r.num_vars,
                    "count": r.count,
                    "log_slope": r.log_slope,
                    "agreed": r.agreed,
                })
            })
            .collect();
        self.set("counts", Value::Array(rows));
    }

    pub fn verdicts(&mut self, key: &str, verdicts: &[Verdict]) {
        self.set(key, verdicts_value(verdicts));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut all = self.fields.clone();
                all.insert("timings".into(), Value::Object(self.timings.clone()));
                let mut s = serde_json::to_string_pretty(&Value::Object(all)).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = String::new();
                for (k, v) in &self.fields {
                    text_field(&mut out, k, v);
                }
                out
            }
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn text_field(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_string()) => {
            out.push_str(&format!("{key}:\n"));
            for item in items {
                match item {
                    Value::Object(m) => {
                        let parts: Vec<String> = m.iter().map(|(k, x)| format!("{k}={}", scalar(x))).collect();
                        out.push_str(&format!("  {}\n", parts.join(" ")));
                    }
                    x => out.push_str(&format!("  {}\n", scalar(x))),
                }
            }
        }
        Value::Object(m) => {
            out.push_str(&format!("{key}:\n"));
            for (k, x) in m {
                out.push_str(&format!("  {k}: {}\n", scalar(x)));
            }
        }
        x => out.push_str(&format!("{key}: {}\n", scalar(x))),
    }
}

fn verdicts_value(verdicts: &[Verdict]) -> Value {
    Value::Array(
        verdicts
            .iter()
            .map(|v| json!({ "check": v.check, "outcome": v.outcome.as_str(), "detail": v.detail }))
            .collect(),
    )
}

fn ruling_value(r: &RulingResult) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("r_prime".into(), json!(r.r_prime));
    m.insert(
        "basis".into(),
        Value::Array(r.basis.iter().map(|v| Value::Array(v.iter().map(rational).collect())).collect()),
    );
    m.insert("complement".into(), json!(r.complement));
    m.insert("reduced_poly".into(), json!(r.reduced_poly.to_string()));
    m
}

pub fn ruling_fields(doc: &mut Doc, r: &RulingResult) {
    for (k, v) in ruling_value(r) {
        doc.set(&k, v);
    }
}

pub fn report_doc(f: &Polynomial, report: &LctReport) -> Doc {
    let mut doc = Doc::new();
    doc.str("input", &f.to_string());
    doc.int("n", report.n as i64);
    doc.int("d", report.d as i64);
    doc.set("homogeneous", json!(report.homogeneous));
    doc.int("r", report.r);
    let rows: Vec<Value> = report
        .dim_table
        .iter()
        .map(|row| {
            json!({
                "m": row.m,
                "dim_jet": row.jet_dim,
                "dim_fiber_origin": row.fiber_dim,
                "budget_exceeded": row.budget_exceeded,
            })
        })
        .collect();
    doc.set("dim_table", Value::Array(rows));
    doc.set("upper_bound", opt_rational(report.upper_bound.as_ref()));
    doc.set("lower_bound", opt_rational(report.lower_bound.as_ref()));
    doc.set("exact", json!(report.exact));
    doc.set("ruling", Value::Object(ruling_value(&report.ruling)));
    doc.verdicts("verdicts", &report.verdicts);
    doc.str_list("notes", report.notes.clone());
    for (m, t) in &report.timings {
        doc.timing(&format!("m{m}_ms"), *t);
    }
    doc
}
