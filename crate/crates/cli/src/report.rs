//! Report assembly and rendering. JSON objects use `serde_json::Map`, which
//! keeps keys sorted, so emitted reports are canonical.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qko_core::arith::{format_fraction, AbelianGroup, Rational};
use qko_core::ktheory::EtaMatrix;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "qko/1";

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        Check {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    /// A check whose pass/fail is decided by the caller.
    pub fn judged(name: impl Into<String>, pass: bool, expected: impl ToString, actual: impl ToString) -> Self {
        Check {
            name: name.into(),
            pass,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let rel = if self.pass { "==" } else { "!=" };
        format!("{verdict} {}: {} {rel} {}", self.name, self.actual, self.expected)
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.pass,
            "expected": self.expected,
            "actual": self.actual,
        })
    }
}

pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
    /// Preformatted body for `--format text`.
    pub text: String,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            params: Map::new(),
            results: Map::new(),
            checks: Vec::new(),
            text: String::new(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "params": Value::Object(self.params.clone()),
            "results": Value::Object(self.results.clone()),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report values are serializable")
    }

    pub fn render_text(&self) -> String {
        let mut out = self.text.clone();
        if !self.checks.is_empty() {
            if !out.is_empty() && !out.ends_with("\n\n") {
                out.push('\n');
            }
            for c in &self.checks {
                out.push_str(&c.line());
                out.push('\n');
            }
            let failed = self.checks.iter().filter(|c| !c.pass).count();
            out.push_str(&format!("{} checks, {failed} failed\n", self.checks.len()));
        }
        out
    }
}

pub fn fraction(r: &Rational) -> Value {
    Value::String(format_fraction(r))
}

pub fn integer(n: &BigInt) -> Value {
    match n.to_u64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

pub fn group(g: &AbelianGroup) -> Value {
    json!({
        "invariant_factors": g.invariant_factors().iter().map(integer).collect::<Vec<_>>(),
        "order": g.order().to_string(),
    })
}

pub fn matrix(m: &EtaMatrix) -> Value {
    let cells = |rows: Vec<Vec<Value>>| Value::Array(rows.into_iter().map(Value::Array).collect());
    json!({
        "row_labels": m.row_labels,
        "col_labels": m.col_labels,
        "mod_2z": cells(m.entries.iter().map(|r| r.iter().map(|x| fraction(x.rep())).collect()).collect()),
        "exact": cells(m.exact.iter().map(|r| r.iter().map(fraction).collect()).collect()),
    })
}

/// Right-aligned table with a header row.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let ncols = header.len();
    let widths: Vec<usize> = (0..ncols)
        .map(|j| {
            rows.iter()
                .map(|r| r[j].chars().count())
                .chain(std::iter::once(header[j].chars().count()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let fmt_row = |r: &[String]| {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(j, (c, &w))| if j == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .collect();
        cells.join("  ").trim_end().to_string()
    };
    let mut out = fmt_row(header);
    out.push('\n');
    for r in rows {
        out.push_str(&fmt_row(r));
        out.push('\n');
    }
    out
}
