use std::collections::BTreeMap;
use std::fmt::Write;

use orthofermion::ResidualReport;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Machine-readable command result. Every verdict has a residual and a
/// tolerance under the same key; residuals without a verdict are
/// diagnostics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub residuals: BTreeMap<String, f64>,
    pub verdicts: BTreeMap<String, Verdict>,
    pub tolerances: BTreeMap<String, f64>,
    #[serde(default)]
    pub notices: Vec<String>,
    pub payload: Value,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            residuals: BTreeMap::new(),
            verdicts: BTreeMap::new(),
            tolerances: BTreeMap::new(),
            notices: Vec::new(),
            payload: Value::Null,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn absorb(&mut self, prefix: &str, r: &ResidualReport) {
        for (name, check) in r.checks() {
            let key = format!("{prefix}{name}");
            self.residuals.insert(key.clone(), check.residual);
            self.tolerances.insert(key.clone(), check.threshold);
            self.verdicts.insert(key, if check.pass { Verdict::Pass } else { Verdict::Fail });
        }
        for (name, value) in r.diagnostics() {
            self.residuals.insert(format!("{prefix}{name}"), value);
        }
        self.notices.extend(r.notices().iter().cloned());
    }

    pub fn passed(&self) -> bool {
        self.verdicts.values().all(|v| *v == Verdict::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        crate::files::to_json(self)
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let width = self.residuals.keys().map(|k| k.chars().count()).max().unwrap_or(8).max(8);
        if !self.residuals.is_empty() {
            let _ = writeln!(out, "\n{:<width$}  {:>12}  {:>12}  verdict", "identity", "residual", "threshold");
            for (k, r) in &self.residuals {
                let (thr, verdict) = match self.verdicts.get(k) {
                    Some(v) => (format!("{:.3e}", self.tolerances[k]), format!("{v:?}").to_lowercase()),
                    None => ("-".to_string(), "info".to_string()),
                };
                let _ = writeln!(out, "{k:<width$}  {r:>12.3e}  {thr:>12}  {verdict}");
            }
        }
        for n in &self.notices {
            let _ = writeln!(out, "note: {n}");
        }
        if !self.payload.is_null() {
            let _ = writeln!(out, "\n{}", render_payload(&self.payload));
        }
        let _ = writeln!(out, "\nresult: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

fn render_payload(payload: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = payload {
        for (k, v) in map {
            match (k.as_str(), v) {
                ("spectrum", Value::Array(rows)) => {
                    let _ = writeln!(out, "spectrum:\n  {:>12}  {:>12}  {:>8}", "E", "multiplicity", "n_E");
                    for row in rows {
                        let _ = writeln!(
                            out,
                            "  {:>12.6}  {:>12}  {:>8}",
                            row["energy"].as_f64().unwrap_or(f64::NAN),
                            row["multiplicity"].to_string(),
                            row["copies"].to_string()
                        );
                    }
                }
                (_, Value::Array(rows)) if rows.first().is_some_and(Value::is_array) => {
                    let _ = writeln!(out, "{k}:");
                    for row in rows {
                        let cells: Vec<String> = row
                            .as_array()
                            .map(|r| r.iter().map(format_entry).collect())
                            .unwrap_or_default();
                        let _ = writeln!(out, "  [{}]", cells.join(" "));
                    }
                }
                _ => {
                    let _ = writeln!(out, "{k}: {v}");
                }
            }
        }
    } else {
        let _ = writeln!(out, "{payload}");
    }
    out
}

fn format_entry(v: &Value) -> String {
    match v.as_array().map(|a| (a[0].as_f64(), a[1].as_f64())) {
        Some((Some(re), Some(0.0))) => format!("{re:>4}"),
        Some((Some(re), Some(im))) => format!("{re}{im:+}i"),
        _ => v.to_string(),
    }
}
