//! Experiment reports and their text and JSON renderings.
//!
//! The JSON form is one object with the fields `experiment`, `inputs`,
//! `series`, `tables`, `values`, `verdicts`, `notes` and, only when timing
//! was requested, `timings`. Betti tables are lists of `{i, j, count}`
//! records, series are integer lists. All numbers are exact integers.

use std::fmt::Write as _;

use paramres_core::{BettiTable, SeriesTruncation};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Undecided,
    NotStabilized,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "NOT-APPLICABLE",
            Status::Undecided => "UNDECIDED",
            Status::NotStabilized => "NOT-STABILIZED",
        }
    }
}

/// One side of a comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Integer(i64),
    Flag(bool),
    Series(Vec<u64>),
    Table(Vec<BettiEntry>),
    /// Lengths where `null` stands for infinite.
    Lengths(Vec<Option<u64>>),
    Text(String),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Integer(n) => n.to_string(),
            Value::Flag(b) => b.to_string(),
            Value::Series(s) => format!("[{}]", join(s.iter())),
            Value::Table(t) => format!(
                "{{{}}}",
                t.iter().map(|e| format!("({},{}):{}", e.i, e.j, e.count)).collect::<Vec<_>>().join(" ")
            ),
            Value::Lengths(l) => format!(
                "[{}]",
                l.iter()
                    .map(|x| x.map_or("inf".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            Value::Text(s) => s.clone(),
        }
    }
}

impl From<&SeriesTruncation> for Value {
    fn from(s: &SeriesTruncation) -> Self {
        Value::Series(s.coefficients().to_vec())
    }
}

impl From<&BettiTable> for Value {
    fn from(t: &BettiTable) -> Self {
        Value::Table(betti_entries(t))
    }
}

fn join<T: ToString>(it: impl Iterator<Item = T>) -> String {
    it.map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: i32,
    pub count: usize,
}

pub fn betti_entries(t: &BettiTable) -> Vec<BettiEntry> {
    t.entries().map(|((i, j), count)| BettiEntry { i, j, count }).collect()
}

/// A checked claim with both compared values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub status: Status,
    pub left: Value,
    pub right: Value,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedSeries {
    pub name: String,
    pub coefficients: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedTable {
    pub name: String,
    pub max_index: usize,
    pub entries: Vec<BettiEntry>,
    #[serde(skip)]
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inputs {
    pub ring: String,
    pub characteristic: u32,
    pub variables: Vec<String>,
    pub ideal: Vec<String>,
    pub sop_name: String,
    pub sop: Vec<String>,
    pub cap: usize,
    pub power_max: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub stage: String,
    pub micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub inputs: Inputs,
    pub series: Vec<NamedSeries>,
    pub tables: Vec<NamedTable>,
    pub values: Vec<NamedValue>,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

impl ExperimentReport {
    pub fn new(experiment: &str, inputs: Inputs) -> Self {
        ExperimentReport {
            experiment: experiment.to_string(),
            inputs,
            series: Vec::new(),
            tables: Vec::new(),
            values: Vec::new(),
            verdicts: Vec::new(),
            notes: Vec::new(),
            timings: None,
        }
    }

    pub fn series(&mut self, name: impl Into<String>, s: &SeriesTruncation) {
        self.series.push(NamedSeries {
            name: name.into(),
            coefficients: s.coefficients().to_vec(),
        });
    }

    pub fn table(&mut self, name: impl Into<String>, t: &BettiTable) {
        self.tables.push(NamedTable {
            name: name.into(),
            max_index: t.max_index(),
            entries: betti_entries(t),
            display: t.to_string(),
        });
    }

    pub fn value(&mut self, name: impl Into<String>, value: Value) {
        self.values.push(NamedValue { name: name.into(), value });
    }

    pub fn verdict(&mut self, claim: &str, status: Status, left: Value, right: Value, detail: impl Into<String>) {
        self.verdicts.push(Verdict {
            claim: claim.to_string(),
            status,
            left,
            right,
            detail: detail.into(),
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn time(&mut self, stage: &str, micros: u64) {
        self.timings.get_or_insert_with(Vec::new).push(Timing {
            stage: stage.to_string(),
            micros,
        });
    }

    pub fn find_verdict(&self, claim: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.claim == claim)
    }

    pub fn find_series(&self, name: &str) -> Option<&[u64]> {
        self.series.iter().find(|s| s.name == name).map(|s| s.coefficients.as_slice())
    }

    pub fn find_value(&self, name: &str) -> Option<&Value> {
        self.values.iter().find(|v| v.name == name).map(|v| &v.value)
    }

    /// No verdict failed.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let i = &self.inputs;
        let _ = writeln!(out, "experiment: {}", self.experiment);
        let _ = writeln!(
            out,
            "ring: {} over GF({}) in {}; ideal ({})",
            i.ring,
            i.characteristic,
            i.variables.join(" "),
            i.ideal.join(", ")
        );
        let _ = writeln!(out, "sop {}: {}", i.sop_name, i.sop.join(", "));
        let _ = writeln!(out, "cap: {}  power max: {}", i.cap, i.power_max);
        if !self.values.is_empty() {
            let _ = writeln!(out, "\nvalues");
            for v in &self.values {
                let _ = writeln!(out, "  {}: {}", v.name, v.value.render());
            }
        }
        if !self.series.is_empty() {
            let _ = writeln!(out, "\nseries");
            for s in &self.series {
                let _ = writeln!(out, "  {}: {}", s.name, join(s.coefficients.iter()));
            }
        }
        for t in &self.tables {
            let _ = writeln!(out, "\nbetti table {}", t.name);
            for line in t.display.lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
        if !self.verdicts.is_empty() {
            let _ = writeln!(out, "\nverdicts");
            for v in &self.verdicts {
                let _ = writeln!(
                    out,
                    "  {:<14} {}: {} vs {}{}",
                    v.status.label(),
                    v.claim,
                    v.left.render(),
                    v.right.render(),
                    if v.detail.is_empty() { String::new() } else { format!("  ({})", v.detail) }
                );
            }
        }
        if !self.notes.is_empty() {
            let _ = writeln!(out, "\nnotes");
            for n in &self.notes {
                let _ = writeln!(out, "  {n}");
            }
        }
        if let Some(ts) = &self.timings {
            let _ = writeln!(out, "\ntimings");
            for t in ts {
                let _ = writeln!(out, "  {}: {} us", t.stage, t.micros);
            }
        }
        out
    }
}
