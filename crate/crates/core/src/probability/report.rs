use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// Parameters, per-trial records and summary statistics of one experiment.
///
/// Keys are kept sorted so that the text and JSON renderings are canonical.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub seed: Option<u64>,
    pub trials: usize,
    pub params: BTreeMap<String, Value>,
    pub records: Vec<BTreeMap<String, Value>>,
    pub summary: BTreeMap<String, Value>,
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl ExperimentReport {
    pub fn new(experiment: &str, seed: Option<u64>, trials: usize) -> ExperimentReport {
        ExperimentReport {
            experiment: experiment.to_string(),
            seed,
            trials,
            params: BTreeMap::new(),
            records: Vec::new(),
            summary: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn stat(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.summary.insert(key.to_string(), value.into());
        self
    }

    pub fn record(&mut self, fields: impl IntoIterator<Item = (&'static str, Value)>) {
        self.records
            .push(fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect());
    }

    pub fn summary_value(&self, key: &str) -> Option<&Value> {
        self.summary.get(key)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "experiment = {}", self.experiment);
        match self.seed {
            Some(seed) => {
                let _ = writeln!(s, "seed = {seed}");
            }
            None => s.push_str("seed = none\n"),
        }
        let _ = writeln!(s, "trials = {}", self.trials);
        s.push_str("[params]\n");
        for (k, v) in &self.params {
            let _ = writeln!(s, "{k} = {}", render(v));
        }
        s.push_str("[summary]\n");
        for (k, v) in &self.summary {
            let _ = writeln!(s, "{k} = {}", render(v));
        }
        if !self.records.is_empty() {
            s.push_str("[trials]\n");
            for r in &self.records {
                let fields: Vec<String> = r.iter().map(|(k, v)| format!("{k}={}", render(v))).collect();
                let _ = writeln!(s, "{}", fields.join(" "));
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}
