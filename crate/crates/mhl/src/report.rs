use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Ok,
    Matchable,
    Blocked,
    HallHolds,
    HallViolated,
    PropertyHolds,
    PropertyViolated,
    InputError,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Ok | Verdict::Matchable | Verdict::HallHolds | Verdict::PropertyHolds => 0,
            Verdict::Blocked | Verdict::HallViolated | Verdict::PropertyViolated => 1,
            Verdict::InputError => 2,
        }
    }
}

/// Machine-readable output of every command. Element sets in the
/// certificate are lists of element ids.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    pub instance: String,
    pub verdict: Verdict,
    pub certificate: serde_json::Value,
    pub counters: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(command: &str, instance: &str, verdict: Verdict, certificate: serde_json::Value) -> Report {
        Report {
            command: command.into(),
            instance: instance.into(),
            verdict,
            certificate,
            counters: BTreeMap::new(),
        }
    }

    pub fn counter(mut self, key: &str, value: u64) -> Report {
        self.counters.insert(key.into(), value);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn parse(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}
