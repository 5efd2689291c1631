//! JSON reports written by every command.
//!
//! ```json
//! {
//!   "command": "analyze realize",
//!   "inputs": { "m": 2, "radius": 256, "tau": [1, 0] },
//!   "outputs": { "fraction": "1/1" },
//!   "checks": [ { "name": "realized_everywhere", "passed": true, "detail": "fraction 1/1" } ],
//!   "passed": true
//! }
//! ```
//!
//! Map keys are sorted and rationals are `"p/q"` strings, so equal runs give
//! byte-identical reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::rational::{to_text, Rational};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    /// True iff every check passed.
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            checks: Vec::new(),
            passed: true,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.outputs.insert(key.to_string(), value.into());
        self
    }

    pub fn output_rational(&mut self, key: &str, value: &Rational) -> &mut Self {
        self.output(key, to_text(value))
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> &mut Self {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
        self
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn passed_tracks_checks() {
        let mut r = Report::new("x");
        r.check("a", true, "");
        assert!(r.passed);
        r.check("b", false, "no");
        r.check("c", true, "");
        assert!(!r.passed);
    }

    #[test]
    fn round_trip_and_sorted_keys() {
        let mut r = Report::new("analyze irs");
        r.input("zeta", 1).input("alpha", "s1");
        r.output_rational("defect", &Rational::new(0, 5));
        let text = r.to_json();
        assert!(text.find("alpha").unwrap() < text.find("zeta").unwrap());
        assert!(text.contains("\"0/1\""));
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
    }
}
