//! Verdict reports: a serializable summary of a run, with JSON and
//! aligned-text renderings. Golden files store reports with the timing
//! field zeroed so they stay byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use effsum_core::{Direction, PropertyReport, Verdict};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConditionLine {
    pub condition: String,
    pub passed: bool,
    pub evidence: String,
}

/// The full outcome of a `verdict` run in display form: element sets are
/// rendered as strings so reports are carrier-independent.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rule: String,
    pub direction: String,
    pub conditional: bool,
    pub consistent: bool,
    pub equality_holds: bool,
    pub efficient_a: Vec<String>,
    pub efficient_sum: Vec<String>,
    pub properties: BTreeMap<String, String>,
    pub conditions: Vec<ConditionLine>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(
        name: Option<String>,
        verdict: &Verdict,
        report: &PropertyReport,
        warnings: &[String],
        timing_ms: u64,
    ) -> Report {
        Report {
            name,
            rule: verdict.theorem.rule.to_string(),
            direction: match verdict.theorem.direction {
                Direction::Holds => "Holds".into(),
                Direction::Fails => "Fails".into(),
                Direction::Inapplicable => "Inapplicable".into(),
            },
            conditional: verdict.theorem.conditional,
            consistent: verdict.consistent,
            equality_holds: verdict.oracle.equality_holds,
            efficient_a: verdict
                .oracle
                .efficient_a
                .iter()
                .map(|e| e.to_string())
                .collect(),
            efficient_sum: verdict
                .oracle
                .efficient_sum
                .iter()
                .map(|e| e.to_string())
                .collect(),
            properties: report
                .statuses
                .iter()
                .map(|(p, s)| (p.to_string(), s.to_string()))
                .collect(),
            conditions: verdict
                .theorem
                .conditions_trace
                .iter()
                .map(|c| ConditionLine {
                    condition: c.condition.clone(),
                    passed: c.passed,
                    evidence: c.evidence.clone(),
                })
                .collect(),
            warnings: warnings.to_vec(),
            timing_ms,
        }
    }

    /// Copy with the timing field cleared, for golden comparison.
    pub fn normalized(&self) -> Report {
        let mut r = self.clone();
        r.timing_ms = 0;
        r
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-oriented aligned text rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &str| {
            out.push_str(&format!("{k:<14} {v}\n"));
        };
        if let Some(name) = &self.name {
            line("instance", name);
        }
        line("rule", &self.rule);
        line("direction", &self.direction);
        line("conditional", if self.conditional { "yes" } else { "no" });
        line("oracle", if self.equality_holds { "equal" } else { "different" });
        line("consistent", if self.consistent { "yes" } else { "no" });
        line("E(A)", &format!("{{{}}}", self.efficient_a.join(", ")));
        line("E(A+B)", &format!("{{{}}}", self.efficient_sum.join(", ")));
        for (p, s) in &self.properties {
            line(&format!("prop {p}"), s);
        }
        for c in &self.conditions {
            let mark = if c.passed { "+" } else { "-" };
            line(&format!("check {mark}"), &format!("{} [{}]", c.condition, c.evidence));
        }
        for w in &self.warnings {
            line("warning", w);
        }
        line("timing_ms", &self.timing_ms.to_string());
        out
    }
}
