//! Machine-readable verification reports.
//!
//! A report is `{"command", "config", "records": […], "summary"}` with one
//! record per sweep cell. Floats serialize as shortest round-trip decimals,
//! field order is fixed by struct declaration, and nothing time- or
//! machine-dependent is included, so the same configuration and seed always
//! produce byte-identical output and parsing an emitted report and
//! re-serializing it reproduces the bytes exactly.

use serde::{Deserialize, Serialize};

use crate::extremal::SearchState;
use crate::singular_quad::VerifyRecord;

/// Operator-norm comparison for one symbol `f`: the proven upper bound
/// against the certified corpus lower bound, with the maximizing corpus
/// member as witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToeplitzRecord {
    pub f: String,
    pub bound: f64,
    pub empirical_lb: f64,
    pub witness_h: String,
    pub pass: bool,
}

/// Extremal-search outcome in report form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub family: String,
    pub best_params: Vec<f64>,
    pub objective: f64,
    pub ceiling: f64,
    pub converged: bool,
    pub trace_len: usize,
}

impl From<&SearchState> for SearchRecord {
    fn from(state: &SearchState) -> Self {
        Self {
            family: state.family.clone(),
            best_params: state.params.clone(),
            objective: state.objective,
            ceiling: state.ceiling,
            converged: state.converged,
            trace_len: state.trace.len(),
        }
    }
}

/// One report entry. Serialization is transparent: each variant writes its
/// own field set, and the sets are disjoint, so untagged parsing is unique.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Record {
    Verify(VerifyRecord),
    Toeplitz(ToeplitzRecord),
    Search(SearchRecord),
}

impl Record {
    pub fn pass(&self) -> bool {
        match self {
            Record::Verify(r) => r.pass,
            Record::Toeplitz(r) => r.pass,
            Record::Search(r) => r.objective <= r.ceiling * (1.0 + 1e-6),
        }
    }

    /// Signed violation `lhs - rhs` of the record's inequality; positive
    /// means the inequality failed.
    pub fn violation(&self) -> f64 {
        match self {
            Record::Verify(r) => r.lhs - r.rhs,
            Record::Toeplitz(r) => r.empirical_lb - r.bound,
            Record::Search(r) => r.objective - r.ceiling,
        }
    }

    /// Fixed-header CSV row view of the record.
    pub fn csv_row(&self) -> String {
        match self {
            Record::Verify(r) => format!(
                "{},{},{},{},{},{},{}",
                csv_field(&r.function),
                r.eta,
                r.lhs,
                r.rhs,
                r.margin,
                r.quad_err,
                r.pass
            ),
            Record::Toeplitz(r) => format!(
                "{},0,{},{},{},0,{}",
                csv_field(&r.f),
                r.empirical_lb,
                r.bound,
                r.bound - r.empirical_lb,
                r.pass
            ),
            Record::Search(r) => format!(
                "{},0,{},{},{},0,{}",
                csv_field(&r.family),
                r.objective,
                r.ceiling,
                r.ceiling - r.objective,
                r.objective <= r.ceiling * (1.0 + 1e-6)
            ),
        }
    }
}

pub const CSV_HEADER: &str = "function,eta,lhs,rhs,margin,quad_err,pass";

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    /// Largest signed violation `lhs - rhs` over all records (zero for an
    /// empty report); positive indicates a failed inequality.
    pub max_violation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub config: serde_json::Value,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: impl Into<String>, config: serde_json::Value, records: Vec<Record>) -> Self {
        let max_violation = if records.is_empty() {
            0.0
        } else {
            records
                .iter()
                .map(Record::violation)
                .fold(f64::NEG_INFINITY, f64::max)
        };
        let summary = Summary {
            total: records.len(),
            passed: records.iter().filter(|r| r.pass()).count(),
            max_violation,
        };
        Self {
            command: command.into(),
            config,
            records,
            summary,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from(CSV_HEADER);
        s.push('\n');
        for record in &self.records {
            s.push_str(&record.csv_row());
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> Report {
        let records = vec![
            Record::Verify(VerifyRecord::bound_check(
                "poly:0,1".into(),
                0.5,
                1.0,
                std::f64::consts::PI,
                1e-12,
            )),
            Record::Toeplitz(ToeplitzRecord {
                f: "logfam:4".into(),
                bound: 7.5,
                empirical_lb: 2.25,
                witness_h: "poly:0,0,1".into(),
                pass: true,
            }),
            Record::Search(SearchRecord {
                family: "logfam-span".into(),
                best_params: vec![1.0, 0.25],
                objective: 1.25,
                ceiling: std::f64::consts::PI,
                converged: true,
                trace_len: 9,
            }),
        ];
        Report::new(
            "verify-hardy",
            serde_json::json!({"seed": 0, "tol": 1e-8}),
            records,
        )
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let report = sample_report();
        let first = report.to_json();
        let parsed: Report = serde_json::from_str(&first).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(parsed.to_json(), first);
    }

    #[test]
    fn summary_counts_and_violation() {
        let report = sample_report();
        assert_eq!(report.summary.total, 3);
        assert_eq!(report.summary.passed, 3);
        assert!(report.summary.max_violation < 0.0);
    }

    #[test]
    fn csv_has_fixed_header_and_quotes_commas() {
        let report = sample_report();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        assert!(lines.next().unwrap().starts_with("\"poly:0,1\","));
        assert_eq!(csv.lines().count(), 1 + report.records.len());
    }

    #[test]
    fn untagged_records_parse_to_matching_variants() {
        let json = r#"{"f":"poly:1","bound":1.0,"empirical_lb":0.5,"witness_h":"poly:1","pass":true}"#;
        let rec: Record = serde_json::from_str(json).unwrap();
        assert!(matches!(rec, Record::Toeplitz(_)));
    }
}
