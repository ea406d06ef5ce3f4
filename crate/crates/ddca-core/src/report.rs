//! Structured verification reports with deterministic serialization.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

/// Outcome of one check.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One verified statement, tied to its source reference.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    /// Human-readable detail; on failure this carries the serialized
    /// nonzero residual.
    pub detail: String,
    pub elapsed_ms: u64,
}

/// A full suite report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub tool_version: String,
    /// SHA-256 of the canonical serialization with elapsed_ms zeroed;
    /// stable across reruns of the same configuration.
    pub digest: String,
}

impl VerificationReport {
    pub fn new(suite: &str) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            digest: String::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        for (k, v) in other.params {
            self.params.entry(k).or_insert(v);
        }
    }

    /// Sorts checks by id and recomputes the stable digest.
    pub fn finalize(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut stable = self.clone();
        for c in &mut stable.checks {
            c.elapsed_ms = 0;
        }
        stable.digest = String::new();
        let bytes = serde_json::to_vec(&stable).expect("report serialization");
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(&bytes);
        self.digest = format!("{:x}", h.finalize());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", self.suite));
        for (k, v) in &self.params {
            out.push_str(&format!("  {} = {}\n", k, v));
        }
        for c in &self.checks {
            let glyph = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!(
                "[{}] {} ({}) {}ms",
                glyph, c.id, c.paper_ref, c.elapsed_ms
            ));
            if !c.detail.is_empty() {
                out.push_str(&format!(" :: {}", c.detail));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.passed() { "PASS" } else { "FAIL" }
        ));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,paper_ref,status,detail,elapsed_ms\n");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
            };
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_escape(&c.id),
                csv_escape(&c.paper_ref),
                status,
                csv_escape(&c.detail),
                c.elapsed_ms
            ));
        }
        out
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Helper that times a closure and records the outcome as a check.
pub fn run_check<F>(report: &mut VerificationReport, id: &str, paper_ref: &str, f: F)
where
    F: FnOnce() -> Result<String, String>,
{
    let start = Instant::now();
    let outcome = f();
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (status, detail) = match outcome {
        Ok(d) => (Status::Pass, d),
        Err(d) => (Status::Fail, d),
    };
    report.push(Check {
        id: id.to_string(),
        paper_ref: paper_ref.to_string(),
        status,
        detail,
        elapsed_ms,
    });
}

/// Records a skipped check with a reason.
pub fn skip_check(report: &mut VerificationReport, id: &str, paper_ref: &str, reason: &str) {
    report.push(Check {
        id: id.to_string(),
        paper_ref: paper_ref.to_string(),
        status: Status::Skipped,
        detail: reason.to_string(),
        elapsed_ms: 0,
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_stable_under_elapsed_changes() {
        let mut r1 = VerificationReport::new("demo");
        run_check(&mut r1, "a", "ref", || Ok(String::new()));
        r1.finalize();
        let mut r2 = VerificationReport::new("demo");
        r2.push(Check {
            id: "a".into(),
            paper_ref: "ref".into(),
            status: Status::Pass,
            detail: String::new(),
            elapsed_ms: 12345,
        });
        r2.finalize();
        assert_eq!(r1.digest, r2.digest);
    }

    #[test]
    fn json_roundtrip() {
        let mut r = VerificationReport::new("demo");
        run_check(&mut r, "x", "ref", || Err("residual".into()));
        r.finalize();
        let j = r.to_json();
        let back: VerificationReport = serde_json::from_str(&j).unwrap();
        assert_eq!(back.suite, "demo");
        assert!(!back.passed());
    }

    #[test]
    fn csv_has_header_and_escaping() {
        let mut r = VerificationReport::new("demo");
        run_check(&mut r, "x", "a,b", || Ok("with \"quotes\"".into()));
        let csv = r.to_csv();
        assert!(csv.starts_with("id,paper_ref,status,detail,elapsed_ms\n"));
        assert!(csv.contains("\"a,b\""));
    }
}
