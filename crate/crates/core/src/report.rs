//! Check reports with pass / fail / discrepancy statuses.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Computation disagrees with a claim it cannot certify; not a failure.
    Discrepancy,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepancy => "DISCREPANCY",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, id: impl Into<String>, status: Status, witness: Option<String>) {
        self.checks.push(Check { id: id.into(), status, witness, elapsed: Duration::ZERO });
    }

    pub fn record(&mut self, id: impl Into<String>, ok: bool, witness: impl Into<String>) {
        let w = witness.into();
        self.push(id, Status::from_bool(ok), (!w.is_empty()).then_some(w));
    }

    /// Runs `f` and records its verdict with the elapsed time.
    pub fn timed(&mut self, id: impl Into<String>, f: impl FnOnce() -> (Status, Option<String>)) {
        let start = Instant::now();
        let (status, witness) = f();
        self.checks.push(Check { id: id.into(), status, witness, elapsed: start.elapsed() });
    }

    pub fn extend(&mut self, other: CheckReport) {
        let prefix = other.suite;
        for mut c in other.checks {
            c.id = format!("{prefix}/{}", c.id);
            self.checks.push(c);
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            out.push_str(&format!("  {:<11} {:<width$}", c.status.to_string(), c.id));
            if !c.elapsed.is_zero() {
                out.push_str(&format!("  {:>8.1?}", c.elapsed));
            }
            if let Some(w) = &c.witness {
                out.push_str(&format!("  {w}"));
            }
            out.push('\n');
        }
        let disc: Vec<&Check> = self.checks.iter().filter(|c| c.status == Status::Discrepancy).collect();
        if !disc.is_empty() {
            out.push_str("discrepancies (computation disagrees with the stated claim):\n");
            for c in disc {
                out.push_str(&format!("  ! {}: {}\n", c.id, c.witness.as_deref().unwrap_or("")));
            }
        }
        out.push_str(&format!(
            "{} pass, {} fail, {} discrepancy\n",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Discrepancy)
        ));
        out
    }
}
