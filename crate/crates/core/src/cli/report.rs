use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, ErrorClass};

pub const EXIT_AFFIRMATIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_DISAGREEMENT: i32 = 5;

/// The structured document written by `--json`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub certificates: Value,
    pub verify: Option<Value>,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub exit: i32,
    /// Human-readable summary lines.
    pub summary: Vec<String>,
}

impl Outcome {
    pub fn new(command: &str, inputs: Value) -> Self {
        Outcome {
            report: Report {
                command: command.to_string(),
                inputs,
                result: Value::Null,
                certificates: json!({}),
                verify: None,
            },
            exit: EXIT_AFFIRMATIVE,
            summary: Vec::new(),
        }
    }

    pub fn verdict(&mut self, holds: bool) {
        self.exit = if holds { EXIT_AFFIRMATIVE } else { EXIT_NEGATIVE };
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    pub fn certificate(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.report.certificates {
            map.insert(key.to_string(), value);
        }
    }

    /// Record an oracle comparison, overriding the exit code when the oracle
    /// disagrees or runs out of budget.
    pub fn verified<T: PartialEq + Serialize>(
        &mut self,
        oracle: &str,
        fast: &T,
        reference: crate::error::Result<T>,
    ) -> crate::error::Result<()> {
        match reference {
            Ok(r) if r == *fast => {
                self.report.verify = Some(json!({"oracle": oracle, "status": "agree"}));
                self.line(format!("verify: {oracle} agrees"));
            }
            Ok(r) => {
                self.report.verify = Some(json!({
                    "oracle": oracle,
                    "status": "disagree",
                    "fast": fast,
                    "reference": r,
                }));
                self.line(format!("verify: {oracle} DISAGREES"));
                self.exit = EXIT_DISAGREEMENT;
            }
            Err(e) if e.class() == ErrorClass::Budget => {
                self.report.verify = Some(json!({
                    "oracle": oracle,
                    "status": "budget-exceeded",
                    "message": e.to_string(),
                }));
                self.line(format!("verify: {oracle} skipped, {e}"));
                self.exit = EXIT_BUDGET;
            }
            Err(e) => return Err(e),
        }
        Ok(())
    }

    pub fn not_verifiable(&mut self) {
        self.report.verify = Some(json!({"status": "not-applicable"}));
    }
}

pub fn exit_for(e: &Error) -> i32 {
    match e.class() {
        ErrorClass::Usage => EXIT_USAGE,
        ErrorClass::Precondition => EXIT_PRECONDITION,
        ErrorClass::Budget => EXIT_BUDGET,
    }
}

pub fn error_document(command: &str, e: &Error) -> Value {
    let class = match e.class() {
        ErrorClass::Usage => "usage",
        ErrorClass::Precondition => "precondition",
        ErrorClass::Budget => "budget",
    };
    json!({"command": command, "error": {"class": class, "message": e.to_string()}})
}
