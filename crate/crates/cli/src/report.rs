use std::fmt;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub value: Value,
}

impl Check {
    pub fn exact(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            residual: None,
            tolerance: None,
            value: Value::Null,
        }
    }

    pub fn residual(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            status: if residual < tolerance {
                Status::Pass
            } else {
                Status::Fail
            },
            residual: Some(residual),
            tolerance: Some(tolerance),
            value: Value::Null,
        }
    }

    pub fn value(name: impl Into<String>, value: impl Into<Value>) -> Self {
        Check {
            name: name.into(),
            status: Status::Value,
            residual: None,
            tolerance: None,
            value: value.into(),
        }
    }

    pub fn with_value(mut self, value: impl Into<Value>) -> Self {
        self.value = value.into();
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub config: Value,
    pub checks: Vec<Check>,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(command: impl Into<String>, config: Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            config,
            checks: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.name = format!("{}: {}", other.command, c.name);
            c
        }));
    }

    pub fn finish(mut self, elapsed: Duration) -> Self {
        self.elapsed_ms = elapsed.as_secs_f64() * 1e3;
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.command, self.config)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Value => "    ",
            };
            let mut line = format!("  {status}  {:<width$}", c.name);
            if let (Some(r), Some(t)) = (c.residual, c.tolerance) {
                line += &format!("  residual {r:.3e} (tol {t:.0e})");
            }
            if !c.value.is_null() {
                line += &format!("  {}", render_value(&c.value));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        let failed = self
            .checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count();
        write!(
            f,
            "{} checks, {failed} failed, {:.1} ms",
            self.checks
                .iter()
                .filter(|c| c.status != Status::Value)
                .count(),
            self.elapsed_ms
        )
    }
}
