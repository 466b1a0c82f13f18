use serde::{Deserialize, Serialize};

use crate::dsl::{parse, Domain};
use crate::error::{Error, Result};

use super::cocycles::{BottCocycle, GroupCochain, GvCocycle};
use super::group::GroupElement;
use super::quadrature::QuadratureConfig;

/// Grid used to validate diffeomorphisms read from jobs.
pub const JOB_VALIDATION_GRID: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CocycleKind {
    Gv,
    Bott,
}

impl CocycleKind {
    pub fn domain(self) -> Domain {
        match self {
            CocycleKind::Gv => Domain::Line,
            CocycleKind::Bott => Domain::Circle,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            CocycleKind::Gv => 3,
            CocycleKind::Bott => 2,
        }
    }
}

/// A cocycle evaluation request.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub cocycle: CocycleKind,
    pub diffeos: Vec<String>,
    #[serde(default)]
    pub basepoint: Option<f64>,
    pub tol: f64,
    #[serde(default)]
    pub max_subdivisions: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

impl Job {
    pub fn from_json(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Job(e.to_string()))
    }

    pub fn run(&self) -> Result<JobResult> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::Job("tol must be positive".into()));
        }
        if self.diffeos.len() != self.cocycle.arity() {
            return Err(Error::ArityMismatch {
                expected: self.cocycle.arity(),
                got: self.diffeos.len(),
            });
        }
        let mut quadrature = QuadratureConfig::with_tolerance(self.tol);
        if let Some(m) = self.max_subdivisions {
            quadrature.max_subdivisions = m;
        }
        let args = self
            .diffeos
            .iter()
            .map(|s| {
                let d = parse(s, self.cocycle.domain())?;
                d.ensure_valid(JOB_VALIDATION_GRID)?;
                Ok(GroupElement::new(d))
            })
            .collect::<Result<Vec<_>>>()?;
        let r = match self.cocycle {
            CocycleKind::Gv => {
                let x = self
                    .basepoint
                    .ok_or_else(|| Error::Job("gv jobs need a basepoint".into()))?;
                GvCocycle::new(x, quadrature).evaluate_with_error(&args)?
            }
            CocycleKind::Bott => {
                if self.basepoint.is_some() {
                    return Err(Error::Job("bott jobs take no basepoint".into()));
                }
                BottCocycle::new(quadrature).evaluate_with_error(&args)?
            }
        };
        Ok(JobResult {
            value: r.value,
            error_estimate: r.error_estimate,
            subdivisions: r.subdivisions,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_a_gv_job() {
        let job = Job::from_json(
            r#"{"cocycle":"gv","diffeos":["x + 1","x + 0.3*tanh(x)","2*x"],"basepoint":0.0,"tol":1e-10}"#,
        )
        .unwrap();
        let r = job.run().unwrap();
        assert!(r.value.is_finite() && r.error_estimate <= 1e-9);
    }

    #[test]
    fn rejects_malformed_jobs() {
        assert!(matches!(
            Job::from_json(r#"{"cocycle":"foo"}"#),
            Err(Error::Job(_))
        ));
        let job = Job::from_json(r#"{"cocycle":"bott","diffeos":["x"],"tol":1e-9}"#).unwrap();
        assert!(matches!(job.run(), Err(Error::ArityMismatch { .. })));
        let job = Job::from_json(
            r#"{"cocycle":"gv","diffeos":["x^3","x","x"],"basepoint":0,"tol":1e-9}"#,
        )
        .unwrap();
        assert!(matches!(job.run(), Err(Error::InvalidDiffeo(_))));
    }
}
