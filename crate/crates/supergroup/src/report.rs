//! Checks, their outcomes, and the versioned report they are collected in.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::suites::Context;

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// The residual must normalize to zero.
    Zero,
    /// The residual must not vanish; the witness is recorded.
    Nonzero,
}

type Run = Arc<dyn Fn(&Context) -> Result<Option<String>, Error> + Send + Sync>;

/// One named verification. `run` returns `None` for a vanishing residual
/// and the printed residual otherwise.
#[derive(Clone)]
pub struct Check {
    pub name: String,
    pub family: &'static str,
    pub subject: String,
    pub expect: Expect,
    run: Run,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        family: &'static str,
        subject: impl Into<String>,
        run: impl Fn(&Context) -> Result<Option<String>, Error> + Send + Sync + 'static,
    ) -> Self {
        Check {
            name: name.into(),
            family,
            subject: subject.into(),
            expect: Expect::Zero,
            run: Arc::new(run),
        }
    }

    pub fn expect_nonzero(mut self) -> Self {
        self.expect = Expect::Nonzero;
        self
    }

    pub fn run(&self, ctx: &Context) -> Record {
        let start = Instant::now();
        let out = (self.run)(ctx);
        let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
        let (status, witness) = match (self.expect, out) {
            (_, Err(e)) => (Status::Fail, Some(format!("error: {e}"))),
            (Expect::Zero, Ok(None)) => (Status::Pass, None),
            (Expect::Zero, Ok(Some(w))) => (Status::Fail, Some(w)),
            (Expect::Nonzero, Ok(Some(w))) => (Status::ExpectedNonzero, Some(w)),
            (Expect::Nonzero, Ok(None)) => (Status::Fail, Some("0 (a nonzero residual was expected)".into())),
        };
        Record {
            name: self.name.clone(),
            family: self.family.to_string(),
            subject: self.subject.clone(),
            status,
            witness,
            runtime_ms,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ExpectedNonzero,
}

impl Status {
    pub fn ok(self) -> bool {
        self != Status::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedNonzero => "expected-nonzero",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub family: String,
    pub subject: String,
    pub status: Status,
    pub witness: Option<String>,
    pub runtime_ms: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub expected_nonzero: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub engine_version: String,
    pub suite: String,
    pub summary: Summary,
    pub records: Vec<Record>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn record(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }

    /// Plain text, one line per check, then the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out += &format!("{:<17} {} [{}] {}", r.status.as_str(), r.name, r.family, r.subject);
            if let Some(w) = &r.witness {
                out += &format!("\n    witness: {w}");
            }
            out.push('\n');
        }
        out += &format!(
            "{}: {} pass, {} fail, {} expected-nonzero\n",
            self.suite, self.summary.pass, self.summary.fail, self.summary.expected_nonzero
        );
        out
    }
}

/// Runs `checks` on up to `jobs` threads (`0` picks the default) and
/// assembles a report sorted by check name.
pub fn run(suite: &str, checks: &[Check], ctx: &Context, jobs: usize) -> Result<Report, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Other(e.to_string()))?;
    let mut records: Vec<Record> = pool.install(|| checks.par_iter().map(|c| c.run(ctx)).collect());
    records.sort_by(|a, b| a.name.cmp(&b.name));
    let mut summary = Summary::default();
    for r in &records {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::ExpectedNonzero => summary.expected_nonzero += 1,
        }
    }
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        suite: suite.to_string(),
        summary,
        records,
    })
}
