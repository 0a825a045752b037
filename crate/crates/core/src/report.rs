//! Outcome records for identity checks.

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::polyring::{Coefficient, SparsePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Value,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    /// Drop the timing so that output is reproducible byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

/// Collects the first mismatch of a check and stamps the elapsed time.
pub struct Checker {
    identity: String,
    params: Value,
    start: Instant,
    mismatch: Option<Mismatch>,
}

impl Checker {
    pub fn new(identity: &str, params: Value) -> Self {
        Checker {
            identity: identity.to_string(),
            params,
            start: Instant::now(),
            mismatch: None,
        }
    }

    pub fn failed(&self) -> bool {
        self.mismatch.is_some()
    }

    /// Record a mismatch unless one is already recorded.
    pub fn fail(
        &mut self,
        monomial: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) {
        if self.mismatch.is_none() {
            self.mismatch = Some(Mismatch {
                monomial: monomial.into(),
                lhs: lhs.into(),
                rhs: rhs.into(),
            });
        }
    }

    /// Coefficientwise comparison; `context` prefixes the reported monomial.
    pub fn compare<C: Coefficient>(
        &mut self,
        context: &str,
        lhs: &SparsePoly<C>,
        rhs: &SparsePoly<C>,
    ) -> bool {
        match lhs.first_difference(rhs) {
            None if lhs.table() == rhs.table() => true,
            None => {
                self.fail(context, "variable table differs", "");
                false
            }
            Some((m, a, b)) => {
                let mono = m.to_string(lhs.table());
                let label = if context.is_empty() {
                    mono
                } else {
                    format!("{context}: {mono}")
                };
                self.fail(label, a.to_string(), b.to_string());
                false
            }
        }
    }

    /// Boolean check; a false condition is recorded as a mismatch.
    pub fn expect(&mut self, cond: bool, what: impl FnOnce() -> (String, String, String)) -> bool {
        if !cond {
            let (m, l, r) = what();
            self.fail(m, l, r);
        }
        cond
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            identity: self.identity,
            params: self.params,
            status: if self.mismatch.is_some() {
                Status::Mismatch
            } else {
                Status::Ok
            },
            first_mismatch: self.mismatch,
            elapsed_ms: Some(self.start.elapsed().as_millis() as u64),
            details: None,
        }
    }
}
