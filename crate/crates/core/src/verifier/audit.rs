use std::time::Instant;

use super::{CheckResult, Params, Status, Witness};
use crate::arith::{Integer, Laurent, Poly, Rational};

/// Collects sub-claims of one check; the first failure becomes the witness.
pub(crate) struct Audit {
    started: Instant,
    failure: Option<(String, Witness)>,
    skipped: Option<String>,
}

impl Audit {
    pub fn start() -> Self {
        Self { started: Instant::now(), failure: None, skipped: None }
    }

    fn fail(&mut self, label: &str, witness: Witness) {
        debug_assert!(!witness.is_zero());
        if self.failure.is_none() {
            self.failure = Some((label.to_string(), witness));
        }
    }

    pub fn skip(&mut self, why: impl Into<String>) {
        self.skipped = Some(why.into());
    }

    pub fn rational_eq(&mut self, label: &str, lhs: &Rational, rhs: &Rational) -> bool {
        if lhs == rhs {
            return true;
        }
        self.fail(label, Witness::Rational(lhs - rhs));
        false
    }

    pub fn integer_eq(&mut self, label: &str, lhs: &Integer, rhs: &Integer) -> bool {
        if lhs == rhs {
            return true;
        }
        self.fail(label, Witness::Rational(Rational::from_integer(lhs - rhs)));
        false
    }

    pub fn laurent_eq(&mut self, label: &str, lhs: &Laurent, rhs: &Laurent) -> bool {
        if lhs == rhs {
            return true;
        }
        self.fail(label, Witness::Laurent(lhs - rhs));
        false
    }

    /// `Some(quotient)` when `modulus` divides `p` in the Laurent ring. On
    /// failure the numerator itself is the witness.
    pub fn divides(&mut self, label: &str, p: &Laurent, modulus: &Poly) -> Option<Laurent> {
        let q = p.quotient(modulus);
        if q.is_none() {
            self.fail(label, Witness::Laurent(p.clone()));
        }
        q
    }

    pub fn finish(self, check_id: &str, params: Params, evidence: Option<Witness>) -> CheckResult {
        let elapsed = self.started.elapsed();
        let (status, witness, detail) = match (self.failure, self.skipped) {
            (Some((label, w)), _) => (Status::Fails, Some(w), Some(label)),
            (None, Some(why)) => (Status::DomainSkip, None, Some(why)),
            (None, None) => (Status::Holds, evidence, None),
        };
        CheckResult { check_id: check_id.to_string(), params, status, witness, detail, elapsed }
    }
}
