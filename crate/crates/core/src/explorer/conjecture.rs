//! Probes of the multi-index ratios for arbitrary integer `j`.

use std::time::Instant;

use crate::arith::{Integer, Laurent};
use crate::error::{Error, Result};
use crate::verifier::{multi_ratio, CheckResult, Family, MultiIndexSpec, Status, Witness};

use super::cache::CacheEntry;

/// Which ratio a probe builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjecture {
    /// Even family: Laurent for every `j`, non-negative for `0 <= j <= m`.
    One,
    /// Odd family: Laurent for every `j`.
    Two,
}

impl Conjecture {
    pub fn check_id(self) -> &'static str {
        match self {
            Conjecture::One => "conj1",
            Conjecture::Two => "conj2",
        }
    }

    pub fn from_check_id(id: &str) -> Option<Self> {
        match id {
            "conj1" => Some(Conjecture::One),
            "conj2" => Some(Conjecture::Two),
            _ => None,
        }
    }

    fn family(self) -> Family {
        match self {
            Conjecture::One => Family::Even,
            Conjecture::Two => Family::Odd,
        }
    }
}

/// Evidence at one point. `min_coefficient` is present iff `is_laurent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRecord {
    pub spec: MultiIndexSpec,
    pub is_laurent: bool,
    pub min_coefficient: Option<Integer>,
    pub quotient_support: Option<(i64, i64)>,
    pub ratio: Option<Laurent>,
}

impl ConjectureRecord {
    fn from_ratio(spec: &MultiIndexSpec, ratio: Option<Laurent>) -> Self {
        Self {
            spec: spec.clone(),
            is_laurent: ratio.is_some(),
            min_coefficient: ratio.as_ref().map(|q| q.min_coefficient().unwrap_or_default()),
            quotient_support: ratio.as_ref().and_then(Laurent::support),
            ratio,
        }
    }

    /// Inside `0 <= j <= m`, where Laurent-ness is proved.
    pub fn in_theorem_range(&self) -> bool {
        self.spec.j_in_theorem_range()
    }

    /// A non-Laurent ratio inside the proved range.
    pub fn contradicts_theorem(&self) -> bool {
        self.in_theorem_range() && !self.is_laurent
    }

    /// Whether the conjectured statement holds at this point.
    pub fn supports(&self, conjecture: Conjecture) -> bool {
        match conjecture {
            Conjecture::One if self.in_theorem_range() => {
                self.is_laurent && self.min_coefficient.as_ref().is_some_and(|c| c >= &Integer::default())
            }
            _ => self.is_laurent,
        }
    }

    /// Result view: `Holds` iff the conjecture holds here; the witness is the
    /// ratio, or the numerator when the ratio is not Laurent.
    pub fn to_result(&self, conjecture: Conjecture, elapsed: std::time::Duration) -> CheckResult {
        let (status, detail) = if self.supports(conjecture) {
            (Status::Holds, None)
        } else if !self.is_laurent {
            (Status::Fails, Some("not a Laurent polynomial".to_string()))
        } else {
            (Status::Fails, Some("negative coefficient".to_string()))
        };
        let witness = match &self.ratio {
            Some(q) => Some(Witness::Laurent(q.clone())),
            None => {
                let spec = &self.spec;
                let numerator = multi_ratio(conjecture.family(), spec.a, &spec.ns, spec.r, spec.j).numerator.clone();
                Some(Witness::Laurent(numerator))
            }
        };
        CheckResult {
            check_id: conjecture.check_id().to_string(),
            params: self.spec.to_params(),
            status,
            witness,
            detail,
            elapsed,
        }
    }

    /// Rebuilds a record from its cache line.
    pub fn from_entry(entry: &CacheEntry) -> Result<Self> {
        let result = entry.to_result()?;
        let spec = MultiIndexSpec::from_params(&result.params)?;
        let is_laurent = entry.min_coefficient.is_some();
        let ratio = if is_laurent {
            let w = result.quotient().ok_or_else(|| Error::Parse("Laurent record without ratio".into()))?;
            Some(w.clone())
        } else {
            None
        };
        let record = Self::from_ratio(&spec, ratio);
        let min = entry.min_coefficient.as_deref().map(str::parse::<Integer>).transpose();
        if min.ok().flatten() != record.min_coefficient || entry.support != record.quotient_support {
            return Err(Error::Parse(format!("inconsistent conjecture record at {}", entry.params)));
        }
        Ok(record)
    }

    pub fn to_entry(&self, conjecture: Conjecture, elapsed: std::time::Duration) -> CacheEntry {
        let mut entry = CacheEntry::from_result(&self.to_result(conjecture, elapsed), true);
        if !self.is_laurent {
            entry.min_coefficient = None;
            entry.support = None;
        }
        entry
    }
}

pub fn explore(conjecture: Conjecture, spec: &MultiIndexSpec) -> ConjectureRecord {
    let ratio = multi_ratio(conjecture.family(), spec.a, &spec.ns, spec.r, spec.j);
    ConjectureRecord::from_ratio(spec, ratio.quotient.clone())
}

/// Builds the even-family ratio at any `j` and records Laurent-ness and the
/// smallest coefficient. Asserts nothing.
pub fn explore_conjecture_1(spec: &MultiIndexSpec) -> ConjectureRecord {
    explore(Conjecture::One, spec)
}

/// Builds the odd-family ratio at any `j` and records Laurent-ness.
pub fn explore_conjecture_2(spec: &MultiIndexSpec) -> ConjectureRecord {
    explore(Conjecture::Two, spec)
}

/// Timed probe in result form.
pub(crate) fn probe(conjecture: Conjecture, spec: &MultiIndexSpec) -> (ConjectureRecord, CheckResult) {
    let started = Instant::now();
    let record = explore(conjecture, spec);
    let result = record.to_result(conjecture, started.elapsed());
    (record, result)
}
