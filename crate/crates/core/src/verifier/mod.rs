//! One check per identity, recurrence, or divisibility claim.
//!
//! Every check builds both sides exactly and returns a [`CheckResult`]. A
//! `Holds` verdict is a certificate: a zero difference or an exact quotient.
//! Parameters outside a theorem's stated range are accepted and reported
//! honestly rather than rejected.

mod audit;
mod congruence;
mod identities;
mod multi;
mod qdiv;
mod registry;
mod vandermonde;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_traits::Zero;

pub use congruence::{check_q1_congruence, q1_congruence_parts, TriangleFamily};
pub use identities::{
    check_identity_one, check_n123, check_new_identity, check_one_suff, check_recover,
    check_zeilberger_recurrences, eq13_printed_sides, zeil_s, zeil_t, Assignment,
};
pub use multi::{
    check_sbar_r_multi, check_s_r_multi, clear_ratio_cache, multi_ratio, reversal_exponent, sbar_r_multi,
    s_r_multi, Family, Ratio,
};
pub use qdiv::{
    ank_power_modulus, ank_power_sum, bnk_power_modulus, bnk_power_sum, check_ank_power, check_bnk_power,
    companion_sum, q_s, q_t, s_r_single, x_r_sum, x_r_sum_check, x_r_modulus,
};
pub use registry::{find_check, run_check, CheckDef, CHECKS};
pub use vandermonde::check_chu_vandermonde;

use crate::arith::{Laurent, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    DomainSkip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "Holds",
            Status::Fails => "Fails",
            Status::DomainSkip => "DomainSkip",
        })
    }
}

impl FromStr for Status {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Holds" => Ok(Status::Holds),
            "Fails" => Ok(Status::Fails),
            "DomainSkip" => Ok(Status::DomainSkip),
            other => Err(Error::Parse(format!("unknown status `{other}`"))),
        }
    }
}

/// Evidence attached to a verdict: a quotient, a common value, or on failure
/// the nonzero difference (or undivisible numerator).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    Laurent(Laurent),
    Rational(Rational),
}

impl Witness {
    pub fn is_zero(&self) -> bool {
        match self {
            Witness::Laurent(l) => l.is_zero(),
            Witness::Rational(r) => r.is_zero(),
        }
    }

    pub fn as_laurent(&self) -> Option<&Laurent> {
        match self {
            Witness::Laurent(l) => Some(l),
            Witness::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Witness::Rational(r) => Some(r),
            Witness::Laurent(_) => None,
        }
    }

    /// Tagged form used by the cache: `laurent:<text>` or `rational:<p/q>`.
    pub fn to_tagged(&self) -> String {
        match self {
            Witness::Laurent(l) => format!("laurent:{l}"),
            Witness::Rational(r) => format!("rational:{r}"),
        }
    }

    pub fn from_tagged(s: &str) -> Result<Self> {
        if let Some(body) = s.strip_prefix("laurent:") {
            return Ok(Witness::Laurent(body.parse()?));
        }
        if let Some(body) = s.strip_prefix("rational:") {
            return body
                .parse()
                .map(Witness::Rational)
                .map_err(|_| Error::Parse(format!("bad rational witness `{body}`")));
        }
        Err(Error::Parse(format!("untagged witness `{s}`")))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Laurent(l) => write!(f, "{l}"),
            Witness::Rational(r) => write!(f, "{r}"),
        }
    }
}

/// Ordered `(name, value)` parameter list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params(Vec<(String, i64)>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.set(name, value);
        self
    }

    /// Overwrites an existing entry in place, otherwise appends.
    pub fn set(&mut self, name: &str, value: i64) {
        match self.0.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = value,
            None => self.0.push((name.to_string(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn require(&self, name: &str) -> Result<i64> {
        self.get(name).ok_or_else(|| Error::MissingParam(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(n, v)| (n.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(String, i64)> for Params {
    fn from_iter<I: IntoIterator<Item = (String, i64)>>(iter: I) -> Self {
        let mut p = Params::new();
        for (n, v) in iter {
            p.set(&n, v);
        }
        p
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{n}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for Params {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split(';')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                let (n, v) = t.split_once('=').ok_or_else(|| Error::Parse(format!("bad parameter `{t}`")))?;
                let v = v.trim().parse().map_err(|_| Error::Parse(format!("non-integer value in `{t}`")))?;
                Ok((n.trim().to_string(), v))
            })
            .collect()
    }
}

/// Outcome of one verification at one parameter point.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check_id: String,
    pub params: Params,
    pub status: Status,
    pub witness: Option<Witness>,
    /// Which sub-claim failed or why the point was skipped.
    pub detail: Option<String>,
    pub elapsed: Duration,
}

impl CheckResult {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    /// Equality ignoring timing.
    pub fn same_outcome(&self, other: &CheckResult) -> bool {
        self.check_id == other.check_id
            && self.params == other.params
            && self.status == other.status
            && self.witness == other.witness
            && self.detail == other.detail
    }

    pub fn quotient(&self) -> Option<&Laurent> {
        self.witness.as_ref().and_then(Witness::as_laurent)
    }
}

/// Index data of the multi-index sums: `a`, `n_1..n_m` (cyclic, `n_(m+1) = n_1`),
/// the power parameter `r` and the exponent weight `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndexSpec {
    pub a: i64,
    pub ns: Vec<i64>,
    pub r: i64,
    pub j: i64,
}

impl MultiIndexSpec {
    pub fn new(a: i64, ns: Vec<i64>, r: i64, j: i64) -> Result<Self> {
        if ns.is_empty() {
            return Err(Error::Domain("multi-index needs at least one n_i".into()));
        }
        if let Some(bad) = ns.iter().find(|&&n| n < 1) {
            return Err(Error::Domain(format!("n_i must be positive, got {bad}")));
        }
        if a < 0 || a > ns[0] {
            return Err(Error::Domain(format!("need 0 <= a <= n_1, got a = {a}, n_1 = {}", ns[0])));
        }
        if r < 0 {
            return Err(Error::Domain(format!("need r >= 0, got {r}")));
        }
        Ok(Self { a, ns, r, j })
    }

    pub fn m(&self) -> usize {
        self.ns.len()
    }

    /// Inside `0 <= j <= m`, where Laurent-ness is a theorem.
    pub fn j_in_theorem_range(&self) -> bool {
        (0..=self.m() as i64).contains(&self.j)
    }

    /// `a, m, n1..nm, r, j`.
    pub fn to_params(&self) -> Params {
        let mut p = Params::new().with("a", self.a).with("m", self.m() as i64);
        for (i, n) in self.ns.iter().enumerate() {
            p.set(&format!("n{}", i + 1), *n);
        }
        p.with("r", self.r).with("j", self.j)
    }

    pub fn from_params(p: &Params) -> Result<Self> {
        let m = p.require("m")?;
        if m < 1 {
            return Err(Error::Domain(format!("m must be positive, got {m}")));
        }
        let ns = (1..=m).map(|i| p.require(&format!("n{i}"))).collect::<Result<Vec<_>>>()?;
        Self::new(p.require("a")?, ns, p.require("r")?, p.require("j")?)
    }
}

impl fmt::Display for MultiIndexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ns: Vec<String> = self.ns.iter().map(i64::to_string).collect();
        write!(f, "a={}; ns=[{}]; r={}; j={}", self.a, ns.join(","), self.r, self.j)
    }
}

pub(crate) fn require_range(name: &str, v: i64, lo: i64) -> Result<()> {
    if v < lo {
        return Err(Error::Domain(format!("need {name} >= {lo}, got {v}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_text_round_trip() {
        let p = Params::new().with("n", 3).with("a", -1).with("n1", 7);
        assert_eq!(p.to_string(), "n=3;a=-1;n1=7");
        assert_eq!(p.to_string().parse::<Params>().unwrap(), p);
        assert!("n=x".parse::<Params>().is_err());
    }

    #[test]
    fn multi_spec_validation() {
        let s = MultiIndexSpec::new(1, vec![2, 3], 0, 2).unwrap();
        assert_eq!(MultiIndexSpec::from_params(&s.to_params()).unwrap(), s);
        assert!(s.j_in_theorem_range());
        assert!(MultiIndexSpec::new(3, vec![2], 0, 0).is_err());
        assert!(MultiIndexSpec::new(0, vec![], 0, 0).is_err());
        assert!(MultiIndexSpec::new(0, vec![1, 0], 0, 0).is_err());
    }

    #[test]
    fn witness_tags() {
        let w = Witness::Laurent(Laurent::q_power(-2));
        assert_eq!(Witness::from_tagged(&w.to_tagged()).unwrap(), w);
        let r = Witness::Rational(Rational::new(9.into(), 4.into()));
        assert_eq!(r.to_tagged(), "rational:9/4");
        assert_eq!(Witness::from_tagged(&r.to_tagged()).unwrap(), r);
    }
}
