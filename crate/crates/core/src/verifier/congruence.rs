//! Integer congruences for odd powers of the Catalan triangle families.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::audit::Audit;
use super::{require_range, CheckResult, Params, Witness};
use crate::arith::{Integer, Rational};
use crate::error::{Error, Result};
use crate::triangle::{a_number, b_number, binomial_int as binom, c_number};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleFamily {
    /// `sum_{k=0}^a C(n,k)^(2r+1)` modulo `binom(n-1,a)`, `n > a >= 1`.
    Cnk,
    /// `sum_{k=a}^n B(n,k)^(2r+1)` modulo `binom(2n-1,n-a)`.
    Bnk,
    /// `sum_{k=a}^n A(n,k)^(2r+1)` modulo `binom(2n,n-a)`.
    Ank,
}

impl TriangleFamily {
    pub fn check_id(self) -> &'static str {
        match self {
            TriangleFamily::Cnk => "q1-cnk",
            TriangleFamily::Bnk => "q1-bnk",
            TriangleFamily::Ank => "q1-ank",
        }
    }
}

impl fmt::Display for TriangleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleFamily::Cnk => "cnk",
            TriangleFamily::Bnk => "bnk",
            TriangleFamily::Ank => "ank",
        })
    }
}

impl FromStr for TriangleFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cnk" => Ok(TriangleFamily::Cnk),
            "bnk" => Ok(TriangleFamily::Bnk),
            "ank" => Ok(TriangleFamily::Ank),
            other => Err(Error::Parse(format!("unknown triangle family {other:?}"))),
        }
    }
}

fn validate(kind: TriangleFamily, n: i64, a: i64, r: i64) -> Result<()> {
    require_range("r", r, 0)?;
    match kind {
        TriangleFamily::Cnk => {
            require_range("a", a, 1)?;
            if n <= a {
                return Err(Error::Domain(format!("need n > a, got n = {n}, a = {a}")));
            }
        }
        TriangleFamily::Bnk => {
            require_range("n", n, 1)?;
            require_range("a", a, 0)?;
        }
        TriangleFamily::Ank => require_range("a", a, 0)?,
    }
    if a > n {
        return Err(Error::Domain(format!("need a <= n, got a = {a}, n = {n}")));
    }
    Ok(())
}

fn odd_power_sum(range: impl Iterator<Item = i64>, r: i64, f: impl Fn(i64) -> Integer) -> Integer {
    let e = u32::try_from(2 * r + 1).expect("power fits in u32");
    range.map(|k| num_traits::pow(f(k), e as usize)).fold(Integer::zero(), |acc, v| acc + v)
}

/// `(sum, modulus)` for the requested family.
pub fn q1_congruence_parts(kind: TriangleFamily, n: i64, a: i64, r: i64) -> Result<(Integer, Integer)> {
    validate(kind, n, a, r)?;
    Ok(match kind {
        TriangleFamily::Cnk => (odd_power_sum(0..=a, r, |k| c_number(n, k)), binom(n - 1, a)),
        TriangleFamily::Bnk => (odd_power_sum(a..=n, r, |k| b_number(n, k)), binom(2 * n - 1, n - a)),
        TriangleFamily::Ank => (odd_power_sum(a..=n, r, |k| a_number(n, k)), binom(2 * n, n - a)),
    })
}

/// Integer divisibility with the quotient as witness. For `cnk` with
/// `n >= 2a` the sum is also matched against the `bnk`/`ank` sum it splits
/// into by the parity of `n`.
pub fn check_q1_congruence(kind: TriangleFamily, n: i64, a: i64, r: i64) -> Result<CheckResult> {
    let (sum, modulus) = q1_congruence_parts(kind, n, a, r)?;
    let params = Params::new().with("n", n).with("a", a).with("r", r);
    let mut audit = Audit::start();
    let (quotient, rem) = sum.div_rem(&modulus);
    if !rem.is_zero() {
        audit.integer_eq("remainder", &rem.abs(), &Integer::zero());
    }
    if kind == TriangleFamily::Cnk && n >= 2 * a {
        let half = n / 2;
        let split = if n % 2 == 0 {
            q1_congruence_parts(TriangleFamily::Bnk, half, half - a, r)?
        } else {
            q1_congruence_parts(TriangleFamily::Ank, half, half - a, r)?
        };
        audit.integer_eq("parity split sum", &sum, &split.0);
        audit.integer_eq("parity split modulus", &modulus, &split.1);
    }
    Ok(audit.finish(kind.check_id(), params, Some(Witness::Rational(Rational::from_integer(quotient)))))
}
