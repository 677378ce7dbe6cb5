//! Catalan numbers, the Catalan triangles `B(n,k)`, `C(n,k)`, the companion
//! family `A(n,k)`, and the q-polynomials `B(n,k;q)`, `A(n,k;q)`.
//!
//! Every value with a rational prefactor is cross-checked against its
//! difference-of-binomials form.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::arith::{Integer, Laurent, Poly};
use crate::error::{Error, Result};
use crate::qkit::{q_binomial, q_integer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// `C_n = binom(2n, n) / (n + 1)`; `k` is ignored.
    CatalanNumber,
    /// `B(n,k) = k/n * binom(2n, n-k)`.
    ShapiroB,
    /// `C(n,k) = (n-2k)/n * binom(n, k)`.
    MianaC,
    /// `A(n,k) = (2k+1)/(2n+1) * binom(2n+1, n-k)`.
    OddA,
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleKind::CatalanNumber => "catalan",
            TriangleKind::ShapiroB => "B",
            TriangleKind::MianaC => "C",
            TriangleKind::OddA => "A",
        })
    }
}

/// One entry of a triangle together with its indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleEntry {
    pub kind: TriangleKind,
    pub n: i64,
    pub k: i64,
    pub value: Integer,
}

impl TriangleEntry {
    pub fn new(kind: TriangleKind, n: i64, k: i64) -> Result<Self> {
        Ok(Self { kind, n, k, value: triangle_number(kind, n, k)? })
    }
}

/// `binom(n, k)`, zero whenever `k < 0`, `k > n`, or `n < 0`.
pub fn binomial_int(n: i64, k: i64) -> Integer {
    if n < 0 || k < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn catalan_number(n: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::Domain(format!("Catalan number C_{n}")));
    }
    exact_ratio(binomial_int(2 * n, n), n + 1, "C_n")
}

fn exact_ratio(num: Integer, den: i64, what: &str) -> Result<Integer> {
    let (q, r) = num.div_rem(&Integer::from(den));
    if !r.is_zero() {
        return Err(Error::InternalMismatch(format!("{what}: prefactor does not cancel")));
    }
    Ok(q)
}

pub fn triangle_number(kind: TriangleKind, n: i64, k: i64) -> Result<Integer> {
    if kind == TriangleKind::CatalanNumber {
        return catalan_number(n);
    }
    if n < 1 && !(kind == TriangleKind::OddA && n == 0) {
        return Err(Error::Domain(format!("{kind}({n},{k}) needs n >= 1")));
    }
    let (prefactor, difference) = match kind {
        TriangleKind::ShapiroB => (
            exact_ratio(binomial_int(2 * n, n - k) * k, n, "B(n,k)")?,
            binomial_int(2 * n - 1, n - k) - binomial_int(2 * n - 1, n - k - 1),
        ),
        TriangleKind::MianaC => (
            exact_ratio(binomial_int(n, k) * (n - 2 * k), n, "C(n,k)")?,
            binomial_int(n - 1, k) - binomial_int(n - 1, k - 1),
        ),
        TriangleKind::OddA => {
            if !(0..=n).contains(&k) {
                return Err(Error::Domain(format!("A({n},{k}) needs 0 <= k <= n")));
            }
            (
                exact_ratio(binomial_int(2 * n + 1, n - k) * (2 * k + 1), 2 * n + 1, "A(n,k)")?,
                binomial_int(2 * n, n - k) - binomial_int(2 * n, n - k - 1),
            )
        }
        TriangleKind::CatalanNumber => unreachable!(),
    };
    if prefactor != difference {
        return Err(Error::InternalMismatch(format!("closed forms of {kind}({n},{k}) disagree")));
    }
    Ok(prefactor)
}

pub fn b_number(n: i64, k: i64) -> Integer {
    triangle_number(TriangleKind::ShapiroB, n, k).expect("B(n,k) with n >= 1")
}

pub fn c_number(n: i64, k: i64) -> Integer {
    triangle_number(TriangleKind::MianaC, n, k).expect("C(n,k) with n >= 1")
}

pub fn a_number(n: i64, k: i64) -> Integer {
    triangle_number(TriangleKind::OddA, n, k).expect("A(n,k) with 0 <= k <= n")
}

fn qint(n: i64) -> Poly {
    q_integer(u32::try_from(n).expect("q-integer index is non-negative"))
}

/// `B(n,k;q) = [k]/[n] * [2n choose n-k]` for `1 <= k <= n`, and `0` for `k = 0`.
pub fn b_poly_q(n: i64, k: i64) -> Result<Poly> {
    if n < 1 || k < 0 || k > n {
        return Err(Error::Domain(format!("B({n},{k};q) needs 0 <= k <= n, n >= 1")));
    }
    if k == 0 {
        return Ok(Poly::zero());
    }
    (&qint(k) * &*q_binomial(2 * n, n - k))
        .exact_div(&qint(n))
        .map_err(|_| Error::InternalMismatch(format!("[n] does not divide the numerator of B({n},{k};q)")))
}

/// `A(n,k;q) = [2n choose n-k] - [2n choose n-k-1]`, checked against
/// `q^(n-k) [2k+1]/[2n+1] [2n+1 choose n-k]`.
pub fn a_poly_q(n: i64, k: i64) -> Result<Poly> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::Domain(format!("A({n},{k};q) needs 0 <= k <= n")));
    }
    let difference = &*q_binomial(2 * n, n - k) - &*q_binomial(2 * n, n - k - 1);
    let scaled = (&qint(2 * k + 1) * &*q_binomial(2 * n + 1, n - k))
        .exact_div(&qint(2 * n + 1))
        .map_err(|_| Error::InternalMismatch(format!("[2n+1] does not divide A({n},{k};q)")))?;
    if Laurent::from(difference.clone()) != Laurent::new(n - k, scaled) {
        return Err(Error::InternalMismatch(format!("two forms of A({n},{k};q) disagree")));
    }
    Ok(difference)
}
