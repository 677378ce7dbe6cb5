//! Exact scalars and the (Laurent) polynomial ring over the integers.

mod laurent;
mod poly;
mod text;

pub use laurent::Laurent;
pub use poly::Poly;
pub use text::parse_laurent;

use crate::error::Result;

/// Unbounded signed integer.
pub type Integer = num_bigint::BigInt;

/// Unbounded rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    a * b
}

pub fn poly_exact_div(a: &Poly, b: &Poly) -> Result<Poly> {
    a.exact_div(b)
}

/// `Some(Q)` with `P = D * Q` and `Q` an integer Laurent polynomial, `None`
/// otherwise. This is the `P(q) = 0 (mod D(q))` predicate.
pub fn laurent_quotient(p: &Laurent, d: &Poly) -> Option<Laurent> {
    p.quotient(d)
}

/// `q^d * P(1/q)` in canonical Laurent form.
pub fn poly_reverse(p: &Poly, d: i64) -> Laurent {
    Laurent::from(p.clone()).invert_variable().mul_q_power(d)
}

pub fn eval_at(p: &Laurent, x: &Rational) -> Result<Rational> {
    p.eval_at(x)
}

pub(crate) fn int(v: i64) -> Integer {
    Integer::from(v)
}
