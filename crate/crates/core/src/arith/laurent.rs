use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Integer, Poly, Rational};
use crate::error::{Error, Result};

/// Integer-coefficient Laurent polynomial `q^offset * body(q)`.
///
/// Canonical form: the body has a nonzero constant term, and zero is stored as
/// offset 0 with an empty body. Derived equality is therefore semantic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    offset: i64,
    body: Poly,
}

impl Laurent {
    pub fn new(offset: i64, body: Poly) -> Self {
        match body.valuation() {
            None => Self::zero(),
            Some(0) => Self { offset, body },
            Some(v) => Self { offset: offset + v as i64, body: body.unshift(v) },
        }
    }

    pub fn zero() -> Self {
        Self { offset: 0, body: Poly::zero() }
    }

    pub fn one() -> Self {
        Self { offset: 0, body: Poly::one() }
    }

    pub fn monomial(c: impl Into<Integer>, exp: i64) -> Self {
        Self::new(exp, Poly::constant(c))
    }

    pub fn q_power(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn body(&self) -> &Poly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.offset == 0 && self.body.is_one()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.body.degree().map(|d| self.offset + d as i64)
    }

    /// `(lowest, highest)` exponents with nonzero coefficients.
    pub fn support(&self) -> Option<(i64, i64)> {
        Some((self.min_exponent()?, self.max_exponent()?))
    }

    pub fn coeff(&self, exp: i64) -> Integer {
        usize::try_from(exp - self.offset)
            .ok()
            .and_then(|i| self.body.coeff(i).cloned())
            .unwrap_or_else(Integer::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Integer)> + '_ {
        self.body
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    pub fn min_coefficient(&self) -> Option<Integer> {
        self.terms().map(|(_, c)| c).min().cloned()
    }

    /// The polynomial itself when no exponent is negative.
    pub fn to_poly(&self) -> Option<Poly> {
        match usize::try_from(self.offset) {
            Ok(o) => Some(self.body.shift(o)),
            Err(_) if self.is_zero() => Some(Poly::zero()),
            Err(_) => None,
        }
    }

    pub fn mul_q_power(&self, exp: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { offset: self.offset + exp, body: self.body.clone() }
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self { offset: self.offset * exp as i64, body: self.body.pow(exp) }
    }

    /// Substitutes `q -> 1/q`.
    pub fn invert_variable(&self) -> Self {
        let Some(deg) = self.body.degree() else {
            return Self::zero();
        };
        let reversed: Vec<Integer> = self.body.coeffs().iter().rev().cloned().collect();
        Self::new(-self.offset - deg as i64, Poly::from_coeffs(reversed))
    }

    /// `self / d` when it is again an integer Laurent polynomial.
    ///
    /// The monomial part of `d` is a unit and only moves the offset; what is
    /// left has a nonzero constant term and is coprime to `q`, so Laurent
    /// divisibility reduces to ordinary exact division of the bodies.
    pub fn quotient(&self, d: &Poly) -> Option<Laurent> {
        let v = d.valuation().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let core = d.unshift(v);
        let q = self.body.exact_div(&core).ok()?;
        Some(Self::new(self.offset - v as i64, q))
    }

    /// Division by a Laurent polynomial.
    pub fn quotient_laurent(&self, d: &Laurent) -> Option<Laurent> {
        self.quotient(&d.body).map(|q| q.mul_q_power(-d.offset))
    }

    pub fn eval_at(&self, x: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        if x.is_zero() {
            return if self.offset < 0 { Err(Error::ZeroAtNegativeOffset) } else if self.offset == 0 {
                Ok(Rational::from_integer(self.body.coeffs()[0].clone()))
            } else {
                Ok(Rational::zero())
            };
        }
        Ok(rational_pow(x, self.offset) * self.body.eval(x))
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> Integer {
        self.body.eval_one()
    }
}

fn rational_pow(x: &Rational, exp: i64) -> Rational {
    let base = if exp < 0 { x.recip() } else { x.clone() };
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl From<Poly> for Laurent {
    fn from(p: Poly) -> Self {
        Self::new(0, p)
    }
}

impl From<&Poly> for Laurent {
    fn from(p: &Poly) -> Self {
        Self::new(0, p.clone())
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Self::new(0, Poly::constant(c))
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let a = self.body.shift((self.offset - lo) as usize);
        let b = rhs.body.shift((rhs.offset - lo) as usize);
        Laurent::new(lo, &a + &b)
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        *self = &*self + rhs;
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        Laurent::new(self.offset + rhs.offset, &self.body * &rhs.body)
    }
}

impl Mul<&Poly> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Poly) -> Laurent {
        Laurent::new(self.offset, &self.body * rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { offset: self.offset, body: -&self.body }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent { (&self).$m(&rhs) }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: &Laurent) -> Laurent { (&self).$m(rhs) }
        }
        impl $tr<Laurent> for &Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Mul<Poly> for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Poly) -> Laurent {
        &self * &rhs
    }
}

impl Mul<&Poly> for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Poly) -> Laurent {
        &self * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{laurent_quotient, poly_reverse};

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn rat(n: i64) -> Rational {
        Rational::from_integer(Integer::from(n))
    }

    #[test]
    fn canonical_form_strips_low_zeros() {
        let l = Laurent::new(-3, p(&[0, 0, 5, 1]));
        assert_eq!(l.offset(), -1);
        assert_eq!(l.body(), &p(&[5, 1]));
        assert_eq!(Laurent::new(7, Poly::zero()), Laurent::zero());
        assert_eq!(Laurent::zero().offset(), 0);
    }

    #[test]
    fn quotient_examples() {
        // (1 + q^2) q^-1 / (1 + q^2) = q^-1
        let num = Laurent::new(-1, p(&[1, 0, 1]));
        assert_eq!(laurent_quotient(&num, &p(&[1, 0, 1])), Some(Laurent::q_power(-1)));
        assert_eq!(laurent_quotient(&Laurent::zero(), &p(&[3, 1])), Some(Laurent::zero()));
        assert_eq!(laurent_quotient(&Laurent::from(p(&[1, 1])), &p(&[1, 1, 1])), None);
        // a monomial factor in the divisor only moves the offset
        assert_eq!(laurent_quotient(&Laurent::from(p(&[1, 1])), &p(&[0, 0, 1, 1])), Some(Laurent::q_power(-2)));
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(poly_reverse(&p(&[1, 1]), 1), Laurent::from(p(&[1, 1])));
        // q^0 * (1 + 2/q) = 2 q^-1 + 1
        let r = poly_reverse(&p(&[1, 2]), 0);
        assert_eq!((r.offset(), r.body()), (-1, &p(&[2, 1])));
        assert_eq!(poly_reverse(&p(&[0, 0, 1]), 2), Laurent::one());
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(Laurent::from(p(&[1, 1, 1])).eval_at(&rat(1)).unwrap(), rat(3));
        assert_eq!(Laurent::new(-1, p(&[1, 0, 1])).eval_at(&rat(1)).unwrap(), rat(2));
        assert!(matches!(Laurent::q_power(-1).eval_at(&rat(0)), Err(Error::ZeroAtNegativeOffset)));
        assert_eq!(Laurent::new(-2, p(&[1, 1])).eval_at(&rat(2)).unwrap(), Rational::new(3.into(), 4.into()));
    }

    #[test]
    fn arithmetic_aligns_offsets() {
        let a = Laurent::new(-2, p(&[1, 1]));
        let b = Laurent::new(1, p(&[2]));
        let s = &a + &b;
        assert_eq!(s, Laurent::new(-2, p(&[1, 1, 0, 2])));
        assert_eq!(&s - &b, a);
        assert_eq!(&a - &a, Laurent::zero());
        assert_eq!((&a * &b), Laurent::new(-1, p(&[2, 2])));
        assert_eq!(a.support(), Some((-2, -1)));
        assert_eq!(Laurent::new(-6, p(&[1, -1, 0, 1])).min_coefficient(), Some(Integer::from(-1)));
    }
}
