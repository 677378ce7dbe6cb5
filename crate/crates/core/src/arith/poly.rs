use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Integer, Rational};
use crate::error::{Error, Result};

/// Dense polynomial in `q` with integer coefficients, ascending exponent order.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Integer>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<Integer>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::zero(); exp + 1];
        coeffs[exp] = c;
        Self { coeffs }
    }

    pub fn q_power(exp: usize) -> Self {
        Self::monomial(1, exp)
    }

    pub fn from_coeffs(coeffs: Vec<Integer>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, exp: usize) -> Option<&Integer> {
        self.coeffs.get(exp)
    }

    pub fn leading(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `q^k`, discarding nothing; the caller guarantees
    /// `k <= valuation`.
    pub(crate) fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.coeffs[..k.min(self.coeffs.len())].iter().all(Zero::is_zero));
        Self { coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec() }
    }

    pub fn scale(&self, c: &Integer) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sum of coefficients, i.e. the value at `q = 1`.
    pub fn eval_one(&self) -> Integer {
        self.coeffs.iter().sum()
    }

    /// Exact quotient `self / d`.
    ///
    /// Fails with [`Error::NotDivisible`] when the remainder is nonzero or the
    /// quotient would have a non-integer coefficient. Quotient coefficients of
    /// long division over the rationals are determined top-down one at a time,
    /// so the first non-integral one settles the question.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coeffs.len() - 1;
        let m = d.coeffs.len() - 1;
        if n < m {
            return Err(Error::NotDivisible);
        }
        if let Some(q) = small_exact_div(&self.coeffs, &d.coeffs) {
            return q.map(Self::from_coeffs);
        }
        let lead = &d.coeffs[m];
        let unit_lead = lead.abs().is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Integer::zero(); n - m + 1];
        for i in (0..=n - m).rev() {
            if rem[i + m].is_zero() {
                continue;
            }
            let qc = if unit_lead {
                &rem[i + m] * lead
            } else {
                let (qc, r) = rem[i + m].div_rem(lead);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                qc
            };
            for (j, dj) in d.coeffs.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] -= &qc * dj;
                }
            }
            quot[i] = qc;
        }
        if rem[..m].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Greatest common divisor over the rationals, normalised to a primitive
    /// integer polynomial with positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = to_rational(self);
        let mut b = to_rational(other);
        while !b.is_empty() {
            let r = rational_rem(&a, &b);
            a = b;
            b = r;
        }
        primitive_part(&a)
    }

    /// Content-free version with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        primitive_part(&to_rational(self))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

fn to_i64s(c: &[Integer]) -> Option<Vec<i64>> {
    c.iter().map(ToPrimitive::to_i64).collect()
}

fn bits(x: u128) -> u32 {
    128 - x.leading_zeros()
}

fn max_abs(c: &[i64]) -> u128 {
    c.iter().map(|x| x.unsigned_abs() as u128).max().unwrap_or(0)
}

fn mul_coeffs(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if let (Some(sa), Some(sb)) = (to_i64s(a), to_i64s(b)) {
        let len = a.len().min(b.len()) as u128;
        if bits(max_abs(&sa)) + bits(max_abs(&sb)) + bits(len) <= 126 {
            let mut out = vec![0i128; a.len() + b.len() - 1];
            for (i, &x) in sa.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let x = x as i128;
                for (o, &y) in out[i..].iter_mut().zip(&sb) {
                    *o += x * y as i128;
                }
            }
            return out.into_iter().map(Integer::from).collect();
        }
    }
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Long division in `i128` when every coefficient fits in `i64` and the
/// divisor is monic up to sign. Returns `None` when the fast path does not
/// apply or an intermediate value would leave `i64` range.
fn small_exact_div(a: &[Integer], d: &[Integer]) -> Option<Result<Vec<Integer>>> {
    let sa = to_i64s(a)?;
    let sd = to_i64s(d)?;
    let m = sd.len() - 1;
    let lead = sd[m];
    if lead.abs() != 1 {
        return None;
    }
    let mut rem: Vec<i128> = sa.iter().map(|&x| x as i128).collect();
    let n = rem.len() - 1;
    let mut quot = vec![0i128; n - m + 1];
    const LIMIT: i128 = i64::MAX as i128;
    for i in (0..=n - m).rev() {
        let c = rem[i + m];
        if c == 0 {
            continue;
        }
        let qc = c * lead as i128;
        if qc.abs() > LIMIT {
            return None;
        }
        for (j, &dj) in sd.iter().enumerate() {
            if dj != 0 {
                let v = rem[i + j] - qc * dj as i128;
                if v.abs() > LIMIT {
                    return None;
                }
                rem[i + j] = v;
            }
        }
        quot[i] = qc;
    }
    if rem[..m].iter().any(|&c| c != 0) {
        return Some(Err(Error::NotDivisible));
    }
    Some(Ok(quot.into_iter().map(Integer::from).collect()))
}

fn to_rational(p: &Poly) -> Vec<Rational> {
    p.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

fn rational_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut rem = a.to_vec();
    let m = b.len() - 1;
    let lead = &b[m];
    while rem.len() > m {
        let top = rem.len() - 1;
        let f = &rem[top] / lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &f * bj;
            rem[top - m + j] -= t;
        }
        rem.pop();
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem
}

fn primitive_part(p: &[Rational]) -> Poly {
    if p.is_empty() {
        return Poly::zero();
    }
    let lcm = p.iter().fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<Integer> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(Signed::is_negative) { -Integer::one() } else { Integer::one() };
    let unit = content * sign;
    Poly::from_coeffs(ints.into_iter().map(|c| c / &unit).collect())
}

impl From<Integer> for Poly {
    fn from(c: Integer) -> Self {
        Self::from_coeffs(vec![c])
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Integer::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Integer::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::from_coeffs(mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly { (&self).$m(rhs) }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
