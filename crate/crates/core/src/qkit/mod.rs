//! q-integers, q-shifted factorials, Gaussian binomials and cyclotomic
//! polynomials, plus the factored-form calculus used for coprimality.

mod binomial;
mod cyclotomic;
mod factor;

pub use binomial::{q_binomial, q_binomial_checked, q_binomial_cyclotomic, q_binomial_factorial_ratio};
pub use cyclotomic::{cyclotomic, divisors, mobius};
pub use factor::{factor_form_one_plus_power, factor_form_qbinomial, factor_form_qint, factored_gcd, FactorForm};

use crate::arith::{Laurent, Poly};

/// `[n] = 1 + q + ... + q^(n-1)`; `[0] = 0`.
pub fn q_integer(n: u32) -> Poly {
    Poly::from_i64s(&vec![1; n as usize])
}

/// `(q;q)_n = (1 - q)(1 - q^2)...(1 - q^n)`.
pub fn q_factorial(n: u32) -> Poly {
    (1..=n as usize).fold(Poly::one(), |acc, i| &acc * &(&Poly::one() - &Poly::q_power(i)))
}

/// `(q^m; q)_s = (1 - q^m)(1 - q^(m+1))...(1 - q^(m+s-1))` for any integer `m`.
pub fn q_pochhammer_power(m: i64, s: u32) -> Laurent {
    (0..s as i64).fold(Laurent::one(), |acc, i| &acc * &(&Laurent::one() - &Laurent::q_power(m + i)))
}
