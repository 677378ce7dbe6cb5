//! Polynomial divisibility for the single-index sums: the half-range
//! `[2k][k]^(2r)` sums, the odd-power `B(n,k;q)` and `A(n,k;q)` sums, and the
//! `X_r(a,n,s)` family with its two induction steps.

use num_traits::Zero;

use super::audit::Audit;
use super::congruence::{q1_congruence_parts, TriangleFamily};
use super::{require_range, CheckResult, Params, Witness};
use crate::arith::{Integer, Laurent, Poly};
use crate::error::{Error, Result};
use crate::qkit::{q_binomial, q_integer, q_pochhammer_power};
use crate::triangle::{a_poly_q, b_poly_q};

pub(crate) fn qint(n: i64) -> Poly {
    q_integer(u32::try_from(n).expect("q-integer index is non-negative"))
}

pub(crate) fn qbin(n: i64, k: i64) -> Laurent {
    Laurent::from(&*q_binomial(n, k))
}

pub(crate) fn qp(e: i64) -> Laurent {
    Laurent::q_power(e)
}

fn pow_u32(e: i64) -> u32 {
    u32::try_from(e).expect("exponent is non-negative")
}

fn single_sum(a: i64, n: i64, r: i64, j: i64) -> Laurent {
    let mut acc = Laurent::zero();
    for k in a.max(1)..=n {
        let term = qp((r + 1) * (n - k) + j * k * k) * &qint(2 * k) * &qint(k).pow(pow_u32(2 * r)) * qbin(2 * n, n - k);
        acc += &term;
    }
    acc
}

/// `S_r(a,n;q) = sum_{k=a}^n [2k][k]^(2r) q^((r+1)(n-k)) [2n choose n-k]`.
pub fn q_s(a: i64, n: i64, r: i64) -> Poly {
    single_sum(a, n, r, 0).to_poly().expect("non-negative exponents")
}

/// `T_r(a,n;q)`, the same sum weighted by `q^(k^2)`.
pub fn q_t(a: i64, n: i64, r: i64) -> Poly {
    single_sum(a, n, r, 1).to_poly().expect("non-negative exponents")
}

/// The half-range sum `sum_{k=a}^n [2k][k]^(2r) q^((r+1)(n-k)+jk^2) [2n choose n-k]`
/// against `[n+a][2n choose n-a]`. Also checks the telescoped value at
/// `r = 0`, the recurrence in `r` and, for `j` in `{0,1}`, the reversal
/// `T_r(q) = q^(n^2+2rn+2n-2r-1) S_r(1/q)`.
pub fn s_r_single(a: i64, n: i64, r: i64, j: i64) -> Result<(Laurent, CheckResult)> {
    require_range("n", n, 1)?;
    require_range("a", a, 0)?;
    require_range("r", r, 0)?;
    if a > n {
        return Err(Error::Domain(format!("need a <= n, got a = {a}, n = {n}")));
    }
    let mut audit = Audit::start();
    let sum = single_sum(a, n, r, j);
    let modulus = &qint(n + a) * &*q_binomial(2 * n, n - a);
    let quotient = audit.divides("half-range divisibility", &sum, &modulus);

    let s = Laurent::from(q_s(a, n, r));
    if r == 0 {
        audit.laurent_eq("telescoped value", &s, &Laurent::from(&modulus));
    } else {
        let rhs = Laurent::from(qint(n).pow(2) * q_s(a, n, r - 1))
            - qp(r) * &(&qint(2 * n) * &qint(2 * n - 1)) * &q_s(a, n - 1, r - 1);
        audit.laurent_eq("recurrence in r", &s, &rhs);
    }
    for k in a..=n {
        let lhs = qp(n - k) * &qint(k).pow(2) * qbin(2 * n, n - k);
        let rhs = qbin(2 * n, n - k) * &qint(n).pow(2) - qbin(2 * n - 2, n - k - 1) * &(&qint(2 * n) * &qint(2 * n - 1));
        audit.laurent_eq(&format!("termwise step at k={k}"), &lhs, &rhs);
    }
    if j == 0 || j == 1 {
        let t = Laurent::from(q_t(a, n, r));
        let reversed = s.invert_variable().mul_q_power(n * n + 2 * r * n + 2 * n - 2 * r - 1);
        audit.laurent_eq("reversal", &t, &reversed);
    }
    let params = Params::new().with("a", a).with("n", n).with("r", r).with("j", j);
    let result = audit.finish("s-r-single", params, quotient.map(Witness::Laurent));
    Ok((sum, result))
}

fn power_domain(n: i64, a: i64, r: i64) -> Result<()> {
    require_range("n", n, 1)?;
    require_range("a", a, 0)?;
    require_range("r", r, 0)?;
    if a > n {
        return Err(Error::Domain(format!("need a <= n, got a = {a}, n = {n}")));
    }
    Ok(())
}

/// `sum_{k=a}^n (1+q^k) B(n,k;q)^(2r+1) q^(jk^2-(r+1)k)`.
pub fn bnk_power_sum(n: i64, a: i64, r: i64, j: i64) -> Result<Laurent> {
    power_domain(n, a, r)?;
    let mut acc = Laurent::zero();
    for k in a.max(1)..=n {
        let b = b_poly_q(n, k)?.pow(pow_u32(2 * r + 1));
        acc += &(qp(j * k * k - (r + 1) * k) * &(&Poly::one() + &Poly::q_power(k as usize)) * &b);
    }
    Ok(acc)
}

/// `(1+q^n) [2n-1 choose n-a]`.
pub fn bnk_power_modulus(n: i64, a: i64) -> Poly {
    (&Poly::one() + &Poly::q_power(n as usize)) * &*q_binomial(2 * n - 1, n - a)
}

/// `sum_{k=a}^n A(n,k;q)^(2r+1) q^(j(k^2+k))`.
pub fn ank_power_sum(n: i64, a: i64, r: i64, j: i64) -> Result<Laurent> {
    power_domain(n, a, r)?;
    let mut acc = Laurent::zero();
    for k in a..=n {
        acc += &(qp(j * (k * k + k)) * &a_poly_q(n, k)?.pow(pow_u32(2 * r + 1)));
    }
    Ok(acc)
}

/// `[2n choose n-a]`.
pub fn ank_power_modulus(n: i64, a: i64) -> Poly {
    (*q_binomial(2 * n, n - a)).clone()
}

fn power_check(
    check_id: &str,
    family: TriangleFamily,
    (n, a, r, j): (i64, i64, i64, i64),
    sum: Laurent,
    modulus: Poly,
) -> Result<CheckResult> {
    let mut audit = Audit::start();
    let quotient = audit.divides("odd-power divisibility", &sum, &modulus);
    if let Some(q) = &quotient {
        audit.laurent_eq("quotient re-expansion", &(q * &modulus), &sum);
        // At q = 1 the quotient reduces to the integer congruence quotient.
        let (int_sum, int_mod) = q1_congruence_parts(family, n, a, r)?;
        if !int_mod.is_zero() && int_sum.clone() % &int_mod == Integer::zero() {
            audit.integer_eq("q = 1 specialisation", &q.eval_one(), &(int_sum / int_mod));
        }
    }
    let params = Params::new().with("n", n).with("a", a).with("r", r).with("j", j);
    Ok(audit.finish(check_id, params, quotient.map(Witness::Laurent)))
}

/// `(1+q^n)[2n-1 choose n-a]` divides the odd-power `B(n,k;q)` sum.
pub fn check_bnk_power(n: i64, a: i64, r: i64, j: i64) -> Result<CheckResult> {
    let sum = bnk_power_sum(n, a, r, j)?;
    power_check("bnk-power", TriangleFamily::Bnk, (n, a, r, j), sum, bnk_power_modulus(n, a))
}

/// `[2n choose n-a]` divides the odd-power `A(n,k;q)` sum.
pub fn check_ank_power(n: i64, a: i64, r: i64, j: i64) -> Result<CheckResult> {
    let sum = ank_power_sum(n, a, r, j)?;
    power_check("ank-power", TriangleFamily::Ank, (n, a, r, j), sum, ank_power_modulus(n, a))
}

fn pair_factor(k: i64, s: i64) -> Laurent {
    let s = pow_u32(s);
    &q_pochhammer_power(-k, s) * &q_pochhammer_power(k + 1, s)
}

/// `X_r(a,n,s) = sum_{k=a}^n q^(-(2r+1)k) [2k+1]^(2r+1) [2n+1 choose n-k]
/// (q^-k;q)_s (q^(k+1);q)_s`, zero when `a > n`.
pub fn x_r_sum(a: i64, n: i64, r: i64, s: i64) -> Laurent {
    let mut acc = Laurent::zero();
    for k in a..=n {
        acc += &(qp(-(2 * r + 1) * k) * &qint(2 * k + 1).pow(pow_u32(2 * r + 1)) * qbin(2 * n + 1, n - k) * pair_factor(k, s));
    }
    acc
}

/// `sum_{k=a}^n q^(n-k) [2k+1] [2n+1 choose n-k] (q^-k;q)_s (q^(k+1);q)_s`.
pub fn companion_sum(a: i64, n: i64, s: i64) -> Laurent {
    let mut acc = Laurent::zero();
    for k in a..=n {
        acc += &(qp(n - k) * &qint(2 * k + 1) * qbin(2 * n + 1, n - k) * pair_factor(k, s));
    }
    acc
}

/// `[2n+1][2n choose n-a]`.
pub fn x_r_modulus(a: i64, n: i64) -> Poly {
    &qint(2 * n + 1) * &*q_binomial(2 * n, n - a)
}

/// Divisibility of `X_r(a,n,s)` and of the `r = 0` companion sum by
/// `[2n+1][2n choose n-a]`, the `s = 0` closed value, the product identity
/// `[2n][2n+1][2n-1][2n-2 choose n-a-1] = [2n+1][2n choose n-a][n-a][n+a]`,
/// the termwise steps in `s` and `r`, and the three-term recurrence in `r`.
pub fn x_r_sum_check(a: i64, n: i64, r: i64, s: i64) -> Result<CheckResult> {
    require_range("n", n, 1)?;
    require_range("a", a, 0)?;
    require_range("r", r, 0)?;
    require_range("s", s, 0)?;
    if a > n {
        return Err(Error::Domain(format!("need a <= n, got a = {a}, n = {n}")));
    }
    let mut audit = Audit::start();
    let modulus = x_r_modulus(a, n);
    let x = x_r_sum(a, n, r, s);
    let quotient = audit.divides("X_r divisibility", &x, &modulus);
    audit.divides("companion divisibility", &companion_sum(a, n, s), &modulus);
    audit.laurent_eq("s = 0 closed value", &companion_sum(a, n, 0), &Laurent::from(&modulus));

    let lhs = Laurent::from(&qint(2 * n) * &qint(2 * n + 1) * &qint(2 * n - 1) * &*q_binomial(2 * n - 2, n - a - 1));
    let rhs = Laurent::from(&modulus * &qint(n - a) * &qint(n + a));
    audit.laurent_eq("product identity", &lhs, &rhs);

    let one = Laurent::one();
    let q2n = &(&Poly::one() - &Poly::q_power(2 * n as usize)) * &(&Poly::one() - &Poly::q_power(2 * n as usize + 1));
    let qn = &qint(2 * n) * &qint(2 * n + 1);
    for k in a..=n {
        let base = pair_factor(k, s);
        let step_lhs = qbin(2 * n + 1, n - k) * pair_factor(k, s + 1);
        let step_rhs = (&one - &qp(s - n)) * (&one - &qp(s + n + 1)) * qbin(2 * n + 1, n - k) * &base
            + qp(s - n) * &q2n * qbin(2 * n - 1, n - k - 1) * &base;
        audit.laurent_eq(&format!("step in s at k={k}"), &step_lhs, &step_rhs);

        let sq_lhs = qbin(2 * n + 1, n - k) * &qint(2 * k + 1).pow(2);
        let sq_rhs = qp(2 * k - 2 * n) * qbin(2 * n + 1, n - k) * &qint(2 * n + 1).pow(2)
            - qp(2 * k - 2 * n) * qbin(2 * n - 1, n - k - 1) * &qn * (&one + &qp(n - s)) * (&one + &qp(n + s + 1))
            + qp(2 * k - n - s) * qbin(2 * n - 1, n - k - 1) * &qn * (&one - &qp(s - k)) * (&one - &qp(s + k + 1));
        audit.laurent_eq(&format!("step in r at k={k}"), &sq_lhs, &sq_rhs);
    }

    if r >= 1 {
        let rhs = qp(-2 * n) * &qint(2 * n + 1).pow(2) * x_r_sum(a, n, r - 1, s)
            - qp(-2 * n) * &qn * (&one + &qp(n - s)) * (&one + &qp(n + s + 1)) * x_r_sum(a, n - 1, r - 1, s)
            + qp(-n - s) * &qn * x_r_sum(a, n - 1, r - 1, s + 1);
        audit.laurent_eq("three-term recurrence", &x, &rhs);
    }
    let params = Params::new().with("a", a).with("n", n).with("r", r).with("s", s);
    Ok(audit.finish("x-r-sum", params, quotient.map(Witness::Laurent)))
}
