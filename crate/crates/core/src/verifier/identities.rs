//! q = 1 identities: the cubic sum, the mixed sum of `B(n,k)^2 B(m,k)`, the
//! new binomial identity, the three-index corollary, and the recurrences and
//! summation identities used to prove them.

use num_traits::{One, Zero};

use super::audit::Audit;
use super::{require_range, CheckResult, Params, Witness};
use crate::arith::{int, Integer, Rational};
use crate::error::Result;
use crate::triangle::{b_number, binomial_int as binom};

fn rat(v: Integer) -> Rational {
    Rational::from_integer(v)
}

fn frac(num: Integer, den: Integer) -> Rational {
    Rational::new(num, den)
}

fn factorial(n: i64) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}

fn sum_int(range: impl Iterator<Item = i64>, f: impl Fn(i64) -> Integer) -> Integer {
    range.map(f).fold(Integer::zero(), |acc, v| acc + v)
}

fn sum_rat(range: impl Iterator<Item = i64>, f: impl Fn(i64) -> Rational) -> Rational {
    range.map(f).fold(Rational::zero(), |acc, v| acc + v)
}

/// `sum_{k=0}^{upper} B(n,k)^2 B(m,k)`, with `B(0,k) = 0`.
fn mixed_cubic_sum(n: i64, m: i64, upper: i64) -> Integer {
    if n == 0 || m == 0 {
        return Integer::zero();
    }
    sum_int(0..=upper, |k| {
        let b = b_number(n, k);
        &b * &b * b_number(m, k)
    })
}

/// Which of `n`, `m` plays the role of the summation bound `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Assignment {
    /// `r = m`, `s = n`.
    RIsM,
    /// `r = n`, `s = m`.
    RIsN,
}

impl Assignment {
    pub fn code(self) -> i64 {
        match self {
            Assignment::RIsM => 0,
            Assignment::RIsN => 1,
        }
    }

    pub fn from_code(c: i64) -> Option<Self> {
        match c {
            0 => Some(Assignment::RIsM),
            1 => Some(Assignment::RIsN),
            _ => None,
        }
    }
}

/// `sum_{k=0}^r B(n,k)^2 B(m,k) = 1/2 binom(2n,n)^2 binom(2m,m) [1 - (n+2m)/r
/// binom(n+m,n)^-1 binom(n+r,n)^-1 sum_{k<r} binom(s+k,s) binom(n+k,n-1)]`.
pub fn check_identity_one(n: i64, m: i64, assignment: Assignment) -> Result<CheckResult> {
    require_range("n", n, 0)?;
    require_range("m", m, 0)?;
    let params = Params::new().with("n", n).with("m", m).with("assign", assignment.code());
    let mut audit = Audit::start();
    let (r, s) = match assignment {
        Assignment::RIsM => (m, n),
        Assignment::RIsN => (n, m),
    };
    if n == 0 || r == 0 {
        audit.skip("prefactor (n+2m)/r or B(n,k) undefined");
        return Ok(audit.finish("identity-one", params, None));
    }
    let lhs = rat(mixed_cubic_sum(n, m, r));
    let inner = sum_int(0..r, |k| binom(s + k, s) * binom(n + k, n - 1));
    let bracket = Rational::one()
        - frac(int(n + 2 * m) * inner, int(r) * binom(n + m, n) * binom(n + r, n));
    let c2n = binom(2 * n, n);
    let rhs = frac(&c2n * &c2n * binom(2 * m, m), int(2)) * bracket;
    audit.rational_eq("mixed cubic sum", &lhs, &rhs);
    Ok(audit.finish("identity-one", params, Some(Witness::Rational(lhs))))
}

/// The cubic sum `sum_k B(n,k)^3` against both known closed forms.
pub fn check_recover(n: i64) -> Result<CheckResult> {
    require_range("n", n, 1)?;
    let mut audit = Audit::start();
    let lhs = rat(mixed_cubic_sum(n, n, n));
    let c = binom(2 * n, n);
    let tail = sum_int(n..=2 * n - 1, |k| binom(k, n) * binom(k, n - 1));
    let rhs1 = frac(&c * &c * &c, int(2)) - frac(int(3) * &c * tail, int(2));
    let weighted = sum_int(1..=n, |k| {
        let b = binom(2 * n - k - 1, n - 1);
        int(k) * &b * &b
    });
    let rhs2 = frac(c * weighted, int(2 * n));
    audit.rational_eq("first closed form", &lhs, &rhs1);
    audit.rational_eq("second closed form", &lhs, &rhs2);
    Ok(audit.finish("recover", Params::new().with("n", n), Some(Witness::Rational(lhs))))
}

/// `sum_{k=1}^m binom(n+k-2,k-1) binom(n-1,k-1) binom(m+n,m-k)
///  = sum_{k=0}^m k binom(m+n-k-1,n-1)^2`, for `n >= 1`, `m >= 0`.
pub fn check_new_identity(m: i64, n: i64) -> Result<CheckResult> {
    require_range("n", n, 1)?;
    require_range("m", m, 0)?;
    let mut audit = Audit::start();
    let lhs = new_identity_lhs(m, n);
    let rhs = sum_int(0..=m, |k| {
        let b = binom(m + n - k - 1, n - 1);
        int(k) * &b * &b
    });
    audit.integer_eq("new identity", &lhs, &rhs);
    let params = Params::new().with("m", m).with("n", n);
    Ok(audit.finish("new-identity", params, Some(Witness::Rational(rat(lhs)))))
}

fn new_identity_lhs(m: i64, n: i64) -> Integer {
    sum_int(1..=m, |k| binom(n + k - 2, k - 1) * binom(n - 1, k - 1) * binom(m + n, m - k))
}

fn three_index_tail(n1: i64, n2: i64, n3: i64) -> Integer {
    sum_int(1..=n1, |k| binom(n3 + k - 2, k - 1) * binom(n1 - 1, k - 1) * binom(n2 + n3, n2 - k))
}

/// Both sides of the three-index identity with the factorial ratio exactly as
/// printed in the source, `(n1+n2)!(n2+n3)!(n3+n1)! / ((2n1)!(2n2)!(2n3)!)`.
/// Kept for the record: this orientation does not hold in general.
pub fn eq13_printed_sides(n1: i64, n2: i64, n3: i64) -> (Rational, Rational) {
    let lhs = eq13_lhs(n1, n2, n3);
    let ratio = frac(
        factorial(n1 + n2) * factorial(n2 + n3) * factorial(n3 + n1),
        factorial(2 * n1) * factorial(2 * n2) * factorial(2 * n3),
    );
    let rhs = frac(binom(n1 + n3, n1), int(2 * n2)) * ratio * rat(three_index_tail(n1, n2, n3));
    (lhs, rhs)
}

fn eq13_lhs(n1: i64, n2: i64, n3: i64) -> Rational {
    sum_rat(1..=n1, |k| {
        frac(
            int(k).pow(3) * binom(2 * n1, n1 + k) * binom(2 * n2, n2 + k) * binom(2 * n3, n3 + k),
            int(n1 * n2 * n3),
        )
    })
}

/// The `m = 3` corollary `sum_k k^3 prod binom(n_i+n_(i+1), n_i+k)
/// = n1 n3 / 2 binom(n1+n3,n1) sum_k ...`, its rewriting with central
/// binomials, and for `n1 = n3` the specialisation linking it to the mixed
/// cubic sum.
pub fn check_n123(n1: i64, n2: i64, n3: i64) -> Result<CheckResult> {
    require_range("n1", n1, 1)?;
    require_range("n2", n2, 1)?;
    require_range("n3", n3, 1)?;
    let mut audit = Audit::start();
    let tail = three_index_tail(n1, n2, n3);

    let product_form = sum_int(1..=n1, |k| {
        int(k).pow(3) * binom(n1 + n2, n1 + k) * binom(n2 + n3, n2 + k) * binom(n3 + n1, n3 + k)
    });
    let product_rhs = frac(int(n1 * n3) * binom(n1 + n3, n1) * &tail, int(2));
    audit.rational_eq("three-index corollary", &rat(product_form), &product_rhs);

    // Dividing the corollary by n1 n2 n3 (n1+n2)!(n2+n3)!(n3+n1)! / prod (2n_i)!.
    let lhs = eq13_lhs(n1, n2, n3);
    let ratio = frac(
        factorial(2 * n1) * factorial(2 * n2) * factorial(2 * n3),
        factorial(n1 + n2) * factorial(n2 + n3) * factorial(n3 + n1),
    );
    let rhs = frac(binom(n1 + n3, n1), int(2 * n2)) * ratio * rat(tail);
    audit.rational_eq("central-binomial form", &lhs, &rhs);

    if n1 == n3 {
        let (n, m) = (n1, n2);
        let c2n = binom(2 * n, n);
        let cnm = binom(n + m, n);
        let scaled = frac(int(2 * m) * &cnm * &cnm * mixed_cubic_sum(n, m, m), &c2n * &c2n * binom(2 * m, m));
        let spec_rhs = sum_int(1..=n, |k| binom(n + k - 2, k - 1) * binom(n - 1, k - 1) * binom(m + n, m - k));
        audit.rational_eq("n1 = n3 specialisation", &scaled, &rat(spec_rhs));
    }
    let params = Params::new().with("n1", n1).with("n2", n2).with("n3", n3);
    Ok(audit.finish("n123", params, Some(Witness::Rational(lhs))))
}

/// `S_n(m) = 2m binom(2n,n)^-2 binom(2m,m)^-1 binom(n+m,n)^2 sum_{k=0}^m B(n,k)^2 B(m,k)`.
pub fn zeil_s(n: i64, m: i64) -> Rational {
    if m == 0 {
        return Rational::zero();
    }
    let c2n = binom(2 * n, n);
    let cnm = binom(n + m, n);
    frac(int(2 * m) * &cnm * &cnm * mixed_cubic_sum(n, m, m), &c2n * &c2n * binom(2 * m, m))
}

/// `T_n(m) = sum_{k=0}^m k binom(m+n-k-1, n-1)^2`.
///
/// The upper limit is `m`: with `m - 1` the sum disagrees with `S_n(1) = 1`
/// and violates its own first-order recurrence at `m = 0`.
pub fn zeil_t(n: i64, m: i64) -> Rational {
    rat(sum_int(0..=m, |k| {
        let b = binom(m + n - k - 1, n - 1);
        int(k) * &b * &b
    }))
}

/// Both first-order recurrences
/// `(2m+n) X(m+1) = (2m+n+2) X(m) + n binom(n+m,n)^2` for `X = S_n, T_n`,
/// the initial values, `S_n(m) = T_n(m)` for `m <= m_max`, and the two
/// summation lemmas that turn the mixed identity into `S_n = T_n`.
pub fn check_zeilberger_recurrences(n: i64, m_max: i64) -> Result<CheckResult> {
    require_range("n", n, 1)?;
    require_range("m_max", m_max, 1)?;
    let mut audit = Audit::start();
    let s: Vec<Rational> = (0..=m_max).map(|m| zeil_s(n, m)).collect();
    let t: Vec<Rational> = (0..=m_max).map(|m| zeil_t(n, m)).collect();
    audit.rational_eq("S_n(0) = 0", &s[0], &Rational::zero());
    audit.rational_eq("T_n(0) = 0", &t[0], &Rational::zero());
    for m in 0..m_max {
        let i = m as usize;
        let cnm = binom(n + m, n);
        let inhom = rat(int(n) * &cnm * &cnm);
        for (name, x) in [("S", &s), ("T", &t)] {
            let lhs = rat(int(2 * m + n)) * &x[i + 1];
            let rhs = rat(int(2 * m + n + 2)) * &x[i] + &inhom;
            audit.rational_eq(&format!("{name} recurrence at m={m}"), &lhs, &rhs);
        }
    }
    for m in 0..=m_max {
        let i = m as usize;
        audit.rational_eq(&format!("S_n(m) = T_n(m) at m={m}"), &s[i], &t[i]);
        let square = |k: i64| {
            let b = binom(m + n - k - 1, n - 1);
            rat(&b * &b)
        };
        let cnm = binom(n + m, n);
        let lemma1 = sum_rat(0..=m, |k| frac(int(2 * m + n - 2 * k), int(n)) * square(k));
        audit.rational_eq("square-sum lemma", &rat(&cnm * &cnm), &lemma1);
        let lhs2 = rat(sum_int(0..m, |k| binom(n + k, n) * binom(n + k, n - 1)));
        let rhs2 = sum_rat(0..=m, |k| frac(int(m - k), int(n)) * square(k));
        audit.rational_eq("reversal lemma", &lhs2, &rhs2);
    }
    let params = Params::new().with("n", n).with("m_max", m_max);
    Ok(audit.finish("zeilberger", params, Some(Witness::Rational(s[m_max as usize].clone()))))
}

/// The sufficient condition for the `r = n` assignment, its first-difference
/// form, and the Gosper-summable identity it reduces to.
pub fn check_one_suff(n: i64, m: i64) -> Result<CheckResult> {
    require_range("n", n, 1)?;
    require_range("m", m, 1)?;
    let mut audit = Audit::start();
    let c2n = binom(2 * n, n);
    let lhs = frac(sum_int(0..m, |k| binom(n + k, n) * binom(n + k, n - 1)), int(m) * binom(n + m, n));
    let g = |mm: i64| sum_int(0..n, |k| binom(mm + k, mm) * binom(n + k, n - 1));
    let rhs = frac(g(m), int(n) * &c2n);
    audit.rational_eq("sufficient condition", &lhs, &rhs);

    let diff = frac(int(m + 1) * binom(n + m + 1, n) * g(m + 1), int(n) * &c2n)
        - frac(int(m) * binom(n + m, n) * g(m), int(n) * &c2n);
    audit.rational_eq("first difference", &diff, &rat(binom(n + m, n) * binom(n + m, n - 1)));

    let gosper = sum_rat(0..n, |k| {
        frac(int((n + k + 1) * m + (n + 1) * (k + 1)) * binom(m + k, m) * binom(n + k, n - 1), int(m + 1))
    });
    audit.rational_eq("Gosper-summable identity", &gosper, &rat(int(n) * binom(n + m, n - 1) * &c2n));
    let params = Params::new().with("n", n).with("m", m);
    Ok(audit.finish("one-suff", params, Some(Witness::Rational(lhs))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::Status;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn identity_one_examples() {
        let res = check_identity_one(2, 1, Assignment::RIsM).unwrap();
        assert_eq!(res.status, Status::Holds);
        assert_eq!(res.witness, Some(Witness::Rational(r(4))));
        assert!(check_identity_one(1, 1, Assignment::RIsM).unwrap().holds());
        assert_eq!(check_identity_one(1, 1, Assignment::RIsN).unwrap().witness, Some(Witness::Rational(r(1))));
        assert_eq!(check_identity_one(3, 0, Assignment::RIsM).unwrap().status, Status::DomainSkip);
    }

    #[test]
    fn equal_indices_recover_the_cubic_sum() {
        for n in 1..=8 {
            let a = check_identity_one(n, n, Assignment::RIsM).unwrap();
            let b = check_recover(n).unwrap();
            assert!(a.holds() && b.holds());
            assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn recover_examples() {
        assert_eq!(check_recover(2).unwrap().witness, Some(Witness::Rational(r(9))));
        assert_eq!(check_recover(1).unwrap().witness, Some(Witness::Rational(r(1))));
        assert!(check_recover(0).is_err());
    }

    #[test]
    fn new_identity_examples() {
        assert_eq!(check_new_identity(2, 2).unwrap().witness, Some(Witness::Rational(r(6))));
        assert_eq!(check_new_identity(0, 5).unwrap().witness, Some(Witness::Rational(r(0))));
        assert_eq!(check_new_identity(1, 1).unwrap().witness, Some(Witness::Rational(r(1))));
    }

    #[test]
    fn three_index_examples() {
        for (a, b, c) in [(1, 1, 1), (2, 1, 2), (1, 2, 3)] {
            assert!(check_n123(a, b, c).unwrap().holds(), "({a},{b},{c})");
        }
    }

    #[test]
    fn printed_factorial_orientation_fails() {
        let (lhs, rhs) = eq13_printed_sides(2, 1, 2);
        assert_eq!(lhs, r(4));
        assert_eq!(rhs, Rational::new(9.into(), 4.into()));
    }

    #[test]
    fn zeilberger_values() {
        assert_eq!(zeil_s(2, 1), r(1));
        assert_eq!(zeil_t(2, 1), r(1));
        for n in 1..=10 {
            assert_eq!(zeil_s(n, 0), r(0));
            assert_eq!(zeil_t(n, 0), r(0));
        }
        assert!(check_zeilberger_recurrences(3, 8).unwrap().holds());
    }

    #[test]
    fn sufficiency_examples() {
        for (n, m) in [(1, 1), (2, 1), (3, 5)] {
            assert!(check_one_suff(n, m).unwrap().holds());
        }
    }
}
