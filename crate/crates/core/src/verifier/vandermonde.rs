//! q-Chu-Vandermonde splittings used to lower the number of indices.

use super::audit::Audit;
use super::{require_range, CheckResult, Params, Witness};
use crate::arith::{Laurent, Poly};
use crate::error::{Error, Result};
use crate::qkit::{q_binomial, q_factorial};

/// `(q;q)_n`, or `None` for negative `n` (its reciprocal is taken as zero).
fn fact(n: i64) -> Option<Poly> {
    u32::try_from(n).ok().map(q_factorial)
}

/// `q^e num / prod dens`, zero if any denominator index is negative.
fn term(e: i64, num: &[i64], dens: &[i64]) -> Result<Laurent> {
    let mut top = Poly::one();
    for &n in num {
        top = &top * &fact(n).expect("numerator index is non-negative");
    }
    let mut bottom = Poly::one();
    for &d in dens {
        match fact(d) {
            Some(f) => bottom = &bottom * &f,
            None => return Ok(Laurent::zero()),
        }
    }
    let body = top
        .exact_div(&bottom)
        .map_err(|_| Error::InternalMismatch(format!("q-multinomial term {num:?}/{dens:?} is not a polynomial")))?;
    Ok(Laurent::from(body).mul_q_power(e))
}

/// Three forms of the splitting at `0 <= k <= min(n1,n2)`:
/// `[n1+n2 choose n1+k] = sum_s [n1-k choose s][n2+k choose s+2k] q^(s(s+2k))`,
/// the product `[n1+n2 choose n1+k][n1+n2 choose n2+k]` as a sum of
/// q-multinomials, and `[n1+n2+1 choose n1-k]` as the odd analogue.
pub fn check_chu_vandermonde(n1: i64, n2: i64, k: i64) -> Result<CheckResult> {
    require_range("n1", n1, 0)?;
    require_range("n2", n2, 0)?;
    require_range("k", k, 0)?;
    if k > n1.min(n2) {
        return Err(Error::Domain(format!("need k <= min(n1, n2), got k = {k}")));
    }
    let mut audit = Audit::start();
    let qb = |n: i64, j: i64| Laurent::from(&*q_binomial(n, j));

    let mut split = Laurent::zero();
    let mut product = Laurent::zero();
    let mut odd = Laurent::zero();
    for s in 0..=n1 - k {
        split += &(qb(n1 - k, s) * qb(n2 + k, s + 2 * k)).mul_q_power(s * (s + 2 * k));
        product += &term(s * s + 2 * k * s, &[n1 + n2], &[s, s + 2 * k, n1 - k - s, n2 - k - s])?;
        odd += &term(
            s * (s + 2 * k + 1),
            &[n1 + k + 1, n2 - k],
            &[s, s + 2 * k + 1, n1 - k - s, n2 - k - s],
        )?;
    }
    let lhs = qb(n1 + n2, n1 + k);
    audit.laurent_eq("binomial splitting", &lhs, &split);
    let lhs_product = &lhs * &qb(n1 + n2, n2 + k);
    audit.laurent_eq("product splitting", &lhs_product, &product);
    audit.laurent_eq("odd splitting", &qb(n1 + n2 + 1, n1 - k), &odd);

    let params = Params::new().with("n1", n1).with("n2", n2).with("k", k);
    Ok(audit.finish("chu-vandermonde", params, Some(Witness::Laurent(lhs_product))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_laurent;

    #[test]
    fn examples() {
        let res = check_chu_vandermonde(1, 1, 0).unwrap();
        assert!(res.holds());
        assert_eq!(res.witness, Some(Witness::Laurent(parse_laurent("(1 + q)*(1 + q)").unwrap())));
        assert!(check_chu_vandermonde(3, 2, 1).unwrap().holds());
        for n1 in 0..=4 {
            assert!(check_chu_vandermonde(n1, 4, n1.min(4)).unwrap().holds());
        }
        assert!(check_chu_vandermonde(2, 1, 2).is_err());
    }
}
