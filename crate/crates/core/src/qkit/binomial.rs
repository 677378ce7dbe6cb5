use std::sync::{Arc, OnceLock, RwLock};

use super::{cyclotomic, factor_form_qbinomial, q_factorial};
use crate::arith::Poly;
use crate::error::{Error, Result};

/// Rows of Pascal's q-triangle, grown on demand and shared process-wide.
static ROWS: OnceLock<RwLock<Vec<Vec<Arc<Poly>>>>> = OnceLock::new();

fn zero() -> Arc<Poly> {
    static ZERO: OnceLock<Arc<Poly>> = OnceLock::new();
    ZERO.get_or_init(|| Arc::new(Poly::zero())).clone()
}

/// Gaussian binomial `[n choose k]`, zero unless `0 <= k <= n`.
///
/// Served from a memoised table built with the q-Pascal rule
/// `[n choose k] = [n-1 choose k-1] + q^k [n-1 choose k]`.
pub fn q_binomial(n: i64, k: i64) -> Arc<Poly> {
    if n < 0 || k < 0 || k > n {
        return zero();
    }
    let (n, k) = (n as usize, k as usize);
    let rows = ROWS.get_or_init(|| RwLock::new(vec![vec![Arc::new(Poly::one())]]));
    {
        let rows = rows.read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = rows.write().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is seeded");
        let len = prev.len() + 1;
        let row: Vec<Arc<Poly>> = (0..len)
            .map(|j| {
                if j == 0 || j == len - 1 {
                    return Arc::new(Poly::one());
                }
                Arc::new(&*prev[j - 1] + &prev[j].shift(j))
            })
            .collect();
        rows.push(row);
    }
    rows[n][k].clone()
}

/// `(q;q)_n / ((q;q)_k (q;q)_(n-k))` by exact division.
pub fn q_binomial_factorial_ratio(n: i64, k: i64) -> Result<Poly> {
    if n < 0 || k < 0 || k > n {
        return Ok(Poly::zero());
    }
    let den = &q_factorial(k as u32) * &q_factorial((n - k) as u32);
    q_factorial(n as u32).exact_div(&den)
}

/// Product of the cyclotomic factors selected by the floor criterion.
pub fn q_binomial_cyclotomic(n: i64, k: i64) -> Poly {
    match factor_form_qbinomial(n, k) {
        Ok(form) => form.indices().fold(Poly::one(), |acc, d| &acc * &*cyclotomic(d)),
        Err(_) => Poly::zero(),
    }
}

/// `[n choose k]` computed three independent ways; any disagreement is
/// reported as [`Error::InternalMismatch`].
pub fn q_binomial_checked(n: i64, k: i64) -> Result<Poly> {
    let pascal = (*q_binomial(n, k)).clone();
    let ratio = q_binomial_factorial_ratio(n, k)
        .map_err(|_| Error::InternalMismatch(format!("(q;q)-ratio for [{n} choose {k}] is not a polynomial")))?;
    let cyclo = q_binomial_cyclotomic(n, k);
    if pascal != ratio || pascal != cyclo {
        return Err(Error::InternalMismatch(format!("constructions of [{n} choose {k}] disagree")));
    }
    Ok(pascal)
}
