use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::Poly;

static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Poly>>>> = OnceLock::new();

/// Moebius function by trial division.
pub fn mobius(mut n: u32) -> i8 {
    assert!(n >= 1);
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n % d == 0)
}

/// `Phi_d(q)` from `prod_{e | d} (q^e - 1)^mu(d/e)`. Memoised.
pub fn cyclotomic(d: u32) -> Arc<Poly> {
    assert!(d >= 1, "cyclotomic index must be positive");
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap_or_else(|e| e.into_inner()).get(&d) {
        return p.clone();
    }
    let mut num = Poly::one();
    let mut den = Poly::one();
    for e in divisors(d) {
        let factor = &Poly::q_power(e as usize) - &Poly::one();
        match mobius(d / e) {
            1 => num = &num * &factor,
            -1 => den = &den * &factor,
            _ => {}
        }
    }
    let phi = Arc::new(num.exact_div(&den).expect("cyclotomic quotient is exact"));
    // A racing writer computed the same value; either copy is fine.
    cache.write().unwrap_or_else(|e| e.into_inner()).entry(d).or_insert(phi).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let mu: Vec<i8> = (1..=12).map(mobius).collect();
        assert_eq!(mu, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), Poly::from_i64s(&[-1, 1]));
        assert_eq!(*cyclotomic(2), Poly::from_i64s(&[1, 1]));
        assert_eq!(*cyclotomic(6), Poly::from_i64s(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), Poly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn product_over_divisors_is_q_power_minus_one() {
        for n in 1..=40u32 {
            let prod = divisors(n).fold(Poly::one(), |acc, d| &acc * &*cyclotomic(d));
            assert_eq!(prod, &Poly::q_power(n as usize) - &Poly::one());
        }
    }
}
