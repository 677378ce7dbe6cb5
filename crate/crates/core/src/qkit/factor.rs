use std::collections::BTreeMap;

use super::{cyclotomic, divisors};
use crate::arith::Laurent;
use crate::error::{Error, Result};

/// `q^unit_power * prod_d Phi_d(q)^m_d`, stored without expanding.
///
/// Index 1 stands for `Phi_1 = q - 1`. Multiplicities are always positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactorForm {
    unit_power: i64,
    multiplicities: BTreeMap<u32, u32>,
}

impl FactorForm {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_indices(indices: impl IntoIterator<Item = u32>) -> Self {
        let mut f = Self::one();
        for d in indices {
            *f.multiplicities.entry(d).or_insert(0) += 1;
        }
        f
    }

    pub fn with_unit_power(mut self, e: i64) -> Self {
        self.unit_power = e;
        self
    }

    pub fn unit_power(&self) -> i64 {
        self.unit_power
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, d: u32) -> u32 {
        self.multiplicities.get(&d).copied().unwrap_or(0)
    }

    /// Cyclotomic indices with repetition, ascending.
    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.multiplicities.iter().flat_map(|(&d, &m)| std::iter::repeat_n(d, m as usize))
    }

    /// No cyclotomic factor left: the form is a unit of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.multiplicities.is_empty()
    }

    pub fn mul(&self, other: &FactorForm) -> FactorForm {
        let mut out = self.clone();
        out.unit_power += other.unit_power;
        for (&d, &m) in &other.multiplicities {
            *out.multiplicities.entry(d).or_insert(0) += m;
        }
        out
    }

    pub fn pow(&self, e: u32) -> FactorForm {
        if e == 0 {
            return Self::one();
        }
        FactorForm {
            unit_power: self.unit_power * e as i64,
            multiplicities: self.multiplicities.iter().map(|(&d, &m)| (d, m * e)).collect(),
        }
    }

    pub fn expand(&self) -> Laurent {
        self.indices()
            .fold(Laurent::q_power(self.unit_power), |acc, d| &acc * &*cyclotomic(d))
    }
}

/// Cyclotomic factorisation of `[n choose k]`: the indices `d <= n` with
/// `floor(k/d) + floor((n-k)/d) < floor(n/d)`, each once.
pub fn factor_form_qbinomial(n: i64, k: i64) -> Result<FactorForm> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::Domain(format!("[{n} choose {k}] vanishes and has no factor form")));
    }
    let form = (1..=n)
        .filter(|d| k / d + (n - k) / d < n / d)
        .map(|d| d as u32);
    Ok(FactorForm::from_indices(form))
}

/// `[n] = prod_{d | n, d > 1} Phi_d(q)`.
pub fn factor_form_qint(n: u32) -> Result<FactorForm> {
    if n == 0 {
        return Err(Error::Domain("[0] = 0 has no factor form".into()));
    }
    Ok(FactorForm::from_indices(divisors(n).filter(|&d| d > 1)))
}

/// `1 + q^n = [2n]/[n]`: the divisors of `2n` that do not divide `n`.
pub fn factor_form_one_plus_power(n: u32) -> Result<FactorForm> {
    if n == 0 {
        return Err(Error::Domain("1 + q^0 = 2 is not a product of cyclotomics".into()));
    }
    Ok(FactorForm::from_indices(divisors(2 * n).filter(|d| n % d != 0)))
}

/// Index-wise minimum of multiplicities; empty means coprime.
pub fn factored_gcd(a: &FactorForm, b: &FactorForm) -> FactorForm {
    FactorForm {
        unit_power: a.unit_power.min(b.unit_power),
        multiplicities: a
            .multiplicities
            .iter()
            .filter_map(|(d, &m)| b.multiplicities.get(d).map(|&n| (*d, m.min(n))))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;
    use crate::qkit::{q_binomial, q_integer};

    fn set(f: &FactorForm) -> Vec<u32> {
        f.indices().collect()
    }

    #[test]
    fn qbinomial_forms() {
        assert_eq!(set(&factor_form_qbinomial(4, 2).unwrap()), [3, 4]);
        assert_eq!(set(&factor_form_qbinomial(7, 0).unwrap()), Vec::<u32>::new());
        assert_eq!(set(&factor_form_qbinomial(2, 1).unwrap()), [2]);
        assert_eq!(set(&factor_form_qbinomial(3, 1).unwrap()), [3]);
        assert!(factor_form_qbinomial(2, 3).is_err());
    }

    #[test]
    fn qint_forms() {
        assert!(factor_form_qint(1).unwrap().is_unit());
        assert_eq!(set(&factor_form_qint(6).unwrap()), [2, 3, 6]);
        assert_eq!(set(&factor_form_qint(4).unwrap()), [2, 4]);
    }

    #[test]
    fn gcd_examples() {
        let qb31 = factor_form_qbinomial(3, 1).unwrap();
        let q2 = factor_form_qint(2).unwrap();
        // [3 choose 1] = Phi_3 and [2] = Phi_2 share nothing.
        assert!(factored_gcd(&qb31, &q2).is_unit());
        assert_eq!(qb31.expand().body(), &q_integer(3));
        assert!(factored_gcd(&qb31, &FactorForm::one()).is_unit());
        let (n, a) = (4, 1);
        let lhs = factor_form_qbinomial(2 * n - 1, n - a).unwrap();
        assert!(factored_gcd(&lhs, &factor_form_qint(n as u32).unwrap()).is_unit());
        let f = FactorForm::from_indices([2, 2, 3]);
        assert_eq!(set(&factored_gcd(&f, &FactorForm::from_indices([2, 3, 3, 5]))), [2, 3]);
    }

    #[test]
    fn expansions_match() {
        for n in 1..=60u32 {
            assert_eq!(factor_form_qint(n).unwrap().expand(), Laurent::from(q_integer(n)));
            let one_plus = &Poly::one() + &Poly::q_power(n as usize);
            assert_eq!(factor_form_one_plus_power(n).unwrap().expand(), Laurent::from(one_plus));
        }
        for n in 0..=30i64 {
            for k in 0..=n {
                let f = factor_form_qbinomial(n, k).unwrap();
                assert_eq!(f.expand(), Laurent::from(&*q_binomial(n, k)), "[{n} choose {k}]");
            }
        }
    }

    #[test]
    fn mul_and_pow() {
        let a = FactorForm::from_indices([2, 3]).with_unit_power(1);
        let b = a.pow(3).mul(&FactorForm::from_indices([5]));
        assert_eq!(b.multiplicity(2), 3);
        assert_eq!(b.multiplicity(5), 1);
        assert_eq!(b.unit_power(), 3);
        assert_eq!(a.pow(0), FactorForm::one());
    }
}
