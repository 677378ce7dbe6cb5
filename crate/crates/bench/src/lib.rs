//! Inputs shared by the benchmarks.

use qcatalan::{MultiIndexSpec, Poly};

/// `(1 + q)^n`, a dense polynomial with large middle coefficients.
pub fn binomial_power(n: u32) -> Poly {
    Poly::from_i64s(&[1, 1]).pow(n)
}

/// A `(1 + q + ... + q^(d-1))`-style dense polynomial with alternating signs.
pub fn alternating(d: usize) -> Poly {
    let coeffs: Vec<i64> = (0..d as i64).map(|i| if i % 2 == 0 { i + 1 } else { -i }).collect();
    Poly::from_i64s(&coeffs)
}

/// Multi-index specs with `m` equal indices `n`.
pub fn equal_indices(m: usize, n: i64, r: i64, j: i64) -> MultiIndexSpec {
    MultiIndexSpec::new(1, vec![n; m], r, j).expect("n >= 1")
}
