//! Bernoulli numbers, Bernoulli polynomials, and the Bernoullian functions
//! built from them.
//!
//! The convention here has B_1 = -1/2, the one under which the power-sum
//! formula 1^m + 2^m + ... + (N-1)^m = (B_{m+1}(N) - B_{m+1}) / (m+1) holds
//! verbatim. Numbers are produced by the defining recurrence
//! sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, with B_0 = 1, and memoized
//! process-wide since every higher-order sum re-reads the same prefix.

use std::sync::{LazyLock, Mutex};

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::rational::{binomial, eval_poly, Rational};

struct Cache {
    numbers: Vec<Rational>,
}

impl Cache {
    fn new() -> Self {
        Cache {
            numbers: vec![Rational::one()],
        }
    }

    fn extend_to(&mut self, m: usize) {
        while self.numbers.len() <= m {
            let k = self.numbers.len();
            // sum_{j=0}^{k} C(k+1, j) B_j = 0, solved for B_k.
            let mut acc = Rational::zero();
            for (j, b) in self.numbers.iter().enumerate() {
                acc += Rational::from_integer(binomial(k as u64 + 1, j as u64)) * b;
            }
            let divisor = Rational::from_integer(BigInt::from(k + 1));
            self.numbers.push(-acc / divisor);
        }
    }

    fn number(&mut self, m: usize) -> Rational {
        self.extend_to(m);
        self.numbers[m].clone()
    }
}

static CACHE: LazyLock<Mutex<Cache>> = LazyLock::new(|| Mutex::new(Cache::new()));

/// The Bernoulli number B_m (with B_1 = -1/2).
pub fn bernoulli_number(m: usize) -> Rational {
    CACHE.lock().unwrap().number(m)
}

/// Coefficients of the Bernoulli polynomial B_m(x); entry r is the
/// coefficient of x^r, namely C(m, r) B_{m-r}.
pub fn bernoulli_polynomial_coefficients(m: usize) -> Vec<Rational> {
    let mut cache = CACHE.lock().unwrap();
    cache.extend_to(m);
    (0..=m)
        .map(|r| Rational::from_integer(binomial(m as u64, r as u64)) * &cache.numbers[m - r])
        .collect()
}

/// The Bernoulli polynomial B_m(x) evaluated at a rational point.
pub fn bernoulli_polynomial(m: usize, x: &Rational) -> Rational {
    eval_poly(&bernoulli_polynomial_coefficients(m), x)
}

/// The Bernoullian function phi_m(x) = B_m(x) - B_m.
///
/// phi_0 vanishes identically, phi_1(1) = 1, and phi_m(1) = 0 for all other
/// m; those facts drive the term-skipping rules in the convolution formulas.
pub fn bernoullian_phi(m: usize, x: &Rational) -> Rational {
    if m == 0 {
        return Rational::zero();
    }
    bernoulli_polynomial(m, x) - bernoulli_number(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_numbers() {
        assert_eq!(bernoulli_number(0), rat(1, 1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), rat(0, 1));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(6), rat(1, 42));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn odd_numbers_above_one_vanish() {
        for m in [3usize, 5, 7, 9, 11, 13, 15] {
            assert_eq!(bernoulli_number(m), Rational::zero(), "B_{m}");
        }
    }

    #[test]
    fn polynomial_values() {
        // B_2(x) = x^2 - x + 1/6.
        assert_eq!(bernoulli_polynomial(2, &rat(1, 2)), rat(-1, 12));
        // B_m(1) = B_m for m != 1; B_1(1) = 1/2.
        assert_eq!(bernoulli_polynomial(4, &rat(1, 1)), rat(-1, 30));
        assert_eq!(bernoulli_polynomial(1, &rat(1, 1)), rat(1, 2));
        // B_3(x) = x^3 - 3x^2/2 + x/2, so B_3(2) = 8 - 6 + 1 = 3.
        assert_eq!(bernoulli_polynomial(3, &rat(2, 1)), rat(3, 1));
    }

    #[test]
    fn translation_identity() {
        // B_m(x + 1) - B_m(x) = m x^{m-1}.
        for m in 1usize..=8 {
            for num in -4i64..=4 {
                let x = rat(num, 3);
                let lhs =
                    bernoulli_polynomial(m, &(x.clone() + rat(1, 1))) - bernoulli_polynomial(m, &x);
                let rhs = Rational::from_integer(BigInt::from(m)) * x.pow(m as i32 - 1);
                assert_eq!(lhs, rhs, "m = {m}, x = {x}");
            }
        }
    }

    #[test]
    fn phi_normalization() {
        for num in -3i64..=5 {
            let x = rat(num, 2);
            assert_eq!(bernoullian_phi(0, &x), Rational::zero());
        }
        assert_eq!(bernoullian_phi(1, &rat(1, 1)), rat(1, 1));
        for m in 2usize..=10 {
            assert_eq!(
                bernoullian_phi(m, &rat(1, 1)),
                Rational::zero(),
                "phi_{m}(1)"
            );
        }
    }

    #[test]
    fn power_sum_via_polynomial() {
        // 1^3 + 2^3 + ... + 9^3 = 2025 = (B_4(10) - B_4) / 4.
        let value = (bernoulli_polynomial(4, &rat(10, 1)) - bernoulli_number(4)) / rat(4, 1);
        assert_eq!(value, rat(2025, 1));
    }
}
