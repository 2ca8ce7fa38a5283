//! Truncated formal power series with exact rational coefficients.
//!
//! These are the vehicle for checking exponential-generating-function
//! identities: both sides of an identity are built as series truncated at the
//! same order and compared coefficient by coefficient. A truncated series
//! cannot represent a pole, so identities stated with 1/(e^z - 1) factors are
//! always checked in a cleared form where every factor is an entire series.

use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::Error;
use crate::rational::Rational;

/// A power series in z known through the coefficient of z^order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// The zero series through z^order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// A series from explicit coefficients of z^0, z^1, ...
    pub fn from_coefficients(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        TruncatedSeries { coeffs }
    }

    /// e^{cz} truncated at z^order: coefficient i is c^i / i!.
    pub fn exp(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        coeffs.push(term.clone());
        for i in 1..=order {
            term = term * c / BigInt::from(i);
            coeffs.push(term.clone());
        }
        TruncatedSeries { coeffs }
    }

    /// e^{cz} - 1, the unit-free factor every cleared identity is built from.
    pub fn exp_minus_one(c: &Rational, order: usize) -> Self {
        let mut series = Self::exp(c, order);
        series.coeffs[0] = Rational::zero();
        series
    }

    /// The exponential generating function sum_n e^{nz} of a finite set,
    /// truncated at z^order; coefficient i is (sum_n n^i) / i!.
    pub fn egf_of_finite_set(values: &[u64], order: usize) -> Self {
        let mut power_sums = vec![BigInt::zero(); order + 1];
        for &n in values {
            let n = BigInt::from(n);
            let mut power = BigInt::one();
            for sum in power_sums.iter_mut() {
                *sum += &power;
                power *= &n;
            }
        }
        let mut factorial = BigInt::one();
        let coeffs = power_sums
            .into_iter()
            .enumerate()
            .map(|(i, sum)| {
                if i > 0 {
                    factorial *= BigInt::from(i);
                }
                Rational::new(sum, factorial.clone())
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// The series sum_m sums[m] z^m / m!, i.e. the egf whose m-th power sum
    /// is the given value. The order is sums.len() - 1.
    pub fn from_power_sums(sums: &[BigInt]) -> Self {
        assert!(!sums.is_empty());
        let mut factorial = BigInt::one();
        let coeffs = sums
            .iter()
            .enumerate()
            .map(|(m, s)| {
                if m > 0 {
                    factorial *= BigInt::from(m);
                }
                Rational::new(s.clone(), factorial.clone())
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Highest power of z with a known coefficient.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of z^i.
    pub fn coefficient(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Exact division by e^{cz} - 1. The dividend must have zero constant
    /// term (e^{cz} - 1 has a simple zero at z = 0), and the result is known
    /// through one order less.
    pub fn divide_by_exp_minus_one(&self, c: &Rational) -> Result<TruncatedSeries, Error> {
        if c.is_zero() {
            return Err(Error::InvalidParameter(
                "cannot divide by e^{0z} - 1".into(),
            ));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::Inconsistency {
                context: "series division",
                detail: format!("dividend has constant term {}, expected 0", self.coeffs[0]),
            });
        }
        if self.order() == 0 {
            return Err(Error::InvalidParameter(
                "series order too small to divide".into(),
            ));
        }
        // e^{cz} - 1 = z * u(z) with u_k = c^{k+1} / (k+1)!, a unit since
        // u_0 = c != 0. Solve q * u = v for v_n = self_{n+1} by forward
        // substitution.
        let order = self.order() - 1;
        let unit = {
            let mut u = Vec::with_capacity(order + 1);
            let mut term = c.clone();
            u.push(term.clone());
            for k in 1..=order {
                term = term * c / BigInt::from(k + 1);
                u.push(term.clone());
            }
            u
        };
        let mut quotient: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n + 1].clone();
            for k in 1..=n {
                acc -= &unit[k] * &quotient[n - k];
            }
            quotient.push(acc / &unit[0]);
        }
        Ok(TruncatedSeries { coeffs: quotient })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::bernoulli_number;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn whole(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn exp_coefficients() {
        let e = TruncatedSeries::exp(&whole(1), 5);
        let expected = [
            rat(1, 1),
            rat(1, 1),
            rat(1, 2),
            rat(1, 6),
            rat(1, 24),
            rat(1, 120),
        ];
        for (i, want) in expected.iter().enumerate() {
            assert_eq!(e.coefficient(i), want);
        }
    }

    #[test]
    fn exponent_addition_law() {
        let a = TruncatedSeries::exp(&whole(3), 8);
        let b = TruncatedSeries::exp(&whole(-7), 8);
        let sum = TruncatedSeries::exp(&whole(-4), 8);
        assert_eq!(&a * &b, sum);

        let half = TruncatedSeries::exp(&rat(1, 2), 6);
        let third = TruncatedSeries::exp(&rat(1, 3), 6);
        assert_eq!(&half * &third, TruncatedSeries::exp(&rat(5, 6), 6));
    }

    #[test]
    fn egf_of_set_matches_power_sums() {
        // For {3, 5}: power sums 2, 8, 34, 152, 706.
        let egf = TruncatedSeries::egf_of_finite_set(&[3, 5], 4);
        assert_eq!(egf.coefficient(0), &rat(2, 1));
        assert_eq!(egf.coefficient(1), &rat(8, 1));
        assert_eq!(egf.coefficient(2), &rat(17, 1));
        assert_eq!(egf.coefficient(3), &rat(76, 3));
        assert_eq!(egf.coefficient(4), &rat(353, 12));
    }

    #[test]
    fn division_recovers_bernoulli_numbers() {
        // z / (e^z - 1) has coefficient B_m / m!, which fixes the B_1 = -1/2
        // convention used throughout.
        let order = 10;
        let mut z_coeffs = vec![Rational::zero(); order + 1];
        z_coeffs[1] = Rational::one();
        let z = TruncatedSeries::from_coefficients(z_coeffs);
        let q = z.divide_by_exp_minus_one(&whole(1)).unwrap();
        let mut factorial = BigInt::one();
        for m in 0..=q.order() {
            if m > 0 {
                factorial *= BigInt::from(m);
            }
            let want = bernoulli_number(m) / Rational::from_integer(factorial.clone());
            assert_eq!(q.coefficient(m), &want, "coefficient of z^{m}");
        }
    }

    #[test]
    fn division_round_trip() {
        let c = whole(5);
        let factor = TruncatedSeries::exp_minus_one(&c, 9);
        let other = TruncatedSeries::egf_of_finite_set(&[1, 4, 6], 9);
        let product = &factor * &other;
        let recovered = product.divide_by_exp_minus_one(&c).unwrap();
        for i in 0..=recovered.order() {
            assert_eq!(recovered.coefficient(i), other.coefficient(i));
        }
    }

    #[test]
    fn division_rejects_nonzero_constant_term() {
        let s = TruncatedSeries::exp(&whole(2), 4);
        assert!(matches!(
            s.divide_by_exp_minus_one(&whole(1)),
            Err(Error::Inconsistency { .. })
        ));
    }

    #[test]
    fn geometric_quotient() {
        // (e^{6z} - 1) / (e^{2z} - 1) = 1 + e^{2z} + e^{4z}.
        let numerator = TruncatedSeries::exp_minus_one(&whole(6), 8);
        let q = numerator.divide_by_exp_minus_one(&whole(2)).unwrap();
        let mut want = &TruncatedSeries::exp(&whole(2), 7) + &TruncatedSeries::exp(&whole(4), 7);
        want.coeffs[0] += Rational::one();
        assert_eq!(q, want);
    }
}
