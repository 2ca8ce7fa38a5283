//! Exact rational scalars and small integer helpers.
//!
//! Everything in this crate computes over arbitrary-precision integers and
//! rationals; no floating point is used anywhere. The `Rational` alias keeps
//! the rest of the crate decoupled from the backing implementation.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always kept in lowest terms by the
/// backing type.
pub type Rational = num::BigRational;

/// Binomial coefficient C(n, k) as a big integer. Returns 0 when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num::integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Exact integer power with support for negative exponents.
///
/// Negative exponents require a nonzero base; `0^0` is defined as 1, matching
/// the empty-product convention used by every summation formula here.
pub fn int_pow(base: &BigInt, exp: i64) -> Result<Rational, Error> {
    if exp >= 0 {
        return Ok(Rational::from_integer(base.pow(exp as u32)));
    }
    if base.is_zero() {
        return Err(Error::ZeroToNegativePower);
    }
    let positive = base.pow((-exp) as u32);
    Ok(Rational::new(BigInt::one(), positive))
}

/// Rational power of a rational base, with the same conventions as
/// [`int_pow`].
pub fn rat_pow(base: &Rational, exp: i64) -> Result<Rational, Error> {
    if exp < 0 && base.is_zero() {
        return Err(Error::ZeroToNegativePower);
    }
    Ok(base.pow(exp as i32))
}

/// Evaluates a polynomial given by coefficients `coeffs[r]` of `x^r` using
/// Horner's rule.
pub fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Extracts the integer value of a rational, or reports which computation
/// produced an unexpected fraction.
pub fn expect_integer(value: Rational, context: &'static str) -> Result<BigInt, Error> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonInteger {
            context,
            value: value.to_string(),
        })
    }
}

/// Divides exactly, or reports the context in which divisibility failed.
pub fn exact_div(numer: BigInt, denom: i64, context: &'static str) -> Result<BigInt, Error> {
    let denom = BigInt::from(denom);
    let (q, r) = num::integer::div_rem(numer.clone(), denom.clone());
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonInteger {
            context,
            value: format!("{numer}/{denom}", denom = denom.abs()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(30, 15), BigInt::from(155117520u64));
        assert_eq!(binomial(3, 7), BigInt::zero());
    }

    #[test]
    fn int_pow_handles_negative_exponents() {
        assert_eq!(int_pow(&BigInt::from(2), 10).unwrap(), rat(1024, 1));
        assert_eq!(int_pow(&BigInt::from(2), -3).unwrap(), rat(1, 8));
        assert_eq!(int_pow(&BigInt::from(-3), -1).unwrap(), rat(-1, 3));
        assert_eq!(int_pow(&BigInt::zero(), 0).unwrap(), rat(1, 1));
        assert_eq!(
            int_pow(&BigInt::zero(), -1),
            Err(Error::ZeroToNegativePower)
        );
    }

    #[test]
    fn horner_matches_direct_evaluation() {
        // 3 - 2x + x^3 at x = 5/2: 3 - 5 + 125/8 = 109/8.
        let coeffs = [rat(3, 1), rat(-2, 1), rat(0, 1), rat(1, 1)];
        assert_eq!(eval_poly(&coeffs, &rat(5, 2)), rat(109, 8));
    }

    #[test]
    fn exact_div_detects_remainders() {
        assert_eq!(
            exact_div(BigInt::from(12), 4, "test").unwrap(),
            BigInt::from(3)
        );
        assert!(matches!(
            exact_div(BigInt::from(13), 4, "test"),
            Err(Error::NonInteger { .. })
        ));
    }
}
