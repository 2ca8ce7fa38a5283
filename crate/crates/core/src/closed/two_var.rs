//! The classic two-generator case {a, b} with gcd(a, b) = 1.

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::bernoulli::{bernoulli_number, bernoullian_phi};
use crate::error::Error;
use crate::rational::{binomial, exact_div, expect_integer, int_pow, Rational};
use crate::semigroup::{AperySet, GeneratorSet, SylvesterMethod, SylvesterReport};

use super::{sylvester_from_scaled_points, to_enumerable};

/// Two coprime generators, normalized to a < b. Only the enumerating
/// operations require the values to be machine-sized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoVarInstance {
    a: BigInt,
    b: BigInt,
}

impl TwoVarInstance {
    /// Validates a two-generator instance; the arguments may come in either
    /// order. A generator equal to 1 is the trivial semigroup and is flagged
    /// as such.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self, Error> {
        let mut a = a.into();
        let mut b = b.into();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        if !a.is_positive() {
            return Err(Error::ZeroGenerator);
        }
        if a.is_one() {
            return Err(Error::Trivial);
        }
        let g = num::Integer::gcd(&a, &b);
        if !g.is_one() {
            return Err(Error::NotCoprime(g));
        }
        Ok(TwoVarInstance { a, b })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn generator_set(&self) -> Result<GeneratorSet, Error> {
        let a = self.a.to_u64().ok_or(Error::TooLarge("generator"))?;
        let b = self.b.to_u64().ok_or(Error::TooLarge("generator"))?;
        GeneratorSet::new(&[a, b])
    }

    /// The Apéry set for base a: the multiples b, 2b, ..., (a-1)b.
    pub fn apery(&self) -> Result<AperySet, Error> {
        let a = to_enumerable(&self.a, "two-variable Apéry set")?;
        let mut elements = Vec::with_capacity(a as usize - 1);
        let mut value = BigInt::zero();
        for _ in 1..a {
            value += &self.b;
            elements.push(value.to_u64().ok_or(Error::Overflow("Apéry set element"))?);
        }
        AperySet::from_elements(a, elements)
    }

    /// L = ab - a - b.
    pub fn frobenius(&self) -> BigInt {
        &self.a * &self.b - &self.a - &self.b
    }

    /// S_0 = (a-1)(b-1)/2; the product is even because coprime generators
    /// cannot both be even.
    pub fn genus(&self) -> BigInt {
        let product = (&self.a - 1) * (&self.b - 1);
        exact_div(product, 2, "two-variable genus")
            .expect("(a-1)(b-1) is even for coprime generators")
    }

    /// The classic closed forms for S_0, S_1, S_2.
    pub fn classic_s012(&self) -> Result<(BigInt, BigInt, BigInt), Error> {
        let a = &self.a;
        let b = &self.b;
        let am1 = a - 1;
        let bm1 = b - 1;
        let ab = a * b;
        let s0 = self.genus();
        let s1 = exact_div(
            &am1 * &bm1 * (2 * &ab - a - b - 1),
            12,
            "two-variable S_1 closed form",
        )?;
        let s2 = exact_div(
            &ab * am1 * bm1 * (&ab - a - b),
            12,
            "two-variable S_2 closed form",
        )?;
        Ok((s0, s1, s2))
    }

    /// Bernoulli-polynomial form: m·S_{m-1} = a^{m-1} sum_{n<a} B_m(nb/a)
    /// - B_m, costing O(a·M) rational operations.
    pub fn sylvester_bernoulli(&self, max_m: usize) -> Result<SylvesterReport, Error> {
        let a = to_enumerable(&self.a, "two-variable Bernoulli-form sum")?;
        let points = (0..a).map(|n| Rational::new(BigInt::from(n) * &self.b, self.a.clone()));
        sylvester_from_scaled_points(&self.a, points, max_m, SylvesterMethod::FamilyBernoulli)
    }

    /// Convolution form: m(m-1)·S_{m-2} = sum_j C(m,j) a^{m-1-j} B_{m-j}
    /// b^{j-1} phi_j(a) - m·B_{m-1}, costing O(M²) regardless of a.
    ///
    /// The j = 0 term is skipped because phi_0 vanishes identically (that is
    /// also where b^{j-1} would need a negative power); the top index j = m
    /// carries a genuine a^{-1}, kept as an exact rational.
    pub fn sylvester_convolution(&self, max_m: usize) -> Result<SylvesterReport, Error> {
        let top = max_m + 2;
        let a_rat = Rational::from_integer(self.a.clone());
        let phis: Vec<Rational> = (0..=top).map(|j| bernoullian_phi(j, &a_rat)).collect();
        let mut sums = Vec::with_capacity(max_m + 1);
        for m in 2..=top {
            let mut acc = Rational::zero();
            for (j, phi) in phis.iter().enumerate().take(m + 1).skip(1) {
                let b_num = bernoulli_number(m - j);
                if b_num.is_zero() || phi.is_zero() {
                    continue;
                }
                acc += Rational::from_integer(binomial(m as u64, j as u64))
                    * b_num
                    * int_pow(&self.a, m as i64 - 1 - j as i64)?
                    * int_pow(&self.b, j as i64 - 1)?
                    * phi;
            }
            acc -= Rational::from_integer(BigInt::from(m)) * bernoulli_number(m - 1);
            acc /= Rational::from_integer(BigInt::from(m) * BigInt::from(m - 1));
            sums.push(expect_integer(
                acc,
                "two-variable convolution Sylvester sum",
            )?);
        }
        Ok(SylvesterReport::new(
            SylvesterMethod::FamilyConvolution,
            sums,
        ))
    }

    /// Rödseth's double sum over pairs of Bernoulli numbers; every exponent
    /// of a and b is nonnegative here.
    pub fn sylvester_rodseth(&self, max_m: usize) -> Result<SylvesterReport, Error> {
        let mut sums = Vec::with_capacity(max_m + 1);
        for m in 1..=max_m + 1 {
            let mut acc = Rational::zero();
            for i in 0..=m {
                let b_i = bernoulli_number(i);
                if b_i.is_zero() {
                    continue;
                }
                for j in 0..=m - i {
                    let b_j = bernoulli_number(j);
                    if b_j.is_zero() {
                        continue;
                    }
                    acc += Rational::from_integer(
                        binomial(m as u64 + 1, i as u64) * binomial((m - i) as u64 + 1, j as u64),
                    ) * &b_i
                        * b_j
                        * int_pow(&self.a, (m - j) as i64)?
                        * int_pow(&self.b, (m - i) as i64)?;
                }
            }
            let m_big = BigInt::from(m);
            let value = acc / Rational::from_integer(&m_big * BigInt::from(m + 1))
                - bernoulli_number(m) / Rational::from_integer(m_big);
            sums.push(expect_integer(value, "Rödseth Sylvester sum")?);
        }
        Ok(SylvesterReport::new(SylvesterMethod::Rodseth, sums))
    }
}
