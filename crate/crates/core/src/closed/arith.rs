//! Generators in arithmetic progression: a, a+d, ..., a+sd with
//! gcd(a, d) = 1.

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::Integer;

use crate::bernoulli::{bernoulli_number, bernoullian_phi};
use crate::error::Error;
use crate::rational::{binomial, exact_div, expect_integer, int_pow, Rational};
use crate::semigroup::{AperySet, GeneratorSet, SylvesterMethod, SylvesterReport};

use super::{ceil_div, sylvester_from_scaled_points, to_enumerable};

/// An arithmetic progression of generators. The step count s is stored
/// already clamped to a-1: later terms are sums of earlier ones and do not
/// change the semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithInstance {
    a: BigInt,
    d: BigInt,
    s: BigInt,
}

impl ArithInstance {
    pub fn new(
        a: impl Into<BigInt>,
        d: impl Into<BigInt>,
        s: impl Into<BigInt>,
    ) -> Result<Self, Error> {
        let a = a.into();
        let d = d.into();
        let s = s.into();
        if !a.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "first generator a must be positive, got {a}"
            )));
        }
        if a.is_one() {
            return Err(Error::Trivial);
        }
        if !d.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "common difference d must be positive, got {d}"
            )));
        }
        if !s.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "step count s must be positive, got {s}"
            )));
        }
        let g = a.gcd(&d);
        if !g.is_one() {
            return Err(Error::NotCoprime(g));
        }
        let cap = &a - 1;
        let s = if s > cap { cap } else { s };
        Ok(ArithInstance { a, d, s })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    /// The largest generator a + sd.
    pub fn b(&self) -> BigInt {
        &self.a + &self.s * &self.d
    }

    /// C = ceil((a-1)/s), the number of generator copies needed to cover
    /// every nonzero residue class.
    pub fn big_c(&self) -> BigInt {
        ceil_div(&(&self.a - 1), &self.s)
    }

    fn t(&self) -> BigInt {
        (&self.a - BigInt::from(2)).mod_floor(&self.s)
    }

    pub fn generator_set(&self) -> Result<GeneratorSet, Error> {
        let mut raw = Vec::new();
        let mut value = self.a.clone();
        let s = self.s.to_u64().ok_or(Error::TooLarge("step count"))?;
        for _ in 0..=s {
            raw.push(value.to_u64().ok_or(Error::TooLarge("generator"))?);
            value += &self.d;
        }
        GeneratorSet::new(&raw)
    }

    /// Roberts' closed form L = C·a + (a-1)(d-1) - 1.
    pub fn frobenius(&self) -> BigInt {
        self.big_c() * &self.a + (&self.a - 1) * (&self.d - 1) - 1
    }

    /// Grant's closed form 2·S_0 = C(a+t) + (a-1)(d-1) with t = (a-2) mod s.
    /// Both addends are even: (a-1)(d-1) because coprime a and d are never
    /// both even, and C(a+t) because a+t has the parity of (C-1)s.
    pub fn genus(&self) -> BigInt {
        let doubled = self.big_c() * (&self.a + self.t()) + (&self.a - 1) * (&self.d - 1);
        exact_div(doubled, 2, "arithmetic genus").expect("Grant's doubled genus form is even")
    }

    /// The Apéry set for base a: element a·ceil(n/s) + d·n at residue n·d
    /// for n = 1..a-1. The equivalent floor form a·(floor((n-1)/s)+1) + d·n
    /// is evaluated alongside as a transcription check.
    pub fn apery(&self) -> Result<AperySet, Error> {
        let a = to_enumerable(&self.a, "arithmetic Apéry set")?;
        let s = self.s.to_u64().ok_or(Error::TooLarge("step count"))?;
        let mut elements = Vec::with_capacity(a as usize - 1);
        for n in 1..a {
            let ceil_q = n.div_ceil(s);
            let floor_q = (n - 1) / s + 1;
            if ceil_q != floor_q {
                return Err(Error::Inconsistency {
                    context: "arithmetic Apéry set",
                    detail: format!(
                        "ceiling form gives multiplier {ceil_q} but floor form gives {floor_q} at n = {n}"
                    ),
                });
            }
            let value = BigInt::from(ceil_q) * &self.a + BigInt::from(n) * &self.d;
            elements.push(value.to_u64().ok_or(Error::Overflow("Apéry set element"))?);
        }
        AperySet::from_elements(a, elements)
    }

    /// Bernoulli-polynomial form: m·S_{m-1} = a^{m-1} sum_{n<a}
    /// B_m(ceil(n/s) + nd/a) - B_m.
    pub fn sylvester_bernoulli(&self, max_m: usize) -> Result<SylvesterReport, Error> {
        let a = to_enumerable(&self.a, "arithmetic Bernoulli-form sum")?;
        let s = self.s.to_u64().ok_or(Error::TooLarge("step count"))?;
        let points = (0..a).map(|n| {
            let q = if n == 0 { 0 } else { n.div_ceil(s) };
            Rational::new(
                BigInt::from(q) * &self.a + BigInt::from(n) * &self.d,
                self.a.clone(),
            )
        });
        sylvester_from_scaled_points(&self.a, points, max_m, SylvesterMethod::FamilyBernoulli)
    }

    /// Convolution form built from phi_j(C+d) and phi_j(C):
    ///
    /// m(m-1)·S_{m-2} = sum_j C(m,j) d^{m-j-1} B_{m-j} a^{j-1} phi_j(C+d)
    ///                + sum_j C(m,j) (-d)^{m-j-1} B_{m-j} b^{j-1} phi_j(C)
    ///                - m·B_{m-1}
    ///
    /// The j = 0 terms vanish with phi_0; at j = m the powers d^{-1} and
    /// (-d)^{-1} are genuine rationals and are kept exact.
    pub fn sylvester_convolution(&self, max_m: usize) -> Result<SylvesterReport, Error> {
        let top = max_m + 2;
        let c = self.big_c();
        let b = self.b();
        let neg_d = -self.d.clone();
        let arg_cd = Rational::from_integer(&c + &self.d);
        let arg_c = Rational::from_integer(c);
        let phis_cd: Vec<Rational> = (0..=top).map(|j| bernoullian_phi(j, &arg_cd)).collect();
        let phis_c: Vec<Rational> = (0..=top).map(|j| bernoullian_phi(j, &arg_c)).collect();
        let mut sums = Vec::with_capacity(max_m + 1);
        for m in 2..=top {
            let mut acc = Rational::zero();
            for j in 1..=m {
                let b_num = bernoulli_number(m - j);
                if b_num.is_zero() {
                    continue;
                }
                let coeff = Rational::from_integer(binomial(m as u64, j as u64)) * b_num;
                if !phis_cd[j].is_zero() {
                    acc += &coeff
                        * int_pow(&self.d, m as i64 - j as i64 - 1)?
                        * int_pow(&self.a, j as i64 - 1)?
                        * &phis_cd[j];
                }
                if !phis_c[j].is_zero() {
                    acc += &coeff
                        * int_pow(&neg_d, m as i64 - j as i64 - 1)?
                        * int_pow(&b, j as i64 - 1)?
                        * &phis_c[j];
                }
            }
            acc -= Rational::from_integer(BigInt::from(m)) * bernoulli_number(m - 1);
            acc /= Rational::from_integer(BigInt::from(m) * BigInt::from(m - 1));
            sums.push(expect_integer(acc, "arithmetic convolution Sylvester sum")?);
        }
        Ok(SylvesterReport::new(
            SylvesterMethod::FamilyConvolution,
            sums,
        ))
    }

    /// Explicit polynomials in C for the first three sums. The divisions by
    /// 2 and 12 are checked rather than assumed exact.
    pub fn explicit_s012(&self) -> Result<(BigInt, BigInt, BigInt), Error> {
        let a = &self.a;
        let d = &self.d;
        let s = &self.s;
        let c = self.big_c();

        let k2 = -s;
        let k1 = 2 * a - 2 + s;
        let k0 = (a - 1) * (d - 1);
        let doubled = (k2 * &c + k1) * &c + k0;
        let s0 = exact_div(doubled, 2, "explicit S_0 polynomial")?;

        let two_a_ds = 2 * a + d * s;
        let k3 = -2 * s * &two_a_ds;
        let k2 = 6 * a * a + 3 * &two_a_ds * (s - 1);
        let k1 = 6 * (d - 1) * a * (a - 1) + (3 * d - 2 * a - d * s) * s;
        let k0 = (a - 1) * (d - 1) * (2 * a * d - a - d - 1);
        let twelved = ((k3 * &c + k2) * &c + k1) * &c + k0;
        let s1 = exact_div(twelved, 12, "explicit S_1 polynomial")?;

        let a_sd = a + s * d;
        let k4 = -s * (&a_sd * (a + &a_sd) + a * a);
        let k3 = 4 * a * a * a
            + 2 * (3 * s - 2) * a * a
            + 2 * s * d * (3 * s - 2) * a
            + 2 * s * s * d * d * (s - 1);
        let k2 = 6 * (d - 1) * a * a * a + 3 * (2 - s - 2 * d) * a * a
            - 3 * s * d * (s - 2) * a
            - s * d * d * (s * s - 3 * s + 1);
        let k1 = 2 * (2 * d - 1) * (d - 1) * a * a * a - (6 * d * d - 6 * d + 2) * a * a
            + 2 * d * (d - s) * a
            + s * (1 - s) * d * d;
        let k0 = a * d * (a - 1) * (d - 1) * (a * d - a - d);
        let twelved = (((k4 * &c + k3) * &c + k2) * &c + k1) * &c + k0;
        let s2 = exact_div(twelved, 12, "explicit S_2 polynomial")?;

        Ok((s0, s1, s2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(a: i64, d: i64, s: i64) -> ArithInstance {
        ArithInstance::new(a, d, s).unwrap()
    }

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn validation_and_normalization() {
        let i = inst(5, 3, 2);
        assert_eq!(i.a(), &BigInt::from(5));
        assert_eq!(i.d(), &BigInt::from(3));
        assert_eq!(i.s(), &BigInt::from(2));
        assert_eq!(i.b(), BigInt::from(11));
        assert_eq!(i.big_c(), BigInt::from(2));
        assert_eq!(i.t(), BigInt::from(1));

        // Step counts past a-1 add only redundant generators.
        assert_eq!(inst(5, 3, 9).s(), &BigInt::from(4));
        assert_eq!(
            ArithInstance::new(4, 6, 1),
            Err(Error::NotCoprime(BigInt::from(2)))
        );
        assert_eq!(ArithInstance::new(1, 3, 1), Err(Error::Trivial));
        assert!(matches!(
            ArithInstance::new(5, 0, 2),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            ArithInstance::new(5, 3, 0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(inst(5, 3, 2).frobenius(), BigInt::from(17));
        assert_eq!(inst(3, 2, 1).frobenius(), BigInt::from(7));
        assert_eq!(inst(7, 1, 3).frobenius(), BigInt::from(13));
        assert_eq!(inst(11, 4, 3).frobenius(), BigInt::from(73));
    }

    #[test]
    fn genus_examples() {
        assert_eq!(inst(5, 3, 2).genus(), BigInt::from(10));
        assert_eq!(inst(3, 2, 1).genus(), BigInt::from(4));
        assert_eq!(inst(7, 1, 3).genus(), BigInt::from(9));
        assert_eq!(inst(11, 4, 3).genus(), BigInt::from(37));
    }

    #[test]
    fn apery_examples() {
        assert_eq!(inst(5, 3, 2).apery().unwrap().sorted(), vec![8, 11, 19, 22]);
        assert_eq!(inst(3, 2, 1).apery().unwrap().sorted(), vec![5, 10]);
        // Residue order coincides with sorted order here.
        assert_eq!(
            inst(7, 1, 3).apery().unwrap().elements(),
            &[8, 9, 10, 18, 19, 20]
        );
    }

    #[test]
    fn bernoulli_form_values() {
        // Frozen sieve power sums.
        assert_eq!(
            inst(5, 3, 2).sylvester_bernoulli(2).unwrap().sums(),
            big(&[10, 75, 825]).as_slice()
        );
        assert_eq!(
            inst(3, 2, 1).sylvester_bernoulli(2).unwrap().sums(),
            big(&[4, 14, 70]).as_slice()
        );
        assert_eq!(
            inst(7, 1, 3).sylvester_bernoulli(4).unwrap().sums(),
            big(&[9, 57, 525, 5697, 66213]).as_slice()
        );
        assert_eq!(
            inst(11, 4, 3).sylvester_bernoulli(6).unwrap().sums(),
            big(&[37, 970, 38398, 1833580, 97630930, 5589220300, 337052360698]).as_slice()
        );
    }

    #[test]
    fn convolution_form_values() {
        assert_eq!(
            inst(5, 3, 2).sylvester_convolution(2).unwrap().sums(),
            big(&[10, 75, 825]).as_slice()
        );
        assert_eq!(
            inst(3, 2, 1).sylvester_convolution(2).unwrap().sums(),
            big(&[4, 14, 70]).as_slice()
        );
        assert_eq!(
            inst(7, 1, 3).sylvester_convolution(4).unwrap().sums(),
            big(&[9, 57, 525, 5697, 66213]).as_slice()
        );
        assert_eq!(
            inst(11, 4, 3).sylvester_convolution(6).unwrap().sums(),
            big(&[37, 970, 38398, 1833580, 97630930, 5589220300, 337052360698]).as_slice()
        );
    }

    #[test]
    fn explicit_polynomials() {
        assert_eq!(
            inst(5, 3, 2).explicit_s012().unwrap(),
            (BigInt::from(10), BigInt::from(75), BigInt::from(825))
        );
        assert_eq!(
            inst(7, 1, 3).explicit_s012().unwrap(),
            (BigInt::from(9), BigInt::from(57), BigInt::from(525))
        );
    }

    #[test]
    fn routes_agree_on_small_instances() {
        for a in 2i64..=11 {
            for d in 1..=5 {
                if num::integer::gcd(a, d) != 1 {
                    continue;
                }
                for s in 1..a {
                    let i = inst(a, d, s);
                    let bern = i.sylvester_bernoulli(4).unwrap();
                    let conv = i.sylvester_convolution(4).unwrap();
                    assert_eq!(bern.sums(), conv.sums(), "({a},{d},{s})");
                    let (s0, s1, s2) = i.explicit_s012().unwrap();
                    assert_eq!(s0, i.genus(), "({a},{d},{s})");
                    assert_eq!(&s0, &bern.sums()[0], "({a},{d},{s})");
                    assert_eq!(&s1, &bern.sums()[1], "({a},{d},{s})");
                    assert_eq!(&s2, &bern.sums()[2], "({a},{d},{s})");
                    assert_eq!(
                        i.frobenius() + i.a(),
                        BigInt::from(i.apery().unwrap().max())
                    );
                }
            }
        }
    }
}
