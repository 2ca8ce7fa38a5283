//! Generalized arithmetic generators: a, ha+d, ha+2d, ..., ha+sd with
//! gcd(a, d) = 1 and h >= 1. Setting h = 1 recovers the plain arithmetic
//! family.

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::Integer;

use crate::bernoulli::{bernoulli_number, bernoullian_phi};
use crate::error::Error;
use crate::rational::{binomial, exact_div, expect_integer, int_pow, Rational};
use crate::semigroup::{AperySet, GeneratorSet, SylvesterMethod, SylvesterReport};

use super::arith::ArithInstance;
use super::{ceil_div, floor_div, sylvester_from_scaled_points, to_enumerable};

/// A generalized arithmetic progression of generators, with the step count
/// clamped to a-1 as in the plain arithmetic case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenArithInstance {
    a: BigInt,
    h: BigInt,
    d: BigInt,
    s: BigInt,
}

impl GenArithInstance {
    pub fn new(
        a: impl Into<BigInt>,
        h: impl Into<BigInt>,
        d: impl Into<BigInt>,
        s: impl Into<BigInt>,
    ) -> Result<Self, Error> {
        let a = a.into();
        let h = h.into();
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
        if !h.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "multiplier h must be positive, got {h}"
            )));
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
        Ok(GenArithInstance { a, h, d, s })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn h(&self) -> &BigInt {
        &self.h
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn s(&self) -> &BigInt {
        &self.s
    }

    /// The largest generator ha + sd.
    pub fn top(&self) -> BigInt {
        &self.h * &self.a + &self.s * &self.d
    }

    /// C = ceil((a-1)/s).
    pub fn big_c(&self) -> BigInt {
        ceil_div(&(&self.a - 1), &self.s)
    }

    /// The plain arithmetic instance this degenerates to when h = 1.
    pub fn arith_equivalent(&self) -> Option<ArithInstance> {
        if self.h.is_one() {
            ArithInstance::new(self.a.clone(), self.d.clone(), self.s.clone()).ok()
        } else {
            None
        }
    }

    pub fn generator_set(&self) -> Result<GeneratorSet, Error> {
        let s = self.s.to_u64().ok_or(Error::TooLarge("step count"))?;
        let mut raw = Vec::with_capacity(s as usize + 1);
        raw.push(self.a.to_u64().ok_or(Error::TooLarge("generator"))?);
        let mut value = &self.h * &self.a;
        for _ in 1..=s {
            value += &self.d;
            raw.push(value.to_u64().ok_or(Error::TooLarge("generator"))?);
        }
        GeneratorSet::new(&raw)
    }

    /// Selmer's closed form L = (h·floor((a-2)/s) + h - 1)·a + (a-1)·d.
    pub fn frobenius(&self) -> BigInt {
        let q = floor_div(&(&self.a - 2), &self.s);
        (&self.h * q + &self.h - 1) * &self.a + (&self.a - 1) * &self.d
    }

    /// Both published routes for L and S_0, each computed twice:
    ///
    /// - L from Selmer's form and from the largest Apéry element haC +
    ///   d(a-1) minus a;
    /// - S_0 from Selmer's form with q = floor((a-1)/s) and r = (a-1) mod s,
    ///   2·S_0 = (a-1)(hq + d + h - 1) + h(q+1)r, and from the form
    ///   2·S_0 = h·C(a+t) + (a-1)(d-1) with t = (a-2) mod s.
    ///
    /// A mismatch between routes is reported as an inconsistency.
    pub fn frobenius_genus(&self) -> Result<(BigInt, BigInt), Error> {
        let a = &self.a;
        let h = &self.h;
        let d = &self.d;
        let s = &self.s;

        let selmer_l = self.frobenius();
        let apery_l = h * a * self.big_c() + d * (a - 1) - a;
        if selmer_l != apery_l {
            return Err(Error::Inconsistency {
                context: "generalized arithmetic Frobenius number",
                detail: format!("Selmer form gives {selmer_l}, Apéry route gives {apery_l}"),
            });
        }

        let q = floor_div(&(a - 1), s);
        let r = (a - BigInt::one()).mod_floor(s);
        let selmer_doubled = (a - 1) * (h * &q + d + h - 1) + h * (&q + 1) * r;

        let t = (a - BigInt::from(2)).mod_floor(s);
        let other_doubled = h * self.big_c() * (a + t) + (a - 1) * (d - 1);
        if selmer_doubled != other_doubled {
            return Err(Error::Inconsistency {
                context: "generalized arithmetic genus",
                detail: format!(
                    "Selmer form gives 2·S_0 = {selmer_doubled}, Apéry route gives {other_doubled}"
                ),
            });
        }
        let genus = exact_div(selmer_doubled, 2, "generalized arithmetic genus")?;
        Ok((selmer_l, genus))
    }

    /// The Apéry set for base a: element ha·ceil(n/s) + d·n at residue n·d
    /// for n = 1..a-1, with the floor form ha·(floor((n-1)/s)+1) + d·n
    /// evaluated alongside as a transcription check.
    pub fn apery(&self) -> Result<AperySet, Error> {
        let a = to_enumerable(&self.a, "generalized arithmetic Apéry set")?;
        let s = self.s.to_u64().ok_or(Error::TooLarge("step count"))?;
        let ha = &self.h * &self.a;
        let mut elements = Vec::with_capacity(a as usize - 1);
        for n in 1..a {
            let ceil_q = n.div_ceil(s);
            let floor_q = (n - 1) / s + 1;
            if ceil_q != floor_q {
                return Err(Error::Inconsistency {
                    context: "generalized arithmetic Apéry set",
                    detail: format!(
                        "ceiling form gives multiplier {ceil_q} but floor form gives {floor_q} at n = {n}"
                    ),
                });
            }
            let value = BigInt::from(ceil_q) * &ha + BigInt::from(n) * &self.d;
            elements.push(value.to_u64().ok_or(Error::Overflow("Apéry set element"))?);
        }
        AperySet::from_elements(a, elements)
    }

    /// Bernoulli-polynomial form: m·S_{m-1} = a^{m-1} sum_{n<a}
    /// B_m(h·ceil(n/s) + nd/a) - B_m.
    pub fn sylvester_bernoulli(&self, max_m: usize) -> Result<SylvesterReport, Error> {
        let a = to_enumerable(&self.a, "generalized arithmetic Bernoulli-form sum")?;
        let s = self.s.to_u64().ok_or(Error::TooLarge("step count"))?;
        let ha = &self.h * &self.a;
        let points = (0..a).map(|n| {
            let q = if n == 0 { 0 } else { n.div_ceil(s) };
            Rational::new(
                BigInt::from(q) * &ha + BigInt::from(n) * &self.d,
                self.a.clone(),
            )
        });
        sylvester_from_scaled_points(&self.a, points, max_m, SylvesterMethod::FamilyBernoulli)
    }

    /// Convolution form built from phi_j(hC+d), phi_j(h), and phi_j(C):
    ///
    /// m(m-1)(m-2)·S_{m-3} =
    ///   m · sum_{j=1}^{m-1} C(m-1,j) d^{m-j-2} B_{m-1-j} a^{j-1} phi_j(hC+d)
    /// + sum_{j=1}^{m-1} sum_{i=1}^{j} C(m,j) C(j,i) a^{m-j-1} phi_{m-j}(h)
    ///   (-d)^{j-i-1} (ha+sd)^{i-1} B_{j-i} phi_i(C)
    /// - m(m-1)·B_{m-2}
    ///
    /// Terms whose phi factor vanishes are skipped; the surviving boundary
    /// indices (j = m-1 in the single sum, i = j in the double sum) carry
    /// genuine d^{-1} and (-d)^{-1} factors kept as exact rationals. For
    /// h = 1 every phi_{m-j}(h) with m-j != 1 vanishes and the double sum
    /// collapses to the plain arithmetic form.
    pub fn sylvester_convolution(&self, max_m: usize) -> Result<SylvesterReport, Error> {
        let top = max_m + 3;
        let c = self.big_c();
        let arg_hcd = Rational::from_integer(&self.h * &c + &self.d);
        let arg_h = Rational::from_integer(self.h.clone());
        let arg_c = Rational::from_integer(c);
        let phis_hcd: Vec<Rational> = (0..=top).map(|j| bernoullian_phi(j, &arg_hcd)).collect();
        let phis_h: Vec<Rational> = (0..=top).map(|j| bernoullian_phi(j, &arg_h)).collect();
        let phis_c: Vec<Rational> = (0..=top).map(|j| bernoullian_phi(j, &arg_c)).collect();
        let top_gen = self.top();
        let neg_d = -self.d.clone();
        let mut sums = Vec::with_capacity(max_m + 1);
        for m in 3..=top {
            let mut acc = Rational::zero();
            for (j, phi) in phis_hcd.iter().enumerate().take(m).skip(1) {
                let b_num = bernoulli_number(m - 1 - j);
                if b_num.is_zero() || phi.is_zero() {
                    continue;
                }
                acc += Rational::from_integer(BigInt::from(m) * binomial(m as u64 - 1, j as u64))
                    * b_num
                    * int_pow(&self.d, m as i64 - j as i64 - 2)?
                    * int_pow(&self.a, j as i64 - 1)?
                    * phi;
            }
            for j in 1..m {
                if phis_h[m - j].is_zero() {
                    continue;
                }
                let c_mj = binomial(m as u64, j as u64);
                let a_pow = int_pow(&self.a, m as i64 - j as i64 - 1)?;
                for (i, phi_c) in phis_c.iter().enumerate().take(j + 1).skip(1) {
                    let b_ji = bernoulli_number(j - i);
                    if b_ji.is_zero() || phi_c.is_zero() {
                        continue;
                    }
                    acc += Rational::from_integer(&c_mj * binomial(j as u64, i as u64))
                        * &a_pow
                        * &phis_h[m - j]
                        * int_pow(&neg_d, j as i64 - i as i64 - 1)?
                        * int_pow(&top_gen, i as i64 - 1)?
                        * b_ji
                        * phi_c;
                }
            }
            acc -= Rational::from_integer(BigInt::from(m) * BigInt::from(m - 1))
                * bernoulli_number(m - 2);
            acc /=
                Rational::from_integer(BigInt::from(m) * BigInt::from(m - 1) * BigInt::from(m - 2));
            sums.push(expect_integer(
                acc,
                "generalized arithmetic convolution Sylvester sum",
            )?);
        }
        Ok(SylvesterReport::new(
            SylvesterMethod::FamilyConvolution,
            sums,
        ))
    }
}
