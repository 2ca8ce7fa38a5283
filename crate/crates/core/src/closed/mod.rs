//! Closed-form fast paths for the three structured generator families:
//! two coprime generators {a, b}, arithmetic progressions
//! {a, a+d, ..., a+sd}, and generalized arithmetic progressions
//! {a, ha+d, ..., ha+sd}.
//!
//! Formula-only operations (Frobenius number, genus, convolution-form
//! Sylvester sums) work on arbitrary-magnitude parameters. Operations that
//! enumerate a residue class per generator element (Apéry materialization,
//! the O(a·M) Bernoulli-form sums) require parameters small enough to loop
//! over and are guarded by the shared memory cap.

mod arith;
mod gen_arith;
mod two_var;

pub use arith::ArithInstance;
pub use gen_arith::GenArithInstance;
pub use two_var::TwoVarInstance;

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::bernoulli::bernoulli_number;
use crate::error::Error;
use crate::oracle;
use crate::rational::{binomial, expect_integer, int_pow, Rational};
use crate::semigroup::{AperySet, GeneratorSet, SylvesterMethod, SylvesterReport};

/// A generator list recognized as one of the structured families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyInstance {
    TwoVar(TwoVarInstance),
    Arith(ArithInstance),
    GenArith(GenArithInstance),
}

impl FamilyInstance {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyInstance::TwoVar(_) => "two",
            FamilyInstance::Arith(_) => "arith",
            FamilyInstance::GenArith(_) => "genarith",
        }
    }

    pub fn frobenius(&self) -> BigInt {
        match self {
            FamilyInstance::TwoVar(inst) => inst.frobenius(),
            FamilyInstance::Arith(inst) => inst.frobenius(),
            FamilyInstance::GenArith(inst) => inst.frobenius(),
        }
    }

    pub fn genus(&self) -> Result<BigInt, Error> {
        match self {
            FamilyInstance::TwoVar(inst) => Ok(inst.genus()),
            FamilyInstance::Arith(inst) => Ok(inst.genus()),
            FamilyInstance::GenArith(inst) => Ok(inst.frobenius_genus()?.1),
        }
    }

    pub fn apery(&self) -> Result<AperySet, Error> {
        match self {
            FamilyInstance::TwoVar(inst) => inst.apery(),
            FamilyInstance::Arith(inst) => inst.apery(),
            FamilyInstance::GenArith(inst) => inst.apery(),
        }
    }

    pub fn generator_set(&self) -> Result<GeneratorSet, Error> {
        match self {
            FamilyInstance::TwoVar(inst) => inst.generator_set(),
            FamilyInstance::Arith(inst) => inst.generator_set(),
            FamilyInstance::GenArith(inst) => inst.generator_set(),
        }
    }

    pub fn sylvester_bernoulli(&self, max_m: usize) -> Result<SylvesterReport, Error> {
        match self {
            FamilyInstance::TwoVar(inst) => inst.sylvester_bernoulli(max_m),
            FamilyInstance::Arith(inst) => inst.sylvester_bernoulli(max_m),
            FamilyInstance::GenArith(inst) => inst.sylvester_bernoulli(max_m),
        }
    }

    pub fn sylvester_convolution(&self, max_m: usize) -> Result<SylvesterReport, Error> {
        match self {
            FamilyInstance::TwoVar(inst) => inst.sylvester_convolution(max_m),
            FamilyInstance::Arith(inst) => inst.sylvester_convolution(max_m),
            FamilyInstance::GenArith(inst) => inst.sylvester_convolution(max_m),
        }
    }
}

/// Recognizes a validated generator set as one of the structured families:
/// two generators are always the two-variable case, and three or more match
/// when the tail increments are uniform (difference d) and the second
/// element is h·a + d for a whole h >= 1, giving the arithmetic family for
/// h = 1 and the generalized one otherwise. Sets containing 1 and sets with
/// no such pattern return None.
pub fn detect_family(set: &GeneratorSet) -> Option<FamilyInstance> {
    if set.is_trivial() {
        return None;
    }
    let g = set.generators();
    match g.len() {
        0 | 1 => None,
        2 => TwoVarInstance::new(g[0], g[1])
            .ok()
            .map(FamilyInstance::TwoVar),
        _ => {
            let a = g[0];
            let d = g[2] - g[1];
            if g.windows(2).skip(1).any(|w| w[1] - w[0] != d) {
                return None;
            }
            if g[1] <= d || !(g[1] - d).is_multiple_of(a) {
                return None;
            }
            let h = (g[1] - d) / a;
            let s = (g.len() - 1) as u64;
            if h == 1 {
                ArithInstance::new(a, d, s).ok().map(FamilyInstance::Arith)
            } else {
                GenArithInstance::new(a, h, d, s)
                    .ok()
                    .map(FamilyInstance::GenArith)
            }
        }
    }
}

/// Ceiling quotient for positive divisors.
pub(crate) fn ceil_div(x: &BigInt, y: &BigInt) -> BigInt {
    debug_assert!(y.is_positive());
    num::Integer::div_ceil(x, y)
}

/// Floor quotient for positive divisors.
pub(crate) fn floor_div(x: &BigInt, y: &BigInt) -> BigInt {
    debug_assert!(y.is_positive());
    num::Integer::div_floor(x, y)
}

/// Converts a parameter to a loop counter for the enumerating paths, bounded
/// by the shared memory cap so a formula-scale input cannot demand an
/// enumeration-scale computation.
pub(crate) fn to_enumerable(value: &BigInt, what: &'static str) -> Result<u64, Error> {
    let v = value.to_u64().ok_or(Error::TooLarge(what))?;
    let cap = oracle::memory_cap()?;
    if v > cap {
        return Err(Error::MemoryCap { requested: v, cap });
    }
    Ok(v)
}

/// Shared engine for the Bernoulli-polynomial-shaped sums: given the scaled
/// Apéry abscissas x_n (so that the set element is a·x_n), evaluates
/// m·S_{m-1} = a^{m-1} · sum_n B_m(x_n) - B_m for m = 1 ... max_m + 1.
///
/// The inner sums are pooled into power sums P_r = sum_n x_n^r, computed
/// incrementally in one pass, so the whole evaluation costs O(a·M) rational
/// operations plus an O(M²) tail.
pub(crate) fn sylvester_from_scaled_points(
    a: &BigInt,
    points: impl Iterator<Item = Rational>,
    max_m: usize,
    method: SylvesterMethod,
) -> Result<SylvesterReport, Error> {
    let top = max_m + 1;
    let mut power_sums = vec![Rational::zero(); top + 1];
    for x in points {
        let mut power = Rational::one();
        for entry in power_sums.iter_mut() {
            *entry += &power;
            power *= &x;
        }
    }
    let mut sums = Vec::with_capacity(top);
    for m in 1..=top {
        // sum_n B_m(x_n) = sum_r C(m,r) B_{m-r} P_r.
        let mut acc = Rational::zero();
        for (r, p) in power_sums.iter().take(m + 1).enumerate() {
            let b = bernoulli_number(m - r);
            if b.is_zero() {
                continue;
            }
            acc += Rational::from_integer(binomial(m as u64, r as u64)) * b * p;
        }
        let value = (int_pow(a, m as i64 - 1)? * acc - bernoulli_number(m))
            / Rational::from_integer(BigInt::from(m));
        sums.push(expect_integer(
            value,
            "family Bernoulli-form Sylvester sum",
        )?);
    }
    Ok(SylvesterReport::new(method, sums))
}
