//! Generic machinery for numerical semigroups given by an arbitrary coprime
//! generator list: validation, Apéry sets, the non-representable set, the
//! Frobenius number, genus, Sylvester power sums, and the identity checks
//! that tie those quantities together.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial_coefficients};
use crate::error::Error;
use crate::oracle;
use crate::rational::{binomial, eval_poly, expect_integer, int_pow, Rational};

/// A validated generator list: sorted, deduplicated, with overall gcd 1.
///
/// Redundant generators (ones representable by the others) are kept; they
/// change nothing downstream. A list containing 1 is accepted as the trivial
/// semigroup and flagged by [`GeneratorSet::is_trivial`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<u64>,
}

impl GeneratorSet {
    pub fn new(raw: &[u64]) -> Result<Self, Error> {
        if raw.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if raw.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut gens = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0u64, |acc, &x| num::integer::gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCoprime(BigInt::from(g)));
        }
        Ok(GeneratorSet { gens })
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn min(&self) -> u64 {
        self.gens[0]
    }

    pub fn max(&self) -> u64 {
        *self.gens.last().unwrap()
    }

    pub fn contains(&self, g: u64) -> bool {
        self.gens.binary_search(&g).is_ok()
    }

    /// True when 1 is a generator, so every positive integer is
    /// representable and the non-representable set is empty.
    pub fn is_trivial(&self) -> bool {
        self.gens[0] == 1
    }
}

/// The Apéry set with respect to one generator: for each nonzero residue j
/// mod base, the least representable integer congruent to j. Elements are
/// stored in residue order (entry j - 1 holds the residue-j element), which
/// makes the set a complete positive residue system by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    base: u64,
    elements: Vec<u64>,
}

impl AperySet {
    /// Wraps candidate values (in any order) after checking that they form a
    /// complete positive residue system mod base. Closed-form generators
    /// route through here so a transcription error surfaces immediately.
    pub fn from_elements(base: u64, values: impl IntoIterator<Item = u64>) -> Result<Self, Error> {
        if base < 2 {
            return Err(Error::Trivial);
        }
        let size = residue_count(base)?;
        let mut elements = vec![0u64; size];
        let mut filled = 0usize;
        for n in values {
            let j = (n % base) as usize;
            if n == 0 || j == 0 {
                return Err(Error::Inconsistency {
                    context: "Apéry residue system",
                    detail: format!("element {n} is divisible by the base {base}"),
                });
            }
            if elements[j - 1] != 0 {
                return Err(Error::Inconsistency {
                    context: "Apéry residue system",
                    detail: format!("residue {j} mod {base} appears twice"),
                });
            }
            elements[j - 1] = n;
            filled += 1;
        }
        if filled != size {
            return Err(Error::Inconsistency {
                context: "Apéry residue system",
                detail: format!("{filled} residues filled, expected {size}"),
            });
        }
        Ok(AperySet { base, elements })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// Elements in residue order: entry j - 1 is congruent to j mod base.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn element_for_residue(&self, j: u64) -> u64 {
        self.elements[(j - 1) as usize]
    }

    pub fn max(&self) -> u64 {
        *self.elements.iter().max().unwrap()
    }

    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.elements.clone();
        v.sort_unstable();
        v
    }

    /// The set with 0 adjoined, sorted ascending; most summation formulas
    /// run over this augmented set.
    pub fn with_zero_sorted(&self) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.elements.len() + 1);
        v.push(0);
        v.extend_from_slice(&self.elements);
        v.sort_unstable();
        v
    }
}

fn residue_count(base: u64) -> Result<usize, Error> {
    let cap = oracle::memory_cap()?;
    if base - 1 > cap {
        return Err(Error::MemoryCap {
            requested: base - 1,
            cap,
        });
    }
    usize::try_from(base - 1).map_err(|_| Error::TooLarge("residue table"))
}

/// Computes the Apéry set by single-source shortest paths on the residue
/// graph mod base: nodes are the residues, and each generator g contributes
/// edges v -> (v + g) mod base of weight g. The distance from 0 to j is the
/// least representable integer congruent to j.
pub fn apery_set(set: &GeneratorSet, base: u64) -> Result<AperySet, Error> {
    if base == 1 {
        return Err(Error::Trivial);
    }
    if !set.contains(base) {
        return Err(Error::BaseNotGenerator(base));
    }
    let size = residue_count(base)? + 1;
    // Generators divisible by the base (including the base itself) give
    // self-loops on the residue graph and can never shorten a path.
    let steps: Vec<(u64, u64)> = set
        .generators()
        .iter()
        .filter(|&&g| g % base != 0)
        .map(|&g| (g, g % base))
        .collect();

    const UNREACHED: u64 = u64::MAX;
    let mut dist = vec![UNREACHED; size];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0u64)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v as usize] {
            continue;
        }
        for &(g, offset) in &steps {
            let mut u = v + offset;
            if u >= base {
                u -= base;
            }
            let nd = d
                .checked_add(g)
                .ok_or(Error::Overflow("Apéry set element"))?;
            if nd < dist[u as usize] {
                dist[u as usize] = nd;
                heap.push(Reverse((nd, u)));
            }
        }
    }

    let mut elements = Vec::with_capacity(size - 1);
    for (j, &d) in dist.iter().enumerate().skip(1) {
        if d == UNREACHED {
            // Unreachable residues would mean the generators share a common
            // divisor with the base, impossible after validation.
            return Err(Error::Inconsistency {
                context: "residue graph",
                detail: format!("residue {j} mod {base} unreachable"),
            });
        }
        elements.push(d);
    }
    Ok(AperySet { base, elements })
}

/// The sorted set of positive integers with no representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonRepSet {
    values: Vec<u64>,
}

impl NonRepSet {
    pub fn from_sorted(values: Vec<u64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
        NonRepSet { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.values.last().copied()
    }
}

/// Reconstructs the non-representable set from an Apéry set: an integer
/// congruent to j mod base is non-representable exactly when it is positive
/// and smaller than the residue-j Apéry element.
pub fn nonrep_set(apery: &AperySet) -> NonRepSet {
    let base = apery.base();
    let mut values = Vec::new();
    for (idx, &n_j) in apery.elements().iter().enumerate() {
        let mut v = idx as u64 + 1;
        while v < n_j {
            values.push(v);
            v += base;
        }
    }
    values.sort_unstable();
    NonRepSet { values }
}

/// The Frobenius number L = max of the Apéry set minus the base: the largest
/// non-representable integer. For the trivial semigroup (1 among the
/// generators, queried from a base >= 2) this is -1.
pub fn frobenius_number(apery: &AperySet) -> BigInt {
    BigInt::from(apery.max()) - BigInt::from(apery.base())
}

/// The genus, computed by both expressions of the same identity: the mean
/// form (1/a) sum n - (a-1)/2 and the floor form sum floor(n/a), n ranging
/// over the Apéry set. The two must agree.
pub fn genus(apery: &AperySet) -> Result<BigInt, Error> {
    let base = apery.base();
    let sum: BigInt = apery.elements().iter().map(|&n| BigInt::from(n)).sum();
    let mean_form = Rational::new(sum, BigInt::from(base))
        - Rational::new(BigInt::from(base - 1), BigInt::from(2u8));
    let mean_form = expect_integer(mean_form, "genus via the Apéry mean")?;
    let floor_form: BigInt = apery
        .elements()
        .iter()
        .map(|&n| BigInt::from(n / base))
        .sum();
    if mean_form != floor_form {
        return Err(Error::Inconsistency {
            context: "genus",
            detail: format!("mean form {mean_form} != floor form {floor_form}"),
        });
    }
    Ok(floor_form)
}

/// Label for the formula that produced a batch of Sylvester sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SylvesterMethod {
    /// Direct summation of powers over the non-representable set.
    Direct,
    /// Bernoulli-polynomial sum over an arbitrary Apéry set.
    AperyBernoulli,
    /// Family closed form, Bernoulli-polynomial shape (O(a·M) terms).
    FamilyBernoulli,
    /// Family closed form, convolution shape (O(M²) terms).
    FamilyConvolution,
    /// Rödseth's double sum for two generators.
    Rodseth,
    /// Explicit polynomials for S_0, S_1, S_2 of the arithmetic family.
    ExplicitPolynomial,
}

impl SylvesterMethod {
    pub fn label(&self) -> &'static str {
        match self {
            SylvesterMethod::Direct => "direct",
            SylvesterMethod::AperyBernoulli => "bernoulli-apery",
            SylvesterMethod::FamilyBernoulli => "bernoulli-family",
            SylvesterMethod::FamilyConvolution => "convolution",
            SylvesterMethod::Rodseth => "rodseth",
            SylvesterMethod::ExplicitPolynomial => "explicit",
        }
    }
}

/// Power sums S_0 ... S_M over the non-representable set, tagged with the
/// formula that produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterReport {
    method: SylvesterMethod,
    sums: Vec<BigInt>,
}

impl SylvesterReport {
    pub(crate) fn new(method: SylvesterMethod, sums: Vec<BigInt>) -> Self {
        debug_assert!(!sums.is_empty());
        debug_assert!(sums.iter().all(|s| !s.is_negative()));
        SylvesterReport { method, sums }
    }

    pub fn method(&self) -> SylvesterMethod {
        self.method
    }

    pub fn sums(&self) -> &[BigInt] {
        &self.sums
    }

    pub fn max_order(&self) -> usize {
        self.sums.len() - 1
    }
}

/// S_0 ... S_M by direct summation over the non-representable set.
pub fn sylvester_sums_direct(nr: &NonRepSet, max_m: usize) -> SylvesterReport {
    let mut sums = vec![BigInt::zero(); max_m + 1];
    for &n in nr.values() {
        let n = BigInt::from(n);
        let mut power = BigInt::one();
        for s in sums.iter_mut() {
            *s += &power;
            power *= &n;
        }
    }
    SylvesterReport::new(SylvesterMethod::Direct, sums)
}

/// S_0 ... S_M from the Apéry set alone, via
/// m·S_{m-1} = a^{m-1} · sum_{n in N_0} B_m(n/a) - B_m.
///
/// Expanding B_m around the power sums P_r = sum_{N_0} n^r turns the outer
/// work into O(M²) rational operations after one O(|N|·M) integer pass.
/// Every S must come out an exact integer; anything else is a hard failure.
pub fn sylvester_sums_bernoulli(apery: &AperySet, max_m: usize) -> Result<SylvesterReport, Error> {
    let base = BigInt::from(apery.base());
    let top = max_m + 1;
    let mut power_sums = vec![BigInt::zero(); top + 1];
    power_sums[0] = BigInt::one(); // the n = 0 element of N_0
    for &n in apery.elements() {
        let n = BigInt::from(n);
        let mut power = BigInt::one();
        for entry in power_sums.iter_mut() {
            *entry += &power;
            power *= &n;
        }
    }
    let mut sums = Vec::with_capacity(top);
    for m in 1..=top {
        // a^{m-1} sum_{N_0} B_m(n/a) = sum_r C(m,r) B_{m-r} P_r a^{m-1-r};
        // the r = m term carries the lone a^{-1}.
        let mut acc = Rational::zero();
        for (r, p) in power_sums.iter().take(m + 1).enumerate() {
            let b = bernoulli_number(m - r);
            if b.is_zero() {
                continue;
            }
            acc += Rational::from_integer(binomial(m as u64, r as u64))
                * b
                * Rational::from_integer(p.clone())
                * int_pow(&base, m as i64 - 1 - r as i64)?;
        }
        acc -= bernoulli_number(m);
        acc /= Rational::from_integer(BigInt::from(m));
        sums.push(expect_integer(acc, "Apéry Bernoulli-form Sylvester sum")?);
    }
    Ok(SylvesterReport::new(SylvesterMethod::AperyBernoulli, sums))
}

/// One member of the fixed family of test functions for the master identity.
#[derive(Debug, Clone, PartialEq)]
pub enum WitnessFn {
    /// f(n) = c.
    Constant(Rational),
    /// f(n) = n^m.
    Monomial(u32),
    /// f(n) = 1 if n >= tau else 0.
    Threshold(u64),
    /// f(n) = x^n for a fixed rational x.
    Power(Rational),
    /// f(n) = floor(n / base).
    FloorDivBase,
    /// f(n) = B_m(n / base).
    BernoulliAtScaled(u32),
}

impl WitnessFn {
    pub fn describe(&self, base: u64) -> String {
        match self {
            WitnessFn::Constant(c) => format!("f(n) = {c}"),
            WitnessFn::Monomial(m) => format!("f(n) = n^{m}"),
            WitnessFn::Threshold(tau) => format!("f(n) = 1{{n >= {tau}}}"),
            WitnessFn::Power(x) => format!("f(n) = ({x})^n"),
            WitnessFn::FloorDivBase => format!("f(n) = floor(n/{base})"),
            WitnessFn::BernoulliAtScaled(m) => format!("f(n) = B_{m}(n/{base})"),
        }
    }

    /// Evaluates f at every argument 0..=max_n in one pass. The geometric
    /// case advances by one multiplication per point; per-point
    /// exponentiation would dominate everything else in the identity check.
    pub fn eval_table(&self, base: u64, max_n: u64) -> Vec<Rational> {
        let len = (max_n + 1) as usize;
        match self {
            WitnessFn::Constant(c) => vec![c.clone(); len],
            WitnessFn::Monomial(m) => (0..=max_n)
                .map(|n| Rational::from_integer(BigInt::from(n).pow(*m)))
                .collect(),
            WitnessFn::Threshold(tau) => (0..=max_n)
                .map(|n| {
                    if n >= *tau {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
            WitnessFn::Power(x) => {
                let mut table = Vec::with_capacity(len);
                let mut current = Rational::one();
                for _ in 0..=max_n {
                    table.push(current.clone());
                    current *= x;
                }
                table
            }
            WitnessFn::FloorDivBase => (0..=max_n)
                .map(|n| Rational::from_integer(BigInt::from(n / base)))
                .collect(),
            WitnessFn::BernoulliAtScaled(m) => {
                let coeffs = bernoulli_polynomial_coefficients(*m as usize);
                (0..=max_n)
                    .map(|n| {
                        eval_poly(&coeffs, &Rational::new(BigInt::from(n), BigInt::from(base)))
                    })
                    .collect()
            }
        }
    }
}

/// The fixed witness family: constants, monomials up to degree 6, threshold
/// indicators (including one at the top Apéry element, where the right side
/// of the identity collapses to 1), geometric sequences, the floor-quotient,
/// and scaled Bernoulli polynomials.
pub fn standard_witness_family(base: u64, max_apery: u64) -> Vec<WitnessFn> {
    let mut family = vec![
        WitnessFn::Constant(Rational::one()),
        WitnessFn::Constant(Rational::new(BigInt::from(-3), BigInt::from(2u8))),
    ];
    family.extend((1..=6).map(WitnessFn::Monomial));
    family.push(WitnessFn::Threshold(1));
    family.push(WitnessFn::Threshold(base));
    family.push(WitnessFn::Threshold(max_apery));
    family.push(WitnessFn::Power(Rational::from_integer(BigInt::from(2))));
    family.push(WitnessFn::Power(Rational::new(
        BigInt::one(),
        BigInt::from(2u8),
    )));
    family.push(WitnessFn::Power(Rational::new(
        BigInt::from(-1),
        BigInt::from(3u8),
    )));
    family.push(WitnessFn::FloorDivBase);
    family.extend((2..=4).map(WitnessFn::BernoulliAtScaled));
    family
}

/// Checks the master identity
/// sum_{n in NR} [f(n + a) - f(n)] = sum_{n in N} f(n) - sum_{n=1}^{a-1} f(n)
/// with NR taken from the brute-force sieve and N from the residue-graph
/// shortest paths, so the two sides never share a computation.
pub fn master_identity_check(set: &GeneratorSet, base: u64, f: &WitnessFn) -> Result<bool, Error> {
    let apery = apery_set(set, base)?;
    let nr = oracle::oracle_nr_auto(set)?;
    Ok(master_identity_check_with(&apery, nr.values(), f))
}

/// The same identity check against a caller-supplied non-representable set,
/// letting one sieve run serve a whole family of test functions.
pub fn master_identity_check_with(apery: &AperySet, nr: &[u64], f: &WitnessFn) -> bool {
    let base = apery.base();
    let max_arg = nr.last().map(|&n| n + base).unwrap_or(0).max(apery.max());
    let table = f.eval_table(base, max_arg);
    let mut lhs = Rational::zero();
    for &n in nr {
        lhs += &table[(n + base) as usize] - &table[n as usize];
    }
    let mut rhs = Rational::zero();
    for &n in apery.elements() {
        rhs += &table[n as usize];
    }
    for n in 1..base {
        rhs -= &table[n as usize];
    }
    lhs == rhs
}

/// Base invariance: the generating polynomial of the Apéry set, divided by
/// x^base - 1, does not depend on which generator was chosen as the base.
/// Cleared of denominators this says
/// (x^{b2} - 1) · P_{b1}(x) = (x^{b1} - 1) · P_{b2}(x)
/// for P_b(x) = sum_{n in N_0(b)} x^n, and both sides are compared as exact
/// integer polynomials. The reconstructed non-representable sets must also
/// be identical.
pub fn base_invariance_check(set: &GeneratorSet, base1: u64, base2: u64) -> Result<bool, Error> {
    let apery1 = apery_set(set, base1)?;
    let apery2 = apery_set(set, base2)?;
    if nonrep_set(&apery1) != nonrep_set(&apery2) {
        return Ok(false);
    }
    let degree = (apery1.max() + base2).max(apery2.max() + base1);
    let cap = oracle::memory_cap()?;
    if degree >= cap {
        return Err(Error::MemoryCap {
            requested: degree + 1,
            cap,
        });
    }
    // Each product (x^c - 1) · P(x) is accumulated as +1 at n + c and -1 at
    // n; every coefficient stays tiny, so machine integers suffice.
    let mut lhs = vec![0i64; degree as usize + 1];
    for n in apery1.with_zero_sorted() {
        lhs[(n + base2) as usize] += 1;
        lhs[n as usize] -= 1;
    }
    let mut rhs = vec![0i64; degree as usize + 1];
    for n in apery2.with_zero_sorted() {
        rhs[(n + base1) as usize] += 1;
        rhs[n as usize] -= 1;
    }
    Ok(lhs == rhs)
}

/// The floor-sum identity sum_{n=1}^{a-1} floor(n·b/a) = (a-1)(b-1)/2 for
/// coprime a and b.
pub fn hacks_identity_check(a: u64, b: u64) -> Result<bool, Error> {
    if a < 2 {
        return Err(Error::InvalidParameter(format!(
            "a must be at least 2, got {a}"
        )));
    }
    let g = num::integer::gcd(a, b);
    if g != 1 {
        return Err(Error::NotCoprime(BigInt::from(g)));
    }
    let mut floor_sum = BigInt::zero();
    for n in 1..a {
        floor_sum += BigInt::from(n as u128 * b as u128 / a as u128);
    }
    let closed = BigInt::from(a - 1) * BigInt::from(b - 1) / BigInt::from(2u8);
    Ok(floor_sum == closed)
}
