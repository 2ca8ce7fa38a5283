//! Cross-check suites that pit the independent computation routes against
//! each other: the shortest-path Apéry set, the brute-force sieve, the
//! closed-form families, the Bernoulli-polynomial sums, and the cleared
//! generating-function identities.

use num::bigint::BigInt;
use num::traits::One;

use crate::closed::{FamilyInstance, TwoVarInstance};
use crate::error::Error;
use crate::oracle;
use crate::rational::Rational;
use crate::semigroup::{
    apery_set, base_invariance_check, frobenius_number, genus, hacks_identity_check,
    master_identity_check_with, nonrep_set, standard_witness_family, sylvester_sums_bernoulli,
    sylvester_sums_direct, AperySet, GeneratorSet, NonRepSet,
};
use crate::series::TruncatedSeries;

/// Ceiling on the Frobenius number beyond which sieve-backed cross-checks
/// are skipped rather than attempted.
pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;

/// How a single property check came out. Skipped marks a check whose
/// inputs put it out of reach (sieve limit, memory cap, or values past
/// machine size), never a falsified property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

impl Outcome {
    pub fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skipped => "skipped",
        }
    }
}

/// One named property with its outcome and a human-readable account of
/// what was compared.
#[derive(Debug, Clone)]
pub struct CheckResult {
    name: &'static str,
    outcome: Outcome,
    detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckResult {
            name,
            outcome: Outcome::Pass,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckResult {
            name,
            outcome: Outcome::Fail,
            detail,
        }
    }

    fn skip(name: &'static str, detail: String) -> Self {
        CheckResult {
            name,
            outcome: Outcome::Skipped,
            detail,
        }
    }

    fn of(name: &'static str, ok: bool, detail: String) -> Self {
        if ok {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn outcome(&self) -> Outcome {
        self.outcome
    }

    pub fn detail(&self) -> &str {
        &self.detail
    }
}

/// The collected results of a verification run.
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    checks: Vec<CheckResult>,
}

impl VerifyReport {
    fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn checks(&self) -> &[CheckResult] {
        &self.checks
    }

    /// True when no check failed; skipped checks do not count against this.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks
            .iter()
            .filter(|c| c.outcome == Outcome::Fail)
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Highest Sylvester order compared across methods.
    pub max_m: usize,
    /// Truncation order for the generating-function identities.
    pub order: usize,
    /// Sieve cross-checks are skipped when the Frobenius number exceeds
    /// this bound.
    pub sieve_limit: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_m: 4,
            order: 8,
            sieve_limit: DEFAULT_SIEVE_LIMIT,
        }
    }
}

fn exp_m1(c: &BigInt, order: usize) -> TruncatedSeries {
    TruncatedSeries::exp_minus_one(&Rational::from_integer(c.clone()), order)
}

/// Product of the factors (e^{cz} - 1) for the given constants.
fn product(constants: &[&BigInt], order: usize) -> TruncatedSeries {
    let mut acc = exp_m1(constants[0], order);
    for c in &constants[1..] {
        acc = &acc * &exp_m1(c, order);
    }
    acc
}

fn series_eq(name: &'static str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> CheckResult {
    let order = lhs.order().min(rhs.order());
    for i in 0..=order {
        if lhs.coefficient(i) != rhs.coefficient(i) {
            return CheckResult::fail(
                name,
                format!(
                    "coefficient of z^{i} differs: {} vs {}",
                    lhs.coefficient(i),
                    rhs.coefficient(i)
                ),
            );
        }
    }
    CheckResult::pass(name, format!("sides agree through z^{order}"))
}

fn first_diff(lhs: &[u64], rhs: &[u64]) -> String {
    if lhs.len() != rhs.len() {
        return format!("{} vs {} values", lhs.len(), rhs.len());
    }
    for (i, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if l != r {
            return format!("entry {i} differs: {l} vs {r}");
        }
    }
    "identical".into()
}

/// Runs the full generic cross-check suite on a generator set, using the
/// smallest generator as the Apéry base. Trivial sets (containing 1) are
/// rejected as invalid input.
pub fn verify_generators(
    set: &GeneratorSet,
    options: &VerifyOptions,
) -> Result<VerifyReport, Error> {
    if set.is_trivial() {
        return Err(Error::Trivial);
    }
    let mut report = VerifyReport::default();
    let base = set.min();
    let apery = apery_set(set, base)?;
    let nr = nonrep_set(&apery);
    let frobenius = frobenius_number(&apery);
    let s0 = genus(&apery)?;
    generic_checks(&mut report, set, &apery, &nr, &frobenius, &s0, options)?;
    Ok(report)
}

fn generic_checks(
    report: &mut VerifyReport,
    set: &GeneratorSet,
    apery: &AperySet,
    nr: &NonRepSet,
    frobenius: &BigInt,
    s0: &BigInt,
    options: &VerifyOptions,
) -> Result<(), Error> {
    let base = apery.base();

    let nr_max = nr.max().map(BigInt::from);
    let nr_max_text = nr
        .max()
        .map_or_else(|| "none".to_string(), |v| v.to_string());
    report.push(CheckResult::of(
        "frobenius-vs-nonrep",
        nr_max.as_ref() == Some(frobenius),
        format!("Apéry route gives {frobenius}, reconstruction gives {nr_max_text}"),
    ));

    report.push(CheckResult::of(
        "genus-vs-nonrep",
        *s0 == BigInt::from(nr.len() as u64),
        format!(
            "Apéry routes give {s0}, reconstruction counts {} values",
            nr.len()
        ),
    ));

    let direct = sylvester_sums_direct(nr, options.max_m);
    let bernoulli = sylvester_sums_bernoulli(apery, options.max_m)?;
    report.push(CheckResult::of(
        "sylvester-direct-vs-bernoulli",
        direct.sums() == bernoulli.sums(),
        format!(
            "direct route gives {:?}, Bernoulli route gives {:?}",
            direct.sums(),
            bernoulli.sums()
        ),
    ));

    let witnesses = standard_witness_family(base, apery.max());
    let mut failing = Vec::new();
    for f in &witnesses {
        if !master_identity_check_with(apery, nr.values(), f) {
            failing.push(f.describe(base));
        }
    }
    report.push(CheckResult::of(
        "master-identity-witness-family",
        failing.is_empty(),
        if failing.is_empty() {
            format!("{} witness functions satisfy the identity", witnesses.len())
        } else {
            format!("failing witnesses: {}", failing.join(", "))
        },
    ));

    let order = options.order;
    let one = BigInt::one();
    let a_big = BigInt::from(base);
    let nr_egf = TruncatedSeries::egf_of_finite_set(nr.values(), order);
    let apery0_egf = TruncatedSeries::egf_of_finite_set(&apery.with_zero_sorted(), order);
    let lhs = &product(&[&a_big, &one], order) * &nr_egf;
    let rhs = &(&exp_m1(&one, order) * &apery0_egf) - &exp_m1(&a_big, order);
    report.push(series_eq("egf-nonrep-identity", &lhs, &rhs));

    {
        let gens = set.generators();
        let mut pairs = 0usize;
        let mut skipped = None;
        let mut failure = None;
        'outer: for (i, &b1) in gens.iter().enumerate() {
            for &b2 in &gens[i + 1..] {
                match base_invariance_check(set, b1, b2) {
                    Ok(true) => pairs += 1,
                    Ok(false) => {
                        failure = Some(format!("bases {b1} and {b2} disagree"));
                        break 'outer;
                    }
                    Err(Error::MemoryCap { .. }) => {
                        skipped = Some(format!("bases {b1} and {b2} exceed the memory cap"));
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        report.push(match (failure, skipped) {
            (Some(f), _) => CheckResult::fail("base-invariance", f),
            (None, Some(s)) => CheckResult::skip("base-invariance", s),
            (None, None) => {
                CheckResult::pass("base-invariance", format!("{pairs} base pairs agree"))
            }
        });
    }

    {
        let gens = set.generators();
        let mut pairs = 0usize;
        let mut failure = None;
        'outer: for (i, &x) in gens.iter().enumerate() {
            for &y in &gens[i + 1..] {
                if num::integer::gcd(x, y) != 1 {
                    continue;
                }
                if hacks_identity_check(x, y)? {
                    pairs += 1;
                } else {
                    failure = Some(format!("pair ({x}, {y}) fails the floor-sum identity"));
                    break 'outer;
                }
            }
        }
        report.push(match failure {
            Some(f) => CheckResult::fail("hacks-floor-sum", f),
            None if pairs == 0 => CheckResult::skip(
                "hacks-floor-sum",
                "no coprime generator pair to check".into(),
            ),
            None => CheckResult::pass("hacks-floor-sum", format!("{pairs} coprime pairs agree")),
        });
    }

    let limit = BigInt::from(options.sieve_limit);
    if *frobenius > limit {
        let detail = format!(
            "Frobenius number {frobenius} exceeds the sieve limit {}",
            options.sieve_limit
        );
        report.push(CheckResult::skip("sieve-nonrep", detail.clone()));
        report.push(CheckResult::skip("sieve-apery", detail));
    } else {
        match oracle::oracle_nr_auto(set) {
            Ok(sieve_nr) => report.push(CheckResult::of(
                "sieve-nonrep",
                sieve_nr.values() == nr.values(),
                if sieve_nr.values() == nr.values() {
                    format!("both routes give the same {} values", nr.len())
                } else {
                    first_diff(sieve_nr.values(), nr.values())
                },
            )),
            Err(Error::MemoryCap { .. } | Error::IncompleteSieve { .. } | Error::Overflow(_)) => {
                report.push(CheckResult::skip(
                    "sieve-nonrep",
                    "sieve exceeds the memory cap".into(),
                ));
            }
            Err(e) => return Err(e),
        }
        match oracle::oracle_apery(set, base) {
            Ok(sieve_apery) => report.push(CheckResult::of(
                "sieve-apery",
                sieve_apery.elements() == apery.elements(),
                if sieve_apery.elements() == apery.elements() {
                    format!(
                        "both routes give the same {} elements",
                        apery.elements().len()
                    )
                } else {
                    first_diff(sieve_apery.elements(), apery.elements())
                },
            )),
            Err(Error::MemoryCap { .. } | Error::IncompleteSieve { .. } | Error::Overflow(_)) => {
                report.push(CheckResult::skip(
                    "sieve-apery",
                    "sieve exceeds the memory cap".into(),
                ));
            }
            Err(e) => return Err(e),
        }
    }

    Ok(())
}

/// Runs the family-specific cross-checks plus the full generic suite on
/// the family's generator set.
pub fn verify_family(
    inst: &FamilyInstance,
    options: &VerifyOptions,
) -> Result<VerifyReport, Error> {
    let mut report = VerifyReport::default();
    let order_m = options.max_m.max(2);

    let conv = inst.sylvester_convolution(order_m)?;
    match inst.sylvester_bernoulli(order_m) {
        Ok(bern) => report.push(CheckResult::of(
            "family-bernoulli-vs-convolution",
            bern.sums() == conv.sums(),
            format!(
                "Bernoulli route gives {:?}, convolution route gives {:?}",
                bern.sums(),
                conv.sums()
            ),
        )),
        Err(Error::TooLarge(_) | Error::MemoryCap { .. }) => report.push(CheckResult::skip(
            "family-bernoulli-vs-convolution",
            "the Bernoulli route enumerates residues and a is past machine size".into(),
        )),
        Err(e) => return Err(e),
    }

    match inst {
        FamilyInstance::TwoVar(t) => {
            let rodseth = t.sylvester_rodseth(order_m)?;
            report.push(CheckResult::of(
                "family-rodseth-vs-convolution",
                rodseth.sums() == conv.sums(),
                format!(
                    "Rödseth route gives {:?}, convolution route gives {:?}",
                    rodseth.sums(),
                    conv.sums()
                ),
            ));
            let (s0, s1, s2) = t.classic_s012()?;
            let classic = [s0, s1, s2];
            report.push(CheckResult::of(
                "family-classic-closed-forms",
                classic.as_slice() == &conv.sums()[..3],
                format!(
                    "classic forms give {classic:?}, convolution route gives {:?}",
                    &conv.sums()[..3]
                ),
            ));
        }
        FamilyInstance::Arith(ar) => {
            let explicit = ar.explicit_s012()?;
            let explicit = [explicit.0, explicit.1, explicit.2];
            report.push(CheckResult::of(
                "family-explicit-polynomials",
                explicit.as_slice() == &conv.sums()[..3] && explicit[0] == ar.genus(),
                format!(
                    "explicit polynomials give {explicit:?}, convolution route gives {:?}, Grant's genus form gives {}",
                    &conv.sums()[..3],
                    ar.genus()
                ),
            ));
            if ar.s().is_one() {
                let two = TwoVarInstance::new(ar.a().clone(), ar.b())?;
                let two_conv = two.sylvester_convolution(order_m)?;
                report.push(CheckResult::of(
                    "family-degenerates-to-two-variable",
                    two.frobenius() == ar.frobenius()
                        && two.genus() == ar.genus()
                        && two_conv.sums() == conv.sums(),
                    format!("s = 1 instance against the pair ({}, {})", ar.a(), ar.b()),
                ));
            }
        }
        FamilyInstance::GenArith(g) => {
            match g.frobenius_genus() {
                Ok((l, s0)) => report.push(CheckResult::pass(
                    "family-frobenius-genus-dual-routes",
                    format!("both route pairs agree: L = {l}, S_0 = {s0}"),
                )),
                Err(Error::Inconsistency { context, detail }) => report.push(CheckResult::fail(
                    "family-frobenius-genus-dual-routes",
                    format!("{context}: {detail}"),
                )),
                Err(e) => return Err(e),
            }
            if let Some(plain) = g.arith_equivalent() {
                let plain_conv = plain.sylvester_convolution(order_m)?;
                let (l, s0) = g.frobenius_genus()?;
                report.push(CheckResult::of(
                    "family-degenerates-to-arithmetic",
                    l == plain.frobenius()
                        && s0 == plain.genus()
                        && plain_conv.sums() == conv.sums(),
                    format!(
                        "h = 1 instance against the arithmetic triple ({}, {}, {})",
                        g.a(),
                        g.d(),
                        g.s()
                    ),
                ));
            }
        }
    }

    match inst.apery() {
        Ok(closed_apery) => match inst.generator_set() {
            Ok(set) => {
                let graph = apery_set(&set, closed_apery.base())?;
                report.push(CheckResult::of(
                    "family-apery-vs-graph",
                    closed_apery.elements() == graph.elements(),
                    if closed_apery.elements() == graph.elements() {
                        format!(
                            "both routes give the same {} elements",
                            graph.elements().len()
                        )
                    } else {
                        first_diff(closed_apery.elements(), graph.elements())
                    },
                ));
                let nr = nonrep_set(&graph);
                let frobenius = frobenius_number(&graph);
                let s0 = genus(&graph)?;
                report.push(CheckResult::of(
                    "family-frobenius-vs-graph",
                    inst.frobenius() == frobenius,
                    format!(
                        "closed form gives {}, Apéry route gives {frobenius}",
                        inst.frobenius()
                    ),
                ));
                report.push(CheckResult::of(
                    "family-genus-vs-graph",
                    inst.genus()? == s0,
                    format!(
                        "closed form gives {}, Apéry route gives {s0}",
                        inst.genus()?
                    ),
                ));
                let direct = sylvester_sums_direct(&nr, order_m);
                report.push(CheckResult::of(
                    "family-sylvester-vs-direct",
                    conv.sums() == direct.sums(),
                    format!(
                        "convolution route gives {:?}, direct route gives {:?}",
                        conv.sums(),
                        direct.sums()
                    ),
                ));
                generic_checks(&mut report, &set, &graph, &nr, &frobenius, &s0, options)?;
            }
            Err(Error::TooLarge(_)) => report.push(CheckResult::skip(
                "family-apery-vs-graph",
                "generators are past machine size".into(),
            )),
            Err(e) => return Err(e),
        },
        Err(Error::TooLarge(_) | Error::MemoryCap { .. }) => report.push(CheckResult::skip(
            "family-apery-vs-graph",
            "the Apéry set is past machine size".into(),
        )),
        Err(e) => return Err(e),
    }

    for check in series_checks(inst, options.order)? {
        report.push(check);
    }

    Ok(report)
}

/// The cleared generating-function identities for a family instance,
/// compared coefficient by coefficient at the given truncation order.
/// Identities written with 1/(e^{cz} - 1) factors are multiplied through
/// by every such factor first, so both sides are entire series.
pub fn series_checks(inst: &FamilyInstance, order: usize) -> Result<Vec<CheckResult>, Error> {
    let mut checks = Vec::new();
    let one = BigInt::one();
    match inst {
        FamilyInstance::TwoVar(t) => {
            let a = t.a();
            let b = t.b();
            let ab = a * b;
            let sums = t.sylvester_convolution(order)?;
            let lhs =
                &product(&[a, b, &one], order) * &TruncatedSeries::from_power_sums(sums.sums());
            let rhs = &product(&[&ab, &one], order) - &product(&[a, b], order);
            checks.push(series_eq("egf-sylvester-identity", &lhs, &rhs));

            match t.apery() {
                Ok(apery) => {
                    let nr = nonrep_set(&apery);
                    let nr_egf = TruncatedSeries::egf_of_finite_set(nr.values(), order);
                    let apery0_egf =
                        TruncatedSeries::egf_of_finite_set(&apery.with_zero_sorted(), order);
                    let lhs = &product(&[a, &one], order) * &nr_egf;
                    let rhs = &(&exp_m1(&one, order) * &apery0_egf) - &exp_m1(a, order);
                    checks.push(series_eq("egf-nonrep-identity", &lhs, &rhs));
                }
                Err(Error::TooLarge(_) | Error::MemoryCap { .. }) => {
                    checks.push(CheckResult::skip(
                        "egf-nonrep-identity",
                        "the Apéry set is past machine size".into(),
                    ));
                }
                Err(e) => return Err(e),
            }
        }
        FamilyInstance::Arith(ar) => {
            let a = ar.a();
            let d = ar.d();
            let b = ar.b();
            let c = ar.big_c();
            let neg_d = -d.clone();
            let cd_a = (&c + d) * a;
            let cb = &c * &b;

            match ar.apery() {
                Ok(apery) => {
                    let apery0_egf =
                        TruncatedSeries::egf_of_finite_set(&apery.with_zero_sorted(), order);
                    let lhs = &apery0_egf * &product(&[d, &b, &neg_d], order);
                    let rhs = &product(&[&cd_a, &b, &neg_d], order) + &product(&[a, &cb, d], order);
                    checks.push(series_eq("egf-apery-identity", &lhs, &rhs));
                }
                Err(Error::TooLarge(_) | Error::MemoryCap { .. }) => {
                    checks.push(CheckResult::skip(
                        "egf-apery-identity",
                        "the Apéry set is past machine size".into(),
                    ));
                }
                Err(e) => return Err(e),
            }

            let sums = ar.sylvester_convolution(order)?;
            let lhs = &product(&[d, a, &neg_d, &b, &one], order)
                * &TruncatedSeries::from_power_sums(sums.sums());
            let rhs = &(&product(&[&cd_a, &neg_d, &b, &one], order)
                + &product(&[&cb, d, a, &one], order))
                - &product(&[d, a, &neg_d, &b], order);
            checks.push(series_eq("egf-sylvester-identity", &lhs, &rhs));
        }
        FamilyInstance::GenArith(g) => {
            let a = g.a();
            let h = g.h();
            let d = g.d();
            let top = g.top();
            let c = g.big_c();
            let neg_d = -d.clone();
            let hcd_a = (h * &c + d) * a;
            let ah = a * h;
            let c_top = &c * &top;

            match g.apery() {
                Ok(apery) => {
                    let apery0_egf =
                        TruncatedSeries::egf_of_finite_set(&apery.with_zero_sorted(), order);
                    let lhs = &apery0_egf * &product(&[d, &top, &neg_d], order);
                    let rhs = &product(&[&hcd_a, &top, &neg_d], order)
                        + &product(&[&ah, &c_top, d], order);
                    checks.push(series_eq("egf-apery-identity", &lhs, &rhs));
                }
                Err(Error::TooLarge(_) | Error::MemoryCap { .. }) => {
                    checks.push(CheckResult::skip(
                        "egf-apery-identity",
                        "the Apéry set is past machine size".into(),
                    ));
                }
                Err(e) => return Err(e),
            }

            let sums = g.sylvester_convolution(order)?;
            let lhs = &product(&[d, a, &top, &neg_d, &one], order)
                * &TruncatedSeries::from_power_sums(sums.sums());
            let rhs = &(&product(&[&hcd_a, &top, &neg_d, &one], order)
                + &product(&[&ah, &c_top, d, &one], order))
                - &product(&[d, a, &top, &neg_d], order);
            checks.push(series_eq("egf-sylvester-identity", &lhs, &rhs));
        }
    }
    Ok(checks)
}
