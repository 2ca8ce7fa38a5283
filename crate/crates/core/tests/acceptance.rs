//! Acceptance gate: twelve exact-value and property criteria, each printing
//! a single PASS or FAIL line (visible with --nocapture or on failure).
//! Every comparison is exact; there are no tolerances anywhere.

use std::time::{Duration, Instant};

use apery::bernoulli::{bernoulli_number, bernoulli_polynomial};
use apery::closed::{ArithInstance, FamilyInstance, GenArithInstance, TwoVarInstance};
use apery::oracle::{oracle_nr_auto, oracle_power_sums};
use apery::rational::binomial;
use apery::semigroup::{
    apery_set, base_invariance_check, hacks_identity_check, master_identity_check_with,
    standard_witness_family, sylvester_sums_bernoulli, sylvester_sums_direct, GeneratorSet,
};
use apery::verify::{series_checks, Outcome};
use apery::{BigInt, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(criterion: &str, passed: bool, detail: &str) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!("{verdict}: {criterion}: {detail}");
    assert!(passed, "{criterion}: {detail}");
}

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

fn rat_powu(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::from_integer(BigInt::from(1));
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Fixed 200-instance randomized corpus: 2 to 5 generators, smallest
/// generator at most 40, overall gcd 1. The seed is pinned so every
/// criterion that uses the corpus sees the same instances.
fn corpus() -> Vec<GeneratorSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00c0_ffee);
    let mut out = Vec::new();
    while out.len() < 200 {
        let k = rng.random_range(2..=5usize);
        let mut gens: Vec<u64> = (0..k).map(|_| rng.random_range(2..=60u64)).collect();
        gens[0] = rng.random_range(2..=40u64);
        gens.sort_unstable();
        gens.dedup();
        if gens.len() < 2 || gens[0] > 40 {
            continue;
        }
        if gens.iter().fold(0u64, |acc, &g| gcd(acc, g)) != 1 {
            continue;
        }
        out.push(GeneratorSet::new(&gens).unwrap());
    }
    out
}

fn coprime_pairs_to_30() -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for a in 2u64..=30 {
        for b in (a + 1)..=30 {
            if gcd(a, b) == 1 {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

#[test]
fn criterion_01_two_generator_frobenius_and_genus_match_sieve() {
    let start = Instant::now();
    let pairs = coprime_pairs_to_30();
    let mut bad = Vec::new();
    for &(a, b) in &pairs {
        let inst = TwoVarInstance::new(a, b).unwrap();
        let nr = oracle_nr_auto(&GeneratorSet::new(&[a, b]).unwrap()).unwrap();
        let l_oracle = nr
            .max()
            .map(BigInt::from)
            .unwrap_or_else(|| BigInt::from(-1));
        let formula_l = BigInt::from(a) * BigInt::from(b) - BigInt::from(a) - BigInt::from(b);
        let formula_genus = BigInt::from((a - 1) * (b - 1) / 2);
        if inst.frobenius() != l_oracle
            || inst.frobenius() != formula_l
            || inst.genus() != BigInt::from(nr.len())
            || inst.genus() != formula_genus
        {
            bad.push((a, b));
        }
    }
    let fixtures = [
        (2u64, 3u64, 1i64, 1u64),
        (3, 5, 7, 4),
        (4, 7, 17, 9),
        (5, 6, 19, 10),
    ];
    for (a, b, l, g) in fixtures {
        let inst = TwoVarInstance::new(a, b).unwrap();
        if inst.frobenius() != BigInt::from(l) || inst.genus() != BigInt::from(g) {
            bad.push((a, b));
        }
    }
    let elapsed = start.elapsed();
    let passed = bad.is_empty() && elapsed < Duration::from_secs(5);
    report(
        "criterion 1 (two-generator L and genus vs sieve)",
        passed,
        &format!(
            "{} coprime pairs with 2 <= a < b <= 30 checked in {elapsed:.2?}; mismatches: {bad:?}",
            pairs.len()
        ),
    );
}

#[test]
fn criterion_02_two_generator_s1_s2_closed_forms_match_sieve() {
    let start = Instant::now();
    let pairs = coprime_pairs_to_30();
    let mut bad = Vec::new();
    for &(a, b) in &pairs {
        let inst = TwoVarInstance::new(a, b).unwrap();
        let set = GeneratorSet::new(&[a, b]).unwrap();
        let oracle = oracle_power_sums(&set, 2).unwrap();
        let (s0, s1, s2) = inst.classic_s012().unwrap();
        if s0 != oracle[0] || s1 != oracle[1] || s2 != oracle[2] {
            bad.push((a, b));
        }
    }
    // Spot values derived from the sieve by hand.
    let inst = TwoVarInstance::new(4u64, 7u64).unwrap();
    let (_, s1, s2) = inst.classic_s012().unwrap();
    if s1 != BigInt::from(66) || s2 != BigInt::from(714) {
        bad.push((4, 7));
    }
    let inst = TwoVarInstance::new(5u64, 6u64).unwrap();
    let (_, s1, s2) = inst.classic_s012().unwrap();
    if s1 != BigInt::from(80) || s2 != BigInt::from(950) {
        bad.push((5, 6));
    }
    let elapsed = start.elapsed();
    let passed = bad.is_empty() && elapsed < Duration::from_secs(10);
    report(
        "criterion 2 (two-generator S1/S2 closed forms vs sieve)",
        passed,
        &format!(
            "{} coprime pairs with 2 <= a < b <= 30 checked in {elapsed:.2?}; mismatches: {bad:?}",
            pairs.len()
        ),
    );
}

#[test]
fn criterion_03_master_identity_on_randomized_corpus() {
    let start = Instant::now();
    let instances = corpus();
    let mut failures = Vec::new();
    let mut witness_count = 0usize;
    for set in &instances {
        let apery = apery_set(set, set.min()).unwrap();
        let nr = oracle_nr_auto(set).unwrap();
        let witnesses = standard_witness_family(apery.base(), apery.max());
        witness_count = witnesses.len();
        for f in &witnesses {
            if !master_identity_check_with(&apery, nr.values(), f) {
                failures.push((set.generators().to_vec(), f.describe(apery.base())));
            }
        }
    }
    let elapsed = start.elapsed();
    let passed = instances.len() == 200 && failures.is_empty() && elapsed < Duration::from_secs(30);
    report(
        "criterion 3 (master summation identity on 200-instance corpus)",
        passed,
        &format!(
            "{} instances x {witness_count} witness functions in {elapsed:.2?}; failures: {failures:?}",
            instances.len()
        ),
    );
}

#[test]
fn criterion_04_apery_bernoulli_sums_match_direct_sums() {
    let start = Instant::now();
    let instances = corpus();
    let mut failures = Vec::new();
    for set in &instances {
        let apery = apery_set(set, set.min()).unwrap();
        let nr = oracle_nr_auto(set).unwrap();
        let direct = sylvester_sums_direct(&nr, 6);
        let bernoulli = sylvester_sums_bernoulli(&apery, 6).unwrap();
        if direct.sums() != bernoulli.sums() {
            failures.push(set.generators().to_vec());
        }
    }
    let elapsed = start.elapsed();
    let passed = instances.len() == 200 && failures.is_empty();
    report(
        "criterion 4 (Apery-set Bernoulli sums vs direct sums, m <= 6)",
        passed,
        &format!(
            "{} instances checked in {elapsed:.2?}; failures: {failures:?}",
            instances.len()
        ),
    );
}

#[test]
fn criterion_05_arithmetic_five_route_agreement() {
    let start = Instant::now();
    let mut params: Vec<(u64, u64, u64)> = vec![(5, 3, 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a11_5eed);
    while params.len() < 50 {
        let a = rng.random_range(3..=40u64);
        let d = rng.random_range(1..=10u64);
        let s = rng.random_range(1..a);
        if gcd(a, d) != 1 || params.contains(&(a, d, s)) {
            continue;
        }
        params.push((a, d, s));
    }
    let mut failures = Vec::new();
    for &(a, d, s) in &params {
        let inst = ArithInstance::new(a, d, s).unwrap();
        let set = inst.generator_set().unwrap();
        let apery = apery_set(&set, set.min()).unwrap();
        let nr = oracle_nr_auto(&set).unwrap();
        let direct = sylvester_sums_direct(&nr, 4);
        let generic = sylvester_sums_bernoulli(&apery, 4).unwrap();
        let family_bern = inst.sylvester_bernoulli(4).unwrap();
        let family_conv = inst.sylvester_convolution(4).unwrap();
        let (s0, s1, s2) = inst.explicit_s012().unwrap();
        if direct.sums() != generic.sums()
            || direct.sums() != family_bern.sums()
            || direct.sums() != family_conv.sums()
            || s0 != direct.sums()[0]
            || s1 != direct.sums()[1]
            || s2 != direct.sums()[2]
        {
            failures.push((a, d, s));
        }
    }
    let worked = ArithInstance::new(5u64, 3u64, 2u64)
        .unwrap()
        .explicit_s012()
        .unwrap();
    let worked_ok = worked == (BigInt::from(10), BigInt::from(75), BigInt::from(825));
    let elapsed = start.elapsed();
    let passed = failures.is_empty() && worked_ok && params.len() == 50;
    report(
        "criterion 5 (five-way Sylvester agreement on arithmetic instances)",
        passed,
        &format!(
            "50 instances with a <= 40 in {elapsed:.2?}; (5,3,2) -> (10,75,825): {worked_ok}; failures: {failures:?}"
        ),
    );
}

#[test]
fn criterion_06_roberts_and_grant_closed_forms_vs_oracle() {
    let start = Instant::now();
    let mut count = 0usize;
    let mut failures = Vec::new();
    for a in 2u64..=30 {
        for d in 1u64..=10 {
            if gcd(a, d) != 1 {
                continue;
            }
            for s in 1..a {
                let inst = ArithInstance::new(a, d, s).unwrap();
                let set = inst.generator_set().unwrap();
                let nr = oracle_nr_auto(&set).unwrap();
                let l_oracle = nr
                    .max()
                    .map(BigInt::from)
                    .unwrap_or_else(|| BigInt::from(-1));
                if inst.frobenius() != l_oracle || inst.genus() != BigInt::from(nr.len()) {
                    failures.push((a, d, s));
                }
                count += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let passed = failures.is_empty() && elapsed < Duration::from_secs(60);
    report(
        "criterion 6 (Roberts' L and Grant's genus vs oracle)",
        passed,
        &format!(
            "{count} arithmetic instances (a <= 30, d <= 10, s < a) in {elapsed:.2?}; failures: {failures:?}"
        ),
    );
}

#[test]
fn criterion_07_generalized_arithmetic_vs_oracle_and_h1_slice() {
    let start = Instant::now();
    let mut count = 0usize;
    let mut failures = Vec::new();
    for a in 2u64..=20 {
        for h in 1u64..=4 {
            for d in 1u64..=7 {
                if gcd(a, d) != 1 {
                    continue;
                }
                for s in 1..a {
                    let inst = GenArithInstance::new(a, h, d, s).unwrap();
                    let set = inst.generator_set().unwrap();
                    let nr = oracle_nr_auto(&set).unwrap();
                    let oracle_sums = oracle_power_sums(&set, 5).unwrap();
                    let l_oracle = nr
                        .max()
                        .map(BigInt::from)
                        .unwrap_or_else(|| BigInt::from(-1));
                    let (frob, genus_value) = inst.frobenius_genus().unwrap();
                    let bern = inst.sylvester_bernoulli(5).unwrap();
                    let conv = inst.sylvester_convolution(5).unwrap();
                    if frob != l_oracle
                        || genus_value != BigInt::from(nr.len())
                        || bern.sums() != &oracle_sums[..]
                        || conv.sums() != &oracle_sums[..]
                    {
                        failures.push((a, h, d, s));
                    }
                    count += 1;
                }
            }
        }
    }
    let mut h1_failures = Vec::new();
    for a in 2u64..=20 {
        for d in 1u64..=7 {
            if gcd(a, d) != 1 {
                continue;
            }
            for s in 1..a {
                let gen = GenArithInstance::new(a, 1u64, d, s).unwrap();
                let arith = ArithInstance::new(a, d, s).unwrap();
                let (frob, genus_value) = gen.frobenius_genus().unwrap();
                let same = frob == arith.frobenius()
                    && genus_value == arith.genus()
                    && gen.apery().unwrap().elements() == arith.apery().unwrap().elements()
                    && gen.sylvester_bernoulli(5).unwrap().sums()
                        == arith.sylvester_bernoulli(5).unwrap().sums()
                    && gen.sylvester_convolution(5).unwrap().sums()
                        == arith.sylvester_convolution(5).unwrap().sums();
                if !same {
                    h1_failures.push((a, d, s));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let passed = failures.is_empty() && h1_failures.is_empty();
    report(
        "criterion 7 (generalized arithmetic closed forms vs oracle; h=1 slice)",
        passed,
        &format!(
            "{count} instances (a <= 20, h <= 4, d <= 7, s < a) in {elapsed:.2?}; oracle failures: {failures:?}; h=1 slice mismatches: {h1_failures:?}"
        ),
    );
}

#[test]
fn criterion_08_generating_function_identities_to_order_8() {
    let start = Instant::now();
    let mut instances: Vec<FamilyInstance> = Vec::new();
    for (a, b) in [
        (2u64, 3u64),
        (3, 5),
        (4, 7),
        (5, 6),
        (7, 9),
        (8, 15),
        (11, 13),
    ] {
        instances.push(FamilyInstance::TwoVar(TwoVarInstance::new(a, b).unwrap()));
    }
    for (a, d, s) in [
        (5u64, 3u64, 2u64),
        (7, 1, 3),
        (11, 4, 3),
        (6, 5, 4),
        (9, 2, 8),
        (4, 7, 3),
        (10, 9, 5),
    ] {
        instances.push(FamilyInstance::Arith(ArithInstance::new(a, d, s).unwrap()));
    }
    for (a, h, d, s) in [
        (5u64, 2u64, 3u64, 2u64),
        (7, 3, 2, 3),
        (4, 3, 5, 2),
        (8, 3, 3, 5),
        (3, 2, 1, 1),
        (9, 4, 5, 6),
    ] {
        instances.push(FamilyInstance::GenArith(
            GenArithInstance::new(a, h, d, s).unwrap(),
        ));
    }
    let mut failures = Vec::new();
    for inst in &instances {
        for check in series_checks(inst, 8).unwrap() {
            if check.outcome() != Outcome::Pass {
                failures.push(format!(
                    "{} on {}: {}",
                    check.name(),
                    inst.label(),
                    check.detail()
                ));
            }
        }
    }
    let elapsed = start.elapsed();
    let passed = instances.len() == 20 && failures.is_empty();
    report(
        "criterion 8 (egf identities in cleared form to order 8)",
        passed,
        &format!(
            "{} instances across the three families in {elapsed:.2?}; failures: {failures:?}",
            instances.len()
        ),
    );
}

#[test]
fn criterion_09_base_invariance_on_corpus() {
    let start = Instant::now();
    let instances = corpus();
    let mut pair_count = 0usize;
    let mut failures = Vec::new();
    for set in &instances {
        let list = set.generators();
        for i in 0..list.len() {
            for j in (i + 1)..list.len() {
                pair_count += 1;
                if !base_invariance_check(set, list[i], list[j]).unwrap() {
                    failures.push((set.generators().to_vec(), list[i], list[j]));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let passed = instances.len() == 200 && failures.is_empty();
    report(
        "criterion 9 (base invariance for every generator pair)",
        passed,
        &format!(
            "{pair_count} base pairs across 200 instances in {elapsed:.2?}; failures: {failures:?}"
        ),
    );
}

#[test]
fn criterion_10_hacks_floor_sum_identity() {
    let start = Instant::now();
    let mut count = 0usize;
    let mut failures = Vec::new();
    for a in 2u64..=50 {
        for b in 2u64..=50 {
            if gcd(a, b) != 1 {
                continue;
            }
            if !hacks_identity_check(a, b).unwrap() {
                failures.push((a, b));
            }
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    let passed = failures.is_empty();
    report(
        "criterion 10 (Hacks' floor-sum identity)",
        passed,
        &format!(
            "{count} coprime pairs with 2 <= a, b <= 50 in {elapsed:.2?}; failures: {failures:?}"
        ),
    );
}

#[test]
fn criterion_11_bernoulli_suite() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();

    // Recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 for m = 1..=40.
    for m in 1usize..=40 {
        let mut acc = Rational::from_integer(BigInt::from(0));
        for j in 0..=m {
            acc += Rational::from_integer(binomial(m as u64 + 1, j as u64)) * bernoulli_number(j);
        }
        if acc != Rational::from_integer(BigInt::from(0)) {
            failures.push(format!("recurrence failed at m={m}"));
        }
    }

    // Difference formula B_m(x+1) - B_m(x) = m x^{m-1} for m = 1..=20.
    let sample_points = [
        Rational::from_integer(BigInt::from(0)),
        Rational::from_integer(BigInt::from(1)),
        Rational::from_integer(BigInt::from(-2)),
        Rational::new(BigInt::from(1), BigInt::from(2)),
        Rational::new(BigInt::from(-3), BigInt::from(7)),
        Rational::new(BigInt::from(5), BigInt::from(3)),
    ];
    for m in 1usize..=20 {
        for x in &sample_points {
            let shifted = x + Rational::from_integer(BigInt::from(1));
            let lhs = bernoulli_polynomial(m, &shifted) - bernoulli_polynomial(m, x);
            let rhs = Rational::from_integer(BigInt::from(m)) * rat_powu(x, m - 1);
            if lhs != rhs {
                failures.push(format!("difference formula failed at m={m}, x={x}"));
            }
        }
    }

    // Multiplication formula n^{m-1} sum_{k=0}^{n-1} B_m(x + k/n) = B_m(nx)
    // for m = 0..=12 and n = 2, 3, 4.
    for m in 0usize..=12 {
        for n in 2u64..=4 {
            for x in &sample_points {
                let mut acc = Rational::from_integer(BigInt::from(0));
                for k in 0..n {
                    let arg = x + Rational::new(BigInt::from(k), BigInt::from(n));
                    acc += bernoulli_polynomial(m, &arg);
                }
                let n_rat = Rational::from_integer(BigInt::from(n));
                let lhs = rat_powu(&n_rat, m) / &n_rat * acc;
                let scaled = Rational::from_integer(BigInt::from(n)) * x;
                let rhs = bernoulli_polynomial(m, &scaled);
                if lhs != rhs {
                    failures.push(format!(
                        "multiplication formula failed at m={m}, n={n}, x={x}"
                    ));
                }
            }
        }
    }

    let elapsed = start.elapsed();
    let passed = failures.is_empty();
    report(
        "criterion 11 (Bernoulli recurrence, difference, multiplication formulas)",
        passed,
        &format!("recurrence to m=40, difference to m=20, multiplication to m=12 in {elapsed:.2?}; failures: {failures:?}"),
    );
}

#[test]
fn criterion_12_convolution_performance_contract() {
    let a = 100_003u64;
    let inst = ArithInstance::new(a, 2u64, 3u64).unwrap();

    let conv_start = Instant::now();
    let conv = inst.sylvester_convolution(10).unwrap();
    let conv_elapsed = conv_start.elapsed();

    let bern_start = Instant::now();
    let bern = inst.sylvester_bernoulli(10).unwrap();
    let bern_elapsed = bern_start.elapsed();

    let agree = conv.sums() == bern.sums();
    let passed = agree && conv_elapsed < Duration::from_secs(1);
    report(
        "criterion 12 (convolution performance contract)",
        passed,
        &format!(
            "a=100003, d=2, s=3, M=10: convolution {conv_elapsed:.2?} (bound 1s), generator-sweep Bernoulli form {bern_elapsed:.2?} (no bound), results agree: {agree}"
        ),
    );
}
