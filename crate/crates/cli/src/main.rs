//! JSON command-line interface over the numerical semigroup library.
//!
//! Every invocation prints exactly one JSON document to standard output on
//! success; diagnostics go to standard error. Exit codes: 0 success, 1 a
//! verification or internal consistency failure, 2 invalid input, 3 a
//! resource cap was exceeded.

use std::process::ExitCode;

use apery::closed::{
    detect_family, ArithInstance, FamilyInstance, GenArithInstance, TwoVarInstance,
};
use apery::oracle::oracle_nr_auto;
use apery::semigroup::{
    apery_set, frobenius_number, genus, sylvester_sums_bernoulli, sylvester_sums_direct,
    GeneratorSet,
};
use apery::verify::{
    series_checks, verify_family, verify_generators, CheckResult, VerifyOptions,
    DEFAULT_SIEVE_LIMIT,
};
use apery::{BigInt, Error};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "apery",
    version,
    about = "Exact Apery sets, Frobenius numbers, genus, and Sylvester power sums of numerical semigroups",
    after_help = "Set APERY_MEMORY_CAP to override the default enumeration cap of 2^28 entries.\nAll integers in the JSON output are decimal strings."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apery set of the semigroup with respect to a base generator.
    Apery {
        /// Comma-separated coprime generators, e.g. 5,8,11.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        /// Base generator; defaults to the smallest one.
        #[arg(long)]
        base: Option<u64>,
    },
    /// Largest non-representable integer.
    Frobenius {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
    },
    /// Number of non-representable positive integers.
    Genus {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
    },
    /// Power sums S_0..S_M over the non-representable set.
    Sylvester {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        /// Highest power M.
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        /// direct sums the sieve output; bernoulli works from the Apery set;
        /// auto picks a family closed form when the generators match one.
        #[arg(long, value_enum, default_value_t = SylvesterArg::Auto)]
        method: SylvesterArg,
    },
    /// Closed-form results for a structured generator family.
    ClosedForm {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Family parameters, e.g. a=5,d=3,s=2 (two: a,b; genarith adds h).
        #[arg(long)]
        params: String,
        /// Highest power M.
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        /// explicit is limited to S_0..S_2 (two-generator and arithmetic
        /// families only); the other methods cover any M.
        #[arg(long, value_enum, default_value_t = ClosedMethodArg::Convolution)]
        method: ClosedMethodArg,
    },
    /// Full cross-check suite over one instance; exits 1 on any failure.
    #[command(group(ArgGroup::new("target").required(true).args(["gens", "family"])))]
    Verify {
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<u64>>,
        #[arg(long, value_enum, requires = "params")]
        family: Option<FamilyArg>,
        #[arg(long, requires = "family")]
        params: Option<String>,
        /// Highest Sylvester order compared across methods.
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        /// Truncation order for the generating-function identities.
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Sieve cross-checks are skipped beyond this Frobenius bound.
        #[arg(long, default_value_t = DEFAULT_SIEVE_LIMIT)]
        sieve_limit: u64,
    },
    /// Generating-function identity checks for a family instance.
    SeriesCheck {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        params: String,
        /// Series truncation order.
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SylvesterArg {
    Direct,
    Bernoulli,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Two,
    Arith,
    Genarith,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosedMethodArg {
    Bernoulli,
    Convolution,
    Explicit,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&outcome.document)
                    .expect("output document serializes")
            );
            if outcome.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

struct CommandOutcome {
    document: Value,
    /// False when a verification-style command found a failing check.
    verified: bool,
}

fn success(document: Value) -> Result<CommandOutcome, Error> {
    Ok(CommandOutcome {
        document,
        verified: true,
    })
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::EmptyGenerators
        | Error::ZeroGenerator
        | Error::NotCoprime(_)
        | Error::Trivial
        | Error::BaseNotGenerator(_)
        | Error::InvalidParameter(_) => 2,
        Error::MemoryCap { .. }
        | Error::IncompleteSieve { .. }
        | Error::TooLarge(_)
        | Error::Overflow(_) => 3,
        Error::ZeroToNegativePower | Error::NonInteger { .. } | Error::Inconsistency { .. } => 1,
    }
}

fn run(command: Command) -> Result<CommandOutcome, Error> {
    match command {
        Command::Apery { gens, base } => run_apery(&gens, base),
        Command::Frobenius { gens } => run_frobenius(&gens),
        Command::Genus { gens } => run_genus(&gens),
        Command::Sylvester {
            gens,
            max_m,
            method,
        } => run_sylvester(&gens, max_m, method),
        Command::ClosedForm {
            family,
            params,
            max_m,
            method,
        } => run_closed_form(family, &params, max_m, method),
        Command::Verify {
            gens,
            family,
            params,
            max_m,
            order,
            sieve_limit,
        } => run_verify(gens, family, params, max_m, order, sieve_limit),
        Command::SeriesCheck {
            family,
            params,
            order,
        } => run_series_check(family, &params, order),
    }
}

/// Validates a generator list, rejecting trivial semigroups (1 among the
/// generators) since every positive integer is then representable.
fn validated_set(gens: &[u64]) -> Result<GeneratorSet, Error> {
    let set = GeneratorSet::new(gens)?;
    if set.is_trivial() {
        return Err(Error::Trivial);
    }
    Ok(set)
}

fn document(instance: Value, results: Value) -> Value {
    json!({
        "schema_version": "1",
        "instance": instance,
        "results": results,
    })
}

fn int_string(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

fn u64_strings(values: &[u64]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|n| Value::String(n.to_string()))
            .collect(),
    )
}

fn bigint_strings(values: &[BigInt]) -> Value {
    Value::Array(values.iter().map(int_string).collect())
}

fn gens_instance(set: &GeneratorSet) -> Value {
    json!({ "generators": u64_strings(set.generators()) })
}

fn family_instance(inst: &FamilyInstance) -> Value {
    match inst {
        FamilyInstance::TwoVar(i) => json!({
            "family": "two",
            "params": { "a": i.a().to_string(), "b": i.b().to_string() },
        }),
        FamilyInstance::Arith(i) => json!({
            "family": "arith",
            "params": {
                "a": i.a().to_string(),
                "d": i.d().to_string(),
                "s": i.s().to_string(),
            },
        }),
        FamilyInstance::GenArith(i) => json!({
            "family": "genarith",
            "params": {
                "a": i.a().to_string(),
                "h": i.h().to_string(),
                "d": i.d().to_string(),
                "s": i.s().to_string(),
            },
        }),
    }
}

fn checks_value(checks: &[CheckResult]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name(),
                    "outcome": c.outcome().label(),
                    "detail": c.detail(),
                })
            })
            .collect(),
    )
}

fn run_apery(gens: &[u64], base: Option<u64>) -> Result<CommandOutcome, Error> {
    let set = validated_set(gens)?;
    let base = base.unwrap_or_else(|| set.min());
    let apery = apery_set(&set, base)?;
    let mut instance = gens_instance(&set);
    instance["base"] = Value::String(base.to_string());
    success(document(
        instance,
        json!({ "apery": u64_strings(&apery.sorted()) }),
    ))
}

fn run_frobenius(gens: &[u64]) -> Result<CommandOutcome, Error> {
    let set = validated_set(gens)?;
    let apery = apery_set(&set, set.min())?;
    success(document(
        gens_instance(&set),
        json!({ "frobenius": int_string(&frobenius_number(&apery)) }),
    ))
}

fn run_genus(gens: &[u64]) -> Result<CommandOutcome, Error> {
    let set = validated_set(gens)?;
    let apery = apery_set(&set, set.min())?;
    success(document(
        gens_instance(&set),
        json!({ "genus": int_string(&genus(&apery)?) }),
    ))
}

/// True for errors that mean the route cannot run at this scale, as
/// opposed to invalid input or a falsified identity.
fn is_resource_error(err: &Error) -> bool {
    matches!(
        err,
        Error::MemoryCap { .. }
            | Error::IncompleteSieve { .. }
            | Error::TooLarge(_)
            | Error::Overflow(_)
    )
}

fn cross_check_failure(primary: &str, other: &str) -> Error {
    Error::Inconsistency {
        context: "sylvester method cross-check",
        detail: format!("{primary} and {other} disagree"),
    }
}

fn run_sylvester(
    gens: &[u64],
    max_m: usize,
    method: SylvesterArg,
) -> Result<CommandOutcome, Error> {
    let set = validated_set(gens)?;
    let (sums, label, cross) = match method {
        SylvesterArg::Direct => {
            let nr = oracle_nr_auto(&set)?;
            let direct = sylvester_sums_direct(&nr, max_m);
            let apery = apery_set(&set, set.min())?;
            let check = sylvester_sums_bernoulli(&apery, max_m)?;
            if direct.sums() != check.sums() {
                return Err(cross_check_failure("direct", check.method().label()));
            }
            (
                direct.sums().to_vec(),
                direct.method().label(),
                check.method().label(),
            )
        }
        SylvesterArg::Bernoulli => {
            let apery = apery_set(&set, set.min())?;
            let report = sylvester_sums_bernoulli(&apery, max_m)?;
            let cross = match oracle_nr_auto(&set) {
                Ok(nr) => {
                    let direct = sylvester_sums_direct(&nr, max_m);
                    if direct.sums() != report.sums() {
                        return Err(cross_check_failure(report.method().label(), "direct"));
                    }
                    "direct"
                }
                Err(err) if is_resource_error(&err) => "skipped",
                Err(err) => return Err(err),
            };
            (report.sums().to_vec(), report.method().label(), cross)
        }
        SylvesterArg::Auto => match detect_family(&set) {
            Some(inst) => {
                let report = inst.sylvester_convolution(max_m)?;
                let cross = match inst.sylvester_bernoulli(max_m) {
                    Ok(check) => {
                        if check.sums() != report.sums() {
                            return Err(cross_check_failure(
                                report.method().label(),
                                check.method().label(),
                            ));
                        }
                        check.method().label()
                    }
                    Err(err) if is_resource_error(&err) => "skipped",
                    Err(err) => return Err(err),
                };
                (report.sums().to_vec(), report.method().label(), cross)
            }
            None => {
                let apery = apery_set(&set, set.min())?;
                let report = sylvester_sums_bernoulli(&apery, max_m)?;
                let nr = oracle_nr_auto(&set)?;
                let direct = sylvester_sums_direct(&nr, max_m);
                if direct.sums() != report.sums() {
                    return Err(cross_check_failure(report.method().label(), "direct"));
                }
                (report.sums().to_vec(), report.method().label(), "direct")
            }
        },
    };
    success(document(
        gens_instance(&set),
        json!({
            "sylvester": bigint_strings(&sums),
            "method": label,
            "cross_check": cross,
        }),
    ))
}

fn parse_params(raw: &str) -> Result<Vec<(String, BigInt)>, Error> {
    let mut out: Vec<(String, BigInt)> = Vec::new();
    for piece in raw.split(',') {
        let piece = piece.trim();
        let (key, value) = piece
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got '{piece}'")))?;
        let key = key.trim();
        let value: BigInt = value.trim().parse().map_err(|_| {
            Error::InvalidParameter(format!(
                "value of '{key}' is not an integer: '{}'",
                value.trim()
            ))
        })?;
        if out.iter().any(|(k, _)| k == key) {
            return Err(Error::InvalidParameter(format!(
                "duplicate parameter '{key}'"
            )));
        }
        out.push((key.to_string(), value));
    }
    Ok(out)
}

fn take_param(params: &mut Vec<(String, BigInt)>, key: &str) -> Result<BigInt, Error> {
    let idx = params
        .iter()
        .position(|(k, _)| k == key)
        .ok_or_else(|| Error::InvalidParameter(format!("missing parameter '{key}'")))?;
    Ok(params.remove(idx).1)
}

fn build_family(family: FamilyArg, raw: &str) -> Result<FamilyInstance, Error> {
    let mut params = parse_params(raw)?;
    let inst = match family {
        FamilyArg::Two => {
            let a = take_param(&mut params, "a")?;
            let b = take_param(&mut params, "b")?;
            FamilyInstance::TwoVar(TwoVarInstance::new(a, b)?)
        }
        FamilyArg::Arith => {
            let a = take_param(&mut params, "a")?;
            let d = take_param(&mut params, "d")?;
            let s = take_param(&mut params, "s")?;
            FamilyInstance::Arith(ArithInstance::new(a, d, s)?)
        }
        FamilyArg::Genarith => {
            let a = take_param(&mut params, "a")?;
            let h = take_param(&mut params, "h")?;
            let d = take_param(&mut params, "d")?;
            let s = take_param(&mut params, "s")?;
            FamilyInstance::GenArith(GenArithInstance::new(a, h, d, s)?)
        }
    };
    if let Some((key, _)) = params.first() {
        return Err(Error::InvalidParameter(format!(
            "unexpected parameter '{key}' for this family"
        )));
    }
    Ok(inst)
}

fn explicit_sums(inst: &FamilyInstance, max_m: usize) -> Result<Vec<BigInt>, Error> {
    if max_m > 2 {
        return Err(Error::InvalidParameter(
            "explicit closed forms cover S_0..S_2 only; pass --max-m 2 or lower".into(),
        ));
    }
    let (s0, s1, s2) = match inst {
        FamilyInstance::TwoVar(i) => i.classic_s012()?,
        FamilyInstance::Arith(i) => i.explicit_s012()?,
        FamilyInstance::GenArith(_) => return Err(Error::InvalidParameter(
            "no explicit polynomial forms for the genarith family; use bernoulli or convolution"
                .into(),
        )),
    };
    Ok([s0, s1, s2][..=max_m].to_vec())
}

fn run_closed_form(
    family: FamilyArg,
    raw_params: &str,
    max_m: usize,
    method: ClosedMethodArg,
) -> Result<CommandOutcome, Error> {
    let inst = build_family(family, raw_params)?;
    let (sums, label) = match method {
        ClosedMethodArg::Bernoulli => {
            let report = inst.sylvester_bernoulli(max_m)?;
            (report.sums().to_vec(), report.method().label())
        }
        ClosedMethodArg::Convolution => {
            let report = inst.sylvester_convolution(max_m)?;
            (report.sums().to_vec(), report.method().label())
        }
        ClosedMethodArg::Explicit => (explicit_sums(&inst, max_m)?, "explicit"),
    };
    let cross = if matches!(method, ClosedMethodArg::Convolution) {
        match inst.sylvester_bernoulli(max_m) {
            Ok(check) => {
                if check.sums() != &sums[..] {
                    return Err(cross_check_failure(label, check.method().label()));
                }
                check.method().label()
            }
            Err(err) if is_resource_error(&err) => "skipped",
            Err(err) => return Err(err),
        }
    } else {
        let check = inst.sylvester_convolution(max_m)?;
        if check.sums() != &sums[..] {
            return Err(cross_check_failure(label, check.method().label()));
        }
        check.method().label()
    };
    success(document(
        family_instance(&inst),
        json!({
            "frobenius": int_string(&inst.frobenius()),
            "genus": int_string(&inst.genus()?),
            "sylvester": bigint_strings(&sums),
            "method": label,
            "cross_check": cross,
        }),
    ))
}

fn run_verify(
    gens: Option<Vec<u64>>,
    family: Option<FamilyArg>,
    params: Option<String>,
    max_m: usize,
    order: usize,
    sieve_limit: u64,
) -> Result<CommandOutcome, Error> {
    let options = VerifyOptions {
        max_m,
        order,
        sieve_limit,
    };
    let (instance, report) = match (gens, family) {
        (Some(g), None) => {
            let set = validated_set(&g)?;
            let report = verify_generators(&set, &options)?;
            (gens_instance(&set), report)
        }
        (None, Some(f)) => {
            let raw = params.expect("clap enforces --params with --family");
            let inst = build_family(f, &raw)?;
            let report = verify_family(&inst, &options)?;
            (family_instance(&inst), report)
        }
        _ => {
            return Err(Error::InvalidParameter(
                "provide exactly one of --gens or --family".into(),
            ))
        }
    };
    let all_passed = report.all_passed();
    if !all_passed {
        for failure in report.failures() {
            eprintln!("failed check {}: {}", failure.name(), failure.detail());
        }
    }
    Ok(CommandOutcome {
        document: document(
            instance,
            json!({
                "checks": checks_value(report.checks()),
                "all_passed": all_passed,
            }),
        ),
        verified: all_passed,
    })
}

fn run_series_check(
    family: FamilyArg,
    raw_params: &str,
    order: usize,
) -> Result<CommandOutcome, Error> {
    let inst = build_family(family, raw_params)?;
    let checks = series_checks(&inst, order)?;
    let all_passed = checks
        .iter()
        .all(|c| c.outcome() != apery::verify::Outcome::Fail);
    if !all_passed {
        for check in &checks {
            if check.outcome() == apery::verify::Outcome::Fail {
                eprintln!("failed check {}: {}", check.name(), check.detail());
            }
        }
    }
    Ok(CommandOutcome {
        document: document(
            family_instance(&inst),
            json!({
                "checks": checks_value(&checks),
                "all_passed": all_passed,
            }),
        ),
        verified: all_passed,
    })
}
