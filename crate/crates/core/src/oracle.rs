//! Brute-force ground truth: a dynamic-programming representability sieve,
//! plus the non-representable set, Apéry set, and power sums read off it.
//!
//! Everything here is deliberately independent of the closed forms and the
//! residue-graph machinery, so it can serve as the oracle they are tested
//! against. Completeness of a sieve is certified by the closing-window
//! argument: once min(A) consecutive integers are representable, every
//! larger integer is too (add copies of the smallest generator).

use num::bigint::BigInt;
use num::traits::ToPrimitive;

use crate::closed;
use crate::error::Error;
use crate::semigroup::{sylvester_sums_direct, AperySet, GeneratorSet, NonRepSet};

/// Default cap on table sizes, in entries.
pub const DEFAULT_MEMORY_CAP: u64 = 1 << 28;

/// Environment variable overriding the cap (a positive entry count).
pub const MEMORY_CAP_ENV: &str = "APERY_MEMORY_CAP";

/// The active memory cap: the override from the environment when present,
/// otherwise the default.
pub fn memory_cap() -> Result<u64, Error> {
    match std::env::var(MEMORY_CAP_ENV) {
        Ok(raw) => match raw.trim().parse::<u64>() {
            Ok(cap) if cap > 0 => Ok(cap),
            _ => Err(Error::InvalidParameter(format!(
                "{MEMORY_CAP_ENV} must be a positive integer, got {raw:?}"
            ))),
        },
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MEMORY_CAP),
        Err(std::env::VarError::NotUnicode(_)) => Err(Error::InvalidParameter(format!(
            "{MEMORY_CAP_ENV} is not valid unicode"
        ))),
    }
}

/// Exact representability for every integer from 0 through the bound.
#[derive(Debug, Clone)]
pub struct SieveTable {
    bound: u64,
    representable: Vec<bool>,
}

impl SieveTable {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn is_representable(&self, n: u64) -> bool {
        self.representable[n as usize]
    }

    /// All non-representable integers in the table, ascending. Only complete
    /// once a closing window has been observed.
    pub fn non_representable_up_to_bound(&self) -> Vec<u64> {
        self.representable
            .iter()
            .enumerate()
            .filter(|(_, &r)| !r)
            .map(|(n, _)| n as u64)
            .collect()
    }

    /// True when the top `window` entries are all representable.
    pub fn has_closing_window(&self, window: u64) -> bool {
        if window == 0 || (window as usize) > self.representable.len() {
            return false;
        }
        self.representable[self.representable.len() - window as usize..]
            .iter()
            .all(|&r| r)
    }
}

/// Builds the representability table up to the bound: an integer is
/// representable when it is 0 or some generator subtracted from it leaves a
/// representable integer.
pub fn sieve(set: &GeneratorSet, bound: u64) -> Result<SieveTable, Error> {
    sieve_with_cap(set, bound, memory_cap()?)
}

pub fn sieve_with_cap(set: &GeneratorSet, bound: u64, cap: u64) -> Result<SieveTable, Error> {
    let entries = bound.checked_add(1).ok_or(Error::Overflow("sieve bound"))?;
    if entries > cap {
        return Err(Error::MemoryCap {
            requested: entries,
            cap,
        });
    }
    let size = usize::try_from(entries).map_err(|_| Error::TooLarge("sieve table"))?;
    let gens: Vec<usize> = set
        .generators()
        .iter()
        .filter(|&&g| g <= bound)
        .map(|&g| g as usize)
        .collect();
    let mut representable = vec![false; size];
    representable[0] = true;
    for n in 1..size {
        for &g in &gens {
            if g <= n && representable[n - g] {
                representable[n] = true;
                break;
            }
        }
    }
    Ok(SieveTable {
        bound,
        representable,
    })
}

/// The complete non-representable set, certified by the closing window; the
/// caller supplies the bound and retries larger on failure.
pub fn oracle_nr(set: &GeneratorSet, safety_bound: u64) -> Result<NonRepSet, Error> {
    let table = sieve(set, safety_bound)?;
    let window = set.min();
    if !table.has_closing_window(window) {
        return Err(Error::IncompleteSieve {
            bound: safety_bound,
            window,
        });
    }
    Ok(NonRepSet::from_sorted(
        table.non_representable_up_to_bound(),
    ))
}

/// The complete non-representable set with an automatically chosen bound:
/// start from a family closed-form Frobenius number plus margin when the
/// generators match a family, otherwise from the quadratic guess
/// (max A)²/min A, and double until the closing window appears. The memory
/// cap bounds the doubling.
pub fn oracle_nr_auto(set: &GeneratorSet) -> Result<NonRepSet, Error> {
    let window = set.min();
    let mut bound = initial_bound(set);
    loop {
        let table = sieve(set, bound)?;
        if table.has_closing_window(window) {
            return Ok(NonRepSet::from_sorted(
                table.non_representable_up_to_bound(),
            ));
        }
        bound = bound.checked_mul(2).ok_or(Error::Overflow("sieve bound"))?;
    }
}

/// The Apéry set read off the sieve by scanning for the least representable
/// integer in each nonzero residue class mod base. Doubles the bound until
/// the sieve is certified complete and every residue class has been seen.
pub fn oracle_apery(set: &GeneratorSet, base: u64) -> Result<AperySet, Error> {
    if base == 1 {
        return Err(Error::Trivial);
    }
    if !set.contains(base) {
        return Err(Error::BaseNotGenerator(base));
    }
    let window = set.min();
    let mut bound = initial_bound(set).max(base);
    loop {
        let table = sieve(set, bound)?;
        if table.has_closing_window(window) {
            if let Some(elements) = scan_apery(&table, base) {
                return AperySet::from_elements(base, elements);
            }
        }
        bound = bound.checked_mul(2).ok_or(Error::Overflow("sieve bound"))?;
    }
}

fn scan_apery(table: &SieveTable, base: u64) -> Option<Vec<u64>> {
    let mut elements = vec![0u64; (base - 1) as usize];
    let mut found = 0usize;
    for n in 1..=table.bound() {
        let j = (n % base) as usize;
        if j != 0 && elements[j - 1] == 0 && table.is_representable(n) {
            elements[j - 1] = n;
            found += 1;
            if found == elements.len() {
                return Some(elements);
            }
        }
    }
    None
}

/// Power sums S_0 ... S_M over the oracle non-representable set.
pub fn oracle_power_sums(set: &GeneratorSet, max_m: usize) -> Result<Vec<BigInt>, Error> {
    let nr = oracle_nr_auto(set)?;
    Ok(sylvester_sums_direct(&nr, max_m).sums().to_vec())
}

fn initial_bound(set: &GeneratorSet) -> u64 {
    if set.is_trivial() {
        return 2;
    }
    if let Some(family) = closed::detect_family(set) {
        if let Some(l) = family.frobenius().to_u64() {
            if let Some(b) = l.checked_add(2 * set.min()) {
                return b;
            }
        }
    }
    let quadratic =
        (set.max() as u128 * set.max() as u128 / set.min() as u128).min(u64::MAX as u128) as u64;
    quadratic.max(2 * set.max())
}
