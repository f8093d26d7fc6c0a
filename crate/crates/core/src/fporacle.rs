//! Brute-force point counts over small prime fields, used as an independent
//! check on Gröbner dimensions.
//!
//! Variables are assigned in the ideal's ambient order (level-major); a
//! generator is evaluated as soon as all of its variables are fixed, so
//! dead branches are cut early. The count is still exhaustive.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::jets::Ideal;

pub const DEFAULT_EVALUATION_CAP: u64 = 100_000_000;
pub const DEFAULT_PRIMES: [u64; 2] = [5, 7];
pub const FALLBACK_PRIME: u64 = 11;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpCountRecord {
    pub prime: u64,
    pub num_vars: usize,
    pub count: u64,
    /// `round(log_p(count))`, or −1 for an empty zero set.
    pub log_slope: i64,
    /// Whether this prime's slope matched the other primes counted with it.
    pub agreed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleDimension {
    Agreed(i64),
    /// Rounded slopes per prime did not match.
    Disagreement(Vec<(u64, i64)>),
}

/// One generator reduced modulo `p`: (coefficient, [(variable index, exponent)]).
#[derive(Debug, Clone)]
struct ModPoly {
    terms: Vec<(u64, Vec<(usize, u32)>)>,
    last_var: usize,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn reduce_mod_p(ideal: &Ideal, p: u64) -> Result<Vec<ModPoly>> {
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::BadPrime { p, reason: "not a prime below 2^32".into() });
    }
    let pb = BigInt::from(p);
    let index = |v| ideal.ambient().binary_search(&v).expect("generator variable in ambient");
    let mut out = Vec::new();
    for g in ideal.generators() {
        let mut den = BigInt::one();
        for (_, c) in g.terms() {
            if c.denom().is_multiple_of(&pb) {
                return Err(Error::BadPrime { p, reason: "divides a coefficient denominator".into() });
            }
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = g.terms().map(|(_, c)| c.numer() * (&den / c.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
        if content.is_multiple_of(&pb) {
            return Err(Error::BadPrime { p, reason: "divides the content of a generator".into() });
        }
        let mut terms = Vec::new();
        let mut last_var = 0;
        for ((m, _), c) in g.terms().zip(ints) {
            let r = c.mod_floor(&pb).to_u64().expect("residue fits");
            if r == 0 {
                continue;
            }
            let vars: Vec<(usize, u32)> = m.factors().iter().map(|&(v, e)| (index(v), e)).collect();
            last_var = last_var.max(vars.iter().map(|&(i, _)| i).max().unwrap_or(0));
            terms.push((r, vars));
        }
        out.push(ModPoly { terms, last_var });
    }
    Ok(out)
}

fn pow_mod(mut b: u64, mut e: u32, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl ModPoly {
    fn eval(&self, point: &[u64], p: u64) -> u64 {
        self.terms.iter().fold(0, |acc, (c, vars)| {
            let t = vars.iter().fold(*c, |t, &(i, e)| t * pow_mod(point[i], e, p) % p);
            (acc + t) % p
        })
    }
}

struct Enumerator<'a> {
    p: u64,
    nvars: usize,
    /// generators to check right after variable k is assigned
    checks: Vec<Vec<&'a ModPoly>>,
    budget: &'a AtomicU64,
}

impl Enumerator<'_> {
    fn count_from(&self, point: &mut Vec<u64>) -> std::result::Result<u64, ()> {
        let k = point.len();
        if k == self.nvars {
            return Ok(1);
        }
        let mut total = 0;
        for a in 0..self.p {
            if self.budget.fetch_sub(1, Ordering::Relaxed) == 0 {
                self.budget.store(0, Ordering::Relaxed);
                return Err(());
            }
            point.push(a);
            if self.checks[k].iter().all(|g| g.eval(point, self.p) == 0) {
                total += self.count_from(point)?;
            }
            point.pop();
        }
        Ok(total)
    }
}

/// Exact number of common zeros over `F_p`, with the default evaluation cap.
pub fn count_points(ideal: &Ideal, p: u64) -> Result<FpCountRecord> {
    count_points_with(ideal, p, DEFAULT_EVALUATION_CAP, 1)
}

/// Counts with `partitions` workers, each fixing a block of values of the
/// first variable. The total does not depend on `partitions`.
pub fn count_points_with(ideal: &Ideal, p: u64, cap: u64, partitions: usize) -> Result<FpCountRecord> {
    let gens = reduce_mod_p(ideal, p)?;
    let nvars = ideal.num_vars();
    let record = |count: u64| FpCountRecord {
        prime: p,
        num_vars: nvars,
        count,
        log_slope: log_slope(count, p),
        agreed: false,
    };
    // a generator that vanished mod p is dropped, a nonzero constant kills everything
    let gens: Vec<ModPoly> = gens.into_iter().filter(|g| !g.terms.is_empty()).collect();
    if gens.iter().any(|g| g.terms.iter().all(|(_, v)| v.is_empty())) {
        return Ok(record(0));
    }
    if nvars == 0 {
        return Ok(record(1));
    }
    let mut checks: Vec<Vec<&ModPoly>> = vec![Vec::new(); nvars];
    for g in &gens {
        checks[g.last_var].push(g);
    }
    let budget = AtomicU64::new(cap);
    let en = Enumerator { p, nvars, checks, budget: &budget };
    let parts = partitions.clamp(1, p as usize) as u64;
    let blocks: Vec<(u64, u64)> = (0..parts).map(|k| (k * p / parts, (k + 1) * p / parts)).collect();
    let counts: Vec<std::result::Result<u64, ()>> = blocks
        .par_iter()
        .map(|&(lo, hi)| {
            let mut total = 0;
            for a in lo..hi {
                if en.budget.fetch_sub(1, Ordering::Relaxed) == 0 {
                    en.budget.store(0, Ordering::Relaxed);
                    return Err(());
                }
                let mut point = vec![a];
                if en.checks[0].iter().all(|g| g.eval(&point, p) == 0) {
                    total += en.count_from(&mut point)?;
                }
            }
            Ok(total)
        })
        .collect();
    let mut total = 0;
    for c in counts {
        total += c.map_err(|_| Error::CountCap { cap })?;
    }
    Ok(record(total))
}

fn log_slope(count: u64, p: u64) -> i64 {
    if count == 0 {
        -1
    } else {
        ((count as f64).ln() / (p as f64).ln()).round() as i64
    }
}

/// Common rounded slope over all records; an empty zero set is dimension −1.
pub fn dim_from_counts(records: &[FpCountRecord]) -> OracleDimension {
    let slopes: Vec<(u64, i64)> = records.iter().map(|r| (r.prime, r.log_slope)).collect();
    match slopes.first() {
        Some(&(_, s)) if slopes.iter().all(|&(_, t)| t == s) => OracleDimension::Agreed(s),
        _ => OracleDimension::Disagreement(slopes),
    }
}

/// Counts over the default primes; on disagreement a third prime is added
/// and a two-out-of-three majority accepted.
pub fn oracle_dimension(ideal: &Ideal, cap: u64) -> Result<(OracleDimension, Vec<FpCountRecord>)> {
    let mut records = DEFAULT_PRIMES
        .iter()
        .map(|&p| count_points_with(ideal, p, cap, rayon::current_num_threads()))
        .collect::<Result<Vec<_>>>()?;
    let mut verdict = dim_from_counts(&records);
    if let OracleDimension::Disagreement(_) = verdict {
        records.push(count_points_with(ideal, FALLBACK_PRIME, cap, rayon::current_num_threads())?);
        let slopes: Vec<i64> = records.iter().map(|r| r.log_slope).collect();
        if let Some(&s) = slopes.iter().find(|&&s| slopes.iter().filter(|&&t| t == s).count() >= 2) {
            verdict = OracleDimension::Agreed(s);
        } else {
            verdict = dim_from_counts(&records);
        }
    }
    let consensus = match verdict {
        OracleDimension::Agreed(s) => Some(s),
        OracleDimension::Disagreement(_) => None,
    };
    for r in &mut records {
        r.agreed = consensus == Some(r.log_slope);
    }
    Ok((verdict, records))
}
