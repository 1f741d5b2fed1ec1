//! Brute-force enumeration of fixed points and two-cycles.
//!
//! Nothing here uses the closed forms in [`crate::counts`]. Each candidate is
//! checked with a plain modular power whose exponent is reduced modulo
//! `λ(p^e)`. The search range is cut into fixed-size chunks that are checked
//! in parallel and concatenated in order, so output does not depend on the
//! number of workers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{powmod, ModulusContext, PolySpec};
use crate::counts::{FixedClassKey, TwoCycleClassKey};
use crate::error::{Error, Result};

/// Default cap on congruence evaluations per enumeration.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const CHUNK: u64 = 1 << 14;

/// Which integers are searched.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RangeSpec {
    /// `{1, …, p^e (p-1)}` for odd `p`, `{1, …, 2^e}` for `p = 2`.
    #[default]
    Full,
    /// `{1, …, p^e}`.
    Reduced,
}

impl RangeSpec {
    /// Largest integer in the range.
    pub fn upper(&self, ctx: &ModulusContext) -> u64 {
        match self {
            RangeSpec::Full if ctx.p() != 2 => ctx.modulus() * (ctx.p() - 1),
            _ => ctx.modulus(),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            RangeSpec::Full => "full",
            RangeSpec::Reduced => "reduced",
        }
    }
}

impl fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(RangeSpec::Full),
            "reduced" => Ok(RangeSpec::Reduced),
            _ => Err(format!("unknown range {s:?} (expected full or reduced)")),
        }
    }
}

/// One solution. For fixed points `y` is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub x: u64,
    pub y: Option<u64>,
    /// `x mod (p-1)`; absent for `p = 2`.
    pub x0: Option<u64>,
    /// `x mod p^e`.
    pub x1: u64,
}

impl SolutionRecord {
    fn new(x: u64, y: Option<u64>, ctx: &ModulusContext) -> Self {
        let p = ctx.p();
        Self {
            x,
            y,
            x0: (p != 2).then(|| x % (p - 1)),
            x1: x % ctx.modulus(),
        }
    }
}

/// Resource settings for an enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub budget: u64,
    /// Size of a dedicated thread pool; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: None,
        }
    }
}

impl OracleOptions {
    /// Run `op` on the configured pool.
    pub fn install<T: Send>(&self, op: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            Some(k) => match rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
            {
                Ok(pool) => pool.install(op),
                Err(_) => op(),
            },
            None => op(),
        }
    }
}

/// `x^{g(x)} mod p^e` for a unit `x`.
fn power_map(x: u64, g: &PolySpec, ctx: &ModulusContext) -> u64 {
    powmod(x, g.eval_mod(x, ctx.lambda()), ctx.modulus())
}

/// Evaluations needed to enumerate `range`: one per candidate `x`, plus the
/// `y` candidates scanned for two-cycles.
pub fn evaluations_needed(ctx: &ModulusContext, range: RangeSpec, two_cycles: bool) -> u64 {
    let xs = range.upper(ctx);
    if two_cycles {
        let per_x = range.upper(ctx) / ctx.modulus();
        xs.saturating_mul(1 + per_x)
    } else {
        xs
    }
}

fn check_budget(needed: u64, opts: &OracleOptions) -> Result<()> {
    if needed > opts.budget {
        Err(Error::BudgetExceeded {
            needed,
            budget: opts.budget,
        })
    } else {
        Ok(())
    }
}

/// Map each chunk of `1..=upper` through `f` in parallel and concatenate in
/// ascending order.
fn chunked<F>(upper: u64, f: F) -> Vec<SolutionRecord>
where
    F: Fn(u64, u64) -> Vec<SolutionRecord> + Sync,
{
    let chunks = upper.div_ceil(CHUNK);
    let parts: Vec<Vec<SolutionRecord>> = (0..chunks)
        .into_par_iter()
        .map(|c| f(c * CHUNK + 1, ((c + 1) * CHUNK).min(upper)))
        .collect();
    parts.concat()
}

/// Re-check one record against its defining congruence(s).
pub fn verify_record(record: &SolutionRecord, ctx: &ModulusContext, g: &PolySpec) -> bool {
    let m = ctx.modulus();
    let unit = |v: u64| ctx.is_unit(v);
    match record.y {
        None => unit(record.x) && power_map(record.x, g, ctx) == record.x % m,
        Some(y) => {
            unit(record.x)
                && unit(y)
                && power_map(record.x, g, ctx) == y % m
                && power_map(y, g, ctx) == record.x % m
        }
    }
}

fn self_check(records: &[SolutionRecord], ctx: &ModulusContext, g: &PolySpec) -> Result<()> {
    if records.par_iter().all(|r| verify_record(r, ctx, g)) {
        Ok(())
    } else {
        Err(Error::Domain(
            "oracle self-check failed: a record does not satisfy its congruence",
        ))
    }
}

/// Every `x` in `range` with `p ∤ x` and `x^{g(x)} ≡ x (mod p^e)`, ascending.
pub fn enumerate_fixed_points(
    ctx: &ModulusContext,
    g: &PolySpec,
    range: RangeSpec,
    opts: &OracleOptions,
) -> Result<Vec<SolutionRecord>> {
    check_budget(evaluations_needed(ctx, range, false), opts)?;
    let m = ctx.modulus();
    let records = opts.install(|| {
        chunked(range.upper(ctx), |lo, hi| {
            (lo..=hi)
                .filter(|&x| ctx.is_unit(x) && power_map(x, g, ctx) == x % m)
                .map(|x| SolutionRecord::new(x, None, ctx))
                .collect()
        })
    });
    self_check(&records, ctx, g)?;
    Ok(records)
}

/// Every ordered pair `(x, y)` in `range²` with `x^{g(x)} ≡ y` and
/// `y^{g(y)} ≡ x (mod p^e)`, sorted by `x` then `y`.
///
/// `y` is determined modulo `p^e` by `x`, so only the integers in the range
/// with that residue are tried.
pub fn enumerate_two_cycles(
    ctx: &ModulusContext,
    g: &PolySpec,
    range: RangeSpec,
    opts: &OracleOptions,
) -> Result<Vec<SolutionRecord>> {
    check_budget(evaluations_needed(ctx, range, true), opts)?;
    let m = ctx.modulus();
    let upper = range.upper(ctx);
    let records = opts.install(|| {
        chunked(upper, |lo, hi| {
            let mut out = Vec::new();
            for x in (lo..=hi).filter(|&x| ctx.is_unit(x)) {
                let residue = power_map(x, g, ctx);
                let mut y = if residue == 0 { m } else { residue };
                while y <= upper {
                    if power_map(y, g, ctx) == x % m {
                        out.push(SolutionRecord::new(x, Some(y), ctx));
                    }
                    y += m;
                }
            }
            out
        })
    });
    self_check(&records, ctx, g)?;
    Ok(records)
}

/// Fixed-point counts keyed by `x mod q`.
pub fn classify_fixed(
    records: &[SolutionRecord],
    ctx: &ModulusContext,
) -> BTreeMap<FixedClassKey, u64> {
    let mut out = BTreeMap::new();
    for r in records {
        *out.entry(FixedClassKey(r.x % ctx.q())).or_default() += 1;
    }
    out
}

/// Two-cycle counts keyed by `(x mod q, y mod q)`. Records without `y` are
/// skipped.
pub fn classify_two_cycles(
    records: &[SolutionRecord],
    ctx: &ModulusContext,
) -> BTreeMap<TwoCycleClassKey, u64> {
    let q = ctx.q();
    let mut out = BTreeMap::new();
    for r in records {
        if let Some(y) = r.y {
            *out.entry(TwoCycleClassKey {
                a: r.x % q,
                b: y % q,
            })
            .or_default() += 1;
        }
    }
    out
}

/// Records whose `x` satisfies `g(x) ≢ 1 (mod p)`.
pub fn nonsingular_fixed_count(
    records: &[SolutionRecord],
    ctx: &ModulusContext,
    g: &PolySpec,
) -> u64 {
    let p = ctx.p();
    records
        .iter()
        .filter(|r| g.eval_mod(r.x, p) != 1 % p)
        .count() as u64
}
