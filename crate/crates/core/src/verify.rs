//! Formula versus oracle comparisons, identity checks and the restricted-range
//! ratio experiment.
//!
//! A mismatch is an ordinary outcome recorded in the report, not an error.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, mulmod, powmod, self_power, ModulusContext, PolySpec};
use crate::counts::{self, lifting, Kind, Regime};
use crate::error::Result;
use crate::oracle::{self, OracleOptions, RangeSpec};
use crate::padic::{interpolated_selfpower, one_unit_part, pexp, plog, teichmuller};

/// One class in a report. `class` is the key's display form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub class: String,
    pub formula: u64,
    pub oracle: u64,
}

/// Outcome of comparing the closed form with enumeration at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub kind: Kind,
    pub p: u64,
    pub e: u32,
    pub n: u32,
    pub regime: Option<Regime>,
    pub formula_total: Option<u64>,
    pub oracle_total: Option<u64>,
    pub per_class: Vec<ClassCount>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub elapsed_ms: f64,
    pub error: Option<String>,
}

impl CountReport {
    fn failed(kind: Kind, point: GridPoint, error: String, elapsed_ms: f64) -> Self {
        Self {
            kind,
            p: point.p,
            e: point.e,
            n: point.n,
            regime: None,
            formula_total: None,
            oracle_total: None,
            per_class: Vec::new(),
            matched: false,
            elapsed_ms,
            error: Some(error),
        }
    }

    /// The same report with `elapsed_ms` zeroed, for reproducible output.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0.0;
        self
    }

    /// The flat row used for CSV output.
    pub fn row(&self) -> ReportRow {
        ReportRow {
            kind: self.kind,
            p: self.p,
            e: self.e,
            n: self.n,
            formula_total: self.formula_total,
            oracle_total: self.oracle_total,
            matched: self.matched,
            elapsed_ms: self.elapsed_ms,
        }
    }

    /// One flat row per class, for CSV output.
    pub fn class_rows(&self) -> Vec<ClassRow> {
        self.per_class
            .iter()
            .map(|c| ClassRow {
                kind: self.kind,
                p: self.p,
                e: self.e,
                n: self.n,
                class: c.class.clone(),
                formula: c.formula,
                oracle: c.oracle,
            })
            .collect()
    }
}

/// `kind,p,e,n,formula_total,oracle_total,match,elapsed_ms`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub kind: Kind,
    pub p: u64,
    pub e: u32,
    pub n: u32,
    pub formula_total: Option<u64>,
    pub oracle_total: Option<u64>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub elapsed_ms: f64,
}

/// `kind,p,e,n,class,formula,oracle`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub kind: Kind,
    pub p: u64,
    pub e: u32,
    pub n: u32,
    pub class: String,
    pub formula: u64,
    pub oracle: u64,
}

/// A point `(p, e, n)` of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridPoint {
    pub p: u64,
    pub e: u32,
    pub n: u32,
}

impl GridPoint {
    pub fn new(p: u64, e: u32, n: u32) -> Self {
        Self { p, e, n }
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, e={}, n={})", self.p, self.e, self.n)
    }
}

/// All points with `p` prime, ordered by `p`, then `e`, then `n`.
pub fn grid(p_max: u64, e_max: u32, n_max: u32) -> Vec<GridPoint> {
    let mut out = Vec::new();
    for p in (2..=p_max).filter(|&p| is_prime(p)) {
        for e in 1..=e_max {
            for n in 1..=n_max {
                out.push(GridPoint { p, e, n });
            }
        }
    }
    out
}

fn merge_classes<K: Ord + ToString>(
    formula: &BTreeMap<K, u64>,
    oracle: &BTreeMap<K, u64>,
) -> Vec<ClassCount> {
    let keys: BTreeSet<&K> = formula.keys().chain(oracle.keys()).collect();
    keys.into_iter()
        .map(|k| ClassCount {
            class: k.to_string(),
            formula: formula.get(k).copied().unwrap_or(0),
            oracle: oracle.get(k).copied().unwrap_or(0),
        })
        .collect()
}

fn assemble<K: Ord + ToString>(
    kind: Kind,
    ctx: &ModulusContext,
    n: u32,
    formula: counts::CountBreakdown<K>,
    oracle_classes: BTreeMap<K, u64>,
    start: Instant,
) -> CountReport {
    let oracle_total = oracle_classes.values().sum();
    let per_class = merge_classes(&formula.per_class, &oracle_classes);
    let matched = formula.total == oracle_total && per_class.iter().all(|c| c.formula == c.oracle);
    CountReport {
        kind,
        p: ctx.p(),
        e: ctx.e(),
        n,
        regime: Some(formula.regime),
        formula_total: Some(formula.total),
        oracle_total: Some(oracle_total),
        per_class,
        matched,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        error: None,
    }
}

/// Compare [`counts::fp_count_total`] with enumeration, class by class.
pub fn verify_fixed(ctx: &ModulusContext, n: u32, opts: &OracleOptions) -> Result<CountReport> {
    let start = Instant::now();
    let formula = counts::fp_count_total(ctx, n)?;
    let records = oracle::enumerate_fixed_points(ctx, &PolySpec::power(n), RangeSpec::Full, opts)?;
    let classes = oracle::classify_fixed(&records, ctx);
    Ok(assemble(Kind::Fixed, ctx, n, formula, classes, start))
}

/// Compare [`counts::tc_count_total`] with enumeration, class by class.
pub fn verify_two_cycles(
    ctx: &ModulusContext,
    n: u32,
    opts: &OracleOptions,
) -> Result<CountReport> {
    let start = Instant::now();
    let formula = counts::tc_count_total(ctx, n)?;
    let records = oracle::enumerate_two_cycles(ctx, &PolySpec::power(n), RangeSpec::Full, opts)?;
    let classes = oracle::classify_two_cycles(&records, ctx);
    Ok(assemble(Kind::TwoCycle, ctx, n, formula, classes, start))
}

/// [`verify_fixed`] or [`verify_two_cycles`].
pub fn verify(
    kind: Kind,
    ctx: &ModulusContext,
    n: u32,
    opts: &OracleOptions,
) -> Result<CountReport> {
    match kind {
        Kind::Fixed => verify_fixed(ctx, n, opts),
        Kind::TwoCycle => verify_two_cycles(ctx, n, opts),
    }
}

fn verify_point(kind: Kind, point: GridPoint, opts: &OracleOptions) -> CountReport {
    let start = Instant::now();
    let outcome =
        ModulusContext::new(point.p, point.e).and_then(|ctx| verify(kind, &ctx, point.n, opts));
    outcome.unwrap_or_else(|err| {
        CountReport::failed(
            kind,
            point,
            err.to_string(),
            start.elapsed().as_secs_f64() * 1e3,
        )
    })
}

/// Verify every point for every kind. Points run concurrently; `on_report`
/// sees each report as it finishes, and the returned list is ordered by grid
/// index, then by the order of `kinds`. Failures are recorded in the report.
pub fn sweep(
    points: &[GridPoint],
    kinds: &[Kind],
    opts: &OracleOptions,
    on_report: Option<&(dyn Fn(&CountReport) + Sync)>,
) -> Vec<CountReport> {
    let jobs: Vec<(GridPoint, Kind)> = points
        .iter()
        .flat_map(|&pt| kinds.iter().map(move |&k| (pt, k)))
        .collect();
    opts.install(|| {
        jobs.par_iter()
            .map(|&(point, kind)| {
                let report = verify_point(kind, point, opts);
                if let Some(callback) = on_report {
                    callback(&report);
                }
                report
            })
            .collect()
    })
}

/// One evaluated identity: two expressions that must be equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub p: u64,
    pub e: Option<u32>,
    pub n: u32,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(name: &str, p: u64, e: Option<u32>, n: u32, lhs: u64, rhs: u64) -> Self {
        Self {
            name: name.to_string(),
            p,
            e,
            n,
            lhs,
            rhs,
            holds: lhs == rhs,
        }
    }
}

/// Double-sum against divisor-sum forms for every odd prime `p ≤ p_max` and
/// `n ≤ n_max`. The totals are compared at `e ∈ {1, 2, 3}`.
pub fn divisor_identities(p_max: u64, n_max: u32) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for p in (3..=p_max).filter(|&p| is_prime(p)) {
        for n in 1..=n_max {
            let g = PolySpec::power(n);
            out.push(IdentityCheck::new(
                "fixed-mod-p",
                p,
                None,
                n,
                counts::fp_count_mod_p(p, &g)?,
                counts::fp_count_mod_p_divisor_form(p, &g)?,
            ));
            out.push(IdentityCheck::new(
                "two-cycle-mod-p",
                p,
                None,
                n,
                counts::tc_count_mod_p(p, &g)?,
                counts::tc_count_mod_p_divisor_form(p, &g)?,
            ));
            for e in 1..=3 {
                let ctx = ModulusContext::new(p, e)?;
                out.push(IdentityCheck::new(
                    "fixed-total",
                    p,
                    Some(e),
                    n,
                    counts::fp_count_total(&ctx, n)?.total,
                    counts::fp_count_total_divisor_form(&ctx, n)?,
                ));
                out.push(IdentityCheck::new(
                    "two-cycle-total",
                    p,
                    Some(e),
                    n,
                    counts::tc_count_total(&ctx, n)?.total,
                    counts::tc_count_total_divisor_form(&ctx, n)?,
                ));
            }
        }
    }
    Ok(out)
}

/// Where two branches of a piecewise formula meet, they must give the same
/// value. Each check evaluates both branches explicitly at one `e`.
pub fn boundary_checks(p_max: u64, n_max: u32) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    let mut push = |name: &str, p: u64, e: u32, n: u32, lhs: u64, rhs: u64| {
        out.push(IdentityCheck::new(name, p, Some(e), n, lhs, rhs));
    };
    for p in (3..=p_max).filter(|&p| is_prime(p)) {
        for n in 1..=n_max {
            let ell = lifting::p_valuation(n, p);
            if ell == 0 {
                continue;
            }
            for e in [ell + 1, ell + 2] {
                let (a, b) = (lifting::plateau(e), lifting::quadratic(e, ell));
                push("fixed-odd-p-dividing-n", p, e, n, p.pow(a), p.pow(b));
            }
            for e in [2 * ell + 1, 2 * ell + 2, 2 * ell + 3] {
                let (a, b) = (lifting::plateau(e), lifting::cubic(e, ell));
                push(
                    "two-cycle-odd-p-dividing-n-cubic",
                    p,
                    e,
                    n,
                    p.pow(a),
                    p.pow(b),
                );
            }
        }
    }
    if p_max >= 2 {
        for n in 1..=n_max {
            let ell = lifting::p_valuation(n, 2);
            let pow2 = |k: u32| 1u64 << k;
            // Classes of the quadratic kind: ξ = ±1 for n even, ξ = 1 for n odd.
            for e in [ell + 3, ell + 4] {
                let (a, b) = (lifting::two_adic_plateau(e), lifting::quadratic(e, ell));
                push("fixed-p2-class", 2, e, n, pow2(a), pow2(b));
            }
            if ell == 0 {
                push(
                    "fixed-p2-class-minus-one",
                    2,
                    3,
                    n,
                    pow2(lifting::two_adic_plateau(3)),
                    2,
                );
                push("fixed-p2-total", 2, 3, n, 2 * pow2(1), pow2(3 / 2) + 2);
                for e in [4, 5] {
                    let (a, b) = (lifting::two_adic_plateau(e), lifting::cubic(e, 0));
                    push("two-cycle-p2-class-minus-one", 2, e, n, pow2(a), pow2(b));
                    let small = 2 * pow2(e - 2);
                    let large = pow2(lifting::quadratic(e, 1)) + pow2(lifting::cubic(e, 0));
                    push("two-cycle-p2-total", 2, e, n, small, large);
                }
            } else {
                for e in [ell + 3, ell + 4] {
                    let small = 2 * pow2(e - 2);
                    let large = 2 * pow2(lifting::quadratic(e, ell));
                    push("fixed-p2-total", 2, e, n, small, large);
                }
                for e in [ell + 4, ell + 5] {
                    let small = 2 * pow2(e - 2);
                    let large = 2 * pow2(lifting::quadratic(e, ell + 1));
                    push("two-cycle-p2-total", 2, e, n, small, large);
                }
            }
            for e in [ell + 4, ell + 5] {
                let (a, b) = (lifting::two_adic_plateau(e), lifting::quadratic(e, ell + 1));
                push("two-cycle-p2-class", 2, e, n, pow2(a), pow2(b));
            }
        }
    }
    out
}

/// Both identity families, as run by a sweep in self-test mode.
pub fn self_test(p_max: u64, n_max: u32) -> Result<Vec<IdentityCheck>> {
    let mut checks = divisor_identities(p_max, n_max)?;
    checks.extend(boundary_checks(p_max, n_max));
    Ok(checks)
}

/// Solutions in `{1, …, p^e}` as a fraction of those in the full range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub kind: Kind,
    pub p: u64,
    pub e: u32,
    pub n: u32,
    pub full_count: u64,
    pub reduced_count: u64,
    /// `reduced_count / full_count` in lowest terms.
    pub ratio: String,
    pub ratio_value: f64,
    /// `1/p`.
    pub reference: String,
    pub reference_value: f64,
}

/// Count solutions in the reduced range by enumeration and compare with the
/// full-range closed form. Purely descriptive.
pub fn heuristic_ratio(
    ctx: &ModulusContext,
    n: u32,
    kind: Kind,
    opts: &OracleOptions,
) -> Result<RatioReport> {
    let g = PolySpec::power(n);
    let (full_count, reduced_count) = match kind {
        Kind::Fixed => (
            counts::fp_count_total(ctx, n)?.total,
            oracle::enumerate_fixed_points(ctx, &g, RangeSpec::Reduced, opts)?.len() as u64,
        ),
        Kind::TwoCycle => (
            counts::tc_count_total(ctx, n)?.total,
            oracle::enumerate_two_cycles(ctx, &g, RangeSpec::Reduced, opts)?.len() as u64,
        ),
    };
    let divisor = full_count.gcd(&reduced_count).max(1);
    let (num, den) = (reduced_count / divisor, full_count / divisor);
    Ok(RatioReport {
        kind,
        p: ctx.p(),
        e: ctx.e(),
        n,
        full_count,
        reduced_count,
        ratio: format!("{num}/{den}"),
        ratio_value: if full_count == 0 {
            0.0
        } else {
            reduced_count as f64 / full_count as f64
        },
        reference: format!("1/{}", ctx.p()),
        reference_value: 1.0 / ctx.p() as f64,
    })
}

/// Result of a batch of p-adic property checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertySummary {
    pub cases: u64,
    pub failures: Vec<String>,
}

impl PropertySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: PropertySummary) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

/// Properties of a single unit `x`: decomposition, root-of-unity order,
/// exp/log roundtrips and agreement of the interpolated map with the direct
/// power on the branch of `x`.
fn unit_properties(x: u64, n: u32, ctx: &ModulusContext) -> Result<Vec<&'static str>> {
    let (m, q) = (ctx.modulus(), ctx.q());
    let mut bad = Vec::new();
    let w = teichmuller(x, ctx)?;
    let u = one_unit_part(x, ctx)?;
    if mulmod(w, u, m) != x % m {
        bad.push("decomposition");
    }
    if powmod(w, ctx.phi_q(), m) != 1 % m || w % q != x % q {
        bad.push("root of unity");
    }
    if pexp(plog(u, ctx)?, ctx)? != u {
        bad.push("exp(log u)");
    }
    let floor = crate::padic::exp_valuation_floor(ctx);
    let z = mulmod(ctx.p().pow(floor.min(ctx.e())) % m, x % m, m);
    if plog(pexp(z, ctx)?, ctx)? != z {
        bad.push("log(exp z)");
    }
    let g = PolySpec::power(n);
    if interpolated_selfpower(x, x % ctx.phi_q(), &g, ctx)? != self_power(x, n, ctx)? {
        bad.push("interpolation");
    }
    Ok(bad)
}

/// Multiplicativity of `ω` and additivity of `log` on a pair of units.
fn pair_properties(x: u64, y: u64, ctx: &ModulusContext) -> Result<Vec<&'static str>> {
    let m = ctx.modulus();
    let mut bad = Vec::new();
    let xy = mulmod(x % m, y % m, m);
    if teichmuller(xy, ctx)? != mulmod(teichmuller(x, ctx)?, teichmuller(y, ctx)?, m) {
        bad.push("teichmuller multiplicative");
    }
    let (u, v) = (one_unit_part(x, ctx)?, one_unit_part(y, ctx)?);
    if plog(mulmod(u, v, m), ctx)? != (plog(u, ctx)? + plog(v, ctx)?) % m {
        bad.push("log additive");
    }
    Ok(bad)
}

fn record(
    summary: &mut PropertySummary,
    ctx: &ModulusContext,
    what: String,
    outcome: Result<Vec<&'static str>>,
) {
    summary.cases += 1;
    match outcome {
        Ok(bad) => summary
            .failures
            .extend(bad.into_iter().map(|b| format!("{ctx} {what}: {b}"))),
        Err(err) => summary.failures.push(format!("{ctx} {what}: {err}")),
    }
}

/// Every unit and every pair of units modulo `p^e`, with `n ∈ {1, 2, 3}` for
/// the interpolation check.
pub fn padic_properties_exhaustive(ctx: &ModulusContext) -> PropertySummary {
    let m = ctx.modulus();
    let units: Vec<u64> = (1..m).filter(|&x| ctx.is_unit(x)).collect();
    let parts: Vec<PropertySummary> = units
        .par_iter()
        .map(|&x| {
            let mut s = PropertySummary::default();
            for n in 1..=3 {
                record(
                    &mut s,
                    ctx,
                    format!("x={x} n={n}"),
                    unit_properties(x, n, ctx),
                );
            }
            for &y in &units {
                record(
                    &mut s,
                    ctx,
                    format!("x={x} y={y}"),
                    pair_properties(x, y, ctx),
                );
            }
            s
        })
        .collect();
    let mut out = PropertySummary::default();
    for part in parts {
        out.absorb(part);
    }
    out
}

/// `samples` random cases with `p` drawn from the primes below 20 and
/// `e ≤ e_max`, reproducible from `seed`.
pub fn padic_properties_sampled(samples: u64, e_max: u32, seed: u64) -> PropertySummary {
    const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = PropertySummary::default();
    for _ in 0..samples {
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        let e = rng.gen_range(1..=e_max.max(1));
        let ctx = match ModulusContext::new(p, e) {
            Ok(ctx) => ctx,
            Err(err) => {
                out.cases += 1;
                out.failures.push(format!("{p}^{e}: {err}"));
                continue;
            }
        };
        let m = ctx.modulus();
        let mut unit = || loop {
            let x = rng.gen_range(1..m.max(2));
            if ctx.is_unit(x) {
                return x;
            }
        };
        let (x, y) = (unit(), unit());
        let n = rng.gen_range(1..=6);
        record(
            &mut out,
            &ctx,
            format!("x={x} n={n}"),
            unit_properties(x, n, &ctx),
        );
        record(
            &mut out,
            &ctx,
            format!("x={x} y={y}"),
            pair_properties(x, y, &ctx),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Mutex;

    fn ctx(p: u64, e: u32) -> ModulusContext {
        ModulusContext::new(p, e).unwrap()
    }

    fn opts() -> OracleOptions {
        OracleOptions::default()
    }

    #[test]
    fn verify_examples() {
        let r = verify_fixed(&ctx(3, 2), 1, &opts()).unwrap();
        assert!(r.matched);
        assert_eq!((r.formula_total, r.oracle_total), (Some(7), Some(7)));
        let r = verify_fixed(&ctx(2, 4), 1, &opts()).unwrap();
        assert!(r.matched);
        let classes: Vec<u64> = r.per_class.iter().map(|c| c.oracle).collect();
        assert_eq!(classes, vec![4, 2]);
        assert_eq!(
            verify_fixed(&ctx(3, 1), 1, &opts()).unwrap().oracle_total,
            Some(3)
        );

        let r = verify_two_cycles(&ctx(3, 2), 1, &opts()).unwrap();
        assert!(r.matched);
        assert_eq!(r.oracle_total, Some(15));
        assert_eq!(
            r.per_class[0],
            ClassCount {
                class: "(1,1)".into(),
                formula: 12,
                oracle: 12
            }
        );
        assert_eq!(
            r.per_class[1],
            ClassCount {
                class: "(2,2)".into(),
                formula: 3,
                oracle: 3
            }
        );
        assert_eq!(
            verify_two_cycles(&ctx(3, 1), 1, &opts())
                .unwrap()
                .oracle_total,
            Some(5)
        );
        assert_eq!(
            verify_two_cycles(&ctx(2, 2), 1, &opts())
                .unwrap()
                .oracle_total,
            Some(2)
        );
    }

    #[test]
    fn sweep_examples() {
        let reports = sweep(&[GridPoint::new(3, 1, 1)], &[Kind::Fixed], &opts(), None);
        assert_eq!(reports.len(), 1);
        assert!(reports[0].matched);
        assert!(sweep(&[], &[Kind::Fixed], &opts(), None).is_empty());

        let points: Vec<GridPoint> = (1..=4).map(|e| GridPoint::new(3, e, 1)).collect();
        let seen = Mutex::new(0);
        let callback = |_: &CountReport| *seen.lock().unwrap() += 1;
        let reports = sweep(&points, &[Kind::Fixed], &opts(), Some(&callback));
        assert_eq!(*seen.lock().unwrap(), 4);
        assert!(reports.iter().all(|r| r.matched));
        let es: Vec<u32> = reports.iter().map(|r| r.e).collect();
        assert_eq!(es, vec![1, 2, 3, 4]);
    }

    #[test]
    fn sweep_records_failures_and_continues() {
        let points = [GridPoint::new(4, 1, 1), GridPoint::new(3, 1, 1)];
        let tight = OracleOptions {
            budget: 1,
            workers: Some(2),
        };
        let reports = sweep(&points, &[Kind::Fixed, Kind::TwoCycle], &tight, None);
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| !r.matched && r.error.is_some()));
        assert!(reports[0].error.as_deref().unwrap().contains("not a prime"));
        assert!(reports[2].error.as_deref().unwrap().contains("budget"));
    }

    #[test]
    fn grid_order() {
        let g = grid(5, 2, 2);
        assert_eq!(g.len(), 3 * 2 * 2);
        assert_eq!(g[0], GridPoint::new(2, 1, 1));
        assert_eq!(g[1], GridPoint::new(2, 1, 2));
        assert_eq!(g.last(), Some(&GridPoint::new(5, 2, 2)));
    }

    #[test]
    fn identities_hold_on_a_small_range() {
        let checks = self_test(7, 9).unwrap();
        let bad: Vec<_> = checks.iter().filter(|c| !c.holds).collect();
        assert!(bad.is_empty(), "{bad:?}");
        assert!(checks
            .iter()
            .any(|c| c.name == "two-cycle-odd-p-dividing-n-cubic"));
    }

    #[test]
    fn padic_properties_small() {
        let s = padic_properties_exhaustive(&ctx(3, 3));
        assert!(s.passed(), "{:?}", s.failures);
        assert_eq!(s.cases, 18 * 3 + 18 * 18);
        let s = padic_properties_exhaustive(&ctx(2, 5));
        assert!(s.passed(), "{:?}", s.failures);
        let a = padic_properties_sampled(50, 6, 7);
        assert!(a.passed(), "{:?}", a.failures);
        assert_eq!(a, padic_properties_sampled(50, 6, 7));
    }

    #[test]
    fn heuristic_examples() {
        let r = heuristic_ratio(&ctx(2, 3), 1, Kind::Fixed, &opts()).unwrap();
        assert_eq!(
            (r.full_count, r.reduced_count, r.ratio.as_str()),
            (4, 4, "1/1")
        );
        let r = heuristic_ratio(&ctx(3, 2), 1, Kind::Fixed, &opts()).unwrap();
        assert_eq!(r.full_count, 7);
        assert!(r.reduced_count <= r.full_count);
        let r = heuristic_ratio(&ctx(5, 1), 1, Kind::Fixed, &opts()).unwrap();
        assert_eq!(r.full_count, 8);
        assert_eq!(r.reference, "1/5");
    }

    #[test]
    fn reports_roundtrip_through_json_and_csv() {
        let mut reports = sweep(
            &grid(3, 2, 2),
            &[Kind::Fixed, Kind::TwoCycle],
            &opts(),
            None,
        );
        reports.push(CountReport::failed(
            Kind::Fixed,
            GridPoint::new(4, 1, 1),
            "4 is not a prime".into(),
            0.125,
        ));
        let json = serde_json::to_string(&reports).unwrap();
        let back: Vec<CountReport> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, reports);

        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &reports {
            w.serialize(r.row()).unwrap();
        }
        let data = w.into_inner().unwrap();
        assert!(data.starts_with(b"kind,p,e,n,formula_total,oracle_total,match,elapsed_ms\n"));
        let rows: Vec<ReportRow> = csv::Reader::from_reader(data.as_slice())
            .deserialize()
            .collect::<std::result::Result<_, _>>()
            .unwrap();
        assert_eq!(
            rows,
            reports.iter().map(CountReport::row).collect::<Vec<_>>()
        );

        let mut w = csv::Writer::from_writer(Vec::new());
        for row in reports.iter().flat_map(CountReport::class_rows) {
            w.serialize(row).unwrap();
        }
        let data = w.into_inner().unwrap();
        assert!(data.starts_with(b"kind,p,e,n,class,formula,oracle\n"));
        let rows: Vec<ClassRow> = csv::Reader::from_reader(data.as_slice())
            .deserialize()
            .collect::<std::result::Result<_, _>>()
            .unwrap();
        assert_eq!(
            rows,
            reports
                .iter()
                .flat_map(CountReport::class_rows)
                .collect::<Vec<_>>()
        );
    }
}
