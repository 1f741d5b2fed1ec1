//! Truncated p-adic arithmetic on `Z/p^eZ`.
//!
//! Every unit factors uniquely as `x = ω(x)·⟨x⟩` with `ω(x)` a `φ(q)`-th
//! root of unity (the Teichmüller character) and `⟨x⟩ ≡ 1 (mod q)`. On the
//! one-units the logarithm and exponential series converge, which is what
//! lets `x^{g(x)}` be interpolated to an analytic function of `x` on each
//! residue class modulo `φ(q)`:
//!
//! ```text
//! f_{x0}(x) = ω(x)^{g(x0)} · exp(g(x) · log⟨x⟩)
//! ```
//!
//! All results are residues modulo `p^e`. The series are summed with a few
//! extra digits of precision so that the `p`-parts of their denominators can
//! be divided out exactly.

use serde::{Deserialize, Serialize};

use crate::arith::{inverse_mod, mulmod, powmod, reduce_signed, ModulusContext, PolySpec};
use crate::error::{Error, Result};

/// Largest `k` with `p^k | z`; `None` stands for the valuation of zero.
pub fn valuation(z: i128, p: u64) -> Option<u32> {
    assert!(p >= 2, "valuation base must be at least 2");
    if z == 0 {
        return None;
    }
    let p = p as i128;
    let (mut z, mut k) = (z, 0);
    while z % p == 0 {
        z /= p;
        k += 1;
    }
    Some(k)
}

fn valuation_u64(z: u64, p: u64) -> u32 {
    valuation(z as i128, p).unwrap_or(u32::MAX)
}

/// Minimum valuation an argument of [`pexp`] must have.
pub fn exp_valuation_floor(ctx: &ModulusContext) -> u32 {
    if ctx.p() == 2 {
        2
    } else {
        1
    }
}

/// `ω(x) mod p^e`, the root of unity congruent to `x` modulo `q`.
pub fn teichmuller(x: u64, ctx: &ModulusContext) -> Result<u64> {
    ctx.check_unit(x)?;
    let m = ctx.modulus();
    if ctx.p() == 2 {
        return Ok(if x % 4 == 1 { 1 % m } else { m - 1 });
    }
    // y ↦ y^p fixes exactly the roots of unity and reaches ω(x) after at
    // most e - 1 steps.
    let mut y = x % m;
    loop {
        let next = powmod(y, ctx.p(), m);
        if next == y {
            return Ok(y);
        }
        y = next;
    }
}

/// `⟨x⟩ = x · ω(x)^{-1} mod p^e`.
pub fn one_unit_part(x: u64, ctx: &ModulusContext) -> Result<u64> {
    let w = teichmuller(x, ctx)?;
    let m = ctx.modulus();
    Ok(mulmod(x % m, inverse_mod(w, m)?, m))
}

/// A unit residue with its canonical decomposition `ω(x)·⟨x⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PadicUnit {
    ctx: ModulusContext,
    value: u64,
    teich: u64,
    one_unit: u64,
}

impl PadicUnit {
    pub fn new(x: u64, ctx: &ModulusContext) -> Result<Self> {
        let teich = teichmuller(x, ctx)?;
        let one_unit = one_unit_part(x, ctx)?;
        Ok(Self {
            ctx: *ctx,
            value: x % ctx.modulus(),
            teich,
            one_unit,
        })
    }

    pub fn context(&self) -> &ModulusContext {
        &self.ctx
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `ω(x)`.
    pub fn teich(&self) -> u64 {
        self.teich
    }

    /// `⟨x⟩`.
    pub fn one_unit(&self) -> u64 {
        self.one_unit
    }

    /// `log⟨x⟩`.
    pub fn log_one_unit(&self) -> Result<u64> {
        plog(self.one_unit, &self.ctx)
    }
}

/// One term `numerator / (p^shift · unit)` of a truncated series.
///
/// `numerator` is held modulo `p^(e + Δ)` where `Δ ≥ shift`, so the division
/// by `p^shift` is exact and leaves a correct residue modulo `p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedSeriesTerm {
    pub numerator: u64,
    pub p_power_shift: u32,
    pub unit_denominator: u64,
}

impl TruncatedSeriesTerm {
    /// The term's value modulo `p^e`.
    pub fn reduce(&self, ctx: &ModulusContext) -> Result<u64> {
        let m = ctx.modulus();
        let shifted = self.numerator / ctx.p().pow(self.p_power_shift);
        debug_assert_eq!(shifted * ctx.p().pow(self.p_power_shift), self.numerator);
        Ok(mulmod(
            shifted % m,
            inverse_mod(self.unit_denominator % m, m)?,
            m,
        ))
    }
}

/// `p^(e + extra)`, refusing anything whose products would overflow `u128`.
fn extended_modulus(ctx: &ModulusContext, extra: u32) -> Result<u64> {
    ctx.p()
        .checked_pow(ctx.e() + extra)
        .ok_or(Error::Domain("series precision exceeds 64 bits"))
}

/// Truncation of `log(u) = Σ_{k≥1} (-1)^{k+1} (u-1)^k / k` modulo `p^e`.
pub fn plog(u: u64, ctx: &ModulusContext) -> Result<u64> {
    let (p, e, m) = (ctx.p(), ctx.e(), ctx.modulus());
    let u = u % m;
    let level = ctx.q().min(m);
    if u % level != 1 % level {
        return Err(Error::NotOneUnit {
            value: u,
            q: ctx.q(),
        });
    }
    let t = (u + m - 1) % m;
    if t == 0 {
        return Ok(0);
    }
    let v = valuation_u64(t, p);
    // Term k has valuation ≥ k·v - log_p(k), which is non-decreasing in k;
    // stop at the first k where that bound reaches e.
    let vanishes = |k: u64| {
        let val = k * v as u64;
        val >= e as u64
            && (val - e as u64 >= 64
                || p.checked_pow((val - e as u64) as u32)
                    .is_none_or(|pw| pw >= k))
    };
    let mut stop = 1u64;
    while !vanishes(stop) {
        stop += 1;
    }
    let extra = (1..stop).map(|k| valuation_u64(k, p)).max().unwrap_or(0);
    let big = extended_modulus(ctx, extra)?;

    let mut power = 1u64;
    let mut sum = 0u64;
    for k in 1..stop {
        power = mulmod(power, t, big);
        let shift = valuation_u64(k, p);
        let term = TruncatedSeriesTerm {
            numerator: power,
            p_power_shift: shift,
            unit_denominator: k / p.pow(shift),
        }
        .reduce(ctx)?;
        sum = if k % 2 == 1 {
            (sum + term) % m
        } else {
            (sum + m - term) % m
        };
    }
    Ok(sum)
}

/// Truncation of `exp(z) = Σ_{k≥0} z^k / k!` modulo `p^e`.
///
/// Requires `v_p(z) ≥ 1` for odd `p` and `v_p(z) ≥ 2` for `p = 2`.
pub fn pexp(z: u64, ctx: &ModulusContext) -> Result<u64> {
    let (p, e, m) = (ctx.p(), ctx.e(), ctx.modulus());
    let z = z % m;
    if z == 0 {
        return Ok(1 % m);
    }
    let required = exp_valuation_floor(ctx);
    let v = valuation_u64(z, p);
    if v < required {
        return Err(Error::InsufficientValuation { value: z, required });
    }
    // v_p(z^k / k!) ≥ k·v - (k-1)/(p-1), strictly increasing in k.
    let (v, pm1, e) = (v as u64, p - 1, e as u64);
    let mut stop = 1u64;
    while stop * v * pm1 < e * pm1 + (stop - 1) {
        stop += 1;
    }
    let mut extra = 0u32;
    let mut fact_val = 0u32;
    for k in 1..stop {
        fact_val += valuation_u64(k, p);
        extra = extra.max(fact_val);
    }
    let big = extended_modulus(ctx, extra)?;

    let mut power = 1u64;
    let mut unit_fact = 1u64;
    let mut fact_val = 0u32;
    let mut sum = 1 % m;
    for k in 1..stop {
        power = mulmod(power, z, big);
        let kv = valuation_u64(k, p);
        fact_val += kv;
        unit_fact = mulmod(unit_fact, (k / p.pow(kv)) % m, m);
        let term = TruncatedSeriesTerm {
            numerator: power,
            p_power_shift: fact_val,
            unit_denominator: unit_fact,
        }
        .reduce(ctx)?;
        sum = (sum + term) % m;
    }
    Ok(sum)
}

/// `f_{x0}(x) = ω(x)^{g(x0)} · exp(g(x) · log⟨x⟩) mod p^e`.
///
/// Agrees with `x^{g(x)}` whenever `x ≡ x0 (mod φ(q))`.
pub fn interpolated_selfpower(x: u64, x0: u64, g: &PolySpec, ctx: &ModulusContext) -> Result<u64> {
    let m = ctx.modulus();
    let unit = PadicUnit::new(x, ctx)?;
    let root_part = powmod(unit.teich(), g.eval_mod(x0, ctx.phi_q()), m);
    Ok(mulmod(
        root_part,
        exp_of_log_power(&unit, g.eval_mod(x, m), ctx)?,
        m,
    ))
}

/// `exp(k · log⟨x⟩) = ⟨x⟩^k`, with the exponential's precondition checked.
fn exp_of_log_power(unit: &PadicUnit, k: u64, ctx: &ModulusContext) -> Result<u64> {
    let m = ctx.modulus();
    let arg = mulmod(k % m, unit.log_one_unit()?, m);
    if arg != 0 && valuation_u64(arg, ctx.p()) < exp_valuation_floor(ctx) {
        return Err(Error::InsufficientValuation {
            value: arg,
            required: exp_valuation_floor(ctx),
        });
    }
    pexp(arg, ctx)
}

/// Derivative of [`interpolated_selfpower`] in `x`:
/// `f_{x0}(x) · (g'(x) log⟨x⟩ + g(x) / x)`.
pub fn interpolated_selfpower_derivative(
    x: u64,
    x0: u64,
    g: &PolySpec,
    ctx: &ModulusContext,
) -> Result<u64> {
    let m = ctx.modulus();
    let unit = PadicUnit::new(x, ctx)?;
    let value = interpolated_selfpower(x, x0, g, ctx)?;
    let log_term = mulmod(g.derivative().eval_mod(x, m), unit.log_one_unit()?, m);
    let quotient = mulmod(g.eval_mod(x, m), inverse_mod(x % m, m)?, m);
    Ok(mulmod(value, (log_term + quotient) % m, m))
}

/// Newton lifting of a simple root modulo `p` to the unique root modulo
/// `p^e` above it.
///
/// `f` and `derivative` return their values reduced modulo `p^e`.
pub fn hensel_lift<F, D>(f: F, derivative: D, root: u64, ctx: &ModulusContext) -> Result<u64>
where
    F: Fn(u64) -> Result<u64>,
    D: Fn(u64) -> Result<u64>,
{
    let (p, m) = (ctx.p(), ctx.modulus());
    let mut x = root % m;
    if f(x)? % p != 0 {
        return Err(Error::NotARoot { value: root, p });
    }
    if derivative(x)? % p == 0 {
        return Err(Error::SingularRoot { root, p });
    }
    // Quadratic convergence needs about log2(e) steps; the cap only guards
    // against a caller passing a derivative that does not match f.
    for _ in 0..(2 * ctx.e() + 8) {
        let fx = f(x)? % m;
        if fx == 0 {
            return Ok(x);
        }
        let step = mulmod(fx, inverse_mod(derivative(x)? % m, m)?, m);
        x = (x + m - step) % m;
    }
    Err(Error::NoConvergence(m))
}

/// Hensel-lift a root of an integer polynomial.
pub fn hensel_lift_poly(f: &PolySpec, root: u64, ctx: &ModulusContext) -> Result<u64> {
    let m = ctx.modulus();
    let df = f.derivative();
    hensel_lift(
        |x| Ok(f.eval_mod(x, m)),
        |x| Ok(df.eval_mod(x, m)),
        root,
        ctx,
    )
}

/// Signed residue helper for callers that build `f(x) - x` style maps.
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    reduce_signed(a as i128 - b as i128, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::{One, ToPrimitive, Zero};
    use proptest::prelude::*;

    fn ctx(p: u64, e: u32) -> ModulusContext {
        ModulusContext::new(p, e).unwrap()
    }

    /// Exact rational partial sum reduced modulo p^e.
    fn rational_mod(r: &BigRational, ctx: &ModulusContext) -> u64 {
        let p = BigInt::from(ctx.p());
        let (mut num, mut den) = (r.numer().clone(), r.denom().clone());
        while !num.is_zero() && (&num % &p).is_zero() && (&den % &p).is_zero() {
            num /= &p;
            den /= &p;
        }
        assert!(!(&den % &p).is_zero(), "series value must be p-integral");
        let m = BigInt::from(ctx.modulus());
        let num = num.mod_floor(&m).to_u64().unwrap();
        let den = den.mod_floor(&m).to_u64().unwrap();
        mulmod(num, inverse_mod(den, ctx.modulus()).unwrap(), ctx.modulus())
    }

    /// log(1 + t) by exact rational summation over many more terms than needed.
    fn log_oracle(u: u64, ctx: &ModulusContext) -> u64 {
        let t = BigRational::from_integer(BigInt::from(u) - 1);
        let mut sum = BigRational::zero();
        let mut power = BigRational::one();
        for k in 1..=(4 * ctx.e() as i64 + 12) {
            power = &power * &t;
            let term = &power / BigRational::from_integer(BigInt::from(k));
            sum = if k % 2 == 1 { sum + term } else { sum - term };
        }
        rational_mod(&sum, ctx)
    }

    fn exp_oracle(z: u64, ctx: &ModulusContext) -> u64 {
        let z = BigRational::from_integer(BigInt::from(z));
        let mut sum = BigRational::one();
        let mut term = BigRational::one();
        for k in 1..=(6 * ctx.e() as i64 + 12) {
            term = term * &z / BigRational::from_integer(BigInt::from(k));
            sum += &term;
        }
        rational_mod(&sum, ctx)
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(18, 3), Some(2));
        assert_eq!(valuation(7, 2), Some(0));
        assert_eq!(valuation(0, 5), None);
        assert_eq!(valuation(-8, 2), Some(3));
    }

    #[test]
    fn teichmuller_examples() {
        assert_eq!(teichmuller(2, &ctx(5, 2)).unwrap(), 7);
        assert_eq!(teichmuller(1, &ctx(7, 3)).unwrap(), 1);
        let c = ctx(7, 3);
        assert_eq!(teichmuller(c.modulus() - 1, &c).unwrap(), c.modulus() - 1);
        let c = ctx(2, 5);
        assert_eq!(teichmuller(31, &c).unwrap(), 31);
        assert_eq!(teichmuller(5, &c).unwrap(), 1);
        assert!(teichmuller(10, &ctx(5, 2)).is_err());
    }

    #[test]
    fn teichmuller_matches_brute_force_root_search() {
        for c in [ctx(3, 3), ctx(5, 2), ctx(7, 2), ctx(2, 5), ctx(11, 2)] {
            let m = c.modulus();
            for x in (1..m).filter(|&x| c.is_unit(x)) {
                // Modulo 2^e, y^2 = 1 has spurious roots 2^(e-1) ± 1; only ±1
                // come from genuine 2-adic roots of unity.
                let expected: Vec<u64> = (1..m)
                    .filter(|&y| c.p() != 2 || y == 1 || y == m - 1)
                    .filter(|&y| y % c.q() == x % c.q() && powmod(y, c.phi_q(), m) == 1)
                    .collect();
                assert_eq!(
                    expected,
                    vec![teichmuller(x, &c).unwrap()],
                    "x = {x} mod {c}"
                );
            }
        }
    }

    #[test]
    fn one_unit_examples() {
        // 7 is itself a fourth root of unity mod 25, so its one-unit part is 1.
        assert_eq!(teichmuller(7, &ctx(5, 2)).unwrap(), 7);
        assert_eq!(one_unit_part(7, &ctx(5, 2)).unwrap(), 1);
        assert_eq!(one_unit_part(1, &ctx(5, 2)).unwrap(), 1);
        // 3 = ω(3)·⟨3⟩ with ω(3) = 18 mod 25; 18^{-1} = 7, so ⟨3⟩ = 21.
        assert_eq!(teichmuller(3, &ctx(5, 2)).unwrap(), 18);
        assert_eq!(one_unit_part(3, &ctx(5, 2)).unwrap(), 21);
        let c = ctx(3, 4);
        let w = teichmuller(5, &c).unwrap();
        assert_eq!(one_unit_part(w, &c).unwrap(), 1);
    }

    #[test]
    fn plog_examples() {
        assert_eq!(plog(6, &ctx(5, 2)).unwrap(), 5);
        assert_eq!(plog(1, &ctx(7, 4)).unwrap(), 0);
        assert_eq!(plog(1 + 9, &ctx(3, 2)).unwrap(), 0);
        assert_eq!(plog(1 + 25, &ctx(5, 2)).unwrap(), 0);
        assert_eq!(
            plog(3, &ctx(2, 4)),
            Err(Error::NotOneUnit { value: 3, q: 4 })
        );
        assert_eq!(
            plog(2, &ctx(5, 2)),
            Err(Error::NotOneUnit { value: 2, q: 5 })
        );
    }

    #[test]
    fn pexp_examples() {
        assert_eq!(pexp(5, &ctx(5, 2)).unwrap(), 6);
        assert_eq!(pexp(0, &ctx(5, 2)).unwrap(), 1);
        for c in [ctx(3, 5), ctx(5, 3), ctx(2, 7)] {
            let u = 1 + c.q();
            assert_eq!(pexp(plog(u, &c).unwrap(), &c).unwrap(), u);
        }
        assert!(matches!(
            pexp(2, &ctx(2, 4)),
            Err(Error::InsufficientValuation { .. })
        ));
        assert!(matches!(
            pexp(1, &ctx(3, 2)),
            Err(Error::InsufficientValuation { .. })
        ));
    }

    #[test]
    fn log_and_exp_match_exact_rational_series() {
        for c in [ctx(3, 4), ctx(5, 3), ctx(2, 6), ctx(7, 2), ctx(3, 7)] {
            let m = c.modulus();
            // 3^7 is slow with exact rationals; sample it.
            let stride = if m > 1000 { 11 } else { 1 };
            for u in (1..m).filter(|u| u % c.q() == 1).step_by(stride) {
                assert_eq!(plog(u, &c).unwrap(), log_oracle(u, &c), "log {u} mod {c}");
            }
            let step = c.q().min(m);
            for z in (0..m).step_by(step as usize * stride) {
                assert_eq!(pexp(z, &c).unwrap(), exp_oracle(z, &c), "exp {z} mod {c}");
            }
        }
    }

    #[test]
    fn interpolated_examples() {
        assert_eq!(
            interpolated_selfpower(7, 3, &PolySpec::power(1), &ctx(5, 2)).unwrap(),
            18
        );
        let g = PolySpec::new(vec![3, 0, 1]);
        assert_eq!(interpolated_selfpower(1, 2, &g, &ctx(7, 3)).unwrap(), 1);
        assert_eq!(
            interpolated_selfpower(4, 1, &PolySpec::power(1), &ctx(3, 2)).unwrap(),
            4
        );
        assert!(interpolated_selfpower(6, 1, &PolySpec::power(1), &ctx(3, 2)).is_err());
    }

    #[test]
    fn interpolation_matches_direct_power_on_its_class() {
        for c in [ctx(3, 3), ctx(5, 2), ctx(2, 5), ctx(7, 2)] {
            let period = c.phi_q();
            for g in [
                PolySpec::power(1),
                PolySpec::power(2),
                PolySpec::new(vec![1, 1, 1]),
            ] {
                // Range over several periods of both p^e and φ(q).
                for x in (1..3 * c.modulus() * period).filter(|&x| c.is_unit(x)) {
                    let direct = powmod(x, g.eval_mod(x, c.lambda()), c.modulus());
                    let interp = interpolated_selfpower(x, x % period, &g, &c).unwrap();
                    assert_eq!(interp, direct, "x = {x}, g = {g}, {c}");
                }
            }
        }
    }

    #[test]
    fn hensel_examples() {
        let sqrt2 = PolySpec::new(vec![-2, 0, 1]);
        assert_eq!(hensel_lift_poly(&sqrt2, 3, &ctx(7, 2)).unwrap(), 10);
        let linear = PolySpec::new(vec![-123, 1]);
        assert_eq!(hensel_lift_poly(&linear, 123 % 5, &ctx(5, 4)).unwrap(), 123);
        let square_minus_one = PolySpec::new(vec![-1, 0, 1]);
        assert_eq!(
            hensel_lift_poly(&square_minus_one, 1, &ctx(2, 3)),
            Err(Error::SingularRoot { root: 1, p: 2 })
        );
        assert_eq!(
            hensel_lift_poly(&sqrt2, 2, &ctx(7, 2)),
            Err(Error::NotARoot { value: 2, p: 7 })
        );
    }

    #[test]
    fn hensel_lifts_sqrt_two_to_high_precision() {
        let f = PolySpec::new(vec![-2, 0, 1]);
        let c = ctx(7, 20);
        let r = hensel_lift_poly(&f, 4, &c).unwrap();
        assert_eq!(r % 7, 4);
        assert_eq!(f.eval_mod(r, c.modulus()), 0);
    }

    fn small_context() -> impl Strategy<Value = ModulusContext> {
        (prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), 1u32..=8).prop_filter_map(
            "size",
            |(p, e)| {
                ModulusContext::new(p, e)
                    .ok()
                    .filter(|c| c.modulus() < 1 << 40)
            },
        )
    }

    proptest! {
        #[test]
        fn decomposition_reconstructs(c in small_context(), x in 1u64..u64::MAX / 4) {
            prop_assume!(c.is_unit(x));
            let unit = PadicUnit::new(x, &c).unwrap();
            let m = c.modulus();
            prop_assert_eq!(mulmod(unit.teich(), unit.one_unit(), m), x % m);
            prop_assert_eq!(powmod(unit.teich(), c.phi_q(), m), 1 % m);
            prop_assert_eq!(unit.one_unit() % c.q().min(m), 1 % c.q().min(m));
            if c.p() != 2 {
                prop_assert_eq!(unit.teich() % c.p(), x % c.p());
            }
        }

        #[test]
        fn log_is_additive(c in small_context(), a in 0u64..1 << 40, b in 0u64..1 << 40) {
            let m = c.modulus();
            let level = c.q().min(m);
            let u = (1 + (a % m) * level) % m;
            let v = (1 + (b % m) * level) % m;
            let lhs = plog(mulmod(u, v, m), &c).unwrap();
            prop_assert_eq!(lhs, (plog(u, &c).unwrap() + plog(v, &c).unwrap()) % m);
        }

        #[test]
        fn exp_log_roundtrip(c in small_context(), a in 0u64..1 << 40) {
            let m = c.modulus();
            let u = (1 + (a % m) * c.q().min(m)) % m;
            prop_assert_eq!(pexp(plog(u, &c).unwrap(), &c).unwrap(), u);
            let z = ((a % m) * c.q().min(m)) % m;
            prop_assert_eq!(plog(pexp(z, &c).unwrap(), &c).unwrap(), z);
        }

        #[test]
        fn teichmuller_is_multiplicative(c in small_context(), x in 1u64..1 << 40, y in 1u64..1 << 40) {
            prop_assume!(c.is_unit(x) && c.is_unit(y));
            let m = c.modulus();
            let lhs = teichmuller(mulmod(x, y, m), &c).unwrap();
            let rhs = mulmod(teichmuller(x, &c).unwrap(), teichmuller(y, &c).unwrap(), m);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn hensel_output_is_a_root_above_the_input(c in small_context(), a in 1u64..1000, k in 1i64..50) {
            // f(z) = z^2 - r with r = a^2 + k p, so a is a root mod p.
            prop_assume!(c.p() != 2 && c.is_unit(a));
            let r = (a * a) as i64 + k * c.p() as i64;
            let f = PolySpec::new(vec![-r, 0, 1]);
            let lifted = hensel_lift_poly(&f, a % c.p(), &c).unwrap();
            prop_assert_eq!(lifted % c.p(), a % c.p());
            prop_assert_eq!(f.eval_mod(lifted, c.modulus()), 0);
        }
    }
}
