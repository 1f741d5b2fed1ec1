use std::collections::BTreeMap;

use crate::arith::{
    count_roots, crt_combine, divisors, euler_phi, gcd_many, mult_order, powmod, ModulusContext,
    PolySpec,
};
use crate::counts::lifting::{self, p_valuation};
use crate::counts::{require_odd_prime, CountBreakdown, FixedClassKey, Regime};
use crate::error::{Error, Result};
use crate::padic::{
    hensel_lift, interpolated_selfpower, interpolated_selfpower_derivative, sub_mod,
};

fn gcd_term(p: u64, value_mod: u64) -> u64 {
    gcd_many(&[(p - 1) as i64, value_mod as i64])
}

/// `g(x0) - 1` reduced modulo `p - 1`.
fn shifted_mod(g: &PolySpec, x0: u64, p: u64) -> u64 {
    let m = p - 1;
    (g.eval_mod(x0, m) + m - 1 % m) % m
}

/// Solutions of `x^{g(x)} ≡ x (mod p)` with `1 ≤ x ≤ p(p-1)`, `p ∤ x`:
/// `Σ_{x0=1}^{p-1} gcd(p-1, g(x0)-1)`.
pub fn fp_count_mod_p(p: u64, g: &PolySpec) -> Result<u64> {
    require_odd_prime(p)?;
    Ok((1..p).map(|x0| gcd_term(p, shifted_mod(g, x0, p))).sum())
}

/// [`fp_count_mod_p`] as `Σ_{d | p-1} φ(d) ((p-1)/d) N_{g-1}(d)`.
pub fn fp_count_mod_p_divisor_form(p: u64, g: &PolySpec) -> Result<u64> {
    require_odd_prime(p)?;
    divisors(p - 1)?
        .into_iter()
        .map(|d| Ok(euler_phi(d)? * ((p - 1) / d) * count_roots(g, -1, d, false)))
        .sum()
}

/// Number of units `x` mod `p` solving the interpolated congruence for a
/// fixed `x0`: `gcd(p-1, g(x0)-1)`.
pub fn fp_count_per_x0(p: u64, g: &PolySpec, x0: u64) -> Result<u64> {
    require_odd_prime(p)?;
    Ok(gcd_term(p, shifted_mod(g, x0, p)))
}

/// Number of `x0 ∈ Z/(p-1)` for which a given unit `x` solves the
/// interpolated congruence: `N_{g-1}(ord x) (p-1) / ord x`.
pub fn fp_count_per_x(p: u64, g: &PolySpec, x: u64) -> Result<u64> {
    require_odd_prime(p)?;
    let order = mult_order(x % p, p)?;
    Ok(count_roots(g, -1, order, false) * ((p - 1) / order))
}

/// Solutions modulo `p^e` with `g(x) ≢ 1 (mod p)`. These lift uniquely, so
/// the value does not depend on `e`.
pub fn fp_count_nonsingular(ctx: &ModulusContext, g: &PolySpec) -> Result<u64> {
    let p = ctx.p();
    require_odd_prime(p)?;
    let singular: u64 = (1..p)
        .filter(|&x1| g.eval_mod(x1, p) == 1)
        .map(|x1| fp_count_per_x(p, g, x1))
        .sum::<Result<u64>>()?;
    Ok(fp_count_mod_p(p, g)? - singular)
}

/// [`fp_count_nonsingular`] as
/// `Σ_{d | p-1} #{x1 : g(x1) ≢ 1, ord x1 = d} ((p-1)/d) N_{g-1}(d)`.
pub fn fp_count_nonsingular_divisor_form(p: u64, g: &PolySpec) -> Result<u64> {
    require_odd_prime(p)?;
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for x1 in (1..p).filter(|&x1| g.eval_mod(x1, p) != 1) {
        *by_order.entry(mult_order(x1, p)?).or_default() += 1;
    }
    Ok(by_order
        .into_iter()
        .map(|(d, k)| k * ((p - 1) / d) * count_roots(g, -1, d, false))
        .sum())
}

/// Residues `a ∈ (Z/p)^×` with `a^n ≡ 1 (mod p)`, ascending.
pub fn roots_of_unity_mod_p(p: u64, n: u32) -> Vec<u64> {
    (1..p)
        .filter(|&a| powmod(a, n as u64, p) == 1 % p)
        .collect()
}

/// `|G_{ξ,e}|` for a singular class.
///
/// For odd `p` the class must be an `n`-th root of unity modulo `p`. For
/// `p = 2` the class is `ξ mod 4 ∈ {1, 3}`; at `e = 1` the only odd residue
/// is 1, which gives counts 1 and 0.
pub fn fp_singular_class_count(ctx: &ModulusContext, n: u32, class: FixedClassKey) -> Result<u64> {
    let (p, e) = (ctx.p(), ctx.e());
    if p == 2 {
        let xi_is_one = match class.0 % 4 {
            1 => true,
            3 => false,
            _ => {
                return Err(Error::ClassDomain {
                    class: class.to_string(),
                    reason: "p = 2 classes are 1 and 3 modulo 4",
                })
            }
        };
        if e == 1 {
            return Ok(xi_is_one as u64);
        }
        return Ok(1 << lifting::two_adic_fixed_exponent(e, n, xi_is_one));
    }
    let a = class.0 % p;
    if a == 0 || powmod(a, n as u64, p) != 1 {
        return Err(Error::ClassDomain {
            class: class.to_string(),
            reason: "not an n-th root of unity modulo p",
        });
    }
    let k = lifting::odd_quadratic_exponent(e, p_valuation(n, p));
    Ok(fp_count_per_x(p, &PolySpec::power(n), a)? * p.pow(k))
}

/// Closed-form count for `p = 2`, `1 ≤ x ≤ 2^e`, as a single expression in
/// `e` and `v_2(n)`.
pub fn fp_total_two_adic(e: u32, n: u32) -> u64 {
    let ell = p_valuation(n, 2);
    if e == 1 {
        return 1;
    }
    if ell > 0 {
        if e <= 4 + ell {
            2 << (e - 2)
        } else {
            2 << lifting::quadratic(e, ell)
        }
    } else if e <= 3 {
        2 << (e - 2)
    } else {
        (1 << (e / 2)) + 2
    }
}

/// `(Σ_{x0} gcd(p-1, x0^n - 1), Σ_{x0} gcd(p-1, n, x0^n - 1))`: all solutions
/// modulo `p`, and those in singular classes.
fn fixed_gcd_sums(p: u64, n: u32) -> (u64, u64) {
    let m = p - 1;
    let mut all = 0;
    let mut singular = 0;
    for x0 in 1..p {
        let t = (powmod(x0, n as u64, m) + m - 1 % m) % m;
        all += gcd_term(p, t);
        singular += gcd_many(&[m as i64, n as i64, t as i64]);
    }
    (all, singular)
}

/// Total number of fixed points of `x ↦ x^{x^n}` modulo `p^e`, with the
/// per-class breakdown.
pub fn fp_count_total(ctx: &ModulusContext, n: u32) -> Result<CountBreakdown<FixedClassKey>> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1"));
    }
    let (p, e) = (ctx.p(), ctx.e());
    let regime = Regime::of(ctx, n);
    if p == 2 {
        let mut per_class = BTreeMap::new();
        for class in [FixedClassKey(1), FixedClassKey(3)] {
            let count = fp_singular_class_count(ctx, n, class)?;
            if count > 0 {
                per_class.insert(class, count);
            }
        }
        return Ok(CountBreakdown {
            total: fp_total_two_adic(e, n),
            nonsingular_total: 0,
            per_class,
            regime,
        });
    }

    let (all, singular) = fixed_gcd_sums(p, n);
    let lift = p.pow(lifting::odd_quadratic_exponent(e, p_valuation(n, p)));
    let g = PolySpec::power(n);
    let mut per_class = BTreeMap::new();
    for a in 1..p {
        let base = fp_count_per_x(p, &g, a)?;
        let count = if powmod(a, n as u64, p) == 1 {
            base * lift
        } else {
            base
        };
        if count > 0 {
            per_class.insert(FixedClassKey(a), count);
        }
    }
    Ok(CountBreakdown {
        total: all + singular * (lift - 1),
        nonsingular_total: all - singular,
        per_class,
        regime,
    })
}

/// The odd-`p` total in divisor-sum form:
/// `Σ_{d | p-1} φ(d)((p-1)/d) N(d) + Σ_{d | gcd(n,p-1)} φ(d)((p-1)/d) N(d) (p^k - 1)`.
pub fn fp_count_total_divisor_form(ctx: &ModulusContext, n: u32) -> Result<u64> {
    let p = ctx.p();
    require_odd_prime(p)?;
    let g = PolySpec::power(n);
    let term = |d: u64| -> Result<u64> {
        Ok(euler_phi(d)? * ((p - 1) / d) * count_roots(&g, -1, d, false))
    };
    let all: u64 = divisors(p - 1)?
        .into_iter()
        .map(term)
        .sum::<Result<u64>>()?;
    let inner = gcd_many(&[n as i64, (p - 1) as i64]);
    let singular: u64 = divisors(inner)?
        .into_iter()
        .map(term)
        .sum::<Result<u64>>()?;
    let lift = p.pow(lifting::odd_quadratic_exponent(ctx.e(), p_valuation(n, p)));
    Ok(all + singular * (lift - 1))
}

/// The nonsingular fixed points in `{1, …, p^e (p-1)}`, built constructively:
/// each root modulo `p` of `f_{x0}(x) - x` with `g(x) ≢ 1` is Newton-lifted
/// to `p^e` and glued to `x0` by the Chinese remainder theorem.
pub fn nonsingular_fixed_points(ctx: &ModulusContext, g: &PolySpec) -> Result<Vec<u64>> {
    let (p, m) = (ctx.p(), ctx.modulus());
    require_odd_prime(p)?;
    let mut out = Vec::new();
    for x0 in 0..p - 1 {
        let exponent = g.eval_mod(x0, p - 1);
        for x1 in (1..p).filter(|&x1| g.eval_mod(x1, p) != 1) {
            if powmod(x1, exponent, p) != x1 {
                continue;
            }
            let f = |x: u64| Ok(sub_mod(interpolated_selfpower(x, x0, g, ctx)?, x, m));
            let df = |x: u64| {
                Ok(sub_mod(
                    interpolated_selfpower_derivative(x, x0, g, ctx)?,
                    1,
                    m,
                ))
            };
            let root = hensel_lift(f, df, x1, ctx)?;
            let x = crt_combine(x0, p - 1, root, m)?;
            out.push(if x == 0 { m * (p - 1) } else { x });
        }
    }
    out.sort_unstable();
    Ok(out)
}
