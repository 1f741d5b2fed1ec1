use std::collections::BTreeMap;

use crate::arith::{
    count_pair_roots, count_roots, divisors, euler_phi, gcd_many, mult_order, powmod,
    ModulusContext, PolySpec,
};
use crate::counts::lifting::{self, p_valuation};
use crate::counts::{require_odd_prime, CountBreakdown, Regime, TwoCycleClassKey};
use crate::error::{Error, Result};

/// `g(x0) g(y0) - 1` reduced modulo `p - 1`.
fn pair_shift(g: &PolySpec, x0: u64, y0: u64, p: u64) -> u64 {
    let m = p - 1;
    let prod = g.eval_mod(x0, m) as u128 * g.eval_mod(y0, m) as u128 % m as u128;
    (prod as u64 + m - 1 % m) % m
}

/// Pairs `(x, y)` with `1 ≤ x, y ≤ p(p-1)`, `p ∤ xy`, `x^{g(x)} ≡ y` and
/// `y^{g(y)} ≡ x (mod p)`: `Σ_{x0, y0} gcd(p-1, g(x0) g(y0) - 1)`.
pub fn tc_count_mod_p(p: u64, g: &PolySpec) -> Result<u64> {
    require_odd_prime(p)?;
    let m = (p - 1) as i64;
    let mut total = 0;
    for x0 in 1..p {
        for y0 in 1..p {
            total += gcd_many(&[m, pair_shift(g, x0, y0, p) as i64]);
        }
    }
    Ok(total)
}

/// [`tc_count_mod_p`] as `Σ_{d | p-1} φ(d) ((p-1)/d)^2 N_{G-1}(d)`.
pub fn tc_count_mod_p_divisor_form(p: u64, g: &PolySpec) -> Result<u64> {
    require_odd_prime(p)?;
    divisors(p - 1)?
        .into_iter()
        .map(|d| {
            let k = (p - 1) / d;
            Ok(euler_phi(d)? * k * k * count_pair_roots(g, d))
        })
        .sum()
}

/// Solutions modulo `p` of the interpolated pair of congruences for fixed
/// `(x0, y0)`: `gcd(p-1, g(x0) g(y0) - 1)`.
pub fn tc_count_per_x0y0(p: u64, g: &PolySpec, x0: u64, y0: u64) -> Result<u64> {
    require_odd_prime(p)?;
    Ok(gcd_many(&[(p - 1) as i64, pair_shift(g, x0, y0, p) as i64]))
}

/// Pairs `(x0, y0)` for which a given unit `y` is part of a solution:
/// `N_{G-1}(ord y) ((p-1)/ord y)^2`.
pub fn tc_count_per_y(p: u64, g: &PolySpec, y: u64) -> Result<u64> {
    require_odd_prime(p)?;
    let d = mult_order(y % p, p)?;
    let k = (p - 1) / d;
    Ok(count_pair_roots(g, d) * k * k)
}

/// `#{x0 ∈ Z/(p-1) : a^{g(x0)} ≡ b (mod p)}`.
fn exponent_hits(p: u64, g: &PolySpec, a: u64, b: u64) -> u64 {
    (0..p - 1)
        .filter(|&x0| powmod(a, g.eval_mod(x0, p - 1), p) == b)
        .count() as u64
}

/// `|T_{a,b,1}|` for every class with at least one solution.
///
/// A pair in the class is `x = (x0, a)`, `y = (y0, b)` in CRT coordinates,
/// and the congruences modulo `p` read `a^{g(x0)} ≡ b`, `b^{g(y0)} ≡ a`, so
/// the count factors over `x0` and `y0`.
pub fn tc_base_class_counts(p: u64, g: &PolySpec) -> Result<BTreeMap<TwoCycleClassKey, u64>> {
    require_odd_prime(p)?;
    let mut out = BTreeMap::new();
    for a in 1..p {
        for b in 1..p {
            let count = exponent_hits(p, g, a, b) * exponent_hits(p, g, b, a);
            if count > 0 {
                out.insert(TwoCycleClassKey { a, b }, count);
            }
        }
    }
    Ok(out)
}

/// Two-cycles modulo `p^e` in classes with `g(a) g(b) ≢ 1 (mod p)`. These
/// lift uniquely, so the value does not depend on `e`.
pub fn tc_count_nonsingular(ctx: &ModulusContext, g: &PolySpec) -> Result<u64> {
    let p = ctx.p();
    Ok(tc_base_class_counts(p, g)?
        .into_iter()
        .filter(|(k, _)| g.eval_mod(k.a, p) * g.eval_mod(k.b, p) % p != 1)
        .map(|(_, c)| c)
        .sum())
}

fn is_cubic_class(p: u64, n: u32, b: u64) -> bool {
    powmod(b, n as u64, p) == p - 1
}

/// The factor `|T_{a,b,e}| / |T_{a,b,1}|` for an odd-`p` singular class.
pub fn tc_class_multiplier(ctx: &ModulusContext, n: u32, class: TwoCycleClassKey) -> Result<u64> {
    let p = ctx.p();
    require_odd_prime(p)?;
    let (a, b) = (class.a % p, class.b % p);
    if a == 0 || b == 0 || powmod(a, n as u64, p) * powmod(b, n as u64, p) % p != 1 {
        return Err(Error::ClassDomain {
            class: class.to_string(),
            reason: "requires a^n b^n ≡ 1 modulo p",
        });
    }
    let ell = p_valuation(n, p);
    let k = if is_cubic_class(p, n, b) {
        lifting::odd_cubic_exponent(ctx.e(), ell)
    } else {
        lifting::odd_quadratic_exponent(ctx.e(), ell)
    };
    Ok(p.pow(k))
}

/// `|T_{a,b,e}|` for a singular class.
///
/// For odd `p` this is the multiplier times `base_count = |T_{a,b,1}|`. For
/// `p = 2` the classes are `(1,1)` and `(3,3)` modulo 4, the count is
/// absolute and `base_count` is ignored; at `e = 1` the only pair is `(1,1)`.
pub fn tc_singular_class_count(
    ctx: &ModulusContext,
    n: u32,
    class: TwoCycleClassKey,
    base_count: u64,
) -> Result<u64> {
    let e = ctx.e();
    if ctx.p() == 2 {
        let b_is_one = match (class.a % 4, class.b % 4) {
            (1, 1) => true,
            (3, 3) => false,
            _ => {
                return Err(Error::ClassDomain {
                    class: class.to_string(),
                    reason: "p = 2 classes are (1,1) and (3,3) modulo 4",
                })
            }
        };
        if e == 1 {
            return Ok(b_is_one as u64);
        }
        return Ok(1 << lifting::two_adic_two_cycle_exponent(e, n, b_is_one));
    }
    Ok(tc_class_multiplier(ctx, n, class)? * base_count)
}

/// Closed-form two-cycle count for `p = 2`, pairs with `1 ≤ x, y ≤ 2^e`.
pub fn tc_total_two_adic(e: u32, n: u32) -> u64 {
    let ell = p_valuation(n, 2);
    if e == 1 {
        1
    } else if ell > 0 {
        if e <= ell + 4 {
            2 << (e - 2)
        } else {
            2 << lifting::quadratic(e, ell + 1)
        }
    } else if e <= 4 {
        2 << (e - 2)
    } else {
        (1 << e.div_ceil(2)) + (1 << lifting::cubic(e, 0))
    }
}

/// The three double sums of the odd-`p` total: all solutions modulo `p`,
/// those in singular classes, and those in classes with `b^n ≡ -1`.
fn two_cycle_gcd_sums(p: u64, n: u32) -> (u64, u64, u64) {
    let m = p - 1;
    let (mi, ni) = (m as i64, n as i64);
    let g = PolySpec::power(n);
    let (mut all, mut singular, mut cubic) = (0, 0, 0);
    for x0 in 1..p {
        for y0 in 1..p {
            let t = pair_shift(&g, x0, y0, p) as i64;
            let y0n = powmod(y0, n as u64, m);
            let middle = (ni as i128 * (y0n as i128 + 1)) % mi as i128;
            all += gcd_many(&[mi, t]);
            singular += gcd_many(&[mi, middle as i64, t]);
            cubic += gcd_many(&[mi, 2 * ni, t]) - gcd_many(&[mi, ni, t]);
        }
    }
    (all, singular, cubic)
}

fn lift_factors(ctx: &ModulusContext, n: u32) -> (u64, u64) {
    let ell = p_valuation(n, ctx.p());
    let p = ctx.p();
    (
        p.pow(lifting::odd_quadratic_exponent(ctx.e(), ell)),
        p.pow(lifting::odd_cubic_exponent(ctx.e(), ell)),
    )
}

/// Total number of two-cycles of `x ↦ x^{x^n}` modulo `p^e`, with the
/// per-class breakdown.
///
/// For odd `p` dividing `n` the same three-term sum is used with the lifting
/// exponents of that regime.
pub fn tc_count_total(ctx: &ModulusContext, n: u32) -> Result<CountBreakdown<TwoCycleClassKey>> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1"));
    }
    let (p, e) = (ctx.p(), ctx.e());
    let regime = Regime::of(ctx, n);
    if p == 2 {
        let mut per_class = BTreeMap::new();
        for class in [
            TwoCycleClassKey { a: 1, b: 1 },
            TwoCycleClassKey { a: 3, b: 3 },
        ] {
            let count = tc_singular_class_count(ctx, n, class, 0)?;
            if count > 0 {
                per_class.insert(class, count);
            }
        }
        return Ok(CountBreakdown {
            total: tc_total_two_adic(e, n),
            nonsingular_total: 0,
            per_class,
            regime,
        });
    }

    let (all, singular, cubic) = two_cycle_gcd_sums(p, n);
    let (quad_lift, cubic_lift) = lift_factors(ctx, n);
    let total = all + singular * (quad_lift - 1) + cubic * (cubic_lift - quad_lift);

    let g = PolySpec::power(n);
    let mut per_class = BTreeMap::new();
    for (class, base) in tc_base_class_counts(p, &g)? {
        let count = match tc_class_multiplier(ctx, n, class) {
            Ok(mult) => mult * base,
            Err(Error::ClassDomain { .. }) => base,
            Err(err) => return Err(err),
        };
        per_class.insert(class, count);
    }
    Ok(CountBreakdown {
        total,
        nonsingular_total: all - singular,
        per_class,
        regime,
    })
}

/// The odd-`p` total in divisor-sum form.
pub fn tc_count_total_divisor_form(ctx: &ModulusContext, n: u32) -> Result<u64> {
    let p = ctx.p();
    require_odd_prime(p)?;
    let g = PolySpec::power(n);
    let g_mid = g.scaled(n as i64);
    let inner = gcd_many(&[(p - 1) as i64, n as i64]);
    let outer = gcd_many(&[(p - 1) as i64, 2 * n as i64]);
    let (mut d1, mut d2, mut d3) = (0, 0, 0);
    for d in divisors(p - 1)? {
        let phi = euler_phi(d)?;
        let k = (p - 1) / d;
        let roots = count_roots(&g, -1, d, false);
        d1 += phi * phi * k * k * roots;
        d2 += phi * k * k * count_roots(&g_mid, n as i64, d, true) * roots;
        if outer.is_multiple_of(d) && !inner.is_multiple_of(d) {
            d3 += phi * phi * k * k * roots;
        }
    }
    let (quad_lift, cubic_lift) = lift_factors(ctx, n);
    Ok(d1 + d2 * (quad_lift - 1) + d3 * (cubic_lift - quad_lift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::self_power;

    fn ctx(p: u64, e: u32) -> ModulusContext {
        ModulusContext::new(p, e).unwrap()
    }

    /// All pairs by direct search over x; y is forced modulo p^e.
    fn brute(p: u64, e: u32, n: u32) -> BTreeMap<TwoCycleClassKey, u64> {
        let c = ctx(p, e);
        let (m, q) = (c.modulus(), c.q());
        let range = if p == 2 { m } else { m * (p - 1) };
        let mut out = BTreeMap::new();
        for x in (1..=range).filter(|&x| c.is_unit(x)) {
            let y1 = self_power(x, n, &c).unwrap();
            let mut y = if y1 == 0 { m } else { y1 };
            while y <= range {
                if self_power(y, n, &c).unwrap() == x % m {
                    *out.entry(TwoCycleClassKey { a: x % q, b: y % q })
                        .or_default() += 1;
                }
                y += m;
            }
        }
        out
    }

    #[test]
    fn mod_p_examples() {
        assert_eq!(tc_count_mod_p(3, &PolySpec::power(1)).unwrap(), 5);
        assert_eq!(tc_count_mod_p(3, &PolySpec::power(2)).unwrap(), 5);
        // Rows x0 = 1..4 of gcd(4, x0 y0 - 1): 8, 4, 8, 4. Every term with
        // x0 even is 1 because x0 y0 - 1 is odd.
        assert_eq!(tc_count_mod_p(5, &PolySpec::power(1)).unwrap(), 24);
        assert_eq!(brute(5, 1, 1).values().sum::<u64>(), 24);
        for p in [3u64, 5, 7, 11] {
            for g in [
                PolySpec::power(1),
                PolySpec::power(3),
                PolySpec::new(vec![1, 1, 1]),
            ] {
                assert_eq!(
                    tc_count_mod_p(p, &g).unwrap(),
                    tc_count_mod_p_divisor_form(p, &g).unwrap()
                );
                let bases = tc_base_class_counts(p, &g).unwrap();
                assert_eq!(bases.values().sum::<u64>(), tc_count_mod_p(p, &g).unwrap());
            }
        }
    }

    #[test]
    fn dual_counts() {
        let z = PolySpec::power(1);
        assert_eq!(tc_count_per_x0y0(3, &z, 1, 1).unwrap(), 2);
        assert_eq!(tc_count_per_x0y0(7, &z, 2, 1).unwrap(), 1);
        assert_eq!(tc_count_per_y(3, &z, 1).unwrap(), 4);
        // Summing either dual count over its index set gives the same total.
        for p in [5u64, 7, 13] {
            let g = PolySpec::power(2);
            let by_y: u64 = (1..p).map(|y| tc_count_per_y(p, &g, y).unwrap()).sum();
            assert_eq!(by_y, tc_count_mod_p(p, &g).unwrap());
        }
    }

    #[test]
    fn singular_class_examples() {
        let c = ctx(3, 2);
        assert_eq!(
            tc_singular_class_count(&c, 1, TwoCycleClassKey { a: 1, b: 1 }, 4).unwrap(),
            12
        );
        assert_eq!(
            tc_singular_class_count(&c, 1, TwoCycleClassKey { a: 2, b: 2 }, 1).unwrap(),
            3
        );
        assert_eq!(
            tc_singular_class_count(&ctx(2, 2), 1, TwoCycleClassKey { a: 1, b: 1 }, 0).unwrap(),
            1
        );
        assert!(
            tc_singular_class_count(&ctx(5, 2), 1, TwoCycleClassKey { a: 2, b: 2 }, 1).is_err()
        );
        assert!(
            tc_singular_class_count(&ctx(2, 3), 1, TwoCycleClassKey { a: 1, b: 3 }, 1).is_err()
        );
    }

    #[test]
    fn total_examples() {
        let t = tc_count_total(&ctx(3, 2), 1).unwrap();
        assert_eq!(t.total, 15);
        assert_eq!(
            t.per_class,
            BTreeMap::from([
                (TwoCycleClassKey { a: 1, b: 1 }, 12),
                (TwoCycleClassKey { a: 2, b: 2 }, 3)
            ])
        );
        assert_eq!(tc_count_total(&ctx(3, 1), 1).unwrap().total, 5);
        assert_eq!(tc_count_total(&ctx(2, 2), 1).unwrap().total, 2);
        assert_eq!(tc_count_total(&ctx(2, 1), 1).unwrap().total, 1);
    }

    #[test]
    fn total_matches_brute_force_small_grid() {
        for (p, emax) in [(2u64, 9u32), (3, 4), (5, 2), (7, 2)] {
            for e in 1..=emax {
                for n in 1..=6 {
                    let c = ctx(p, e);
                    let t = tc_count_total(&c, n).unwrap();
                    let oracle = brute(p, e, n);
                    assert_eq!(t.total, oracle.values().sum::<u64>(), "p={p} e={e} n={n}");
                    assert_eq!(t.per_class, oracle, "p={p} e={e} n={n}");
                    if p != 2 {
                        assert_eq!(tc_count_total_divisor_form(&c, n).unwrap(), t.total);
                    }
                }
            }
        }
    }

    #[test]
    fn nonsingular_two_cycles_do_not_depend_on_e() {
        let g = PolySpec::new(vec![1, 1, 1]);
        let values: Vec<u64> = (1..=4)
            .map(|e| tc_count_nonsingular(&ctx(5, e), &g).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(
            tc_count_nonsingular(&ctx(3, 1), &PolySpec::power(1)).unwrap(),
            0
        );
    }
}
