//! Exact modular arithmetic on non-negative integers.
//!
//! Moduli are `u64` values bounded by [`MAX_MODULUS`], so every product of two
//! residues fits in a `u128`. Bases and exponents that may exceed a machine
//! word go through the `*_big` entry points, which reduce to the word-sized
//! fast path as soon as the exponent has been reduced modulo the group
//! exponent.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted anywhere in the crate.
pub const MAX_MODULUS: u64 = 1 << 62;

/// Integers above this bound are refused by the trial-division factorizer.
pub const TRIAL_DIVISION_LIMIT: u64 = 1 << 40;

/// `a * b mod m` without overflow.
#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exponent mod m` by square-and-multiply.
pub fn powmod(base: u64, mut exponent: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exponent > 0 {
        if exponent & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exponent >>= 1;
    }
    acc
}

/// [`powmod`] for an unbounded base and exponent.
pub fn powmod_big(base: &BigUint, exponent: &BigUint, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be positive");
    match exponent.to_u64() {
        Some(small) => powmod((base % m).to_u64().unwrap(), small, m),
        None => base
            .modpow(exponent, &BigUint::from(m))
            .to_u64()
            .expect("residue fits the modulus"),
    }
}

/// Greatest common divisor of a list of integers, with `gcd(a, 0) = |a|`.
pub fn gcd_many(values: &[i64]) -> u64 {
    values
        .iter()
        .fold(0u64, |acc, &v| acc.gcd(&v.unsigned_abs()))
}

/// Residue of `value` in `0..m`.
#[inline]
pub fn reduce_signed(value: i128, m: u64) -> u64 {
    value.rem_euclid(m as i128) as u64
}

/// Modular inverse of `x` modulo `m`.
pub fn inverse_mod(x: u64, m: u64) -> Result<u64> {
    if m == 1 {
        return Ok(0);
    }
    let (g, s, _) = extended_gcd(x as i128 % m as i128, m as i128);
    if g != 1 {
        return Err(Error::NonUnit {
            value: x,
            modulus: m,
        });
    }
    Ok(reduce_signed(s, m))
}

fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let quotient = old_r / r;
        (old_r, r) = (r, old_r - quotient * r);
        (old_s, s) = (s, old_s - quotient * s);
        (old_t, t) = (t, old_t - quotient * t);
    }
    (old_r, old_s, old_t)
}

/// Prime factorization by trial division, ascending by prime.
pub fn factorize(m: u64) -> Result<Vec<(u64, u32)>> {
    factorize_with_limit(m, TRIAL_DIVISION_LIMIT)
}

/// [`factorize`] with an explicit refusal bound.
pub fn factorize_with_limit(mut m: u64, limit: u64) -> Result<Vec<(u64, u32)>> {
    assert!(m >= 1, "cannot factor zero");
    if m > limit {
        return Err(Error::FactorizationLimit { value: m, limit });
    }
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut k = 0;
            while m.is_multiple_of(d) {
                m /= d;
                k += 1;
            }
            factors.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(factors)
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All divisors of `m` in ascending order.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    let mut out = vec![1u64];
    for (prime, k) in factorize(m)? {
        let len = out.len();
        let mut power = 1u64;
        for _ in 0..k {
            power *= prime;
            for i in 0..len {
                out.push(out[i] * power);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> Result<u64> {
    Ok(factorize(m)?
        .into_iter()
        .map(|(prime, k)| (prime - 1) * prime.pow(k - 1))
        .product())
}

/// Carmichael exponent of a prime power.
pub fn carmichael_prime_power(p: u64, k: u32) -> u64 {
    match (p, k) {
        (_, 0) => 1,
        (2, 1) => 1,
        (2, 2) => 2,
        (2, k) => 1 << (k - 2),
        (p, k) => (p - 1) * p.pow(k - 1),
    }
}

/// Carmichael exponent `λ(m)`, the exponent of `(Z/mZ)^×`.
pub fn carmichael_lambda(m: u64) -> Result<u64> {
    Ok(factorize(m)?
        .into_iter()
        .map(|(prime, k)| carmichael_prime_power(prime, k))
        .fold(1u64, |acc, l| acc.lcm(&l)))
}

/// Multiplicative order of `x` modulo `m`.
///
/// Starts from `λ(m)` and strips prime factors while the power stays 1.
pub fn mult_order(x: u64, m: u64) -> Result<u64> {
    if x.gcd(&m) != 1 {
        return Err(Error::NonUnit {
            value: x,
            modulus: m,
        });
    }
    let lambda = carmichael_lambda(m)?;
    order_dividing(x, m, lambda)
}

/// Order of a unit `x` modulo `m`, given a multiple `exponent` of it.
pub(crate) fn order_dividing(x: u64, m: u64, exponent: u64) -> Result<u64> {
    let mut order = exponent;
    for (prime, _) in factorize(exponent)? {
        while order.is_multiple_of(prime) && powmod(x, order / prime, m) == 1 % m {
            order /= prime;
        }
    }
    Ok(order)
}

/// The unique `x mod m1*m2` with `x ≡ r1 (mod m1)` and `x ≡ r2 (mod m2)`.
pub fn crt_combine(r1: u64, m1: u64, r2: u64, m2: u64) -> Result<u64> {
    if m1.gcd(&m2) != 1 {
        return Err(Error::NotCoprime(m1, m2));
    }
    let m = m1 as u128 * m2 as u128;
    if m > MAX_MODULUS as u128 {
        return Err(Error::Domain("CRT modulus exceeds the supported range"));
    }
    let m = m as u64;
    let inv = inverse_mod(m1 % m2, m2)?;
    let (r1, r2) = (r1 % m1, r2 % m2);
    // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
    let diff = reduce_signed(r2 as i128 - r1 as i128, m2);
    let t = mulmod(diff, inv, m2);
    Ok((r1 as u128 + m1 as u128 * t as u128) as u64 % m)
}

/// A prime power `p^e` together with the derived constants every operation
/// needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModulusContext {
    p: u64,
    e: u32,
    modulus: u64,
    q: u64,
    phi: u64,
    lambda: u64,
}

impl ModulusContext {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::ZeroExponent);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let too_large = Error::ModulusTooLarge { p, e };
        let modulus = p.checked_pow(e).ok_or(too_large.clone())?;
        // The full search range p^e (p-1) must also be addressable.
        match modulus.checked_mul(p.max(2) - 1) {
            Some(range) if range <= MAX_MODULUS => {}
            _ => return Err(too_large),
        }
        let q = if p == 2 { 4 } else { p };
        Ok(Self {
            p,
            e,
            modulus,
            q,
            phi: modulus / p * (p - 1),
            lambda: carmichael_prime_power(p, e),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `p^e`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// 4 when `p = 2`, otherwise `p`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// `φ(p^e)`.
    pub fn phi(&self) -> u64 {
        self.phi
    }

    /// Carmichael exponent of `(Z/p^e)^×`.
    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    /// `φ(q)`: the number of roots of unity in the p-adic units.
    pub fn phi_q(&self) -> u64 {
        self.q / self.p * (self.p - 1)
    }

    /// The same prime at another exponent.
    pub fn with_exponent(&self, e: u32) -> Result<Self> {
        Self::new(self.p, e)
    }

    pub fn is_unit(&self, x: u64) -> bool {
        !x.is_multiple_of(self.p)
    }

    pub(crate) fn check_unit(&self, x: u64) -> Result<()> {
        if self.is_unit(x) {
            Ok(())
        } else {
            Err(Error::NonUnit {
                value: x,
                modulus: self.p,
            })
        }
    }
}

impl fmt::Display for ModulusContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)
    }
}

/// `x^(x^n) mod p^e` for a unit `x`.
///
/// The tower exponent is reduced modulo `λ(p^e)`, which is sound because `x`
/// is a unit.
pub fn self_power(x: u64, n: u32, ctx: &ModulusContext) -> Result<u64> {
    ctx.check_unit(x)?;
    let lambda = ctx.lambda();
    let exponent = powmod(x % lambda, n as u64, lambda);
    Ok(powmod(x, exponent, ctx.modulus()))
}

/// [`self_power`] for an unbounded `x`.
///
/// The base is reduced modulo `p^e` and the tower exponent modulo `λ(p^e)`;
/// the two reductions are independent since `λ ∤ p^e` for odd `p`.
pub fn self_power_big(x: &BigUint, n: u32, ctx: &ModulusContext) -> Result<u64> {
    let base = (x % ctx.modulus()).to_u64().unwrap();
    ctx.check_unit(base)?;
    let lambda = ctx.lambda();
    let exponent = powmod((x % lambda).to_u64().unwrap(), n as u64, lambda);
    Ok(powmod(base, exponent, ctx.modulus()))
}

/// An integer polynomial `g(z) = Σ c_i z^i`.
///
/// `pure_power` is `Some(n)` exactly when the coefficients encode `z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolySpec {
    coefficients: Vec<i64>,
    pure_power: Option<u32>,
}

impl PolySpec {
    /// Build from ascending coefficients; trailing zeros are dropped.
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        let pure_power = match coefficients.split_last() {
            Some((1, rest)) if !rest.is_empty() && rest.iter().all(|&c| c == 0) => {
                Some(rest.len() as u32)
            }
            _ => None,
        };
        Self {
            coefficients,
            pure_power,
        }
    }

    /// `z^n` with `n ≥ 1`.
    pub fn power(n: u32) -> Self {
        assert!(n >= 1, "pure power needs n >= 1");
        let mut coefficients = vec![0; n as usize + 1];
        coefficients[n as usize] = 1;
        Self::new(coefficients)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn pure_power(&self) -> Option<u32> {
        self.pure_power
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// `g(z) mod m` in `0..m`.
    pub fn eval_mod(&self, z: u64, m: u64) -> u64 {
        assert!(m >= 1, "modulus must be positive");
        if m == 1 {
            return 0;
        }
        if let Some(n) = self.pure_power {
            return powmod(z, n as u64, m);
        }
        let z = z % m;
        self.coefficients.iter().rev().fold(0u64, |acc, &c| {
            let c = reduce_signed(c as i128, m);
            ((mulmod(acc, z, m) as u128 + c as u128) % m as u128) as u64
        })
    }

    /// `g(z) mod m` for a signed argument.
    pub fn eval_mod_signed(&self, z: i64, m: u64) -> u64 {
        self.eval_mod(reduce_signed(z as i128, m), m)
    }

    /// Exact value `g(z)`.
    pub fn eval_exact(&self, z: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * z + BigInt::from(c))
    }

    /// Formal derivative `g'`.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as i64)
                .collect(),
        )
    }

    /// Multiply every coefficient by `k`.
    pub fn scaled(&self, k: i64) -> Self {
        Self::new(self.coefficients.iter().map(|&c| c * k).collect())
    }
}

impl fmt::Display for PolySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (i, abs) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => f.write_str("z")?,
                (1, a) => write!(f, "{a}z")?,
                (i, 1) => write!(f, "z^{i}")?,
                (i, a) => write!(f, "{a}z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Number of `z in 0..d` with `g(z) + shift ≡ 0 (mod d)`, optionally
/// restricted to `gcd(z, d) = 1`.
///
/// Gives `N_{g-1}(d)` with `shift = -1`. For `d = 1` the single residue 0
/// counts, so the result is 1.
pub fn count_roots(g: &PolySpec, shift: i64, d: u64, coprime_only: bool) -> u64 {
    assert!(d >= 1, "modulus must be positive");
    let shift = reduce_signed(shift as i128, d);
    (0..d)
        .filter(|&z| !coprime_only || z.gcd(&d) == 1)
        .filter(|&z| (g.eval_mod(z, d) + shift).is_multiple_of(d))
        .count() as u64
}

/// Number of pairs `(z1, z2)` modulo `d` with `g(z1) g(z2) ≡ 1 (mod d)`.
pub fn count_pair_roots(g: &PolySpec, d: u64) -> u64 {
    assert!(d >= 1, "modulus must be positive");
    let values: Vec<u64> = (0..d).map(|z| g.eval_mod(z, d)).collect();
    let mut histogram = vec![0u64; d as usize];
    for &v in &values {
        histogram[v as usize] += 1;
    }
    // Each unit value u pairs with the multiplicity of u^{-1}.
    (0..d)
        .filter_map(|u| inverse_mod(u, d).ok().map(|inv| (u, inv)))
        .map(|(u, inv)| histogram[u as usize] * histogram[inv as usize])
        .sum()
}
