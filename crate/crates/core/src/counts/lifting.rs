//! Exponents `k` such that a singular class grows by `p^k` (or, for `p = 2`,
//! has exactly `2^k` elements) modulo `p^e`.
//!
//! Each regime is written as its two branches so that the branches can be
//! compared at the values of `e` where they overlap.

/// `v_p(n)` for `n ≥ 1`.
pub fn p_valuation(n: u32, p: u64) -> u32 {
    assert!(n >= 1, "n must be positive");
    let (mut n, mut k) = (n as u64, 0);
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}

/// Plateau branch: every lift of the residue class is a solution.
pub fn plateau(e: u32) -> u32 {
    e - 1
}

/// Quadratic branch, `⌊(e + ℓ)/2⌋`, for valuation `2 v(x - ξ) + ℓ`.
pub fn quadratic(e: u32, ell: u32) -> u32 {
    (e + ell) / 2
}

/// Cubic branch, `⌊(e + ℓ)/3⌋ + ⌊(e + ℓ + 1)/3⌋`, for valuation
/// `3 v(y - b) + 2ℓ`.
pub fn cubic(e: u32, ell: u32) -> u32 {
    (e + ell) / 3 + (e + ell + 1) / 3
}

/// Odd `p`, a fixed-point class (or a two-cycle class with `b^n ≠ -1`)
/// whose root of unity satisfies `ξ^n = 1`; `ell = v_p(n)`.
pub fn odd_quadratic_exponent(e: u32, ell: u32) -> u32 {
    if ell > 0 && e <= ell {
        plateau(e)
    } else {
        quadratic(e, ell)
    }
}

/// Odd `p`, a two-cycle class with `b^n = -1`.
pub fn odd_cubic_exponent(e: u32, ell: u32) -> u32 {
    if ell > 0 && e <= 2 * ell {
        plateau(e)
    } else {
        cubic(e, ell)
    }
}

/// `p = 2` plateau: all `2^(e-2)` odd residues in the class modulo 4.
pub fn two_adic_plateau(e: u32) -> u32 {
    e - 2
}

/// `p = 2`, `e ≥ 2`: exponent of `|G_{ξ,e}|`.
pub fn two_adic_fixed_exponent(e: u32, n: u32, xi_is_one: bool) -> u32 {
    assert!(e >= 2);
    let ell = p_valuation(n, 2);
    if ell == 0 && !xi_is_one {
        if e <= 3 {
            two_adic_plateau(e)
        } else {
            1
        }
    } else if e <= 4 + ell {
        two_adic_plateau(e)
    } else {
        quadratic(e, ell)
    }
}

/// `p = 2`, `e ≥ 2`: exponent of `|T_{b,b,e}|`.
pub fn two_adic_two_cycle_exponent(e: u32, n: u32, b_is_one: bool) -> u32 {
    assert!(e >= 2);
    let ell = p_valuation(n, 2);
    if ell == 0 && !b_is_one {
        if e <= 4 {
            two_adic_plateau(e)
        } else {
            cubic(e, 0)
        }
    } else if e <= ell + 4 {
        two_adic_plateau(e)
    } else {
        quadratic(e, ell + 1)
    }
}
