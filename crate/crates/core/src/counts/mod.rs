//! Closed-form counts of fixed points and two-cycles of `x ↦ x^{x^n}`.
//!
//! Ranges follow the usual convention: for odd `p` solutions are counted in
//! `{1, …, p^e (p-1)}` (every pair of residues modulo `p - 1` and `p^e`
//! appears once), for `p = 2` in `{1, …, 2^e}`.
//!
//! Solutions split into residue classes modulo `q`. A class is *nonsingular*
//! when the interpolated congruence has a unit derivative there, in which
//! case its count does not depend on `e`; singular classes pick up a power of
//! `p` given by [`lifting`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, ModulusContext};
use crate::error::{Error, Result};

mod fixed;
pub mod lifting;
mod two_cycle;

pub use fixed::*;
pub use two_cycle::*;

/// Residue `a mod q` naming the fixed-point class `G_{a,e}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct FixedClassKey(pub u64);

/// Residues `(a, b) mod q` naming the two-cycle class `T_{a,b,e}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct TwoCycleClassKey {
    pub a: u64,
    pub b: u64,
}

impl fmt::Display for FixedClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for TwoCycleClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl FromStr for FixedClassKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.trim()
            .parse()
            .map(Self)
            .map_err(|e| format!("bad class {s:?}: {e}"))
    }
}

impl FromStr for TwoCycleClassKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| format!("bad class {s:?}"))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| format!("bad class {s:?}"))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad class {s:?}: {e}"))
        };
        Ok(Self {
            a: parse(a)?,
            b: parse(b)?,
        })
    }
}

macro_rules! string_conversions {
    ($ty:ty) => {
        impl From<$ty> for String {
            fn from(key: $ty) -> String {
                key.to_string()
            }
        }

        impl TryFrom<String> for $ty {
            type Error = String;

            fn try_from(s: String) -> Result<Self, String> {
                s.parse()
            }
        }
    };
}

string_conversions!(FixedClassKey);
string_conversions!(TwoCycleClassKey);

/// Which family of lifting formulas applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    OddPCoprimeN,
    OddPDividingNSmallE,
    OddPDividingNLargeE,
    #[serde(rename = "p2-n-even")]
    P2NEven,
    #[serde(rename = "p2-n-odd")]
    P2NOdd,
}

impl Regime {
    /// Classify `(p, e, n)`. For odd `p` dividing `n` the cut is at
    /// `e = v_p(n)`, where the quadratic singular classes leave their plateau.
    pub fn of(ctx: &ModulusContext, n: u32) -> Self {
        let ell = lifting::p_valuation(n, ctx.p());
        match (ctx.p(), ell) {
            (2, 0) => Regime::P2NOdd,
            (2, _) => Regime::P2NEven,
            (_, 0) => Regime::OddPCoprimeN,
            _ if ctx.e() <= ell => Regime::OddPDividingNSmallE,
            _ => Regime::OddPDividingNLargeE,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::OddPCoprimeN => "odd-p-coprime-n",
            Regime::OddPDividingNSmallE => "odd-p-dividing-n-small-e",
            Regime::OddPDividingNLargeE => "odd-p-dividing-n-large-e",
            Regime::P2NEven => "p2-n-even",
            Regime::P2NOdd => "p2-n-odd",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A total together with its split into nonsingular solutions and per-class
/// counts. Classes with no solutions are left out of `per_class`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountBreakdown<K: Ord> {
    pub total: u64,
    pub nonsingular_total: u64,
    pub per_class: BTreeMap<K, u64>,
    pub regime: Regime,
}

impl<K: Ord> CountBreakdown<K> {
    /// Sum of the per-class counts.
    pub fn class_sum(&self) -> u64 {
        self.per_class.values().sum()
    }
}

/// Fixed points or two-cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "fixed")]
    Fixed,
    #[serde(rename = "two-cycle")]
    TwoCycle,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Fixed => "fixed",
            Kind::TwoCycle => "two-cycle",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        Err(Error::Domain("this formula is stated for odd primes only"))
    } else if !is_prime(p) {
        Err(Error::NotPrime(p))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_keys_roundtrip_through_strings() {
        let k = TwoCycleClassKey { a: 3, b: 12 };
        assert_eq!(k.to_string(), "(3,12)");
        assert_eq!("(3, 12)".parse::<TwoCycleClassKey>().unwrap(), k);
        assert_eq!("7".parse::<FixedClassKey>().unwrap(), FixedClassKey(7));
        assert!("(3;4)".parse::<TwoCycleClassKey>().is_err());
    }

    #[test]
    fn regimes() {
        let c = |p, e| ModulusContext::new(p, e).unwrap();
        assert_eq!(Regime::of(&c(3, 2), 1), Regime::OddPCoprimeN);
        assert_eq!(Regime::of(&c(3, 2), 9), Regime::OddPDividingNSmallE);
        assert_eq!(Regime::of(&c(3, 3), 9), Regime::OddPDividingNLargeE);
        assert_eq!(Regime::of(&c(2, 3), 4), Regime::P2NEven);
        assert_eq!(Regime::of(&c(2, 3), 5), Regime::P2NOdd);
        assert_eq!(Regime::P2NEven.to_string(), "p2-n-even");
    }
}
