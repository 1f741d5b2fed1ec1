use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("exponent e must be at least 1")]
    ZeroExponent,

    #[error("{p}^{e} (times p-1) does not fit the supported modulus range")]
    ModulusTooLarge { p: u64, e: u32 },

    #[error("factoring {value} exceeds the trial-division limit {limit}")]
    FactorizationLimit { value: u64, limit: u64 },

    #[error("{value} is not a unit modulo {modulus}")]
    NonUnit { value: u64, modulus: u64 },

    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("{value} is not congruent to 1 modulo {q}")]
    NotOneUnit { value: u64, q: u64 },

    #[error("argument {value} has p-adic valuation below {required}")]
    InsufficientValuation { value: u64, required: u32 },

    #[error("root {root} is singular modulo {p}; Hensel lifting does not apply")]
    SingularRoot { root: u64, p: u64 },

    #[error("{value} is not a root of f modulo {p}")]
    NotARoot { value: u64, p: u64 },

    #[error("Newton iteration did not converge modulo {0}")]
    NoConvergence(u64),

    #[error("class {class} is outside the domain of this formula: {reason}")]
    ClassDomain { class: String, reason: &'static str },

    #[error("{0}")]
    Domain(&'static str),

    #[error("enumeration needs {needed} evaluations but the budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
