//! Fixed points and two-cycles of the self-power map `x ↦ x^(x^n)` modulo
//! prime powers.
//!
//! The crate has two independent routes to every count:
//!
//! * [`counts`] evaluates closed forms built from gcd sums, divisor sums and
//!   singular-lifting multipliers, on top of the truncated p-adic machinery in
//!   [`padic`].
//! * [`oracle`] enumerates the congruences directly.
//!
//! [`verify`] runs both and reports where they agree.
//!
//! ```
//! use selfpower::{counts, ModulusContext};
//!
//! let ctx = ModulusContext::new(3, 2).unwrap();
//! let fixed = counts::fp_count_total(&ctx, 1).unwrap();
//! assert_eq!(fixed.total, 7);
//! ```

pub mod arith;
pub mod counts;
mod error;
pub mod oracle;
pub mod padic;
pub mod verify;

pub use arith::{ModulusContext, PolySpec};
pub use error::{Error, Result};

// Each chapter of the guide is compiled as a doc-test module so the snippets
// in `book/` cannot drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/modular.md")]
    mod modular {}
    #[doc = include_str!("../../../book/src/padic.md")]
    mod padic {}
    #[doc = include_str!("../../../book/src/hensel.md")]
    mod hensel {}
    #[doc = include_str!("../../../book/src/fixed_points.md")]
    mod fixed_points {}
    #[doc = include_str!("../../../book/src/two_cycles.md")]
    mod two_cycles {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
