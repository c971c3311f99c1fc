//! Exact tools for equal sums of like powers.
//!
//! A [`Solution`] is a pair of integer multisets whose power sums agree for
//! every exponent `1..=k`. The crate verifies candidates, instantiates the
//! parametric families for degrees 2, 3 and 5 ([`families`]), builds degree-4
//! and degree-5 solutions from rational points on elliptic curves
//! ([`elliptic`]) and searches bounded boxes exhaustively ([`search`]).
//!
//! ```
//! use multigrade::families::k3_family;
//! use multigrade::Solution;
//!
//! let s = k3_family(2, 1)?.normalized()?;
//! assert_eq!(s, Solution::from_i64(3, &[29, 22], &[30, 20, 4, -3])?);
//! # Ok::<(), multigrade::Error>(())
//! ```

pub mod elliptic;
pub mod error;
pub mod families;
pub mod json;
pub mod rational;
pub mod search;
pub mod system;

pub use error::{Error, Result};
pub use system::{Solution, SystemShape, TEPair, Term};

// The guide's and the README's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/solutions.md")]
    mod solutions {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/elliptic.md")]
    mod elliptic {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
