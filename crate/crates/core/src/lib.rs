//! Complete elliptic integrals of the first and second kind, closed-form
//! enclosures for them, and a harness that checks every enclosure against
//! independent reference evaluators.
//!
//! ```
//! use ellip_core::bounds::e_log_bounds;
//! use ellip_core::reference::{e_agm, Modulus};
//!
//! let t = Modulus::new(0.5)?;
//! let e = e_agm(t)?.value;
//! assert!(e_log_bounds(t).contains(e, 0.0));
//! # Ok::<(), ellip_core::error::Error>(())
//! ```

// `!(x > 0.0)` is used on purpose so that NaN is rejected too, and quadrature
// nodes are kept at the precision they are tabulated with.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod bounds;
pub mod combinatorics;
pub mod error;
pub mod interval;
pub mod reference;
pub mod verify;

// The guide's code blocks run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/reference.md")]
    mod reference {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/combinatorics.md")]
    mod combinatorics {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/reports.md")]
    mod reports {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/findings.md")]
    mod findings {}
}
