//! Duality of one-variable multiple polylogarithms, verified numerically
//! and in exact rational arithmetic.
//!
//! The crate has an exact symbolic layer and a high-precision numerical
//! layer:
//!
//! - [`index`] / [`word`]: augmented indices, the word algebra over
//!   `{e0, e1, ez}`, the anti-automorphism `tau`, basis expansion and
//!   dual-index computation — all in exact rational arithmetic.
//! - [`mpl`]: multiple polylogarithms `Li_k(z_1,...,z_r)`, the augmented
//!   series `Li~(k; z)` and the linear map `L`, evaluated with
//!   Euler-Maclaurin-accelerated nested summation.
//! - [`hyper`]: Gauss and q-hypergeometric series, the connectors, and
//!   exact coefficient-level checks of the contiguous relations.
//! - [`connected`]: connected sums pairing two chains through the
//!   connector, transport relations, and transport-chain certificates.
//! - [`qana`]: both q-analogues of the augmented series and their duality.
//! - [`suites`] / [`report`]: the verification suites and their
//!   JSON/CSV reports.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `mpl-duality` binary for the command-line front end.

pub mod cache;
pub mod connected;
pub mod error;
pub mod hyper;
pub mod index;
pub mod mpl;
pub mod precision;
pub mod qana;
pub mod real;
pub mod report;
pub mod suites;
pub mod tails;
pub mod word;

pub use error::{Error, Result};
pub use index::AugmentedIndex;
pub use precision::{EvalResult, PrecisionContext, QContext, QModel};
pub use word::{dual_index, enumerate_admissible, word_of_index};
