//! Exact type B/D Temperley-Lieb calculus over Q(q): blob diagrams, the
//! Schur-Weyl functor to tensor powers of the two-dimensional module,
//! Jones-Wenzl projectors and type D theta networks.

pub mod cli;
pub mod error;
pub mod jw;
pub mod qfield;
pub mod rep;
pub mod report;
pub mod suites;
pub mod theta;
pub mod tldiag;

pub use error::{Error, Result};
