//! Exact computer algebra for the doubly bounded key identity behind
//! Göllnitz's partition theorem, together with the partition combinatorics
//! and polynomial theta-type identities that follow from it.
//!
//! Everything is computed over arbitrary-precision integers; every check in
//! this crate is an exact equality.

pub mod corollaries;
pub mod error;
pub mod keyid;
pub mod partcomb;
pub mod qcomb;
pub mod qcore;
pub mod sweep;

pub use error::{Error, Result};
pub use qcore::{BivarLaurent, LaurentPoly, TruncSeries};
