//! Counting minimal models of genus one curves over the rationals.
//!
//! The crate computes invariants of genus one equations of degrees 1 to 4,
//! runs Tate's algorithm to find local reduction data, enumerates the
//! component tuples that classify minimal degree-n models at a prime, and
//! multiplies the local counts into a global count.

pub mod arith;
pub mod cli;
pub mod counting;
pub mod equations;
pub mod error;
pub mod fiberdata;
pub mod fixtures;
pub mod global;
pub mod localred;
pub mod matrix;

pub use error::{Error, Result};
