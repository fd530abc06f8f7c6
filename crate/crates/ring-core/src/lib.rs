//! Exact arithmetic for the finite rings used by the verifier suite, plus a
//! free noncommutative polynomial ring for symbolic identity checking.
//!
//! The ring zoo is deliberately small: prime fields, extension fields with a
//! deterministically chosen modulus, modular integers, square matrix rings
//! over any of these, finite products, and the free ring `Z<a,b,...>`.
//! Every element is represented exactly; there is no floating point anywhere.

mod desc;
mod element;
mod fppoly;
mod free;
pub mod canon;
pub mod gf2;
pub mod linalg;
pub mod parse;
pub mod units;

pub use desc::{gf, mat, prod, zmod, free_ring, parse_ring, Ring, RingDesc};
pub use element::{elements as elements_of, RingElement, Value};
pub use free::{FreePoly, Word};

use thiserror::Error;

/// Errors shared across the ring layer.
#[derive(Debug, Error)]
pub enum RingError {
    #[error("descriptor mismatch: {0} vs {1}")]
    Mismatch(String, String),
    #[error("ring is infinite: {0}")]
    Infinite(String),
    #[error("inner ring is not a field: {0}")]
    NotAField(String),
    #[error("operation not supported: {0}")]
    NotSupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("state space too large: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, RingError>;
