//! Finite-ring laboratory: constructions, element classification,
//! decision procedures for clean/nil-clean-style properties, and a
//! harness of structure-theorem checks over a ring catalog.

pub mod error;
pub mod par;
pub mod ring;
pub mod construct;
pub mod iso;
pub mod classify;
pub mod expr;
pub mod harness;
pub mod cayley;

pub use error::{Result, RingError};
