//! Bit-packed dense linear algebra over GF(2).
//!
//! [`BinMat`] and [`BinVec`] carry every parity-check, generator and codeword
//! in the crate. All indices are 0-based.

mod bits;
mod echelon;
pub mod io;
mod mat;
mod vec;

pub use echelon::{Echelon, SpanBuilder};
pub use mat::{gcd, BinMat};
pub use vec::BinVec;

pub(crate) use bits::{dot, ones, popcount, words_for, xor_into};
