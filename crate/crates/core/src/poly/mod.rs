//! Polynomials over GF(2) and GF(4) and the factorization of `x^c - 1`.

mod binary;
mod f4;
mod factor;
mod parse;

pub use binary::BinPoly;
pub use f4::{f4_trace_inner, f4_vec_to_binary, F4Poly, F4};
pub use factor::{
    factor_by_trial_division, factor_xc_minus_1, irreducibles_up_to, is_irreducible,
    Factorization,
};

/// Same as [`BinPoly::is_palindromic`].
pub fn is_palindromic(h: &BinPoly) -> bool {
    h.is_palindromic()
}
