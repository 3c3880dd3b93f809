//! Builders for every code family, all producing [`CssCode`] or
//! [`NonCssCode`] values.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BinMat;

mod families;
mod hyperbicycle;

pub use families::{
    bicycle_k, generalized_bicycle, haah_code, haah_matrices, hypergraph_product,
    noncss_bicycle, trace_dual_generator, BicycleK, TraceDualGenerator,
};
pub use hyperbicycle::{
    bicycle_spec, circulant_spec, circulant_split, hyperbicycle, hyperbicycle_noncss, repeated_cyclic_inputs,
    single_term_hyperbicycle, tiled_matrices, BlockDims, HyperbicycleSpec, SpecShape, Tiled,
};

/// Family name plus the parameters a code was built from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub family: String,
    pub params: BTreeMap<String, String>,
}

impl Provenance {
    pub fn new(family: &str) -> Self {
        Self {
            family: family.to_string(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.family, params.join(", "))
    }
}

/// CSS code with X-type generators `gx` and Z-type generators `gz`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    pub gx: BinMat,
    pub gz: BinMat,
    pub provenance: Provenance,
    rank_x: usize,
    rank_z: usize,
}

impl CssCode {
    pub fn new(gx: BinMat, gz: BinMat, provenance: Provenance) -> Result<Self> {
        if gx.cols() != gz.cols() {
            return Err(Error::Dimension(format!(
                "G_X has {} columns, G_Z has {}",
                gx.cols(),
                gz.cols()
            )));
        }
        if !gx.checked_mul(&gz.transpose())?.is_zero() {
            return Err(Error::NonCommuting(format!("G_X G_Z^T != 0 for {provenance}")));
        }
        let (rank_x, rank_z) = (gx.rank(), gz.rank());
        Ok(Self {
            gx,
            gz,
            provenance,
            rank_x,
            rank_z,
        })
    }

    pub fn n(&self) -> usize {
        self.gx.cols()
    }

    pub fn rank_x(&self) -> usize {
        self.rank_x
    }

    pub fn rank_z(&self) -> usize {
        self.rank_z
    }

    /// `N - rank G_X - rank G_Z`.
    pub fn k(&self) -> usize {
        self.n() - self.rank_x - self.rank_z
    }
}

/// Stabilizer code with check matrix `H = (A|B)`: row `(a|b)` stands for
/// the Pauli with X part `a` and Z part `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonCssCode {
    pub h: BinMat,
    pub provenance: Provenance,
    rank: usize,
}

impl NonCssCode {
    pub fn new(h: BinMat, provenance: Provenance) -> Result<Self> {
        if !h.cols().is_multiple_of(2) {
            return Err(Error::Dimension(format!("H has odd column count {}", h.cols())));
        }
        let code = Self {
            rank: h.rank(),
            h,
            provenance,
        };
        let (a, b) = (code.a(), code.b());
        let sym = a.checked_mul(&b.transpose())?.checked_add(&b.checked_mul(&a.transpose())?)?;
        if !sym.is_zero() {
            return Err(Error::NonCommuting(format!(
                "A B^T + B A^T != 0 for {}",
                code.provenance
            )));
        }
        Ok(code)
    }

    pub fn from_parts(a: &BinMat, b: &BinMat, provenance: Provenance) -> Result<Self> {
        Self::new(a.hstack(b)?, provenance)
    }

    pub fn n(&self) -> usize {
        self.h.cols() / 2
    }

    pub fn a(&self) -> BinMat {
        self.h.select_cols(&(0..self.n()).collect::<Vec<_>>())
    }

    pub fn b(&self) -> BinMat {
        self.h.select_cols(&(self.n()..2 * self.n()).collect::<Vec<_>>())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn k(&self) -> usize {
        self.n() - self.rank
    }
}

/// `H = (A|B)` to the CSS code `G_X = (A,B)`, `G_Z = (B,A)` on twice as many
/// qubits.
pub fn noncss_to_css(code: &NonCssCode) -> Result<CssCode> {
    let (a, b) = (code.a(), code.b());
    CssCode::new(
        a.hstack(&b)?,
        b.hstack(&a)?,
        Provenance::new("css-double").with("from", &code.provenance),
    )
}

/// Inverse of [`noncss_to_css`]; requires `G_Z` to be `G_X` with its two
/// halves swapped.
pub fn css_to_noncss(code: &CssCode) -> Result<NonCssCode> {
    let n = code.n();
    if !n.is_multiple_of(2) {
        return Err(Error::Dimension(format!("odd block length {n}")));
    }
    let left: Vec<usize> = (0..n / 2).collect();
    let right: Vec<usize> = (n / 2..n).collect();
    let (a, b) = (code.gx.select_cols(&left), code.gx.select_cols(&right));
    if code.gz != b.hstack(&a)? {
        return Err(Error::Dimension("G_Z is not (B, A) for G_X = (A, B)".into()));
    }
    let prov = match code.provenance.params.get("from") {
        Some(orig) if code.provenance.family == "css-double" => Provenance::new("css-half").with("from", orig),
        _ => Provenance::new("css-half").with("from", &code.provenance),
    };
    NonCssCode::from_parts(&a, &b, prov)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutation_is_enforced() {
        let gx = BinMat::from_strs(&["11"]).unwrap();
        let gz = BinMat::from_strs(&["10"]).unwrap();
        assert!(matches!(
            CssCode::new(gx, gz, Provenance::new("t")),
            Err(Error::NonCommuting(_))
        ));
        let h = BinMat::from_strs(&["1000", "0010"]).unwrap();
        assert!(NonCssCode::new(h, Provenance::new("t")).is_err());
    }

    #[test]
    fn identity_pair_doubles() {
        let i2 = BinMat::identity(2);
        let code = NonCssCode::from_parts(&i2, &i2, Provenance::new("t")).unwrap();
        assert_eq!((code.n(), code.k()), (2, 0));
        let css = noncss_to_css(&code).unwrap();
        assert_eq!((css.n(), css.k()), (4, 0));
        let back = css_to_noncss(&css).unwrap();
        assert_eq!(back.h, code.h);
    }
}
