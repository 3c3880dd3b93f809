use serde::Serialize;

use super::{CssCode, NonCssCode, Provenance};
use crate::error::{Error, Result};
use crate::gf2::{gcd, BinMat};
use crate::poly::BinPoly;

/// Inputs of the hyperbicycle construction: `c` blocks `a_i` (all
/// `r1 x n1`), `c` blocks `b_i` (all `r2 x n2`) and the boundary shift `chi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbicycleSpec {
    pub c: usize,
    pub chi: usize,
    pub a: Vec<BinMat>,
    pub b: Vec<BinMat>,
}

/// `(r1, n1, r2, n2)`.
pub type BlockDims = (usize, usize, usize, usize);

impl HyperbicycleSpec {
    pub fn new(c: usize, chi: usize, a: Vec<BinMat>, b: Vec<BinMat>) -> Result<Self> {
        let spec = Self { c, chi, a, b };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<BlockDims> {
        if self.c == 0 {
            return Err(Error::Invalid("c must be positive".into()));
        }
        if gcd(self.c, self.chi) != 1 {
            return Err(Error::Commensurate {
                c: self.c,
                chi: self.chi,
            });
        }
        if self.a.len() != self.c || self.b.len() != self.c {
            return Err(Error::Dimension(format!(
                "expected {} blocks each, got {} a-blocks and {} b-blocks",
                self.c,
                self.a.len(),
                self.b.len()
            )));
        }
        let shape = |m: &BinMat| (m.rows(), m.cols());
        let (r1, n1) = shape(&self.a[0]);
        let (r2, n2) = shape(&self.b[0]);
        if let Some(i) = self.a.iter().position(|m| shape(m) != (r1, n1)) {
            return Err(Error::Dimension(format!("a_{i} is not {r1}x{n1}")));
        }
        if let Some(i) = self.b.iter().position(|m| shape(m) != (r2, n2)) {
            return Err(Error::Dimension(format!("b_{i} is not {r2}x{n2}")));
        }
        Ok((r1, n1, r2, n2))
    }

    pub fn dims(&self) -> BlockDims {
        let (a, b) = (&self.a[0], &self.b[0]);
        (a.rows(), a.cols(), b.rows(), b.cols())
    }

    /// `c (r1 n2 + r2 n1)`.
    pub fn block_length(&self) -> usize {
        let (r1, n1, r2, n2) = self.dims();
        self.c * (r1 * n2 + r2 * n1)
    }

    pub fn is_square(&self) -> bool {
        let (r1, n1, r2, n2) = self.dims();
        r1 == n1 && r2 == n2
    }

    /// `Σ a_i` and `Σ b_i`.
    pub fn block_sums(&self) -> (BinMat, BinMat) {
        let sum = |ms: &[BinMat]| {
            let mut acc = BinMat::zeros(ms[0].rows(), ms[0].cols());
            for m in ms {
                acc.add_assign(m);
            }
            acc
        };
        (sum(&self.a), sum(&self.b))
    }

    fn provenance(&self, family: &str) -> Provenance {
        let (r1, n1, r2, n2) = self.dims();
        Provenance::new(family)
            .with("c", self.c)
            .with("chi", self.chi)
            .with("a", format!("{r1}x{n1}"))
            .with("b", format!("{r2}x{n2}"))
    }
}

/// The four tiled matrices. The a-side is `H1 = Σ S_χ I_i ⊗ a_i` and
/// `H̃1 = Σ S_χ^T I_i^T ⊗ a_i^T`. The b-side places `b_i` with stride `χ`:
/// `H2 = Σ b_i ⊗ I_i S_χ`, `H̃2 = Σ b_i^T ⊗ S_χ^T I_{χi}^T`.
///
/// Up to row order these are the block circulants `Σ I_i ⊗ a_i` and
/// `Σ b_i ⊗ I_{χi}`, so every tiled code shares the block shift `I_1` and
/// `χ` twists the periodic boundary relative to `χ = 1`. Applying `S_χ I_i`
/// on both sides would only reorder the rows of `G_X` and `G_Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiled {
    pub h1: BinMat,
    pub h2: BinMat,
    pub h1t: BinMat,
    pub h2t: BinMat,
}

pub fn tiled_matrices(spec: &HyperbicycleSpec) -> Result<Tiled> {
    let (r1, n1, r2, n2) = spec.validate()?;
    let c = spec.c;
    let s = BinMat::skew_perm(c, spec.chi)?;
    let mut t = Tiled {
        h1: BinMat::zeros(c * r1, c * n1),
        h2: BinMat::zeros(r2 * c, n2 * c),
        h1t: BinMat::zeros(c * n1, c * r1),
        h2t: BinMat::zeros(n2 * c, r2 * c),
    };
    for i in 0..c {
        let shift = BinMat::circshift_perm(c, i as i64);
        let strided = BinMat::circshift_perm(c, (i * spec.chi) as i64);
        let a_fwd = s.checked_mul(&shift)?;
        let a_back = s.transpose().checked_mul(&shift.transpose())?;
        let b_fwd = shift.checked_mul(&s)?;
        let b_back = s.transpose().checked_mul(&strided.transpose())?;
        t.h1.add_assign(&a_fwd.kron(&spec.a[i]));
        t.h2.add_assign(&spec.b[i].kron(&b_fwd));
        t.h1t.add_assign(&a_back.kron(&spec.a[i].transpose()));
        t.h2t.add_assign(&spec.b[i].transpose().kron(&b_back));
    }
    Ok(t)
}

/// `G_X = (E_b ⊗ H1, H2 ⊗ E_a)`, `G_Z = (H̃2 ⊗ Ẽ_a, Ẽ_b ⊗ H̃1)`.
pub fn hyperbicycle(spec: &HyperbicycleSpec) -> Result<CssCode> {
    let (r1, n1, r2, n2) = spec.validate()?;
    let t = tiled_matrices(spec)?;
    let gx = BinMat::identity(r2)
        .kron(&t.h1)
        .hstack(&t.h2.kron(&BinMat::identity(r1)))?;
    let gz = t
        .h2t
        .kron(&BinMat::identity(n1))
        .hstack(&BinMat::identity(n2).kron(&t.h1t))?;
    CssCode::new(gx, gz, spec.provenance("hyperbicycle"))
}

/// `H = (E_b ⊗ H1 | H2 ⊗ E_a)` on `c n1 n2` qubits. Needs square blocks
/// with `H1 = H̃1` and `H2 = H̃2`.
pub fn hyperbicycle_noncss(spec: &HyperbicycleSpec) -> Result<NonCssCode> {
    let (r1, _, r2, _) = spec.validate()?;
    if !spec.is_square() {
        return Err(Error::Dimension("non-CSS hyperbicycle needs square blocks".into()));
    }
    let t = tiled_matrices(spec)?;
    if t.h1 != t.h1t || t.h2 != t.h2t {
        return Err(Error::Invalid(
            "non-CSS hyperbicycle needs H1 = H~1 and H2 = H~2".into(),
        ));
    }
    NonCssCode::from_parts(
        &BinMat::identity(r2).kron(&t.h1),
        &t.h2.kron(&BinMat::identity(r1)),
        spec.provenance("hyperbicycle-noncss"),
    )
}

/// Blocks `a_i` with `Σ I_i ⊗ a_i` equal to the circulant of `p` on
/// `c * n_small` bits.
pub fn circulant_split(n_small: usize, c: usize, p: &BinPoly) -> Vec<BinMat> {
    let big = c * n_small;
    let coef = p.rem(&BinPoly::x_n_minus_1(big)).expect("nonzero modulus");
    (0..c)
        .map(|i| {
            BinMat::from_fn(n_small, n_small, |q, q2| {
                coef.coeff((i * n_small + big + q2 - q) % big)
            })
        })
        .collect()
}

/// Spec with `a` split from the circulant of `pa` and `b` from that of `pb`.
pub fn circulant_spec(
    n_small: usize,
    c: usize,
    chi: usize,
    pa: &BinPoly,
    pb: &BinPoly,
) -> Result<HyperbicycleSpec> {
    HyperbicycleSpec::new(
        c,
        chi,
        circulant_split(n_small, c, pa),
        circulant_split(n_small, c, pb),
    )
}

/// Splits the `c n_i` circulants of check polynomials `h_i | x^{n_i} - 1`,
/// so that every codeword of the tiled codes is block-symmetric.
pub fn repeated_cyclic_inputs(
    h1: &BinPoly,
    n1: usize,
    h2: &BinPoly,
    n2: usize,
    c: usize,
    chi: usize,
) -> Result<HyperbicycleSpec> {
    for (h, n) in [(h1, n1), (h2, n2)] {
        if !h.divides(&BinPoly::x_n_minus_1(n)) {
            return Err(Error::Invalid(format!("{h} does not divide x^{n}-1")));
        }
    }
    HyperbicycleSpec::new(
        c,
        chi,
        circulant_split(n1, c, h1),
        circulant_split(n2, c, h2),
    )
}

/// Spec with `1 x 1` blocks whose hyperbicycle code is the generalized
/// bicycle code of `(f1, f2)` on `n` bits.
pub fn bicycle_spec(f1: &BinPoly, f2: &BinPoly, n: usize) -> Result<HyperbicycleSpec> {
    let xn = BinPoly::x_n_minus_1(n);
    let (f1, f2) = (f1.rem(&xn)?, f2.rem(&xn)?);
    let bits = |f: &BinPoly| -> Vec<BinMat> {
        (0..n).map(|i| BinMat::from_fn(1, 1, |_, _| f.coeff(i))).collect()
    };
    HyperbicycleSpec::new(n, 1, bits(&f1), bits(&f2))
}

/// Spec with `a_{i_a} = a`, `b_{i_b} = a^T` and every other block zero.
pub fn single_term_hyperbicycle(
    a: &BinMat,
    i_a: usize,
    i_b: usize,
    c: usize,
    chi: usize,
) -> Result<HyperbicycleSpec> {
    if i_a >= c || i_b >= c {
        return Err(Error::Invalid(format!("term index out of range for c={c}")));
    }
    let at = a.transpose();
    let mut av = vec![BinMat::zeros(a.rows(), a.cols()); c];
    let mut bv = vec![BinMat::zeros(at.rows(), at.cols()); c];
    av[i_a] = a.clone();
    bv[i_b] = at;
    HyperbicycleSpec::new(c, chi, av, bv)
}

/// Summary of a spec suitable for reports.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpecShape {
    pub c: usize,
    pub chi: usize,
    pub r1: usize,
    pub n1: usize,
    pub r2: usize,
    pub n2: usize,
}

impl From<&HyperbicycleSpec> for SpecShape {
    fn from(s: &HyperbicycleSpec) -> Self {
        let (r1, n1, r2, n2) = s.dims();
        Self {
            c: s.c,
            chi: s.chi,
            r1,
            n1,
            r2,
            n2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{generalized_bicycle, hypergraph_product};
    use crate::classical::circulant;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn c1_is_hypergraph_product() {
        let h1 = BinMat::from_strs(&["1101", "0111"]).unwrap();
        let h2 = circulant(3, &p("1+x"));
        let spec = HyperbicycleSpec::new(1, 1, vec![h1.clone()], vec![h2.clone()]).unwrap();
        let a = hyperbicycle(&spec).unwrap();
        let b = hypergraph_product(&h1, &h2).unwrap();
        assert_eq!((a.gx, a.gz), (b.gx, b.gz));
    }

    #[test]
    fn unit_blocks_are_generalized_bicycle() {
        let (f1, f2) = (p("1+x^3"), p("x+x^2"));
        let spec = bicycle_spec(&f1, &f2, 5).unwrap();
        let a = hyperbicycle(&spec).unwrap();
        let b = generalized_bicycle(&f1, &f2, 5).unwrap();
        assert_eq!((a.gx, a.gz), (b.gx, b.gz));
    }

    #[test]
    fn c2_tiling() {
        let a0 = BinMat::from_strs(&["10", "11"]).unwrap();
        let a1 = BinMat::from_strs(&["01", "00"]).unwrap();
        let b = vec![BinMat::identity(1); 2];
        let spec = HyperbicycleSpec::new(2, 1, vec![a0.clone(), a1.clone()], b).unwrap();
        let t = tiled_matrices(&spec).unwrap();
        let top = a0.hstack(&a1).unwrap();
        let bottom = a1.hstack(&a0).unwrap();
        assert_eq!(t.h1, top.vstack(&bottom).unwrap());
    }

    #[test]
    fn c5_chi2_shift_pattern() {
        // Distinct blocks a_i = binary expansion of i + 1.
        let a: Vec<BinMat> = (0..5)
            .map(|i| BinMat::from_fn(1, 3, |_, j| (i + 1) >> j & 1 == 1))
            .collect();
        let spec = HyperbicycleSpec::new(5, 2, a.clone(), vec![BinMat::identity(1); 5]).unwrap();
        let t = tiled_matrices(&spec).unwrap();
        let display = [
            [0, 1, 2, 3, 4],
            [3, 4, 0, 1, 2],
            [1, 2, 3, 4, 0],
            [4, 0, 1, 2, 3],
            [2, 3, 4, 0, 1],
        ];
        for (k, row) in display.iter().enumerate() {
            for (j, &i) in row.iter().enumerate() {
                for q in 0..3 {
                    assert_eq!(t.h1.get(k, 3 * j + q), a[i].get(0, q), "block ({k},{j})");
                }
            }
        }
    }

    #[test]
    fn commensurate_rejected() {
        let a = vec![BinMat::identity(1); 4];
        assert!(matches!(
            HyperbicycleSpec::new(4, 2, a.clone(), a),
            Err(Error::Commensurate { c: 4, chi: 2 })
        ));
    }

    #[test]
    fn split_reassembles_circulant() {
        let f = p("1+x+x^3+x^5");
        let blocks = circulant_split(3, 5, &f);
        let mut acc = BinMat::zeros(15, 15);
        for (i, b) in blocks.iter().enumerate() {
            acc.add_assign(&BinMat::circshift_perm(5, i as i64).kron(b));
        }
        assert_eq!(acc, circulant(15, &f));
        assert_eq!(circulant_split(7, 1, &f)[0], circulant(7, &f));
    }

    #[test]
    fn toric_ninety_two() {
        let h = p("1+x");
        let spec = circulant_spec(3, 5, 3, &h, &h).unwrap();
        let code = hyperbicycle(&spec).unwrap();
        assert_eq!((code.n(), code.k()), (90, 2));
    }

    #[test]
    fn repeated_seven_three() {
        let h = p("1+x+x^3");
        let spec = repeated_cyclic_inputs(&h, 7, &h, 7, 3, 1).unwrap();
        let code = hyperbicycle(&spec).unwrap();
        assert_eq!((code.n(), code.k()), (294, 18));
        assert!(repeated_cyclic_inputs(&p("1+x+x^2"), 7, &h, 7, 3, 1).is_err());
    }

    #[test]
    fn single_term_family() {
        // Hamming [7,4,3] check matrix: N = c((n-k)^2 + n^2), K = c k^2.
        let h = BinMat::from_strs(&["1110100", "0111010", "1101001"]).unwrap();
        for (c, chi) in [(1, 1), (2, 1), (3, 2)] {
            let spec = single_term_hyperbicycle(&h, 0, c - 1, c, chi).unwrap();
            let code = hyperbicycle(&spec).unwrap();
            assert_eq!((code.n(), code.k()), (c * (9 + 49), c * 16));
        }
        let a = BinMat::from_strs(&["11"]).unwrap();
        let code = hyperbicycle(&single_term_hyperbicycle(&a, 0, 1, 2, 1).unwrap()).unwrap();
        assert_eq!(code.n(), 10);
    }

    #[test]
    fn noncss_rotated_toric() {
        let bits = |f: &BinPoly| -> Vec<BinMat> {
            (0..5)
                .map(|i| BinMat::from_fn(1, 1, |_, _| f.coeff(i)))
                .collect()
        };
        let spec = HyperbicycleSpec::new(5, 1, bits(&p("x+x^4")), bits(&p("x^2+x^3"))).unwrap();
        let code = hyperbicycle_noncss(&spec).unwrap();
        assert_eq!((code.n(), code.k()), (5, 1));
        let bad = HyperbicycleSpec::new(5, 1, bits(&p("x")), bits(&p("x^2+x^3"))).unwrap();
        assert!(hyperbicycle_noncss(&bad).is_err());
    }
}
