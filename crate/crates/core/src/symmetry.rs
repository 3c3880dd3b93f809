//! Symmetry-class decomposition of the tiled codes and the class-based
//! counts of logical qubits.

use serde::Serialize;

use crate::classical::{shift_poly_matrix, BlockLayout};
use crate::construct::{tiled_matrices, CssCode, HyperbicycleSpec, NonCssCode, Tiled};
use crate::error::{Error, Result};
use crate::gf2::BinMat;
use crate::poly::{factor_xc_minus_1, BinPoly};

/// Dimensions of the four tiled codes restricted to one symmetry class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassDims {
    /// `p_α^m`, or `x^c - 1` for the residual class.
    pub p: BinPoly,
    /// `p_α`; equal to `p` for the residual class.
    pub base: BinPoly,
    pub power: usize,
    pub residual: bool,
    pub k0: usize,
    pub k1: usize,
    pub k2: usize,
    pub kt1: usize,
    pub kt2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SymmetryDecomp {
    pub c: usize,
    /// `n_i - r_i`.
    pub s1: i64,
    pub s2: i64,
    pub k1: usize,
    pub k2: usize,
    pub kt1: usize,
    pub kt2: usize,
    pub classes: Vec<ClassDims>,
}

/// `dim(ker H ∩ ker q(T))` for the block shift `T` of `layout`, or its
/// transpose when `transposed`.
fn annihilated_dim(
    h: &BinMat,
    q: &BinPoly,
    c: usize,
    layout: BlockLayout,
    transposed: bool,
) -> Result<usize> {
    let mut shift = shift_poly_matrix(q, c, h.cols(), layout);
    if transposed {
        shift = shift.transpose();
    }
    let stacked = h.vstack(&shift)?;
    Ok(h.cols() - stacked.rank())
}

/// Layouts of `(H1, H2, H̃1, H̃2)`: the `c`-dimensional factor comes first
/// in `H1`, `H̃1` and last in `H2`, `H̃2`. The transposed codes are built
/// from transposed shifts, so their classes are taken with respect to
/// `I_1^T`.
pub(crate) fn tiled_codes(t: &Tiled) -> [(&BinMat, BlockLayout, bool); 4] {
    [
        (&t.h1, BlockLayout::Major, false),
        (&t.h2, BlockLayout::Minor, false),
        (&t.h1t, BlockLayout::Major, true),
        (&t.h2t, BlockLayout::Minor, true),
    ]
}

pub fn symmetry_decompose(spec: &HyperbicycleSpec) -> Result<SymmetryDecomp> {
    let (r1, n1, r2, n2) = spec.validate()?;
    let c = spec.c;
    let t = tiled_matrices(spec)?;
    let codes = tiled_codes(&t);
    let totals: Vec<usize> = codes.iter().map(|(h, ..)| h.cols() - h.rank()).collect();
    let fac = factor_xc_minus_1(c);
    let mult = fac.multiplicity();
    let mut classes = Vec::new();
    let mut seen = [0usize; 4];
    for (base, _) in &fac.base {
        let mut prev = [0usize; 4];
        for m in 1..=mult {
            let q = base.pow(m);
            let mut dims = [0usize; 4];
            for (slot, (h, layout, tr)) in codes.iter().enumerate() {
                let a = annihilated_dim(h, &q, c, *layout, *tr)?;
                dims[slot] = a - prev[slot];
                prev[slot] = a;
            }
            for s in 0..4 {
                seen[s] += dims[s];
            }
            classes.push(ClassDims {
                p: q,
                base: base.clone(),
                power: m,
                residual: false,
                k0: base.deg(),
                k1: dims[0],
                k2: dims[1],
                kt1: dims[2],
                kt2: dims[3],
            });
        }
    }
    // x^c - 1 is already listed when it is a prime power (c a power of two).
    if fac.base.len() > 1 {
        classes.push(ClassDims {
            p: BinPoly::x_n_minus_1(c),
            base: BinPoly::x_n_minus_1(c),
            power: 1,
            residual: true,
            k0: 1,
            k1: totals[0] - seen[0],
            k2: totals[1] - seen[1],
            kt1: totals[2] - seen[2],
            kt2: totals[3] - seen[3],
        });
    }
    Ok(SymmetryDecomp {
        c,
        s1: n1 as i64 - r1 as i64,
        s2: n2 as i64 - r2 as i64,
        k1: totals[0],
        k2: totals[1],
        kt1: totals[2],
        kt2: totals[3],
        classes,
    })
}

fn exact_div(num: usize, den: usize, what: &str) -> Result<usize> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(Error::Decomposition(format!("{what} = {num} is not divisible by k0 = {den}")));
    }
    Ok(num / den)
}

impl SymmetryDecomp {
    /// `Σ k1 k2 / k0`.
    pub fn sum_k1k2(&self) -> Result<usize> {
        self.classes
            .iter()
            .map(|cl| exact_div(cl.k1 * cl.k2, cl.k0, "k1 k2"))
            .sum()
    }

    /// `Σ k̃1 k̃2 / k0`.
    pub fn sum_kt1kt2(&self) -> Result<usize> {
        self.classes
            .iter()
            .map(|cl| exact_div(cl.kt1 * cl.kt2, cl.k0, "k~1 k~2"))
            .sum()
    }

    /// `2 Σ k1 k2 / k0 - k1 s2 - k2 s1`.
    pub fn k_by_classes(&self) -> Result<i64> {
        Ok(2 * self.sum_k1k2()? as i64 - self.k1 as i64 * self.s2 - self.k2 as i64 * self.s1)
    }

    /// `Σ k1 k̃2 / k0 + Σ k2 k̃1 / k0`.
    pub fn k_symmetric_form(&self) -> Result<i64> {
        let mut total = 0;
        for cl in &self.classes {
            total += exact_div(cl.k1 * cl.kt2, cl.k0, "k1 k~2")?;
            total += exact_div(cl.k2 * cl.kt1, cl.k0, "k2 k~1")?;
        }
        Ok(total as i64)
    }

    /// Prime-power classes violating `k_i - k̃_i = s_i k0`. The residual
    /// class is empty, so it would satisfy the identity only for `s_i = 0`.
    pub fn transposed_identity_failures(&self) -> Vec<BinPoly> {
        self.classes
            .iter()
            .filter(|cl| !cl.residual)
            .filter(|cl| {
                let k0 = cl.k0 as i64;
                cl.k1 as i64 - cl.kt1 as i64 != self.s1 * k0
                    || cl.k2 as i64 - cl.kt2 as i64 != self.s2 * k0
            })
            .map(|cl| cl.p.clone())
            .collect()
    }

    /// Every tiled code restricted to class `p` is fully symmetric, i.e.
    /// `k_i^{(1+x)} = k_i`.
    pub fn all_in_first_class(&self) -> bool {
        let one_plus_x = BinPoly::from_exponents(&[0, 1]);
        self.classes
            .iter()
            .filter(|cl| cl.p != one_plus_x)
            .all(|cl| cl.k1 == 0 && cl.k2 == 0 && cl.kt1 == 0 && cl.kt2 == 0)
    }
}

/// Predicted ranks `(rank G_X, rank G_Z)` from the class dimensions.
pub fn rank_formula_check(spec: &HyperbicycleSpec) -> Result<(usize, usize)> {
    let (r1, n1, r2, n2) = spec.validate()?;
    let d = symmetry_decompose(spec)?;
    let c = spec.c;
    Ok((r1 * r2 * c - d.sum_kt1kt2()?, n1 * n2 * c - d.sum_k1k2()?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct KReport {
    pub n: usize,
    pub k_rank: usize,
    pub rank_gx: usize,
    pub rank_gz: usize,
    pub k_by_classes: Option<i64>,
    pub k_symmetric_form: Option<i64>,
    pub rank_gx_predicted: Option<usize>,
    pub rank_gz_predicted: Option<usize>,
    pub transposed_identity_ok: Option<bool>,
    pub mismatch: bool,
    pub classes: Option<SymmetryDecomp>,
}

pub fn count_logical_qubits(code: &CssCode, spec: Option<&HyperbicycleSpec>) -> Result<KReport> {
    let mut rep = KReport {
        n: code.n(),
        k_rank: code.k(),
        rank_gx: code.rank_x(),
        rank_gz: code.rank_z(),
        k_by_classes: None,
        k_symmetric_form: None,
        rank_gx_predicted: None,
        rank_gz_predicted: None,
        transposed_identity_ok: None,
        mismatch: false,
        classes: None,
    };
    if let Some(spec) = spec {
        let (r1, n1, r2, n2) = spec.validate()?;
        let d = symmetry_decompose(spec)?;
        let k3 = d.k_by_classes()?;
        let ks = d.k_symmetric_form()?;
        let px = r1 * r2 * spec.c - d.sum_kt1kt2()?;
        let pz = n1 * n2 * spec.c - d.sum_k1k2()?;
        let ident = d.transposed_identity_failures().is_empty();
        rep.mismatch = k3 != rep.k_rank as i64
            || ks != rep.k_rank as i64
            || px != rep.rank_gx
            || pz != rep.rank_gz
            || !ident;
        rep.k_by_classes = Some(k3);
        rep.k_symmetric_form = Some(ks);
        rep.rank_gx_predicted = Some(px);
        rep.rank_gz_predicted = Some(pz);
        rep.transposed_identity_ok = Some(ident);
        rep.classes = Some(d);
    }
    Ok(rep)
}

/// `K = Σ k1 k2 / k0` for the non-CSS hyperbicycle of `spec`, checked
/// against `N - rank H`.
pub fn noncss_k(code: &NonCssCode, spec: &HyperbicycleSpec) -> Result<usize> {
    let t = tiled_matrices(spec)?;
    if !spec.is_square() || t.h1 != t.h1t || t.h2 != t.h2t {
        return Err(Error::Invalid(
            "spec does not satisfy H1 = H~1, H2 = H~2 with square blocks".into(),
        ));
    }
    let k = symmetry_decompose(spec)?.sum_k1k2()?;
    if k != code.k() {
        return Err(Error::Decomposition(format!(
            "class count K = {k} but N - rank H = {}",
            code.k()
        )));
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::circulant;
    use crate::construct::{circulant_spec, hyperbicycle, repeated_cyclic_inputs};

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn c1_single_class() {
        let h = circulant(3, &p("1+x"));
        let spec = HyperbicycleSpec::new(1, 1, vec![h.clone()], vec![h]).unwrap();
        let d = symmetry_decompose(&spec).unwrap();
        assert_eq!(d.classes.len(), 1);
        assert_eq!((d.classes[0].k1, d.k1), (1, 1));
        let (gx, gz) = rank_formula_check(&spec).unwrap();
        assert_eq!((gx, gz), (8, 8));
    }

    #[test]
    fn c3_repetition_in_first_class() {
        let a: Vec<BinMat> = [true, true, false]
            .iter()
            .map(|&b| BinMat::from_fn(1, 1, |_, _| b))
            .collect();
        let spec = HyperbicycleSpec::new(3, 1, a.clone(), a).unwrap();
        let d = symmetry_decompose(&spec).unwrap();
        assert_eq!(d.k1, 1);
        let first = d.classes.iter().find(|cl| cl.p == p("1+x")).unwrap();
        assert_eq!(first.k1, 1);
        assert!(d.all_in_first_class());
    }

    #[test]
    fn class_count_on_examples() {
        let h = p("1+x+x^3");
        let spec = repeated_cyclic_inputs(&h, 7, &h, 7, 3, 1).unwrap();
        let code = hyperbicycle(&spec).unwrap();
        let rep = count_logical_qubits(&code, Some(&spec)).unwrap();
        assert_eq!((rep.k_rank, rep.k_by_classes, rep.k_symmetric_form), (18, Some(18), Some(18)));
        assert!(!rep.mismatch);

        let f = p("1+x^2+x^8");
        for (chi, k) in [(2, 32), (1, 32)] {
            let spec = circulant_spec(2, 15, chi, &f, &f).unwrap();
            let code = hyperbicycle(&spec).unwrap();
            let rep = count_logical_qubits(&code, Some(&spec)).unwrap();
            assert_eq!((rep.n, rep.k_rank), (120, k));
            assert!(!rep.mismatch, "{rep:?}");
        }
    }

    #[test]
    fn repeated_power_of_two() {
        // c = 2 has a single base factor (1+x) with multiplicity 2.
        let h = p("1+x+x^2+x^4");
        let spec = repeated_cyclic_inputs(&h, 7, &h, 7, 2, 1).unwrap();
        let d = symmetry_decompose(&spec).unwrap();
        assert_eq!(d.classes.len(), 2);
        assert!(d.all_in_first_class());
        let code = hyperbicycle(&spec).unwrap();
        let rep = count_logical_qubits(&code, Some(&spec)).unwrap();
        assert_eq!((rep.n, rep.k_rank), (196, 32));
        assert!(!rep.mismatch);
    }
}
