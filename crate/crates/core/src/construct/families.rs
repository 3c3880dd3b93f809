use serde::Serialize;

use super::{CssCode, NonCssCode, Provenance};
use crate::classical::circulant;
use crate::error::{Error, Result};
use crate::gf2::{BinMat, BinVec, SpanBuilder};
use crate::poly::{f4_vec_to_binary, BinPoly, F4Poly, F4};

/// `G_X = (E_2 ⊗ H_1, H_2 ⊗ E_1)`, `G_Z = (H_2^T ⊗ Ẽ_1, Ẽ_2 ⊗ H_1^T)`.
pub fn hypergraph_product(h1: &BinMat, h2: &BinMat) -> Result<CssCode> {
    let (r1, n1) = (h1.rows(), h1.cols());
    let (r2, n2) = (h2.rows(), h2.cols());
    let gx = BinMat::identity(r2).kron(h1).hstack(&h2.kron(&BinMat::identity(r1)))?;
    let gz = h2
        .transpose()
        .kron(&BinMat::identity(n1))
        .hstack(&BinMat::identity(n2).kron(&h1.transpose()))?;
    CssCode::new(
        gx,
        gz,
        Provenance::new("hypergraph-product")
            .with("h1", format!("{r1}x{n1}"))
            .with("h2", format!("{r2}x{n2}")),
    )
}

/// `G_X = (A, B)`, `G_Z = (B^T, A^T)` with `A`, `B` the circulants of `f1`, `f2`.
pub fn generalized_bicycle(f1: &BinPoly, f2: &BinPoly, n: usize) -> Result<CssCode> {
    let a = circulant(n, f1);
    let b = circulant(n, f2);
    CssCode::new(
        a.hstack(&b)?,
        b.transpose().hstack(&a.transpose())?,
        Provenance::new("generalized-bicycle")
            .with("f1", f1)
            .with("f2", f2)
            .with("n", n),
    )
}

/// `H = (A|B)` with circulants `A`, `B`; both must be symmetric matrices.
pub fn noncss_bicycle(f1: &BinPoly, f2: &BinPoly, n: usize) -> Result<NonCssCode> {
    let a = circulant(n, f1);
    let b = circulant(n, f2);
    if !a.is_symmetric() || !b.is_symmetric() {
        return Err(Error::Invalid(format!(
            "circulants of {f1} and {f2} on n={n} are not both symmetric"
        )));
    }
    NonCssCode::from_parts(
        &a,
        &b,
        Provenance::new("noncss-bicycle")
            .with("f1", f1)
            .with("f2", f2)
            .with("n", n),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BicycleK {
    /// `gcd(f1, x^n - 1)`.
    pub p: BinPoly,
    /// `gcd((x^n - 1) f2 / p, x^n - 1)`.
    pub r: BinPoly,
    /// `2 deg p + 2 deg r - 2n`.
    pub k_formula: i64,
    /// `2n - rank G_X - rank G_Z`.
    pub k_rank: usize,
}

pub fn bicycle_k(f1: &BinPoly, f2: &BinPoly, n: usize) -> Result<BicycleK> {
    let xn = BinPoly::x_n_minus_1(n);
    let p = f1.gcd(&xn);
    let p = if p.is_zero() { xn.clone() } else { p };
    let (quo, rem) = xn.mul(f2).divmod(&p)?;
    debug_assert!(rem.is_zero());
    let r = quo.gcd(&xn);
    let r = if r.is_zero() { xn.clone() } else { r };
    let k_formula = 2 * (p.deg() + r.deg()) as i64 - 2 * n as i64;
    let k_rank = generalized_bicycle(f1, f2, n)?.k();
    Ok(BicycleK {
        p,
        r,
        k_formula,
        k_rank,
    })
}

/// Single additive generator `g = ω f1 + f2` chosen from the trace dual of
/// an `F4`-linear cyclic code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceDualGenerator {
    pub f1: BinPoly,
    pub f2: BinPoly,
    /// GF(2) dimension of the trace dual.
    pub dual_dim: usize,
    /// GF(2) dimension of the span of the cyclic shifts of `g`.
    pub span_dim: usize,
}

impl TraceDualGenerator {
    /// True when the shifts of `g` span the whole dual.
    pub fn is_complete(&self) -> bool {
        self.span_dim == self.dual_dim
    }
}

/// Searches the trace dual of `⟨ρ⟩` (length `n`) for an element whose
/// binary cyclic shifts span as much of it as possible.
///
/// The dual is computed as a GF(2) kernel in the `(x-part | z-part)`
/// picture, where the trace inner product is the symplectic form. Its
/// elements are visited in Gray-code order over the kernel basis and the
/// first one of maximal span wins, so the choice is deterministic. The
/// span can fall short of the dual: shifts by binary polynomials generate
/// a cyclic `F2[x]`-module, and the dual is not one when a repeated binary
/// factor of `x^n - 1` is absent from `ρ`.
pub fn trace_dual_generator(rho: &F4Poly, n: usize) -> Result<TraceDualGenerator> {
    let mut code = SpanBuilder::new(2 * n);
    for s in 0..n {
        for scale in [F4::ONE, F4::W] {
            code.insert(&f4_vec_to_binary(&rho.shl(s).scale(scale).to_cyclic(n)));
        }
    }
    // (v1|u1).(v2|u2) = v1.u2 + u1.v2, so swapping halves turns the
    // symplectic dual into an ordinary kernel.
    let swapped: Vec<BinVec> = code
        .basis()
        .iter()
        .map(|b| b.slice(n, 2 * n).concat(&b.slice(0, n)))
        .collect();
    let dual = BinMat::from_rows(2 * n, &swapped).kernel_basis();
    let dim = dual.rows();
    if dim == 0 || dim >= 32 {
        return Err(Error::Invalid(format!(
            "trace dual of dimension {dim} is outside the searchable range"
        )));
    }
    let mut g = BinVec::zeros(2 * n);
    let mut best: Option<TraceDualGenerator> = None;
    for i in 1u64..(1u64 << dim) {
        g.xor_assign(&dual.row_vec(i.trailing_zeros() as usize));
        let (v, u) = (g.slice(0, n), g.slice(n, 2 * n));
        let mut span = SpanBuilder::new(2 * n);
        for s in 0..n {
            span.insert(&rotate(&v, s).concat(&rotate(&u, s)));
        }
        if best.as_ref().is_none_or(|b| span.dim() > b.span_dim) {
            best = Some(TraceDualGenerator {
                f1: BinPoly::from_vec(&v),
                f2: BinPoly::from_vec(&u),
                dual_dim: dim,
                span_dim: span.dim(),
            });
            if span.dim() == dim {
                break;
            }
        }
    }
    Ok(best.expect("nonempty dual"))
}

fn rotate(v: &BinVec, s: usize) -> BinVec {
    let n = v.len();
    BinVec::from_support(n, &v.support().iter().map(|&i| (i + s) % n).collect::<Vec<_>>())
}

const HAAH_TERMS: [([&str; 6], [&str; 6]); 4] = [
    (["HEE", "EHE", "EEH", "", "", ""], ["HHE", "EHH", "HEH", "", "", ""]),
    (["HEE", "EHE", "EHH", "HEH", "HHH", ""], ["EEH", "HHE", "EHH", "HEH", "", ""]),
    (["HEE", "EHE", "EHH", "HEH", "HHH", ""], ["HEE", "EHE", "EEH", "HHE", "EHH", "HHH"]),
    (["EHH", "HEH", "EHE", "", "", ""], ["HEE", "EEH", "EHH", "HHH", "", ""]),
];

/// The `(A, B)` pair of one of the four Haah-code variants, with
/// `H` the circulant of `1 + x` on `L` bits and `E = I_L`.
pub fn haah_matrices(variant: usize, l: usize) -> Result<(BinMat, BinMat)> {
    if !(1..=4).contains(&variant) {
        return Err(Error::Invalid(format!("Haah variant {variant} not in 1..=4")));
    }
    if l < 2 {
        return Err(Error::Invalid(format!("Haah code needs L >= 2, got {l}")));
    }
    let h = circulant(l, &BinPoly::from_exponents(&[0, 1]));
    let e = BinMat::identity(l);
    let build = |terms: &[&str]| {
        let mut acc = BinMat::zeros(l * l * l, l * l * l);
        for t in terms.iter().filter(|t| !t.is_empty()) {
            let f: Vec<&BinMat> = t.chars().map(|c| if c == 'H' { &h } else { &e }).collect();
            acc.add_assign(&f[0].kron(f[1]).kron(f[2]));
        }
        acc
    };
    let (ta, tb) = HAAH_TERMS[variant - 1];
    Ok((build(&ta), build(&tb)))
}

/// Haah code as a two-sublattice CSS code `G_X = (A, B)`, `G_Z = (B^T, A^T)`.
pub fn haah_code(variant: usize, l: usize) -> Result<CssCode> {
    let (a, b) = haah_matrices(variant, l)?;
    if a.checked_mul(&b)? != b.checked_mul(&a)? {
        return Err(Error::NonCommuting(format!("Haah variant {variant}: AB != BA")));
    }
    CssCode::new(
        a.hstack(&b)?,
        b.transpose().hstack(&a.transpose())?,
        Provenance::new("haah").with("variant", variant).with("L", l),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn hypergraph_examples() {
        let one = BinMat::identity(1);
        let c = hypergraph_product(&one, &one).unwrap();
        assert_eq!((c.n(), c.k()), (2, 0));
        let h = circulant(3, &p("1+x"));
        let t = hypergraph_product(&h, &h).unwrap();
        assert_eq!((t.n(), t.k()), (18, 2));
    }

    #[test]
    fn bicycle_examples() {
        let c = generalized_bicycle(&p("1+x^3"), &p("x+x^2"), 5).unwrap();
        assert_eq!((c.n(), c.k()), (10, 2));
        let c = generalized_bicycle(&p("1+x^9"), &p("x+x^8"), 13).unwrap();
        assert_eq!((c.n(), c.k()), (26, 2));
        let c = generalized_bicycle(&p("1"), &BinPoly::zero(), 3).unwrap();
        assert_eq!(c.k(), 0);
    }

    #[test]
    fn bicycle_k_examples() {
        let k = bicycle_k(&p("1+x^3"), &p("x+x^2"), 5).unwrap();
        assert_eq!(k.p, p("1+x"));
        assert_eq!(k.r.deg(), 5);
        assert_eq!((k.k_formula, k.k_rank), (2, 2));
        let h = p("1+x+x^3");
        let k = bicycle_k(&BinPoly::zero(), &h, 7).unwrap();
        assert_eq!(k.k_formula, 2 * 7 + 2 * 3 - 14);
        assert_eq!(k.k_formula as usize, k.k_rank);
    }

    #[test]
    fn trace_dual_of_thirty_twenty_five() {
        let rho: F4Poly = "1+x".parse().unwrap();
        let rho = rho
            .mul(&rho)
            .mul(&"1+w*x".parse().unwrap())
            .mul(&"1+x+w*x^2".parse().unwrap());
        assert_eq!(rho.deg(), 5);
        let g = trace_dual_generator(&rho, 30).unwrap();
        assert_eq!(g.dual_dim, 10);
        // The (1+x)^2 component of the dual is a free module of rank 2 over
        // F2[x]/(1+x)^2, so one generator reaches at most 8 dimensions.
        assert_eq!(g.span_dim, 8);
        let code = generalized_bicycle(&g.f1, &g.f2, 30).unwrap();
        assert_eq!((code.n(), code.k()), (60, 44));
    }

    #[test]
    fn trace_dual_complete_case() {
        // ρ = 1+ωx on n = 3: the dual is the single F4 component at 1+ωx.
        let g = trace_dual_generator(&"1+w*x".parse().unwrap(), 3).unwrap();
        assert!(g.is_complete(), "{g:?}");
        assert_eq!(g.dual_dim, 2);
        let code = generalized_bicycle(&g.f1, &g.f2, 3).unwrap();
        assert_eq!(code.k(), 6 - 2 * 2);
    }

    #[test]
    fn haah_variants_commute() {
        for v in 1..=4 {
            for l in 2..=3 {
                let c = haah_code(v, l).unwrap();
                assert_eq!(c.n(), 2 * l * l * l);
            }
        }
        assert!(haah_code(5, 2).is_err());
    }
}
