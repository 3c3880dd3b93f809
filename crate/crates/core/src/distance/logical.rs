//! Logical operator bases with identity Gram matrix.

use serde::Serialize;

use super::quantum::{deinterleave, logical_complement, noncss_problem};
use crate::classical::{shift_poly_matrix, BlockLayout};
use crate::construct::{tiled_matrices, CssCode, HyperbicycleSpec, NonCssCode};
use crate::error::{Error, Result};
use crate::gf2::{BinMat, BinVec, SpanBuilder};
use crate::poly::BinPoly;
use crate::symmetry::symmetry_decompose;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LogicalOperators {
    #[serde(skip)]
    pub xbar: BinMat,
    #[serde(skip)]
    pub zbar: BinMat,
    /// `pairing[j]` is the Z row anticommuting with X row `j`.
    pub pairing: Vec<usize>,
    /// The X rows were taken verbatim from the closed-form candidates.
    pub closed_form_used: bool,
    /// Every kernel vector behind a closed-form row is `c`-fold repeated.
    /// `None` when the closed form does not apply.
    pub repetition_verified: Option<bool>,
    /// Pivot columns of the reduced X basis: each qubit here lies in the
    /// support of exactly one X logical of that basis.
    pub region: Vec<usize>,
}

impl LogicalOperators {
    pub fn k(&self) -> usize {
        self.xbar.rows()
    }

    /// `X̄ Z̄^T`.
    pub fn gram(&self) -> BinMat {
        self.xbar.checked_mul(&self.zbar.transpose()).expect("same length")
    }

    /// Kernel membership, rowspace non-membership, identity pairing.
    pub fn check(&self, code: &CssCode) -> bool {
        let k = code.k();
        if self.xbar.rows() != k || self.zbar.rows() != k {
            return false;
        }
        let commutes = |ops: &BinMat, checks: &BinMat| {
            checks.checked_mul(&ops.transpose()).is_ok_and(|m| m.is_zero())
        };
        let outside = |ops: &BinMat, stabs: &BinMat| ops.vstack(stabs).is_ok_and(|m| m.rank() == stabs.rank() + k);
        let paired = self.pairing.iter().enumerate().all(|(i, &j)| i == j);
        commutes(&self.xbar, &code.gz)
            && commutes(&self.zbar, &code.gx)
            && outside(&self.xbar, &code.gx)
            && outside(&self.zbar, &code.gz)
            && paired
            && self.gram() == BinMat::identity(k)
    }
}

/// Rows of `cand` independent modulo `stabs`, at most `k` of them.
fn pick_independent(cand: &[BinVec], stabs: &BinMat, k: usize) -> Vec<BinVec> {
    let mut span = SpanBuilder::from_matrix(stabs);
    let mut out = Vec::new();
    for v in cand {
        if out.len() == k {
            break;
        }
        if span.insert(v) {
            out.push(v.clone());
        }
    }
    out
}

fn embed(n: usize, offset: usize, v: &BinVec) -> BinVec {
    let mut full = BinVec::zeros(n);
    for i in v.support() {
        full.set(offset + i, true);
    }
    full
}

/// `e_y ⊗ w` for every unit vector `e_y` of length `m`.
fn left_units(m: usize, w: &BinVec) -> impl Iterator<Item = BinVec> + '_ {
    (0..m).map(move |y| kron_vec(&BinVec::unit(m, y), w))
}

fn kron_vec(a: &BinVec, b: &BinVec) -> BinVec {
    let mut v = BinVec::zeros(a.len() * b.len());
    for i in a.support() {
        for j in b.support() {
            v.set(i * b.len() + j, true);
        }
    }
    v
}

/// Block-repetition check for kernel vectors of a tiled matrix.
fn repeated(vs: &BinMat, c: usize, layout: BlockLayout) -> bool {
    let t = shift_poly_matrix(&BinPoly::from_exponents(&[0, 1]), c, vs.cols(), layout);
    t.checked_mul(&vs.transpose()).is_ok_and(|m| m.is_zero())
}

/// Candidate rows `(X, Z)` of the closed form, if the spec qualifies,
/// and whether every kernel vector behind them is `c`-fold repeated.
fn closed_form(spec: &HyperbicycleSpec) -> Result<Option<(Vec<BinVec>, Vec<BinVec>, bool)>> {
    if !spec.is_square() || spec.c.is_multiple_of(2) {
        return Ok(None);
    }
    let decomp = symmetry_decompose(spec)?;
    let one_plus_x = BinPoly::from_exponents(&[0, 1]);
    let symmetric = decomp
        .classes
        .iter()
        .any(|cl| cl.p == one_plus_x && cl.k1 == decomp.k1 && cl.k2 == decomp.k2);
    if !symmetric {
        return Ok(None);
    }
    let (r1, n1, r2, n2) = spec.validate()?;
    let t = tiled_matrices(spec)?;
    let c = spec.c;
    let len_a = r2 * c * n1;
    let n = len_a + n2 * c * r1;
    let k1 = t.h1.kernel_basis();
    let k2 = t.h2.kernel_basis();
    let kt1 = t.h1t.kernel_basis();
    let kt2 = t.h2t.kernel_basis();
    let reps = repeated(&k1, c, BlockLayout::Major)
        && repeated(&k2, c, BlockLayout::Minor)
        && repeated(&kt1, c, BlockLayout::Major)
        && repeated(&kt2, c, BlockLayout::Minor);

    let mut zs = Vec::new();
    for w in k1.row_vecs() {
        zs.extend(left_units(r2, &w).map(|v| embed(n, 0, &v)));
    }
    for w in k2.row_vecs() {
        zs.extend((0..r1).map(|q| embed(n, len_a, &kron_vec(&w, &BinVec::unit(r1, q)))));
    }
    let mut xs = Vec::new();
    for v in kt2.row_vecs() {
        xs.extend((0..n1).map(|j| embed(n, 0, &kron_vec(&v, &BinVec::unit(n1, j)))));
    }
    for v in kt1.row_vecs() {
        xs.extend((0..n2).map(|m| embed(n, len_a, &kron_vec(&BinVec::unit(n2, m), &v))));
    }
    Ok(Some((xs, zs, reps)))
}

/// Pairs `xbar` with combinations of `zbar` so that `X̄ Z̄'^T = I`.
fn pair(xbar: &BinMat, zbar: &BinMat) -> Option<BinMat> {
    let gram = xbar.checked_mul(&zbar.transpose()).ok()?;
    let inv = gram.inverse()?;
    inv.transpose().checked_mul(zbar).ok()
}

fn region(xbar: &BinMat) -> Vec<usize> {
    xbar.echelon().pivots().to_vec()
}

/// Logical operator pairs of a CSS code. With a qualifying hyperbicycle
/// spec (square blocks, odd `c`, fully symmetric kernels) the X rows are
/// chosen among the closed-form line operators.
pub fn logical_operators(code: &CssCode, spec: Option<&HyperbicycleSpec>) -> Result<LogicalOperators> {
    let k = code.k();
    if k == 0 {
        return Err(Error::Invalid("code has no logical qubits".into()));
    }
    let mut repetition_verified = None;
    if let Some(spec) = spec {
        if let Some((xs, zs, reps)) = closed_form(spec)? {
            repetition_verified = Some(reps);
            let x = pick_independent(&xs, &code.gx, k);
            let z = pick_independent(&zs, &code.gz, k);
            if x.len() == k && z.len() == k {
                let xbar = BinMat::from_rows(code.n(), &x);
                let zbar = BinMat::from_rows(code.n(), &z);
                if let Some(zbar) = pair(&xbar, &zbar) {
                    return Ok(LogicalOperators {
                        region: region(&xbar),
                        xbar,
                        zbar,
                        pairing: (0..k).collect(),
                        closed_form_used: true,
                        repetition_verified,
                    });
                }
            }
        }
    }
    let xbar = logical_complement(&code.gz, &code.gx).echelon().into_reduced();
    let xbar = xbar.select_rows(&(0..k).collect::<Vec<_>>());
    let zbar = logical_complement(&code.gx, &code.gz);
    let zbar = pair(&xbar, &zbar).ok_or_else(|| Error::Invalid("logical Gram matrix is singular".into()))?;
    Ok(LogicalOperators {
        region: region(&xbar),
        xbar,
        zbar,
        pairing: (0..k).collect(),
        closed_form_used: false,
        repetition_verified,
    })
}

/// Symplectic pairs of a non-CSS code, each operator as `(a|b)`.
#[derive(Clone, Debug)]
pub struct NonCssLogicals {
    pub pairs: Vec<((BinVec, BinVec), (BinVec, BinVec))>,
}

/// Symplectic product of two interleaved vectors.
fn omega(u: &BinVec, v: &BinVec) -> bool {
    let mut s = false;
    for i in u.support() {
        s ^= v.get(i ^ 1);
    }
    s
}

impl NonCssLogicals {
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    /// `2K x 2K` symplectic Gram matrix in the order `X̄_1, Z̄_1, X̄_2, ...`.
    pub fn gram(&self) -> BinMat {
        let ops: Vec<BinVec> = self
            .pairs
            .iter()
            .flat_map(|((xa, xb), (za, zb))| [interleave_pair(xa, xb), interleave_pair(za, zb)])
            .collect();
        BinMat::from_fn(ops.len(), ops.len(), |i, j| omega(&ops[i], &ops[j]))
    }

    pub fn check(&self, code: &NonCssCode) -> bool {
        let k = self.k();
        let prob = noncss_problem(code);
        let mut sympl = BinMat::zeros(2 * k, 2 * k);
        for p in 0..k {
            sympl.set(2 * p, 2 * p + 1, true);
            sympl.set(2 * p + 1, 2 * p, true);
        }
        let all_commute = self.pairs.iter().all(|((xa, xb), (za, zb))| {
            prob.checks.mul_vec(&interleave_pair(xa, xb)).is_zero()
                && prob.checks.mul_vec(&interleave_pair(za, zb)).is_zero()
        });
        k == code.k() && all_commute && self.gram() == sympl
    }
}

fn interleave_pair(a: &BinVec, b: &BinVec) -> BinVec {
    super::quantum::interleave(a, b)
}

/// Symplectic Gram–Schmidt over a basis of logical Paulis.
pub fn noncss_logical_operators(code: &NonCssCode) -> Result<NonCssLogicals> {
    let prob = noncss_problem(code);
    // The search problem stores logicals with X and Z halves swapped.
    let ops = BinMat::from_fn(prob.logicals.rows(), prob.logicals.cols(), |r, i| prob.logicals.get(r, i ^ 1));
    let mut pool: Vec<BinVec> = ops.row_vecs();
    if pool.is_empty() {
        return Err(Error::Invalid("code has no logical qubits".into()));
    }
    let mut pairs = Vec::new();
    while let Some(a) = pool.pop() {
        let Some(pos) = pool.iter().position(|v| omega(&a, v)) else {
            return Err(Error::Invalid("logical basis is degenerate under the symplectic form".into()));
        };
        let b = pool.swap_remove(pos);
        for v in &mut pool {
            let (wa, wb) = (omega(v, &b), omega(v, &a));
            if wa {
                v.xor_assign(&a);
            }
            if wb {
                v.xor_assign(&b);
            }
        }
        pairs.push((deinterleave(&a), deinterleave(&b)));
    }
    Ok(NonCssLogicals { pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::circulant;
    use crate::construct::{circulant_spec, hypergraph_product, hyperbicycle, noncss_bicycle, repeated_cyclic_inputs};

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn toric_pairs() {
        let h = circulant(3, &p("1+x"));
        let code = hypergraph_product(&h, &h).unwrap();
        let ops = logical_operators(&code, None).unwrap();
        assert_eq!(ops.k(), 2);
        assert!(ops.check(&code));
        assert_eq!(ops.gram(), BinMat::identity(2));
    }

    #[test]
    fn repeated_cyclic_closed_form() {
        let spec = repeated_cyclic_inputs(&p("1+x+x^3"), 7, &p("1+x+x^3"), 7, 3, 1).unwrap();
        let code = hyperbicycle(&spec).unwrap();
        let ops = logical_operators(&code, Some(&spec)).unwrap();
        assert_eq!(ops.k(), 18);
        assert!(ops.closed_form_used);
        assert_eq!(ops.repetition_verified, Some(true));
        assert!(ops.check(&code));
        // Each X row is a kernel vector of a tiled code; it repeats c = 3 times.
        for r in 0..ops.k() {
            assert_eq!(ops.xbar.row_weight(r) % 3, 0);
        }
    }

    #[test]
    fn twisted_toric_falls_back() {
        let spec = circulant_spec(3, 5, 3, &p("1+x"), &p("1+x")).unwrap();
        let code = hyperbicycle(&spec).unwrap();
        let ops = logical_operators(&code, Some(&spec)).unwrap();
        assert!(ops.check(&code));
        assert_eq!(ops.region.len(), 2);
    }

    #[test]
    fn noncss_symplectic_pairs() {
        let code = noncss_bicycle(&p("x^2+x^11"), &p("x^3+x^10"), 13).unwrap();
        let ops = noncss_logical_operators(&code).unwrap();
        assert_eq!(ops.k(), 1);
        assert!(ops.check(&code));
    }

    #[test]
    fn empty_code_is_rejected() {
        let code = crate::construct::generalized_bicycle(&p("1"), &BinPoly::zero(), 3).unwrap();
        assert!(logical_operators(&code, None).is_err());
    }
}
