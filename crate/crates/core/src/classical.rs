//! Classical binary codes: circulants, parameters `[n, k, d]`, subset
//! distances of quasicyclic codes and random regular LDPC matrices.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::distance::search::{self, gray_enumerate, kernel_dim, LogicalSearch, WeightKind};
use crate::distance::{Dist, SearchConfig};
use crate::error::{Error, Result};
use crate::gf2::{BinMat, BinVec, SpanBuilder};
use crate::poly::{factor_xc_minus_1, BinPoly};

pub const DEFAULT_ENUM_CAP: usize = 26;

/// `n x n` circulant whose row 0 holds the coefficients of `p mod (x^n - 1)`
/// and row `κ` is row `κ-1` cyclically shifted right.
pub fn circulant(n: usize, p: &BinPoly) -> BinMat {
    let exps = p.to_cyclic_vec(n).support();
    let mut m = BinMat::zeros(n, n);
    for r in 0..n {
        for &e in &exps {
            m.set(r, (e + r) % n, true);
        }
    }
    m
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassicalParams {
    pub n: usize,
    pub k: usize,
    pub d_lo: Dist,
    pub d_hi: Dist,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BinVec>,
    pub method: &'static str,
}

impl ClassicalParams {
    /// The exact distance, if the interval is closed.
    pub fn d(&self) -> Option<Dist> {
        (self.d_lo == self.d_hi).then_some(self.d_lo)
    }
}

/// Search problem whose logicals are the nonzero codewords of `ker H`:
/// a codeword vanishes iff its free (non-pivot) coordinates do.
pub fn codeword_problem(h: &BinMat) -> LogicalSearch {
    let free = h.echelon().free_columns();
    let n = h.cols();
    LogicalSearch {
        checks: h.clone(),
        logicals: BinMat::from_fn(free.len(), n, |r, c| free[r] == c),
        stabilizers: BinMat::zeros(0, n),
        kind: WeightKind::Plain,
        seeds: Vec::new(),
    }
}

pub fn classical_params(h: &BinMat, enum_cap: usize) -> ClassicalParams {
    classical_params_with(h, enum_cap, &SearchConfig::default())
}

pub fn classical_params_with(h: &BinMat, enum_cap: usize, cfg: &SearchConfig) -> ClassicalParams {
    let n = h.cols();
    let k = n - h.rank();
    let (d_lo, d_hi, witness, method) = if k == 0 {
        (Dist::Infinite, Dist::Infinite, None, "empty code")
    } else {
        let prob = codeword_problem(h);
        solve(&prob, k, enum_cap, cfg)
    };
    ClassicalParams {
        n,
        k,
        d_lo,
        d_hi,
        witness,
        method,
    }
}

fn solve(
    prob: &LogicalSearch,
    dim: usize,
    enum_cap: usize,
    cfg: &SearchConfig,
) -> (Dist, Dist, Option<BinVec>, &'static str) {
    if dim <= enum_cap {
        match gray_enumerate(prob) {
            Some((w, v)) => (Dist::Finite(w), Dist::Finite(w), Some(v), "full enumeration"),
            None => (Dist::Infinite, Dist::Infinite, None, "full enumeration"),
        }
    } else {
        let out = search::search(prob, cfg);
        (out.lo, out.hi, out.witness, "information-set search + bounded enumeration")
    }
}

/// How the block-shift operator acts on a quasicyclic vector of `c * m` bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockLayout {
    /// Index `κ m + j`: `c` consecutive blocks; shift is `I_1 ⊗ E_m`.
    Major,
    /// Index `j c + κ`: shift is `E_m ⊗ I_1`.
    Minor,
}

/// `q(T)` for the block shift `T` of the given layout.
pub fn shift_poly_matrix(q: &BinPoly, c: usize, len: usize, layout: BlockLayout) -> BinMat {
    let m = len / c;
    let pc = circulant(c, q);
    match layout {
        BlockLayout::Major => pc.kron(&BinMat::identity(m)),
        BlockLayout::Minor => BinMat::identity(m).kron(&pc),
    }
}

/// Idempotent of the `p`-primary component of `F2[x]/(x^c - 1)`: it is
/// `1` modulo the full power of `p` dividing `x^c - 1` and `0` modulo every
/// other primary factor.
pub fn primary_idempotent(c: usize, p: &BinPoly) -> Result<BinPoly> {
    let fac = factor_xc_minus_1(c);
    let mult = fac.multiplicity();
    let q = p.pow(mult);
    if !fac.base.iter().any(|(f, _)| f == p) {
        return Err(Error::Invalid(format!("{p} is not an irreducible factor of x^{c}-1")));
    }
    let modulus = BinPoly::x_n_minus_1(c);
    let cof = modulus.divmod(&q)?.0;
    let inv = cof.inverse_mod(&q).expect("coprime primary factors");
    cof.mul(&inv).rem(&modulus)
}

/// Splits a divisor of `x^c - 1` that is a prime power `p_α^m` into
/// `(p_α, m)`.
pub fn prime_power(c: usize, p: &BinPoly) -> Result<(BinPoly, usize)> {
    if !p.divides(&BinPoly::x_n_minus_1(c)) {
        return Err(Error::Invalid(format!("{p} does not divide x^{c}-1")));
    }
    for (f, _) in factor_xc_minus_1(c).base {
        let mut m = 0;
        let mut rest = p.clone();
        while f.divides(&rest) {
            rest = rest.divmod(&f)?.0;
            m += 1;
        }
        if m > 0 {
            return if rest.is_one() {
                Ok((f, m))
            } else {
                Err(Error::Invalid(format!("{p} is not a power of an irreducible polynomial")))
            };
        }
    }
    Err(Error::Invalid(format!("{p} has no irreducible factor in x^{c}-1")))
}

/// Checks and logicals selecting codewords `w` whose `p_α`-primary
/// component has exact order `p_α^m`.
pub fn exact_class_problem(h: &BinMat, c: usize, p: &BinPoly, layout: BlockLayout) -> Result<LogicalSearch> {
    let n = h.cols();
    if c == 0 || !n.is_multiple_of(c) {
        return Err(Error::Dimension(format!("{n} columns not divisible into {c} blocks")));
    }
    let (base, m) = prime_power(c, p)?;
    let e = primary_idempotent(c, &base)?;
    let modulus = BinPoly::x_n_minus_1(c);
    let upper = base.pow(m).mul(&e).rem(&modulus)?;
    let lower = base.pow(m - 1).mul(&e).rem(&modulus)?;
    let checks = h.vstack(&shift_poly_matrix(&upper, c, n, layout))?;
    Ok(LogicalSearch {
        checks,
        logicals: shift_poly_matrix(&lower, c, n, layout),
        stabilizers: BinMat::zeros(0, n),
        kind: WeightKind::Plain,
        seeds: Vec::new(),
    })
}

/// Minimum weight over codewords of `ker H` that contain a vector of the
/// exact symmetry class `p` (a power of an irreducible factor of
/// `x^c - 1`). `Infinite` when the class is empty.
pub fn subset_distance(
    h: &BinMat,
    c: usize,
    p: &BinPoly,
    layout: BlockLayout,
    enum_cap: usize,
) -> Result<(Dist, Dist, Option<BinVec>)> {
    subset_distance_with(h, c, p, layout, enum_cap, &SearchConfig::default())
}

pub fn subset_distance_with(
    h: &BinMat,
    c: usize,
    p: &BinPoly,
    layout: BlockLayout,
    enum_cap: usize,
    cfg: &SearchConfig,
) -> Result<(Dist, Dist, Option<BinVec>)> {
    let prob = exact_class_problem(h, c, p, layout)?;
    // The sweep runs over ker [H; Q], so that is what the cap is compared to.
    let dim = kernel_dim(&prob);
    let (lo, hi, w, _) = solve(&prob, dim, enum_cap, cfg);
    Ok((lo, hi, w))
}

/// Random parity-check matrix with column weight `h` and row weight `v`
/// built by stub matching, with linearly dependent rows then removed.
pub fn random_regular_ldpc(h: usize, v: usize, n_cols: usize, seed: u64) -> Result<BinMat> {
    if h == 0 || h >= v {
        return Err(Error::Invalid(format!("need 0 < h < v, got h={h}, v={v}")));
    }
    if !(h * n_cols).is_multiple_of(v) || v > n_cols {
        return Err(Error::Invalid(format!(
            "no ({h},{v})-regular matrix with {n_cols} columns"
        )));
    }
    let n_rows = h * n_cols / v;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n_rows).flat_map(|r| std::iter::repeat_n(r, v)).collect();
    for _attempt in 0..10_000 {
        stubs.shuffle(&mut rng);
        let mut m = BinMat::zeros(n_rows, n_cols);
        let mut ok = true;
        for (i, &r) in stubs.iter().enumerate() {
            let col = i / h;
            if m.get(r, col) {
                ok = false;
                break;
            }
            m.set(r, col, true);
        }
        if ok {
            let mut span = SpanBuilder::new(n_cols);
            let keep: Vec<usize> = (0..n_rows).filter(|&r| span.insert(&m.row_vec(r))).collect();
            return Ok(m.select_rows(&keep));
        }
    }
    Err(Error::Invalid(format!(
        "stub matching for ({h},{v}) with {n_cols} columns kept producing repeated edges"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    #[test]
    fn circulant_examples() {
        let m = circulant(4, &p("1+x^2"));
        assert_eq!(m.to_strings(), vec!["1010", "0101", "1010", "0101"]);
        assert_eq!(circulant(3, &p("1+x")).to_strings(), vec!["110", "011", "101"]);
        assert_eq!(circulant(5, &p("1")), BinMat::identity(5));
        let q = p("1+x+x^3+x^9");
        let direct = BinMat::from_fn(7, 7, |r, c| (0..7).any(|e| q.to_cyclic_vec(7).get(e) && (e + r) % 7 == c));
        assert_eq!(circulant(7, &q), direct);
    }

    #[test]
    fn params_examples() {
        let rep = classical_params(&circulant(5, &p("1+x")), DEFAULT_ENUM_CAP);
        assert_eq!((rep.n, rep.k, rep.d()), (5, 1, Some(Dist::Finite(5))));
        let a = classical_params(&circulant(15, &p("1+x^3+x^4")), DEFAULT_ENUM_CAP);
        assert_eq!((a.n, a.k, a.d()), (15, 4, Some(Dist::Finite(8))));
        let b = classical_params(&circulant(15, &p("1+x+x^3+x^5")), DEFAULT_ENUM_CAP);
        assert_eq!((b.n, b.k, b.d()), (15, 5, Some(Dist::Finite(7))));
        let empty = classical_params(&BinMat::identity(3), DEFAULT_ENUM_CAP);
        assert_eq!(empty.d(), Some(Dist::Infinite));
    }

    #[test]
    fn search_path_matches_enumeration() {
        let h = circulant(15, &p("1+x+x^3+x^5"));
        let s = classical_params(&h, 0);
        assert_eq!((s.d_lo, s.d_hi), (Dist::Finite(7), Dist::Finite(7)));
    }

    #[test]
    fn subset_distance_examples() {
        let h = circulant(6, &p("1+x"));
        let (lo, hi, _) = subset_distance(&h, 2, &p("1+x"), BlockLayout::Major, 26).unwrap();
        assert_eq!((lo, hi), (Dist::Finite(6), Dist::Finite(6)));
        let (lo, _, _) = subset_distance(&h, 2, &p("1+x^2"), BlockLayout::Major, 26).unwrap();
        assert_eq!(lo, Dist::Infinite);
        let (lo, _, _) = subset_distance(&BinMat::identity(4), 2, &p("1+x"), BlockLayout::Major, 26).unwrap();
        assert_eq!(lo, Dist::Infinite);
        assert!(subset_distance(&h, 2, &p("1+x+x^2"), BlockLayout::Major, 26).is_err());
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let c = 6;
        let modulus = BinPoly::x_n_minus_1(c);
        let fac = factor_xc_minus_1(c);
        let es: Vec<BinPoly> = fac.base.iter().map(|(f, _)| primary_idempotent(c, f).unwrap()).collect();
        let mut sum = BinPoly::zero();
        for (i, e) in es.iter().enumerate() {
            assert_eq!(e.mulmod(e, &modulus).unwrap(), *e);
            for f in &es[i + 1..] {
                assert!(e.mulmod(f, &modulus).unwrap().is_zero());
            }
            sum = sum.add(e);
        }
        assert!(sum.is_one());
    }

    #[test]
    fn regular_ldpc_shapes() {
        let m = random_regular_ldpc(1, 2, 4, 7).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 4));
        assert!(m.col_weights().iter().all(|&w| w == 1));
        let m = random_regular_ldpc(2, 4, 8, 7).unwrap();
        assert_eq!(m.rank(), m.rows());
        assert!(m.col_weights().iter().all(|&w| w <= 2));
        assert!((0..m.rows()).all(|r| m.row_weight(r) == 4));
        assert!(random_regular_ldpc(3, 3, 6, 1).is_err());
        assert!(random_regular_ldpc(2, 4, 7, 1).is_err());
    }
}
