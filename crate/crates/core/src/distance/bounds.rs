//! Distance bounds of hyperbicycle codes derived from the classical tiled
//! codes, and the trace-dual bound for generalized bicycle codes.

use serde::Serialize;

use super::search::{self, LogicalSearch, SearchConfig, WeightKind};
use super::{Dist, Interval};
use crate::classical::{classical_params_with, codeword_problem, subset_distance_with};
use crate::construct::{tiled_matrices, HyperbicycleSpec};
use crate::error::Result;
use crate::gf2::{BinMat, BinVec};
use crate::poly::BinPoly;
use crate::symmetry::{symmetry_decompose, tiled_codes, SymmetryDecomp};

/// Classical distances the bounds are derived from.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassicalInputs {
    /// `d1, d2, d̃1, d̃2`.
    pub tiled: [Interval; 4],
    /// Subset distances per prime-power class, same order as `tiled`.
    /// Entries for empty subcodes are left infinite.
    pub subsets: Vec<(BinPoly, [Interval; 4])>,
}

/// Computes the classical inputs with full enumeration up to codes of
/// dimension `enum_cap` and a search beyond.
pub fn classical_inputs(spec: &HyperbicycleSpec, enum_cap: usize, cfg: &SearchConfig) -> Result<ClassicalInputs> {
    let t = tiled_matrices(spec)?;
    let codes = tiled_codes(&t);
    let decomp = symmetry_decompose(spec)?;
    let mut tiled = [Interval::exact(Dist::Infinite); 4];
    for (slot, (h, ..)) in codes.iter().enumerate() {
        let p = classical_params_with(h, enum_cap, cfg);
        tiled[slot] = Interval::new(p.d_lo, p.d_hi);
    }
    let mut subsets = Vec::new();
    for cl in decomp.classes.iter().filter(|cl| !cl.residual) {
        let dims = [cl.k1, cl.k2, cl.kt1, cl.kt2];
        let mut ds = [Interval::exact(Dist::Infinite); 4];
        for (slot, (h, layout, transposed)) in codes.iter().enumerate() {
            if dims[slot] == 0 {
                continue;
            }
            // A class with respect to I_1^T is the reciprocal class for I_1.
            let q = if *transposed { cl.p.reciprocal() } else { cl.p.clone() };
            let (lo, hi, _) = subset_distance_with(h, spec.c, &q, *layout, enum_cap, cfg)?;
            ds[slot] = Interval::new(lo, hi);
        }
        subsets.push((cl.p.clone(), ds));
    }
    Ok(ClassicalInputs { tiled, subsets })
}

/// Upper bound from one symmetry class.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassUpper {
    pub p: BinPoly,
    /// `"H1/H~2"` or `"H2/H~1"`.
    pub pair: String,
    pub from: [Interval; 2],
    /// Proven upper bound: `min` of the upper ends.
    pub upper: Dist,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Premises {
    pub square_blocks: bool,
    /// `k_i^{(1+x)} = k_i` for `i = 1, 2`.
    pub symmetric_kernels: bool,
    pub kernels_nonempty: bool,
    pub c_is_two: bool,
    pub c_even: bool,
    /// Codes generated by the rows of `Σa_i`, `Σa_i^T`, `Σb_i`, `Σb_i^T`
    /// have distance at least 2.
    pub sum_a_d2: bool,
    pub sum_at_d2: bool,
    pub sum_b_d2: bool,
    pub sum_bt_d2: bool,
    /// Exact-distance premises: `c = 2`, square blocks, nonempty symmetric
    /// kernels and all four generator codes of distance at least 2.
    pub c_two_applies: bool,
    /// Interval premises: the same with `c` even, kernels may be empty.
    pub even_c_applies: bool,
    /// Non-CSS premises: `c` even, square, symmetric kernels, `Σa_i`
    /// and `Σb_i` only.
    pub noncss_applies: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundsReport {
    pub css: bool,
    pub c: usize,
    pub inputs: ClassicalInputs,
    /// `min(d1, d2, d̃1, d̃2)`, or `min(d1, d2)` for non-CSS codes.
    pub d: Interval,
    /// `⌊d/c⌋` from the lower end of `d`.
    pub tiling_lower: usize,
    pub class_uppers: Vec<ClassUpper>,
    pub premises: Premises,
    /// `D = d` when `c_two_applies`.
    pub c_two_exact: Option<Interval>,
    /// `(⌈2d/c⌉, d)` when `even_c_applies`.
    pub even_c_interval: Option<(usize, Dist)>,
    /// `⌈2d/c⌉` when `noncss_applies`.
    pub noncss_lower: Option<usize>,
    /// Best proven bounds: `lower ≤ D ≤ upper`.
    pub lower: usize,
    pub upper: Dist,
}

impl BoundsReport {
    /// True when `[lo, hi]` from a distance computation is compatible with
    /// every bound.
    pub fn consistent_with(&self, lo: Dist, hi: Dist) -> bool {
        Dist::Finite(self.lower) <= hi && lo <= self.upper
    }
}

/// No unit vector lies in the row space of `m`.
fn generated_distance_at_least_two(m: &BinMat) -> bool {
    let ech = m.echelon();
    (0..m.cols()).all(|j| !ech.contains(&BinVec::unit(m.cols(), j)))
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

pub fn theoretical_bounds(spec: &HyperbicycleSpec, inputs: &ClassicalInputs, css: bool) -> Result<BoundsReport> {
    let decomp = symmetry_decompose(spec)?;
    let c = spec.c;
    let d = if css {
        Interval::min_of(inputs.tiled)
    } else {
        Interval::min_of([inputs.tiled[0], inputs.tiled[1]])
    };
    let d_lo = d.lo.finite();
    let tiling_lower = d_lo.map_or(0, |x| x / c);

    let mut class_uppers = Vec::new();
    for (cl, (p, ds)) in decomp.classes.iter().filter(|cl| !cl.residual).zip(&inputs.subsets) {
        debug_assert_eq!(&cl.p, p);
        if cl.k1 > 0 && cl.kt2 > 0 {
            class_uppers.push(ClassUpper {
                p: p.clone(),
                pair: "H1/H~2".into(),
                from: [ds[0], ds[3]],
                upper: ds[0].hi.min(ds[3].hi),
            });
        }
        if cl.k2 > 0 && cl.kt1 > 0 {
            class_uppers.push(ClassUpper {
                p: p.clone(),
                pair: "H2/H~1".into(),
                from: [ds[1], ds[2]],
                upper: ds[1].hi.min(ds[2].hi),
            });
        }
    }

    let premises = premises(spec, &decomp);
    let c_two_exact = (css && premises.c_two_applies).then_some(d);
    let even_c_interval = (css && premises.even_c_applies).then(|| (d_lo.map_or(0, |x| ceil_div(2 * x, c)), d.hi));
    let noncss_lower = (!css && premises.noncss_applies).then(|| d_lo.map_or(0, |x| ceil_div(2 * x, c)));

    let mut lower = tiling_lower;
    let mut upper = class_uppers.iter().map(|u| u.upper).min().unwrap_or(Dist::Infinite);
    if let Some(i) = c_two_exact {
        lower = lower.max(i.lo.finite().unwrap_or(0));
        upper = upper.min(i.hi);
    }
    if let Some((lo, hi)) = even_c_interval {
        lower = lower.max(lo);
        upper = upper.min(hi);
    }
    if let Some(lo) = noncss_lower {
        lower = lower.max(lo);
    }
    Ok(BoundsReport {
        css,
        c,
        inputs: inputs.clone(),
        d,
        tiling_lower,
        class_uppers,
        premises,
        c_two_exact,
        even_c_interval,
        noncss_lower,
        lower,
        upper,
    })
}

fn premises(spec: &HyperbicycleSpec, decomp: &SymmetryDecomp) -> Premises {
    let one_plus_x = BinPoly::from_exponents(&[0, 1]);
    let first = decomp.classes.iter().find(|cl| cl.p == one_plus_x);
    let symmetric_kernels = first.is_some_and(|cl| cl.k1 == decomp.k1 && cl.k2 == decomp.k2);
    let kernels_nonempty = decomp.k1 > 0 && decomp.k2 > 0;
    let (sa, sb) = spec.block_sums();
    let sum_a_d2 = generated_distance_at_least_two(&sa);
    let sum_at_d2 = generated_distance_at_least_two(&sa.transpose());
    let sum_b_d2 = generated_distance_at_least_two(&sb);
    let sum_bt_d2 = generated_distance_at_least_two(&sb.transpose());
    let square_blocks = spec.is_square();
    let c = spec.c;
    let all_four = sum_a_d2 && sum_at_d2 && sum_b_d2 && sum_bt_d2;
    let base = square_blocks && symmetric_kernels;
    Premises {
        square_blocks,
        symmetric_kernels,
        kernels_nonempty,
        c_is_two: c == 2,
        c_even: c.is_multiple_of(2),
        sum_a_d2,
        sum_at_d2,
        sum_b_d2,
        sum_bt_d2,
        c_two_applies: c == 2 && base && kernels_nonempty && all_four,
        even_c_applies: c.is_multiple_of(2) && base && all_four,
        noncss_applies: c.is_multiple_of(2) && base && sum_a_d2 && sum_b_d2,
    }
}

/// Trace dual distance bound for the generalized bicycle code of `(f1, f2)`.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DualBound {
    /// Minimum symbol weight of the trace dual of `⟨ω f1 + f2⟩`.
    pub distance: Interval,
    /// Every dual element up to this weight was enumerated.
    pub clean_to: usize,
    /// The bound ignores degeneracy and is tight only for pure codes.
    pub note: &'static str,
}

/// Minimum symbol weight over nonzero `e = (u|v)` orthogonal to every
/// shift of `ω f1 + f2` under the trace inner product, i.e. `A v + B u = 0`.
/// Returned as a lower bound on the distance of the code.
pub fn f4_dual_distance_bound(f1: &BinPoly, f2: &BinPoly, n: usize, enum_cap: usize, cfg: &SearchConfig) -> DualBound {
    let a = crate::classical::circulant(n, f1);
    let b = crate::classical::circulant(n, f2);
    // Interleaved bits: 2q carries u_q, 2q+1 carries v_q.
    let checks = BinMat::from_fn(n, 2 * n, |r, i| {
        let q = i / 2;
        if i % 2 == 0 {
            b.get(r, q)
        } else {
            a.get(r, q)
        }
    });
    let base = codeword_problem(&checks);
    let prob = LogicalSearch {
        kind: WeightKind::Paired,
        ..base
    };
    let mut cfg = cfg.clone();
    cfg.enum_weight_cap = Some(enum_cap);
    let out = search::search(&prob, &cfg);
    DualBound {
        distance: Interval::new(out.lo, out.hi),
        clean_to: out.clean_to,
        note: "not tight for degenerate codes",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{circulant_spec, hyperbicycle, repeated_cyclic_inputs};
    use crate::distance::{css_distance, DistanceOptions};

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    fn bounds(spec: &HyperbicycleSpec) -> BoundsReport {
        let inputs = classical_inputs(spec, 26, &SearchConfig::default()).unwrap();
        theoretical_bounds(spec, &inputs, true).unwrap()
    }

    #[test]
    fn c1_reduces_to_hypergraph_bound() {
        let spec = circulant_spec(3, 1, 1, &p("1+x"), &p("1+x")).unwrap();
        let b = bounds(&spec);
        assert_eq!(b.tiling_lower, 3);
        assert_eq!(b.upper, Dist::Finite(3));
    }

    #[test]
    fn repeated_cyclic_bracket() {
        let spec = repeated_cyclic_inputs(&p("1+x+x^3"), 7, &p("1+x+x^3"), 7, 3, 1).unwrap();
        let b = bounds(&spec);
        assert_eq!((b.tiling_lower, b.upper), (4, Dist::Finite(12)));
        assert!(b.c_two_exact.is_none() && b.even_c_interval.is_none());
    }

    #[test]
    fn reed_muller_three_is_exact() {
        let spec = repeated_cyclic_inputs(&p("1+x+x^2+x^4"), 7, &p("1+x+x^2+x^4"), 7, 2, 1).unwrap();
        let b = bounds(&spec);
        assert!(b.premises.c_two_applies, "{:?}", b.premises);
        assert_eq!(b.c_two_exact, Some(Interval::exact(Dist::Finite(6))));
        let code = hyperbicycle(&spec).unwrap();
        let d = css_distance(&code, &DistanceOptions::default());
        assert!(b.consistent_with(d.d_lo, d.d_hi));
        assert_eq!(d.d_hi, Dist::Finite(6));
    }

    #[test]
    fn dual_bound_small_cases() {
        let cfg = SearchConfig::default();
        let b = f4_dual_distance_bound(&p("1+x^3"), &p("x+x^2"), 5, 8, &cfg);
        assert!(b.distance.hi <= Dist::Finite(3));
        let b = f4_dual_distance_bound(&p("1"), &BinPoly::zero(), 4, 8, &cfg);
        assert_eq!(b.distance, Interval::exact(Dist::Finite(1)));
    }
}
