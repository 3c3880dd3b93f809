use hyperbicycle::construct::{hyperbicycle, HyperbicycleSpec};
use hyperbicycle::gf2::{gcd, BinMat};
use hyperbicycle::symmetry::{count_logical_qubits, symmetry_decompose};
use proptest::prelude::*;

fn block(rows: usize, cols: usize) -> impl Strategy<Value = BinMat> {
    proptest::collection::vec(any::<bool>(), rows * cols)
        .prop_map(move |bits| BinMat::from_fn(rows, cols, |r, c| bits[r * cols + c]))
}

fn spec() -> impl Strategy<Value = HyperbicycleSpec> {
    (1usize..=6, 0usize..6, 1usize..=4, 1usize..=5, 1usize..=4, 1usize..=5)
        .prop_flat_map(|(c, chi_seed, r1, n1, r2, n2)| {
            let coprime: Vec<usize> = (1..=c).filter(|&x| gcd(c, x) == 1).collect();
            let chi = coprime[chi_seed % coprime.len()];
            (
                Just(c),
                Just(chi),
                proptest::collection::vec(block(r1, n1), c),
                proptest::collection::vec(block(r2, n2), c),
            )
        })
        .prop_map(|(c, chi, a, b)| HyperbicycleSpec::new(c, chi, a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn class_counts_match_ranks(spec in spec()) {
        let code = hyperbicycle(&spec).unwrap();
        let rep = count_logical_qubits(&code, Some(&spec)).unwrap();
        prop_assert_eq!(rep.k_by_classes, Some(rep.k_rank as i64));
        prop_assert_eq!(rep.k_symmetric_form, Some(rep.k_rank as i64));
        prop_assert_eq!(rep.rank_gx_predicted, Some(rep.rank_gx));
        prop_assert_eq!(rep.rank_gz_predicted, Some(rep.rank_gz));
        prop_assert_eq!(rep.transposed_identity_ok, Some(true));
        prop_assert!(!rep.mismatch);
    }

    #[test]
    fn decomposition_is_complete(spec in spec()) {
        let d = symmetry_decompose(&spec).unwrap();
        let sum = |f: fn(&hyperbicycle::symmetry::ClassDims) -> usize| d.classes.iter().map(f).sum::<usize>();
        prop_assert_eq!(sum(|c| c.k1), d.k1);
        prop_assert_eq!(sum(|c| c.k2), d.k2);
        prop_assert_eq!(sum(|c| c.kt1), d.kt1);
        prop_assert_eq!(sum(|c| c.kt2), d.kt2);
        prop_assert!(d.classes.iter().filter(|c| c.residual).all(|c| c.k1 + c.k2 + c.kt1 + c.kt2 == 0));
        if d.k1 + d.k2 + d.kt1 + d.kt2 == 0 {
            prop_assert_eq!(hyperbicycle(&spec).unwrap().k(), 0);
        }
    }
}
