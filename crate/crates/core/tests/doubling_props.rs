mod common;

use hyperbicycle::construct::noncss_to_css;
use hyperbicycle::distance::search::exhaustive;
use hyperbicycle::distance::{css_x_problem, css_z_problem, noncss_problem};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn css_double_bounds(seed in any::<u64>(), n in 2usize..=8, r_frac in 0.2f64..0.95) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ((n as f64 * r_frac) as usize).max(1);
        let code = common::random_stabilizer(&mut rng, n, r);
        let double = noncss_to_css(&code).unwrap();
        prop_assert_eq!(double.n(), 2 * code.n());
        prop_assert_eq!(double.k(), 2 * code.k());
        if code.k() > 0 {
            let d = exhaustive(&noncss_problem(&code), n).unwrap().0;
            let dz = exhaustive(&css_z_problem(&double), 2 * n).unwrap().0;
            let dx = exhaustive(&css_x_problem(&double), 2 * n).unwrap().0;
            let dd = dx.min(dz);
            prop_assert!(d <= dd && dd <= 2 * d, "D={} D'={}", d, dd);
        }
    }
}
