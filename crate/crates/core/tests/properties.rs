use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toupie::ainf::{check_algebra, check_coalgebra, closed_delta, ext_table, tor_table, transfer_delta};
use toupie::duality::{
    double_dual, gr_algebra, hypotheses_check, ideal_equal, ideal_span, is_homogeneous, quotient_dimension,
};
use toupie::morse::{verify_sdr, ClosedSdr, OracleSdr, Resolution};
use toupie::presentation::{lincomb_mul, PathComb};
use toupie::random::{random_presentation, RandomConfig};
use toupie::rewriting::Matrix;
use toupie::scalar::int;
use toupie::schema::{parse_presentation, presentation_to_json};
use toupie::ToupieAlgebra;

fn algebra(seed: u64, biased: bool) -> ToupieAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = RandomConfig { biased, ..RandomConfig::default() };
    ToupieAlgebra::new(random_presentation(&mut rng, cfg)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Rewriting against plain linear algebra: p - NF(p) lies in the ideal
    // and NF(p) is a combination of nontips.
    #[test]
    fn normal_form_oracle(seed in any::<u64>(), biased in any::<bool>()) {
        let a = algebra(seed, biased);
        let ideal = ideal_span(a.presentation()).unwrap();
        for p in a.quiver().all_paths().unwrap() {
            let x = PathComb::basis(p);
            let nf = a.normal_form(&x);
            prop_assert!(nf.support().all(|q| a.is_nontip(q)));
            prop_assert!(ideal.contains(&(x - nf)));
        }
        prop_assert_eq!(quotient_dimension(a.presentation()).unwrap(), a.dimension());
    }

    #[test]
    fn multiplication_is_associative(seed in any::<u64>()) {
        let a = algebra(seed, false);
        let paths = a.quiver().all_paths().unwrap();
        for x in paths.iter().take(12) {
            for y in paths.iter().filter(|y| y.source() == x.target()).take(6) {
                for z in paths.iter().filter(|z| z.source() == y.target()).take(6) {
                    let (x, y, z) = (PathComb::basis(x.clone()), PathComb::basis(y.clone()), PathComb::basis(z.clone()));
                    prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
                    prop_assert_eq!(lincomb_mul(&lincomb_mul(&x, &y), &z), lincomb_mul(&x, &lincomb_mul(&y, &z)));
                }
            }
        }
    }

    #[test]
    fn closed_sdr_matches_zigzag(seed in any::<u64>()) {
        let a = algebra(seed, false);
        let closed = ClosedSdr::new(&a);
        let oracle = OracleSdr::build(&a).unwrap();
        prop_assert!(toupie::morse::compare_sdr(&a, &closed, &oracle, 4).is_empty());
        prop_assert!(verify_sdr(&a, &closed, 4).passed());
    }

    #[test]
    fn closed_delta_matches_transfer(seed in any::<u64>(), biased in any::<bool>()) {
        let a = algebra(seed, biased);
        for n in 2..=5 {
            for c in a.chains().all() {
                prop_assert_eq!(closed_delta(&a, n, c), transfer_delta(&a, n, c).unwrap());
            }
        }
    }

    #[test]
    fn stasheff_and_resolution(seed in any::<u64>()) {
        let a = algebra(seed, false);
        prop_assert!(check_coalgebra(&a, &tor_table(&a, 5), 5).passed());
        prop_assert!(check_algebra(&a, &ext_table(&a, 5), 5).passed());
        prop_assert!(Resolution::new(&a).verify(5).unwrap().passed());
    }

    #[test]
    fn gr_and_double_dual(seed in any::<u64>(), biased in any::<bool>()) {
        let a = algebra(seed, biased);
        let gr = gr_algebra(&a);
        prop_assert!(is_homogeneous(&gr.presentation));
        prop_assert_eq!(quotient_dimension(&gr.presentation).unwrap(), a.dimension());
        if hypotheses_check(&a).holds() {
            let dd = double_dual(&a).unwrap();
            prop_assert!(ideal_equal(&dd.presentation, &gr.presentation).unwrap());
        }
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let a = algebra(seed, false);
        let text = presentation_to_json(a.presentation());
        let back = parse_presentation(&text).unwrap();
        prop_assert_eq!(presentation_to_json(&back), text);
        prop_assert!(ideal_equal(&back, a.presentation()).unwrap());
    }

    #[test]
    fn rref_is_idempotent(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..5)) {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(), 5);
        let (r, pivots) = m.rref();
        prop_assert_eq!(r.rref().0, r.clone());
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert!(m.same_row_space(&r));
        prop_assert!(m.same_row_space(&m.special_basis()));
        for v in m.kernel() {
            for row in m.rows() {
                let dot = row.iter().zip(&v).fold(int(0), |acc, (a, b)| acc + a * b);
                prop_assert_eq!(dot, int(0));
            }
        }
    }
}
