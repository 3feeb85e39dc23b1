mod common;

use biquot_core::charclass::{matches_targets, LineBundleSum, SplittingEvaluator};
use biquot_core::search::{canonicalize_solution, Symmetry};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn split(x: &[i64], r: usize) -> Vec<Vec<i64>> {
    x.chunks(r).map(<[i64]>::to_vec).collect()
}

#[test]
fn cp2_evaluator_matches_hand_expansion_on_whole_box() {
    let doc = case("cp2-connect-sum", None, None);
    let (ring, spec) = (doc.ring.as_ref().unwrap(), doc.search.as_ref().unwrap());
    let ev = SplittingEvaluator::new(ring, &spec.targets, spec.m).unwrap();
    for_each_tuple(4, 2, |x| {
        let (p1, e) = cp2_expand(x);
        assert_eq!(ev.p1(x), vec![p1 as i128]);
        assert_eq!(ev.euler(x), vec![e as i128]);
        let oracle = p1 == 6 && e.abs() == 4;
        assert_eq!(ev.accepts(x).is_some(), oracle);
    });
}

#[test]
fn su3_evaluator_matches_hand_expansion_on_whole_box() {
    let doc = case("su3-t2", None, None);
    let (ring, spec) = (doc.ring.as_ref().unwrap(), doc.search.as_ref().unwrap());
    let ev = SplittingEvaluator::new(ring, &spec.targets, spec.m).unwrap();
    for_each_tuple(6, 2, |x| {
        let (p1, e) = su3_expand(x);
        assert_eq!(ev.p1(x), p1.iter().map(|&v| v as i128).collect::<Vec<_>>());
        assert_eq!(ev.euler(x), vec![e as i128]);
    });
}

#[test]
fn evaluator_matches_generic_classes_sampled() {
    let mut g = rng(11);
    let cases = [
        case("r-p", Some(2), None),
        case("r-p", Some(5), None),
        case("sp2-t2", None, None),
        case("su3-t2", None, None),
        case("cpn-split", None, Some(3)),
    ];
    for doc in &cases {
        let (ring, spec) = (doc.ring.as_ref().unwrap(), doc.search.as_ref().unwrap());
        let ev = SplittingEvaluator::new(ring, &spec.targets, spec.m).unwrap();
        let r = ev.rank_h2();
        for _ in 0..300 {
            let x: Vec<i64> = (0..ev.variables()).map(|_| g.random_range(-4..=4)).collect();
            let sum = LineBundleSum::from_coordinates(ring, &split(&x, r)).unwrap();
            let report = matches_targets(&sum, &spec.targets).unwrap();
            let p1: Vec<i128> = ring
                .coordinates(&sum.first_pontryagin(), 4)
                .unwrap()
                .iter()
                .map(|c| biquot_core::rational::to_i64(c).unwrap() as i128)
                .collect();
            assert_eq!(ev.p1(&x), p1, "{}", doc.name);
            assert_eq!(ev.accepts(&x).is_some(), report.matched, "{}", doc.name);
        }
    }
}

#[test]
fn rp_and_sp2_hand_expansions_agree_with_generic_classes() {
    let mut g = rng(12);
    for q in 2..=5 {
        let doc = case("r-p", Some(q), None);
        let ring = doc.ring.as_ref().unwrap();
        for _ in 0..200 {
            let x = random_vec(&mut g, 9, 5);
            let sum = LineBundleSum::from_coordinates(ring, &split(&x, 3)).unwrap();
            let (p1, e) = rp_expand(q, &x);
            let lib = ring.coordinates(&sum.first_pontryagin(), 4).unwrap();
            assert_eq!(lib, p1.iter().map(|&v| biquot_core::rational::int(v)).collect::<Vec<_>>());
            assert_eq!(ring.integrate(&sum.euler_class()).unwrap(), biquot_core::rational::int(e));
        }
    }
    let doc = case("sp2-t2", None, None);
    let ring = doc.ring.as_ref().unwrap();
    for _ in 0..200 {
        let x = random_vec(&mut g, 8, 5);
        let sum = LineBundleSum::from_coordinates(ring, &split(&x, 2)).unwrap();
        let (_, e) = sp2_expand(&x);
        assert_eq!(ring.integrate(&sum.euler_class()).unwrap(), biquot_core::rational::int(e));
    }
}

fn bundles() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=3).prop_flat_map(|(m, r)| prop::collection::vec(prop::collection::vec(-3i64..=3, r), m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn canonical_form_is_brute_force_orbit_minimum(b in bundles(), signs in any::<bool>()) {
        let sym = if signs { Symmetry::PermutationsAndSigns } else { Symmetry::Permutations };
        prop_assert_eq!(canonicalize_solution(&b, sym), brute_canonical(&b, signs));
    }

    #[test]
    fn canonical_form_is_constant_on_orbits(b in bundles(), seed in any::<u64>()) {
        let mut g = rng(seed);
        let mut image = b.clone();
        for v in image.iter_mut() {
            if g.random_bool(0.5) {
                v.iter_mut().for_each(|x| *x = -*x);
            }
        }
        let n = image.len();
        for i in (1..n).rev() {
            image.swap(i, g.random_range(0..=i));
        }
        let sym = Symmetry::PermutationsAndSigns;
        prop_assert_eq!(canonicalize_solution(&b, sym), canonicalize_solution(&image, sym));
    }

    #[test]
    fn sign_flips_preserve_p1_and_euler_up_to_sign(x in prop::collection::vec(-3i64..=3, 6), mask in 0u8..8) {
        let mut y = x.clone();
        let mut flips = 0;
        for k in 0..3 {
            if mask >> k & 1 == 1 {
                y[2 * k] = -y[2 * k];
                y[2 * k + 1] = -y[2 * k + 1];
                flips += 1;
            }
        }
        let (p1x, ex) = su3_expand(&x);
        let (p1y, ey) = su3_expand(&y);
        prop_assert_eq!(p1x, p1y);
        prop_assert_eq!(ex * if flips % 2 == 0 { 1 } else { -1 }, ey);
    }
}
