use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use daha::cartan::AffineCartanDatum;
use daha::hecke::Daha;
use daha::involution::{random_word, PhiMap};
use daha::weyl::AffineWeylElement;

fn label() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A1~", "A2~", "B2~", "C2~", "G2~"])
}

fn word(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=n, 0..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_words_are_reduced(l in label(), raw in word(2)) {
        let d = AffineCartanDatum::load(l).unwrap();
        let raw: Vec<usize> = raw.into_iter().map(|j| j % (d.rank() + 1)).collect();
        let w = AffineWeylElement::from_word(&d, &raw);
        let red = w.reduced_word(&d);
        prop_assert!(red.len() <= raw.len());
        prop_assert_eq!(red.len() % 2, raw.len() % 2);
        prop_assert_eq!(AffineWeylElement::from_word(&d, &red), w.clone());
        prop_assert_eq!(w.inverse(&d).length(&d), red.len());
        prop_assert_eq!(w.inversion_set(&d).len(), red.len());
    }

    #[test]
    fn descents_change_length_by_one(w in word(2), j in 0usize..=2) {
        let d = AffineCartanDatum::load("G2~").unwrap();
        let w = AffineWeylElement::from_word(&d, &w);
        let l = w.length(&d) as i64;
        let sw = w.left_mul_simple(&d, j).length(&d) as i64;
        prop_assert_eq!(sw - l, if w.has_left_descent(&d, j) { -1 } else { 1 });
        let ws = w.right_mul_simple(&d, j).length(&d) as i64;
        prop_assert_eq!(ws - l, if w.has_right_descent(&d, j) { -1 } else { 1 });
    }

    #[test]
    fn multiplication_is_associative(l in label(), seed in 0u64..10_000) {
        let h = Daha::load(l).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [a, b, c] = [0, 1, 2].map(|_| h.evaluate(&random_word(&h, &mut rng, 3)).unwrap());
        let left = h.multiply(&h.multiply(&a, &b), &c);
        prop_assert_eq!(left, h.multiply(&a, &h.multiply(&b, &c)));
        prop_assert_eq!(h.multiply(&a, &b), h.multiply_cached(&a, &b));
    }

    #[test]
    fn distributes_over_addition(seed in 0u64..10_000) {
        let h = Daha::load("C2~").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [a, b, c] = [0, 1, 2].map(|_| h.evaluate(&random_word(&h, &mut rng, 3)).unwrap());
        prop_assert_eq!(h.multiply(&a, &(&b + &c)), &h.multiply(&a, &b) + &h.multiply(&a, &c));
    }

    #[test]
    fn duality_is_multiplicative(l in label(), seed in 0u64..10_000) {
        let d = AffineCartanDatum::load(l).unwrap();
        let phi = PhiMap::new(&d).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_word(phi.source(), &mut rng, 2);
        let b = random_word(phi.source(), &mut rng, 2);
        let prod = phi.source().multiply(&phi.source().evaluate(&a).unwrap(), &phi.source().evaluate(&b).unwrap());
        let lhs = phi.phi_element(&prod).unwrap();
        let rhs = phi.target().multiply(&phi.phi_apply(&a).unwrap(), &phi.phi_apply(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn duality_squares_to_identity(l in label(), seed in 0u64..10_000) {
        let d = AffineCartanDatum::load(l).unwrap();
        let phi = PhiMap::new(&d).unwrap();
        let back = phi.inverse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_word(phi.source(), &mut rng, 3);
        let twice = phi.source().evaluate(&back.phi_word(&phi.phi_word(&a))).unwrap();
        prop_assert_eq!(twice, phi.source().evaluate(&a).unwrap());
    }
}
