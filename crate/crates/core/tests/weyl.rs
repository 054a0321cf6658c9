use std::collections::BTreeSet;

use daha::cartan::{supported_labels, AffineCartanDatum, Coords, Rational};
use daha::weyl::{
    all_reduced_words, enumerate_affine, enumerate_finite, inversions_by_scan, length_cross_check, parse_element,
    AffineWeylElement,
};

/// `s_j(v)` straight from the finite block of the Gram matrix.
fn reflect(d: &AffineCartanDatum, j: usize, v: &[i64]) -> Coords {
    let n = d.rank();
    let g = d.gram();
    let pair = |x: &[i64], k: usize| -> Rational { (0..n).map(|i| g[i][k] * Rational::from_integer(x[i])).sum() };
    let k = (Rational::from_integer(2) * pair(v, j - 1) / g[j - 1][j - 1]).to_integer();
    let mut out = Coords::from_slice(v);
    out[j - 1] -= k;
    out
}

#[test]
fn finite_inversion_sets_match_an_independent_oracle() {
    for label in supported_labels() {
        let d = AffineCartanDatum::load(&label).unwrap();
        for (w, word) in enumerate_finite(&d) {
            let aff = AffineWeylElement::from_finite(w);
            let lib: BTreeSet<Coords> = aff.inversion_set(&d).into_iter().map(|(b, _)| b).collect();
            let oracle: BTreeSet<Coords> = d
                .positive_roots()
                .iter()
                .filter(|alpha| {
                    let img = word.iter().rev().fold(Coords::from_slice(alpha), |v, &j| reflect(&d, j, &v));
                    img.iter().all(|&c| c <= 0)
                })
                .cloned()
                .collect();
            assert_eq!(lib, oracle, "{label} {word:?}");
            assert_eq!(lib.len(), word.len(), "{label} {word:?}");
        }
    }
}

#[test]
fn finite_group_orders() {
    for (label, order) in [("A1~", 2), ("A2~", 6), ("A3~", 24), ("B2~", 8), ("C3~", 48), ("D4~", 192), ("G2~", 12)] {
        let d = AffineCartanDatum::load(label).unwrap();
        assert_eq!(enumerate_finite(&d).len(), order, "{label}");
    }
}

#[test]
fn lengths_agree_up_to_five() {
    for label in ["A1~", "A2~", "B2~", "C2~", "G2~", "G2~*", "A3~", "B3~", "C3~"] {
        let d = AffineCartanDatum::load(label).unwrap();
        let (count, bad) = length_cross_check(&d, 5).unwrap();
        assert!(count > 1);
        assert!(bad.is_empty(), "{label}: {bad:?}");
    }
}

#[test]
fn affine_inversions_match_a_scan() {
    for label in ["A2~", "C2~", "G2~"] {
        let d = AffineCartanDatum::load(label).unwrap();
        for (w, len) in enumerate_affine(&d, 5) {
            let listed: BTreeSet<_> = w.inversion_set(&d).into_iter().collect();
            let scanned: BTreeSet<_> = inversions_by_scan(&d, &w, 6).into_iter().collect();
            assert_eq!(listed, scanned, "{label} {:?}", w.reduced_word(&d));
            assert_eq!(listed.len(), len);
        }
    }
}

#[test]
fn a1_affine_growth_is_two_per_length() {
    let d = AffineCartanDatum::load("A1~").unwrap();
    let all = enumerate_affine(&d, 6);
    for l in 1..=6 {
        assert_eq!(all.iter().filter(|(_, len)| *len == l).count(), 2);
    }
}

#[test]
fn longest_element_of_a2_has_two_reduced_words() {
    let d = AffineCartanDatum::load("A2~").unwrap();
    let w = parse_element(&d, "s1 s2 s1").unwrap();
    let words = all_reduced_words(&d, &w);
    assert_eq!(words.into_iter().collect::<Vec<_>>(), vec![vec![1, 2, 1], vec![2, 1, 2]]);
}

#[test]
fn translations_parse_and_have_formula_length() {
    let d = AffineCartanDatum::load("C2~").unwrap();
    let t = parse_element(&d, "t[1,0]").unwrap();
    assert_eq!(t, AffineWeylElement::translation(&[1, 0]));
    let again = AffineWeylElement::from_word(&d, &t.reduced_word(&d));
    assert_eq!(again, t);
    assert!(parse_element(&d, "t[1]").is_err());
    assert!(parse_element(&d, "s3").is_err());
    assert!(parse_element(&d, "x1").is_err());
}

#[test]
fn s0_is_the_affine_reflection() {
    for label in supported_labels() {
        let d = AffineCartanDatum::load(&label).unwrap();
        let s0 = AffineWeylElement::simple(&d, 0);
        assert_eq!(s0.length(&d), 1, "{label}");
        assert!(!s0.is_finite());
        assert!(s0.mul(&d, &s0).is_identity());
    }
}
