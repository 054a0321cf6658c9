use daha::cartan::{supported_labels, Coords};
use daha::coeffs::LaurentCoefficient;
use daha::hecke::bernstein::Bernstein;
use daha::hecke::relations::{
    bernstein_relation, bernstein_round_trip, matsumoto, push_soundness, relation_suite, y_lattice, y_t_relation,
};
use daha::hecke::Daha;
use daha::weyl::{AffineWeylElement, FiniteWeylElement};

fn boxed(n: usize, r: i64) -> Vec<Coords> {
    let mut out = vec![Coords::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-r..=r).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn relation_suite_all_types() {
    for label in supported_labels() {
        let h = Daha::load(&label).unwrap();
        for c in relation_suite(&h).unwrap() {
            assert!(c.holds, "{label}: {}", c.name);
        }
    }
}

#[test]
fn push_division_is_exact() {
    for label in supported_labels() {
        let h = Daha::load(&label).unwrap();
        let n = h.rank();
        let r = if n <= 2 { 2 } else { 1 };
        for beta in boxed(n, r) {
            for j in 0..=n {
                assert!(push_soundness(&h, j, &beta).unwrap(), "{label} j={j} beta={beta:?}");
            }
        }
    }
}

#[test]
fn matsumoto_up_to_length_five() {
    for label in ["A1~", "A2~", "B2~", "C2~", "G2~", "G2~*", "A3~", "B3~", "C3~", "D4~"] {
        let h = Daha::load(label).unwrap();
        let (checked, failures) = matsumoto(&h, 5);
        assert!(checked > 0);
        assert!(failures.is_empty(), "{label}: {failures:?}");
    }
}

#[test]
fn a2_length_additive_product() {
    let h = Daha::load("A2~").unwrap();
    let d = h.datum();
    let lhs = h.product([&h.t_generator(1).unwrap(), &h.t_generator(2).unwrap(), &h.t_generator(1).unwrap()]);
    assert_eq!(lhs, h.t_word(&AffineWeylElement::from_word(d, &[1, 2, 1])));
    assert_eq!(AffineWeylElement::from_word(d, &[1, 2, 1]), AffineWeylElement::from_word(d, &[2, 1, 2]));
}

#[test]
fn x_delta_is_central() {
    for label in ["A2~", "C2~", "G2~"] {
        let h = Daha::load(label).unwrap();
        let xd = h.x_monomial(&vec![0; h.rank()], 1).unwrap();
        for j in 0..=h.rank() {
            let t = h.t_generator(j).unwrap();
            let conj = h.product([&t, &xd, &h.t_inverse(j).unwrap()]);
            assert_eq!(conj, h.scalar(LaurentCoefficient::q_pow(-1)));
        }
    }
}

#[test]
fn y_minus_theta_is_s_theta_times_t0() {
    for label in supported_labels() {
        let h = Daha::load(&label).unwrap();
        let d = h.datum();
        let theta = d.theta_coords();
        assert_eq!(d.e_root(&theta), 1, "{label}: theta must lie in M");
        let minus: Coords = d.root_to_translation(&theta).unwrap().iter().map(|c| -c).collect();
        let s_theta = AffineWeylElement::from_finite(FiniteWeylElement::reflection(d, &theta).unwrap());
        let rhs = h.multiply(&h.t_word(&s_theta), &h.t_generator(0).unwrap());
        assert_eq!(h.y_element(&minus).unwrap(), rhs, "{label}");
    }
}

#[test]
fn y_lattice_and_prop_relations() {
    for label in supported_labels() {
        let h = Daha::load(&label).unwrap();
        let n = h.rank();
        let pts = boxed(n, 1);
        for (i, mu) in pts.iter().enumerate().step_by(3) {
            let nu = &pts[(i * 7 + 1) % pts.len()];
            assert!(y_lattice(&h, mu, nu).unwrap(), "{label} {mu:?} {nu:?}");
            for j in 1..=n {
                if let Some(ok) = y_t_relation(&h, mu, j).unwrap() {
                    assert!(ok, "{label} mu={mu:?} j={j}");
                }
            }
        }
    }
}

#[test]
fn bernstein_relation_on_a_box() {
    for label in supported_labels() {
        let h = Daha::load(&label).unwrap();
        let n = h.rank();
        for mu in boxed(n, 1).into_iter().step_by(2) {
            for j in 1..=n {
                assert!(bernstein_relation(&h, &mu, j).unwrap(), "{label} mu={mu:?} j={j}");
            }
        }
    }
}

#[test]
fn bernstein_round_trips() {
    for label in supported_labels() {
        let h = Daha::load(&label).unwrap();
        let n = h.rank();
        let mut samples = vec![h.t_generator(0).unwrap()];
        samples.push(h.evaluate_str(&format!("T0 T1 T0 + ts T{n}' T0'")).unwrap());
        samples.push(h.y_element(&vec![1; n]).unwrap());
        for x in samples {
            assert!(bernstein_round_trip(&h, &x).unwrap(), "{label}");
        }
        let b = Bernstein::new(&h);
        let t1 = b.to_bernstein(&h.t_generator(1).unwrap()).unwrap();
        assert_eq!(t1.len(), 1);
    }
}
