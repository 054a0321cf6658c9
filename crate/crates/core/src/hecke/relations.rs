//! Defining relations of the algebra, evaluated exactly.

use super::bernstein::Bernstein;
use super::{Daha, DahaElement};
use crate::cartan::Coords;
use crate::coeffs::LaurentCoefficient;
use crate::error::Result;
use crate::weyl::{all_reduced_words, enumerate_affine, AffineWeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

impl RelationCheck {
    fn new(name: impl Into<String>, holds: bool) -> Self {
        RelationCheck { name: name.into(), holds }
    }
}

/// Braid order from the product `a_ij a_ji`; `None` when there is no relation.
pub fn braid_order(product: i64) -> Option<usize> {
    match product {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

/// The alternating word `i j i ...` of length `m`.
pub fn alternating(i: usize, j: usize, m: usize) -> Vec<usize> {
    (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect()
}

fn word_element(h: &Daha, word: &[usize]) -> DahaElement {
    word.iter().fold(h.one(), |acc, &j| h.rmul_t(&acc, j))
}

fn simple_root(h: &Daha, j: usize) -> (Coords, i64) {
    crate::weyl::simple_affine_root(h.datum(), j)
}

fn neg(v: &[i64]) -> Coords {
    v.iter().map(|c| -c).collect()
}

/// `T_j - T_j^-1 = t_j^(1/2) - t_j^(-1/2)` for every node.
pub fn quadratic(h: &Daha) -> Result<Vec<RelationCheck>> {
    let mut out = Vec::new();
    for j in 0..=h.rank() {
        let lhs = &h.t_generator(j)? - &h.t_inverse(j)?;
        out.push(RelationCheck::new(format!("quadratic T{j}"), h.is_scalar(&lhs, h.hecke_unit(j))));
    }
    Ok(out)
}

/// `Y_{-A_j} T_j^-1 - T_j Y_{A_j}` equals the Hecke unit.
pub fn y_cross(h: &Daha) -> Result<Vec<RelationCheck>> {
    let n = h.rank();
    let mut out = Vec::new();
    for j in 1..=n {
        let mut a = Coords::from_elem(0, n);
        a[j - 1] = 1;
        let lhs =
            &h.multiply(&h.y_element(&neg(&a))?, &h.t_inverse(j)?) - &h.multiply(&h.t_generator(j)?, &h.y_element(&a)?);
        out.push(RelationCheck::new(format!("Y cross T{j}"), h.is_scalar(&lhs, h.hecke_unit(j))));
    }
    Ok(out)
}

/// `T_j^-1 X_{alpha_j} - X_{-alpha_j} T_j` equals the Hecke unit, `0 <= j <= n`.
pub fn x_cross(h: &Daha) -> Result<Vec<RelationCheck>> {
    let mut out = Vec::new();
    for j in 0..=h.rank() {
        let (b, k) = simple_root(h, j);
        let lhs = &h.multiply(&h.t_inverse(j)?, &h.x_monomial(&b, k)?)
            - &h.multiply(&h.x_monomial(&neg(&b), -k)?, &h.t_generator(j)?);
        out.push(RelationCheck::new(format!("X cross T{j}"), h.is_scalar(&lhs, h.hecke_unit(j))));
    }
    Ok(out)
}

/// Braid relations between the `T_j`.
pub fn braids(h: &Daha) -> Vec<RelationCheck> {
    let n = h.rank();
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let d = h.datum();
            let Some(m) = braid_order(d.cartan_entry(i, j) * d.cartan_entry(j, i)) else {
                continue;
            };
            let lhs = word_element(h, &alternating(i, j, m));
            let rhs = word_element(h, &alternating(j, i, m));
            out.push(RelationCheck::new(format!("braid T{i} T{j} (m={m})"), lhs == rhs));
        }
    }
    out
}

/// `(T_j X_beta - X_{s_j beta} T_j)(1 - X_{-alpha_j}) = c_j (X_beta - X_{s_j beta})`.
pub fn push_soundness(h: &Daha, j: usize, beta: &[i64]) -> Result<bool> {
    let d = h.datum();
    let (alpha, k) = simple_root(h, j);
    let s = AffineWeylElement::simple(d, j);
    let (sb, sk) = s.act_root(d, beta, 0);
    let x_sb = h.x_monomial(&sb, sk)?;
    let pushed = h.push_x_through_t(j, beta, 0)?;
    let main = h.multiply(&x_sb, &h.t_generator(j)?);
    let rest = &pushed - &main;
    let factor = &h.one() - &h.x_monomial(&neg(&alpha), -k)?;
    let lhs = h.multiply(&rest, &factor);
    let rhs = (&h.x_monomial(beta, 0)? - &x_sb).scale(h.hecke_unit(j));
    Ok(lhs == rhs)
}

/// Every reduced word of every `w` with `l(w) <= max_len` gives the same element.
pub fn matsumoto(h: &Daha, max_len: usize) -> (usize, Vec<Vec<usize>>) {
    let d = h.datum();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (w, _) in enumerate_affine(d, max_len) {
        let expected = h.t_word(&w);
        for word in all_reduced_words(d, &w) {
            checked += 1;
            if word_element(h, &word) != expected {
                failures.push(word);
            }
        }
    }
    (checked, failures)
}

/// `Y_mu T_j - T_j Y_{s_j mu} = c_j (Y_mu - Y_{s_j mu}) / (1 - Y_{A_j})`,
/// with the quotient expanded as a finite sum.
pub fn bernstein_relation(h: &Daha, mu: &[i64], j: usize) -> Result<bool> {
    let n = h.rank();
    let k = h.translation_coroot_pairing(mu, j);
    let smu = h.reflect_translation(mu, j);
    let lhs = &h.rmul_t(&h.y_element(mu)?, j) - &h.rmul_y(&h.t_generator(j)?, &smu)?;
    let step = |start: &[i64], i: i64| -> Coords {
        start.iter().enumerate().map(|(l, &c)| if l == j - 1 { c + i } else { c }).collect()
    };
    let mut quotient = DahaElement::zero(n);
    if k > 0 {
        for i in 1..=k {
            quotient.add_scaled(&h.y_element(&step(mu, -i))?, &LaurentCoefficient::integer(-1));
        }
    } else {
        for i in 0..-k {
            quotient.add_scaled(&h.y_element(&step(mu, i))?, &LaurentCoefficient::one());
        }
    }
    // The expanded quotient must really be the quotient.
    let mut a = Coords::from_elem(0, n);
    a[j - 1] = 1;
    let numerator = &h.y_element(mu)? - &h.y_element(&smu)?;
    let exact = &quotient - &h.rmul_y(&quotient, &a)? == numerator;
    Ok(exact && lhs == quotient.scale(h.hecke_unit(j)))
}

/// `Y_mu Y_nu = Y_nu Y_mu = Y_{mu + nu}`.
pub fn y_lattice(h: &Daha, mu: &[i64], nu: &[i64]) -> Result<bool> {
    let sum: Coords = mu.iter().zip(nu).map(|(x, y)| x + y).collect();
    let ab = h.rmul_y(&h.y_element(mu)?, nu)?;
    Ok(ab == h.rmul_y(&h.y_element(nu)?, mu)? && ab == h.y_element(&sum)?)
}

/// `(mu, A_j^v) = 0` gives commuting, `(mu, A_j^v) = 1` gives `T_j Y_mu T_j = Y_{s_j mu}`.
pub fn y_t_relation(h: &Daha, mu: &[i64], j: usize) -> Result<Option<bool>> {
    let k = h.translation_coroot_pairing(mu, j);
    let t = h.t_generator(j)?;
    let y = h.y_element(mu)?;
    match k {
        0 => Ok(Some(h.rmul_y(&t, mu)? == h.rmul_t(&y, j))),
        1 => {
            let lhs = h.rmul_t(&h.rmul_y(&t, mu)?, j);
            Ok(Some(lhs == h.y_element(&h.reflect_translation(mu, j))?))
        }
        _ => Ok(None),
    }
}

/// Round trip through the Bernstein basis.
pub fn bernstein_round_trip(h: &Daha, x: &DahaElement) -> Result<bool> {
    let b = Bernstein::new(h);
    Ok(&b.evaluate(&b.to_bernstein(x)?)? == x)
}

/// The fixed relation suite used by the command line and the tests.
pub fn relation_suite(h: &Daha) -> Result<Vec<RelationCheck>> {
    let mut out = quadratic(h)?;
    out.extend(y_cross(h)?);
    out.extend(x_cross(h)?);
    out.extend(braids(h));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_holds_in_rank_one_and_two() {
        for label in ["A1~", "A2~", "C2~"] {
            let h = Daha::load(label).unwrap();
            for c in relation_suite(&h).unwrap() {
                assert!(c.holds, "{label}: {}", c.name);
            }
        }
    }

    #[test]
    fn braid_orders() {
        assert_eq!(braid_order(3), Some(6));
        assert_eq!(braid_order(4), None);
        assert_eq!(alternating(1, 2, 3), vec![1, 2, 1]);
    }
}
