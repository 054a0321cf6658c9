//! The basis `Y_mu T_w` (`w` finite) of the affine Hecke subalgebra.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use serde_json::{json, Value};

use super::{Daha, DahaElement};
use crate::cartan::Coords;
use crate::coeffs::LaurentCoefficient;
use crate::error::{Error, Result};
use crate::weyl::{AffineWeylElement, FiniteWeylElement};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BernsteinElement {
    terms: BTreeMap<(Coords, FiniteWeylElement), LaurentCoefficient>,
}

impl BernsteinElement {
    pub fn one(n: usize) -> Self {
        let mut out = Self::default();
        out.add_term(Coords::from_elem(0, n), FiniteWeylElement::identity(n), LaurentCoefficient::one());
        out
    }

    pub fn add_term(&mut self, mu: Coords, w: FiniteWeylElement, c: LaurentCoefficient) {
        if c.is_zero() {
            return;
        }
        let key = (mu, w);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn add_scaled(&mut self, other: &BernsteinElement, c: &LaurentCoefficient) {
        for ((mu, w), v) in &other.terms {
            self.add_term(mu.clone(), w.clone(), v * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coords, &FiniteWeylElement, &LaurentCoefficient)> {
        self.terms.iter().map(|((m, w), c)| (m, w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mu: &[i64], w: &FiniteWeylElement) -> LaurentCoefficient {
        self.terms.get(&(Coords::from_slice(mu), w.clone())).cloned().unwrap_or_default()
    }

    pub fn to_json(&self, daha: &Daha) -> Value {
        let d = daha.datum();
        let merged = d.is_simply_laced();
        let mut rows: Vec<_> = self
            .terms()
            .map(|(mu, w, c)| {
                let word = AffineWeylElement::from_finite(w.clone()).reduced_word(d);
                (mu.to_vec(), word, c.render(merged))
            })
            .collect();
        rows.sort();
        Value::Array(rows.into_iter().map(|(m, w, c)| json!({"mu": m, "w_word": w, "coeff": c})).collect())
    }
}

/// Rewriting in the Bernstein basis, built on a [`Daha`] engine.
pub struct Bernstein<'a> {
    daha: &'a Daha,
    simples: Vec<FiniteWeylElement>,
    ty_cache: RefCell<HashMap<(FiniteWeylElement, Coords), Rc<BernsteinElement>>>,
}

impl<'a> Bernstein<'a> {
    pub fn new(daha: &'a Daha) -> Self {
        let d = daha.datum();
        let mut simples = vec![FiniteWeylElement::identity(d.rank())];
        simples.extend((1..=d.rank()).map(|j| FiniteWeylElement::simple(d, j)));
        Bernstein { daha, simples, ty_cache: RefCell::new(HashMap::new()) }
    }

    fn descends(&self, w: &FiniteWeylElement, j: usize) -> bool {
        let mut unit = Coords::from_elem(0, w.rank());
        unit[j - 1] = 1;
        w.apply(&unit).iter().all(|&c| c <= 0)
    }

    /// `h * T_j`, `1 <= j <= n`.
    pub fn rmul_t(&self, h: &BernsteinElement, j: usize) -> BernsteinElement {
        let mut out = BernsteinElement::default();
        for (mu, w, c) in h.terms() {
            if self.descends(w, j) {
                out.add_term(mu.clone(), w.clone(), c * self.daha.hecke_unit(j));
            }
            out.add_term(mu.clone(), w.compose(&self.simples[j]), c.clone());
        }
        out
    }

    pub fn rmul_t_inverse(&self, h: &BernsteinElement, j: usize) -> BernsteinElement {
        let mut out = self.rmul_t(h, j);
        out.add_scaled(h, &-self.daha.hecke_unit(j));
        out
    }

    /// `T_j Y_nu` in the Bernstein basis.
    pub fn push_y_through_t(&self, j: usize, nu: &[i64]) -> BernsteinElement {
        let n = nu.len();
        let k = self.daha.translation_coroot_pairing(nu, j);
        let reflected = self.daha.reflect_translation(nu, j);
        let unit = self.daha.hecke_unit(j);
        let id = FiniteWeylElement::identity(n);
        let raised = |start: &[i64], i: i64| -> Coords {
            start.iter().enumerate().map(|(l, &c)| if l == j - 1 { c + i } else { c }).collect()
        };
        let mut out = BernsteinElement::default();
        out.add_term(reflected.clone(), self.simples[j].clone(), LaurentCoefficient::one());
        if k < 0 {
            for i in 0..-k {
                out.add_term(raised(nu, i), id.clone(), unit.clone());
            }
        } else {
            for i in 0..k {
                out.add_term(raised(&reflected, i), id.clone(), -unit);
            }
        }
        out
    }

    fn t_times_y(&self, w: &FiniteWeylElement, nu: &Coords) -> Rc<BernsteinElement> {
        let key = (w.clone(), nu.clone());
        if let Some(hit) = self.ty_cache.borrow().get(&key) {
            return hit.clone();
        }
        let n = nu.len();
        let result = if w.is_identity() {
            let mut out = BernsteinElement::default();
            out.add_term(nu.clone(), w.clone(), LaurentCoefficient::one());
            out
        } else {
            let j = (1..=n).find(|&j| self.descends(w, j)).expect("non-identity has a descent");
            let prefix = w.compose(&self.simples[j]);
            let mut acc = BernsteinElement::default();
            for (mu, v, c) in self.push_y_through_t(j, nu).terms() {
                let inner = self.t_times_y(&prefix, mu);
                let inner = if v.is_identity() { (*inner).clone() } else { self.rmul_t(&inner, j) };
                acc.add_scaled(&inner, c);
            }
            acc
        };
        let result = Rc::new(result);
        self.ty_cache.borrow_mut().insert(key, result.clone());
        result
    }

    /// `h * Y_nu`.
    pub fn rmul_y(&self, h: &BernsteinElement, nu: &[i64]) -> BernsteinElement {
        let nu = Coords::from_slice(nu);
        let mut out = BernsteinElement::default();
        for (mu, w, c) in h.terms() {
            for (m2, v, c2) in self.t_times_y(w, &nu).terms() {
                let sum: Coords = mu.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(sum, v.clone(), c * c2);
            }
        }
        out
    }

    /// Change of basis for an element without X part.
    pub fn to_bernstein(&self, h: &DahaElement) -> Result<BernsteinElement> {
        if h.has_x_part() {
            return Err(Error::HasXPart);
        }
        let d = self.daha.datum();
        let n = d.rank();
        let theta = d.theta_coords();
        let minus_theta: Coords = d.root_to_translation(&theta).expect("theta lies in M").iter().map(|c| -c).collect();
        let s_theta = AffineWeylElement::from_finite(FiniteWeylElement::reflection(d, &theta)?);
        let s_theta_word = self.daha.reduced_word(&s_theta);
        let mut out = BernsteinElement::default();
        for (_, u, c) in h.terms() {
            let mut acc = BernsteinElement::one(n);
            for &j in self.daha.reduced_word(u).iter() {
                if j == 0 {
                    // T_0 = T_{s_theta}^-1 Y_{-theta}
                    for &i in s_theta_word.iter().rev() {
                        acc = self.rmul_t_inverse(&acc, i);
                    }
                    acc = self.rmul_y(&acc, &minus_theta);
                } else {
                    acc = self.rmul_t(&acc, j);
                }
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    /// Back to the T basis.
    pub fn evaluate(&self, b: &BernsteinElement) -> Result<DahaElement> {
        let mut out = DahaElement::zero(self.daha.rank());
        for (mu, w, c) in b.terms() {
            let mut y = self.daha.y_element(mu)?;
            for &j in self.daha.reduced_word(&AffineWeylElement::from_finite(w.clone())).iter() {
                y = self.daha.rmul_t(&y, j);
            }
            out.add_scaled(&y, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_generators_are_trivial() {
        let h = Daha::load("C2~").unwrap();
        let b = Bernstein::new(&h);
        for j in 1..=2 {
            let got = b.to_bernstein(&h.t_generator(j).unwrap()).unwrap();
            assert_eq!(got.len(), 1);
            assert!(got.coefficient(&[0, 0], &FiniteWeylElement::simple(h.datum(), j)).is_one());
        }
    }

    #[test]
    fn x_part_is_rejected() {
        let h = Daha::load("A1~").unwrap();
        let b = Bernstein::new(&h);
        assert_eq!(b.to_bernstein(&h.x_monomial(&[1], 0).unwrap()), Err(Error::HasXPart));
    }

    #[test]
    fn round_trip_t0() {
        for label in ["A1~", "B2~", "G2~"] {
            let h = Daha::load(label).unwrap();
            let b = Bernstein::new(&h);
            let t0 = h.t_generator(0).unwrap();
            assert_eq!(b.evaluate(&b.to_bernstein(&t0).unwrap()).unwrap(), t0, "{label}");
        }
    }
}
