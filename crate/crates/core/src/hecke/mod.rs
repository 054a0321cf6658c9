//! The double affine Hecke algebra in the normal form `X_beta T_u`.
//!
//! `beta` runs over the finite root lattice and `u` over the affine Weyl
//! group; the central `X_delta` is folded into coefficients as `q^-1`.

pub mod bernstein;
pub mod expr;
pub mod relations;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Neg, Sub};
use std::rc::Rc;

use serde_json::{json, Value};

use crate::cartan::{AffineCartanDatum, Coords, LengthClass};
use crate::coeffs::LaurentCoefficient;
use crate::error::{Error, Result};
use crate::weyl::{length_formula, AffineWeylElement};

type Key = (Coords, AffineWeylElement);

/// Finite sum of `coeff * X_beta * T_u`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DahaElement {
    n: usize,
    terms: BTreeMap<Key, LaurentCoefficient>,
}

impl DahaElement {
    pub fn zero(n: usize) -> Self {
        DahaElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, LaurentCoefficient::one())
    }

    pub fn scalar(n: usize, c: LaurentCoefficient) -> Self {
        Self::term(Coords::from_elem(0, n), AffineWeylElement::identity(n), c)
    }

    pub fn term(beta: Coords, u: AffineWeylElement, c: LaurentCoefficient) -> Self {
        let mut out = Self::zero(beta.len());
        out.add_term(beta, u, c);
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, beta: Coords, u: AffineWeylElement, c: LaurentCoefficient) {
        if c.is_zero() {
            return;
        }
        let key = (beta, u);
        match self.terms.get_mut(&key) {
            Some(entry) => {
                *entry += &c;
                if entry.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &DahaElement, c: &LaurentCoefficient) {
        for ((beta, u), v) in &other.terms {
            self.add_term(beta.clone(), u.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &LaurentCoefficient) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// `X_gamma * self`.
    pub fn shift_x(&self, gamma: &[i64]) -> Self {
        let mut out = Self::zero(self.n);
        for ((beta, u), c) in &self.terms {
            let b: Coords = beta.iter().zip(gamma).map(|(a, g)| a + g).collect();
            out.add_term(b, u.clone(), c.clone());
        }
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&LaurentCoefficient) -> LaurentCoefficient) -> Self {
        let mut out = Self::zero(self.n);
        for ((beta, u), c) in &self.terms {
            out.add_term(beta.clone(), u.clone(), f(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coords, &AffineWeylElement, &LaurentCoefficient)> {
        self.terms.iter().map(|((b, u), c)| (b, u, c))
    }

    pub fn coefficient(&self, beta: &[i64], u: &AffineWeylElement) -> LaurentCoefficient {
        self.terms.get(&(Coords::from_slice(beta), u.clone())).cloned().unwrap_or_default()
    }

    pub fn has_x_part(&self) -> bool {
        self.terms.keys().any(|(b, _)| b.iter().any(|&c| c != 0))
    }

    /// The scalar `c` if `self = c * 1`.
    pub fn as_scalar(&self) -> Option<LaurentCoefficient> {
        if self.is_zero() {
            return Some(LaurentCoefficient::zero());
        }
        if self.terms.len() != 1 {
            return None;
        }
        let ((beta, u), c) = self.terms.iter().next()?;
        (beta.iter().all(|&x| x == 0) && u.is_identity()).then(|| c.clone())
    }

    /// Terms sorted by lattice coordinates, then length and reduced word of `u`.
    pub fn sorted_terms(&self, datum: &AffineCartanDatum) -> Vec<(Coords, Vec<usize>, LaurentCoefficient)> {
        let mut out: Vec<_> =
            self.terms.iter().map(|((b, u), c)| (b.clone(), u.reduced_word(datum), c.clone())).collect();
        out.sort_by(|x, y| (&x.0, x.1.len(), &x.1).cmp(&(&y.0, y.1.len(), &y.1)));
        out
    }

    pub fn to_json(&self, datum: &AffineCartanDatum) -> Value {
        let merged = datum.is_simply_laced();
        Value::Array(
            self.sorted_terms(datum)
                .into_iter()
                .map(|(b, w, c)| json!({"beta": b.to_vec(), "u_word": w, "coeff": c.render(merged)}))
                .collect(),
        )
    }

    /// Compact human-readable form, e.g. `(ts^1/2)*X[1,0]*T[0,1] + 1`.
    pub fn render(&self, datum: &AffineCartanDatum) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let merged = datum.is_simply_laced();
        self.sorted_terms(datum)
            .into_iter()
            .map(|(b, w, c)| {
                let mut parts = vec![format!("({})", c.render(merged))];
                if b.iter().any(|&x| x != 0) {
                    parts.push(format!("X{:?}", b.to_vec()));
                }
                if !w.is_empty() {
                    parts.push(format!("T{w:?}"));
                }
                parts.join("*")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Add for &DahaElement {
    type Output = DahaElement;
    fn add(self, rhs: &DahaElement) -> DahaElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentCoefficient::one());
        out
    }
}

impl Sub for &DahaElement {
    type Output = DahaElement;
    fn sub(self, rhs: &DahaElement) -> DahaElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentCoefficient::integer(-1));
        out
    }
}

impl Neg for &DahaElement {
    type Output = DahaElement;
    fn neg(self) -> DahaElement {
        self.scale(&LaurentCoefficient::integer(-1))
    }
}

#[derive(Default)]
struct Caches {
    words: HashMap<AffineWeylElement, Rc<Vec<usize>>>,
    tx: HashMap<(AffineWeylElement, Coords), Rc<DahaElement>>,
    tt: HashMap<(AffineWeylElement, AffineWeylElement), Rc<DahaElement>>,
    y: HashMap<Coords, Rc<DahaElement>>,
    push: HashMap<(usize, Coords), Rc<DahaElement>>,
    left_descent: HashMap<(AffineWeylElement, usize), bool>,
}

/// Multiplication engine for one datum. Caches are private to the engine
/// and never change results.
pub struct Daha {
    datum: AffineCartanDatum,
    units: Vec<LaurentCoefficient>,
    simples: Vec<AffineWeylElement>,
    caches: RefCell<Caches>,
}

impl Daha {
    pub fn new(datum: AffineCartanDatum) -> Self {
        let n = datum.rank();
        let units = (0..=n).map(|j| LaurentCoefficient::hecke_unit(datum.node_class(j) == LengthClass::Long)).collect();
        let simples = (0..=n).map(|j| AffineWeylElement::simple(&datum, j)).collect();
        Daha { datum, units, simples, caches: RefCell::new(Caches::default()) }
    }

    pub fn load(label: &str) -> Result<Self> {
        Ok(Self::new(AffineCartanDatum::load(label)?))
    }

    pub fn datum(&self) -> &AffineCartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// `t_j^(1/2) - t_j^(-1/2)`.
    pub fn hecke_unit(&self, j: usize) -> &LaurentCoefficient {
        &self.units[j]
    }

    /// `t_j^(k/2)`.
    pub fn t_param(&self, j: usize, k: i64) -> LaurentCoefficient {
        LaurentCoefficient::t_half(self.datum.node_class(j) == LengthClass::Long, k)
    }

    fn check_node(&self, j: usize) -> Result<()> {
        if j > self.rank() {
            return Err(Error::NodeOutOfRange { index: j, rank: self.rank() });
        }
        Ok(())
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::Dimension { expected: self.rank(), got: v.len() });
        }
        Ok(())
    }

    pub fn one(&self) -> DahaElement {
        DahaElement::one(self.rank())
    }

    pub fn scalar(&self, c: LaurentCoefficient) -> DahaElement {
        DahaElement::scalar(self.rank(), c)
    }

    pub fn t_generator(&self, j: usize) -> Result<DahaElement> {
        self.check_node(j)?;
        Ok(self.t_word(&self.simples[j]))
    }

    /// `T_j^-1 = T_j - (t_j^(1/2) - t_j^(-1/2))`.
    pub fn t_inverse(&self, j: usize) -> Result<DahaElement> {
        let t = self.t_generator(j)?;
        Ok(&t - &self.scalar(self.units[j].clone()))
    }

    /// `X_{beta + k delta} = q^-k X_beta`.
    pub fn x_monomial(&self, beta: &[i64], k: i64) -> Result<DahaElement> {
        self.check_len(beta)?;
        Ok(DahaElement::term(
            Coords::from_slice(beta),
            AffineWeylElement::identity(self.rank()),
            LaurentCoefficient::q_pow(-k),
        ))
    }

    /// Basis element `T_w`.
    pub fn t_word(&self, w: &AffineWeylElement) -> DahaElement {
        DahaElement::term(Coords::from_elem(0, self.rank()), w.clone(), LaurentCoefficient::one())
    }

    /// `T_w^-1`, expanded.
    pub fn t_word_inverse(&self, w: &AffineWeylElement) -> DahaElement {
        let word = self.reduced_word(w);
        let mut out = self.one();
        for &j in word.iter().rev() {
            out = self.rmul_t_inverse(&out, j);
        }
        out
    }

    pub fn reduced_word(&self, w: &AffineWeylElement) -> Rc<Vec<usize>> {
        if let Some(word) = self.caches.borrow().words.get(w) {
            return word.clone();
        }
        let word = Rc::new(w.reduced_word(&self.datum));
        self.caches.borrow_mut().words.insert(w.clone(), word.clone());
        word
    }

    /// `h * T_j`.
    pub fn rmul_t(&self, h: &DahaElement, j: usize) -> DahaElement {
        let mut out = DahaElement::zero(self.rank());
        for (beta, u, c) in h.terms() {
            let us = u.right_mul_simple(&self.datum, j);
            if u.has_right_descent(&self.datum, j) {
                out.add_term(beta.clone(), u.clone(), c * &self.units[j]);
            }
            out.add_term(beta.clone(), us, c.clone());
        }
        out
    }

    /// `h * T_j^-1`.
    pub fn rmul_t_inverse(&self, h: &DahaElement, j: usize) -> DahaElement {
        let mut out = self.rmul_t(h, j);
        out.add_scaled(h, &-&self.units[j]);
        out
    }

    /// `T_j X_{beta + k delta}` in normal form.
    pub fn push_x_through_t(&self, j: usize, beta: &[i64], k: i64) -> Result<DahaElement> {
        self.check_node(j)?;
        self.check_len(beta)?;
        let d = &self.datum;
        let n = self.rank();
        let id = AffineWeylElement::identity(n);
        let base = LaurentCoefficient::q_pow(-k);
        let unit = &self.units[j] * &base;
        let mut out = DahaElement::zero(n);
        if j == 0 {
            let theta = d.theta_coords();
            let pair = d.coroot_pairing(beta, &theta);
            debug_assert!(pair.is_integer());
            let pair = pair.to_integer();
            let s_theta = crate::weyl::FiniteWeylElement::reflection(d, &theta)?;
            let reflected = s_theta.apply(beta);
            // X_{s_0 beta} = q^-(beta, theta^v) X_{s_theta beta}
            out.add_term(reflected.clone(), self.simples[0].clone(), &base * &LaurentCoefficient::q_pow(-pair));
            let kk = -pair;
            let shifted =
                |start: &[i64], i: i64| -> Coords { start.iter().zip(&theta).map(|(a, t)| a + i * t).collect() };
            if kk > 0 {
                for i in 0..kk {
                    out.add_term(shifted(beta, i), id.clone(), &unit * &LaurentCoefficient::q_pow(i));
                }
            } else {
                for i in 0..-kk {
                    out.add_term(shifted(&reflected, i), id.clone(), -(&unit * &LaurentCoefficient::q_pow(i - pair)));
                }
            }
        } else {
            let kk = d.simple_coroot_pairing(beta, j);
            let reflected: Coords =
                beta.iter().enumerate().map(|(i, &b)| if i == j - 1 { b - kk } else { b }).collect();
            out.add_term(reflected.clone(), self.simples[j].clone(), base.clone());
            let lowered = |start: &[i64], i: i64| -> Coords {
                start.iter().enumerate().map(|(l, &b)| if l == j - 1 { b - i } else { b }).collect()
            };
            if kk > 0 {
                for i in 0..kk {
                    out.add_term(lowered(beta, i), id.clone(), unit.clone());
                }
            } else {
                for i in 0..-kk {
                    out.add_term(lowered(&reflected, i), id.clone(), -&unit);
                }
            }
        }
        Ok(out)
    }

    fn push_cached(&self, j: usize, gamma: &Coords) -> Rc<DahaElement> {
        let key = (j, gamma.clone());
        if let Some(hit) = self.caches.borrow().push.get(&key) {
            return hit.clone();
        }
        let result = Rc::new(self.push_x_through_t(j, gamma, 0).expect("valid node and rank"));
        self.caches.borrow_mut().push.insert(key, result.clone());
        result
    }

    fn left_descent(&self, v: &AffineWeylElement, j: usize) -> bool {
        let key = (v.clone(), j);
        if let Some(&hit) = self.caches.borrow().left_descent.get(&key) {
            return hit;
        }
        let result = v.has_left_descent(&self.datum, j);
        self.caches.borrow_mut().left_descent.insert(key, result);
        result
    }

    /// `T_j * h`.
    pub fn lmul_t(&self, j: usize, h: &DahaElement) -> DahaElement {
        let mut out = DahaElement::zero(self.rank());
        for (gamma, v, c) in h.terms() {
            for (g, w, c2) in self.push_cached(j, gamma).terms() {
                let c = c * c2;
                if w.is_identity() {
                    out.add_term(g.clone(), v.clone(), c);
                    continue;
                }
                if self.left_descent(v, j) {
                    out.add_term(g.clone(), v.clone(), &c * &self.units[j]);
                }
                out.add_term(g.clone(), self.simples[j].mul(&self.datum, v), c);
            }
        }
        out
    }

    /// `T_j^-1 * h`.
    pub fn lmul_t_inverse(&self, j: usize, h: &DahaElement) -> DahaElement {
        let mut out = self.lmul_t(j, h);
        out.add_scaled(h, &-&self.units[j]);
        out
    }

    /// `Y_mu * h`, by left multiplication along the two translation words.
    pub fn lmul_y(&self, mu: &[i64], h: &DahaElement) -> Result<DahaElement> {
        let (nu1, nu2) = self.antidominant_split(mu)?;
        let mut out = h.clone();
        for &j in self.reduced_word(&AffineWeylElement::translation(&nu2)).iter() {
            out = self.lmul_t_inverse(j, &out);
        }
        for &j in self.reduced_word(&AffineWeylElement::translation(&nu1)).iter().rev() {
            out = self.lmul_t(j, &out);
        }
        Ok(out)
    }

    /// `a * b`, pushing `b` leftwards through the letters of each `T_u` in `a`.
    pub fn multiply(&self, a: &DahaElement, b: &DahaElement) -> DahaElement {
        let mut by_u: BTreeMap<&AffineWeylElement, Vec<(&Coords, &LaurentCoefficient)>> = BTreeMap::new();
        for (beta, u, c) in a.terms() {
            by_u.entry(u).or_default().push((beta, c));
        }
        let mut out = DahaElement::zero(self.rank());
        for (u, xs) in by_u {
            let mut moved = b.clone();
            for &j in self.reduced_word(u).iter().rev() {
                moved = self.lmul_t(j, &moved);
            }
            for (beta, c) in xs {
                out.add_scaled(&moved.shift_x(beta), c);
            }
        }
        out
    }

    /// `T_u X_gamma` in normal form.
    fn t_times_x(&self, u: &AffineWeylElement, gamma: &Coords) -> Rc<DahaElement> {
        let key = (u.clone(), gamma.clone());
        if let Some(hit) = self.caches.borrow().tx.get(&key) {
            return hit.clone();
        }
        let n = self.rank();
        let result = if u.is_identity() {
            DahaElement::term(gamma.clone(), u.clone(), LaurentCoefficient::one())
        } else {
            let j = (0..=n)
                .find(|&j| u.has_right_descent(&self.datum, j))
                .expect("non-identity element has a right descent");
            let prefix = u.right_mul_simple(&self.datum, j);
            let pushed = self.push_x_through_t(j, gamma, 0).expect("valid node");
            let mut acc = DahaElement::zero(n);
            for (g, v, c) in pushed.terms() {
                let inner = self.t_times_x(&prefix, g);
                let inner = if v.is_identity() { (*inner).clone() } else { self.rmul_t(&inner, j) };
                acc.add_scaled(&inner, c);
            }
            acc
        };
        let result = Rc::new(result);
        self.caches.borrow_mut().tx.insert(key, result.clone());
        result
    }

    /// `T_v T_w` in the T basis.
    fn t_times_t(&self, v: &AffineWeylElement, w: &AffineWeylElement) -> Rc<DahaElement> {
        let key = (v.clone(), w.clone());
        if let Some(hit) = self.caches.borrow().tt.get(&key) {
            return hit.clone();
        }
        let mut acc = self.t_word(v);
        for &j in self.reduced_word(w).iter() {
            acc = self.rmul_t(&acc, j);
        }
        let result = Rc::new(acc);
        self.caches.borrow_mut().tt.insert(key, result.clone());
        result
    }

    /// `a * b` through the cached `T_u X_gamma` and `T_v T_w` tables.
    /// Slower than [`Daha::multiply`] on large inputs; kept as a second,
    /// independent route for cross-checks.
    pub fn multiply_cached(&self, a: &DahaElement, b: &DahaElement) -> DahaElement {
        let n = self.rank();
        let mut out = DahaElement::zero(n);
        for (b1, u1, c1) in a.terms() {
            for (b2, u2, c2) in b.terms() {
                let c12 = c1 * c2;
                let moved = self.t_times_x(u1, b2);
                for (g, v, c3) in moved.terms() {
                    let tt = self.t_times_t(v, u2);
                    let shift: Coords = b1.iter().zip(g).map(|(x, y)| x + y).collect();
                    out.add_scaled(&tt.shift_x(&shift), &(&c12 * c3));
                }
            }
        }
        out
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a DahaElement>) -> DahaElement {
        factors.into_iter().fold(self.one(), |acc, f| self.multiply(&acc, f))
    }

    /// Decomposition `mu = nu1 - nu2` with both antidominant, minimising
    /// `l(lambda_nu1) + l(lambda_nu2)`.
    pub fn antidominant_split(&self, mu: &[i64]) -> Result<(Coords, Coords)> {
        self.check_len(mu)?;
        let d = &self.datum;
        let n = self.rank();
        let antidominant = |nu: &[i64]| -> bool {
            let root = d.translation_to_root(nu);
            (1..=n).all(|j| d.simple_coroot_pairing(&root, j) <= 0)
        };
        let zero = Coords::from_elem(0, n);
        let bound = mu.iter().map(|c| c.abs()).max().unwrap_or(0) * 4 + 8;
        for radius in 0..=bound {
            let mut best: Option<(usize, Coords, Coords)> = None;
            let mut nu2 = Coords::from_elem(0, n);
            // Enumerate the box [-radius, 0]^n.
            loop {
                let nu1: Coords = mu.iter().zip(&nu2).map(|(a, b)| a + b).collect();
                if antidominant(&nu1) && antidominant(&nu2) {
                    let id = crate::weyl::FiniteWeylElement::identity(n);
                    let len = length_formula(d, &id, &nu1)? + length_formula(d, &id, &nu2)?;
                    if best.as_ref().map_or(true, |b| (len, &nu2) < (b.0, &b.2)) {
                        best = Some((len, nu1, nu2.clone()));
                    }
                }
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    if nu2[i] > -radius {
                        nu2[i] -= 1;
                        break;
                    }
                    nu2[i] = 0;
                    i += 1;
                }
                if i == n || nu2 == zero {
                    break;
                }
            }
            if let Some((_, nu1, nu2)) = best {
                return Ok((nu1, nu2));
            }
        }
        Err(Error::Decomposition(format!("{:?}", mu)))
    }

    /// `h * Y_mu`, by right multiplication along the two translation words.
    pub fn rmul_y(&self, h: &DahaElement, mu: &[i64]) -> Result<DahaElement> {
        let (nu1, nu2) = self.antidominant_split(mu)?;
        let mut out = h.clone();
        for &j in self.reduced_word(&AffineWeylElement::translation(&nu1)).iter() {
            out = self.rmul_t(&out, j);
        }
        for &j in self.reduced_word(&AffineWeylElement::translation(&nu2)).iter().rev() {
            out = self.rmul_t_inverse(&out, j);
        }
        Ok(out)
    }

    /// `Y_mu = T_{lambda_nu1} T_{lambda_nu2}^-1` for `mu = nu1 - nu2` antidominant.
    pub fn y_element(&self, mu: &[i64]) -> Result<DahaElement> {
        self.check_len(mu)?;
        let key = Coords::from_slice(mu);
        if let Some(hit) = self.caches.borrow().y.get(&key) {
            return Ok((**hit).clone());
        }
        let (nu1, nu2) = self.antidominant_split(mu)?;
        let mut y = self.t_word(&AffineWeylElement::translation(&nu1));
        for &j in self.reduced_word(&AffineWeylElement::translation(&nu2)).iter().rev() {
            y = self.rmul_t_inverse(&y, j);
        }
        self.caches.borrow_mut().y.insert(key, Rc::new(y.clone()));
        Ok(y)
    }

    /// `(mu, A_j^v)` for `mu` in `M` coordinates and `1 <= j <= n`.
    pub fn translation_coroot_pairing(&self, mu: &[i64], j: usize) -> i64 {
        let d = &self.datum;
        let v = d.simple_coroot_pairing(&d.translation_to_root(mu), j);
        let e = d.e_int(j);
        debug_assert_eq!(v % e, 0);
        v / e
    }

    /// `s_j(mu)` for `mu` in `M` coordinates.
    pub fn reflect_translation(&self, mu: &[i64], j: usize) -> Coords {
        let k = self.translation_coroot_pairing(mu, j);
        mu.iter().enumerate().map(|(i, &c)| if i == j - 1 { c - k } else { c }).collect()
    }

    /// Whether `h` is a scalar multiple of one with this coefficient.
    pub fn is_scalar(&self, h: &DahaElement, c: &LaurentCoefficient) -> bool {
        h.as_scalar().is_some_and(|s| &s == c)
    }

    /// Total number of cached entries (diagnostics).
    pub fn cache_size(&self) -> usize {
        let c = self.caches.borrow();
        c.words.len() + c.tx.len() + c.tt.len() + c.y.len() + c.push.len() + c.left_descent.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(label: &str) -> Daha {
        Daha::load(label).unwrap()
    }

    #[test]
    fn quadratic_relation() {
        for label in ["A1~", "C2~", "G2~"] {
            let h = engine(label);
            for j in 0..=h.rank() {
                let t = h.t_generator(j).unwrap();
                let ti = h.t_inverse(j).unwrap();
                assert_eq!(h.multiply(&t, &ti), h.one());
                let tt = h.multiply(&t, &t);
                let expected = &h.one() + &t.scale(h.hecke_unit(j));
                assert_eq!(tt, expected, "{label} T{j}^2");
            }
        }
    }

    #[test]
    fn x_delta_is_q_inverse() {
        let h = engine("A1~");
        assert_eq!(h.x_monomial(&[0], 1).unwrap(), h.scalar(LaurentCoefficient::q_pow(-1)));
        let a0 = h.x_monomial(&[-1], 1).unwrap();
        assert_eq!(a0, h.x_monomial(&[-1], 0).unwrap().scale(&LaurentCoefficient::q_pow(-1)));
    }

    #[test]
    fn a1_push_example() {
        let h = engine("A1~");
        let lhs = h.push_x_through_t(1, &[1], 0).unwrap();
        let s1 = AffineWeylElement::simple(h.datum(), 1);
        let mut rhs = DahaElement::term(Coords::from_slice(&[-1]), s1, LaurentCoefficient::one());
        rhs.add_term(Coords::from_slice(&[1]), AffineWeylElement::identity(1), h.hecke_unit(1).clone());
        rhs.add_term(Coords::from_slice(&[0]), AffineWeylElement::identity(1), h.hecke_unit(1).clone());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn antidominant_split_zero() {
        let h = engine("B3~");
        let (a, b) = h.antidominant_split(&[0, 0, 0]).unwrap();
        assert!(a.iter().chain(&b).all(|&c| c == 0));
        assert_eq!(h.y_element(&[0, 0, 0]).unwrap(), h.one());
    }

    #[test]
    fn y_minus_theta_in_a1() {
        let h = engine("A1~");
        let y = h.y_element(&[-1]).unwrap();
        let rhs = h.multiply(&h.t_generator(1).unwrap(), &h.t_generator(0).unwrap());
        assert_eq!(y, rhs);
    }
}
