//! Finite, affine and double affine Weyl groups.
//!
//! * `FiniteWeylElement`: integer matrix of the action on `alpha_1..alpha_n`.
//! * `AffineWeylElement`: pair `(w, mu)` standing for `w * lambda_mu`, `mu` in `M`.
//! * `DoubleAffineWeylElement`: `(w, beta, k)` standing for `w * tau_beta * tau_delta^k`.
//!
//! Conventions: `w lambda_mu w^-1 = lambda_{w(mu)}` and
//! `w tau_beta w^-1 = tau_{w(beta)}` with `W` acting on `Q` by the level-zero
//! action. Words `[i_1, .., i_l]` denote the product `s_{i_1} ... s_{i_l}`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::{Signed, Zero};
use serde_json::json;
use smallvec::SmallVec;

use crate::cartan::{AffineCartanDatum, Coords, Rational, WeightVector};
use crate::error::{Error, Result};

/// Column-major `n x n` integer matrix; column `k` holds `w(alpha_k)`.
type Matrix = SmallVec<[i64; 16]>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FiniteWeylElement {
    n: u8,
    mat: Matrix,
    inv: Matrix,
}

fn mat_identity(n: usize) -> Matrix {
    let mut m = Matrix::from_elem(0, n * n);
    for j in 0..n {
        m[j * n + j] = 1;
    }
    m
}

fn mat_mul(n: usize, a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::from_elem(0, n * n);
    for k in 0..n {
        for l in 0..n {
            let blk = b[k * n + l];
            if blk == 0 {
                continue;
            }
            for j in 0..n {
                out[k * n + j] += a[l * n + j] * blk;
            }
        }
    }
    out
}

fn mat_apply(n: usize, m: &Matrix, v: &[i64]) -> Coords {
    let mut out = Coords::from_elem(0, n);
    for (k, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for j in 0..n {
            out[j] += m[k * n + j] * c;
        }
    }
    out
}

fn mat_apply_rational(n: usize, m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for j in 0..n {
            out[j] += Rational::from_integer(m[k * n + j]) * c;
        }
    }
    out
}

/// Sign of a nonzero finite root: `true` if positive.
fn is_positive_finite(beta: &[i64]) -> bool {
    beta.iter().all(|&c| c >= 0) && beta.iter().any(|&c| c > 0)
}

/// Positivity of the affine real root `beta + k delta`.
pub fn is_positive_affine_root(beta: &[i64], k: i64) -> bool {
    k > 0 || (k == 0 && is_positive_finite(beta))
}

impl FiniteWeylElement {
    pub fn identity(n: usize) -> Self {
        let m = mat_identity(n);
        FiniteWeylElement { n: n as u8, mat: m.clone(), inv: m }
    }

    /// Simple reflection `s_j`, `1 <= j <= n`.
    pub fn simple(datum: &AffineCartanDatum, j: usize) -> Self {
        let n = datum.rank();
        assert!((1..=n).contains(&j), "finite simple reflections are indexed 1..=n");
        let mut m = mat_identity(n);
        for k in 0..n {
            m[k * n + (j - 1)] -= datum.cartan_entry(j, k + 1);
        }
        FiniteWeylElement { n: n as u8, mat: m.clone(), inv: m }
    }

    /// Reflection in a finite root `beta`.
    pub fn reflection(datum: &AffineCartanDatum, beta: &[i64]) -> Result<Self> {
        if !datum.is_root(beta) {
            return Err(Error::NotARoot(WeightVector::from_root(beta, 0).to_string()));
        }
        let n = datum.rank();
        let mut m = mat_identity(n);
        for k in 0..n {
            let mut unit = Coords::from_elem(0, n);
            unit[k] = 1;
            let c = datum.coroot_pairing(&unit, beta);
            debug_assert!(c.is_integer());
            let c = c.to_integer();
            for j in 0..n {
                m[k * n + j] -= c * beta[j];
            }
        }
        Ok(FiniteWeylElement { n: n as u8, mat: m.clone(), inv: m })
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank();
        FiniteWeylElement { n: self.n, mat: mat_mul(n, &self.mat, &other.mat), inv: mat_mul(n, &other.inv, &self.inv) }
    }

    pub fn inverse(&self) -> Self {
        FiniteWeylElement { n: self.n, mat: self.inv.clone(), inv: self.mat.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.mat == mat_identity(self.rank())
    }

    /// Action on root coordinates.
    pub fn apply(&self, v: &[i64]) -> Coords {
        mat_apply(self.rank(), &self.mat, v)
    }

    pub fn apply_inverse(&self, v: &[i64]) -> Coords {
        mat_apply(self.rank(), &self.inv, v)
    }

    pub fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        mat_apply_rational(self.rank(), &self.mat, v)
    }

    /// Action on `M` coordinates (basis `A_j`).
    pub fn apply_translation(&self, datum: &AffineCartanDatum, mu: &[i64]) -> Coords {
        let image = self.apply(&datum.translation_to_root(mu));
        datum.root_to_translation(&image).expect("W preserves M")
    }

    pub fn apply_inverse_translation(&self, datum: &AffineCartanDatum, mu: &[i64]) -> Coords {
        let image = self.apply_inverse(&datum.translation_to_root(mu));
        datum.root_to_translation(&image).expect("W preserves M")
    }

    /// The matrix, column-major.
    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    /// Finite length: number of positive roots sent to negative roots.
    pub fn length(&self, datum: &AffineCartanDatum) -> usize {
        datum.positive_roots().iter().filter(|r| !is_positive_finite(&self.apply(r))).count()
    }

    /// Same element written in the basis `alpha_j^iota ~ e_j alpha_j` of the
    /// dual-type datum.
    pub fn to_iota(&self, datum: &AffineCartanDatum) -> Self {
        let n = self.rank();
        let conj = |m: &Matrix| -> Matrix {
            let mut out = Matrix::from_elem(0, n * n);
            for k in 0..n {
                for j in 0..n {
                    let v = m[k * n + j] * datum.e_int(k + 1);
                    let e = datum.e_int(j + 1);
                    debug_assert_eq!(v % e, 0);
                    out[k * n + j] = v / e;
                }
            }
            out
        };
        FiniteWeylElement { n: self.n, mat: conj(&self.mat), inv: conj(&self.inv) }
    }
}

/// `w * lambda_mu` with `w` finite and `mu` in `M` (basis `A_j`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineWeylElement {
    pub finite: FiniteWeylElement,
    pub trans: Coords,
}

impl AffineWeylElement {
    pub fn identity(n: usize) -> Self {
        AffineWeylElement { finite: FiniteWeylElement::identity(n), trans: Coords::from_elem(0, n) }
    }

    pub fn from_finite(w: FiniteWeylElement) -> Self {
        let n = w.rank();
        AffineWeylElement { finite: w, trans: Coords::from_elem(0, n) }
    }

    pub fn translation(mu: &[i64]) -> Self {
        AffineWeylElement { finite: FiniteWeylElement::identity(mu.len()), trans: Coords::from_slice(mu) }
    }

    /// Simple reflection `s_j`, `0 <= j <= n`; `s_0 = s_theta lambda_{-theta}`.
    pub fn simple(datum: &AffineCartanDatum, j: usize) -> Self {
        let n = datum.rank();
        assert!(j <= n, "node index out of range");
        if j == 0 {
            let theta = datum.theta_coords();
            let s_theta = FiniteWeylElement::reflection(datum, &theta).expect("theta is a root");
            let minus_theta: Coords = theta.iter().map(|c| -c).collect();
            AffineWeylElement {
                finite: s_theta,
                trans: datum.root_to_translation(&minus_theta).expect("theta lies in M"),
            }
        } else {
            Self::from_finite(FiniteWeylElement::simple(datum, j))
        }
    }

    pub fn from_word(datum: &AffineCartanDatum, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(datum.rank()), |acc, &j| acc.mul(datum, &Self::simple(datum, j)))
    }

    pub fn rank(&self) -> usize {
        self.trans.len()
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.trans.iter().all(|&c| c == 0)
    }

    pub fn is_finite(&self) -> bool {
        self.trans.iter().all(|&c| c == 0)
    }

    /// `(w1 l1)(w2 l2) = w1 w2 lambda_{w2^-1(mu1) + mu2}`.
    pub fn mul(&self, datum: &AffineCartanDatum, other: &Self) -> Self {
        let moved = other.finite.apply_inverse_translation(datum, &self.trans);
        AffineWeylElement {
            finite: self.finite.compose(&other.finite),
            trans: moved.iter().zip(&other.trans).map(|(a, b)| a + b).collect(),
        }
    }

    /// `(w lambda_mu)^-1 = w^-1 lambda_{-w(mu)}`.
    pub fn inverse(&self, datum: &AffineCartanDatum) -> Self {
        let moved = self.finite.apply_translation(datum, &self.trans);
        AffineWeylElement { finite: self.finite.inverse(), trans: moved.iter().map(|c| -c).collect() }
    }

    /// Level-zero action on `beta + k delta`, integer version.
    pub fn act_root(&self, datum: &AffineCartanDatum, beta: &[i64], k: i64) -> (Coords, i64) {
        let shift = datum.pair_root_translation(beta, &self.trans);
        (self.finite.apply(beta), k - shift)
    }

    /// Image of the simple affine root `alpha_j` (`alpha_0 = delta - theta`).
    pub fn act_simple_root(&self, datum: &AffineCartanDatum, j: usize) -> (Coords, i64) {
        let (beta, k) = simple_affine_root(datum, j);
        self.act_root(datum, &beta, k)
    }

    /// Level-zero action: `lambda_mu(x) = x - (x, mu) delta`, `s_0(x) = s_theta(x) + (x, theta) delta`.
    pub fn act_level0(&self, datum: &AffineCartanDatum, v: &WeightVector) -> Result<WeightVector> {
        if !v.lambda0_coeff().is_zero() {
            return Err(Error::NotLevelZero);
        }
        let n = datum.rank();
        let mu = WeightVector::from_root(&datum.translation_to_root(&self.trans), 0);
        let shift = datum.inner_product(v, &mu);
        let mut coords = self.finite.apply_rational(v.finite_part());
        coords.push(v.delta_coeff() - shift);
        coords.push(Rational::zero());
        debug_assert_eq!(coords.len(), n + 2);
        Ok(WeightVector::from_coords(coords))
    }

    /// Level-one affine action on the finite part:
    /// `lambda_mu(x) = x + mu`, `s_0(x) = s_theta(x) + a_0^-1 theta`.
    pub fn act_level1(&self, datum: &AffineCartanDatum, x: &[Rational]) -> Vec<Rational> {
        let mu = datum.translation_to_root(&self.trans);
        let shifted: Vec<Rational> = x.iter().zip(&mu).map(|(a, &b)| a + Rational::from_integer(b)).collect();
        self.finite.apply_rational(&shifted)
    }

    /// `l(s_j w) < l(w)`, read off the level-one image of the alcove point.
    pub fn has_left_descent(&self, datum: &AffineCartanDatum, j: usize) -> bool {
        let x = self.act_level1(datum, datum.alcove_point());
        let pairing = |beta: &[i64]| -> Rational {
            let mut s = Rational::zero();
            for (i, &c) in beta.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (k, xk) in x.iter().enumerate() {
                    s += Rational::from_integer(c) * xk * datum.gram()[i][k];
                }
            }
            s
        };
        if j == 0 {
            let marks = datum.marks();
            let value = pairing(&datum.theta_coords()) * Rational::from_integer(marks[0]);
            value > Rational::from_integer(1)
        } else {
            let mut unit = Coords::from_elem(0, datum.rank());
            unit[j - 1] = 1;
            pairing(&unit).is_negative()
        }
    }

    /// `l(w s_j) < l(w)`, i.e. `w(alpha_j) < 0`.
    pub fn has_right_descent(&self, datum: &AffineCartanDatum, j: usize) -> bool {
        let (beta, k) = self.act_simple_root(datum, j);
        !is_positive_affine_root(&beta, k)
    }

    /// `s_j * self`.
    pub fn left_mul_simple(&self, datum: &AffineCartanDatum, j: usize) -> Self {
        Self::simple(datum, j).mul(datum, self)
    }

    /// `self * s_j`.
    pub fn right_mul_simple(&self, datum: &AffineCartanDatum, j: usize) -> Self {
        if j == 0 {
            return self.mul(datum, &Self::simple(datum, 0));
        }
        let s = FiniteWeylElement::simple(datum, j);
        AffineWeylElement { trans: s.apply_translation(datum, &self.trans), finite: self.finite.compose(&s) }
    }

    /// Reduced word by repeatedly stripping the lowest-index left descent.
    pub fn reduced_word(&self, datum: &AffineCartanDatum) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while !w.is_identity() {
            let j = (0..=datum.rank())
                .find(|&j| w.has_left_descent(datum, j))
                .expect("a non-identity element has a left descent");
            word.push(j);
            w = w.left_mul_simple(datum, j);
        }
        word
    }

    pub fn length(&self, datum: &AffineCartanDatum) -> usize {
        self.reduced_word(datum).len()
    }

    /// Positive real roots made negative by `self`, as `(beta, k)` pairs,
    /// read along the reduced word.
    pub fn inversion_set(&self, datum: &AffineCartanDatum) -> Vec<(Coords, i64)> {
        let word = self.reduced_word(datum);
        let mut out = Vec::with_capacity(word.len());
        // beta_k = s_{i_l} ... s_{i_{k+1}} (alpha_{i_k})
        let mut suffix = Self::identity(datum.rank());
        for &j in word.iter().rev() {
            let (beta, k) = simple_affine_root(datum, j);
            out.push(suffix.inverse(datum).act_root(datum, &beta, k));
            suffix = Self::simple(datum, j).mul(datum, &suffix);
        }
        out
    }

    pub fn to_json(&self, datum: &AffineCartanDatum) -> serde_json::Value {
        let word = self.reduced_word(datum);
        let inversions: Vec<String> =
            self.inversion_set(datum).iter().map(|(b, k)| WeightVector::from_root(b, *k).to_string()).collect();
        json!({
            "type": datum.label(),
            "reduced_word": word,
            "length": word.len(),
            "inversion_set": inversions,
            "finite_word": AffineWeylElement::from_finite(self.finite.clone()).reduced_word(datum),
            "translation": self.trans.to_vec(),
        })
    }
}

/// `alpha_j` as `(beta, k)`; `alpha_0 = -theta + delta` (with `a_0 = 1`).
pub fn simple_affine_root(datum: &AffineCartanDatum, j: usize) -> (Coords, i64) {
    let n = datum.rank();
    if j == 0 {
        (datum.theta_coords().iter().map(|c| -c).collect(), 1)
    } else {
        let mut v = Coords::from_elem(0, n);
        v[j - 1] = 1;
        (v, 0)
    }
}

/// Length of `w lambda_mu` from the closed formula over finite positive roots.
pub fn length_formula(datum: &AffineCartanDatum, w: &FiniteWeylElement, mu: &[i64]) -> Result<usize> {
    let mu_root = datum.translation_to_root(mu);
    let mut total: i64 = 0;
    for alpha in datum.positive_roots() {
        let ratio = datum.coroot_pairing(&mu_root, alpha) / Rational::from_integer(datum.e_root(alpha));
        if !ratio.is_integer() {
            return Err(Error::NonIntegral(format!("(mu, alpha^v)/e_alpha = {ratio}")));
        }
        let v = ratio.to_integer();
        total += if is_positive_finite(&w.apply(alpha)) { v.abs() } else { (v + 1).abs() };
    }
    Ok(total as usize)
}

/// Minimal-length finite `w` with `w(root)` simple; ties broken by the
/// lexicographically smallest reduced word. Returns `(w, j_0)`.
pub fn minimal_conjugator(datum: &AffineCartanDatum, root: &[i64]) -> Result<(FiniteWeylElement, usize)> {
    if !datum.is_root(root) || !is_positive_finite(root) {
        return Err(Error::NotARoot(WeightVector::from_root(root, 0).to_string()));
    }
    let mut best: Option<(usize, Vec<usize>, FiniteWeylElement, usize)> = None;
    for (w, word) in enumerate_finite(datum) {
        let image = w.apply(root);
        let simple = (0..datum.rank()).find(|&j| image.iter().enumerate().all(|(i, &c)| c == i64::from(i == j)));
        if let Some(j) = simple {
            let key = (word.len(), word.clone());
            if best.as_ref().map_or(true, |b| key < (b.0, b.1.clone())) {
                best = Some((word.len(), word, w, j + 1));
            }
        }
    }
    let (_, _, w, j0) = best.expect("every positive root is conjugate to a simple root");
    Ok((w, j0))
}

/// All elements of the finite Weyl group with their reduced words (BFS order).
pub fn enumerate_finite(datum: &AffineCartanDatum) -> Vec<(FiniteWeylElement, Vec<usize>)> {
    let n = datum.rank();
    let mut seen = HashSet::new();
    let id = FiniteWeylElement::identity(n);
    seen.insert(id.clone());
    let mut out = vec![(id.clone(), Vec::new())];
    let mut queue = VecDeque::from([(id, Vec::new())]);
    while let Some((w, word)) = queue.pop_front() {
        for j in 1..=n {
            let next = FiniteWeylElement::simple(datum, j).compose(&w);
            if seen.insert(next.clone()) {
                let mut next_word = vec![j];
                next_word.extend(&word);
                out.push((next.clone(), next_word.clone()));
                queue.push_back((next, next_word));
            }
        }
    }
    out
}

/// All affine Weyl elements of length `<= max_len`, with BFS distance from
/// the identity in the Cayley graph (which is the Coxeter length).
pub fn enumerate_affine(datum: &AffineCartanDatum, max_len: usize) -> Vec<(AffineWeylElement, usize)> {
    let n = datum.rank();
    let id = AffineWeylElement::identity(n);
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![(id.clone(), 0)];
    let mut frontier = vec![id];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for j in 0..=n {
                let v = w.right_mul_simple(datum, j);
                if seen.insert(v.clone()) {
                    out.push((v.clone(), len));
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Every reduced word of `w`.
pub fn all_reduced_words(datum: &AffineCartanDatum, w: &AffineWeylElement) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    if w.is_identity() {
        out.insert(Vec::new());
        return out;
    }
    for j in 0..=datum.rank() {
        if w.has_left_descent(datum, j) {
            for tail in all_reduced_words(datum, &w.left_mul_simple(datum, j)) {
                let mut word = vec![j];
                word.extend(tail);
                out.insert(word);
            }
        }
    }
    out
}

/// Parse an affine Weyl group element: a product of `s0..sn`, translations
/// `t[c1,..,cn]` (in `M` coordinates) and `1`, separated by spaces or `*`.
pub fn parse_element(datum: &AffineCartanDatum, src: &str) -> Result<AffineWeylElement> {
    let n = datum.rank();
    let mut w = AffineWeylElement::identity(n);
    let mut rest = src.trim();
    while !rest.is_empty() {
        let pos = src.len() - rest.len();
        let err = |msg: String| Error::Parse { pos, msg };
        let factor = if let Some(body) = rest.strip_prefix("t[") {
            let end = body.find(']').ok_or_else(|| err("unclosed `t[`".into()))?;
            let coords = body[..end]
                .split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| err(format!("bad coordinate `{}`", c.trim()))))
                .collect::<Result<Coords>>()?;
            if coords.len() != n {
                return Err(Error::Dimension { expected: n, got: coords.len() });
            }
            rest = &body[end + 1..];
            AffineWeylElement::translation(&coords)
        } else if let Some(body) = rest.strip_prefix('s') {
            let digits = body.find(|c: char| !c.is_ascii_digit()).unwrap_or(body.len());
            let j: usize = body[..digits].parse().map_err(|_| err("expected a node index after `s`".into()))?;
            if j > n {
                return Err(Error::NodeOutOfRange { index: j, rank: n });
            }
            rest = &body[digits..];
            AffineWeylElement::simple(datum, j)
        } else if let Some(body) = rest.strip_prefix('1') {
            rest = body;
            AffineWeylElement::identity(n)
        } else {
            return Err(err(format!("unexpected `{}`", rest.chars().next().unwrap_or(' '))));
        };
        w = w.mul(datum, &factor);
        rest = rest.trim_start().trim_start_matches('*').trim_start();
    }
    Ok(w)
}

/// Positive affine roots `beta + k delta` with `0 <= k <= max_k` sent to
/// negative roots by `w`, found by scanning rather than from a reduced word.
pub fn inversions_by_scan(datum: &AffineCartanDatum, w: &AffineWeylElement, max_k: i64) -> Vec<(Coords, i64)> {
    let mut roots: Vec<Coords> = datum.positive_roots().to_vec();
    roots.extend(datum.positive_roots().iter().map(|r| r.iter().map(|c| -c).collect::<Coords>()));
    let mut out = Vec::new();
    for k in 0..=max_k {
        for beta in &roots {
            if !is_positive_affine_root(beta, k) {
                continue;
            }
            let (b, kk) = w.act_root(datum, beta, k);
            if !is_positive_affine_root(&b, kk) {
                out.push((beta.clone(), k));
            }
        }
    }
    out
}

/// Length agreement over every element of length `<= max_len`: BFS
/// distance, reduced word length, the closed formula and the inversion
/// count. Returns the number of elements and the disagreements.
pub fn length_cross_check(datum: &AffineCartanDatum, max_len: usize) -> Result<(usize, Vec<String>)> {
    let elements = enumerate_affine(datum, max_len);
    let mut bad = Vec::new();
    for (w, bfs) in &elements {
        let word = w.reduced_word(datum).len();
        let formula = length_formula(datum, &w.finite, &w.trans)?;
        let scanned = inversions_by_scan(datum, w, max_len as i64 + 1).len();
        let listed = w.inversion_set(datum).len();
        if word != *bfs || formula != *bfs || scanned != *bfs || listed != *bfs {
            bad.push(format!(
                "{:?}: bfs {bfs}, word {word}, formula {formula}, scan {scanned}, listed {listed}",
                w.reduced_word(datum)
            ));
        }
    }
    Ok((elements.len(), bad))
}

/// `w * tau_beta * tau_delta^k`, `beta` in root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DoubleAffineWeylElement {
    pub w: AffineWeylElement,
    pub beta: Coords,
    pub k: i64,
}

impl DoubleAffineWeylElement {
    pub fn identity(n: usize) -> Self {
        DoubleAffineWeylElement { w: AffineWeylElement::identity(n), beta: Coords::from_elem(0, n), k: 0 }
    }

    pub fn from_affine(w: AffineWeylElement) -> Self {
        let n = w.rank();
        DoubleAffineWeylElement { w, beta: Coords::from_elem(0, n), k: 0 }
    }

    pub fn tau(beta: &[i64], k: i64) -> Self {
        DoubleAffineWeylElement { w: AffineWeylElement::identity(beta.len()), beta: Coords::from_slice(beta), k }
    }

    /// `w1 tau_g1 w2 tau_g2 = w1 w2 tau_{w2^-1(g1) + g2}`.
    pub fn mul(&self, datum: &AffineCartanDatum, other: &Self) -> Self {
        let (moved, c) = other.w.inverse(datum).act_root(datum, &self.beta, self.k);
        DoubleAffineWeylElement {
            w: self.w.mul(datum, &other.w),
            beta: moved.iter().zip(&other.beta).map(|(a, b)| a + b).collect(),
            k: c + other.k,
        }
    }

    /// `(w tau_g)^-1 = w^-1 tau_{-w(g)}`.
    pub fn inverse(&self, datum: &AffineCartanDatum) -> Self {
        let (moved, c) = self.w.act_root(datum, &self.beta, self.k);
        DoubleAffineWeylElement { w: self.w.inverse(datum), beta: moved.iter().map(|x| -x).collect(), k: -c }
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.beta.iter().all(|&c| c == 0) && self.k == 0
    }
}

/// The Weyl-level involution into the dual-type group:
/// `w -> w`, `lambda_mu -> tau_{psi_X(mu)}`, `tau_beta -> lambda_{psi_Y(beta)}`,
/// `tau_delta -> tau_{-delta}`.
pub fn phi_weyl(
    datum: &AffineCartanDatum,
    target: &AffineCartanDatum,
    g: &DoubleAffineWeylElement,
) -> DoubleAffineWeylElement {
    // phi(g) = w tau_{mu'} lambda_{beta'} tau_{-k delta}
    //        = w lambda_{beta'} tau_{mu' + (mu', beta') delta - k delta}
    let finite = g.w.finite.to_iota(datum);
    let mu_prime = g.w.trans.clone();
    let beta_prime = g.beta.clone();
    let shift = target.pair_root_translation(&mu_prime, &beta_prime);
    DoubleAffineWeylElement { w: AffineWeylElement { finite, trans: beta_prime }, beta: mu_prime, k: shift - g.k }
}
