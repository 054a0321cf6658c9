//! Affine Cartan data: matrices, marks, the invariant form on
//! `h* = span(alpha_1..alpha_n) + R delta + R Lambda_0`, finite roots and
//! the dual-type datum.
//!
//! Finite root-lattice vectors are integer coordinates in the basis
//! `alpha_1..alpha_n`. Vectors of the translation lattice `M` are integer
//! coordinates in the basis `A_j = e_j alpha_j`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde_json::json;
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Rational = Rational64;

/// Integer coordinate vector, small enough to stay on the stack for rank <= 4.
pub type Coords = SmallVec<[i64; 4]>;

const TYPE_TABLE: &str = include_str!("../data/affine_types.txt");

/// A vector of `h*` in the basis `(alpha_1, .., alpha_n, delta, Lambda_0)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightVector {
    coords: Vec<Rational>,
}

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector { coords: vec![Rational::zero(); n + 2] }
    }

    pub fn from_coords(coords: Vec<Rational>) -> Self {
        assert!(coords.len() >= 2, "a weight vector carries delta and Lambda_0 slots");
        WeightVector { coords }
    }

    /// `alpha_j` for `1 <= j <= n`.
    pub fn simple_root(n: usize, j: usize) -> Self {
        assert!((1..=n).contains(&j), "finite simple roots are indexed 1..=n");
        let mut v = Self::zero(n);
        v.coords[j - 1] = Rational::one();
        v
    }

    pub fn delta(n: usize) -> Self {
        let mut v = Self::zero(n);
        v.coords[n] = Rational::one();
        v
    }

    pub fn lambda0(n: usize) -> Self {
        let mut v = Self::zero(n);
        v.coords[n + 1] = Rational::one();
        v
    }

    /// Finite integer vector plus a multiple of `delta`.
    pub fn from_root(beta: &[i64], k: i64) -> Self {
        let n = beta.len();
        let mut v = Self::zero(n);
        for (slot, &c) in v.coords.iter_mut().zip(beta) {
            *slot = Rational::from_integer(c);
        }
        v.coords[n] = Rational::from_integer(k);
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len() - 2
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn finite_part(&self) -> &[Rational] {
        &self.coords[..self.rank()]
    }

    pub fn delta_coeff(&self) -> Rational {
        self.coords[self.rank()]
    }

    pub fn lambda0_coeff(&self) -> Rational {
        self.coords[self.rank() + 1]
    }

    pub fn scale(&self, c: Rational) -> Self {
        WeightVector { coords: self.coords.iter().map(|&x| x * c).collect() }
    }

    /// Integer finite coordinates, if the vector is a level-zero element of
    /// `Q = Q_fin + Z delta`. Returns `(beta, k)`.
    pub fn as_root_lattice(&self) -> Option<(Coords, i64)> {
        if !self.lambda0_coeff().is_zero() {
            return None;
        }
        let mut beta = Coords::new();
        for c in self.finite_part() {
            if !c.is_integer() {
                return None;
            }
            beta.push(c.to_integer());
        }
        let k = self.delta_coeff();
        k.is_integer().then(|| (beta, k.to_integer()))
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.coords.len(), rhs.coords.len());
        WeightVector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.coords.len(), rhs.coords.len());
        WeightVector { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for WeightVector {
    /// Renders as e.g. `3a1+2a2`, `-a1+2d`, `L0`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank();
        let mut names: Vec<String> = (1..=n).map(|j| format!("a{j}")).collect();
        names.push("d".into());
        names.push("L0".into());
        let mut out = String::new();
        for (c, name) in self.coords.iter().zip(&names) {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Which lattice a [`LatticeVector`]'s integer coordinates refer to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LatticeKind {
    /// `Q_fin`, basis `alpha_1..alpha_n`.
    FiniteRoot,
    /// `M`, basis `A_1..A_n`.
    Translation,
    /// `Q = Q_fin + Z delta`, basis `alpha_1..alpha_n, delta`.
    AffineRoot,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeVector {
    pub kind: LatticeKind,
    pub coords: Coords,
}

impl LatticeVector {
    pub fn finite_root(coords: &[i64]) -> Self {
        LatticeVector { kind: LatticeKind::FiniteRoot, coords: Coords::from_slice(coords) }
    }

    pub fn translation(coords: &[i64]) -> Self {
        LatticeVector { kind: LatticeKind::Translation, coords: Coords::from_slice(coords) }
    }

    pub fn affine_root(beta: &[i64], k: i64) -> Self {
        let mut coords = Coords::from_slice(beta);
        coords.push(k);
        LatticeVector { kind: LatticeKind::AffineRoot, coords }
    }

    pub fn to_weight(&self, datum: &AffineCartanDatum) -> Result<WeightVector> {
        let n = datum.rank();
        let expected = match self.kind {
            LatticeKind::AffineRoot => n + 1,
            _ => n,
        };
        if self.coords.len() != expected {
            return Err(Error::Dimension { expected, got: self.coords.len() });
        }
        Ok(match self.kind {
            LatticeKind::FiniteRoot => WeightVector::from_root(&self.coords, 0),
            LatticeKind::AffineRoot => WeightVector::from_root(&self.coords[..n], self.coords[n]),
            LatticeKind::Translation => WeightVector::from_root(&datum.translation_to_root(&self.coords), 0),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum LengthClass {
    Short,
    Long,
}

/// All numerical invariants of one affine type.
#[derive(Clone, Debug)]
pub struct AffineCartanDatum {
    label: String,
    n: usize,
    a: Vec<Vec<i64>>,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    d: Vec<Rational>,
    e: Vec<Rational>,
    e_int: Vec<i64>,
    p: i64,
    m: i64,
    theta: WeightVector,
    theta_s: WeightVector,
    gram: Vec<Vec<Rational>>,
    positive_roots: Vec<Coords>,
    min_len2: Rational,
    alcove_point: Vec<Rational>,
}

struct Record {
    label: String,
    a: Vec<Vec<i64>>,
    marks: Vec<i64>,
    comarks: Vec<i64>,
}

fn parse_ints(label: &str, s: &str) -> Result<Vec<i64>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::InvalidData { label: label.to_string(), reason: format!("bad integer `{t}`") })
        })
        .collect()
}

fn table_records() -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for line in TYPE_TABLE.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(Error::InvalidData {
                label: fields[0].to_string(),
                reason: "expected 4 `|`-separated fields".into(),
            });
        }
        let label = fields[0].to_string();
        let a = fields[1].split(';').map(|row| parse_ints(&label, row)).collect::<Result<Vec<_>>>()?;
        let marks = parse_ints(&label, fields[2])?;
        let comarks = parse_ints(&label, fields[3])?;
        out.push(Record { label, a, marks, comarks });
    }
    Ok(out)
}

/// Labels of every type in the compiled-in table, in table order.
pub fn supported_labels() -> Vec<String> {
    table_records().expect("compiled-in type table parses").into_iter().map(|r| r.label).collect()
}

fn is_excluded_label(label: &str) -> bool {
    // A_{2n}^{(2)}, written e.g. `A2^(2)` or `A4(2)~`.
    let l = label.trim();
    let Some(rest) = l.strip_prefix('A') else { return false };
    let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
    let tail = &rest[digits.len()..];
    match digits.parse::<u32>() {
        Ok(k) => k % 2 == 0 && k > 0 && tail.contains("(2)"),
        Err(_) => false,
    }
}

/// Reflection `s_k` on finite root coordinates: `beta_k -= <alpha_k^v, beta>`.
fn reflect_coords(cartan: &[Vec<i64>], k: usize, beta: &mut [i64]) {
    let pairing: i64 = cartan[k].iter().zip(beta.iter()).map(|(a, b)| a * b).sum();
    beta[k] -= pairing;
}

/// All finite roots (positive and negative) of the finite Cartan matrix
/// `cartan` (indices 0-based), by closing the simple roots under the simple
/// reflections.
fn root_closure(cartan: &[Vec<i64>]) -> BTreeSet<Coords> {
    let n = cartan.len();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    for j in 0..n {
        let mut v = Coords::from_elem(0, n);
        v[j] = 1;
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(beta) = queue.pop_front() {
        for k in 0..n {
            let mut image = beta.clone();
            reflect_coords(cartan, k, &mut image);
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen
}

fn height(beta: &[i64]) -> i64 {
    beta.iter().sum()
}

fn lcm_denominators<'a>(values: impl Iterator<Item = &'a Rational>) -> i64 {
    values.fold(1i64, |acc, v| acc.lcm(v.denom()))
}

impl AffineCartanDatum {
    /// Loads a type from the compiled-in table.
    pub fn load(label: &str) -> Result<Self> {
        if is_excluded_label(label) {
            return Err(Error::ExcludedType(label.to_string()));
        }
        let record = table_records()?
            .into_iter()
            .find(|r| r.label == label)
            .ok_or_else(|| Error::UnknownType(label.to_string()))?;
        Self::from_record(record)
    }

    fn from_record(rec: Record) -> Result<Self> {
        let Record { label, a, marks, comarks } = rec;
        let bad = |reason: String| Error::InvalidData { label: label.clone(), reason };
        let size = a.len();
        if size < 2 || a.iter().any(|row| row.len() != size) {
            return Err(bad("matrix is not square of size >= 2".into()));
        }
        if marks.len() != size || comarks.len() != size {
            return Err(bad("marks/comarks length does not match matrix".into()));
        }
        for j in 0..size {
            if a[j][j] != 2 {
                return Err(bad(format!("diagonal entry a_{j}{j} != 2")));
            }
            for k in 0..size {
                if j != k && (a[j][k] > 0 || (a[j][k] == 0) != (a[k][j] == 0)) {
                    return Err(bad(format!("entries a_{j}{k}, a_{k}{j} are not a Cartan pair")));
                }
            }
        }
        if marks[0] == 2 {
            return Err(Error::ExcludedType(label));
        }
        if marks[0] != 1 || marks.iter().chain(&comarks).any(|&x| x <= 0) {
            return Err(bad("marks must be positive with a_0 = 1".into()));
        }
        for j in 0..size {
            let row: i64 = (0..size).map(|k| a[j][k] * marks[k]).sum();
            let col: i64 = (0..size).map(|k| comarks[k] * a[k][j]).sum();
            if row != 0 || col != 0 {
                return Err(bad(format!("marks/comarks are not null vectors at index {j}")));
            }
        }

        let n = size - 1;
        let d: Vec<Rational> = (0..size).map(|j| Rational::new(marks[j], comarks[j])).collect();
        for j in 0..size {
            for k in 0..size {
                if Rational::from_integer(a[j][k]) / d[j] != Rational::from_integer(a[k][j]) / d[k] {
                    return Err(bad("d_j^-1 a_jk is not symmetric".into()));
                }
            }
        }

        // Finite block (nodes 1..n), 0-based.
        let cartan: Vec<Vec<i64>> = (1..size).map(|j| a[j][1..].to_vec()).collect();
        let roots = root_closure(&cartan);
        let mut positive: Vec<Coords> = roots.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
        positive.sort_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)));

        let finite_gram = |x: &[i64], y: &[i64]| -> Rational {
            let mut s = Rational::zero();
            for j in 0..n {
                for k in 0..n {
                    if x[j] != 0 && y[k] != 0 {
                        s += Rational::from_integer(x[j] * y[k] * a[j + 1][k + 1]) / d[j + 1];
                    }
                }
            }
            s
        };
        let len2: Vec<Rational> = positive.iter().map(|r| finite_gram(r, r)).collect();
        let min_len2 = *len2.iter().min().expect("nonempty root system");
        let max_len2 = *len2.iter().max().expect("nonempty root system");

        let theta_coords: Coords = marks[1..].iter().copied().collect();
        let highest = positive.last().expect("nonempty root system");
        if *highest != theta_coords {
            return Err(bad(format!(
                "marks give theta = {:?} but the highest root is {:?}",
                theta_coords.as_slice(),
                highest.as_slice()
            )));
        }
        if finite_gram(&theta_coords, &theta_coords) != max_len2 {
            return Err(bad("theta is not a long root".into()));
        }
        let theta_s_coords = positive
            .iter()
            .zip(&len2)
            .filter(|(_, l)| **l == min_len2)
            .map(|(r, _)| r.clone())
            .max_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)))
            .expect("short roots exist");

        let is_short = |j: usize| {
            let l = Rational::from_integer(2) / d[j];
            l == min_len2
        };
        let a0_inv = Rational::new(1, marks[0]);
        let e: Vec<Rational> = (0..size).map(|j| if d[j] > a0_inv { d[j] } else { a0_inv }).collect();
        let mut e_short = None;
        let mut e_long = None;
        for j in 1..size {
            let slot = if is_short(j) { &mut e_short } else { &mut e_long };
            match slot {
                None => *slot = Some(e[j]),
                Some(v) if *v != e[j] => return Err(bad("e_j is not constant on a length class".into())),
                _ => {}
            }
        }
        let p_rat = e_short.expect("a short node exists");
        if !p_rat.is_integer() || !(1..=3).contains(&p_rat.to_integer()) {
            return Err(bad(format!("p = {p_rat} is not in {{1,2,3}}")));
        }
        let e_int: Vec<i64> = e
            .iter()
            .map(|x| if x.is_integer() { Ok(x.to_integer()) } else { Err(bad(format!("e = {x} is not integral"))) })
            .collect::<Result<_>>()?;

        // Gram matrix on (alpha_1..alpha_n, delta, Lambda_0).
        let mut gram = vec![vec![Rational::zero(); n + 2]; n + 2];
        for j in 0..n {
            for k in 0..n {
                gram[j][k] = Rational::from_integer(a[j + 1][k + 1]) / d[j + 1];
            }
        }
        // (delta, Lambda_0) = a_0 (alpha_0, Lambda_0) = a_0 a_0^-1.
        gram[n][n + 1] = Rational::from_integer(marks[0]) * a0_inv;
        gram[n + 1][n] = gram[n][n + 1];

        // m: common denominator of (alpha_j, A_k) and (alpha_j, alpha_k).
        let mut pairings = Vec::new();
        for j in 0..n {
            for k in 0..n {
                pairings.push(gram[j][k]);
                pairings.push(gram[j][k] * e[k + 1]);
            }
        }
        let m = lcm_denominators(pairings.iter());

        // Interior point of the fundamental alcove: (c, alpha_j) = 1/h for all
        // finite j, so (c, theta) = (h - 1)/h < 1.
        let coxeter_h: i64 = marks.iter().sum();
        let finite_block: Vec<Vec<Rational>> = (0..n).map(|j| gram[j][..n].to_vec()).collect();
        let alcove_point = solve(&finite_block, &vec![Rational::new(1, coxeter_h); n])
            .ok_or_else(|| bad("finite Gram matrix is singular".into()))?;

        let datum = AffineCartanDatum {
            alcove_point,
            theta: WeightVector::from_root(&theta_coords, 0),
            theta_s: WeightVector::from_root(&theta_s_coords, 0),
            label,
            n,
            a,
            marks,
            comarks,
            d,
            e,
            e_int,
            p: p_rat.to_integer(),
            m,
            gram,
            positive_roots: positive,
            min_len2,
        };
        // A_theta = theta must lie in M for the T_0 elimination; every
        // supported type passes this.
        if datum.root_to_translation(&theta_coords).is_none() {
            return Err(Error::InvalidData {
                label: datum.label.clone(),
                reason: "theta is not in the translation lattice M".into(),
            });
        }
        Ok(datum)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Rank `n` of the finite part.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Affine Cartan matrix, node 0 first.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// `<alpha_j^v, alpha_k>` for finite nodes `1 <= j, k <= n`.
    pub fn cartan_entry(&self, j: usize, k: usize) -> i64 {
        self.a[j][k]
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn d(&self, j: usize) -> Rational {
        self.d[j]
    }

    pub fn e(&self, j: usize) -> Rational {
        self.e[j]
    }

    /// `e_j` as an integer (always integral for supported types).
    pub fn e_int(&self, j: usize) -> i64 {
        self.e_int[j]
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn theta(&self) -> &WeightVector {
        &self.theta
    }

    pub fn theta_s(&self) -> &WeightVector {
        &self.theta_s
    }

    pub fn theta_coords(&self) -> Coords {
        self.marks[1..].iter().copied().collect()
    }

    pub fn theta_s_coords(&self) -> Coords {
        self.theta_s.as_root_lattice().expect("theta_s is integral").0
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn is_simply_laced(&self) -> bool {
        self.positive_roots.iter().all(|r| self.root_pairing(r, r) == self.min_len2)
    }

    /// Canonical form on `h*`.
    pub fn inner_product(&self, v: &WeightVector, w: &WeightVector) -> Rational {
        assert_eq!(v.coords.len(), self.n + 2, "weight vector over a different datum");
        assert_eq!(w.coords.len(), self.n + 2, "weight vector over a different datum");
        let mut s = Rational::zero();
        for (j, x) in v.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in w.coords.iter().enumerate() {
                if !y.is_zero() {
                    s += x * y * self.gram[j][k];
                }
            }
        }
        s
    }

    /// `(x, y)` for finite integer vectors.
    pub fn root_pairing(&self, x: &[i64], y: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for j in 0..self.n {
            if x[j] == 0 {
                continue;
            }
            for k in 0..self.n {
                if y[k] != 0 {
                    s += Rational::from_integer(x[j] * y[k]) * self.gram[j][k];
                }
            }
        }
        s
    }

    /// `(x, beta^v)` for finite integer vectors, `beta` a root.
    pub fn coroot_pairing(&self, x: &[i64], beta: &[i64]) -> Rational {
        let l = self.root_pairing(beta, beta);
        Rational::from_integer(2) * self.root_pairing(x, beta) / l
    }

    /// `<beta, alpha_k^v>` for a finite integer vector and a finite node `k` (1-based).
    pub fn simple_coroot_pairing(&self, beta: &[i64], k: usize) -> i64 {
        (0..self.n).map(|j| self.a[k][j + 1] * beta[j]).sum()
    }

    /// `(beta, mu)` with `beta` in root coordinates and `mu` in `M` coordinates.
    pub fn pair_root_translation(&self, beta: &[i64], mu: &[i64]) -> i64 {
        let v = self.root_pairing(beta, &self.translation_to_root(mu));
        assert!(v.is_integer(), "(Q_fin, M) pairing is integral for supported types");
        v.to_integer()
    }

    /// `M` coordinates to root coordinates: `sum c_j A_j = sum c_j e_j alpha_j`.
    pub fn translation_to_root(&self, mu: &[i64]) -> Coords {
        mu.iter().enumerate().map(|(j, c)| c * self.e_int[j + 1]).collect()
    }

    /// Root coordinates to `M` coordinates, if the vector lies in `M`.
    pub fn root_to_translation(&self, beta: &[i64]) -> Option<Coords> {
        let mut out = Coords::new();
        for (j, &c) in beta.iter().enumerate() {
            let e = self.e_int[j + 1];
            if c % e != 0 {
                return None;
            }
            out.push(c / e);
        }
        Some(out)
    }

    /// A point strictly inside the fundamental alcove, in root coordinates.
    pub fn alcove_point(&self) -> &[Rational] {
        &self.alcove_point
    }

    pub fn positive_roots(&self) -> &[Coords] {
        &self.positive_roots
    }

    pub fn positive_root_weights(&self) -> Vec<WeightVector> {
        self.positive_roots.iter().map(|r| WeightVector::from_root(r, 0)).collect()
    }

    pub fn is_root(&self, beta: &[i64]) -> bool {
        let neg: Coords = beta.iter().map(|c| -c).collect();
        self.positive_roots.iter().any(|r| r.as_slice() == beta || *r == neg)
    }

    pub fn root_class(&self, beta: &[i64]) -> LengthClass {
        if self.root_pairing(beta, beta) == self.min_len2 {
            LengthClass::Short
        } else {
            LengthClass::Long
        }
    }

    /// Length class of node `j` (node 0 has the class of `theta`).
    /// In simply-laced types every node counts as short.
    pub fn node_class(&self, j: usize) -> LengthClass {
        if Rational::from_integer(2) / self.d[j] == self.min_len2 {
            LengthClass::Short
        } else {
            LengthClass::Long
        }
    }

    /// `e_beta` for a finite root.
    pub fn e_root(&self, beta: &[i64]) -> i64 {
        let class = self.root_class(beta);
        (1..=self.n)
            .find(|&j| self.node_class(j) == class)
            .map(|j| self.e_int[j])
            .expect("every length class has a simple root")
    }

    /// Dual-type datum together with the coordinate correspondence.
    pub fn iota_datum(&self) -> Result<(AffineCartanDatum, LatticeCorrespondence)> {
        let n = self.n;
        let p = Rational::from_integer(self.p);
        // (alpha^i_j, alpha^i_k) = (A_j, A_k) / p
        let gram: Vec<Vec<Rational>> =
            (0..n).map(|j| (0..n).map(|k| self.gram[j][k] * self.e[j + 1] * self.e[k + 1] / p).collect()).collect();
        let (matrix, marks, comarks) = untwisted_extension(&self.label, &gram)?;
        let record = table_records()?.into_iter().find(|r| r.a == matrix).ok_or_else(|| Error::InvalidData {
            label: self.label.clone(),
            reason: format!("dual-type matrix {matrix:?} is not in the type table"),
        })?;
        if record.marks != marks || record.comarks != comarks {
            return Err(Error::InvalidData {
                label: record.label,
                reason: "table marks disagree with the dual-type construction".into(),
            });
        }
        let target = Self::from_record(record)?;
        let corr = LatticeCorrespondence { source: self.label.clone(), target: target.label.clone(), rank: n };
        Ok((target, corr))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rat = |r: &Rational| r.to_string();
        json!({
            "label": self.label,
            "n": self.n,
            "matrix": self.a,
            "marks": self.marks,
            "comarks": self.comarks,
            "d": self.d.iter().map(rat).collect::<Vec<_>>(),
            "e": self.e.iter().map(rat).collect::<Vec<_>>(),
            "p": self.p,
            "m": self.m,
            "theta": self.theta.to_string(),
            "theta_s": self.theta_s.to_string(),
            "node_classes": (0..=self.n).map(|j| match self.node_class(j) {
                LengthClass::Short => "short",
                LengthClass::Long => "long",
            }).collect::<Vec<_>>(),
            "gram": self.gram.iter().map(|row| row.iter().map(rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "positive_roots": self.positive_root_weights().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Solves `m x = rhs` over the rationals; `None` if singular.
fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> =
        m.iter().zip(rhs).map(|(row, &b)| row.iter().copied().chain([b]).collect()).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col];
                let pivot_row = aug[col].clone();
                for (x, y) in aug[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n]).collect())
}

/// Builds the untwisted affine matrix, marks and comarks over a finite Gram
/// matrix normalized so long roots have square length 2.
fn untwisted_extension(label: &str, gram: &[Vec<Rational>]) -> Result<(Vec<Vec<i64>>, Vec<i64>, Vec<i64>)> {
    let n = gram.len();
    let bad = |reason: String| Error::InvalidData { label: label.to_string(), reason };
    let two = Rational::from_integer(2);
    let to_int = |r: Rational| -> Result<i64> {
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(bad(format!("non-integral Cartan entry {r}")))
        }
    };
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|j| (0..n).map(|k| to_int(two * gram[j][k] / gram[j][j])).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let roots = root_closure(&cartan);
    let theta = roots
        .iter()
        .max_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)))
        .expect("nonempty root system")
        .clone();
    let pair = |x: &[i64], j: usize| -> Rational { (0..n).map(|k| Rational::from_integer(x[k]) * gram[k][j]).sum() };
    let theta_len2: Rational = (0..n).map(|j| Rational::from_integer(theta[j]) * pair(&theta, j)).sum();
    // Affine Gram on alpha_0..alpha_n with alpha_0 = delta - theta.
    let mut g = vec![vec![Rational::zero(); n + 1]; n + 1];
    g[0][0] = theta_len2;
    for j in 0..n {
        g[0][j + 1] = -pair(&theta, j);
        g[j + 1][0] = g[0][j + 1];
        for k in 0..n {
            g[j + 1][k + 1] = gram[j][k];
        }
    }
    let matrix: Vec<Vec<i64>> = (0..=n)
        .map(|j| (0..=n).map(|k| to_int(two * g[j][k] / g[j][j])).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut marks = vec![1];
    marks.extend(theta.iter().copied());
    let comarks: Vec<i64> =
        (0..=n).map(|j| to_int(Rational::from_integer(marks[j]) * g[j][j] / two)).collect::<Result<_>>()?;
    Ok((matrix, marks, comarks))
}

/// Coordinate correspondence between a datum and its dual-type datum.
///
/// `psi_x: M -> Q_fin^iota` sends `A_j` to `alpha_j^iota`, and
/// `psi_y: Q_fin -> M^iota` sends `alpha_j` to `A_j^iota`. Both are the
/// identity on integer coordinates; the `sqrt(p)` scaling is absorbed into
/// the choice of bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCorrespondence {
    pub source: String,
    pub target: String,
    pub rank: usize,
}

impl LatticeCorrespondence {
    pub fn psi_x(&self, mu: &[i64]) -> Coords {
        assert_eq!(mu.len(), self.rank);
        Coords::from_slice(mu)
    }

    pub fn psi_y(&self, beta: &[i64]) -> Coords {
        assert_eq!(beta.len(), self.rank);
        Coords::from_slice(beta)
    }

    pub fn inverse(&self) -> LatticeCorrespondence {
        LatticeCorrespondence { source: self.target.clone(), target: self.source.clone(), rank: self.rank }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn g2_data() {
        let g2 = AffineCartanDatum::load("G2~").unwrap();
        assert_eq!(g2.p(), 3);
        let a1 = WeightVector::simple_root(2, 1);
        let a2 = WeightVector::simple_root(2, 2);
        assert_eq!(g2.inner_product(&a1, &a1), r(2, 3));
        assert_eq!(g2.inner_product(&a1, &a2), r(-1, 1));
        assert_eq!(g2.inner_product(&a2, &a2), r(2, 1));
        assert_eq!(g2.theta().to_string(), "3a1+2a2");
        assert_eq!(g2.theta_s().to_string(), "2a1+a2");
        assert_eq!(g2.m(), 3);
    }

    #[test]
    fn a1_data() {
        let a1 = AffineCartanDatum::load("A1~").unwrap();
        assert_eq!(a1.p(), 1);
        assert_eq!(a1.e(1), r(1, 1));
        assert_eq!(a1.theta(), a1.theta_s());
        assert_eq!(a1.theta().to_string(), "a1");
        assert!(a1.is_simply_laced());
    }

    #[test]
    fn delta_and_lambda0_pairings() {
        for label in supported_labels() {
            let datum = AffineCartanDatum::load(&label).unwrap();
            let n = datum.rank();
            let delta = WeightVector::delta(n);
            let l0 = WeightVector::lambda0(n);
            assert_eq!(datum.inner_product(&delta, &WeightVector::simple_root(n, 1)), r(0, 1));
            assert_eq!(datum.inner_product(&delta, &delta), r(0, 1));
            assert_eq!(datum.inner_product(&l0, &delta), r(1, 1));
            assert_eq!(datum.inner_product(&l0, &l0), r(0, 1));
        }
    }

    #[test]
    fn c2_theta_pairing() {
        let c2 = AffineCartanDatum::load("C2~").unwrap();
        assert_eq!(c2.inner_product(c2.theta(), c2.theta_s()), r(1, 1));
    }

    #[test]
    fn unknown_and_excluded_labels() {
        assert_eq!(AffineCartanDatum::load("E9~").unwrap_err(), Error::UnknownType("E9~".into()));
        assert_eq!(AffineCartanDatum::load("A2^(2)").unwrap_err(), Error::ExcludedType("A2^(2)".into()));
        assert_eq!(AffineCartanDatum::load("A4^(2)").unwrap_err(), Error::ExcludedType("A4^(2)".into()));
    }

    #[test]
    fn excluded_by_a0() {
        // A_2^(2): marks (2, 1), comarks (1, 2).
        let rec = Record {
            label: "twisted".into(),
            a: vec![vec![2, -4], vec![-1, 2]],
            marks: vec![2, 1],
            comarks: vec![1, 2],
        };
        assert!(matches!(AffineCartanDatum::from_record(rec), Err(Error::ExcludedType(_))));
    }

    #[test]
    fn rejects_broken_marks() {
        let rec = Record {
            label: "broken".into(),
            a: vec![vec![2, -2], vec![-2, 2]],
            marks: vec![1, 2],
            comarks: vec![1, 1],
        };
        assert!(matches!(AffineCartanDatum::from_record(rec), Err(Error::InvalidData { .. })));
    }

    #[test]
    fn iota_pairs() {
        let pairs = [
            ("A1~", "A1~"),
            ("A2~", "A2~"),
            ("A3~", "A3~"),
            ("B2~", "C2~"),
            ("C2~", "B2~"),
            ("B3~", "C3~"),
            ("C3~", "B3~"),
            ("D4~", "D4~"),
            ("G2~", "G2~*"),
            ("G2~*", "G2~"),
        ];
        for (src, dst) in pairs {
            let datum = AffineCartanDatum::load(src).unwrap();
            let (target, corr) = datum.iota_datum().unwrap();
            assert_eq!(target.label(), dst, "iota({src})");
            assert_eq!(corr.target, dst);
            let (back, corr2) = target.iota_datum().unwrap();
            assert_eq!(back.label(), src);
            let mu: Coords = (1..=datum.rank() as i64).collect();
            assert_eq!(corr2.psi_x(&corr.psi_y(&mu)), mu);
            assert_eq!(corr2.psi_y(&corr.psi_x(&mu)), mu);
        }
    }

    #[test]
    fn iota_scaling_is_consistent() {
        // A_j^iota = sqrt(p) alpha_j needs e_j * e_j^iota = p on every node.
        for label in supported_labels() {
            let datum = AffineCartanDatum::load(&label).unwrap();
            let (target, _) = datum.iota_datum().unwrap();
            assert_eq!(target.p(), datum.p());
            for j in 1..=datum.rank() {
                assert_eq!(datum.e_int(j) * target.e_int(j), datum.p(), "{label} node {j}");
            }
        }
    }

    #[test]
    fn weight_display() {
        let v = WeightVector::from_root(&[-1, 0], 2);
        assert_eq!(v.to_string(), "-a1+2d");
        assert_eq!(WeightVector::zero(2).to_string(), "0");
        assert_eq!(WeightVector::lambda0(1).to_string(), "L0");
    }
}
