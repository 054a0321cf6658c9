//! The duality map from an algebra to the algebra of the dual type.
//!
//! On generators: `T_j -> (T_j)^-1` for `j >= 1`, `Y_mu -> X_mu`,
//! `X_beta -> Y_beta`, `X_delta -> X_{-delta}`, and on scalars `q -> q^-1`,
//! `t -> t^-1` with the two `t` classes exchanged when `p != 1`. Lattice
//! coordinates are carried over unchanged. `T_0` is first rewritten as
//! `T_{s_theta}^-1 Y_{-theta}`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::{AffineCartanDatum, Coords, Rational};
use crate::coeffs::LaurentCoefficient;
use crate::error::Result;
use crate::hecke::expr::{Expr, GeneratorWord, Token};
use crate::hecke::relations::{alternating, braid_order};
use crate::hecke::{Daha, DahaElement};
use crate::report::{Check, Report};
use crate::weyl::{simple_affine_root, AffineWeylElement, FiniteWeylElement};

/// A word as an expression.
pub fn word(tokens: Vec<Token>) -> Expr {
    Expr::Product(tokens.into_iter().map(Expr::Token).collect())
}

/// `a - b` as an expression.
pub fn difference(a: Expr, b: Expr) -> Expr {
    Expr::Sum(vec![(false, a), (true, b)])
}

fn neg(v: &[i64]) -> Coords {
    v.iter().map(|c| -c).collect()
}

fn unit(n: usize, j: usize) -> Coords {
    let mut v = Coords::from_elem(0, n);
    v[j - 1] = 1;
    v
}

/// A named identity `lhs = rhs` between expressions over one datum.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Relation {
    fn new(name: impl Into<String>, lhs: Expr, rhs: Expr) -> Self {
        Relation { name: name.into(), lhs, rhs }
    }
}

/// The defining relations of the algebra of `h`, with the lattice
/// relations sampled on the box `[-radius, radius]^n`.
pub fn defining_relations(h: &Daha, radius: i64) -> Vec<Relation> {
    let d = h.datum();
    let n = d.rank();
    let c = |j: usize| Token::Coeff(h.hecke_unit(j).clone());
    let mut out = Vec::new();

    for i in 0..=n {
        for j in i + 1..=n {
            if let Some(m) = braid_order(d.cartan_entry(i, j) * d.cartan_entry(j, i)) {
                let l = alternating(i, j, m).into_iter().map(Token::T).collect();
                let r = alternating(j, i, m).into_iter().map(Token::T).collect();
                out.push(Relation::new(format!("braid T{i} T{j}"), word(l), word(r)));
            }
        }
    }
    for j in 0..=n {
        out.push(Relation::new(
            format!("quadratic T{j}"),
            difference(word(vec![Token::T(j)]), word(vec![Token::TInv(j)])),
            word(vec![c(j)]),
        ));
    }
    for j in 1..=n {
        let a = unit(n, j);
        out.push(Relation::new(
            format!("Y cross T{j}"),
            difference(word(vec![Token::Y(neg(&a)), Token::TInv(j)]), word(vec![Token::T(j), Token::Y(a.clone())])),
            word(vec![c(j)]),
        ));
    }
    for j in 0..=n {
        let (b, k) = simple_affine_root(d, j);
        out.push(Relation::new(
            format!("X cross T{j}"),
            difference(
                word(vec![Token::TInv(j), Token::X(b.clone(), k)]),
                word(vec![Token::X(neg(&b), -k), Token::T(j)]),
            ),
            word(vec![c(j)]),
        ));
    }

    for mu in lattice_box(n, radius) {
        for j in 1..=n {
            match h.translation_coroot_pairing(&mu, j) {
                0 => out.push(Relation::new(
                    format!("Y commutes T{j} mu={:?}", mu.to_vec()),
                    word(vec![Token::T(j), Token::Y(mu.clone())]),
                    word(vec![Token::Y(mu.clone()), Token::T(j)]),
                )),
                1 => out.push(Relation::new(
                    format!("Y conjugate T{j} mu={:?}", mu.to_vec()),
                    word(vec![Token::T(j), Token::Y(mu.clone()), Token::T(j)]),
                    word(vec![Token::Y(h.reflect_translation(&mu, j))]),
                )),
                _ => {}
            }
        }
    }

    let zero = Coords::from_elem(0, n);
    for j in 0..=n {
        out.push(Relation::new(
            format!("X_delta central T{j}"),
            word(vec![Token::T(j), Token::X(zero.clone(), 1)]),
            word(vec![Token::X(zero.clone(), 1), Token::T(j)]),
        ));
    }
    let mut roots: Vec<Coords> = d.positive_roots().to_vec();
    roots.extend(d.positive_roots().iter().map(|r| neg(r)));
    for j in 0..=n {
        let s = AffineWeylElement::simple(d, j);
        for beta in &roots {
            let pairing = if j == 0 {
                -d.coroot_pairing(beta, &d.theta_coords()).to_integer()
            } else {
                d.simple_coroot_pairing(beta, j)
            };
            for k in -1..=1 {
                let x = Token::X(beta.clone(), k);
                match pairing {
                    0 => out.push(Relation::new(
                        format!("X commutes T{j} beta={:?};{k}", beta.to_vec()),
                        word(vec![Token::T(j), x.clone()]),
                        word(vec![x, Token::T(j)]),
                    )),
                    -1 => {
                        let (sb, sk) = s.act_root(d, beta, k);
                        out.push(Relation::new(
                            format!("X conjugate T{j} beta={:?};{k}", beta.to_vec()),
                            word(vec![Token::T(j), x, Token::T(j)]),
                            word(vec![Token::X(sb, sk)]),
                        ))
                    }
                    _ => {}
                }
            }
        }
    }
    out
}

/// Integer points of `[-r, r]^n`.
pub fn lattice_box(n: usize, r: i64) -> Vec<Coords> {
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

/// The map from the algebra of `source` to the algebra of its dual type.
pub struct PhiMap {
    source: Daha,
    target: Daha,
    swap: bool,
    s_theta_word: Vec<usize>,
    theta_m: Coords,
    images: RefCell<HashMap<AffineWeylElement, Rc<DahaElement>>>,
}

impl PhiMap {
    pub fn new(datum: &AffineCartanDatum) -> Result<Self> {
        let (target, _) = datum.iota_datum()?;
        let theta = datum.theta_coords();
        let s_theta = AffineWeylElement::from_finite(FiniteWeylElement::reflection(datum, &theta)?);
        let theta_m = datum.root_to_translation(&theta).ok_or_else(|| crate::error::Error::InvalidData {
            label: datum.label().to_string(),
            reason: "theta does not lie in M".into(),
        })?;
        Ok(PhiMap {
            swap: datum.p() != 1,
            s_theta_word: s_theta.reduced_word(datum),
            theta_m,
            images: RefCell::new(HashMap::new()),
            source: Daha::new(datum.clone()),
            target: Daha::new(target),
        })
    }

    pub fn load(label: &str) -> Result<Self> {
        Self::new(&AffineCartanDatum::load(label)?)
    }

    /// The map in the opposite direction.
    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.target.datum())
    }

    pub fn source(&self) -> &Daha {
        &self.source
    }

    pub fn target(&self) -> &Daha {
        &self.target
    }

    pub fn swaps_lengths(&self) -> bool {
        self.swap
    }

    pub fn phi_coeff(&self, c: &LaurentCoefficient) -> LaurentCoefficient {
        let c = self.source.normalize_coeff(c).transport(self.swap);
        self.target.normalize_coeff(&c)
    }

    /// Image of one source token as a target word.
    pub fn phi_token(&self, tok: &Token) -> GeneratorWord {
        let tokens = match tok {
            Token::T(0) => {
                // T_0 = T_{s_theta}^-1 Y_{-theta}
                let mut v: Vec<Token> = self.s_theta_word.iter().rev().map(|&i| Token::T(i)).collect();
                v.push(Token::X(neg(&self.theta_m), 0));
                v
            }
            Token::TInv(0) => {
                // T_0^-1 = Y_theta T_{s_theta}
                let mut v = vec![Token::X(self.theta_m.clone(), 0)];
                v.extend(self.s_theta_word.iter().map(|&i| Token::TInv(i)));
                v
            }
            Token::T(j) => vec![Token::TInv(*j)],
            Token::TInv(j) => vec![Token::T(*j)],
            Token::X(beta, 0) => vec![Token::Y(beta.clone())],
            Token::X(beta, k) => vec![Token::Y(beta.clone()), Token::Coeff(LaurentCoefficient::q_pow(*k))],
            Token::Y(mu) => vec![Token::X(mu.clone(), 0)],
            Token::Coeff(c) => vec![Token::Coeff(self.phi_coeff(c))],
        };
        GeneratorWord::new(tokens)
    }

    pub fn phi_word(&self, w: &GeneratorWord) -> GeneratorWord {
        GeneratorWord::new(w.tokens().iter().flat_map(|t| self.phi_token(t).0).collect())
    }

    pub fn phi_expr(&self, e: &Expr) -> Expr {
        match e {
            Expr::Token(t) => word(self.phi_token(t).0),
            Expr::Product(fs) => Expr::Product(fs.iter().map(|f| self.phi_expr(f)).collect()),
            Expr::Sum(ts) => Expr::Sum(ts.iter().map(|(s, t)| (*s, self.phi_expr(t))).collect()),
        }
    }

    /// Evaluate the image of a source word in the target algebra.
    pub fn phi_apply(&self, w: &GeneratorWord) -> Result<DahaElement> {
        self.target.evaluate(&self.phi_word(w))
    }

    /// `phi(T_u)`, built from the image of `s_j u` for the first letter `j`
    /// of the reduced word, so that suffixes are shared between calls.
    pub fn phi_t_word(&self, u: &AffineWeylElement) -> Result<Rc<DahaElement>> {
        if let Some(hit) = self.images.borrow().get(u) {
            return Ok(hit.clone());
        }
        let t = &self.target;
        let image = match self.source.reduced_word(u).first() {
            None => t.one(),
            Some(&j) => {
                let rest = u.left_mul_simple(self.source.datum(), j);
                t.lmul_word(&self.phi_token(&Token::T(j)), &*self.phi_t_word(&rest)?)?
            }
        };
        let image = Rc::new(image);
        self.images.borrow_mut().insert(u.clone(), image.clone());
        Ok(image)
    }

    /// Image of an element given in normal form: `X_beta T_u -> Y_beta phi(T_u)`.
    pub fn phi_element(&self, h: &DahaElement) -> Result<DahaElement> {
        let t = &self.target;
        let mut by_beta: BTreeMap<&Coords, DahaElement> = BTreeMap::new();
        for (beta, u, c) in h.terms() {
            let image = self.phi_t_word(u)?;
            by_beta.entry(beta).or_insert_with(|| DahaElement::zero(t.rank())).add_scaled(&image, &self.phi_coeff(c));
        }
        let mut out = DahaElement::zero(t.rank());
        for (beta, sum) in by_beta {
            out = &out + &t.lmul_y(beta, &sum)?;
        }
        Ok(out)
    }

    /// `phi(lhs) = phi(rhs)` in the target algebra.
    pub fn transport(&self, rel: &Relation) -> Result<Check> {
        let l = self.target.evaluate_expr(&self.phi_expr(&rel.lhs))?;
        let r = self.target.evaluate_expr(&self.phi_expr(&rel.rhs))?;
        Ok(if l == r {
            Check::new(rel.name.clone(), true)
        } else {
            Check::with_witness(rel.name.clone(), false, (&l - &r).render(self.target.datum()))
        })
    }

    /// Every generator token of the source, for involutivity checks.
    pub fn generator_tokens(&self) -> Vec<Token> {
        let d = self.source.datum();
        let n = d.rank();
        let mut out = Vec::new();
        for j in 0..=n {
            out.push(Token::T(j));
            out.push(Token::TInv(j));
        }
        for j in 1..=n {
            let a = unit(n, j);
            out.push(Token::X(a.clone(), 0));
            out.push(Token::X(neg(&a), 0));
            out.push(Token::Y(a.clone()));
            out.push(Token::Y(neg(&a)));
        }
        out.push(Token::X(Coords::from_elem(0, n), 1));
        out.push(Token::Coeff(LaurentCoefficient::q_pow(1)));
        out.push(Token::Coeff(LaurentCoefficient::ts_half(1)));
        if !d.is_simply_laced() {
            out.push(Token::Coeff(LaurentCoefficient::tl_half(1)));
        }
        out
    }
}

/// The identity bridging the `T_0` relation of the dual type back to the
/// source: `phi^(X_{-alpha_0} T_0)` computed in the source algebra, compared
/// with the closed forms for `p = 1` and `p != 1`.
pub fn case_bridge_checks(phi: &PhiMap) -> Result<Vec<Check>> {
    let back = phi.inverse()?;
    let h = phi.source();
    let d = h.datum();
    let n = d.rank();
    let dual = phi.target().datum();
    let dual_theta = dual.theta_coords();
    let e_word = GeneratorWord::new(vec![Token::X(dual_theta.clone(), -1), Token::T(0)]);
    let e_inv_word = GeneratorWord::new(vec![Token::TInv(0), Token::X(neg(&dual_theta), 1)]);
    let e = back.phi_apply(&e_word)?;
    let e_inv = back.phi_apply(&e_inv_word)?;
    let mut out = Vec::new();
    let theta = d.theta_coords();
    let render = |x: &DahaElement| x.render(d);

    let closed_form = if d.p() == 1 {
        h.evaluate(&GeneratorWord::new(vec![Token::TInv(0), Token::X(neg(&theta), 1)]))?
    } else {
        let theta_s = d.theta_s_coords();
        let diff: Coords = theta.iter().zip(&theta_s).map(|(a, b)| a - b).collect();
        let s_diff = AffineWeylElement::from_finite(FiniteWeylElement::reflection(d, &diff)?);
        let mut tokens = vec![Token::TInv(0)];
        tokens.extend(h.reduced_word(&s_diff).iter().rev().map(|&i| Token::TInv(i)));
        tokens.push(Token::X(diff.clone(), 0));
        tokens.push(Token::T(0));
        let chain_end = h.evaluate(&GeneratorWord::new(tokens))?;

        // q^-1 Y_{theta_s^v} T_{s_theta_s} X_{-theta_s}
        let p = d.p();
        let coroot: Coords = theta_s.iter().map(|c| c * p).collect();
        let coroot_m = d.root_to_translation(&coroot).expect("theta_s^v lies in M");
        out.push(Check::new("dual highest root is theta_s^v", dual_theta == coroot_m));
        let s_ts = FiniteWeylElement::reflection(d, &theta_s)?;
        let dual_s = FiniteWeylElement::reflection(dual, &dual_theta)?;
        out.push(Check::new("s_theta_dual equals s_theta_s", s_ts.to_iota(d) == dual_s));
        let mut tokens = vec![Token::Coeff(LaurentCoefficient::q_pow(-1)), Token::Y(coroot_m)];
        tokens.extend(h.reduced_word(&AffineWeylElement::from_finite(s_ts)).iter().map(|&i| Token::T(i)));
        tokens.push(Token::X(neg(&theta_s), 0));
        let middle = h.evaluate(&GeneratorWord::new(tokens))?;
        out.push(Check::with_witness("bridge middle form", e == middle, render(&(&e - &middle))));
        chain_end
    };
    let label = if d.p() == 1 { "bridge p=1" } else { "bridge p>1" };
    out.push(Check::with_witness(label, e == closed_form, render(&(&e - &closed_form))));
    out.push(Check::new("bridge inverse", h.multiply(&e, &e_inv) == h.one()));

    // phi^(t_0) = t_s^-1 (the dual t_0 has the class of the dual theta)
    let t0 = phi.target().hecke_unit(0).clone();
    let expected = back.phi_coeff(&t0).scale(Rational::from_integer(-1));
    let lhs = &e - &e_inv;
    out.push(Check::with_witness("transported quadratic bridge", h.is_scalar(&lhs, &expected), render(&lhs)));
    if d.p() != 1 {
        let short = LaurentCoefficient::hecke_unit(false);
        out.push(Check::new("bridge scalar is the short unit", expected == short));
        // conjugating by T_0 gives the statement for T_{s_{theta - theta_s}}^-1 X_{theta - theta_s}
        let t0 = h.t_generator(0)?;
        let t0i = h.t_inverse(0)?;
        let conj = h.product([&t0, &e, &t0i]);
        let conj_inv = h.product([&t0, &e_inv, &t0i]);
        out.push(Check::new("conjugated bridge", h.is_scalar(&(&conj - &conj_inv), &short)));
    }
    let _ = n;
    Ok(out)
}

/// Source relations transported forward, dual relations transported back,
/// the `T_0` bridge, and involutivity on generators.
pub fn verify_duality(datum: &AffineCartanDatum) -> Result<Report> {
    let start = Instant::now();
    let phi = PhiMap::new(datum)?;
    let back = phi.inverse()?;
    let radius = if datum.rank() <= 2 { 2 } else { 1 };
    let mut checks = Vec::new();
    checks.push(Check::with_witness(
        "dual of dual",
        back.target().datum().label() == datum.label(),
        back.target().datum().label().to_string(),
    ));
    for rel in defining_relations(phi.source(), radius) {
        let mut c = phi.transport(&rel)?;
        c.name = format!("forward: {}", c.name);
        checks.push(c);
    }
    for rel in defining_relations(back.source(), radius) {
        let mut c = back.transport(&rel)?;
        c.name = format!("reverse: {}", c.name);
        checks.push(c);
    }
    checks.extend(case_bridge_checks(&phi)?);
    for tok in phi.generator_tokens() {
        let there = phi.phi_token(&tok);
        let again = back.phi_word(&there);
        let lhs = phi.source().evaluate(&again)?;
        let rhs = phi.source().evaluate(&GeneratorWord::new(vec![tok.clone()]))?;
        checks.push(Check::with_witness(
            format!("involutive on {tok}"),
            lhs == rhs,
            format!("{tok} -> {there} -> {again}"),
        ));
    }
    Ok(Report {
        type_label: datum.label().to_string(),
        iota_type: phi.target().datum().label().to_string(),
        checks,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// A random generator word with small lattice entries.
pub fn random_word(h: &Daha, rng: &mut impl Rng, max_len: usize) -> GeneratorWord {
    let d = h.datum();
    let n = d.rank();
    let len = rng.gen_range(1..=max_len);
    let mut tokens = Vec::with_capacity(len);
    for _ in 0..len {
        let tok = match rng.gen_range(0..6) {
            0 => Token::T(rng.gen_range(0..=n)),
            1 => Token::TInv(rng.gen_range(0..=n)),
            2 => {
                let a = unit(n, rng.gen_range(1..=n));
                let b = if rng.gen_bool(0.5) { a } else { neg(&a) };
                Token::X(b, rng.gen_range(-1..=1))
            }
            3 => {
                let j = rng.gen_range(1..=n);
                let a = unit(n, j);
                Token::Y(if rng.gen_bool(0.5) { a } else { neg(&a) })
            }
            4 => {
                let long = !d.is_simply_laced() && rng.gen_bool(0.5);
                let c = &LaurentCoefficient::t_half(long, rng.gen_range(-1..=1))
                    * &LaurentCoefficient::q_pow(rng.gen_range(-1..=1));
                Token::Coeff(c.scale(Rational::from_integer(rng.gen_range(1..=3))))
            }
            _ => Token::T(rng.gen_range(1..=n)),
        };
        tokens.push(tok);
    }
    GeneratorWord::new(tokens)
}

/// `phi(a b) = phi(a) phi(b)` with `a b` first reduced to normal form in the
/// source, on `count` random pairs.
pub fn verify_homomorphism_samples(datum: &AffineCartanDatum, count: usize, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let phi = PhiMap::new(datum)?;
    let h = phi.source();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let mut failures = 0usize;
    for i in 0..count {
        let a = random_word(h, &mut rng, 3);
        let b = random_word(h, &mut rng, 3);
        let prod = h.multiply(&h.evaluate(&a)?, &h.evaluate(&b)?);
        let lhs = phi.phi_element(&prod)?;
        let rhs = phi.target().multiply(&phi.phi_apply(&a)?, &phi.phi_apply(&b)?);
        if lhs != rhs {
            failures += 1;
            checks.push(Check::with_witness(format!("sample {i}"), false, format!("a = {a}; b = {b}")));
        }
    }
    checks.push(Check::with_witness(
        "homomorphism samples",
        failures == 0,
        format!("{count} pairs, seed {seed}, {failures} failures"),
    ));
    Ok(Report {
        type_label: datum.label().to_string(),
        iota_type: phi.target().datum().label().to_string(),
        checks,
        elapsed: start.elapsed().as_secs_f64(),
    })
}
