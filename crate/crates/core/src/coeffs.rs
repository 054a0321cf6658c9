//! Laurent polynomials in `q^(1/6)`, `t_s^(1/2)`, `t_l^(1/2)` over the rationals.
//!
//! Exponents are stored as integers: `q` in units of `1/Q_UNIT`, the two
//! `t` variables in units of `1/2`. Every `m` that occurs for a supported
//! type divides `Q_UNIT`, so one unit serves all types.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cartan::Rational;
use crate::error::{Error, Result};

pub const Q_UNIT: i64 = 6;

/// `(q, t_s, t_l)` exponents in storage units.
pub type Exponent = (i64, i64, i64);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentCoefficient {
    // sorted by exponent, no zero coefficients
    terms: Vec<(Exponent, Rational)>,
}

impl LaurentCoefficient {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        Self::monomial(c, (0, 0, 0))
    }

    pub fn integer(c: i64) -> Self {
        Self::scalar(Rational::from_integer(c))
    }

    pub fn monomial(c: Rational, exp: Exponent) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(exp, c)] };
        LaurentCoefficient { terms }
    }

    /// `q^k`, integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), (k * Q_UNIT, 0, 0))
    }

    /// `q^r` for rational `r`; `r` must be a multiple of `1/Q_UNIT`.
    pub fn q_pow_rational(r: Rational) -> Result<Self> {
        let units = r * Rational::from_integer(Q_UNIT);
        if !units.is_integer() {
            return Err(Error::Parse { pos: 0, msg: format!("q exponent {r} is not a multiple of 1/{Q_UNIT}") });
        }
        Ok(Self::monomial(Rational::one(), (units.to_integer(), 0, 0)))
    }

    /// `t_s^(k/2)`.
    pub fn ts_half(k: i64) -> Self {
        Self::monomial(Rational::one(), (0, k, 0))
    }

    /// `t_l^(k/2)`.
    pub fn tl_half(k: i64) -> Self {
        Self::monomial(Rational::one(), (0, 0, k))
    }

    /// `t^(k/2)` for the short (`long = false`) or long class.
    pub fn t_half(long: bool, k: i64) -> Self {
        if long {
            Self::tl_half(k)
        } else {
            Self::ts_half(k)
        }
    }

    /// `t^(r)` for rational `r`, a multiple of `1/2`.
    pub fn t_pow_rational(long: bool, r: Rational) -> Result<Self> {
        let units = r * Rational::from_integer(2);
        if !units.is_integer() {
            return Err(Error::Parse { pos: 0, msg: format!("t exponent {r} is not a multiple of 1/2") });
        }
        Ok(Self::t_half(long, units.to_integer()))
    }

    /// The Hecke unit `t^(1/2) - t^(-1/2)`.
    pub fn hecke_unit(long: bool) -> Self {
        &Self::t_half(long, 1) - &Self::t_half(long, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == ((0, 0, 0), Rational::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter().map(|(e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single `(coefficient, exponent)` if this is a monomial.
    pub fn as_monomial(&self) -> Option<(Rational, Exponent)> {
        if self.terms.len() == 1 {
            self.terms.first().map(|(e, c)| (*c, *e))
        } else {
            None
        }
    }

    pub fn scale(&self, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentCoefficient { terms: self.terms.iter().map(|(e, v)| (*e, rmul(*v, c))).collect() }
    }

    /// Sort, combine equal exponents, drop zeros.
    fn from_unsorted(mut v: Vec<(Exponent, Rational)>) -> Self {
        v.sort_unstable_by_key(|p| p.0);
        let mut terms: Vec<(Exponent, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 = radd(last.1, c),
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        LaurentCoefficient { terms }
    }

    /// Merge of two sorted term lists, the second scaled by `sign`.
    fn merge(&self, rhs: &Self, sign: i64) -> Self {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sgn = |c: Rational| if sign < 0 { -c } else { c };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    terms.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    terms.push((b[j].0, sgn(b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = radd(a[i].1, sgn(b[j].1));
                    if !c.is_zero() {
                        terms.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a[i..]);
        terms.extend(b[j..].iter().map(|(e, c)| (*e, sgn(*c))));
        LaurentCoefficient { terms }
    }

    fn map_exponents(&self, f: impl Fn(Exponent) -> Exponent) -> Self {
        Self::from_unsorted(self.terms.iter().map(|(e, c)| (f(*e), *c)).collect())
    }

    /// `q -> q^-1`, `t_s -> t_s^-1`, `t_l -> t_l^-1`.
    pub fn bar(&self) -> Self {
        self.map_exponents(|(a, b, c)| (-a, -b, -c))
    }

    /// Exchange `t_s` and `t_l`.
    pub fn swap_t(&self) -> Self {
        self.map_exponents(|(a, b, c)| (a, c, b))
    }

    /// Fold `t_l` into `t_s` (single-length types use one `t`).
    pub fn merge_t(&self) -> Self {
        self.map_exponents(|(a, b, c)| (a, b + c, 0))
    }

    /// Transport to the dual type: bar, then exchange the two `t`
    /// variables when the length classes are swapped.
    pub fn transport(&self, swap: bool) -> Self {
        if swap {
            self.bar().swap_t()
        } else {
            self.bar()
        }
    }

    /// Canonical text, with the single-length spelling `t` when `merged`.
    pub fn render(&self, merged: bool) -> String {
        if merged {
            return self.merge_t().render_terms(true);
        }
        self.render_terms(false)
    }

    fn render_terms(&self, merged: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((a, b, c), coef)) in self.terms.iter().enumerate() {
            let negative = coef.is_negative();
            let magnitude = coef.abs();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut factors = Vec::new();
            if !magnitude.is_one() {
                factors.push(magnitude.to_string());
            }
            let mut var = |name: &str, num: i64, den: i64| {
                if num != 0 {
                    factors.push(format!("{name}{}", render_exponent(num, den)));
                }
            };
            var("q", *a, Q_UNIT);
            if merged {
                var("t", *b, 2);
            } else {
                var("ts", *b, 2);
                var("tl", *c, 2);
            }
            if factors.is_empty() {
                factors.push("1".to_string());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn render_exponent(num: i64, den: i64) -> String {
    let g = num.gcd(&den);
    let (n, d) = (num / g, den / g);
    match (n, d) {
        (1, 1) => String::new(),
        (_, 1) => format!("^{n}"),
        _ => format!("^{n}/{d}"),
    }
}

impl fmt::Display for LaurentCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for LaurentCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentCoefficient({self})")
    }
}

impl From<Rational> for LaurentCoefficient {
    fn from(c: Rational) -> Self {
        Self::scalar(c)
    }
}

impl From<i64> for LaurentCoefficient {
    fn from(c: i64) -> Self {
        Self::integer(c)
    }
}

impl AddAssign<&LaurentCoefficient> for LaurentCoefficient {
    fn add_assign(&mut self, rhs: &LaurentCoefficient) {
        if rhs.terms.is_empty() {
            return;
        }
        *self = self.merge(rhs, 1);
    }
}

impl Add for &LaurentCoefficient {
    type Output = LaurentCoefficient;
    fn add(self, rhs: &LaurentCoefficient) -> LaurentCoefficient {
        self.merge(rhs, 1)
    }
}

impl Add for LaurentCoefficient {
    type Output = LaurentCoefficient;
    fn add(mut self, rhs: LaurentCoefficient) -> LaurentCoefficient {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentCoefficient {
    type Output = LaurentCoefficient;
    fn neg(self) -> LaurentCoefficient {
        LaurentCoefficient { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentCoefficient {
    type Output = LaurentCoefficient;
    fn neg(self) -> LaurentCoefficient {
        -&self
    }
}

impl Sub for &LaurentCoefficient {
    type Output = LaurentCoefficient;
    fn sub(self, rhs: &LaurentCoefficient) -> LaurentCoefficient {
        self.merge(rhs, -1)
    }
}

impl Sub for LaurentCoefficient {
    type Output = LaurentCoefficient;
    fn sub(self, rhs: LaurentCoefficient) -> LaurentCoefficient {
        &self - &rhs
    }
}

// Integer fast paths; `Ratio` reduces by gcd on every operation.
fn rmul(x: Rational, y: Rational) -> Rational {
    if *x.denom() == 1 && *y.denom() == 1 {
        Rational::new_raw(x.numer() * y.numer(), 1)
    } else {
        x * y
    }
}

fn radd(x: Rational, y: Rational) -> Rational {
    if *x.denom() == 1 && *y.denom() == 1 {
        Rational::new_raw(x.numer() + y.numer(), 1)
    } else {
        x + y
    }
}

impl Mul for &LaurentCoefficient {
    type Output = LaurentCoefficient;
    fn mul(self, rhs: &LaurentCoefficient) -> LaurentCoefficient {
        // A monomial factor only shifts exponents, which keeps the order.
        let (small, big) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let shifted = |((a1, b1, c1), x): (Exponent, Rational)| LaurentCoefficient {
            terms: big.terms.iter().map(|((a2, b2, c2), y)| ((a1 + a2, b1 + b2, c1 + c2), rmul(x, *y))).collect(),
        };
        if small.terms.len() <= 4 {
            let mut iter = small.terms.iter();
            let Some(&first) = iter.next() else {
                return LaurentCoefficient::zero();
            };
            return iter.fold(shifted(first), |acc, &t| acc.merge(&shifted(t), 1));
        }
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for ((a1, b1, c1), x) in &small.terms {
            for ((a2, b2, c2), y) in &big.terms {
                prods.push(((a1 + a2, b1 + b2, c1 + c2), rmul(*x, *y)));
            }
        }
        LaurentCoefficient::from_unsorted(prods)
    }
}

impl Mul for LaurentCoefficient {
    type Output = LaurentCoefficient;
    fn mul(self, rhs: LaurentCoefficient) -> LaurentCoefficient {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type C = LaurentCoefficient;

    #[test]
    fn difference_of_squares() {
        let a = &C::ts_half(1) - &C::ts_half(-1);
        let b = &C::ts_half(1) + &C::ts_half(-1);
        assert_eq!(&a * &b, &C::ts_half(2) - &C::ts_half(-2));
    }

    #[test]
    fn fractional_q_powers() {
        for m in [1, 2, 3] {
            let a = C::q_pow_rational(Rational::new(1, m)).unwrap();
            let b = C::q_pow_rational(Rational::new(m - 1, m)).unwrap();
            assert_eq!(&a * &b, C::q_pow(1));
        }
        assert!(C::q_pow_rational(Rational::new(1, 5)).is_err());
    }

    #[test]
    fn bar_examples() {
        let u = C::hecke_unit(false);
        assert_eq!(u.bar(), -&u);
        assert_eq!(C::q_pow(1).bar(), C::q_pow(-1));
        assert_eq!(C::one().bar(), C::one());
    }

    #[test]
    fn rendering() {
        let x = &(&C::q_pow(-1) * &C::ts_half(1)).scale(Rational::from_integer(3)) - &C::tl_half(2);
        assert_eq!(x.to_string(), "3*q^-1*ts^1/2 - tl");
        assert_eq!(C::zero().to_string(), "0");
        assert_eq!((-C::one()).to_string(), "-1");
        let y = &C::q_pow_rational(Rational::new(1, 3)).unwrap() + &C::scalar(Rational::new(1, 2));
        assert_eq!(y.to_string(), "1/2 + q^1/3");
        assert_eq!((&C::ts_half(1) * &C::tl_half(1)).render(true), "t");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = &C::q_pow(2) + &C::ts_half(3);
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).len(), 0);
    }

    fn arb_coeff() -> impl Strategy<Value = C> {
        prop::collection::vec(((-6i64..6, -3i64..3, -3i64..3), -4i64..4), 0..5).prop_map(|v| {
            let mut out = C::zero();
            for (e, c) in v {
                out += &C::monomial(Rational::from_integer(c), e);
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_coeff(), b in arb_coeff(), c in arb_coeff()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn bar_is_ring_involution(a in arb_coeff(), b in arb_coeff()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!(a.transport(true).transport(true), a.clone());
        }

        #[test]
        fn integral_domain(a in arb_coeff(), b in arb_coeff()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert!(!(&a * &b).is_zero());
        }
    }
}
