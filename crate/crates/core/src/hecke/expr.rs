//! Text input for algebra elements.
//!
//! ```text
//! T0..Tn   Ti'   X[c1,..,cn;k]   Y[c1,..,cn]   q^a   ts^b   tl^c   t^b
//! juxtaposition or `*` = product, `+`, `-`, rational scalars, parentheses
//! ```

use std::fmt;

use num_traits::One;

use super::{Daha, DahaElement};
use crate::cartan::{Coords, Rational};
use crate::coeffs::LaurentCoefficient;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Token {
    T(usize),
    TInv(usize),
    /// `X_{beta + k delta}`.
    X(Coords, i64),
    /// `Y_mu`, `mu` in `M` coordinates.
    Y(Coords),
    Coeff(LaurentCoefficient),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[i64]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Token::T(j) => write!(f, "T{j}"),
            Token::TInv(j) => write!(f, "T{j}'"),
            Token::X(b, 0) => write!(f, "X[{}]", list(b)),
            Token::X(b, k) => write!(f, "X[{};{k}]", list(b)),
            Token::Y(m) => write!(f, "Y[{}]", list(m)),
            Token::Coeff(c) => write!(f, "({c})"),
        }
    }
}

/// A product of tokens, read left to right.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GeneratorWord(pub Vec<Token>);

impl GeneratorWord {
    pub fn new(tokens: Vec<Token>) -> Self {
        GeneratorWord(tokens)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn then(mut self, other: &GeneratorWord) -> Self {
        self.0.extend(other.0.iter().cloned());
        self
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Token(Token),
    Product(Vec<Expr>),
    /// Signed summands; `true` means subtract.
    Sum(Vec<(bool, Expr)>),
}

impl Expr {
    /// The expression as a single word, if it has no sums.
    pub fn as_word(&self) -> Option<GeneratorWord> {
        match self {
            Expr::Token(t) => Some(GeneratorWord(vec![t.clone()])),
            Expr::Product(fs) => {
                let mut out = Vec::new();
                for f in fs {
                    out.extend(f.as_word()?.0);
                }
                Some(GeneratorWord(out))
            }
            Expr::Sum(terms) if terms.len() == 1 && !terms[0].0 => terms[0].1.as_word(),
            Expr::Sum(_) => None,
        }
    }
}

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
    n: usize,
}

impl<'s> Parser<'s> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn unsigned(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().or_else(|_| self.err("number out of range"))
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let v = self.unsigned()?;
        Ok(if neg { -v } else { v })
    }

    /// `a` or `a/b`, optionally signed.
    fn rational(&mut self) -> Result<Rational> {
        let num = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.unsigned()?;
            if den == 0 {
                return self.err("zero denominator");
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn exponent(&mut self) -> Result<Rational> {
        if !self.eat(b'^') {
            return Ok(Rational::one());
        }
        if self.eat(b'(') {
            let r = self.rational()?;
            self.expect(b')')?;
            Ok(r)
        } else {
            self.rational()
        }
    }

    fn int_list(&mut self, close: &[u8]) -> Result<Vec<i64>> {
        let mut out = vec![self.integer()?];
        while self.eat(b',') {
            out.push(self.integer()?);
        }
        if !close.contains(&self.peek().unwrap_or(0)) {
            return self.err("malformed coordinate list");
        }
        Ok(out)
    }

    fn coords(&self, v: Vec<i64>) -> Result<Coords> {
        if v.len() != self.n {
            return self.err(format!("expected {} coordinates, got {}", self.n, v.len()));
        }
        Ok(Coords::from_vec(v))
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(b'T' | b'X' | b'Y' | b'q' | b't' | b'(' | b'*' | b'0'..=b'9'))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut negate = self.eat(b'-');
        if !negate {
            self.eat(b'+');
        }
        loop {
            terms.push((negate, self.product()?));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().unwrap().1 } else { Expr::Sum(terms) })
    }

    fn product(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        // `*` is optional between factors
        while self.eat(b'*') || self.starts_factor() {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let Some(c) = self.peek() else {
            return self.err("unexpected end of input");
        };
        let rest = &self.src[self.pos..];
        match c {
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            b'T' => {
                self.pos += 1;
                let j = self.unsigned()? as usize;
                if j > self.n {
                    return self.err(format!("T{j}: node index exceeds rank {}", self.n));
                }
                let inverse = self.src.get(self.pos) == Some(&b'\'');
                if inverse {
                    self.pos += 1;
                }
                Ok(Expr::Token(if inverse { Token::TInv(j) } else { Token::T(j) }))
            }
            b'X' => {
                self.pos += 1;
                self.expect(b'[')?;
                let beta = self.int_list(b";]")?;
                let k = if self.eat(b';') { self.integer()? } else { 0 };
                self.expect(b']')?;
                Ok(Expr::Token(Token::X(self.coords(beta)?, k)))
            }
            b'Y' => {
                self.pos += 1;
                self.expect(b'[')?;
                let mu = self.int_list(b"]")?;
                self.expect(b']')?;
                Ok(Expr::Token(Token::Y(self.coords(mu)?)))
            }
            b'q' => {
                self.pos += 1;
                let r = self.exponent()?;
                let c = LaurentCoefficient::q_pow_rational(r).map_err(|_| Error::Parse {
                    pos: self.pos,
                    msg: format!("q exponent {r} is not a multiple of 1/6"),
                })?;
                Ok(Expr::Token(Token::Coeff(c)))
            }
            b't' => {
                let (long, skip) = if rest.starts_with(b"tl") {
                    (true, 2)
                } else if rest.starts_with(b"ts") {
                    (false, 2)
                } else {
                    (false, 1)
                };
                self.pos += skip;
                let r = self.exponent()?;
                let c = LaurentCoefficient::t_pow_rational(long, r).map_err(|_| Error::Parse {
                    pos: self.pos,
                    msg: format!("t exponent {r} is not a multiple of 1/2"),
                })?;
                Ok(Expr::Token(Token::Coeff(c)))
            }
            b'0'..=b'9' => {
                let r = self.rational()?;
                Ok(Expr::Token(Token::Coeff(LaurentCoefficient::scalar(r))))
            }
            other => self.err(format!("unexpected character `{}`", other as char)),
        }
    }
}

/// Parse an expression for a datum of rank `n`.
pub fn parse(src: &str, n: usize) -> Result<Expr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, n };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parse a single product of generators.
pub fn parse_word(src: &str, n: usize) -> Result<GeneratorWord> {
    parse(src, n)?.as_word().ok_or(Error::Parse { pos: 0, msg: "expected a single product, found a sum".into() })
}

impl Daha {
    /// Image of one token.
    pub fn token_element(&self, token: &Token) -> Result<DahaElement> {
        match token {
            Token::T(j) => self.t_generator(*j),
            Token::TInv(j) => self.t_inverse(*j),
            Token::X(beta, k) => self.x_monomial(beta, *k),
            Token::Y(mu) => self.y_element(mu),
            Token::Coeff(c) => Ok(self.scalar(self.normalize_coeff(c))),
        }
    }

    /// Single-length types use one `t`, stored in the short slot.
    pub fn normalize_coeff(&self, c: &LaurentCoefficient) -> LaurentCoefficient {
        if self.datum().is_simply_laced() {
            c.merge_t()
        } else {
            c.clone()
        }
    }

    /// Left-to-right product of the token images.
    pub fn evaluate(&self, word: &GeneratorWord) -> Result<DahaElement> {
        let mut acc = self.one();
        for t in word.tokens() {
            acc = match t {
                Token::Coeff(c) => acc.scale(&self.normalize_coeff(c)),
                Token::T(j) if *j <= self.rank() => self.rmul_t(&acc, *j),
                Token::TInv(j) if *j <= self.rank() => self.rmul_t_inverse(&acc, *j),
                Token::Y(mu) if mu.len() == self.rank() => self.rmul_y(&acc, mu)?,
                _ => self.multiply(&acc, &self.token_element(t)?),
            };
        }
        Ok(acc)
    }

    /// `word * h`, applying the tokens right to left by left multiplication.
    pub fn lmul_word(&self, word: &GeneratorWord, h: &DahaElement) -> Result<DahaElement> {
        let mut acc = h.clone();
        for t in word.tokens().iter().rev() {
            acc = match t {
                Token::Coeff(c) => acc.scale(&self.normalize_coeff(c)),
                Token::T(j) if *j <= self.rank() => self.lmul_t(*j, &acc),
                Token::TInv(j) if *j <= self.rank() => self.lmul_t_inverse(*j, &acc),
                Token::X(beta, k) if beta.len() == self.rank() => {
                    acc.shift_x(beta).scale(&LaurentCoefficient::q_pow(-k))
                }
                Token::Y(mu) if mu.len() == self.rank() => self.lmul_y(mu, &acc)?,
                _ => self.multiply(&self.token_element(t)?, &acc),
            };
        }
        Ok(acc)
    }

    pub fn evaluate_expr(&self, e: &Expr) -> Result<DahaElement> {
        match e {
            Expr::Token(t) => self.token_element(t),
            Expr::Product(fs) => {
                if let Some(word) = e.as_word() {
                    return self.evaluate(&word);
                }
                let mut acc = self.one();
                for f in fs {
                    acc = self.multiply(&acc, &self.evaluate_expr(f)?);
                }
                Ok(acc)
            }
            Expr::Sum(terms) => {
                let mut acc = DahaElement::zero(self.rank());
                for (neg, t) in terms {
                    let v = self.evaluate_expr(t)?;
                    let sign = if *neg { -1 } else { 1 };
                    acc.add_scaled(&v, &LaurentCoefficient::integer(sign));
                }
                Ok(acc)
            }
        }
    }

    pub fn evaluate_str(&self, src: &str) -> Result<DahaElement> {
        self.evaluate_expr(&parse(src, self.rank())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar() {
        let w = parse_word("T0 T1' X[1,-2;3] Y[0,1] q^-1 ts^1/2 tl 3/2", 2).unwrap();
        assert_eq!(w.tokens().len(), 8);
        assert_eq!(w.tokens()[1], Token::TInv(1));
        assert_eq!(w.tokens()[2], Token::X(Coords::from_slice(&[1, -2]), 3));
        assert_eq!(w.to_string().split(' ').count(), 8);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("T3", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse("X[1]", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse("X[1/2,0]", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse("T1 +", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse("q^1/5", 2), Err(Error::Parse { .. })));
        assert!(parse_word("T1 + T2", 2).is_err());
    }

    #[test]
    fn evaluates_inverse_pair() {
        let h = Daha::load("A2~").unwrap();
        assert_eq!(h.evaluate(&parse_word("T1 T1'", 2).unwrap()).unwrap(), h.one());
        assert_eq!(h.evaluate_str("T1 T1' - 1").unwrap(), DahaElement::zero(2));
    }

    #[test]
    fn rendered_coefficients_round_trip() {
        let c = LaurentCoefficient::q_pow(-1).scale(Rational::from_integer(3));
        let c = &(&c * &LaurentCoefficient::ts_half(1)) - &LaurentCoefficient::tl_half(2);
        let h = Daha::load("C2~").unwrap();
        assert_eq!(h.evaluate_str(&c.to_string()).unwrap(), h.scalar(c));
    }
}
