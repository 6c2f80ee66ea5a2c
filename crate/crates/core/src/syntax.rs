//! Text syntax for algebra elements and module vectors.
//!
//! ```text
//! element := term (('+' | '-') term)*
//! term    := ['-'] [rational '*'] atom
//! atom    := ('e' | 'f' | 'h') '(' int ',' int ')' | 'c1' | 'c2' | 'd1' | 'd2'
//! vector  := vterm (('+' | '-') vterm)*
//! vterm   := ['-'] [rational '*'] (atom ['^' int] '*')* 'v'
//! ```
//!
//! A lone `0` denotes zero. Whitespace is ignored. A vector term is read as
//! an ordered product acting on `v`, so `h(-1,0)*f(0,0)^2*v` need not be in
//! canonical order.

use crate::algebra::{AlgebraElement, BasisElement};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::verma::{ModuleVector, VermaModule};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat('-');
        self.skip_ws();
        let digits: String = self
            .rest()
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        let value: i64 = match digits.parse() {
            Ok(v) => v,
            Err(_) => return self.err("integer out of range"),
        };
        self.pos += digits.len();
        Ok(if neg { -value } else { value })
    }

    /// An unsigned `p` or `p/q` if one starts here.
    fn scalar(&mut self) -> Result<Option<Rational>> {
        self.skip_ws();
        let text: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit() || *c == '/')
            .collect();
        if text.is_empty() {
            return Ok(None);
        }
        let start = self.pos;
        self.pos += text.len();
        match parse_rational(&text) {
            Ok(r) => Ok(Some(r)),
            Err(e) => Err(Error::Parse {
                pos: start,
                msg: e.to_string(),
            }),
        }
    }

    fn atom(&mut self) -> Result<BasisElement> {
        self.skip_ws();
        let rest = self.rest();
        for (name, b) in [
            ("c1", BasisElement::C1),
            ("c2", BasisElement::C2),
            ("d1", BasisElement::D1),
            ("d2", BasisElement::D2),
        ] {
            if rest.starts_with(name) {
                self.pos += 2;
                return Ok(b);
            }
        }
        let ctor: fn(i64, i64) -> BasisElement = match rest.chars().next() {
            Some('e') => BasisElement::e,
            Some('f') => BasisElement::f,
            Some('h') => BasisElement::h,
            _ => return self.err("expected e(m,n), f(m,n), h(m,n), c1, c2, d1 or d2"),
        };
        self.pos += 1;
        self.expect('(')?;
        let m = self.integer()?;
        self.expect(',')?;
        let n = self.integer()?;
        self.expect(')')?;
        Ok(ctor(m, n))
    }

    /// Sign and optional `rational *` prefix of a term.
    fn coefficient(&mut self, sign: i64) -> Result<Rational> {
        let mut c = Rational::from_integer(sign.into());
        if self.eat('-') {
            c = -c;
        }
        if let Some(s) = self.scalar()? {
            self.expect('*')?;
            c *= s;
        }
        Ok(c)
    }

    fn sum<T>(&mut self, mut term: impl FnMut(&mut Self, i64) -> Result<T>) -> Result<Vec<T>> {
        let mut out = vec![term(self, 1)?];
        loop {
            if self.eat('+') {
                out.push(term(self, 1)?);
            } else if self.eat('-') {
                out.push(term(self, -1)?);
            } else if self.at_end() {
                return Ok(out);
            } else {
                return self.err("expected `+`, `-` or end of input");
            }
        }
    }
}

pub fn parse_element(text: &str) -> Result<AlgebraElement> {
    if text.trim() == "0" {
        return Ok(AlgebraElement::zero());
    }
    let mut p = Parser::new(text);
    let terms = p.sum(|p, sign| {
        let c = p.coefficient(sign)?;
        Ok((p.atom()?, c))
    })?;
    let mut out = AlgebraElement::zero();
    for (b, c) in terms {
        out.add_term(b, c);
    }
    Ok(out)
}

pub fn parse_basis_element(text: &str) -> Result<BasisElement> {
    let mut p = Parser::new(text);
    let b = p.atom()?;
    if !p.at_end() {
        return p.err("trailing input");
    }
    Ok(b)
}

/// Each term as a coefficient and a word, leftmost factor first.
pub fn parse_vector_terms(text: &str) -> Result<Vec<(Rational, Vec<BasisElement>)>> {
    if text.trim() == "0" {
        return Ok(Vec::new());
    }
    let mut p = Parser::new(text);
    p.sum(|p, sign| {
        let c = p.coefficient(sign)?;
        let mut word = Vec::new();
        loop {
            if p.peek() == Some('v') {
                p.pos += 1;
                return Ok((c, word));
            }
            let b = p.atom()?;
            let power = if p.eat('^') {
                let k = p.integer()?;
                if k < 0 {
                    return p.err("negative exponent");
                }
                k as usize
            } else {
                1
            };
            word.extend(std::iter::repeat_n(b, power));
            p.expect('*')?;
        }
    })
}

/// Parses and evaluates a vector of `module`.
pub fn parse_vector(module: &VermaModule, text: &str) -> Result<ModuleVector> {
    let mut out = ModuleVector::zero();
    let top = ModuleVector::highest();
    for (c, word) in parse_vector_terms(text)? {
        out.add_scaled(&module.apply_word(&word, &top), &c);
    }
    Ok(out)
}

/// Parses `a0,a1` into `(a0, a1)`.
pub fn parse_pair(text: &str) -> Result<(i64, i64)> {
    let mut p = Parser::new(text);
    let a = p.integer()?;
    p.expect(',')?;
    let b = p.integer()?;
    if !p.at_end() {
        return p.err("trailing input");
    }
    Ok((a, b))
}

/// Parses `a,n1,n2`.
pub fn parse_triple(text: &str) -> Result<(i64, i64, i64)> {
    let mut p = Parser::new(text);
    let a = p.integer()?;
    p.expect(',')?;
    let b = p.integer()?;
    p.expect(',')?;
    let c = p.integer()?;
    if !p.at_end() {
        return p.err("trailing input");
    }
    Ok((a, b, c))
}
