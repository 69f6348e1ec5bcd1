//! Parser for rational polynomial expressions such as `y*(1-y)` or `3/4 + t^2`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::scalar::{Field, Ring};
use crate::error::{Error, Result};
use crate::{QPoly, Rational};

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

pub fn parse_poly(src: &str) -> Result<QPoly> {
    let mut p = Parser {
        src,
        chars: src.chars().collect(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.fail("unexpected trailing input"));
    }
    Ok(v)
}

impl Parser<'_> {
    fn fail(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.src.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<QPoly> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.fail("division only by nonzero constants"));
                    }
                    let inv = d.constant_term().inv().unwrap();
                    acc = acc.scale(&inv);
                }
                Some(c) if c == '(' || c.is_alphanumeric() => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<QPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.fail("exponent too large"))?;
            return Ok(base.powu(e));
        }
        Ok(base)
    }

    fn unary(&mut self) -> Result<QPoly> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.fail("expected an integer"))
    }

    fn atom(&mut self) -> Result<QPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.fail("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let v: BigInt = s.parse().map_err(|_| self.fail("bad number"))?;
                Ok(QPoly::constant(Rational::from_integer(v)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Ok(QPoly::var(&s))
            }
            _ => Err(self.fail("expected a number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;
    use num_traits::One;

    #[test]
    fn parses_expressions() {
        let y = QPoly::var("y");
        assert_eq!(parse_poly("y*(1-y)").unwrap(), y.clone() * (QPoly::one() - y.clone()));
        assert_eq!(parse_poly("y(1 - y)").unwrap(), y.clone() - y.clone() * y.clone());
        assert_eq!(parse_poly("3/4").unwrap(), QPoly::constant(ratio(3, 4)));
        assert_eq!(
            parse_poly("-2 t^2").unwrap(),
            QPoly::var("t").powu(2).scale(&ratio(-2, 1))
        );
        assert_eq!(parse_poly("-t^2").unwrap(), -QPoly::var("t").powu(2));
        assert!(parse_poly("x/y").is_err());
        assert!(parse_poly("(x").is_err());
    }
}
