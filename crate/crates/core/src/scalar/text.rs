//! Parsing of the canonical scalar rendering, e.g. `(p^4+1)/p^2`.

use super::value::{Cyclotomic, Scalar};
use super::ScalarError;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ext: Cyclotomic,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
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

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                acc = acc.div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let e = self.integer()?;
            let e: i32 = e
                .parse()
                .map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String, ScalarError> {
        self.peek();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn set_ext(&mut self, ext: Cyclotomic) -> Result<(), ScalarError> {
        if self.ext != Cyclotomic::Rational && self.ext != ext {
            return Err(self.err("cannot mix w and i"));
        }
        self.ext = ext;
        Ok(())
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(b'p') => {
                self.pos += 1;
                Ok(Scalar::p())
            }
            Some(b'w') => {
                self.pos += 1;
                self.set_ext(Cyclotomic::Order3)?;
                Ok(Scalar::root_of_unity(Cyclotomic::Order3))
            }
            Some(b'i') => {
                self.pos += 1;
                self.set_ext(Cyclotomic::Order4)?;
                Ok(Scalar::root_of_unity(Cyclotomic::Order4))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.integer()?;
                let big: num_bigint::BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
                Ok(Scalar::from_int(big.into()))
            }
            Some(c) => Err(self.err(&format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses any arithmetic expression in `p` (and optionally `w` or `i`)
/// built from integers, `+ - * / ^` and parentheses.
pub fn parse_scalar(s: &str) -> Result<Scalar, ScalarError> {
    let mut parser = Parser {
        src: s.as_bytes(),
        pos: 0,
        ext: Cyclotomic::Rational,
    };
    let v = parser.expr()?;
    if parser.peek().is_some() {
        return Err(parser.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        let x = parse_scalar("(p^4+1)/p^2").unwrap();
        assert_eq!(x.to_string(), "(p^4+1)/p^2");
        let y = parse_scalar("p^2 + p^-2").unwrap();
        assert_eq!(x, y);
        let z = parse_scalar("(p)+(3*p^2-1)*w").unwrap();
        assert_eq!(parse_scalar(&z.to_string()).unwrap(), z);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("p +").is_err());
        assert!(parse_scalar("w*i").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
