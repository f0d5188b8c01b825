//! Corepresentation descriptors: `1`, `u`, `uc`, `minor:2`,
//! `tensor(u,u)`, `proj:sym(tensor(u,u))`, `sum(1,u)`, `contra(...)`.

use std::fmt;

use super::CoordError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    Trivial,
    Fundamental,
    FundamentalContra,
    Minor(usize),
    Contra(Box<Descriptor>),
    Tensor(Vec<Descriptor>),
    Proj(String, Box<Descriptor>),
    Sum(Vec<Descriptor>),
}

struct Lexer<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.s[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn error(&self) -> CoordError {
        let rest = self.s[self.pos..].trim_start();
        let token: String = rest
            .chars()
            .take_while(|c| !matches!(c, ',' | ')'))
            .collect();
        CoordError::Parse {
            token: if token.is_empty() { rest.chars().take(1).collect() } else { token },
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CoordError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn list(&mut self) -> Result<Vec<Descriptor>, CoordError> {
        self.expect('(')?;
        let mut out = vec![self.descriptor()?];
        while self.eat(',') {
            out.push(self.descriptor()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn descriptor(&mut self) -> Result<Descriptor, CoordError> {
        let start = self.pos;
        let id = self.ident();
        match id {
            "1" => Ok(Descriptor::Trivial),
            "u" => Ok(Descriptor::Fundamental),
            "uc" => Ok(Descriptor::FundamentalContra),
            "minor" => {
                self.expect(':')?;
                let k = self.ident();
                k.parse().map(Descriptor::Minor).map_err(|_| CoordError::Parse { token: k.to_string() })
            }
            "proj" => {
                self.expect(':')?;
                let name = self.ident().to_string();
                if !matches!(name.as_str(), "sym" | "anti" | "triv") {
                    return Err(CoordError::Parse { token: name });
                }
                let mut inner = self.list()?;
                if inner.len() != 1 {
                    return Err(CoordError::Parse { token: format!("proj:{name}") });
                }
                Ok(Descriptor::Proj(name, Box::new(inner.remove(0))))
            }
            "contra" => {
                let mut inner = self.list()?;
                if inner.len() != 1 {
                    return Err(CoordError::Parse { token: "contra".into() });
                }
                Ok(Descriptor::Contra(Box::new(inner.remove(0))))
            }
            "tensor" => {
                let v = self.list()?;
                if v.len() < 2 {
                    return Err(CoordError::Parse { token: "tensor".into() });
                }
                Ok(Descriptor::Tensor(v))
            }
            "sum" => {
                let v = self.list()?;
                if v.len() < 2 {
                    return Err(CoordError::Parse { token: "sum".into() });
                }
                Ok(Descriptor::Sum(v))
            }
            _ => {
                self.pos = start;
                Err(self.error())
            }
        }
    }
}

impl Descriptor {
    pub fn parse(s: &str) -> Result<Descriptor, CoordError> {
        let mut lx = Lexer { s, pos: 0 };
        let d = lx.descriptor()?;
        lx.skip_ws();
        if lx.pos != s.len() {
            return Err(lx.error());
        }
        Ok(d)
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Descriptor]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Descriptor::Trivial => write!(f, "1"),
            Descriptor::Fundamental => write!(f, "u"),
            Descriptor::FundamentalContra => write!(f, "uc"),
            Descriptor::Minor(k) => write!(f, "minor:{k}"),
            Descriptor::Contra(d) => write!(f, "contra({d})"),
            Descriptor::Tensor(v) => write!(f, "tensor({})", join(v)),
            Descriptor::Proj(name, d) => write!(f, "proj:{name}({d})"),
            Descriptor::Sum(v) => write!(f, "sum({})", join(v)),
        }
    }
}
