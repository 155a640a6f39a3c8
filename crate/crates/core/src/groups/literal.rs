//! Group-element literals: `b1^2*b3^-1`, `[2,0,-1]`, `x*y^-1*x`, `(x*y)^2`, `1`.
//! In abelian models `+` is accepted as a synonym for `*`.

use super::{GroupElem, GroupError, GroupModel};

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

pub(crate) fn parse_elem(model: &GroupModel, src: &str) -> Result<GroupElem, GroupError> {
    let mut p = Parser {
        model,
        src: src.as_bytes(),
        pos: 0,
    };
    let v = p.product()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

pub(crate) fn render(model: &GroupModel, x: &GroupElem) -> String {
    if x.is_identity() {
        return "1".to_string();
    }
    let factor = |name: &str, e: i64| {
        if e == 1 {
            name.to_string()
        } else {
            format!("{name}^{e}")
        }
    };
    let parts: Vec<String> = match x {
        GroupElem::Abelian { free, torsion } => free
            .iter()
            .chain(torsion)
            .zip(model.names())
            .filter(|(e, _)| **e != 0)
            .map(|(e, n)| factor(n, *e))
            .collect(),
        GroupElem::Word(w) => {
            let mut runs: Vec<(i32, i64)> = Vec::new();
            for l in w {
                match runs.last_mut() {
                    Some((g, e)) if *g == l.abs() && e.signum() == l.signum() as i64 => *e += l.signum() as i64,
                    _ => runs.push((l.abs(), l.signum() as i64)),
                }
            }
            runs.iter()
                .map(|(g, e)| factor(&model.names()[*g as usize - 1], *e))
                .collect()
        }
    };
    parts.join("*")
}

struct Parser<'a> {
    model: &'a GroupModel,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> GroupError {
        GroupError::Parse {
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    fn product(&mut self) -> Result<GroupElem, GroupError> {
        let mut acc = self.factor()?;
        loop {
            let sep = self.eat(b'*') || (self.model.shape().is_some() && self.eat(b'+'));
            if !sep {
                return Ok(acc);
            }
            let rhs = self.factor()?;
            acc = self.model.mul(&acc, &rhs);
        }
    }

    fn integer(&mut self) -> Result<i64, GroupError> {
        self.skip_ws();
        let neg = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let n: i64 = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn factor(&mut self) -> Result<GroupElem, GroupError> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.product()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                v
            }
            Some(b'[') => {
                let col = self.pos;
                self.pos += 1;
                let mut coords = Vec::new();
                if !self.eat(b']') {
                    loop {
                        coords.push(self.integer()?);
                        if self.eat(b']') {
                            break;
                        }
                        if !self.eat(b',') {
                            return Err(self.error("expected ',' or ']'"));
                        }
                    }
                }
                self.vector(coords).map_err(|m| GroupError::Parse {
                    column: col + 1,
                    message: m,
                })?
            }
            Some(b'1') => {
                self.pos += 1;
                self.model.identity()
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_' || *c == b'\'')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let i = self
                    .model
                    .names()
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
                self.model.generator(i)
            }
            Some(_) => return Err(self.error("unexpected character")),
            None => return Err(self.error("unexpected end of input")),
        };
        if self.eat(b'^') {
            let e = self.integer()?;
            return Ok(self.model.pow(&base, e));
        }
        Ok(base)
    }

    fn vector(&self, coords: Vec<i64>) -> Result<GroupElem, String> {
        let (n, t) = self.model.shape().ok_or("vector literals need an abelian model")?;
        if coords.len() != n + t.len() {
            return Err(format!("expected {} coordinates, got {}", n + t.len(), coords.len()));
        }
        let (f, r) = coords.split_at(n);
        self.model
            .abelian_elem(f.to_vec(), r.to_vec())
            .map_err(|e| e.to_string())
    }
}
