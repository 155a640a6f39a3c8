//! Parser for the textual polynomial grammar.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power ('*' power)*
//! power  := atom ['^' ['-'] int]
//! atom   := int | 'q' | 'z' | 'u' | '(' expr ')'
//! ```
//! Negative exponents are only allowed on units ±q^k.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{LaurentPoly, RPoly, RingError, UPoly};

pub fn parse_upoly(src: &str) -> Result<UPoly, RingError> {
    let mut p = Parser {
        chars: src.char_indices().collect(),
        pos: 0,
        len: src.len(),
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

impl std::str::FromStr for UPoly {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_upoly(s)
    }
}

impl std::str::FromStr for RPoly {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_upoly(s)?.to_rpoly().ok_or(RingError::UnexpectedU)
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r: RPoly = s.parse()?;
        match r.max_z_degree() {
            None => Ok(LaurentPoly::zero()),
            Some(0) => Ok(r.z_coeff(0)),
            Some(_) => Err(RingError::Parse {
                column: 0,
                message: "unexpected variable z".into(),
            }),
        }
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn error(&self, message: &str) -> RingError {
        let column = self.chars.get(self.pos).map(|(i, _)| *i).unwrap_or(self.len) + 1;
        RingError::Parse {
            column,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<UPoly, RingError> {
        let mut acc = if self.eat('-') { -self.term()? } else { self.term()? };
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<UPoly, RingError> {
        let mut acc = self.power()?;
        while self.eat('*') {
            let rhs = self.power()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<UPoly, RingError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let n = self.integer()?;
        let n: i64 = i64::try_from(n).map_err(|_| self.error("exponent out of range"))?;
        if !negative {
            let mut acc = UPoly::one();
            for _ in 0..n {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        let unit = base
            .to_rpoly()
            .and_then(|r| r.as_unit())
            .ok_or_else(|| self.error("negative exponent on a non-unit"))?;
        let inv = unit.inverse();
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = acc.apply_unit(inv);
        }
        Ok(RPoly::from(acc).into())
    }

    fn integer(&mut self) -> Result<BigInt, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|(_, c)| *c).collect();
        s.parse().map_err(|_| self.error("bad integer"))
    }

    fn atom(&mut self) -> Result<UPoly, RingError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some('q') => {
                self.pos += 1;
                Ok(RPoly::q().into())
            }
            Some('z') => {
                self.pos += 1;
                Ok(RPoly::z().into())
            }
            Some('u') => {
                self.pos += 1;
                Ok(UPoly::u())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                if n.is_zero() {
                    return Ok(UPoly::zero());
                }
                Ok(RPoly::constant(n).into())
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
