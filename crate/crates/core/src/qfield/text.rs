//! Parser for the sparse-sum text form, e.g. `3/2*q^-2 + 1 - 5*q^3` or
//! `(q^2 + 1)/(q^4 + 1)`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::{QError, Rational};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Self { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> QError {
        QError::Parse(format!("{what} at byte {}", self.pos))
    }

    fn unsigned(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn exponent(&mut self) -> Result<i64, QError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let n = self.unsigned().ok_or_else(|| self.err("expected exponent"))?;
        let n: i64 = n.try_into().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -n } else { n })
    }

    /// term := coef ['*' 'q' exp] | 'q' exp
    fn term(&mut self) -> Result<(i64, Rational), QError> {
        if self.eat(b'q') {
            return Ok((self.exponent()?, Rational::one()));
        }
        let n = self.unsigned().ok_or_else(|| self.err("expected coefficient or q"))?;
        let d = if self.eat(b'/') {
            self.unsigned().ok_or_else(|| self.err("expected denominator"))?
        } else {
            BigInt::one()
        };
        if d.is_zero() {
            return Err(QError::DivisionByZero);
        }
        let c = Rational::new(n, d);
        if self.eat(b'*') {
            if !self.eat(b'q') {
                return Err(self.err("expected q after '*'"));
            }
            return Ok((self.exponent()?, c));
        }
        Ok((0, c))
    }

    fn sum(&mut self) -> Result<LaurentPoly, QError> {
        let mut terms = Vec::new();
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl FromStr for LaurentPoly {
    type Err = QError;
    fn from_str(s: &str) -> Result<Self, QError> {
        let mut cur = Cursor::new(s);
        let p = cur.sum()?;
        if cur.peek().is_some() {
            return Err(cur.err("trailing input"));
        }
        Ok(p)
    }
}

impl FromStr for RatFunc {
    type Err = QError;
    fn from_str(s: &str) -> Result<Self, QError> {
        let mut cur = Cursor::new(s);
        let out = if cur.eat(b'(') {
            let num = cur.sum()?;
            if !cur.eat(b')') {
                return Err(cur.err("expected ')'"));
            }
            if cur.eat(b'/') {
                if !cur.eat(b'(') {
                    return Err(cur.err("expected '('"));
                }
                let den = cur.sum()?;
                if !cur.eat(b')') {
                    return Err(cur.err("expected ')'"));
                }
                RatFunc::new(num, den)?
            } else {
                RatFunc::from_poly(num)
            }
        } else {
            RatFunc::from_poly(cur.sum()?)
        };
        if cur.peek().is_some() {
            return Err(cur.err("trailing input"));
        }
        Ok(out)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_form() {
        let f: RatFunc = "3/2*q^-2 + 1 - 5*q^3".parse().unwrap();
        assert_eq!(f.to_string(), "-5*q^3 + 1 + 3/2*q^-2");
        assert_eq!(f.to_string().parse::<RatFunc>().unwrap(), f);
    }

    #[test]
    fn parses_fraction_form() {
        let f: RatFunc = "(q^2 - 1)/(q - 1)".parse().unwrap();
        assert_eq!(f.to_string(), "q + 1");
        let g: RatFunc = "(1)/(q^2 + 1)".parse().unwrap();
        assert_eq!(g.to_string(), "(1)/(q^2 + 1)");
    }

    #[test]
    fn rejects_garbage() {
        assert!("q^".parse::<RatFunc>().is_err());
        assert!("1 +".parse::<RatFunc>().is_err());
        assert!("(1)/(0)".parse::<RatFunc>().is_err());
        assert!("x".parse::<RatFunc>().is_err());
    }
}
