//! Canonical text form of a [`LaurentPoly`].
//!
//! Terms appear in ascending exponent order as `c*q^e`. A `q^0` factor is
//! elided, `q^1` is written `q`, unit coefficients are dropped in front of a
//! power of `q`, and the zero polynomial is `0`. Example: `-q^-1 + 1 - q + 2*q^3`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::LaurentPoly;
use crate::error::Error;

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, exp: i64) -> fmt::Result {
    match exp {
        1 => write!(f, "{var}"),
        e => write!(f, "{var}^{e}"),
    }
}

/// Writes one term with magnitude `mag` (sign handled by the caller).
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    mag: &BigInt,
    var: &str,
    exp: i64,
) -> fmt::Result {
    if exp == 0 {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write_power(f, var, exp)
    } else {
        write!(f, "{mag}*")?;
        write_power(f, var, exp)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_term(f, &mag, "q", e)?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            input: self.src.to_string(),
            reason: format!("{} at byte {}", reason.into(), self.pos),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn exponent(&mut self) -> Result<i64, Error> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = self.eat(b'-');
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let v: i64 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut cur = Cursor {
            src: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let mut terms: Vec<(i64, BigInt)> = Vec::new();
        let mut first = true;
        loop {
            let negative = match cur.peek() {
                None if first => return Err(cur.err("empty input")),
                None => break,
                Some(b'-') => {
                    cur.pos += 1;
                    true
                }
                Some(b'+') if !first => {
                    cur.pos += 1;
                    false
                }
                Some(_) if first => false,
                Some(_) => return Err(cur.err("expected '+' or '-'")),
            };
            first = false;
            let (coeff, exp) = match cur.peek() {
                Some(b'q') => {
                    cur.pos += 1;
                    (BigInt::one(), cur.exponent()?)
                }
                Some(c) if c.is_ascii_digit() => {
                    let c: BigInt = cur.digits().unwrap().parse().unwrap();
                    if cur.eat(b'*') {
                        if !cur.eat(b'q') {
                            return Err(cur.err("expected 'q' after '*'"));
                        }
                        (c, cur.exponent()?)
                    } else {
                        (c, 0)
                    }
                }
                _ => return Err(cur.err("expected coefficient or 'q'")),
            };
            terms.push((exp, if negative { -coeff } else { coeff }));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_canonically() {
        assert_eq!(
            LaurentPoly::from_coeffs(0, &[1, -1, 0, 2]).to_string(),
            "1 - q + 2*q^3"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(
            LaurentPoly::from_coeffs(-1, &[-1, 0, 3]).to_string(),
            "-q^-1 + 3*q"
        );
        assert_eq!(LaurentPoly::constant(-5).to_string(), "-5");
        assert_eq!(LaurentPoly::monomial(-2, -3).to_string(), "-2*q^-3");
    }

    #[test]
    fn parses_the_rendered_grammar() {
        for s in [
            "1 - q + 2*q^3",
            "0",
            "-q^-1 + 3*q",
            "-5",
            "q^2 + q^3",
            "-2*q^-3 + 7",
        ] {
            let p: LaurentPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        let p: LaurentPoly = "q + q - 2*q".parse().unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1 +", "x", "2*", "q^", "1 q", "3*x"] {
            assert!(s.parse::<LaurentPoly>().is_err(), "{s:?} should fail");
        }
    }
}
