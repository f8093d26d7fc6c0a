//! Recursive-descent parser for the polynomial text grammar.
//!
//! ```text
//! expr     := sign? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' uint)*
//! atom     := rational | var | '(' expr ')'
//! var      := 'x' uint ('_' uint)?
//! rational := uint ('/' uint)?
//! ```
//!
//! Multiplication is always explicit: `x1 x2` and `2x1` are rejected.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{JetVariable, Polynomial, Rational};
use crate::error::{Error, Result};

/// Parses `text` as a polynomial in the base variables `x1..xn` (and their
/// jet variables `xi_j`).
pub fn parse_poly(text: &str, n: usize) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, n };
    p.skip_ws();
    if p.at_end() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected input (multiplication must be written with '*')"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
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

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let mut base = self.atom()?;
        while self.eat(b'^') {
            self.skip_ws();
            if self.peek() == Some(b'-') {
                return Err(Error::NegativeExponent { pos: self.pos });
            }
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            base = base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                let base = self.small_uint()?;
                let level = if self.peek() == Some(b'_') {
                    self.pos += 1;
                    self.small_uint()?
                } else {
                    0
                };
                if base == 0 || base > self.n {
                    return Err(Error::VariableOutOfRange { index: base, n: self.n });
                }
                Ok(Polynomial::var(self.n, JetVariable::new(base, level)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let q = if self.eat(b'/') {
                    self.skip_ws();
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    Rational::new(num, den)
                } else {
                    Rational::from_integer(num)
                };
                Ok(Polynomial::constant(self.n, q))
            }
            Some(_) => Err(self.err("expected a number, a variable or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn uint(&mut self) -> Result<BigInt> {
        let d = self.digits()?;
        Ok(d.parse().expect("digit string"))
    }

    fn small_uint(&mut self) -> Result<usize> {
        let pos = self.pos;
        let d = self.digits()?;
        d.parse()
            .map_err(|_| Error::Syntax { pos, msg: "index too large".into() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{int, rat, Monomial};

    #[test]
    fn sum_of_squares() {
        let f = parse_poly("x1^2 + x2^2", 2).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.total_degree(), Some(2));
        assert!(f.is_homogeneous());
    }

    #[test]
    fn zero_literal() {
        let f = parse_poly("0", 3).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.n(), 3);
    }

    #[test]
    fn implicit_multiplication_rejected() {
        assert!(matches!(parse_poly("x1 x2", 2), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("2x1", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("(x1)(x2)", 2), Err(Error::Syntax { .. })));
    }

    #[test]
    fn variable_range() {
        assert_eq!(
            parse_poly("x3", 2),
            Err(Error::VariableOutOfRange { index: 3, n: 2 })
        );
        assert_eq!(
            parse_poly("x0", 2),
            Err(Error::VariableOutOfRange { index: 0, n: 2 })
        );
    }

    #[test]
    fn negative_exponent() {
        assert_eq!(parse_poly("x1^-2", 1), Err(Error::NegativeExponent { pos: 3 }));
    }

    #[test]
    fn rationals_and_parentheses() {
        let f = parse_poly("(x1 - 1/2)^2", 1).unwrap();
        let g = parse_poly("x1^2 - x1 + 1/4", 1).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.coefficient(&Monomial::one()), rat(1, 4));
        assert_eq!(parse_poly("-3", 1).unwrap(), Polynomial::constant(1, int(-3)));
    }

    #[test]
    fn jet_variables() {
        let f = parse_poly("x1_1*x2 + x1*x2_1", 2).unwrap();
        assert_eq!(f.max_level(), Some(1));
        assert_eq!(f.variables().len(), 4);
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_poly("x1 + ", 1), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse_poly("(x1", 1), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("1/0", 1), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("", 1), Err(Error::Syntax { pos: 0, .. })));
    }
}
