//! Text parser for field elements.
//!
//! Grammar (whitespace ignored between tokens):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" integer)?
//! atom   := integer | "x" | "y" | "sqrt" "(" "x" ")" | "(" expr ")"
//! ```
//!
//! The canonical printed forms of polynomials, fractions and `(re) + (im)*sqrt(x)`
//! all belong to this language. Symbols unavailable in the target field are errors.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{Field, Symbols};

pub fn parse_element<F: Symbols>(text: &str) -> Result<F> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.expr::<F>()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { offset: self.pos, msg: msg.to_string() }
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
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn expr<F: Symbols>(&mut self) -> Result<F> {
        let mut acc = self.term::<F>()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term::<F>()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term::<F>()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<F: Symbols>(&mut self) -> Result<F> {
        let mut acc = self.unary::<F>()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary::<F>()?);
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary::<F>()?;
                acc = acc.div(&d).map_err(|_| Error::Parse { offset: at, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<F: Symbols>(&mut self) -> Result<F> {
        if self.eat(b'-') {
            Ok(self.unary::<F>()?.neg())
        } else {
            self.power::<F>()
        }
    }

    fn power<F: Symbols>(&mut self) -> Result<F> {
        let base = self.atom::<F>()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            let mut acc = F::one();
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            Ok(acc)
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn symbol<F>(&self, v: Option<F>, name: &str) -> Result<F>
    where
        F: Field,
    {
        v.ok_or_else(|| self.err(&format!("symbol '{}' not available in {}", name, F::field_name())))
    }

    fn atom<F: Symbols>(&mut self) -> Result<F> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr::<F>()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                F::from_rational(&BigRational::from_integer(n)).map_err(|e| self.err(&e.to_string()))
            }
            Some(b'x') => {
                let v = self.symbol(F::var_x(), "x")?;
                self.pos += 1;
                Ok(v)
            }
            Some(b'y') => {
                let v = self.symbol(F::var_y(), "y")?;
                self.pos += 1;
                Ok(v)
            }
            Some(b's') if self.src[self.pos..].starts_with(b"sqrt") => {
                let v = self.symbol(F::sqrt_x(), "sqrt(x)")?;
                self.pos += 4;
                self.expect(b'(')?;
                self.expect(b'x')?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::qext::QExt;
    use crate::ratfunc::RatF;

    type R = RatF<Rational>;
    type K = QExt<Rational>;

    #[test]
    fn canonical_forms_round_trip() {
        for s in ["3*x^2*y - 1/2*y + 5", "(2*x)/(x^2 - y^2)", "-x + y", "0", "(-1/3*x)/(y)"] {
            let v: R = parse_element(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
        let k: K = parse_element("(3) + (y)*sqrt(x)").unwrap();
        assert_eq!(k.to_string(), "(3) + (y)*sqrt(x)");
        let k2: K = parse_element("sqrt(x)*sqrt(x)").unwrap();
        assert_eq!(k2, K::x());
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_element::<R>("x + * y"), Err(Error::Parse { offset: 4, msg: "unexpected character".into() }));
        assert!(matches!(parse_element::<R>("1/(x-x)"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_element::<Rational>("x"), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_element::<R>("sqrt(x)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element::<R>("(x"), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn prime_field_literals() {
        let v: Fp<5> = parse_element("7 - 1/2").unwrap();
        assert_eq!(v, Fp::new(2 - 3));
    }
}
