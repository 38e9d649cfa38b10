//! Small arithmetic language for symmetric functions:
//! `3*s(2,1) - 1/2 p(2)^2 + h(2)h(1)`.

use std::iter::Peekable;
use std::str::Chars;

use num_bigint::BigInt;
use num_rational::BigRational;
use parthom_core::symfunc::{Basis, IntPartition, SymFunc};

pub fn parse(src: &str) -> Result<SymFunc, String> {
    let mut p = Parser { it: src.chars().peekable(), src };
    let f = p.expr()?;
    p.skip_ws();
    match p.it.peek() {
        None => Ok(f),
        Some(c) => Err(format!("unexpected {c:?} in {src:?}")),
    }
}

struct Parser<'a> {
    it: Peekable<Chars<'a>>,
    src: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.it.peek().is_some_and(|c| c.is_whitespace()) {
            self.it.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.it.peek().copied()
    }

    fn expect(&mut self, want: char) -> Result<(), String> {
        match self.peek() {
            Some(c) if c == want => {
                self.it.next();
                Ok(())
            }
            other => Err(format!("expected {want:?}, found {other:?} in {:?}", self.src)),
        }
    }

    fn expr(&mut self) -> Result<SymFunc, String> {
        let mut acc = SymFunc::zero(Basis::P);
        let mut sign = match self.peek() {
            Some('-') => {
                self.it.next();
                -1
            }
            Some('+') => {
                self.it.next();
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc + t } else { acc - t };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.it.next();
        }
    }

    fn term(&mut self) -> Result<SymFunc, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.it.next();
                }
                Some(c) if c == '(' || c.is_ascii_alphabetic() => {}
                _ => return Ok(acc),
            }
            acc = acc.multiply(&self.factor()?);
        }
    }

    fn factor(&mut self) -> Result<SymFunc, String> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.it.next();
            let e = self.integer()?;
            let e: usize = e.try_into().map_err(|_| "exponent out of range".to_string())?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, String> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&c) = self.it.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.it.next();
        }
        digits
            .parse()
            .map_err(|_| format!("expected a number in {:?}", self.src))
    }

    fn atom(&mut self) -> Result<SymFunc, String> {
        match self.peek() {
            Some('(') => {
                self.it.next();
                let f = self.expr()?;
                self.expect(')')?;
                Ok(f)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let c = if self.peek() == Some('/') {
                    self.it.next();
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err("division by zero".into());
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                Ok(SymFunc::constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.it.next();
                let basis: Basis = c.to_string().parse().map_err(|e| format!("{e}"))?;
                self.expect('(')?;
                let mut parts = Vec::new();
                if self.peek() != Some(')') {
                    loop {
                        let p = self.integer()?;
                        parts.push(p.try_into().map_err(|_| "part out of range".to_string())?);
                        if self.peek() != Some(',') {
                            break;
                        }
                        self.it.next();
                    }
                }
                self.expect(')')?;
                Ok(SymFunc::basis_element(basis, IntPartition::new(parts)))
            }
            other => Err(format!("unexpected {other:?} in {:?}", self.src)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_sums() {
        let f = parse("h(2)h(1)").unwrap();
        assert_eq!(f, SymFunc::s(&[3]) + SymFunc::s(&[2, 1]));
        let g = parse("s(3) + s(2,1) - h(2)*h(1)").unwrap();
        assert!(g.is_zero());
        let half = parse("1/2 * (p(1)^2 + p(2))").unwrap();
        assert_eq!(half, SymFunc::h(2));
        assert_eq!(parse("-e(2) + e(2)").unwrap(), SymFunc::zero(Basis::S));
        assert_eq!(parse("s()").unwrap(), SymFunc::one());
    }

    #[test]
    fn errors() {
        for bad in ["", "h(2", "q(1)", "1/0", "h(2) +", "h(a)", "2 3"] {
            assert!(parse(bad).is_err(), "{bad}");
        }
    }
}
