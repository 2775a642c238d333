//! Polynomial text format: `-x_2*x_3+x_1*x_4`, `2*x_1^2`. The parser also
//! accepts juxtaposed factors as Macaulay2 prints them (`-x_2x_3+x_1x_4`).

use super::{Monomial, Polynomial, Ring, RingExt};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Printing style.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Style {
    /// `*` between factors.
    #[default]
    Star,
    /// Macaulay2 juxtaposition: `2x_1x_2^3`.
    Juxtapose,
}

fn fmt_monomial(ring: &Ring, m: &Monomial, sep: &str) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.names()[i].clone()),
            _ => parts.push(format!("{}^{}", ring.names()[i], e)),
        }
    }
    parts.join(sep)
}

pub(super) fn format(p: &Polynomial, style: Style) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let sep = match style {
        Style::Star => "*",
        Style::Juxtapose => "",
    };
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().iter().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        let a = c.abs();
        if m.is_one() {
            out.push_str(&a.to_string());
            continue;
        }
        if !a.is_one() {
            out.push_str(&a.to_string());
            out.push_str(sep);
        }
        out.push_str(&fmt_monomial(p.ring(), m, sep));
    }
    out
}

struct Parser<'a> {
    ring: &'a Ring,
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, String::from_utf8_lossy(self.s))))
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
    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }
    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.number()?;
            u32::try_from(n).or_else(|_| self.err("exponent too large"))
        } else {
            Ok(1)
        }
    }
    fn variable(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.s[self.pos..];
        let best = self
            .ring
            .names()
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_bytes()))
            .max_by_key(|(_, n)| n.len());
        let Some((i, name)) = best else { return self.err("unknown variable") };
        let after = self.pos + name.len();
        if after < self.s.len() && (self.s[after].is_ascii_digit() || self.s[after] == b'_') {
            return self.err("unknown variable");
        }
        self.pos = after;
        Ok(i)
    }
    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.sum()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(p.pow(e))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                let e = self.exponent()?;
                Ok(self.ring.constant(num_traits::pow(n, e as usize)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let i = self.variable()?;
                let e = self.exponent()?;
                let mut exps = vec![0; self.ring.num_vars()];
                exps[i] = e;
                Ok(Polynomial::from_terms(self.ring, vec![(Monomial(exps), BigInt::one())]))
            }
            _ => self.err("expected a factor"),
        }
    }
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'(' => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }
    fn sum(&mut self) -> Result<Polynomial> {
        let mut acc = self.ring.zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => return Ok(acc),
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
        }
    }
}

pub(super) fn parse(ring: &Ring, s: &str) -> Result<Polynomial> {
    let mut p = Parser { ring, s: s.as_bytes(), pos: 0 };
    let out = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{CoeffDomain, RingCtx};

    #[test]
    fn round_trip_both_styles() {
        let r = RingCtx::new(12, CoeffDomain::Integers).unwrap();
        for s in ["-x_2*x_3+x_1*x_4", "2*x_1^2", "x_12^3-7", "0", "-1"] {
            let p = r.parse(s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(r.parse(&p.to_text(Style::Juxtapose)).unwrap(), p);
        }
        let p = r.parse("-x_2x_3+x_1x_4").unwrap();
        assert_eq!(p.to_text(Style::Juxtapose), "-x_2x_3+x_1x_4");
        assert_eq!(r.parse("2x_1x_12^2").unwrap().to_text(Style::Juxtapose), "2x_1x_12^2");
    }

    #[test]
    fn parentheses_and_powers() {
        let r = RingCtx::with_names(vec!["x".into(), "y".into()], CoeffDomain::Integers).unwrap();
        assert_eq!(r.parse("(x+y)^2").unwrap(), r.parse("x^2+2*x*y+y^2").unwrap());
        assert_eq!(r.parse(" x * y ").unwrap(), r.parse("xy").unwrap());
    }

    #[test]
    fn rejects_garbage() {
        let r = RingCtx::new(2, CoeffDomain::Integers).unwrap();
        for s in ["", "x_3", "x_1+", "x_1^", "(x_1", "x_1 )", "z"] {
            assert!(r.parse(s).is_err(), "{s}");
        }
    }
}
