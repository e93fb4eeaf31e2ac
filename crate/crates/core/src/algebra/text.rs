//! Text forms for polynomials and formal sums.
//!
//! Two renderings of a [`FormalSum`] are produced, and the parser reads both:
//!
//! * display form, `z2z1 + t·z3`, `(1 - 2t)·z2`, `2·z1z1 - z3`;
//! * record form, `(1) * [2,1] + (t) * [3]`, one `(poly) * [word]` per term
//!   in ascending word order, joined by ` + `.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{RatPoly, Q};
use super::sum::FormalSum;
use super::word::{Letter, Word};
use crate::error::{Error, Result};

impl FormalSum {
    /// Record form: `(poly) * [word]` terms joined by ` + `; `0` when empty.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .map(|(w, c)| format!("({c}) * [{}]", w.to_index_text()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Single-monomial coefficient as `(negative, magnitude-text)`, else `None`.
fn monomial_prefix(c: &RatPoly) -> Option<(bool, String)> {
    let mut terms = c.terms();
    let (d, x) = terms.next()?;
    if terms.next().is_some() {
        return None;
    }
    let mag = RatPoly::monomial(x.abs(), d);
    let text = if d == 0 && x.abs().is_one() {
        String::new()
    } else {
        mag.to_string()
    };
    Some((x.is_negative(), text))
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            match monomial_prefix(c) {
                Some((neg, prefix)) => {
                    match (i, neg) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    if !prefix.is_empty() {
                        write!(f, "{prefix}·")?;
                    }
                }
                None => {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({c})·")?;
                }
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormalSum({self})")
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn at_end(&self) -> bool {
        self.rest().is_empty()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} in {:?}", self.pos, self.src))
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn uint(&mut self) -> Result<u32> {
        let d = self.digits().ok_or_else(|| self.err("expected integer"))?;
        d.parse().map_err(|_| self.err("integer out of range"))
    }

    /// `+1`, `-1`, or `None` when no sign is present.
    fn sign(&mut self) -> Option<i32> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(1)
            }
            Some('-') | Some('−') => {
                self.bump();
                Some(-1)
            }
            _ => None,
        }
    }

    fn rational(&mut self) -> Result<Option<Q>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num.parse().map_err(|_| self.err("bad numerator"))?;
        if self.eat('/') {
            let den = self
                .digits()
                .ok_or_else(|| self.err("expected denominator"))?;
            let den: BigInt = den.parse().map_err(|_| self.err("bad denominator"))?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Some(Q::new(num, den)))
        } else {
            Ok(Some(Q::from_integer(num)))
        }
    }

    /// `[rational]['t'['^'n]]`, nonempty.
    fn monomial(&mut self) -> Result<Option<RatPoly>> {
        let c = self.rational()?;
        let degree = if self.eat('t') {
            if self.eat('^') {
                Some(self.uint()?)
            } else {
                Some(1)
            }
        } else {
            None
        };
        Ok(match (c, degree) {
            (None, None) => None,
            (c, d) => Some(RatPoly::monomial(c.unwrap_or_else(Q::one), d.unwrap_or(0))),
        })
    }

    fn poly(&mut self) -> Result<RatPoly> {
        self.ws();
        let mut sign = self.sign().unwrap_or(1);
        let mut acc = RatPoly::zero();
        loop {
            self.ws();
            let m = self
                .monomial()?
                .ok_or_else(|| self.err("expected monomial"))?;
            acc = if sign < 0 { &acc - &m } else { &acc + &m };
            self.ws();
            let save = self.pos;
            match self.sign() {
                Some(s) => sign = s,
                None => {
                    self.pos = save;
                    return Ok(acc);
                }
            }
        }
    }

    fn coefficient(&mut self) -> Result<Option<RatPoly>> {
        if self.eat('(') {
            let p = self.poly()?;
            self.ws();
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            return Ok(Some(p));
        }
        self.monomial()
    }

    fn word(&mut self) -> Result<Word> {
        if self.eat('[') {
            let start = self.pos;
            while self.peek().is_some_and(|c| c != ']') {
                self.bump();
            }
            let inner = &self.src[start..self.pos];
            if !self.eat(']') {
                return Err(self.err("expected ']'"));
            }
            return Word::parse_index_text(inner);
        }
        if self.peek() == Some('z') {
            let mut letters = Vec::new();
            while self.eat('z') {
                letters.push(Letter::new(self.uint()?)?);
            }
            return Ok(Word::from_letters(letters));
        }
        if self.eat('1') {
            return Ok(Word::unit());
        }
        Err(self.err("expected word"))
    }

    fn term(&mut self) -> Result<(Word, RatPoly)> {
        let save = self.pos;
        if let Ok(Some(c)) = self.coefficient() {
            self.ws();
            if self.eat('*') || self.eat('·') {
                self.ws();
                let w = self.word()?;
                return Ok((w, c));
            }
        }
        self.pos = save;
        let w = self.word()?;
        Ok((w, RatPoly::one()))
    }
}

/// Parses an exact rational `p/q`, `-p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let poly: RatPoly = s.parse()?;
    if !poly.is_constant() {
        return Err(Error::Parse(format!("not a rational: {s:?}")));
    }
    Ok(poly.coeff(0))
}

impl FromStr for RatPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let p = cur.poly()?;
        cur.ws();
        if !cur.at_end() {
            return Err(cur.err("trailing input"));
        }
        Ok(p)
    }
}

impl FromStr for FormalSum {
    type Err = Error;

    /// Reads both the display form and the record form.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(FormalSum::zero());
        }
        let mut cur = Cursor::new(s);
        let mut out = FormalSum::zero();
        cur.ws();
        let mut sign = cur.sign().unwrap_or(1);
        loop {
            cur.ws();
            let (w, c) = cur.term()?;
            let c = if sign < 0 { -&c } else { c };
            out.add_term(w, &c);
            cur.ws();
            if cur.at_end() {
                return Ok(out);
            }
            sign = cur.sign().ok_or_else(|| cur.err("expected '+' or '-'"))?;
        }
    }
}
