//! Text syntax for ring elements: `1-t+t^2`, `2x+y-1`, `(x-1)(y-1)`, `x^-2`.

use super::element::RingElement;
use super::spec::RingSpec;
use crate::error::{Error, Result};

struct Parser<'a> {
    spec: &'a RingSpec,
    src: &'a str,
    pos: usize,
    /// Variable names, longest first, for greedy matching.
    names: Vec<(String, usize)>,
}

impl<'a> Parser<'a> {
    fn new(spec: &'a RingSpec, src: &'a str) -> Self {
        let mut names: Vec<(String, usize)> = spec
            .vars()
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name.clone(), i))
            .collect();
        names.sort_by_key(|n| std::cmp::Reverse(n.0.len()));
        Parser {
            spec,
            src,
            pos: 0,
            names,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().unwrap().len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<Option<i64>> {
        self.skip_ws();
        let digits: String = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .collect();
        if digits.is_empty() {
            return Ok(None);
        }
        self.pos += digits.len();
        digits
            .parse()
            .map(Some)
            .map_err(|_| self.err("integer too large"))
    }

    fn exponent(&mut self) -> Result<i64> {
        let braced = self.eat('{');
        let neg = self.eat('-');
        let v = self
            .integer()?
            .ok_or_else(|| self.err("expected exponent"))?;
        if braced && !self.eat('}') {
            return Err(self.err("expected '}'"));
        }
        Ok(if neg { -v } else { v })
    }

    /// expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<RingElement> {
        let mut acc = RingElement::zero(self.spec);
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                break;
            };
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            first = false;
            match self.peek() {
                Some('+') | Some('-') => {}
                _ => break,
            }
        }
        Ok(acc)
    }

    /// term := factor (['*'] factor)*
    fn term(&mut self) -> Result<RingElement> {
        let mut acc = self.factor()?;
        loop {
            let starred = self.eat('*');
            match self.peek() {
                Some(c) if c == '(' || c.is_ascii_digit() || c.is_alphabetic() => {
                    acc = &acc * &self.factor()?;
                }
                _ if starred => return Err(self.err("expected factor after '*'")),
                _ => return Ok(acc),
            }
        }
    }

    /// factor := atom ['^' exponent]
    fn factor(&mut self) -> Result<RingElement> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        if e >= 0 {
            return Ok(base.pow(u32::try_from(e).map_err(|_| self.err("exponent too large"))?));
        }
        let inv = base
            .unit_inverse()
            .ok_or_else(|| self.err("negative power of a non-unit"))?;
        Ok(inv.pow(u32::try_from(-e).map_err(|_| self.err("exponent too large"))?))
    }

    fn atom(&mut self) -> Result<RingElement> {
        if self.eat('(') {
            let e = self.expr()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            return Ok(e);
        }
        if let Some(c) = self.integer()? {
            return Ok(RingElement::constant(self.spec, c));
        }
        self.skip_ws();
        let rest = self.rest();
        for (name, idx) in &self.names {
            if rest.starts_with(name.as_str()) {
                self.pos += name.len();
                return Ok(RingElement::variable(self.spec, *idx));
            }
        }
        Err(self.err("expected a number, variable or '('"))
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(())
    }
}

/// Parses a ring element over `spec`.
pub fn parse_element(spec: &RingSpec, text: &str) -> Result<RingElement> {
    let mut p = Parser::new(spec, text);
    if p.peek().is_none() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a generator list `(g1, g2, ...)`; `(0)` gives no generators.
pub fn parse_generators(spec: &RingSpec, text: &str) -> Result<Vec<RingElement>> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .filter(|s| balanced(s))
        .unwrap_or(trimmed);
    let mut out = Vec::new();
    for part in split_top_level(inner) {
        let e = parse_element(spec, part)?;
        if !e.is_zero() {
            out.push(e);
        }
    }
    Ok(out)
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}
