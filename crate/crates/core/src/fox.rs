//! Integral group ring of a free group and Fox free derivatives.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::presentation::{Letter, Word};

/// A finite Z-linear combination of reduced words. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    /// The identity word `e` with coefficient 1.
    pub fn one() -> Self {
        GroupRingElement::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        GroupRingElement::monomial(w, 1)
    }

    pub fn monomial(w: Word, coeff: i64) -> Self {
        let mut g = GroupRingElement::zero();
        g.add_term(w, coeff);
        g
    }

    pub fn add_term(&mut self, w: Word, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let c = o
                    .get()
                    .checked_add(coeff)
                    .expect("group ring coefficient overflow");
                if c == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Left multiplication by a word.
    pub fn left_mul_word(&self, w: &Word) -> Self {
        let mut out = GroupRingElement::zero();
        for (u, c) in self.terms() {
            out.add_term(w.concat(u), c);
        }
        out
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> GroupRingDisplay<'a> {
        GroupRingDisplay { elem: self, names }
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in self.terms() {
            for (v, b) in rhs.terms() {
                let c = a.checked_mul(b).expect("group ring coefficient overflow");
                out.add_term(u.concat(v), c);
            }
        }
        out
    }
}

pub struct GroupRingDisplay<'a> {
    elem: &'a GroupRingElement,
    names: &'a [String],
}

impl fmt::Display for GroupRingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.elem.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.unsigned_abs();
            let word = if w.is_identity() {
                "e".to_string()
            } else {
                format!("({})", w.display(self.names))
            };
            if mag == 1 {
                write!(f, "{sign}{word}")?;
            } else {
                write!(f, "{sign}{mag}{word}")?;
            }
        }
        Ok(())
    }
}

/// `∂(x_gen^p)/∂x_gen`: `e + x + … + x^{p-1}` for p > 0 and `-x^{-1} - … - x^{p}` for p < 0.
pub fn power_derivative(gen: usize, p: i64) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    if p > 0 {
        for k in 0..p {
            out.add_term(Word::power(gen, k), 1);
        }
    } else {
        for k in 1..=(-p) {
            out.add_term(Word::power(gen, -k), -1);
        }
    }
    out
}

/// Fox derivative of `w` with respect to generator `gen` among `generator_count` generators.
pub fn fox_derive(w: &Word, gen: usize, generator_count: usize) -> Result<GroupRingElement> {
    if gen >= generator_count {
        return Err(Error::GeneratorIndex {
            index: gen,
            count: generator_count,
        });
    }
    if let Some(m) = w.max_generator() {
        if m >= generator_count {
            return Err(Error::GeneratorIndex {
                index: m,
                count: generator_count,
            });
        }
    }
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &Letter { gen: g, exp } in w.letters() {
        if g == gen {
            for (u, c) in power_derivative(gen, exp).terms() {
                out.add_term(prefix.concat(u), c);
            }
        }
        prefix.push(Letter { gen: g, exp });
    }
    Ok(out)
}
